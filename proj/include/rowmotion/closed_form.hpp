#pragma once

// Closed-form iterated birational rowmotion on [r] x [s].
//
// With y = φ⁻¹(x) and W the minor array of x:
//   ρ^{-k}(y)_ij = W_{k+2,i+k+1}^(j-1) / W_{k+1,i+k+1}^(j)   for 0 <= k <= r+s-i-j
//   ρ^{k}(y)_ij  = 1 / ρ^{k-i-j+1}(y)_{r+1-i,s+1-j}
//   ρ^{k+r+s}    = ρ^k

#include "rowmotion/dynamics.hpp"
#include "rowmotion/lgv.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

/// Raised when an exponent lies outside the window a formula covers.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ClosedForm {
 public:
  /// Builds the minor array of `x` once; all queries share it.
  explicit ClosedForm(const Labeling& x);
  /// Uses a precomputed (possibly altered) minor array for `rect`.
  ClosedForm(Rect rect, MinorArray minors);

  const Rect& rect() const { return rect_; }
  const MinorArray& minors() const { return minors_; }

  /// ρ^{-k}(y)_ij for 0 <= k <= r+s-i-j; RangeError otherwise.
  Rational rho_power_a(const Cell& c, int k) const;
  /// ρ^{k}(y)_ij for 0 < k < i+j via the antipodal cell; RangeError otherwise.
  Rational rho_power_b(const Cell& c, int k) const;
  /// ρ^{k}(y)_ij for every integer k.
  Rational rho_power_any(const Cell& c, int k) const;
  /// The whole labeling ρ^{k}(y).
  Labeling power(int k) const;

 private:
  Rect rect_;
  MinorArray minors_;
};

/// With x̃ = φ∘ρ⁻¹∘φ⁻¹(x), checks W̃_ij^(k) = W_{i+1,j+1}^(k) for k >= 1 and
/// 1 <= i, j <= r+s-k.
CheckReport array_shift_check(const Labeling& x);

}  // namespace rowmotion
