#pragma once

// Toggle dynamics on labelings of a rectangle, generic over ToggleAlgebra:
// toggles, rowmotion and its inverse, partial (interval) rowmotion, and the
// transfer maps φ, φ⁻¹, φ*, (φ*)⁻¹.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rowmotion/algebra.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

/// An assignment of algebra values to the cells of a rectangle, row-major.
class Labeling {
 public:
  /// All cells set to `fill`.
  explicit Labeling(Rect rect, const Rational& fill = Rational(1));
  /// `values` in row-major order; throws DomainError on a size mismatch.
  Labeling(Rect rect, std::vector<Rational> values);

  const Rect& rect() const { return rect_; }
  const Rational& operator[](const Cell& c) const {
    return values_[static_cast<std::size_t>(rect_.index(c))];
  }
  /// Bounds-checked access; throws DomainError outside the rectangle.
  const Rational& at(const Cell& c) const;
  void set(const Cell& c, Rational value);
  std::span<const Rational> values() const { return values_; }

  /// Labeling of the transposed rectangle with value(j, i) = value(i, j).
  Labeling transposed() const;
  /// Throws DomainError if some value is outside the algebra's carrier.
  void validate(const ToggleAlgebra& alg) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Rect rect_;
  std::vector<Rational> values_;
};

Labeling toggle(const Labeling& labeling, const Cell& p,
                const ToggleAlgebra& alg);

/// Toggles from the top of the canonical linear extension to the bottom.
Labeling rowmotion(const Labeling& labeling, const ToggleAlgebra& alg);
/// Same, along an arbitrary linear extension of the whole rectangle.
Labeling rowmotion(const Labeling& labeling, const ToggleAlgebra& alg,
                   std::span<const Cell> extension);
/// Toggles from bottom to top.
Labeling rowmotion_inverse(const Labeling& labeling, const ToggleAlgebra& alg);

/// ρ^k for any integer k by repeated toggling (negative k uses ρ⁻¹).
Labeling rowmotion_power(const Labeling& labeling, int k,
                         const ToggleAlgebra& alg);

/// Toggles exactly the cells of `interval`, top to bottom.
Labeling partial_rowmotion(const Labeling& labeling, const Interval& interval,
                           const ToggleAlgebra& alg);
/// Toggles exactly the cells of `interval`, bottom to top.
Labeling partial_rowmotion_inverse(const Labeling& labeling,
                                   const Interval& interval,
                                   const ToggleAlgebra& alg);

/// φ(x)_p = x_p ⊘ (⊕ of x over lower covers).
Labeling transfer(const Labeling& x, const ToggleAlgebra& alg);
/// φ⁻¹, computed bottom-up: y_p = x_p ⊗ (⊕ of y over lower covers).
Labeling transfer_inverse(const Labeling& x, const ToggleAlgebra& alg);
/// φ*(x)_p = x_p ⊘ (⊕ of x over upper covers).
Labeling dual_transfer(const Labeling& x, const ToggleAlgebra& alg);
/// (φ*)⁻¹, computed top-down.
Labeling dual_transfer_inverse(const Labeling& x, const ToggleAlgebra& alg);

/// Lazily memoized powers ρ^k(base). Exponents are reduced modulo r + s only
/// after ρ^{r+s}(base) = base has been confirmed by direct computation.
class OrbitTable {
 public:
  OrbitTable(Labeling base, ToggleAlgebra alg);

  const Labeling& base() const { return base_; }
  const Labeling& power(int k);
  /// Whether the wraparound ρ^{r+s}(base) = base has been confirmed.
  std::optional<bool> periodic() const { return periodic_; }

 private:
  void confirm_period();

  Labeling base_;
  ToggleAlgebra alg_;
  std::map<int, Labeling> powers_;
  std::optional<bool> periodic_;
};

}  // namespace rowmotion
