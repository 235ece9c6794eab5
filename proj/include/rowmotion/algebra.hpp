#pragma once

// The operation bundle all toggle dynamics are written against.
//
// A toggle at p replaces x_p by
//     (combine_above over upper covers) ⊗ (combine_below over lower covers) ⊘ x_p
// with an empty combine_below/combine_above replaced by unit_below/unit_above.
// Two instances ship: birational (+, ∥, ×, ÷, 1, 1) and tropical
// (max, min, +, −, 0, ceiling).

#include <span>
#include <string>

#include "rowmotion/rational.hpp"

namespace rowmotion {

struct ToggleAlgebra {
  using BinaryOp = Rational (*)(const Rational&, const Rational&);

  std::string name;
  BinaryOp combine_below = nullptr;  // ⊕
  BinaryOp combine_above = nullptr;  // ⊛
  BinaryOp product = nullptr;        // ⊗
  BinaryOp quotient = nullptr;       // ⊘
  Rational unit_below;               // value of an empty ⊕
  Rational unit_above;               // value of an empty ⊛
  Rational identity;                 // two-sided identity of ⊗
  bool positive_carrier = false;     // every value must be > 0

  static ToggleAlgebra birational();
  static ToggleAlgebra tropical(Rational ceiling = Rational(1));

  /// Throws DomainError when `value` is outside the carrier.
  void validate(const Rational& value) const;

  /// Folds ⊕ over `values`; unit_below when empty.
  Rational fold_below(std::span<const Rational> values) const;
  /// Folds ⊛ over `values`; unit_above when empty.
  Rational fold_above(std::span<const Rational> values) const;

  /// The multiplicative inverse with respect to ⊗, i.e. identity ⊘ a.
  Rational invert(const Rational& a) const { return quotient(identity, a); }
};

}  // namespace rowmotion
