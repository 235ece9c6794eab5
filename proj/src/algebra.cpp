#include "rowmotion/algebra.hpp"

namespace rowmotion {

namespace {

Rational add(const Rational& a, const Rational& b) { return a + b; }
Rational subtract(const Rational& a, const Rational& b) { return a - b; }
Rational multiply(const Rational& a, const Rational& b) { return a * b; }
Rational divide(const Rational& a, const Rational& b) { return a / b; }
Rational maximum(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational minimum(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace

ToggleAlgebra ToggleAlgebra::birational() {
  ToggleAlgebra alg;
  alg.name = "birational";
  alg.combine_below = &add;
  alg.combine_above = &parallel_sum;
  alg.product = &multiply;
  alg.quotient = &divide;
  alg.unit_below = Rational(1);
  alg.unit_above = Rational(1);
  alg.identity = Rational(1);
  alg.positive_carrier = true;
  return alg;
}

ToggleAlgebra ToggleAlgebra::tropical(Rational ceiling) {
  ToggleAlgebra alg;
  alg.name = "tropical";
  alg.combine_below = &maximum;
  alg.combine_above = &minimum;
  alg.product = &add;
  alg.quotient = &subtract;
  alg.unit_below = Rational(0);
  alg.unit_above = std::move(ceiling);
  alg.identity = Rational(0);
  alg.positive_carrier = false;
  return alg;
}

void ToggleAlgebra::validate(const Rational& value) const {
  if (positive_carrier && !value.is_positive()) {
    throw DomainError(name + " algebra requires positive values, got " +
                      value.to_string());
  }
}

Rational ToggleAlgebra::fold_below(std::span<const Rational> values) const {
  if (values.empty()) return unit_below;
  Rational acc = values.front();
  for (const auto& v : values.subspan(1)) acc = combine_below(acc, v);
  return acc;
}

Rational ToggleAlgebra::fold_above(std::span<const Rational> values) const {
  if (values.empty()) return unit_above;
  Rational acc = values.front();
  for (const auto& v : values.subspan(1)) acc = combine_above(acc, v);
  return acc;
}

}  // namespace rowmotion
