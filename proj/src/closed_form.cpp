#include "rowmotion/closed_form.hpp"

namespace rowmotion {

ClosedForm::ClosedForm(const Labeling& x) : rect_(x.rect()), minors_(x) {}

ClosedForm::ClosedForm(Rect rect, MinorArray minors)
    : rect_(rect), minors_(std::move(minors)) {
  if (minors_.size() != rect_.r + rect_.s) {
    throw DomainError("minor array size does not match the rectangle");
  }
}

Rational ClosedForm::rho_power_a(const Cell& c, int k) const {
  rect_.require(c);
  const auto [i, j] = c;
  if (k < 0 || k > rect_.r + rect_.s - i - j) {
    throw RangeError("exponent -" + std::to_string(k) + " at (" + c.to_string() +
                     ") is outside the direct window; use rho_power_any");
  }
  return minors_.at(k + 2, i + k + 1, j - 1) / minors_.at(k + 1, i + k + 1, j);
}

Rational ClosedForm::rho_power_b(const Cell& c, int k) const {
  rect_.require(c);
  const auto [i, j] = c;
  if (k <= 0 || k >= i + j) {
    throw RangeError("exponent " + std::to_string(k) + " at (" + c.to_string() +
                     ") is outside (0, i+j); use rho_power_any");
  }
  const Cell antipode{rect_.r + 1 - i, rect_.s + 1 - j};
  return rho_power_a(antipode, i + j - 1 - k).reciprocal();
}

Rational ClosedForm::rho_power_any(const Cell& c, int k) const {
  rect_.require(c);
  const int period = rect_.period();
  const int low = c.i + c.j - period;  // window is [low, low + period)
  int reduced = ((k - low) % period + period) % period + low;
  if (reduced <= 0) return rho_power_a(c, -reduced);
  return rho_power_b(c, reduced);
}

Labeling ClosedForm::power(int k) const {
  Labeling out(rect_);
  for (int i = 1; i <= rect_.r; ++i) {
    for (int j = 1; j <= rect_.s; ++j) out.set({i, j}, rho_power_any({i, j}, k));
  }
  return out;
}

CheckReport array_shift_check(const Labeling& x) {
  CheckReport report{.name = "array_shift"};
  const auto alg = ToggleAlgebra::birational();
  const Labeling shifted =
      transfer(rowmotion_inverse(transfer_inverse(x, alg), alg), alg);
  const MinorArray w(x);
  const MinorArray w_shifted(shifted);
  const int n = x.rect().r + x.rect().s;
  for (int k = 1; k < n; ++k) {
    for (int i = 1; i <= n - k; ++i) {
      for (int j = 1; j <= n - k; ++j) {
        const Rational lhs = w_shifted.at(i, j, k);
        const Rational rhs = w.at(i + 1, j + 1, k);
        report.record(lhs == rhs,
                      std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k),
                      lhs.to_string() + " != " + rhs.to_string());
      }
    }
  }
  return report;
}

}  // namespace rowmotion
