#include "rowmotion/dynamics.hpp"

#include <cstdlib>

namespace rowmotion {

Labeling::Labeling(Rect rect, const Rational& fill)
    : rect_(Rect::make(rect.r, rect.s)),
      values_(static_cast<std::size_t>(rect.size()), fill) {}

Labeling::Labeling(Rect rect, std::vector<Rational> values)
    : rect_(Rect::make(rect.r, rect.s)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(rect_.size())) {
    throw DomainError("labeling expects " + std::to_string(rect_.size()) +
                      " values, got " + std::to_string(values_.size()));
  }
}

const Rational& Labeling::at(const Cell& c) const {
  rect_.require(c);
  return (*this)[c];
}

void Labeling::set(const Cell& c, Rational value) {
  rect_.require(c);
  values_[static_cast<std::size_t>(rect_.index(c))] = std::move(value);
}

Labeling Labeling::transposed() const {
  Labeling out(rect_.transposed());
  for (int i = 1; i <= rect_.r; ++i) {
    for (int j = 1; j <= rect_.s; ++j) out.set({j, i}, (*this)[{i, j}]);
  }
  return out;
}

void Labeling::validate(const ToggleAlgebra& alg) const {
  for (const auto& v : values_) alg.validate(v);
}

namespace {

std::vector<Rational> gather(const Labeling& labeling,
                             const std::vector<Cell>& cells) {
  std::vector<Rational> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.push_back(labeling[c]);
  return out;
}

// Assumes the labeling was validated; toggles keep values in the carrier.
void toggle_in_place(Labeling& labeling, const Cell& p,
                     const ToggleAlgebra& alg) {
  const Rect& rect = labeling.rect();
  const Rational above = alg.fold_above(gather(labeling, rect.upper_covers(p)));
  const Rational below = alg.fold_below(gather(labeling, rect.lower_covers(p)));
  labeling.set(p, alg.quotient(alg.product(above, below), labeling[p]));
}

template <typename Cells>
Labeling toggle_sequence(const Labeling& labeling, const Cells& order,
                         const ToggleAlgebra& alg) {
  labeling.validate(alg);
  Labeling out = labeling;
  for (const Cell& c : order) toggle_in_place(out, c, alg);
  return out;
}

std::vector<Cell> reversed(std::vector<Cell> cells) {
  return {cells.rbegin(), cells.rend()};
}

}  // namespace

Labeling toggle(const Labeling& labeling, const Cell& p,
                const ToggleAlgebra& alg) {
  labeling.rect().require(p);
  return toggle_sequence(labeling, std::vector<Cell>{p}, alg);
}

Labeling rowmotion(const Labeling& labeling, const ToggleAlgebra& alg) {
  return toggle_sequence(labeling, reversed(linear_extension(labeling.rect())),
                         alg);
}

Labeling rowmotion(const Labeling& labeling, const ToggleAlgebra& alg,
                   std::span<const Cell> extension) {
  if (extension.size() != static_cast<std::size_t>(labeling.rect().size())) {
    throw DomainError("linear extension does not cover the rectangle");
  }
  return toggle_sequence(
      labeling, std::vector<Cell>(extension.rbegin(), extension.rend()), alg);
}

Labeling rowmotion_inverse(const Labeling& labeling, const ToggleAlgebra& alg) {
  return toggle_sequence(labeling, linear_extension(labeling.rect()), alg);
}

Labeling rowmotion_power(const Labeling& labeling, int k,
                         const ToggleAlgebra& alg) {
  Labeling out = labeling;
  for (int step = 0; step < std::abs(k); ++step) {
    out = k > 0 ? rowmotion(out, alg) : rowmotion_inverse(out, alg);
  }
  return out;
}

Labeling partial_rowmotion(const Labeling& labeling, const Interval& interval,
                           const ToggleAlgebra& alg) {
  const Rect& rect = labeling.rect();
  Interval::make(rect, interval.i1, interval.i2, interval.j1, interval.j2);
  return toggle_sequence(labeling, reversed(linear_extension(interval)), alg);
}

Labeling partial_rowmotion_inverse(const Labeling& labeling,
                                   const Interval& interval,
                                   const ToggleAlgebra& alg) {
  const Rect& rect = labeling.rect();
  Interval::make(rect, interval.i1, interval.i2, interval.j1, interval.j2);
  return toggle_sequence(labeling, linear_extension(interval), alg);
}

Labeling transfer(const Labeling& x, const ToggleAlgebra& alg) {
  x.validate(alg);
  Labeling out = x;
  for (const Cell& c : linear_extension(x.rect())) {
    const Rational below = alg.fold_below(gather(x, x.rect().lower_covers(c)));
    out.set(c, alg.quotient(x[c], below));
  }
  return out;
}

Labeling transfer_inverse(const Labeling& x, const ToggleAlgebra& alg) {
  x.validate(alg);
  Labeling y = x;
  for (const Cell& c : linear_extension(x.rect())) {
    const Rational below = alg.fold_below(gather(y, x.rect().lower_covers(c)));
    y.set(c, alg.product(x[c], below));
  }
  return y;
}

Labeling dual_transfer(const Labeling& x, const ToggleAlgebra& alg) {
  x.validate(alg);
  Labeling out = x;
  for (const Cell& c : linear_extension(x.rect())) {
    const Rational above = alg.fold_below(gather(x, x.rect().upper_covers(c)));
    out.set(c, alg.quotient(x[c], above));
  }
  return out;
}

Labeling dual_transfer_inverse(const Labeling& x, const ToggleAlgebra& alg) {
  x.validate(alg);
  Labeling z = x;
  for (const Cell& c : reversed(linear_extension(x.rect()))) {
    const Rational above = alg.fold_below(gather(z, x.rect().upper_covers(c)));
    z.set(c, alg.product(x[c], above));
  }
  return z;
}

OrbitTable::OrbitTable(Labeling base, ToggleAlgebra alg)
    : base_(std::move(base)), alg_(std::move(alg)) {
  base_.validate(alg_);
  powers_.emplace(0, base_);
}

void OrbitTable::confirm_period() {
  const int period = base_.rect().period();
  Labeling wrapped = base_;
  for (int step = 1; step <= period; ++step) {
    wrapped = rowmotion(wrapped, alg_);
    if (step < period) powers_.insert_or_assign(step, wrapped);
  }
  periodic_ = wrapped == base_;
}

const Labeling& OrbitTable::power(int k) {
  if (!periodic_) confirm_period();
  const int period = base_.rect().period();
  if (*periodic_) k = ((k % period) + period) % period;
  if (auto it = powers_.find(k); it != powers_.end()) return it->second;

  // Walk from the nearest memoized exponent on the same side of zero.
  int from = 0;
  for (const auto& [exponent, _] : powers_) {
    if ((k > 0 && exponent > from && exponent < k) ||
        (k < 0 && exponent < from && exponent > k)) {
      from = exponent;
    }
  }
  Labeling current = powers_.at(from);
  const int step = k > 0 ? 1 : -1;
  for (int e = from + step; e != k + step; e += step) {
    current = step > 0 ? rowmotion(current, alg_)
                       : rowmotion_inverse(current, alg_);
    powers_.insert_or_assign(e, current);
  }
  return powers_.at(k);
}

}  // namespace rowmotion
