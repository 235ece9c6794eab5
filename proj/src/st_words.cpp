#include "rowmotion/st_words.hpp"

#include <stdexcept>

#include "rowmotion/closed_form.hpp"
#include "rowmotion/lgv.hpp"

namespace rowmotion {

std::string STWord::kind_name() const {
  switch (kind) {
    case WordKind::classic:
      return "ST";
    case WordKind::row:
      return "ST_i";
    case WordKind::column:
      return "STbar_j";
  }
  return "ST";
}

STWord birational_st(const Labeling& x) {
  x.validate(ToggleAlgebra::birational());
  const Rect& rect = x.rect();
  STWord word{WordKind::classic, 1, {}};
  for (int i = 1; i <= rect.r; ++i) {
    Rational product(1);
    for (int j = 1; j <= rect.s; ++j) product *= x[{i, j}];
    word.entries.push_back(product);
  }
  for (int j = 1; j <= rect.s; ++j) {
    Rational product(1);
    for (int i = 1; i <= rect.r; ++i) product *= x[{i, j}];
    word.entries.push_back(product.reciprocal());
  }
  return word;
}

Rational omega(const Labeling& x, int a, int b) {
  x.validate(ToggleAlgebra::birational());
  const Rect& rect = x.rect();
  if (a < 2 || a > b || b > rect.r + rect.s) {
    throw DomainError("omega needs 2 <= a <= b <= r+s, got a=" +
                      std::to_string(a) + " b=" + std::to_string(b));
  }
  // partial[i] = sum over admissible sequences ending at row i of the current
  // rank.
  std::vector<Rational> partial(static_cast<std::size_t>(rect.r + 1));
  for (int i = 1; i <= rect.r; ++i) {
    const Cell c{i, a - i};
    if (rect.contains(c)) partial[static_cast<std::size_t>(i)] = x[c].reciprocal();
  }
  for (int rank = a + 1; rank <= b; ++rank) {
    std::vector<Rational> next(partial.size());
    Rational below(0);  // sum of partial over rows < i
    for (int i = 1; i <= rect.r; ++i) {
      const Cell c{i, rank - i};
      if (rect.contains(c)) {
        next[static_cast<std::size_t>(i)] = below * x[c].reciprocal();
      }
      below += partial[static_cast<std::size_t>(i)];
    }
    partial = std::move(next);
  }
  Rational total(0);
  for (const auto& v : partial) total += v;
  if (total.is_zero()) {
    throw DomainError("omega_" + std::to_string(a) + "," + std::to_string(b) +
                      " has no northwest sequences");
  }
  return total;
}

namespace {

STWord row_word_formula(const Labeling& x, int i) {
  const Rect& rect = x.rect();
  const int n = rect.r + rect.s;
  STWord word{WordKind::row, i, {}};
  for (int k = 0; k <= rect.r - i; ++k) {
    word.entries.push_back(chain_sum(x, Interval{k + 1, k + i, 1, rect.s}));
  }
  for (int k = rect.r - i + 1; k < n; ++k) {
    word.entries.push_back(omega(x, k + i - rect.r + 1, k + 1));
  }
  return word;
}

void require_axis(const Rect& rect, WordAxis axis) {
  const int limit = axis.kind == WordKind::row ? rect.r : rect.s;
  if (axis.kind == WordKind::classic || axis.index < 1 || axis.index > limit) {
    throw DomainError("word index " + std::to_string(axis.index) +
                      " out of range");
  }
}

}  // namespace

STWord generalized_st_orbit(const Labeling& x, WordAxis axis) {
  const Rect& rect = x.rect();
  require_axis(rect, axis);
  const ClosedForm closed(x);
  const Cell border = axis.kind == WordKind::row ? Cell{axis.index, rect.s}
                                                 : Cell{rect.r, axis.index};
  STWord word{axis.kind, axis.index, {}};
  for (int k = 0; k < rect.period(); ++k) {
    word.entries.push_back(closed.rho_power_any(border, -k));
  }
  return word;
}

STWord generalized_st_formula(const Labeling& x, WordAxis axis) {
  require_axis(x.rect(), axis);
  if (axis.kind == WordKind::row) return row_word_formula(x, axis.index);
  STWord word = row_word_formula(x.transposed(), axis.index);
  word.kind = WordKind::column;
  return word;
}

STWord generalized_st(const Labeling& x, WordAxis axis) {
  STWord orbit = generalized_st_orbit(x, axis);
  const STWord formula = generalized_st_formula(x, axis);
  if (orbit != formula) {
    throw std::logic_error("orbit and chain-sum forms of " + orbit.kind_name() +
                           " disagree at index " + std::to_string(axis.index));
  }
  return orbit;
}

CheckReport cyclic_shift_check(const Labeling& x) {
  CheckReport report{.name = "cyclic_shift"};
  const auto alg = ToggleAlgebra::birational();
  const Labeling next = transfer(rowmotion(transfer_inverse(x, alg), alg), alg);

  auto compare = [&](const std::string& where, const STWord& before,
                     const STWord& after) {
    const auto expected = rotate_right(before.entries);
    std::string detail;
    if (after.entries != expected) {
      for (std::size_t k = 0; k < expected.size(); ++k) {
        if (after.entries[k] != expected[k]) {
          detail = "entry " + std::to_string(k + 1) + ": " +
                   after.entries[k].to_string() + " != " + expected[k].to_string();
          break;
        }
      }
    }
    report.record(after.entries == expected, where, detail);
  };

  compare("classic", birational_st(x), birational_st(next));
  const Rect& rect = x.rect();
  for (int i = 1; i <= rect.r; ++i) {
    try {
      compare("row " + std::to_string(i), generalized_st(x, WordAxis::row(i)),
              generalized_st(next, WordAxis::row(i)));
    } catch (const std::exception& e) {
      report.record(false, "row " + std::to_string(i), e.what());
    }
  }
  for (int j = 1; j <= rect.s; ++j) {
    try {
      compare("column " + std::to_string(j),
              generalized_st(x, WordAxis::column(j)),
              generalized_st(next, WordAxis::column(j)));
    } catch (const std::exception& e) {
      report.record(false, "column " + std::to_string(j), e.what());
    }
  }
  return report;
}

}  // namespace rowmotion
