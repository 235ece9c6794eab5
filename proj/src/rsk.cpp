#include "rowmotion/rsk.hpp"

#include <algorithm>

namespace rowmotion {

namespace {

int diagonal_depth(const Rect& rect) { return std::min(rect.r, rect.s) - 1; }

std::string cell_k(const Cell& c, int k) {
  return "(" + c.to_string() + ") k=" + std::to_string(k);
}

std::string mismatch(const Rational& lhs, const Rational& rhs) {
  return lhs.to_string() + " != " + rhs.to_string();
}

// k-path families in [i] x [j] exist for k <= min(i, j), and for k = j.
bool greene_defined(const Cell& border, int k) {
  if (k > border.j) return false;
  return k <= std::min(border.i, border.j) || k == border.j;
}

}  // namespace

RskImage birational_rsk(const Labeling& x, const ToggleAlgebra& alg) {
  const Rect& rect = x.rect();
  Labeling y = transfer_inverse(x, alg);
  for (int t = 1; t <= diagonal_depth(rect); ++t) {
    y = partial_rowmotion_inverse(y, Interval{1, rect.r - t, 1, rect.s - t}, alg);
  }
  return y;
}

RskImage rsk_procedure(const Labeling& x, const ToggleAlgebra& alg) {
  const auto extension = linear_extension(x.rect());
  return rsk_procedure(x, alg, extension);
}

RskImage rsk_procedure(const Labeling& x, const ToggleAlgebra& alg,
                       std::span<const Cell> extension) {
  x.validate(alg);
  const Rect& rect = x.rect();
  if (extension.size() != static_cast<std::size_t>(rect.size())) {
    throw DomainError("extension does not cover the rectangle");
  }
  Labeling y = x;
  CellSet assigned(rect);
  for (const Cell& p : extension) {
    rect.require(p);
    std::vector<Rational> below;
    for (const Cell& q : rect.lower_covers(p)) {
      if (!assigned.contains(q)) {
        throw DomainError("extension visits " + p.to_string() +
                          " before its lower covers");
      }
      below.push_back(y[q]);
    }
    y.set(p, alg.product(x[p], alg.fold_below(below)));
    assigned.insert(p);
    for (int t = 1; p.i - t >= 1 && p.j - t >= 1; ++t) {
      y = toggle(y, {p.i - t, p.j - t}, alg);
    }
  }
  return y;
}

Labeling rsk_inverse(const RskImage& image, const ToggleAlgebra& alg) {
  image.validate(alg);
  const Rect& rect = image.rect();
  Labeling y = image;
  for (int t = diagonal_depth(rect); t >= 1; --t) {
    y = partial_rowmotion(y, Interval{1, rect.r - t, 1, rect.s - t}, alg);
  }
  return transfer(y, alg);
}

std::vector<Cell> border_cells(const Rect& rect) {
  std::vector<Cell> out;
  for (int i = 1; i <= rect.r; ++i) {
    for (int j = 1; j <= rect.s; ++j) {
      if (i == rect.r || j == rect.s) out.push_back({i, j});
    }
  }
  return out;
}

Rational greene_product(const RskImage& image, const Cell& border, int k,
                        const ToggleAlgebra& alg) {
  const Rect& rect = image.rect();
  rect.require(border);
  if (border.i != rect.r && border.j != rect.s) {
    throw DomainError("(" + border.to_string() + ") is not a border cell");
  }
  if (k < 1 || k > std::min(border.i, border.j) + 1) {
    throw DomainError("k=" + std::to_string(k) + " outside 1..min(i,j)+1");
  }
  Rational product = alg.identity;
  for (int t = 0; t < k; ++t) {
    const Cell c{border.i - t, border.j - t};
    if (rect.contains(c)) product = alg.product(product, image[c]);
  }
  return product;
}

CheckReport greene_check(const Labeling& x, const ToggleAlgebra& alg,
                         const MinorArray& minors, bool oracle) {
  CheckReport report{.name = "greene"};
  const Rect& rect = x.rect();
  const RskImage image = birational_rsk(x, alg);
  for (const Cell& c : border_cells(rect)) {
    const Interval ideal{1, c.i, 1, c.j};
    for (int k = 1; k <= std::min(c.i, c.j) + 1; ++k) {
      if (!greene_defined(c, k)) {
        ++report.skipped;
        continue;
      }
      const Rational lhs = greene_product(image, c, k, alg);
      const Rational rhs = w_interval(minors, rect, ideal, k);
      report.record(lhs == rhs, cell_k(c, k), mismatch(lhs, rhs));
      if (oracle) {
        const Rational brute = w_interval_oracle(x, ideal, k);
        report.record(brute == rhs, cell_k(c, k) + " oracle",
                      mismatch(brute, rhs));
      }
    }
  }
  return report;
}

CheckReport greene_check(const Labeling& x) {
  const bool small = x.rect().r <= 3 && x.rect().s <= 3;
  return greene_check(x, ToggleAlgebra::birational(), MinorArray(x), small);
}

CheckReport tropical_greene_check(const Labeling& x, const ToggleAlgebra& alg) {
  CheckReport report{.name = "tropical_greene"};
  const Rect& rect = x.rect();
  const RskImage image = birational_rsk(x, alg);
  for (const Cell& c : border_cells(rect)) {
    for (int k = 1; k <= std::min(c.i, c.j) + 1; ++k) {
      if (!greene_defined(c, k)) {
        ++report.skipped;
        continue;
      }
      const Rational lhs = greene_product(image, c, k, alg);
      const Rational rhs = w_interval_oracle(x, Interval{1, c.i, 1, c.j}, k, alg);
      report.record(lhs == rhs, cell_k(c, k), mismatch(lhs, rhs));
    }
  }
  return report;
}

ChainSumProfile chain_sum_profile(const Labeling& x) {
  x.validate(ToggleAlgebra::birational());
  const Rect& rect = x.rect();
  ChainSumProfile profile{rect, {}, {}};
  for (int u = 1; u <= rect.r; ++u) {
    for (int v = u; v <= rect.r; ++v) {
      profile.rows[{u, v}] = chain_sum(x, Interval{u, v, 1, rect.s});
    }
  }
  for (int u = 1; u <= rect.s; ++u) {
    for (int v = u; v <= rect.s; ++v) {
      profile.cols[{u, v}] = chain_sum(x, Interval{1, rect.r, u, v});
    }
  }
  return profile;
}

namespace {

const Rational& profile_entry(const std::map<std::pair<int, int>, Rational>& sums,
                              int u, int v, const char* family) {
  const auto it = sums.find({u, v});
  if (it == sums.end()) {
    throw DomainError(std::string("profile is missing ") + family + " entry " +
                      std::to_string(u) + "," + std::to_string(v));
  }
  return it->second;
}

// det(sums(a, last - k + b)) for 1 <= a, b <= k, zero when a > last - k + b.
Rational family_determinant(const std::map<std::pair<int, int>, Rational>& sums,
                            int last, int k, const char* family) {
  if (k < 0 || k > last) {
    throw DomainError("path count " + std::to_string(k) + " out of range");
  }
  RationalMatrix m(k, k);
  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= k; ++b) {
      const int v = last - k + b;
      if (a <= v) m(a - 1, b - 1) = profile_entry(sums, a, v, family);
    }
  }
  return determinant(m);
}

}  // namespace

Rational column_family_weight(const ChainSumProfile& profile, int j, int k) {
  if (j < 1 || j > profile.rect.s) throw DomainError("column out of range");
  return family_determinant(profile.cols, j, k, "cols");
}

Rational row_family_weight(const ChainSumProfile& profile, int i, int k) {
  if (i < 1 || i > profile.rect.r) throw DomainError("row out of range");
  return family_determinant(profile.rows, i, k, "rows");
}

Labeling reconstruct_from_chain_sums(const ChainSumProfile& profile) {
  const Rect rect = Rect::make(profile.rect.r, profile.rect.s);
  auto border_weight = [&](const Cell& border, int k) {
    if (k == 0) return Rational(1);
    return border.i == rect.r ? column_family_weight(profile, border.j, k)
                              : row_family_weight(profile, border.i, k);
  };
  RskImage image(rect);
  for (int a = 1; a <= rect.r; ++a) {
    for (int b = 1; b <= rect.s; ++b) {
      const int d = std::min(rect.r - a, rect.s - b);
      const Cell border{a + d, b + d};
      const Rational numerator = border_weight(border, d + 1);
      const Rational denominator = border_weight(border, d);
      if (denominator.is_zero()) {
        throw DomainError("inconsistent profile: vanishing family weight at (" +
                          border.to_string() + ")");
      }
      const Rational value = numerator / denominator;
      if (!value.is_positive()) {
        throw DomainError("inconsistent profile: nonpositive RSK entry at (" +
                          std::to_string(a) + "," + std::to_string(b) + ")");
      }
      image.set({a, b}, value);
    }
  }
  Labeling x = rsk_inverse(image);
  if (chain_sum_profile(x) != ChainSumProfile{rect, profile.rows, profile.cols}) {
    throw DomainError("inconsistent profile: reconstruction does not reproduce it");
  }
  return x;
}

namespace {

Labeling shift_labeling(const Labeling& x) {
  const auto alg = ToggleAlgebra::birational();
  return transfer(rowmotion_inverse(transfer_inverse(x, alg), alg), alg);
}

// Column orientation on one labeling; `tag` names the orientation.
void chain_shift_columns(const Labeling& x, const Labeling& shifted,
                         const std::string& tag, CheckReport& report) {
  const Rect& rect = x.rect();
  const MinorArray w(x);
  const MinorArray w_shifted(shifted);
  for (int u = 2; u <= rect.s; ++u) {
    for (int v = u; v <= rect.s; ++v) {
      for (int k = 1; k <= v - u + 1; ++k) {
        const Rational lhs = w_interval(w, rect, Interval{1, rect.r, u, v}, k);
        const Rational rhs =
            w_interval(w_shifted, rect, Interval{1, rect.r, u - 1, v - 1}, k);
        report.record(lhs == rhs,
                      tag + " [" + std::to_string(u) + "," + std::to_string(v) +
                          "] k=" + std::to_string(k),
                      mismatch(lhs, rhs));
      }
    }
  }
}

}  // namespace

CheckReport chain_shift_check(const Labeling& x) {
  CheckReport report{.name = "chain_shift"};
  const Labeling shifted = shift_labeling(x);
  chain_shift_columns(x, shifted, "columns", report);
  chain_shift_columns(x.transposed(), shifted.transposed(), "rows", report);
  return report;
}

namespace {

// Cells (i, j) with j - i < s - r: RSK(x̃)_ij from w_{[r]x[2, J+1]}(x),
// J = j + r - i. `flip` reports coordinates of the transposed rectangle.
void shifted_rsk_lower(const Labeling& x, const RskImage& direct, bool flip,
                       CheckReport& report) {
  const Rect& rect = x.rect();
  const MinorArray w(x);
  auto family = [&](int column, int k) {
    if (k == 0) return Rational(1);
    return w_interval(w, rect, Interval{1, rect.r, 2, column + 1}, k);
  };
  for (int i = 1; i <= rect.r; ++i) {
    for (int j = 1; j <= rect.s; ++j) {
      if (j - i >= rect.s - rect.r) continue;
      const int column = j + rect.r - i;
      const int d = rect.r - i;
      const Rational predicted = family(column, d + 1) / family(column, d);
      const Rational actual = direct[{i, j}];
      const Cell shown = flip ? Cell{j, i} : Cell{i, j};
      report.record(predicted == actual, "(" + shown.to_string() + ")",
                    mismatch(predicted, actual));
    }
  }
}

}  // namespace

CheckReport chain_shift_rsk_check(const Labeling& x) {
  CheckReport report{.name = "chain_shift_rsk"};
  const Rect& rect = x.rect();
  const RskImage direct = birational_rsk(shift_labeling(x));
  shifted_rsk_lower(x, direct, false, report);
  shifted_rsk_lower(x.transposed(), direct.transposed(), true, report);
  for (int i = 1; i <= rect.r; ++i) {
    for (int j = 1; j <= rect.s; ++j) {
      if (j - i == rect.s - rect.r) ++report.skipped;
    }
  }
  return report;
}

}  // namespace rowmotion
