#include "rowmotion/poset.hpp"

#include <algorithm>
#include <bit>

#include "rowmotion/rational.hpp"

namespace rowmotion {

std::string Cell::to_string() const {
  return std::to_string(i) + "," + std::to_string(j);
}

Rect Rect::make(int r, int s) {
  if (r < 1 || s < 1) {
    throw DomainError("rectangle dimensions must be positive, got " +
                      std::to_string(r) + "x" + std::to_string(s));
  }
  return {r, s};
}

Interval Rect::whole() const { return {1, r, 1, s}; }

std::vector<Cell> Rect::lower_covers(const Cell& c) const {
  std::vector<Cell> out;
  if (c.i > 1) out.push_back({c.i - 1, c.j});
  if (c.j > 1) out.push_back({c.i, c.j - 1});
  return out;
}

std::vector<Cell> Rect::upper_covers(const Cell& c) const {
  std::vector<Cell> out;
  if (c.i < r) out.push_back({c.i + 1, c.j});
  if (c.j < s) out.push_back({c.i, c.j + 1});
  return out;
}

void Rect::require(const Cell& c) const {
  if (!contains(c)) {
    throw DomainError("cell (" + c.to_string() + ") outside " +
                      std::to_string(r) + "x" + std::to_string(s) +
                      " rectangle");
  }
}

Interval Interval::make(const Rect& rect, int i1, int i2, int j1, int j2) {
  if (i1 < 1 || i1 > i2 || i2 > rect.r || j1 < 1 || j1 > j2 || j2 > rect.s) {
    const Interval bad{i1, i2, j1, j2};
    throw DomainError("invalid interval " + bad.to_string());
  }
  return {i1, i2, j1, j2};
}

std::string Interval::to_string() const {
  return "[" + std::to_string(i1) + "," + std::to_string(i2) + "]x[" +
         std::to_string(j1) + "," + std::to_string(j2) + "]";
}

std::vector<Cell> linear_extension(const Interval& interval) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(interval.size()));
  for (int rank = interval.i1 + interval.j1; rank <= interval.i2 + interval.j2;
       ++rank) {
    for (int i = interval.i1; i <= interval.i2; ++i) {
      const int j = rank - i;
      if (j >= interval.j1 && j <= interval.j2) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Cell> linear_extension(const Rect& rect) {
  return linear_extension(rect.whole());
}

std::vector<Cell> reversed_rank_extension(const Rect& rect) {
  std::vector<Cell> out = linear_extension(rect);
  auto begin = out.begin();
  while (begin != out.end()) {
    const int rank = begin->rank();
    auto end = std::find_if(begin, out.end(),
                            [rank](const Cell& c) { return c.rank() != rank; });
    std::reverse(begin, end);
    begin = end;
  }
  return out;
}

CellSet::CellSet(Rect rect) : rect_(rect) {
  if (rect.size() > 64) {
    throw DomainError("cell sets support at most 64 cells");
  }
}

CellSet::CellSet(Rect rect, std::uint64_t bits) : CellSet(rect) {
  const std::uint64_t mask =
      rect.size() == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << rect.size()) - 1;
  if ((bits & ~mask) != 0) throw DomainError("cell set bits out of range");
  bits_ = bits;
}

bool CellSet::contains(const Cell& c) const {
  return rect_.contains(c) &&
         ((bits_ >> rect_.index(c)) & std::uint64_t{1}) != 0;
}

void CellSet::insert(const Cell& c) {
  rect_.require(c);
  bits_ |= std::uint64_t{1} << rect_.index(c);
}

void CellSet::erase(const Cell& c) {
  rect_.require(c);
  bits_ &= ~(std::uint64_t{1} << rect_.index(c));
}

int CellSet::size() const { return std::popcount(bits_); }

std::vector<Cell> CellSet::cells() const {
  std::vector<Cell> out;
  for (int k = 0; k < rect_.size(); ++k) {
    if ((bits_ >> k) & std::uint64_t{1}) out.push_back(rect_.cell_at(k));
  }
  return out;
}

bool OrderIdeal::is_order_ideal(const CellSet& cells) {
  for (const Cell& c : cells.cells()) {
    for (const Cell& lower : cells.rect().lower_covers(c)) {
      if (!cells.contains(lower)) return false;
    }
  }
  return true;
}

OrderIdeal::OrderIdeal(CellSet cells) : cells_(std::move(cells)) {
  if (!is_order_ideal(cells_)) throw DomainError("cell set is not an order ideal");
}

OrderIdeal OrderIdeal::empty(const Rect& rect) { return OrderIdeal(CellSet(rect)); }

OrderIdeal OrderIdeal::full(const Rect& rect) {
  CellSet all(rect);
  for (int k = 0; k < rect.size(); ++k) all.insert(rect.cell_at(k));
  return OrderIdeal(all);
}

bool Antichain::is_antichain(const CellSet& cells) {
  const auto members = cells.cells();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a].precedes_or_equals(members[b]) ||
          members[b].precedes_or_equals(members[a])) {
        return false;
      }
    }
  }
  return true;
}

Antichain::Antichain(CellSet cells) : cells_(std::move(cells)) {
  if (!is_antichain(cells_)) throw DomainError("cell set is not an antichain");
}

std::vector<OrderIdeal> enumerate_order_ideals(const Rect& rect) {
  if (rect.size() > kMaxEnumeratedCells) {
    throw DomainError("refusing to enumerate order ideals of a " +
                      std::to_string(rect.r) + "x" + std::to_string(rect.s) +
                      " rectangle: more than " +
                      std::to_string(kMaxEnumeratedCells) + " cells");
  }
  // An ideal is determined by its row lengths s >= len_1 >= ... >= len_r >= 0.
  std::vector<OrderIdeal> out;
  std::vector<int> lengths(static_cast<std::size_t>(rect.r), 0);
  auto emit = [&] {
    CellSet cells(rect);
    for (int i = 1; i <= rect.r; ++i) {
      for (int j = 1; j <= lengths[static_cast<std::size_t>(i - 1)]; ++j) {
        cells.insert({i, j});
      }
    }
    out.emplace_back(cells);
  };
  auto recurse = [&](auto&& self, int row, int cap) -> void {
    if (row > rect.r) {
      emit();
      return;
    }
    for (int len = 0; len <= cap; ++len) {
      lengths[static_cast<std::size_t>(row - 1)] = len;
      self(self, row + 1, len);
    }
  };
  recurse(recurse, 1, rect.s);
  return out;
}

OrderIdeal toggle(const OrderIdeal& ideal, const Cell& p) {
  const Rect& rect = ideal.rect();
  rect.require(p);
  CellSet cells = ideal.cell_set();
  if (cells.contains(p)) {
    for (const Cell& up : rect.upper_covers(p)) {
      if (cells.contains(up)) return ideal;
    }
    cells.erase(p);
  } else {
    for (const Cell& down : rect.lower_covers(p)) {
      if (!cells.contains(down)) return ideal;
    }
    cells.insert(p);
  }
  return OrderIdeal(cells);
}

OrderIdeal rowmotion(const OrderIdeal& ideal) {
  const Rect& rect = ideal.rect();
  std::vector<Cell> minimal;
  for (int k = 0; k < rect.size(); ++k) {
    const Cell c = rect.cell_at(k);
    if (ideal.contains(c)) continue;
    const auto lower = rect.lower_covers(c);
    // Lower covers of a complement cell that are also in the complement make
    // it non-minimal; the complement of an ideal is a filter so covers suffice.
    const bool is_minimal = std::all_of(lower.begin(), lower.end(),
        [&](const Cell& d) { return ideal.contains(d); });
    if (is_minimal) minimal.push_back(c);
  }
  CellSet generated(rect);
  for (int k = 0; k < rect.size(); ++k) {
    const Cell c = rect.cell_at(k);
    for (const Cell& m : minimal) {
      if (c.precedes_or_equals(m)) {
        generated.insert(c);
        break;
      }
    }
  }
  return OrderIdeal(generated);
}

OrderIdeal rowmotion_by_toggles(const OrderIdeal& ideal,
                                std::span<const Cell> extension) {
  OrderIdeal current = ideal;
  for (auto it = extension.rbegin(); it != extension.rend(); ++it) {
    current = toggle(current, *it);
  }
  return current;
}

OrderIdeal rowmotion_by_toggles(const OrderIdeal& ideal) {
  const auto extension = linear_extension(ideal.rect());
  return rowmotion_by_toggles(ideal, extension);
}

Antichain antichain_of_ideal(const OrderIdeal& ideal) {
  const Rect& rect = ideal.rect();
  CellSet maximal(rect);
  for (const Cell& c : ideal.cells()) {
    bool is_max = true;
    for (const Cell& up : rect.upper_covers(c)) {
      if (ideal.contains(up)) is_max = false;
    }
    if (is_max) maximal.insert(c);
  }
  return Antichain(maximal);
}

OrderIdeal ideal_of_antichain(const Antichain& antichain) {
  const Rect& rect = antichain.rect();
  const auto generators = antichain.cells();
  CellSet closure(rect);
  for (int k = 0; k < rect.size(); ++k) {
    const Cell c = rect.cell_at(k);
    for (const Cell& g : generators) {
      if (c.precedes_or_equals(g)) {
        closure.insert(c);
        break;
      }
    }
  }
  return OrderIdeal(closure);
}

std::vector<int> stanley_thomas_word(const Antichain& antichain) {
  const Rect& rect = antichain.rect();
  std::vector<int> word(static_cast<std::size_t>(rect.r + rect.s), 0);
  std::vector<bool> column_hit(static_cast<std::size_t>(rect.s + 1), false);
  for (const Cell& c : antichain.cells()) {
    word[static_cast<std::size_t>(c.i - 1)] = 1;
    column_hit[static_cast<std::size_t>(c.j)] = true;
  }
  for (int j = 1; j <= rect.s; ++j) {
    word[static_cast<std::size_t>(rect.r + j - 1)] =
        column_hit[static_cast<std::size_t>(j)] ? 0 : 1;
  }
  return word;
}

}  // namespace rowmotion
