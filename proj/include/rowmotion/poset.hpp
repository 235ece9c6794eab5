#pragma once

// The rectangle poset [r] x [s] and its combinatorial level: order ideals,
// antichains, toggles, rowmotion and the 0/1 Stanley-Thomas word.
//
// Cells are 1-based (i, j); (i, j) <= (i', j') iff i <= i' and j <= j'.
// Rank is i + j (the minimum has rank 2) and file is j - i.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rowmotion {

struct Cell {
  int i = 1;
  int j = 1;

  int rank() const { return i + j; }
  int file() const { return j - i; }
  bool precedes_or_equals(const Cell& other) const {
    return i <= other.i && j <= other.j;
  }
  std::string to_string() const;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Interval;

struct Rect {
  int r = 1;
  int s = 1;

  /// Throws DomainError unless r, s >= 1.
  static Rect make(int r, int s);

  int size() const { return r * s; }
  int rank_count() const { return r + s - 1; }
  /// Order of rowmotion on this rectangle.
  int period() const { return r + s; }
  bool contains(const Cell& c) const {
    return c.i >= 1 && c.i <= r && c.j >= 1 && c.j <= s;
  }
  /// Row-major position of `c`.
  int index(const Cell& c) const { return (c.i - 1) * s + (c.j - 1); }
  Cell cell_at(int index) const { return {index / s + 1, index % s + 1}; }
  Rect transposed() const { return {s, r}; }
  Interval whole() const;

  std::vector<Cell> lower_covers(const Cell& c) const;
  std::vector<Cell> upper_covers(const Cell& c) const;
  /// Throws DomainError if `c` is not a cell of the rectangle.
  void require(const Cell& c) const;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// The interval [i1, i2] x [j1, j2].
struct Interval {
  int i1 = 1;
  int i2 = 1;
  int j1 = 1;
  int j2 = 1;

  /// Throws DomainError unless 1 <= i1 <= i2 <= r and 1 <= j1 <= j2 <= s.
  static Interval make(const Rect& rect, int i1, int i2, int j1, int j2);

  int rows() const { return i2 - i1 + 1; }
  int cols() const { return j2 - j1 + 1; }
  int size() const { return rows() * cols(); }
  bool contains(const Cell& c) const {
    return c.i >= i1 && c.i <= i2 && c.j >= j1 && c.j <= j2;
  }
  /// (i1 = 1 or j2 = s) and (j1 = 1 or i2 = r): the shape for which
  /// interval path sums are quotients of minors.
  bool corner_anchored(const Rect& rect) const {
    return (i1 == 1 || j2 == rect.s) && (j1 == 1 || i2 == rect.r);
  }
  Interval transposed() const { return {j1, j2, i1, i2}; }
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical linear extension: increasing rank, increasing row within a rank.
std::vector<Cell> linear_extension(const Rect& rect);
/// Same ranks, rows decreasing within each rank. Used to check that rowmotion
/// does not depend on the extension.
std::vector<Cell> reversed_rank_extension(const Rect& rect);
/// Canonical linear extension of the cells of `interval`.
std::vector<Cell> linear_extension(const Interval& interval);

/// A subset of cells stored as a row-major bitmask (r * s <= 64).
class CellSet {
 public:
  explicit CellSet(Rect rect);
  CellSet(Rect rect, std::uint64_t bits);

  const Rect& rect() const { return rect_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(const Cell& c) const;
  void insert(const Cell& c);
  void erase(const Cell& c);
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::vector<Cell> cells() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  Rect rect_;
  std::uint64_t bits_ = 0;
};

class OrderIdeal {
 public:
  /// Throws DomainError if `cells` is not downward closed.
  explicit OrderIdeal(CellSet cells);
  static OrderIdeal empty(const Rect& rect);
  static OrderIdeal full(const Rect& rect);
  static bool is_order_ideal(const CellSet& cells);

  const Rect& rect() const { return cells_.rect(); }
  const CellSet& cell_set() const { return cells_; }
  bool contains(const Cell& c) const { return cells_.contains(c); }
  std::vector<Cell> cells() const { return cells_.cells(); }

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  CellSet cells_;
};

class Antichain {
 public:
  /// Throws DomainError if two members are comparable.
  explicit Antichain(CellSet cells);
  static bool is_antichain(const CellSet& cells);

  const Rect& rect() const { return cells_.rect(); }
  const CellSet& cell_set() const { return cells_; }
  std::vector<Cell> cells() const { return cells_.cells(); }

  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  CellSet cells_;
};

/// Largest rectangle (by r * s) that enumerate_order_ideals accepts.
inline constexpr int kMaxEnumeratedCells = 30;

/// All order ideals, each exactly once. There are C(r+s, r) of them.
/// Throws DomainError when r * s exceeds kMaxEnumeratedCells.
std::vector<OrderIdeal> enumerate_order_ideals(const Rect& rect);

OrderIdeal toggle(const OrderIdeal& ideal, const Cell& p);

/// The ideal generated by the minimal elements of the complement.
OrderIdeal rowmotion(const OrderIdeal& ideal);
/// Rowmotion as toggles from the top of `extension` down to its bottom.
OrderIdeal rowmotion_by_toggles(const OrderIdeal& ideal,
                                std::span<const Cell> extension);
OrderIdeal rowmotion_by_toggles(const OrderIdeal& ideal);

Antichain antichain_of_ideal(const OrderIdeal& ideal);
OrderIdeal ideal_of_antichain(const Antichain& antichain);

/// 0/1 word of length r + s: bit i (i <= r) is set iff the antichain meets
/// row i; bit r + j is set iff it misses column j.
std::vector<int> stanley_thomas_word(const Antichain& antichain);

/// One step of the rotation rowmotion induces on Stanley-Thomas words:
/// the last letter moves to the front.
template <typename T>
std::vector<T> rotate_right(std::vector<T> word) {
  if (!word.empty()) {
    T last = std::move(word.back());
    word.pop_back();
    word.insert(word.begin(), std::move(last));
  }
  return word;
}

}  // namespace rowmotion
