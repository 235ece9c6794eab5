#pragma once

// Nonintersecting lattice paths and the minor array behind iterated
// rowmotion on [r] x [s].
//
// G_R is the DAG on [r+1] x [s] with an edge (i,j) -> (i+1,j) of weight
// 1/x_ij for every cell and a weight-1 edge (i,j) -> (i+1,j-1). Its boundary
// vertices are
//     P_j = (1, j), P_{s+i} = (i+1, s),  Q_i = (i, 1), Q_{r+j} = (r+1, j).
// The path matrix a_ij sums path weights P_i -> Q_j, and its solid minors
// W_ij^(k) (Lindström-Gessel-Viennot) count k nonintersecting paths from
// P_i..P_{i+k-1} to Q_j..Q_{j+k-1}.

#include <string>
#include <vector>

#include "rowmotion/algebra.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/matrix.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/report.hpp"

namespace rowmotion {

struct GREdge {
  Cell from;
  Cell to;

  /// Vertical edges carry 1/x at the cell they start from.
  bool weighted() const { return from.j == to.j; }
  friend bool operator==(const GREdge&, const GREdge&) = default;
  friend auto operator<=>(const GREdge&, const GREdge&) = default;
};

struct GRPath {
  Cell start;
  std::vector<GREdge> edges;

  Cell end() const { return edges.empty() ? start : edges.back().to; }
  std::vector<Cell> vertices() const;
  friend bool operator==(const GRPath&, const GRPath&) = default;
  friend auto operator<=>(const GRPath&, const GRPath&) = default;
};

/// Nonintersecting paths in G_R; weights live on edges.
struct GRPathCollection {
  std::vector<GRPath> paths;
  friend bool operator==(const GRPathCollection&,
                         const GRPathCollection&) = default;
  friend auto operator<=>(const GRPathCollection&,
                          const GRPathCollection&) = default;
};

/// Nonintersecting monotone paths in R; weights live on vertices.
struct RPathCollection {
  std::vector<std::vector<Cell>> paths;
  friend bool operator==(const RPathCollection&,
                         const RPathCollection&) = default;
  friend auto operator<=>(const RPathCollection&,
                          const RPathCollection&) = default;
};

class GRGraph {
 public:
  /// Requires a positive labeling.
  explicit GRGraph(Labeling x);

  const Rect& rect() const { return x_.rect(); }
  const Labeling& labels() const { return x_; }
  /// Number of boundary sources (and sinks): r + s.
  int boundary_size() const { return rect().r + rect().s; }

  bool contains(const Cell& v) const {
    return v.i >= 1 && v.i <= rect().r + 1 && v.j >= 1 && v.j <= rect().s;
  }
  /// P_m for 1 <= m <= r + s.
  Cell source(int m) const;
  /// Q_m for 1 <= m <= r + s.
  Cell sink(int m) const;

  std::vector<GREdge> out_edges(const Cell& v) const;
  std::vector<GREdge> edges() const;
  Rational edge_weight(const GREdge& e) const;
  Rational weight(const GRPath& path) const;
  Rational weight(const GRPathCollection& collection) const;

 private:
  Labeling x_;
};

/// (r+s) x (r+s) matrix of total path weights P_i -> Q_j, by dynamic
/// programming in row order.
RationalMatrix path_matrix(const GRGraph& graph);

/// The array W_ij^(k) of solid minors of a square matrix of size n.
/// Entries are stored on the pyramid 1 <= i, j <= n - k + 1, 1 <= k <= n.
/// Elsewhere W^(0) = 1 and every other entry is 0.
class MinorArray {
 public:
  /// Builds the labeling's path matrix and all of its solid minors.
  explicit MinorArray(const Labeling& x);
  /// Minors of an arbitrary square matrix.
  explicit MinorArray(const RationalMatrix& matrix);

  int size() const { return n_; }
  Rational at(int i, int j, int k) const;
  bool in_support(int i, int j, int k) const {
    return k >= 1 && k <= n_ && i >= 1 && j >= 1 && i <= n_ - k + 1 &&
           j <= n_ - k + 1;
  }
  /// Overwrites a stored entry (for perturbation tests).
  void set(int i, int j, int k, Rational value);
  /// The array with the two lower indices exchanged: W'_ij = W_ji.
  MinorArray transposed() const;

 private:
  MinorArray() = default;
  std::size_t offset(int i, int j, int k) const;

  int n_ = 0;
  std::vector<std::size_t> level_offsets_;
  std::vector<Rational> entries_;
};

/// Checks W_ij^(k) W_{i+1,j+1}^(k) = W_{i,j+1}^(k) W_{i+1,j}^(k)
///                                   + W_ij^(k+1) W_{i+1,j+1}^(k-1)
/// on the zero-padded array, 0 <= i, j <= n + 1 and 0 <= k <= n.
CheckReport octahedron_check(const MinorArray& w);

/// Checks the toggle relation between the quotients
///     z_ij^(k) = W_{k+2,i+k+1}^(j-1) / W_{k+1,i+k+1}^(j)
/// for cells (i, j) of `rect` and 1 <= k <= r + s, wherever every quotient
/// is defined. A parallel-sum term with a zero denominator is dropped.
CheckReport array_toggle_check(const MinorArray& w, const Rect& rect);

/// Largest k accepted by the path enumerators.
inline constexpr int kMaxEnumeratedPaths = 6;
/// Largest number of single source-to-sink paths the enumerators will list.
inline constexpr long kMaxSinglePaths = 1'000'000;

/// Every k-tuple of vertex-disjoint monotone paths in `interval` from
/// (i1, j1), ..., (i1, j1+k-1) to (i2, j2-k+1), ..., (i2, j2).
/// k = 0 gives the single empty collection.
std::vector<RPathCollection> enumerate_paths(const Interval& interval, int k);

/// Product of the labels on the vertices of all paths (⊗-product for a
/// general algebra).
Rational collection_weight(const RPathCollection& collection,
                           const Labeling& x,
                           const ToggleAlgebra& alg = ToggleAlgebra::birational());

/// w_I^(k) by enumeration: ⊕ over collections of their ⊗-weights.
Rational w_interval_oracle(const Labeling& x, const Interval& interval, int k,
                           const ToggleAlgebra& alg = ToggleAlgebra::birational());

/// Every family of vertex-disjoint paths in G_R from P_i..P_{i+k-1} to
/// Q_j..Q_{j+k-1}, source t matched to sink t.
std::vector<GRPathCollection> enumerate_gr_paths(const GRGraph& graph, int i,
                                                 int j, int k);

/// w_I^(k) as a quotient of two minors; requires a corner-anchored interval.
/// Throws DomainError otherwise.
Rational w_interval(const MinorArray& w, const Rect& rect,
                    const Interval& interval, int k);

/// ⊕ over maximal chains of `interval` of the ⊗-product of labels, by the
/// bottom-up sweep.
Rational chain_sum(const Labeling& x, const Interval& interval,
                   const ToggleAlgebra& alg = ToggleAlgebra::birational());

/// Sends a collection in P_I^(k) to the family in
/// S^(j2-j1-k+1)_{i1+j1+k-1, i2+j1} of G_R whose weighted edges are exactly
/// the cells of I off the paths. Requires a corner-anchored interval.
/// Throws DomainError on a malformed collection.
GRPathCollection tile_bijection(const RPathCollection& collection,
                                const Interval& interval, int k,
                                const GRGraph& graph);

}  // namespace rowmotion
