#include "rowmotion/lgv.hpp"

#include <algorithm>
#include <optional>

namespace rowmotion {

std::vector<Cell> GRPath::vertices() const {
  std::vector<Cell> out{start};
  for (const auto& e : edges) out.push_back(e.to);
  return out;
}

GRGraph::GRGraph(Labeling x) : x_(std::move(x)) {
  x_.validate(ToggleAlgebra::birational());
}

Cell GRGraph::source(int m) const {
  if (m < 1 || m > boundary_size()) {
    throw DomainError("source index " + std::to_string(m) + " out of range");
  }
  const int s = rect().s;
  return m <= s ? Cell{1, m} : Cell{m - s + 1, s};
}

Cell GRGraph::sink(int m) const {
  if (m < 1 || m > boundary_size()) {
    throw DomainError("sink index " + std::to_string(m) + " out of range");
  }
  const int r = rect().r;
  return m <= r ? Cell{m, 1} : Cell{r + 1, m - r};
}

std::vector<GREdge> GRGraph::out_edges(const Cell& v) const {
  std::vector<GREdge> out;
  if (v.i > rect().r) return out;
  out.push_back({v, {v.i + 1, v.j}});
  if (v.j >= 2) out.push_back({v, {v.i + 1, v.j - 1}});
  return out;
}

std::vector<GREdge> GRGraph::edges() const {
  std::vector<GREdge> out;
  for (int i = 1; i <= rect().r; ++i) {
    for (int j = 1; j <= rect().s; ++j) {
      const auto from_here = out_edges({i, j});
      out.insert(out.end(), from_here.begin(), from_here.end());
    }
  }
  return out;
}

Rational GRGraph::edge_weight(const GREdge& e) const {
  if (!contains(e.from) || e.to.i != e.from.i + 1 ||
      (e.to.j != e.from.j && e.to.j != e.from.j - 1) || !contains(e.to)) {
    throw DomainError("not an edge of G_R: (" + e.from.to_string() + ")->(" +
                      e.to.to_string() + ")");
  }
  return e.weighted() ? x_[e.from].reciprocal() : Rational(1);
}

Rational GRGraph::weight(const GRPath& path) const {
  Rational w(1);
  for (const auto& e : path.edges) w *= edge_weight(e);
  return w;
}

Rational GRGraph::weight(const GRPathCollection& collection) const {
  Rational w(1);
  for (const auto& p : collection.paths) w *= weight(p);
  return w;
}

RationalMatrix path_matrix(const GRGraph& graph) {
  const int n = graph.boundary_size();
  const int rows = graph.rect().r + 1;
  const int cols = graph.rect().s;
  RationalMatrix a(n, n);
  for (int m = 1; m <= n; ++m) {
    std::vector<Rational> total(static_cast<std::size_t>(rows * cols));
    auto slot = [cols](const Cell& v) {
      return static_cast<std::size_t>((v.i - 1) * cols + (v.j - 1));
    };
    const Cell start = graph.source(m);
    total[slot(start)] = Rational(1);
    for (int i = start.i; i < rows; ++i) {
      for (int j = 1; j <= cols; ++j) {
        const Rational& here = total[slot({i, j})];
        if (here.is_zero()) continue;
        for (const auto& e : graph.out_edges({i, j})) {
          total[slot(e.to)] += here * graph.edge_weight(e);
        }
      }
    }
    for (int q = 1; q <= n; ++q) a(m - 1, q - 1) = total[slot(graph.sink(q))];
  }
  return a;
}

MinorArray::MinorArray(const Labeling& x)
    : MinorArray(path_matrix(GRGraph(x))) {}

MinorArray::MinorArray(const RationalMatrix& matrix) : n_(matrix.rows()) {
  if (matrix.cols() != n_) throw DomainError("minor array of a non-square matrix");
  level_offsets_.assign(static_cast<std::size_t>(n_ + 2), 0);
  for (int k = 1; k <= n_; ++k) {
    const auto side = static_cast<std::size_t>(n_ - k + 1);
    level_offsets_[static_cast<std::size_t>(k + 1)] =
        level_offsets_[static_cast<std::size_t>(k)] + side * side;
  }
  entries_.resize(level_offsets_[static_cast<std::size_t>(n_ + 1)]);
  for (int k = 1; k <= n_; ++k) {
    for (int i = 1; i <= n_ - k + 1; ++i) {
      for (int j = 1; j <= n_ - k + 1; ++j) {
        entries_[offset(i, j, k)] = determinant(matrix.solid_submatrix(i, j, k));
      }
    }
  }
}

std::size_t MinorArray::offset(int i, int j, int k) const {
  const auto side = static_cast<std::size_t>(n_ - k + 1);
  return level_offsets_[static_cast<std::size_t>(k)] +
         static_cast<std::size_t>(i - 1) * side + static_cast<std::size_t>(j - 1);
}

Rational MinorArray::at(int i, int j, int k) const {
  if (k == 0) return Rational(1);
  if (!in_support(i, j, k)) return Rational(0);
  return entries_[offset(i, j, k)];
}

void MinorArray::set(int i, int j, int k, Rational value) {
  if (!in_support(i, j, k)) throw DomainError("minor index outside the pyramid");
  entries_[offset(i, j, k)] = std::move(value);
}

MinorArray MinorArray::transposed() const {
  MinorArray out = *this;
  for (int k = 1; k <= n_; ++k) {
    for (int i = 1; i <= n_ - k + 1; ++i) {
      for (int j = 1; j <= n_ - k + 1; ++j) {
        out.entries_[offset(i, j, k)] = entries_[offset(j, i, k)];
      }
    }
  }
  return out;
}

namespace {

std::string ijk(int i, int j, int k) {
  return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int t = 1; t <= k; ++t) {
    out = out * (n - k + t) / t;
    if (out > kMaxSinglePaths) return kMaxSinglePaths + 1;
  }
  return out;
}

// Monotone paths (unit steps in i or j) from `from` to `to`.
void collect_r_paths(const Cell& from, const Cell& to, std::vector<Cell>& prefix,
                     std::vector<std::vector<Cell>>& out) {
  prefix.push_back(from);
  if (from == to) {
    out.push_back(prefix);
  } else {
    if (from.i < to.i) collect_r_paths({from.i + 1, from.j}, to, prefix, out);
    if (from.j < to.j) collect_r_paths({from.i, from.j + 1}, to, prefix, out);
  }
  prefix.pop_back();
}

template <typename Path, typename VerticesOf, typename Visit>
void disjoint_families(const std::vector<std::vector<Path>>& candidates,
                       VerticesOf vertices_of, Visit visit) {
  std::vector<Path> chosen;
  std::vector<Cell> used;
  auto recurse = [&](auto&& self, std::size_t t) -> void {
    if (t == candidates.size()) {
      visit(chosen);
      return;
    }
    for (const auto& path : candidates[t]) {
      const std::vector<Cell> vs = vertices_of(path);
      const bool clash = std::any_of(vs.begin(), vs.end(), [&](const Cell& v) {
        return std::find(used.begin(), used.end(), v) != used.end();
      });
      if (clash) continue;
      chosen.push_back(path);
      used.insert(used.end(), vs.begin(), vs.end());
      self(self, t + 1);
      used.resize(used.size() - vs.size());
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
}

void check_path_k(int k) {
  if (k < 0) throw DomainError("negative path count");
  if (k > kMaxEnumeratedPaths) {
    throw DomainError("refusing to enumerate families of " + std::to_string(k) +
                      " paths (limit " + std::to_string(kMaxEnumeratedPaths) +
                      ")");
  }
}

}  // namespace

CheckReport octahedron_check(const MinorArray& w) {
  CheckReport report{.name = "octahedron"};
  const int n = w.size();
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n + 1; ++i) {
      for (int j = 0; j <= n + 1; ++j) {
        const Rational lhs = w.at(i, j, k) * w.at(i + 1, j + 1, k);
        const Rational rhs = w.at(i, j + 1, k) * w.at(i + 1, j, k) +
                             w.at(i, j, k + 1) * w.at(i + 1, j + 1, k - 1);
        report.record(lhs == rhs, ijk(i, j, k),
                      lhs.to_string() + " != " + rhs.to_string());
      }
    }
  }
  return report;
}

CheckReport array_toggle_check(const MinorArray& w, const Rect& rect) {
  CheckReport report{.name = "array_toggle"};
  struct Quotient {
    Rational num;
    Rational den;
    bool defined() const { return !den.is_zero(); }
    Rational value() const { return num / den; }
  };
  auto z = [&](int i, int j, int k) {
    return Quotient{w.at(k + 2, i + k + 1, j - 1), w.at(k + 1, i + k + 1, j)};
  };
  const int n = rect.r + rect.s;
  for (int i = 1; i <= rect.r; ++i) {
    for (int j = 1; j <= rect.s; ++j) {
      for (int k = 1; k <= n; ++k) {
        const Quotient target = z(i, j, k);
        const Quotient previous = z(i, j, k - 1);
        const Quotient left = z(i, j - 1, k);
        const Quotient lower = z(i - 1, j, k);
        if (!target.defined() || !previous.defined() || previous.num.is_zero() ||
            !left.defined() || !lower.defined()) {
          ++report.skipped;
          continue;
        }
        std::vector<Rational> upper;
        for (const Quotient& q : {z(i + 1, j, k - 1), z(i, j + 1, k - 1)}) {
          if (q.defined()) upper.push_back(q.value());
        }
        if (upper.empty() ||
            (upper.size() == 2 && (upper[0] + upper[1]).is_zero())) {
          ++report.skipped;
          continue;
        }
        const Rational parallel = upper.size() == 1
                                      ? upper[0]
                                      : upper[0] * upper[1] / (upper[0] + upper[1]);
        const Rational expected =
            (left.value() + lower.value()) * parallel / previous.value();
        const Rational actual = target.value();
        report.record(actual == expected, ijk(i, j, k),
                      actual.to_string() + " != " + expected.to_string());
      }
    }
  }
  return report;
}

std::vector<RPathCollection> enumerate_paths(const Interval& interval, int k) {
  check_path_k(k);
  if (k > interval.cols()) {
    throw DomainError("interval " + interval.to_string() + " has fewer than " +
                      std::to_string(k) + " columns");
  }
  if (k == 0) return {RPathCollection{}};
  if (binomial(interval.rows() + interval.cols() - 2, interval.rows() - 1) >
      kMaxSinglePaths) {
    throw DomainError("refusing to enumerate paths in " + interval.to_string());
  }
  std::vector<std::vector<std::vector<Cell>>> candidates;
  for (int t = 0; t < k; ++t) {
    const Cell from{interval.i1, interval.j1 + t};
    const Cell to{interval.i2, interval.j2 - k + 1 + t};
    std::vector<std::vector<Cell>> paths;
    std::vector<Cell> prefix;
    if (from.j <= to.j) collect_r_paths(from, to, prefix, paths);
    candidates.push_back(std::move(paths));
  }
  std::vector<RPathCollection> out;
  disjoint_families(
      candidates, [](const std::vector<Cell>& p) { return p; },
      [&](const std::vector<std::vector<Cell>>& family) {
        out.push_back(RPathCollection{family});
      });
  return out;
}

Rational collection_weight(const RPathCollection& collection, const Labeling& x,
                           const ToggleAlgebra& alg) {
  Rational w = alg.identity;
  for (const auto& path : collection.paths) {
    for (const Cell& c : path) w = alg.product(w, x.at(c));
  }
  return w;
}

Rational w_interval_oracle(const Labeling& x, const Interval& interval, int k,
                           const ToggleAlgebra& alg) {
  const auto families = enumerate_paths(interval, k);
  if (families.empty()) {
    throw DomainError("no path families of size " + std::to_string(k) + " in " +
                      interval.to_string());
  }
  Rational total = collection_weight(families.front(), x, alg);
  for (std::size_t f = 1; f < families.size(); ++f) {
    total = alg.combine_below(total, collection_weight(families[f], x, alg));
  }
  return total;
}

std::vector<GRPathCollection> enumerate_gr_paths(const GRGraph& graph, int i,
                                                 int j, int k) {
  check_path_k(k);
  const int n = graph.boundary_size();
  if (k > 0 && (i < 1 || j < 1 || i + k - 1 > n || j + k - 1 > n)) {
    throw DomainError("boundary family out of range");
  }
  const int rows = graph.rect().r + 1;
  const int cols = graph.rect().s;
  std::vector<std::vector<GRPath>> candidates;
  for (int t = 0; t < k; ++t) {
    const Cell from = graph.source(i + t);
    const Cell to = graph.sink(j + t);
    // Count first so the guard fires before any allocation.
    std::vector<long> count(static_cast<std::size_t>(rows * cols), 0);
    auto slot = [cols](const Cell& v) {
      return static_cast<std::size_t>((v.i - 1) * cols + (v.j - 1));
    };
    count[slot(from)] = 1;
    for (int row = from.i; row < rows; ++row) {
      for (int col = 1; col <= cols; ++col) {
        const long here = count[slot({row, col})];
        if (here == 0) continue;
        for (const auto& e : graph.out_edges({row, col})) {
          count[slot(e.to)] = std::min(count[slot(e.to)] + here, kMaxSinglePaths + 1);
        }
      }
    }
    if (count[slot(to)] > kMaxSinglePaths) {
      throw DomainError("refusing to enumerate more than " +
                        std::to_string(kMaxSinglePaths) + " paths in G_R");
    }
    std::vector<GRPath> paths;
    GRPath current{from, {}};
    auto walk = [&](auto&& self, const Cell& v) -> void {
      if (v == to) {
        paths.push_back(current);
        return;
      }
      if (v.i >= to.i) return;
      for (const auto& e : graph.out_edges(v)) {
        if (e.to.j < to.j) continue;
        current.edges.push_back(e);
        self(self, e.to);
        current.edges.pop_back();
      }
    };
    walk(walk, from);
    candidates.push_back(std::move(paths));
  }
  std::vector<GRPathCollection> out;
  disjoint_families(
      candidates, [](const GRPath& p) { return p.vertices(); },
      [&](const std::vector<GRPath>& family) {
        out.push_back(GRPathCollection{family});
      });
  return out;
}

Rational w_interval(const MinorArray& w, const Rect& rect,
                    const Interval& interval, int k) {
  Interval::make(rect, interval.i1, interval.i2, interval.j1, interval.j2);
  if (!interval.corner_anchored(rect)) {
    throw DomainError("interval " + interval.to_string() +
                      " is not corner-anchored; use the enumeration oracle");
  }
  if (k < 0 || k > interval.cols()) {
    throw DomainError("path count " + std::to_string(k) + " out of range for " +
                      interval.to_string());
  }
  const auto [i1, i2, j1, j2] = interval;
  const Rational numerator = w.at(i1 + j1 + k - 1, i2 + j1, j2 - j1 - k + 1);
  const Rational denominator = w.at(i1 + j1 - 1, i2 + j1, j2 - j1 + 1);
  return numerator / denominator;
}

Rational chain_sum(const Labeling& x, const Interval& interval,
                   const ToggleAlgebra& alg) {
  const Rect& rect = x.rect();
  Interval::make(rect, interval.i1, interval.i2, interval.j1, interval.j2);
  Labeling partial = x;
  for (const Cell& c : linear_extension(interval)) {
    std::vector<Rational> below;
    for (const Cell& d : rect.lower_covers(c)) {
      if (interval.contains(d)) below.push_back(partial[d]);
    }
    partial.set(c, alg.product(x[c], alg.fold_below(below)));
  }
  return partial[{interval.i2, interval.j2}];
}

GRPathCollection tile_bijection(const RPathCollection& collection,
                                const Interval& interval, int k,
                                const GRGraph& graph) {
  const Rect& rect = graph.rect();
  Interval::make(rect, interval.i1, interval.i2, interval.j1, interval.j2);
  if (!interval.corner_anchored(rect)) {
    throw DomainError("tile bijection needs a corner-anchored interval");
  }
  if (k < 0 || k > interval.cols() ||
      collection.paths.size() != static_cast<std::size_t>(k)) {
    throw DomainError("collection does not hold " + std::to_string(k) + " paths");
  }

  // Validate membership in P_I^(k) while marking occupied cells.
  CellSet occupied(rect);
  for (int t = 0; t < k; ++t) {
    const auto& path = collection.paths[static_cast<std::size_t>(t)];
    if (path.empty() || path.front() != Cell{interval.i1, interval.j1 + t} ||
        path.back() != Cell{interval.i2, interval.j2 - k + 1 + t}) {
      throw DomainError("path " + std::to_string(t) + " has wrong endpoints");
    }
    for (std::size_t v = 0; v < path.size(); ++v) {
      const Cell& c = path[v];
      if (!interval.contains(c) || occupied.contains(c)) {
        throw DomainError("paths leave the interval or intersect at (" +
                          c.to_string() + ")");
      }
      if (v > 0) {
        const Cell& p = path[v - 1];
        const bool step = (c.i == p.i + 1 && c.j == p.j) ||
                          (c.i == p.i && c.j == p.j + 1);
        if (!step) throw DomainError("path is not a monotone lattice path");
      }
      occupied.insert(c);
    }
  }

  const int width = interval.cols();
  const int first_source = interval.i1 + interval.j1 + k - 1;
  const int first_sink = interval.i2 + interval.j1;
  GRPathCollection out;
  for (int t = 0; t < width - k; ++t) {
    GRPath path{graph.source(first_source + t), {}};
    Cell v = path.start;
    auto step = [&](const Cell& to) {
      path.edges.push_back({v, to});
      v = to;
    };
    // Weight-1 lead-in down to row i1.
    while (v.i < interval.i1) step({v.i + 1, v.j - 1});
    if (v != Cell{interval.i1, interval.j1 + k + t}) {
      throw DomainError("lead-in missed the interval");
    }
    // One edge per row: vertical through a cell off the paths, else diagonal.
    for (int row = interval.i1; row <= interval.i2; ++row) {
      if (occupied.contains(v)) {
        step({v.i + 1, v.j - 1});
      } else {
        step({v.i + 1, v.j});
      }
    }
    const Cell target = graph.sink(first_sink + t);
    while (v != target) {
      if (v.i >= target.i || v.j <= target.j) {
        throw DomainError("lead-out missed its sink");
      }
      step({v.i + 1, v.j - 1});
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

}  // namespace rowmotion
