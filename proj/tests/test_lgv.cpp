#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rowmotion/lgv.hpp"
#include "rowmotion/random.hpp"

namespace rowmotion {

namespace {

Labeling primes() { return Labeling(Rect{2, 3}, {2, 5, 11, 3, 7, 13}); }

Rational product_of(const Labeling& x, const Interval& interval) {
  Rational p(1);
  for (const Cell& c : linear_extension(interval)) p *= x[c];
  return p;
}

std::vector<Interval> corner_anchored_intervals(const Rect& rect) {
  std::vector<Interval> out;
  for (int i1 = 1; i1 <= rect.r; ++i1) {
    for (int i2 = i1; i2 <= rect.r; ++i2) {
      for (int j1 = 1; j1 <= rect.s; ++j1) {
        for (int j2 = j1; j2 <= rect.s; ++j2) {
          const Interval interval{i1, i2, j1, j2};
          if (interval.corner_anchored(rect)) out.push_back(interval);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the graph G_R") {
  const GRGraph g(primes());
  CHECK(g.edges().size() == 10);
  CHECK(g.edge_weight({{1, 1}, {2, 1}}) == Rational(1, 2));
  CHECK(g.edge_weight({{2, 3}, {3, 2}}) == 1);
  CHECK(g.source(1) == Cell{1, 1});
  CHECK(g.source(3) == Cell{1, 3});
  CHECK(g.source(4) == Cell{2, 3});
  CHECK(g.sink(2) == Cell{2, 1});
  CHECK(g.sink(3) == Cell{3, 1});
  CHECK(g.sink(5) == Cell{3, 3});

  const GRGraph single(Labeling(Rect{1, 1}, Rational(4)));
  REQUIRE(single.edges().size() == 1);
  CHECK(single.edges().front() == GREdge{{1, 1}, {2, 1}});
  CHECK(single.edge_weight(single.edges().front()) == Rational(1, 4));
  CHECK_THROWS_AS(GRGraph(Labeling(Rect{1, 1}, Rational(0))), DomainError);
}

TEST_CASE("path matrix entries on the primes") {
  const auto a = path_matrix(GRGraph(primes()));
  CHECK(a(0, 1) == Rational(1, 2));
  CHECK(a(1, 2) == Rational(8, 15));
  CHECK(a(0, 4) == 0);
  for (int i = 0; i < 5; ++i) CHECK(a(i, i) == 1);
}

TEST_CASE("path matrix equals explicit path sums") {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const auto x = random_labeling(Rect{r, s}, derive_seed(4, r, s));
      const GRGraph g(x);
      const auto a = path_matrix(g);
      for (int i = 1; i <= r + s; ++i) {
        for (int j = 1; j <= r + s; ++j) {
          CHECK(a(i - 1, j - 1) == oracle::gr_path_sum(x, g.source(i), g.sink(j)));
        }
      }
    }
  }
}

TEST_CASE("minors on the primes") {
  const MinorArray w(primes());
  CHECK(w.at(1, 3, 2) == Rational(1, 210));
  CHECK(w.at(2, 4, 2) == Rational(1, 5005));
  CHECK(w.at(3, 3, 1) == 1);
  CHECK(w.at(2, 3, 2) == Rational(37, 385));
  CHECK(w.at(4, 4, 0) == 1);
  CHECK(w.at(1, 1, -1) == 0);
  CHECK(w.at(9, 9, 1) == 0);
}

TEST_CASE("minors equal brute-force nonintersecting families in G_R") {
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; r + s <= 7; ++s) {
      const auto x = random_labeling(Rect{r, s}, derive_seed(6, r, s));
      const GRGraph g(x);
      const MinorArray w(x);
      const int n = r + s;
      RationalMatrix a(n, n);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = oracle::gr_path_sum(x, g.source(i), g.sink(j));
      }
      for (int k = 1; k <= std::min(3, n); ++k) {
        for (int i = 1; i + k - 1 <= n; ++i) {
          for (int j = 1; j + k - 1 <= n; ++j) {
            Rational families(0);
            for (const auto& c : enumerate_gr_paths(g, i, j, k)) families += g.weight(c);
            CHECK(w.at(i, j, k) == families);
            CHECK(w.at(i, j, k) == oracle::leibniz_det(a.solid_submatrix(i, j, k)));
          }
        }
      }
    }
  }
}

TEST_CASE("structural zeros and ones of the minor array") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const MinorArray w(random_labeling(Rect{r, s}, derive_seed(8, r, s)));
      const int n = r + s;
      for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n + 1 - k; ++i) {
          for (int j = 1; j <= n + 1 - k; ++j) {
            if (!w.at(i, j, k).is_zero()) CHECK((i <= j && j <= i + r));
            if (i == j) CHECK(w.at(i, j, k) == 1);
            if (i < j && k > s) CHECK(w.at(i, j, k).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("octahedron recurrence and array toggles") {
  const MinorArray w(primes());
  CHECK(octahedron_check(w).ok());
  CHECK(array_toggle_check(w, Rect{2, 3}).ok());
  CHECK(array_toggle_check(w, Rect{2, 3}).checked > 0);
  CHECK(octahedron_check(MinorArray(Labeling(Rect{1, 1}, Rational(3)))).ok());
  const auto x = random_labeling(Rect{3, 3}, 21);
  CHECK(octahedron_check(MinorArray(x)).ok());
  CHECK(array_toggle_check(MinorArray(x), x.rect()).ok());
}

TEST_CASE("a perturbed minor breaks the recurrence") {
  MinorArray w(primes());
  w.set(2, 3, 2, w.at(2, 3, 2) + 1);
  const auto report = octahedron_check(w);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.violations.front().where.empty());
  CHECK_FALSE(array_toggle_check(w, Rect{2, 3}).ok());
}

TEST_CASE("determinants agree with the Leibniz expansion and satisfy Desnanot-Jacobi") {
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 6;
    const auto m = random_integer_matrix(n, derive_seed(31, t));
    RationalMatrix q(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) q(a, b) = Rational(m(a, b), mpz_class(1));
    }
    if (n <= 5) CHECK(determinant(q) == oracle::leibniz_det(q));
    CHECK(Rational(bareiss_determinant(m), mpz_class(1)) == determinant(q));
    if (n < 2) continue;
    const MinorArray w(q);
    auto d = [&](int i, int j, int k) { return w.at(i, j, k); };
    for (int k = 1; k < n; ++k) {
      for (int i = 1; i + k <= n; ++i) {
        for (int j = 1; j + k <= n; ++j) {
          CHECK(d(i, j, k + 1) * d(i + 1, j + 1, k - 1) ==
                d(i, j, k) * d(i + 1, j + 1, k) - d(i, j + 1, k) * d(i + 1, j, k));
        }
      }
    }
  }
  CHECK(bareiss_determinant(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("path enumeration on the primes") {
  const Labeling x = primes();
  const Interval whole = x.rect().whole();
  const auto one = enumerate_paths(whole, 1);
  CHECK(one.size() == 3);
  Rational total(0);
  for (const auto& c : one) total += collection_weight(c, x);
  CHECK(total == 2886);
  const auto two = enumerate_paths(whole, 2);
  REQUIRE(two.size() == 1);
  CHECK(collection_weight(two.front(), x) == 30030);
  const auto none = enumerate_paths(whole, 0);
  REQUIRE(none.size() == 1);
  CHECK(collection_weight(none.front(), x) == 1);
  CHECK_THROWS_AS(enumerate_paths(whole, 7), DomainError);
}

TEST_CASE("interval quotients on the primes") {
  const Labeling x = primes();
  const MinorArray w(x);
  CHECK(w_interval(w, x.rect(), x.rect().whole(), 1) == 2886);
  CHECK(w_interval(w, x.rect(), Interval{1, 2, 2, 3}, 1) == 455 + 715);
  CHECK(w_interval(w, x.rect(), x.rect().whole(), 2) == 30030);
  CHECK(w_interval(w, x.rect(), x.rect().whole(), 3) == 30030);
  CHECK(chain_sum(x, Interval{1, 2, 2, 3}) == 1170);
  CHECK_THROWS_AS(w_interval(w, x.rect(), Interval{1, 1, 2, 2}, 1), DomainError);
}

TEST_CASE("interval quotients equal the family oracle on corner-anchored intervals") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const auto x = random_labeling(Rect{r, s}, derive_seed(12, r, s));
      const MinorArray w(x);
      for (const auto& interval : corner_anchored_intervals(x.rect())) {
        for (int k = 0; k <= interval.cols(); ++k) {
          const auto expected = oracle::family_sum(x, interval.i1, interval.i2, interval.j1,
                                                   interval.j2, k);
          CHECK(w_interval(w, x.rect(), interval, k) == expected.value_or(Rational(0)));
        }
        CHECK(chain_sum(x, interval) ==
              oracle::maximal_chain_sum(x, interval.i1, interval.i2, interval.j1, interval.j2));
      }
    }
  }
}

TEST_CASE("family sums are invariant under transposition") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const auto x = random_labeling(Rect{r, s}, derive_seed(13, r, s));
      const auto xt = x.transposed();
      for (int k = 1; k <= std::min(r, s); ++k) {
        CHECK(w_interval_oracle(x, x.rect().whole(), k) ==
              w_interval_oracle(xt, xt.rect().whole(), k));
      }
    }
  }
}

TEST_CASE("tile bijection on the primes") {
  const Labeling x = primes();
  const GRGraph g(x);
  const Interval whole = x.rect().whole();
  std::set<GRPathCollection> images;
  Rational total(0);
  for (const auto& c : enumerate_paths(whole, 1)) {
    const auto image = tile_bijection(c, whole, 1, g);
    CHECK(g.weight(image) == collection_weight(c, x) / 30030);
    images.insert(image);
    total += g.weight(image);
  }
  CHECK(images.size() == 3);
  CHECK(total == Rational(37, 385));

  const auto pair = enumerate_paths(whole, 2).front();
  CHECK(g.weight(tile_bijection(pair, whole, 2, g)) == 1);
  const auto empty = tile_bijection(RPathCollection{}, whole, 0, g);
  CHECK(g.weight(empty) == Rational(1, 30030));
}

TEST_CASE("tile bijection is a weight-scaling bijection onto G_R families") {
  for (const Rect rect : {Rect{2, 2}, Rect{2, 3}, Rect{3, 2}, Rect{3, 3}}) {
    const auto x = random_labeling(rect, derive_seed(14, rect.r, rect.s));
    const GRGraph g(x);
    for (const auto& interval : corner_anchored_intervals(rect)) {
      const Rational full = product_of(x, interval);
      for (int k = 0; k <= interval.cols(); ++k) {
        std::set<GRPathCollection> images;
        for (const auto& c : enumerate_paths(interval, k)) {
          const auto image = tile_bijection(c, interval, k, g);
          CHECK(g.weight(image) == collection_weight(c, x) / full);
          images.insert(image);
        }
        const int m = interval.cols() - k;
        const auto targets = enumerate_gr_paths(g, interval.i1 + interval.j1 + k - 1,
                                                interval.i2 + interval.j1, m);
        CHECK(images == std::set<GRPathCollection>(targets.begin(), targets.end()));
      }
    }
  }
}

TEST_CASE("malformed collections are rejected by the tile bijection") {
  const Labeling x = primes();
  const GRGraph g(x);
  const Interval whole = x.rect().whole();
  RPathCollection bad{{{{1, 1}, {2, 2}, {2, 3}}}};
  CHECK_THROWS_AS(tile_bijection(bad, whole, 1, g), DomainError);
  RPathCollection short_path{{{{1, 1}, {1, 2}}}};
  CHECK_THROWS_AS(tile_bijection(short_path, whole, 1, g), DomainError);
  CHECK_THROWS_AS(tile_bijection(enumerate_paths(whole, 1).front(), Interval{1, 1, 2, 2}, 1, g),
                  DomainError);
}

}  // namespace rowmotion
