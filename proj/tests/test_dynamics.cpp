#include <doctest.h>

#include "oracles.hpp"
#include "rowmotion/dynamics.hpp"
#include "rowmotion/random.hpp"

namespace rowmotion {

namespace {

Labeling primes() { return Labeling(Rect{2, 3}, {2, 5, 11, 3, 7, 13}); }

bool in_order_polytope(const Labeling& x) {
  const Rect& rect = x.rect();
  for (const Cell& c : linear_extension(rect)) {
    if (x[c] < 0 || x[c] > 1) return false;
    for (const Cell& d : rect.upper_covers(c)) {
      if (x[c] > x[d]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("labelings") {
  const Labeling x = primes();
  CHECK(x[{1, 3}] == 11);
  CHECK(x[{2, 1}] == 3);
  CHECK(x.transposed()[{3, 1}] == 11);
  CHECK(x.transposed().transposed() == x);
  CHECK_THROWS_AS(x.at({3, 1}), DomainError);
  CHECK_THROWS_AS(Labeling(Rect{2, 2}, {1, 2, 3}), DomainError);
  CHECK_THROWS_AS(Labeling(Rect{1, 2}, std::vector<Rational>{1, 0}).validate(ToggleAlgebra::birational()),
                  DomainError);
}

TEST_CASE("single-cell toggles") {
  const auto bir = ToggleAlgebra::birational();
  CHECK(toggle(Labeling(Rect{1, 1}, Rational(5)), {1, 1}, bir)[{1, 1}] == Rational(1, 5));
  const auto trop = ToggleAlgebra::tropical();
  CHECK(toggle(Labeling(Rect{1, 1}, Rational(1, 3)), {1, 1}, trop)[{1, 1}] == Rational(2, 3));
  CHECK_THROWS_AS(toggle(Labeling(Rect{1, 1}, Rational(-1)), {1, 1}, bir), DomainError);
}

TEST_CASE("a toggle changes exactly one coordinate and is an involution") {
  const auto x = random_labeling(Rect{3, 4}, 17);
  for (const auto& alg : {ToggleAlgebra::birational(), ToggleAlgebra::tropical()}) {
    for (const Cell& p : linear_extension(x.rect())) {
      const auto once = toggle(x, p, alg);
      for (const Cell& q : linear_extension(x.rect())) {
        if (q != p) CHECK(once[q] == x[q]);
      }
      CHECK(toggle(once, p, alg) == x);
    }
  }
}

TEST_CASE("labeling toggles commute off cover pairs") {
  const auto x = random_labeling(Rect{3, 3}, 3);
  const auto cells = linear_extension(x.rect());
  for (const auto& alg : {ToggleAlgebra::birational(), ToggleAlgebra::tropical()}) {
    for (const Cell& p : cells) {
      for (const Cell& q : cells) {
        const bool cover = std::abs(p.i - q.i) + std::abs(p.j - q.j) == 1;
        if (cover) continue;
        CHECK(toggle(toggle(x, p, alg), q, alg) == toggle(toggle(x, q, alg), p, alg));
      }
    }
  }
}

TEST_CASE("rowmotion and its inverse") {
  const auto bir = ToggleAlgebra::birational();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto y = random_labeling(Rect{3, 3}, seed);
    CHECK(rowmotion(rowmotion_inverse(y, bir), bir) == y);
    CHECK(rowmotion_inverse(rowmotion(y, bir), bir) == y);
    CHECK(rowmotion(y, bir, reversed_rank_extension(y.rect())) == rowmotion(y, bir));
    CHECK(rowmotion_power(y, -2, bir) == rowmotion_inverse(rowmotion_inverse(y, bir), bir));
  }
}

TEST_CASE("worked example on the primes") {
  const auto bir = ToggleAlgebra::birational();
  const auto y = transfer_inverse(primes(), bir);
  CHECK(y[{2, 2}] == 112);
  CHECK(y[{1, 1}] == 2);
  CHECK(y[{2, 3}] == 2886);
  CHECK(rowmotion_inverse(y, bir)[{2, 2}] == 1170);
}

TEST_CASE("transfer inverse is the maximal chain sum of the lower interval") {
  const auto bir = ToggleAlgebra::birational();
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto x = random_labeling(Rect{3, 4}, seed);
    const auto y = transfer_inverse(x, bir);
    const auto z = dual_transfer_inverse(x, bir);
    for (const Cell& c : linear_extension(x.rect())) {
      CHECK(y[c] == oracle::maximal_chain_sum(x, 1, c.i, 1, c.j));
      CHECK(z[c] == oracle::maximal_chain_sum(x, c.i, 3, c.j, 4));
    }
  }
}

TEST_CASE("dual transfer on the primes") {
  const auto bir = ToggleAlgebra::birational();
  const auto z = dual_transfer_inverse(primes(), bir);
  CHECK(z[{1, 1}] == 546 + 910 + 1430);
  CHECK(dual_transfer_inverse(Labeling(Rect{1, 1}, Rational(7)), bir)[{1, 1}] == 7);
}

TEST_CASE("transfer maps round trip") {
  for (const auto& alg : {ToggleAlgebra::birational(), ToggleAlgebra::tropical()}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto x = random_labeling(Rect{4, 4}, seed);
      CHECK(transfer(transfer_inverse(x, alg), alg) == x);
      CHECK(transfer_inverse(transfer(x, alg), alg) == x);
      CHECK(dual_transfer(dual_transfer_inverse(x, alg), alg) == x);
      CHECK(dual_transfer_inverse(dual_transfer(x, alg), alg) == x);
    }
  }
}

TEST_CASE("rowmotion of the transfer inverse is reciprocal to the dual transfer inverse") {
  const auto bir = ToggleAlgebra::birational();
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; s <= 5; ++s) {
      const auto x = random_labeling(Rect{r, s}, derive_seed(99, r, s));
      const auto lhs = rowmotion(transfer_inverse(x, bir), bir);
      const auto rhs = dual_transfer_inverse(x, bir);
      for (const Cell& c : linear_extension(x.rect())) CHECK(lhs[c] * rhs[c] == 1);
    }
  }
}

TEST_CASE("partial rowmotion") {
  const auto bir = ToggleAlgebra::birational();
  const auto x = random_labeling(Rect{3, 4}, 8);
  CHECK(partial_rowmotion(x, x.rect().whole(), bir) == rowmotion(x, bir));
  CHECK(partial_rowmotion_inverse(x, x.rect().whole(), bir) == rowmotion_inverse(x, bir));
  CHECK(partial_rowmotion(x, Interval{2, 2, 3, 3}, bir) == toggle(x, {2, 3}, bir));
  const Interval inner{1, 2, 1, 3};
  const auto moved = partial_rowmotion(x, inner, bir);
  for (const Cell& c : linear_extension(x.rect())) {
    if (!inner.contains(c)) CHECK(moved[c] == x[c]);
  }
  CHECK(partial_rowmotion_inverse(moved, inner, bir) == x);
}

TEST_CASE("birational rowmotion has order r+s") {
  const auto bir = ToggleAlgebra::birational();
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; r + s <= 9 && s <= 5; ++s) {
      const auto y = transfer_inverse(random_labeling(Rect{r, s}, derive_seed(5, r, s)), bir);
      CHECK(rowmotion_power(y, r + s, bir) == y);
      if (r + s > 2) CHECK(rowmotion_power(y, 1, bir) != y);
    }
  }
}

TEST_CASE("piecewise-linear rowmotion has order r+s on the order polytope") {
  const auto trop = ToggleAlgebra::tropical();
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; r + s <= 8; ++s) {
      for (std::uint64_t t = 0; t < 3; ++t) {
        const auto y = random_order_point(Rect{r, s}, derive_seed(2, r, s, t));
        REQUIRE(in_order_polytope(y));
        CHECK(in_order_polytope(rowmotion(y, trop)));
        CHECK(rowmotion_power(y, r + s, trop) == y);
      }
    }
  }
}

TEST_CASE("orbit table") {
  const auto bir = ToggleAlgebra::birational();
  const auto y = transfer_inverse(primes(), bir);
  OrbitTable table(y, bir);
  CHECK_FALSE(table.periodic().has_value());
  CHECK(table.power(-1)[{2, 2}] == 1170);
  CHECK(table.power(-7)[{2, 2}] == Rational(1, 10));
  REQUIRE(table.periodic().has_value());
  CHECK(*table.periodic());
  CHECK(table.power(12) == table.power(2));
  CHECK(table.power(0) == y);
}

}  // namespace rowmotion
