#include <doctest.h>

#include <vector>

#include "rowmotion/algebra.hpp"
#include "rowmotion/random.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(1, 21) + Rational(1, 33) == Rational(6, 77));
  CHECK((Rational(1, 21) + Rational(1, 33)).to_string() == "6/77");
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(Rational(5, 7) < Rational(8, 11));
  CHECK(-Rational(3) == Rational(-3));
  CHECK(Rational(4, -6).to_string() == "-2/3");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parsing and printing round trip") {
  for (const char* text : {"37/385", "-3", "112", "0", "123456789012345678901234567891/7"}) {
    CHECK(Rational::parse(text).to_string() == text);
  }
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/-2", " 1", "--1"}) {
    CHECK_THROWS_AS(Rational::parse(bad), DomainError);
  }
}

TEST_CASE("no overflow for large operands") {
  Rational big = Rational::parse("98765432109876543210987654321");
  Rational product = big * big * big;
  CHECK(product / big / big == big);
  CHECK((product + Rational(1, 3) - product) == Rational(1, 3));
}

TEST_CASE("parallel sum") {
  CHECK(parallel_sum(1, 1) == Rational(1, 2));
  CHECK(parallel_sum(2, 3) == Rational(6, 5));
  const auto alg = ToggleAlgebra::birational();
  const std::vector<Rational> terms = {Rational(1, 21), Rational(1, 33), Rational(1, 55)};
  CHECK(alg.fold_above(terms) == Rational(1, 109));
  CHECK_THROWS_AS(parallel_sum(0, 1), DomainError);
  CHECK_THROWS_AS(parallel_sum(-1, 2), DomainError);
}

TEST_CASE("parallel sum laws on random positive rationals") {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const Rational a = rng.positive_rational(50);
    const Rational b = rng.positive_rational(50);
    const Rational c = rng.positive_rational(50);
    CHECK(parallel_sum(a, b) == parallel_sum(b, a));
    CHECK(parallel_sum(parallel_sum(a, b), c) == parallel_sum(a, parallel_sum(b, c)));
    CHECK(parallel_sum(a, b).reciprocal() == a.reciprocal() + b.reciprocal());
  }
}

TEST_CASE("algebra instances") {
  const auto bir = ToggleAlgebra::birational();
  CHECK(bir.unit_below == 1);
  CHECK(bir.unit_above == 1);
  CHECK(bir.identity == 1);
  CHECK(bir.fold_below({}) == 1);
  CHECK(bir.fold_above({}) == 1);
  CHECK_THROWS_AS(bir.validate(0), DomainError);
  CHECK_THROWS_AS(bir.validate(Rational(-1, 2)), DomainError);
  CHECK_NOTHROW(bir.validate(Rational(1, 2)));

  const auto trop = ToggleAlgebra::tropical();
  CHECK(trop.unit_below == 0);
  CHECK(trop.unit_above == 1);
  CHECK(trop.identity == 0);
  CHECK(ToggleAlgebra::tropical(0).unit_above == 0);
  CHECK_NOTHROW(trop.validate(-5));
  CHECK(trop.combine_below(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(trop.combine_above(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(trop.product(Rational(1, 3), Rational(1, 2)) == Rational(5, 6));
  CHECK(trop.quotient(Rational(1, 3), Rational(1, 2)) == Rational(-1, 6));
}

TEST_CASE("algebra laws: associativity, commutativity, quotient inverts product") {
  Rng rng(5);
  for (const auto& alg : {ToggleAlgebra::birational(), ToggleAlgebra::tropical()}) {
    for (int n = 0; n < 100; ++n) {
      const Rational a = rng.positive_rational(30);
      const Rational b = rng.positive_rational(30);
      const Rational c = rng.positive_rational(30);
      for (auto op : {alg.combine_below, alg.combine_above, alg.product}) {
        CHECK(op(a, b) == op(b, a));
        CHECK(op(op(a, b), c) == op(a, op(b, c)));
      }
      CHECK(alg.quotient(alg.product(a, b), b) == a);
      CHECK(alg.product(a, alg.identity) == a);
    }
  }
}

}  // namespace rowmotion
