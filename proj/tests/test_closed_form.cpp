#include <doctest.h>

#include "rowmotion/closed_form.hpp"
#include "rowmotion/random.hpp"

namespace rowmotion {

namespace {

Labeling primes() { return Labeling(Rect{2, 3}, {2, 5, 11, 3, 7, 13}); }

}  // namespace

TEST_CASE("part (a) at the primes") {
  const ClosedForm cf(primes());
  CHECK(cf.rho_power_a({2, 2}, 0) == 112);
  CHECK(cf.rho_power_a({2, 2}, 1) == 1170);
  CHECK(cf.rho_power_a({1, 1}, 0) == 2);
  CHECK_THROWS_AS(cf.rho_power_a({2, 2}, 2), RangeError);
  CHECK_THROWS_AS(cf.rho_power_a({2, 2}, -1), RangeError);
}

TEST_CASE("part (b) at the primes") {
  const ClosedForm cf(primes());
  CHECK(cf.rho_power_b({2, 2}, 3) == Rational(1, 10));
  CHECK(cf.rho_power_b({2, 2}, 2) == Rational(37, 385));
  CHECK(cf.rho_power_b({2, 2}, 1) == Rational(1, 91));
  CHECK_THROWS_AS(cf.rho_power_b({2, 2}, 0), RangeError);
  CHECK_THROWS_AS(cf.rho_power_b({2, 2}, 4), RangeError);
}

TEST_CASE("any exponent at the primes") {
  const ClosedForm cf(primes());
  const std::vector<Rational> expected = {112, 1170, Rational(1, 10), Rational(37, 385),
                                          Rational(1, 91)};
  for (int k = 0; k < 5; ++k) {
    CHECK(cf.rho_power_any({2, 2}, -k) == expected[static_cast<std::size_t>(k)]);
  }
  CHECK(cf.rho_power_any({2, 2}, -7) == Rational(1, 10));
  CHECK(cf.rho_power_any({2, 2}, 13) == Rational(1, 10));
  CHECK_THROWS_AS(cf.rho_power_any({3, 1}, 0), DomainError);
}

TEST_CASE("worked example values also come out of the toggles") {
  const auto bir = ToggleAlgebra::birational();
  const auto y = transfer_inverse(primes(), bir);
  const std::vector<Rational> expected = {112, 1170, Rational(1, 10), Rational(37, 385),
                                          Rational(1, 91)};
  for (int k = 0; k < 5; ++k) {
    CHECK(rowmotion_power(y, -k, bir)[{2, 2}] == expected[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("closed form equals iterated toggles over a full period") {
  const auto bir = ToggleAlgebra::birational();
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const auto x = random_labeling(Rect{r, s}, derive_seed(40, r, s));
      const ClosedForm cf(x);
      const auto y = transfer_inverse(x, bir);
      CHECK(cf.power(0) == y);
      Labeling step = y;
      for (int k = 0; k <= r + s; ++k) {
        CHECK(cf.power(-k) == step);
        step = rowmotion_inverse(step, bir);
      }
      CHECK(cf.power(1) == rowmotion(y, bir));
    }
  }
}

TEST_CASE("closed form is periodic and both routes agree on the seam") {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 4; ++s) {
      const ClosedForm cf(random_labeling(Rect{r, s}, derive_seed(41, r, s)));
      const int n = r + s;
      for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= s; ++j) {
          for (int k = -2 * n; k <= 2 * n; ++k) {
            CHECK(cf.rho_power_any({i, j}, k) == cf.rho_power_any({i, j}, k + n));
          }
          // Reflecting twice lands r+s exponents lower.
          for (int k = 1; k < i + j; ++k) {
            const Cell antipode{r + 1 - i, s + 1 - j};
            const int reflected = k - i - j + 1;
            CHECK(cf.rho_power_b({i, j}, k) ==
                  cf.rho_power_any(antipode, reflected).reciprocal());
            CHECK(cf.rho_power_any(antipode, reflected) ==
                  cf.rho_power_any(antipode, reflected - n));
          }
          if (i + j - 1 <= n - i - j) {
            CHECK(cf.rho_power_a({i, j}, 0) == cf.rho_power_any({i, j}, 0));
          }
        }
      }
    }
  }
}

TEST_CASE("closed form over a precomputed minor array") {
  const auto x = primes();
  const ClosedForm cf(x.rect(), MinorArray(x));
  CHECK(cf.rho_power_any({2, 2}, -1) == 1170);
  CHECK_THROWS_AS(ClosedForm(Rect{3, 3}, MinorArray(x)), DomainError);
}

TEST_CASE("array shift") {
  const auto bir = ToggleAlgebra::birational();
  const auto x = primes();
  CHECK(array_shift_check(x).ok());
  CHECK(array_shift_check(random_labeling(Rect{3, 3}, 42)).ok());
  const auto shifted = transfer(rowmotion_inverse(transfer_inverse(x, bir), bir), bir);
  CHECK(MinorArray(shifted).at(1, 2, 1) == Rational(8, 15));
  CHECK(MinorArray(x).at(2, 3, 1) == Rational(8, 15));
}

}  // namespace rowmotion
