#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always kept in lowest terms with a positive denominator; zero
// is 0/1. The textual form is "p/q", with "/q" omitted when q == 1.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rowmotion {

/// Raised when an operation leaves its mathematical domain (division by
/// zero, nonpositive birational label, malformed input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "[+-]digits[/digits]". Throws DomainError on malformed input or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_positive() const { return sgn(value_) > 0; }
  int sign() const { return sgn(value_); }

  Rational reciprocal() const;
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DomainError if `other` is zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// a ∥ b = ab / (a + b). Both operands must be strictly positive.
Rational parallel_sum(const Rational& a, const Rational& b);

}  // namespace rowmotion

template <>
struct std::hash<rowmotion::Rational> {
  std::size_t operator()(const rowmotion::Rational& value) const noexcept {
    return value.hash();
  }
};
