#include "rowmotion/rational.hpp"

#include <cctype>
#include <ostream>

namespace rowmotion {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("malformed rational '" + std::string(original) + "'");
  }
  mpz_class p(std::string(num), 10);
  const mpz_class q(std::string(den), 10);
  if (negative) p = -p;
  return Rational(p, q);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

std::string Rational::to_string() const {
  std::string out = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    out += '/';
    out += value_.get_den().get_str();
  }
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Residues keep this cheap for large values; equal rationals share them.
  const std::size_t n = mpz_fdiv_ui(value_.get_num_mpz_t(), 1000000007UL);
  const std::size_t d = mpz_fdiv_ui(value_.get_den_mpz_t(), 998244353UL);
  return n * 31U + d + static_cast<std::size_t>(sgn(value_) + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Rational parallel_sum(const Rational& a, const Rational& b) {
  if (!a.is_positive() || !b.is_positive()) {
    throw DomainError("parallel sum requires positive operands, got " +
                      a.to_string() + " and " + b.to_string());
  }
  return a * b / (a + b);
}

}  // namespace rowmotion
