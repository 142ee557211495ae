#include "surfsing/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "surfsing/error.hpp"

namespace surfsing {

std::string to_string(const BigInt& value) { return value.get_str(); }

static_assert(sizeof(long) == sizeof(std::int64_t), "gmpxx long constructors must cover int64");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ContractViolation("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ContractViolation("rational with zero denominator");
  if (den == std::numeric_limits<std::int64_t>::min() || num == std::numeric_limits<std::int64_t>::min()) {
    return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  Rational out;
  mpq_set_si(out.value_.get_mpq_t(), static_cast<long>(num / g), static_cast<unsigned long>(den / g));
  return out;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  const std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto is_integer_literal = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw ParseError(0, "rational", "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(num[0] == '+' ? num.substr(1) : num, 10);
  BigInt d(den, 10);
  if (d == 0) throw ParseError(0, "rational", "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw ContractViolation("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace surfsing
