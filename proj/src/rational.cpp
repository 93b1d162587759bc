#include "mgn/rational.hpp"

#include <ostream>

#include "mgn/error.hpp"

namespace mgn {

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s, 10);
    } else {
      num = BigInt(s.substr(0, slash), 10);
      den = BigInt(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw SchemaError("not an exact rational: \"" + s + "\"");
  }
  if (den == 0) throw SchemaError("zero denominator in \"" + s + "\"");
  return Rational(num, den);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw InvariantError("expected an integer, got " + str());
  return q_.get_num();
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::short_str() const {
  return is_integer() ? q_.get_num().get_str() : str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.short_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace mgn
