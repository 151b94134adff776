#include "starq/rational.hpp"

#include <cctype>
#include <ostream>

#include "starq/errors.hpp"

namespace starq {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw ParseError("zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const char* msg) -> Rational { throw ParseError(msg, i); };

  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t start = i;
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
  if (digits == 0) return fail("expected a rational number");
  std::string num(text.substr(start, i - start));

  std::string den = "1";
  if (i < n && text[i] == '/') {
    ++i;
    std::size_t dstart = i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) return fail("expected a denominator");
    den.assign(text.substr(dstart, i - dstart));
  }
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != n) return fail("trailing characters after rational");

  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    return fail("malformed rational");
  if (v.get_den() == 0) throw ParseError("zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw Error("zero to a negative power");
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(), k);
  out.canonicalize();
  if (invert) out = 1 / out;
  return Rational(std::move(out));
}

Rational Rational::factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace starq
