#include "gossez/rational.hpp"

#include <cctype>
#include <cmath>

#include "gossez/errors.hpp"

namespace gossez {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("Rational::from_double: non-finite value");
  Rational r;
  r.q_ = mpq_class(v);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("invalid rational \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();

  auto is_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  if (num.front() == '+') num.remove_prefix(1);

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw bad();

  Rational r;
  r.q_ = mpq_class(n, d);
  r.q_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace gossez
