#include "isohopf/rational.hpp"

#include <climits>

#include "isohopf/error.hpp"

namespace isohopf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(Errc::ParseError, "empty number");
  Rational q;
  if (q.set_str(s, 10) != 0) fail(Errc::ParseError, "bad number '" + s + "'");
  if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    fail(Errc::NonIntegerRatio, "value " + q.get_str() + " is not a machine integer");
  return q.get_num().get_si();
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

Gauss operator/(const Gauss& a, const Gauss& b) {
  Rational n = b.norm();
  if (sgn(n) == 0) fail(Errc::Singular, "division by zero");
  Gauss num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string to_string(const Gauss& z) {
  if (z.is_real()) return z.re.get_str();
  if (sgn(z.re) == 0) return z.im.get_str() + "*i";
  std::string out = z.re.get_str();
  out += sgn(z.im) < 0 ? " - " : " + ";
  out += Rational(abs(z.im)).get_str() + "*i";
  return out;
}

}  // namespace isohopf
