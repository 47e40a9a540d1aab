#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace isohopf {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "3", "-3", "3/4"; result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
long to_long(const Rational& q);  // throws NonIntegerRatio unless integral and in range

// Exact square root when q is a square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

// Gaussian rationals a + b i.
struct Gauss {
  Rational re;
  Rational im;

  Gauss() = default;
  Gauss(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  Gauss(int r) : re(r), im(0) {}                  // NOLINT
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gauss conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b);
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  Gauss& operator+=(const Gauss& b) { return *this = *this + b; }
  Gauss& operator-=(const Gauss& b) { return *this = *this - b; }
  Gauss& operator*=(const Gauss& b) { return *this = *this * b; }
};

std::string to_string(const Gauss& z);

}  // namespace isohopf
