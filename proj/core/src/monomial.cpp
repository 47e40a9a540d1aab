#include "isohopf/monomial.hpp"

#include <algorithm>

namespace isohopf {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

Monomial Monomial::var(std::size_t i, unsigned power) {
  Monomial m;
  m.exp[i] = static_cast<std::uint16_t>(power);
  return m;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case Kind::GrevLex:
      return grevlex_range(a, b, 0, kMaxVars);
    case Kind::Block: {
      int c = grevlex_range(a, b, 0, split_);
      if (c != 0) return c;
      return grevlex_range(a, b, split_, kMaxVars);
    }
  }
  return 0;
}

}  // namespace isohopf
