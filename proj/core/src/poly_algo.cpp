#include "isohopf/poly_algo.hpp"

#include "isohopf/error.hpp"

namespace isohopf {

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) fail(Errc::InvalidArgument, "division by the zero polynomial");
  const auto order = MonomialOrder::lex();
  const Monomial lq = q.leading_monomial(order);
  const Rational cq = q.terms().at(lq);
  MultiPoly r = p;
  MultiPoly quot(p.ring());
  while (!r.is_zero()) {
    Monomial lr = r.leading_monomial(order);
    if (!lq.divides(lr)) return std::nullopt;
    Monomial m = lr / lq;
    Rational c = r.terms().at(lr) / cq;
    quot.add_term(m, c);
    r -= q.mul_term(m, c);
  }
  return quot;
}

MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) fail(Errc::NotDivisible, format_poly(q) + " does not divide " + format_poly(p));
  return *r;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  int d = p.degree_in(var);
  std::vector<MultiPoly> out(d < 0 ? 0 : d + 1, MultiPoly(p.ring()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.exp[var] = 0;
    out[m.exp[var]].add_term(rest, c);
  }
  return out;
}

namespace {

using UPoly = std::vector<MultiPoly>;  // coefficients in main variable, low to high

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

MultiPoly from_upoly(const UPoly& a, std::size_t var, const RingPtr& ring) {
  MultiPoly r(ring);
  for (std::size_t k = 0; k < a.size(); ++k) r += a[k].mul_term(Monomial::var(var, k), 1);
  return r;
}

UPoly prem(UPoly a, const UPoly& b) {
  const MultiPoly& lb = b.back();
  int db = udeg(b);
  int e = udeg(a) - db + 1;
  while (!a.empty() && udeg(a) >= db) {
    MultiPoly la = a.back();
    int shift = udeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    --e;
  }
  if (e > 0) {
    MultiPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

MultiPoly content_of(const UPoly& a) {
  std::vector<MultiPoly> cs(a.begin(), a.end());
  return poly_gcd(cs);
}

std::optional<std::size_t> main_variable(const MultiPoly& p, const MultiPoly& q) {
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
  return std::nullopt;
}

MultiPoly normalize(const MultiPoly& p) { return p.monic(MonomialOrder::grevlex()); }

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.ring() && q.ring() && !same_ring(p.ring(), q.ring()))
    fail(Errc::RingMismatch, "gcd of polynomials in different rings");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  RingPtr ring = p.ring();
  auto v = main_variable(p, q);
  if (!v) return MultiPoly::constant(ring, 1);
  std::size_t x = *v;
  if (p.degree_in(x) == 0 || q.degree_in(x) == 0) {
    const MultiPoly& free = p.degree_in(x) == 0 ? p : q;
    const MultiPoly& other = p.degree_in(x) == 0 ? q : p;
    MultiPoly g = free;
    for (const auto& c : coefficients_in(other, x)) {
      if (c.is_zero()) continue;
      g = poly_gcd(g, c);
      if (g.is_constant()) break;
    }
    return normalize(g);
  }
  UPoly a = coefficients_in(p, x);
  UPoly b = coefficients_in(q, x);
  MultiPoly ca = content_of(a), cb = content_of(b);
  for (auto& c : a) c = divide_or_throw(c, ca);
  for (auto& c : b) c = divide_or_throw(c, cb);
  MultiPoly cont = poly_gcd(ca, cb);
  if (udeg(a) < udeg(b)) std::swap(a, b);

  // subresultant remainder sequence
  MultiPoly g = MultiPoly::constant(ring, 1);
  MultiPoly h = MultiPoly::constant(ring, 1);
  UPoly prim;
  for (;;) {
    int delta = udeg(a) - udeg(b);
    UPoly r = prem(a, b);
    if (r.empty()) {
      prim = b;
      break;
    }
    if (udeg(r) == 0) {
      prim = UPoly{MultiPoly::constant(ring, 1)};
      break;
    }
    MultiPoly div = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = divide_or_throw(c, div);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      MultiPoly num = g.pow(static_cast<unsigned>(delta));
      h = divide_or_throw(num, h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  MultiPoly pc = content_of(prim);
  for (auto& c : prim) c = divide_or_throw(c, pc);
  return normalize(cont * from_upoly(prim, x, ring));
}

MultiPoly poly_gcd(const std::vector<MultiPoly>& ps) {
  MultiPoly g;
  bool started = false;
  for (const auto& p : ps) {
    if (!started) {
      g = normalize(p);
      started = true;
    } else {
      g = poly_gcd(g, p);
    }
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (!same_ring(p.ring(), q.ring())) fail(Errc::RingMismatch, "resultant of polynomials in different rings");
  int m = p.degree_in(var), n = q.degree_in(var);
  if (m <= 0 || n <= 0)
    fail(Errc::DegreeZeroInput, "resultant needs positive degree in '" + p.ring()->name(var) + "'");
  RingPtr ring = p.ring();
  UPoly a = coefficients_in(p, var), b = coefficients_in(q, var);
  const int N = m + n;
  std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly(ring)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + k] = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + k] = b[n - k];

  // Bareiss fraction-free elimination
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(ring, 1);
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (!M[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return MultiPoly(ring);
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        MultiPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = divide_or_throw(t, prev);
      }
      M[i][k] = MultiPoly(ring);
    }
    prev = M[k][k];
  }
  MultiPoly det = M[N - 1][N - 1];
  return sign > 0 ? det : -det;
}

}  // namespace isohopf
