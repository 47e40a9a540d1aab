#pragma once
// Brute-force references used by the tests. Nothing here calls the Groebner
// engine; the arithmetic is plain dense linear algebra over Q.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "isohopf/poly.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

inline std::size_t rank(std::vector<Row> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

using Exps = std::vector<unsigned>;

inline std::vector<Exps> monomials_below(std::size_t nvars, unsigned n) {
  std::vector<Exps> out;
  Exps cur(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[k] = e;
      rec(k + 1, left - e);
    }
    cur[k] = 0;
  };
  if (n > 0) rec(0, n - 1);
  return out;
}

// dim Q[x]/(I + m^N) by truncated linear algebra.
inline std::size_t truncated_length(const std::vector<isohopf::MultiPoly>& gens, std::size_t nvars, unsigned n) {
  auto monos = monomials_below(nvars, n);
  std::map<Exps, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
  std::vector<Row> rows;
  for (const auto& g : gens) {
    for (const auto& m : monos) {
      Row row(monos.size(), 0);
      bool any = false;
      for (const auto& [mono, c] : g.terms()) {
        Exps e(nvars);
        unsigned deg = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
          e[v] = mono.exp[v] + m[v];
          deg += e[v];
        }
        if (deg >= n) continue;
        row[index.at(e)] += c;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return monos.size() - rank(std::move(rows));
}

// Length of the local ring at the origin: increase the truncation until it
// stops growing twice in a row.
inline std::size_t local_length(const std::vector<isohopf::MultiPoly>& gens, std::size_t nvars, unsigned max_n = 24) {
  std::size_t prev = 0;
  int stable = 0;
  for (unsigned n = 1; n <= max_n; ++n) {
    std::size_t l = truncated_length(gens, nvars, n);
    if (n > 1 && l == prev) {
      if (++stable == 2) return l;
    } else {
      stable = 0;
    }
    prev = l;
  }
  return static_cast<std::size_t>(-1);
}

// Coefficients of p as a polynomial in variable `var`, lowest degree first.
inline std::vector<isohopf::MultiPoly> coeffs_in(const isohopf::MultiPoly& p, std::size_t var) {
  std::vector<isohopf::MultiPoly> out;
  for (const auto& [m, c] : p.terms()) {
    std::size_t e = m.exp[var];
    if (out.size() <= e) out.resize(e + 1, isohopf::MultiPoly(p.ring()));
    isohopf::Monomial rest = m;
    rest.exp[var] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

inline isohopf::MultiPoly laplace_det(const std::vector<std::vector<isohopf::MultiPoly>>& m,
                                      const isohopf::RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return isohopf::MultiPoly::constant(ring, 1);
  if (n == 1) return m[0][0];
  isohopf::MultiPoly acc(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<isohopf::MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<isohopf::MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    isohopf::MultiPoly t = m[0][j] * laplace_det(minor, ring);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

// det of the Sylvester matrix, rows of p first, highest coefficients on the left.
inline isohopf::MultiPoly sylvester_resultant(const isohopf::MultiPoly& p, const isohopf::MultiPoly& q,
                                              std::size_t var) {
  auto a = coeffs_in(p, var), b = coeffs_in(q, var);
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  isohopf::MultiPoly zero(p.ring());
  std::vector<std::vector<isohopf::MultiPoly>> s(size, std::vector<isohopf::MultiPoly>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return laplace_det(s, p.ring());
}

inline long bezout(const std::vector<long>& degrees) {
  long p = 1;
  for (long d : degrees) p *= d;
  return p;
}

}  // namespace oracle
