#include "isohopf/clifford.hpp"

#include <algorithm>
#include <map>

#include "isohopf/error.hpp"

namespace isohopf {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_parity(std::size_t n, std::size_t parity) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) s.push_back(k);
    if (s.size() % 2 == parity) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// number of elements of s below k
int below(const std::vector<std::size_t>& s, std::size_t k) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](std::size_t j) { return j < k; }));
}

PolyMatrix differential(const SigmaTau& st, const RingPtr& ring, const std::vector<std::vector<std::size_t>>& from,
                        const std::vector<std::vector<std::size_t>>& to) {
  std::map<std::vector<std::size_t>, std::size_t> row_of;
  for (std::size_t r = 0; r < to.size(); ++r) row_of[to[r]] = r;
  PolyMatrix m(ring, to.size(), from.size());
  const std::size_t n = st.sigma.size();
  for (std::size_t c = 0; c < from.size(); ++c) {
    const auto& s = from[c];
    for (std::size_t k = 0; k < n; ++k) {
      bool in = std::find(s.begin(), s.end(), k) != s.end();
      int sign = below(s, k) % 2 ? -1 : 1;
      std::vector<std::size_t> t = s;
      if (in) {
        // contraction by sigma_k
        t.erase(std::find(t.begin(), t.end(), k));
        m.at(row_of.at(t), c) += st.sigma[k] * Rational(sign);
      } else {
        // wedge with tau_k on the left
        t.insert(std::upper_bound(t.begin(), t.end(), k), k);
        m.at(row_of.at(t), c) += st.tau[k] * Rational(sign);
      }
    }
  }
  return m;
}

}  // namespace

CliffordComplex clifford_complex(const SigmaTau& st, const RingPtr& ring) {
  const std::size_t n = st.sigma.size();
  if (st.tau.size() != n || n == 0) fail(Errc::DimensionMismatch, "sigma and tau must have the same positive length");
  CliffordComplex c;
  c.even_basis = subsets_of_parity(n, 0);
  c.odd_basis = subsets_of_parity(n, 1);
  c.d_even = differential(st, ring, c.even_basis, c.odd_basis);
  c.d_odd = differential(st, ring, c.odd_basis, c.even_basis);
  return c;
}

bool is_two_periodic(const CliffordComplex& c) {
  return (c.d_odd * c.d_even).is_zero() && (c.d_even * c.d_odd).is_zero();
}

}  // namespace isohopf
