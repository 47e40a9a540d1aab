#include "isohopf/routes.hpp"

#include <algorithm>
#include <functional>

#include "isohopf/clifford.hpp"
#include "isohopf/ideal.hpp"
#include "isohopf/module.hpp"
#include "isohopf/poly_algo.hpp"
#include "isohopf/random.hpp"

namespace isohopf {

namespace {

std::string str(long v) { return std::to_string(v); }

void require_n2(const IsoSection& s, const char* route) {
  if (s.n() != 2) fail(Errc::WrongDimension, std::string(route) + " needs two base variables");
}

long common_degree(const IsoSection& s) {
  long d = -1;
  for (const auto& c : s.components) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) fail(Errc::NotHomogeneous, "component " + c.to_string() + " is not homogeneous");
    long dc = c.total_degree();
    if (d >= 0 && dc != d) fail(Errc::NotHomogeneous, "components have different degrees");
    d = dc;
  }
  if (d < 0) fail(Errc::InvalidArgument, "zero section");
  return d;
}

// degree of the map [p : q] from P^1 after removing common factors
long pencil_degree(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly g = poly_gcd(p, q);
  if (g.is_zero()) fail(Errc::InvalidArgument, "empty pencil");
  MultiPoly a = divide_or_throw(p, g), b = divide_or_throw(q, g);
  return std::max(a.total_degree(), b.total_degree());
}

bool both_zero(const MultiPoly& a, const MultiPoly& b) { return a.is_zero() && b.is_zero(); }

}  // namespace

std::size_t classical_hopf_length(const std::vector<MultiPoly>& f, const GroebnerOptions& opts) {
  if (f.empty()) fail(Errc::InvalidArgument, "empty map");
  RingPtr ring = f.front().ring();
  if (f.size() != ring->size()) fail(Errc::DimensionMismatch, "map must go from C^n to C^n");
  return colength(PolyIdeal(ring, f), opts);
}

RefinedIndex route_rh3(const IsoSection& s, const RouteOptions& opts) {
  require_n2(s, "rh3");
  Factorization fac = factorize_n2(s, opts.seed);
  std::size_t d1 = colength(PolyIdeal(s.ring, {fac.sigma0[0], fac.sigma0[1]}), opts.groebner);
  std::size_t d2 = colength(PolyIdeal(s.ring, {fac.f, fac.g}), opts.groebner);
  RefinedIndex r;
  r.route = "rh3";
  r.d1 = static_cast<long>(d1);
  r.d2 = static_cast<long>(d2);
  r.sqrt_e = *r.d1 - *r.d2;
  r.diagnostics = {{"f", fac.f.to_string()},
                   {"g", fac.g.to_string()},
                   {"sigma0", "(" + fac.sigma0[0].to_string() + ", " + fac.sigma0[1].to_string() + ")"},
                   {"perturbed_splitting", fac.perturbed ? "true" : "false"}};
  return r;
}

RefinedIndex route_rh5_homogeneous(const IsoSection& s, const RouteOptions& opts, RulingDegrees* degrees) {
  (void)opts;
  require_n2(s, "rh5");
  long d = common_degree(s);
  SigmaTau st = split_sigma_tau(s, rational_hyperbolic_splitting(s.space));
  const MultiPoly &s1 = st.sigma[0], &s2 = st.sigma[1], &t1 = st.tau[0], &t2 = st.tau[1];
  // point of P(Lambda_+): [s1 : s2] or [-t2 : t1]
  long deg_plus_component = both_zero(s1, s2) ? pencil_degree(-t2, t1) : pencil_degree(s1, s2);
  // point of P(Lambda_-): [s1 : t2] or [-s2 : t1]
  long deg_minus_component = both_zero(s1, t2) ? pencil_degree(-s2, t1) : pencil_degree(s1, t2);
  RulingDegrees rd;
  rd.d_minus = deg_plus_component;
  rd.d_plus = deg_minus_component;
  if (rd.d_plus + rd.d_minus != d)
    fail(Errc::ConsistencyFailure, "d+ + d- = " + str(rd.d_plus + rd.d_minus) + " differs from degree " + str(d));
  if (degrees) *degrees = rd;
  RefinedIndex r;
  r.route = "rh5";
  r.d1 = rd.d_minus * rd.d_minus;
  r.d2 = rd.d_plus * rd.d_plus;
  r.sqrt_e = *r.d1 - *r.d2;
  r.diagnostics = {{"degree", str(d)}, {"d_plus", str(rd.d_plus)}, {"d_minus", str(rd.d_minus)}};
  return r;
}

namespace {

// number of points x in P^{n-1} with s(x) in the plane, counted with multiplicity
std::size_t incidence_count(const IsoSection& s, const Subspace& plane, std::uint64_t seed,
                            const GroebnerOptions& gopts) {
  ProjectiveDegreeOptions po;
  po.seeds = {mix_seed(seed, 1), mix_seed(seed, 2), mix_seed(seed, 3)};
  po.groebner = gopts;
  ProjectiveDegree pd =
      projective_degree_gaussian(PolyIdeal(s.ring, {}), pairing_conditions(s.space, plane, s.components), po);
  if (pd.degree > 0 && pd.dimension != 0) fail(Errc::DegenerateSlice, "incidence locus is not finite for this plane");
  return pd.degree;
}

}  // namespace

RefinedIndex route_oh5_incidence(const IsoSection& s, const RouteOptions& opts, RulingDegrees* degrees) {
  const std::size_t n = s.n();
  if (n < 2) fail(Errc::WrongDimension, "oh5 needs n >= 2");
  long d = common_degree(s);
  HyperbolicSplitting split = hyperbolic_splitting(s.space);
  Subspace pos = split.lambda();
  Subspace neg = pos;
  neg.set_column(n - 1, split.lambda_dual().column(n - 1));
  long counts[2] = {-1, -1};
  for (int sign = 0; sign < 2; ++sign) {
    for (std::uint64_t k = 0; k < 3; ++k) {
      long c = -1;
      // a non-generic plane can meet P(C) in a curve; draw another one
      for (std::size_t attempt = 0; c < 0; ++attempt) {
        RatMatrix g = random_special_orthogonal(s.space, mix_seed(opts.seed, 100 * sign + k + 1000 * attempt));
        Subspace plane = to_gauss(g) * (sign == 0 ? pos : neg);
        int expect = sign == 0 ? 1 : -1;
        if (isotropic_sign(s.space, plane) != expect) fail(Errc::ConsistencyFailure, "generic plane has the wrong sign");
        try {
          c = static_cast<long>(incidence_count(s, plane, mix_seed(opts.seed, 7 + k), opts.groebner));
        } catch (const Error& e) {
          if (e.code() != Errc::DegenerateSlice || attempt + 1 >= opts.retries) throw;
        }
      }
      if (counts[sign] >= 0 && counts[sign] != c)
        fail(Errc::DegenerateSlice, "incidence counts disagree between seeds: " + str(counts[sign]) + " vs " + str(c));
      counts[sign] = c;
    }
  }
  RulingDegrees rd{counts[0], counts[1]};
  long dn1 = 1;
  for (std::size_t k = 1; k < n; ++k) dn1 *= d;
  if (rd.d_plus + rd.d_minus != dn1)
    fail(Errc::ConsistencyFailure, "d+ + d- = " + str(rd.d_plus + rd.d_minus) + " but d^(n-1) = " + str(dn1));
  if (degrees) *degrees = rd;
  RefinedIndex r;
  r.route = "oh5";
  long sign = (n - 1) % 2 ? -1 : 1;
  r.sqrt_e = sign * d * (rd.d_plus - rd.d_minus);
  if (n == 2) {
    r.d1 = rd.d_minus * rd.d_minus;
    r.d2 = rd.d_plus * rd.d_plus;
  }
  r.diagnostics = {{"degree", str(d)}, {"d_plus", str(rd.d_plus)}, {"d_minus", str(rd.d_minus)}};
  return r;
}

RefinedIndex route_rh7_clifford(const IsoSection& s, const RouteOptions& opts) {
  SigmaTau st = split_sigma_tau(s, rational_hyperbolic_splitting(s.space));
  CliffordComplex c = clifford_complex(st, s.ring);
  if (!is_two_periodic(c)) fail(Errc::ComplexNotExact2Periodic, "Clifford composites do not vanish");
  std::size_t hp = subquotient_length(module_kernel(c.d_even, opts.groebner), module_image(c.d_odd), opts.groebner);
  std::size_t hm = subquotient_length(module_kernel(c.d_odd, opts.groebner), module_image(c.d_even), opts.groebner);
  RefinedIndex r;
  r.route = "rh7";
  r.sqrt_e = static_cast<long>(hp) - static_cast<long>(hm);
  if (s.n() == 2) {
    r.d1 = static_cast<long>(hp);
    r.d2 = static_cast<long>(hm);
  }
  r.diagnostics = {{"length_H_plus", std::to_string(hp)}, {"length_H_minus", std::to_string(hm)}};
  return r;
}

RefinedIndex route_oh8_torus(const IsoSection& s, const RouteOptions& opts) {
  (void)opts;
  if (!s.torus) fail(Errc::BadWeights, "oh8 needs torus weights");
  const auto& t = *s.torus;
  const std::size_t n = s.n();
  if (t.base.size() != n || t.fiber.size() != 2 * n) fail(Errc::BadWeights, "weight vectors have the wrong length");
  for (long w : t.base)
    if (w == 0) fail(Errc::ZeroBaseWeight, "base weight zero: the fixed locus is not the origin");
  const RatMatrix& b = s.space.gram();
  std::optional<std::vector<std::size_t>> chosen;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (chosen) return;
    if (pick.size() == n) {
      Subspace l(2 * n, n);
      for (std::size_t k = 0; k < n; ++k) l.at(pick[k], k) = Gauss(1);
      if (isotropic_sign(s.space, l) > 0) chosen = pick;
      return;
    }
    for (std::size_t k = start; k < 2 * n; ++k) {
      bool ok = sgn(b.at(k, k)) == 0;
      for (auto j : pick) ok = ok && sgn(b.at(k, j)) == 0;
      if (!ok) continue;
      pick.push_back(k);
      search(k + 1);
      pick.pop_back();
    }
  };
  search(0);
  if (!chosen) fail(Errc::NoInvariantIsotropic, "no positive maximal isotropic coordinate subspace");
  Integer num = 1, den = 1;
  std::string names;
  for (auto k : *chosen) {
    num *= t.fiber[k];
    names += (names.empty() ? "" : ",") + s.space.names()[k];
  }
  for (long w : t.base) den *= -w;
  if (num % den != 0) fail(Errc::NonIntegerRatio, num.get_str() + "/" + den.get_str() + " is not an integer");
  Integer q = num / den;
  RefinedIndex r;
  r.route = "oh8";
  r.sqrt_e = q.get_si();
  r.diagnostics = {{"invariant_isotropic", names}, {"numerator", num.get_str()}, {"denominator", den.get_str()}};
  return r;
}

RefinedIndex route_oh3_factored(const IsoSection& s, const Subspace& lambda, const RouteOptions& opts) {
  int sign = isotropic_sign(s.space, lambda);
  for (const auto& [re, im] : pairing_conditions(s.space, lambda, s.components))
    if (!re.is_zero() || !im.is_zero()) fail(Errc::SectionNotInSubspace, "section leaves the given subspace");
  std::size_t len = colength(PolyIdeal(s.ring, s.components), opts.groebner);
  RefinedIndex r;
  r.route = "oh3";
  r.sqrt_e = sign * static_cast<long>(len);
  r.diagnostics = {{"sign", str(sign)}, {"length", std::to_string(len)}};
  return r;
}

std::optional<Subspace> find_containing_isotropic(const IsoSection& s) {
  const std::size_t n = s.n(), m = 2 * n;
  auto contains = [&](const Subspace& l) {
    for (const auto& [re, im] : pairing_conditions(s.space, l, s.components))
      if (!re.is_zero() || !im.is_zero()) return false;
    return true;
  };
  std::vector<Subspace> candidates;
  HyperbolicSplitting split = hyperbolic_splitting(s.space);
  candidates.push_back(s.space.reference());
  Subspace neg = split.lambda();
  neg.set_column(n - 1, split.lambda_dual().column(n - 1));
  candidates.push_back(neg);
  const RatMatrix& b = s.space.gram();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> search = [&](std::size_t start) {
    if (pick.size() == n) {
      Subspace l(m, n);
      for (std::size_t k = 0; k < n; ++k) l.at(pick[k], k) = Gauss(1);
      candidates.push_back(l);
      return;
    }
    for (std::size_t k = start; k < m; ++k) {
      bool ok = sgn(b.at(k, k)) == 0;
      for (auto j : pick) ok = ok && sgn(b.at(k, j)) == 0;
      if (!ok) continue;
      pick.push_back(k);
      search(k + 1);
      pick.pop_back();
    }
  };
  search(0);
  for (const auto& l : candidates)
    if (is_isotropic_subspace(s.space, l) && contains(l)) return l;
  return std::nullopt;
}

IsoSection spin_section(const SpinData& data) {
  if (!data.ring || data.ring->size() != 2) fail(Errc::WrongDimension, "the spin model needs two base variables");
  IsoSection s;
  s.ring = data.ring;
  s.space = QuadSpace::hyperbolic(2).with_orientation(data.orientation);
  const auto &F = data.F, &v = data.v;
  s.components = {v[1] * F[1], v[0] * F[0], v[1] * F[0], -(v[0] * F[1])};
  if (data.base_weights.size() == 2) {
    TorusWeights t;
    t.base = data.base_weights;
    const auto &mp = data.m_plus, &mm = data.m_minus;
    t.fiber = {mm[1] - mp[1], mm[0] - mp[0], mm[1] - mp[0], mm[0] - mp[1]};
    s.torus = t;
  }
  return s;
}

RefinedIndex route_rh8_spin(const SpinData& data, const RouteOptions& opts) {
  if (!data.ring || data.ring->size() != 2) fail(Errc::WrongDimension, "the spin model needs two base variables");
  if (data.base_weights.size() != 2) fail(Errc::BadWeights, "two base weights are needed");
  for (long w : data.base_weights)
    if (w == 0) fail(Errc::ZeroBaseWeight, "base weight zero");
  const auto &mp = data.m_plus, &mm = data.m_minus;
  if (mp[0] + mp[1] != mm[0] + mm[1])
    fail(Errc::WeightConstraintViolated, "weights of M+ and M- have different sums");
  for (std::size_t k = 0; k < 2; ++k) {
    if (!data.F[k].is_weighted_homogeneous(data.base_weights, -mp[k]))
      fail(Errc::WeightConstraintViolated, "F" + std::to_string(k + 1) + " does not have weight " + str(-mp[k]));
    if (!data.v[k].is_weighted_homogeneous(data.base_weights, mm[k]))
      fail(Errc::WeightConstraintViolated, "v" + std::to_string(k + 1) + " does not have weight " + str(mm[k]));
  }
  Integer en = Integer(-data.base_weights[0]) * Integer(-data.base_weights[1]);
  Integer e_minus = Integer(mm[0]) * Integer(mm[1]);
  Integer e_plus_dual = Integer(-mp[0]) * Integer(-mp[1]);
  if (e_minus % en != 0 || e_plus_dual % en != 0) fail(Errc::NonIntegerRatio, "Euler class ratio is not an integer");
  long d1 = Integer(e_minus / en).get_si();
  long d2 = Integer(e_plus_dual / en).get_si();
  std::size_t len_v = colength(PolyIdeal(data.ring, {data.v[0], data.v[1]}), opts.groebner);
  std::size_t len_f = colength(PolyIdeal(data.ring, {data.F[0], data.F[1]}), opts.groebner);
  if (static_cast<long>(len_v) != d1 || static_cast<long>(len_f) != d2)
    fail(Errc::ConsistencyFailure, "weight ratios (" + str(d1) + ", " + str(d2) + ") differ from lengths (" +
                                       std::to_string(len_v) + ", " + std::to_string(len_f) + ")");
  if (data.orientation < 0) std::swap(d1, d2);
  IsoSection s = validate(spin_section(data), opts.groebner);
  RefinedIndex check = route_rh3(s, opts);
  if (*check.d1 != d1 || *check.d2 != d2)
    fail(Errc::ConsistencyFailure, "assembled section gives (" + str(*check.d1) + ", " + str(*check.d2) + ")");
  RefinedIndex r;
  r.route = "rh8";
  r.d1 = d1;
  r.d2 = d2;
  r.sqrt_e = d1 - d2;
  r.diagnostics = {{"euler_N", en.get_str()}, {"euler_M_minus", e_minus.get_str()},
                   {"euler_M_plus_dual", e_plus_dual.get_str()}};
  return r;
}

}  // namespace isohopf
