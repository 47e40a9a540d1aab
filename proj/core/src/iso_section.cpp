#include "isohopf/iso_section.hpp"

#include <set>

#include "isohopf/ideal.hpp"
#include "isohopf/poly_algo.hpp"
#include "isohopf/random.hpp"

namespace isohopf {

MultiPoly quadratic_value(const QuadSpace& e, const std::vector<MultiPoly>& s) {
  MultiPoly acc(s.front().ring());
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t j = 0; j < e.rank(); ++j) {
      const Rational& b = e.gram().at(i, j);
      if (sgn(b) == 0) continue;
      acc += (s[i] * s[j]) * b;
    }
  return acc;
}

IsoSection validate(IsoSection raw, const GroebnerOptions& opts) {
  if (!raw.ring) fail(Errc::InvalidArgument, "section has no base ring");
  const std::size_t n = raw.n();
  if (raw.space.rank() != 2 * n)
    fail(Errc::DimensionMismatch, "base dimension " + std::to_string(n) + " needs a quadratic space of rank " +
                                      std::to_string(2 * n));
  if (raw.components.size() != 2 * n) fail(Errc::DimensionMismatch, "section needs one component per coordinate");
  for (auto& c : raw.components) {
    if (!c.ring()) c = MultiPoly(raw.ring) + c;
    if (!same_ring(c.ring(), raw.ring)) fail(Errc::RingMismatch, "component lives in a different ring");
  }
  std::set<std::string> base(raw.ring->names().begin(), raw.ring->names().end());
  for (const auto& name : raw.space.names())
    if (base.count(name)) fail(Errc::InvalidArgument, "fiber coordinate '" + name + "' clashes with a base variable");

  MultiPoly q = quadratic_value(raw.space, raw.components);
  if (!q.is_zero()) fail(Errc::NotIsotropic, "q(s, s) = " + q.to_string());

  PolyIdeal ideal(raw.ring, raw.components);
  auto len = colength_if_finite(ideal, opts);
  if (!len) fail(Errc::ZeroLocusNotOriginOnly, "the zero locus of s is positive dimensional");
  if (*len > 0) {
    for (std::size_t k = 0; k < n; ++k) {
      MultiPoly power = MultiPoly::term(raw.ring, Monomial::var(k, static_cast<unsigned>(*len)), 1);
      if (!ideal.contains(power, opts))
        fail(Errc::ZeroLocusNotOriginOnly, "s vanishes away from the origin (no power of " + raw.ring->name(k) +
                                               " lies in the ideal)");
    }
  }

  if (raw.torus) {
    const auto& t = *raw.torus;
    if (t.base.size() != n || t.fiber.size() != 2 * n) fail(Errc::BadWeights, "weight vectors have the wrong length");
    for (long w : t.base)
      if (w == 0) fail(Errc::BadWeights, "base weights must be nonzero");
    for (std::size_t k = 0; k < 2 * n; ++k)
      if (!raw.components[k].is_weighted_homogeneous(t.base, t.fiber[k]))
        fail(Errc::BadWeights, "component " + raw.space.names()[k] + " is not of weight " + std::to_string(t.fiber[k]));
    for (std::size_t k = 0; k < 2 * n; ++k)
      for (std::size_t l = 0; l < 2 * n; ++l)
        if (sgn(raw.space.gram().at(k, l)) != 0 && t.fiber[k] + t.fiber[l] != 0)
          fail(Errc::BadWeights, "the form is not torus invariant");
  }
  return raw;
}

SigmaTau split_sigma_tau(const IsoSection& s, const HyperbolicSplitting& split) {
  RatMatrix inv = split.rational_inverse();
  const std::size_t n = s.n();
  SigmaTau st;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    MultiPoly acc(s.ring);
    for (std::size_t j = 0; j < 2 * n; ++j)
      if (sgn(inv.at(k, j)) != 0) acc += s.components[j] * inv.at(k, j);
    (k < n ? st.sigma : st.tau).push_back(acc);
  }
  return st;
}

std::array<MultiPoly, 2> contract_omega(const std::array<MultiPoly, 2>& sigma) { return {-sigma[1], sigma[0]}; }

namespace {
bool all_zero(const std::vector<MultiPoly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}
}  // namespace

Factorization factorize_n2(const IsoSection& s, const HyperbolicSplitting& split) {
  if (s.n() != 2) fail(Errc::WrongDimension, "factorization is implemented for n = 2");
  Factorization out;
  out.splitting = split;
  out.split = split_sigma_tau(s, split);
  const auto& sig = out.split.sigma;
  const auto& tau = out.split.tau;
  if (all_zero(sig) || all_zero(tau)) fail(Errc::PerturbationFailed, "section lies in a coordinate plane");
  out.f = poly_gcd(sig[0], sig[1]);
  out.sigma0 = {divide_or_throw(sig[0], out.f), divide_or_throw(sig[1], out.f)};
  out.tau0 = contract_omega(out.sigma0);
  std::optional<MultiPoly> g;
  for (std::size_t k = 0; k < 2; ++k) {
    if (out.tau0[k].is_zero()) continue;
    auto q = divide_exact(tau[k], out.tau0[k]);
    if (!q) fail(Errc::ConsistencyFailure, "tau is not a multiple of sigma0 contracted with omega");
    g = *q;
    break;
  }
  out.g = *g;
  for (std::size_t k = 0; k < 2; ++k)
    if (!(out.g * out.tau0[k] == tau[k]))
      fail(Errc::ConsistencyFailure, "tau is not a multiple of sigma0 contracted with omega");
  return out;
}

Factorization factorize_n2(const IsoSection& s, std::uint64_t seed) {
  HyperbolicSplitting base = rational_hyperbolic_splitting(s.space);
  auto try_split = [&](const HyperbolicSplitting& sp) -> std::optional<Factorization> {
    SigmaTau st = split_sigma_tau(s, sp);
    if (all_zero(st.sigma) || all_zero(st.tau)) return std::nullopt;
    return factorize_n2(s, sp);
  };
  if (auto f = try_split(base)) return *f;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    RatMatrix g = random_special_orthogonal(s.space, mix_seed(seed, 7000 + attempt));
    if (auto f = try_split(base.transformed(g))) {
      f->perturbed = true;
      return *f;
    }
  }
  fail(Errc::PerturbationFailed, "no perturbed splitting separates sigma and tau");
}

IsoSection scaled(const IsoSection& s, const Rational& c) {
  Rational k = c;
  k.canonicalize();
  IsoSection out = s;
  for (auto& p : out.components) p *= k;
  return out;
}

IsoSection with_orientation(const IsoSection& s, int unit) {
  IsoSection out = s;
  out.space = s.space.with_orientation(unit);
  return out;
}

std::vector<std::pair<MultiPoly, MultiPoly>> pairing_conditions(const QuadSpace& e, const Subspace& plane,
                                                                const std::vector<MultiPoly>& coords) {
  if (coords.size() != e.rank() || plane.rows() != e.rank()) fail(Errc::DimensionMismatch, "plane and coordinates");
  GaussMatrix lb = plane.transpose() * to_gauss(e.gram());
  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (std::size_t r = 0; r < lb.rows(); ++r) {
    MultiPoly re(coords.front().ring()), im(coords.front().ring());
    for (std::size_t k = 0; k < lb.cols(); ++k) {
      const Gauss& w = lb.at(r, k);
      if (sgn(w.re) != 0) re += coords[k] * w.re;
      if (sgn(w.im) != 0) im += coords[k] * w.im;
    }
    out.emplace_back(std::move(re), std::move(im));
  }
  return out;
}

}  // namespace isohopf
