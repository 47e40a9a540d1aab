#include "isohopf/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "isohopf/error.hpp"
#include "isohopf/random.hpp"

namespace isohopf {

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.ring() && !same_ring(g.ring(), ring_)) fail(Errc::RingMismatch, "ideal generator in a foreign ring");
}

const std::vector<ModPoly>& PolyIdeal::basis(const MonomialOrder& order, const GroebnerOptions& opts) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->bases.find(order);
  if (it != cache_->bases.end()) return it->second;
  TermOrder to(order);
  std::vector<ModPoly> gens;
  for (const auto& g : gens_) gens.push_back(to_modpoly(g, to));
  auto gb = groebner_basis(gens, to, opts);
  return cache_->bases.emplace(order, std::move(gb)).first->second;
}

std::vector<MultiPoly> PolyIdeal::groebner(const MonomialOrder& order, const GroebnerOptions& opts) const {
  std::vector<MultiPoly> out;
  for (const auto& g : basis(order, opts)) out.push_back(from_modpoly(g, ring_));
  return out;
}

MultiPoly PolyIdeal::normal_form(const MultiPoly& p, const GroebnerOptions& opts) const {
  TermOrder to(MonomialOrder::grevlex());
  return from_modpoly(isohopf::normal_form(to_modpoly(p, to), basis(MonomialOrder::grevlex(), opts), to), ring_);
}

bool PolyIdeal::contains(const MultiPoly& p, const GroebnerOptions& opts) const {
  return normal_form(p, opts).is_zero();
}

bool PolyIdeal::is_unit(const GroebnerOptions& opts) const {
  const auto& b = basis(MonomialOrder::grevlex(), opts);
  return b.size() == 1 && b.front().front().mono.is_one();
}

PolyIdeal PolyIdeal::with(const std::vector<MultiPoly>& extra) const {
  auto g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return PolyIdeal(ring_, std::move(g));
}

std::optional<std::size_t> colength_if_finite(const PolyIdeal& ideal, const GroebnerOptions& opts) {
  return count_standard_monomials(ideal.basis(MonomialOrder::grevlex(), opts), ideal.ring()->size(), 1);
}

std::size_t colength(const PolyIdeal& ideal, const GroebnerOptions& opts) {
  auto c = colength_if_finite(ideal, opts);
  if (!c) fail(Errc::NotZeroDimensional, "quotient ring is infinite dimensional");
  return *c;
}

namespace {

// Ring with `extra` new variables placed first, followed by the old ones.
RingPtr ring_with_front(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> names = extra;
  for (const auto& n : ring->names()) {
    std::string candidate = n;
    names.push_back(candidate);
  }
  return make_ring(names);
}

std::string fresh_name(const RingPtr& ring, const std::string& stem) {
  std::string name = stem;
  int k = 0;
  while (ring->index_of(name)) name = stem + std::to_string(++k);
  return name;
}

}  // namespace

PolyIdeal saturate(const PolyIdeal& ideal, const MultiPoly& f, const GroebnerOptions& opts) {
  const RingPtr& ring = ideal.ring();
  if (ring->size() + 1 > kMaxVars) fail(Errc::InvalidArgument, "saturation needs one spare variable slot");
  RingPtr big = ring_with_front(ring, {fresh_name(ring, "sat_w")});
  std::vector<std::size_t> shift(ring->size());
  std::iota(shift.begin(), shift.end(), 1);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebase(big, shift));
  MultiPoly w = MultiPoly::variable(big, 0);
  gens.push_back(w * f.rebase(big, shift) - MultiPoly::constant(big, 1));
  PolyIdeal J(big, gens);
  std::vector<std::size_t> back(big->size(), kMaxVars);
  for (std::size_t i = 1; i < big->size(); ++i) back[i] = i - 1;
  std::vector<MultiPoly> out;
  for (const auto& g : J.basis(MonomialOrder::block(1), opts)) {
    bool free = std::all_of(g.begin(), g.end(), [](const ModTerm& t) { return t.mono.exp[0] == 0; });
    if (free) out.push_back(from_modpoly(g, big).rebase(ring, back));
  }
  return PolyIdeal(ring, out);
}

PolyIdeal eliminate(const PolyIdeal& ideal, std::span<const std::size_t> vars, const GroebnerOptions& opts) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> drop(ring->size(), false);
  for (auto v : vars) drop.at(v) = true;
  // permute so eliminated variables come first
  std::vector<std::size_t> perm;  // old index -> new index
  std::vector<std::string> names;
  perm.assign(ring->size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (drop[i]) {
      perm[i] = k++;
      names.push_back(ring->name(i));
    }
  std::size_t split = k;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (!drop[i]) {
      perm[i] = k++;
      names.push_back(ring->name(i));
    }
  RingPtr permuted = make_ring(names);
  std::vector<std::size_t> inverse(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) inverse[perm[i]] = i;
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebase(permuted, perm));
  PolyIdeal J(permuted, gens);
  std::vector<MultiPoly> out;
  for (const auto& g : J.basis(MonomialOrder::block(split), opts)) {
    bool free = std::all_of(g.begin(), g.end(), [&](const ModTerm& t) {
      for (std::size_t v = 0; v < split; ++v)
        if (t.mono.exp[v]) return false;
      return true;
    });
    if (free) out.push_back(from_modpoly(g, permuted).rebase(ring, inverse));
  }
  return PolyIdeal(ring, out);
}

bool same_ideal(const PolyIdeal& a, const PolyIdeal& b, const GroebnerOptions& opts) {
  if (!same_ring(a.ring(), b.ring())) fail(Errc::RingMismatch, "ideals in different rings");
  auto ga = a.groebner(MonomialOrder::grevlex(), opts);
  auto gb = b.groebner(MonomialOrder::grevlex(), opts);
  return ga == gb;
}

MultiPoly random_linear_form(const RingPtr& ring, std::span<const std::size_t> vars, std::uint64_t seed) {
  Rng rng(seed);
  MultiPoly L(ring);
  for (auto v : vars) L.add_term(Monomial::var(v), rng.nonzero(29));
  return L;
}

ProjectiveDegree projective_degree(const PolyIdeal& ideal, const ProjectiveDegreeOptions& opts) {
  const RingPtr& ring = ideal.ring();
  std::vector<std::size_t> proj = opts.proj_vars;
  if (proj.empty()) {
    proj.resize(ring->size());
    std::iota(proj.begin(), proj.end(), 0);
  }
  if (opts.seeds.empty()) fail(Errc::InvalidArgument, "projective_degree needs at least one seed");
  const TermOrder to(MonomialOrder::grevlex());
  const auto& base = ideal.basis(MonomialOrder::grevlex(), opts.groebner);

  std::vector<bool> is_proj(ring->size(), false);
  for (auto v : proj) is_proj.at(v) = true;
  for (const auto& g : base) {
    unsigned d0 = 0;
    for (std::size_t t = 0; t < g.size(); ++t) {
      unsigned d = 0;
      for (std::size_t v = 0; v < ring->size(); ++v)
        if (is_proj[v]) d += g[t].mono.exp[v];
      if (t == 0) d0 = d;
      else if (d != d0) fail(Errc::NotHomogeneous, "ideal is not homogeneous in the projective variables");
    }
  }

  std::optional<ProjectiveDegree> agreed;
  for (std::size_t s = 0; s < opts.seeds.size(); ++s) {
    std::optional<ProjectiveDegree> found;
    for (std::size_t r = 0; r < proj.size() && !found; ++r) {
      std::vector<ModPoly> extra;
      for (std::size_t k = 0; k < r; ++k)
        extra.push_back(to_modpoly(random_linear_form(ring, proj, mix_seed(opts.seeds[s], k)), to));
      MultiPoly chart = random_linear_form(ring, proj, mix_seed(opts.seeds[s], 1000 + r));
      extra.push_back(to_modpoly(chart - MultiPoly::constant(ring, 1), to));
      auto gb = groebner_extend(base, extra, to, opts.groebner);
      bool unit = gb.size() == 1 && gb.front().front().mono.is_one();
      if (unit) {
        if (r == 0) fail(Errc::EmptyScheme, "the projective scheme is empty");
        fail(Errc::DegenerateSlice, "slice became empty before it became finite");
      }
      if (auto c = count_standard_monomials(gb, ring->size(), 1)) found = ProjectiveDegree{*c, r};
    }
    if (!found)
      fail(Errc::NotZeroDimensional, "non-projective variables are not nilpotent on the scheme");
    if (agreed && (agreed->degree != found->degree || agreed->dimension != found->dimension))
      fail(Errc::DegenerateSlice, "random slices disagree: " + std::to_string(agreed->degree) + " vs " +
                                      std::to_string(found->degree));
    agreed = found;
  }
  return *agreed;
}

}  // namespace isohopf

namespace isohopf {

ProjectiveDegree projective_degree_gaussian(const PolyIdeal& ideal,
                                            const std::vector<std::pair<MultiPoly, MultiPoly>>& conditions,
                                            const ProjectiveDegreeOptions& opts) {
  bool rational = std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.second.is_zero(); });
  const RingPtr& base = ideal.ring();
  ProjectiveDegreeOptions po = opts;
  if (po.proj_vars.empty()) {
    po.proj_vars.resize(base->size());
    std::iota(po.proj_vars.begin(), po.proj_vars.end(), 0);
  }
  RingPtr ring = base;
  std::vector<MultiPoly> gens = ideal.generators();
  if (rational) {
    for (const auto& c : conditions) gens.push_back(c.first);
  } else {
    std::vector<std::string> names = base->names();
    std::string iname = "imag_unit";
    while (base->index_of(iname)) iname += "_";
    names.push_back(iname);
    ring = make_ring(names);
    std::vector<std::size_t> ident(base->size());
    std::iota(ident.begin(), ident.end(), 0);
    MultiPoly iota = MultiPoly::variable(ring, base->size());
    for (auto& g : gens) g = g.rebase(ring, ident);
    for (const auto& c : conditions) gens.push_back(c.first.rebase(ring, ident) + iota * c.second.rebase(ring, ident));
    gens.push_back(iota * iota + MultiPoly::constant(ring, 1));
  }
  ProjectiveDegree pd;
  try {
    pd = projective_degree(PolyIdeal(ring, gens), po);
  } catch (const Error& e) {
    if (e.code() == Errc::EmptyScheme) return ProjectiveDegree{0, 0};
    throw;
  }
  if (!rational) {
    if (pd.degree % 2 != 0) fail(Errc::ConsistencyFailure, "odd length over the Gaussian extension");
    pd.degree /= 2;
  }
  return pd;
}

}  // namespace isohopf
