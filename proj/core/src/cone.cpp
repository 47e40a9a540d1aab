#include "isohopf/cone.hpp"

#include <algorithm>
#include <numeric>

#include "isohopf/random.hpp"

namespace isohopf {

std::vector<std::size_t> ConeData::fiber_vars() const {
  std::vector<std::size_t> v(2 * n);
  std::iota(v.begin(), v.end(), n);
  return v;
}

std::vector<MultiPoly> ConeData::fiber_coords() const {
  std::vector<MultiPoly> out;
  for (auto k : fiber_vars()) out.push_back(MultiPoly::variable(ring, k));
  return out;
}

ConeData normal_cone_ideal(const IsoSection& s, ConeMethod method, const GroebnerOptions& opts) {
  const std::size_t n = s.n(), m = s.space.rank();
  if (s.components.size() != m) fail(Errc::DimensionMismatch, "section has the wrong number of components");
  std::vector<std::string> names = s.ring->names();
  for (const auto& f : s.space.names()) {
    if (s.ring->index_of(f)) fail(Errc::InvalidArgument, "fiber name " + f + " clashes with a base variable");
    names.push_back(f);
  }
  std::string aux = "t";
  while (std::find(names.begin(), names.end(), aux) != names.end()) aux += "_";
  std::vector<std::string> ext_names = names;
  ext_names.push_back(aux);
  RingPtr ext = make_ring(ext_names);
  RingPtr ring = make_ring(names);

  std::vector<std::size_t> base_map(n);
  std::iota(base_map.begin(), base_map.end(), 0);
  const std::size_t t_index = n + m;
  MultiPoly t = MultiPoly::variable(ext, t_index);
  std::vector<MultiPoly> gens;
  PolyIdeal result;

  if (method == ConeMethod::Saturation) {
    // graph of s/t, limit t -> 0
    for (std::size_t k = 0; k < m; ++k)
      gens.push_back(t * MultiPoly::variable(ext, n + k) - s.components[k].rebase(ext, base_map));
    PolyIdeal sat = saturate(PolyIdeal(ext, gens), t, opts);
    std::vector<MultiPoly> out;
    for (const auto& g : sat.groebner(MonomialOrder::grevlex(), opts)) {
      MultiPoly h = g.substitute(t_index, MultiPoly(ext));
      if (h.is_zero()) continue;
      // back to the ring without t
      std::vector<MultiPoly> vals;
      for (std::size_t k = 0; k < n + m; ++k) vals.push_back(MultiPoly::variable(ring, k));
      vals.push_back(MultiPoly(ring));
      out.push_back(h.substitute_all(vals));
    }
    result = PolyIdeal(ring, out);
  } else {
    // Rees algebra: eliminate t from (E_k - t s_k), then add the ideal of Z(s)
    for (std::size_t k = 0; k < m; ++k)
      gens.push_back(MultiPoly::variable(ext, n + k) - t * s.components[k].rebase(ext, base_map));
    std::vector<std::size_t> elim{t_index};
    PolyIdeal rees = eliminate(PolyIdeal(ext, gens), elim, opts);
    std::vector<MultiPoly> vals;
    for (std::size_t k = 0; k < n + m; ++k) vals.push_back(MultiPoly::variable(ring, k));
    vals.push_back(MultiPoly(ring));
    std::vector<MultiPoly> out;
    for (const auto& g : rees.generators()) out.push_back(g.substitute_all(vals));
    for (const auto& c : s.components) out.push_back(c.rebase(ring, base_map));
    result = PolyIdeal(ring, out);
  }
  ConeData c;
  c.ring = ring;
  c.n = n;
  c.space = s.space;
  c.ideal = PolyIdeal(ring, result.groebner(MonomialOrder::grevlex(), opts));
  return c;
}

std::size_t segre_class(const ConeData& c, const GroebnerOptions& opts) {
  ProjectiveDegreeOptions po;
  po.proj_vars = c.fiber_vars();
  po.groebner = opts;
  ProjectiveDegree pd = projective_degree(c.ideal, po);
  if (pd.dimension != c.n - 1)
    fail(Errc::WrongDimension, "P(C) has dimension " + std::to_string(pd.dimension) + ", expected " +
                                   std::to_string(c.n - 1));
  return pd.degree;
}

std::size_t segre_class(const IsoSection& s, const GroebnerOptions& opts) {
  return segre_class(normal_cone_ideal(s, ConeMethod::Saturation, opts), opts);
}

ConeBidegree cone_bidegree_n2(const ConeData& c, std::uint64_t seed, const GroebnerOptions& opts) {
  if (c.n != 2) fail(Errc::WrongDimension, "cone bidegree needs n = 2");
  segre_class(c, opts);  // dimension check
  HyperbolicSplitting split = hyperbolic_splitting(c.space);
  Subspace pos = split.lambda();
  Subspace neg = pos;
  neg.set_column(1, split.lambda_dual().column(1));
  const auto coords = c.fiber_coords();
  long counts[2] = {-1, -1};
  for (int side = 0; side < 2; ++side) {
    for (std::uint64_t k = 0; k < 3; ++k) {
      RatMatrix g = random_special_orthogonal(c.space, mix_seed(seed, 200 + 10 * side + k));
      Subspace line = to_gauss(g) * (side == 0 ? pos : neg);
      ProjectiveDegreeOptions po;
      po.proj_vars = c.fiber_vars();
      po.seeds = {mix_seed(seed, 300 + k)};
      po.groebner = opts;
      ProjectiveDegree pd = projective_degree_gaussian(c.ideal, pairing_conditions(c.space, line, coords), po);
      if (pd.degree > 0 && pd.dimension != 0) fail(Errc::DegenerateSlice, "ruling line lies in P(C)");
      long v = static_cast<long>(pd.degree);
      if (counts[side] >= 0 && counts[side] != v)
        fail(Errc::DegenerateSlice, "ruling intersections disagree between seeds");
      counts[side] = v;
    }
  }
  // a positive line has class [P(Lambda_+)] and meets P(C) in beta points
  ConeBidegree b;
  b.beta = counts[0];
  b.alpha = counts[1];
  b.sqrt_e = b.alpha - b.beta;
  return b;
}

}  // namespace isohopf
