#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "isohopf/groebner.hpp"
#include "isohopf/poly.hpp"

namespace isohopf {

class PolyIdeal {
 public:
  PolyIdeal() = default;
  PolyIdeal(RingPtr ring, std::vector<MultiPoly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  // Reduced basis, computed once per order and shared between copies.
  const std::vector<ModPoly>& basis(const MonomialOrder& order = MonomialOrder::grevlex(),
                                    const GroebnerOptions& opts = {}) const;
  std::vector<MultiPoly> groebner(const MonomialOrder& order = MonomialOrder::grevlex(),
                                  const GroebnerOptions& opts = {}) const;

  MultiPoly normal_form(const MultiPoly& p, const GroebnerOptions& opts = {}) const;
  bool contains(const MultiPoly& p, const GroebnerOptions& opts = {}) const;
  bool is_unit(const GroebnerOptions& opts = {}) const;

  PolyIdeal with(const std::vector<MultiPoly>& extra) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::vector<ModPoly>> bases;
  };
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// dim_Q R/I; throws NotZeroDimensional when infinite.
std::size_t colength(const PolyIdeal& ideal, const GroebnerOptions& opts = {});
std::optional<std::size_t> colength_if_finite(const PolyIdeal& ideal, const GroebnerOptions& opts = {});

// I : f^infinity
PolyIdeal saturate(const PolyIdeal& ideal, const MultiPoly& f, const GroebnerOptions& opts = {});
// I intersected with the subring free of `vars`; result kept in the same ring.
PolyIdeal eliminate(const PolyIdeal& ideal, std::span<const std::size_t> vars, const GroebnerOptions& opts = {});
// Equality via reduced grevlex bases.
bool same_ideal(const PolyIdeal& a, const PolyIdeal& b, const GroebnerOptions& opts = {});

struct ProjectiveDegreeOptions {
  std::vector<std::size_t> proj_vars;  // empty: all variables
  std::vector<std::uint64_t> seeds{11, 23, 37};
  GroebnerOptions groebner;
};

struct ProjectiveDegree {
  std::size_t degree = 0;
  std::size_t dimension = 0;
};

// Degree of the top-dimensional part of the projective scheme cut out by I in the
// `proj_vars`; remaining variables must be nilpotent and contribute multiplicity.
ProjectiveDegree projective_degree(const PolyIdeal& ideal, const ProjectiveDegreeOptions& opts = {});

// Same, after imposing conditions re_k + i*im_k = 0 with Gaussian coefficients. When some
// im_k is nonzero the count is taken over Q(i) by adjoining a square root of -1.
// An empty scheme gives degree 0 instead of throwing.
ProjectiveDegree projective_degree_gaussian(const PolyIdeal& ideal,
                                            const std::vector<std::pair<MultiPoly, MultiPoly>>& conditions,
                                            const ProjectiveDegreeOptions& opts = {});

// Random linear form sum c_k x_k over the given variables, small nonzero integer coefficients.
MultiPoly random_linear_form(const RingPtr& ring, std::span<const std::size_t> vars, std::uint64_t seed);

}  // namespace isohopf
