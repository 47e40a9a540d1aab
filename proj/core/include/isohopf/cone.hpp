#pragma once

#include <cstdint>
#include <vector>

#include "isohopf/ideal.hpp"
#include "isohopf/iso_section.hpp"

namespace isohopf {

// Normal cone of Z(s) inside C^n, as an ideal in the base variables followed by the
// fiber coordinates of E. Homogeneous in the fiber coordinates.
struct ConeData {
  RingPtr ring;
  std::size_t n = 0;
  QuadSpace space;
  PolyIdeal ideal;

  std::vector<std::size_t> fiber_vars() const;
  std::vector<MultiPoly> fiber_coords() const;
};

enum class ConeMethod { Saturation, Rees };

ConeData normal_cone_ideal(const IsoSection& s, ConeMethod method = ConeMethod::Saturation,
                           const GroebnerOptions& opts = {});

// Degree of P(C) in P^{2n-1}.
std::size_t segre_class(const ConeData& c, const GroebnerOptions& opts = {});
std::size_t segre_class(const IsoSection& s, const GroebnerOptions& opts = {});

// [P(C)] = alpha [P(Lambda_+)] + beta [P(Lambda_-)] on the quadric in P^3.
struct ConeBidegree {
  long alpha = 0;
  long beta = 0;
  long sqrt_e = 0;
};

ConeBidegree cone_bidegree_n2(const ConeData& c, std::uint64_t seed = 0, const GroebnerOptions& opts = {});

}  // namespace isohopf
