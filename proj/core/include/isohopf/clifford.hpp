#pragma once

#include <vector>

#include "isohopf/iso_section.hpp"
#include "isohopf/module.hpp"

namespace isohopf {

// Clifford multiplication by s = sigma + tau on the exterior algebra of Lambda*,
// d = tau wedge + sigma contract, split into even -> odd and odd -> even parts.
struct CliffordComplex {
  std::vector<std::vector<std::size_t>> even_basis;  // subsets, sorted
  std::vector<std::vector<std::size_t>> odd_basis;
  PolyMatrix d_even;  // rows: odd basis, cols: even basis
  PolyMatrix d_odd;   // rows: even basis, cols: odd basis
};

CliffordComplex clifford_complex(const SigmaTau& st, const RingPtr& ring);
// both composites vanish identically
bool is_two_periodic(const CliffordComplex& c);

}  // namespace isohopf
