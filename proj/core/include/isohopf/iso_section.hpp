#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "isohopf/groebner.hpp"
#include "isohopf/poly.hpp"
#include "isohopf/quad_space.hpp"

namespace isohopf {

// A C*-action: t.x_k = t^{base[k]} x_k on the base, t.e_k = t^{fiber[k]} e_k on E.
struct TorusWeights {
  std::vector<long> base;
  std::vector<long> fiber;
};

// Germ of an isotropic section s: (C^n, 0) -> E, components in the coordinates of E.
struct IsoSection {
  RingPtr ring;
  QuadSpace space;
  std::vector<MultiPoly> components;
  std::optional<TorusWeights> torus;

  std::size_t n() const { return ring->size(); }
};

// Checks isotropy, the isolated zero at the origin and the torus data; returns the input.
IsoSection validate(IsoSection raw, const GroebnerOptions& opts = {});

// q(s) as a polynomial (zero for isotropic sections)
MultiPoly quadratic_value(const QuadSpace& e, const std::vector<MultiPoly>& s);

// Real and imaginary parts of the pairings B(v, lambda_r), one per column of the plane,
// where v has the given polynomial coordinates.
std::vector<std::pair<MultiPoly, MultiPoly>> pairing_conditions(const QuadSpace& e, const Subspace& plane,
                                                                const std::vector<MultiPoly>& coords);

struct SigmaTau {
  std::vector<MultiPoly> sigma;  // Lambda coordinates
  std::vector<MultiPoly> tau;    // Lambda* coordinates
};

SigmaTau split_sigma_tau(const IsoSection& s, const HyperbolicSplitting& split);
// sigma contracted with the volume form of Lambda* (n = 2): (-sigma2, sigma1)
std::array<MultiPoly, 2> contract_omega(const std::array<MultiPoly, 2>& sigma);

// s = f sigma0 + g tau0 with tau0 = sigma0 contracted with omega.
struct Factorization {
  MultiPoly f, g;
  std::array<MultiPoly, 2> sigma0, tau0;
  HyperbolicSplitting splitting;
  SigmaTau split;
  bool perturbed = false;
};

Factorization factorize_n2(const IsoSection& s, std::uint64_t seed = 0);
Factorization factorize_n2(const IsoSection& s, const HyperbolicSplitting& split);

// Substitute x -> weights-scaled copies etc. Scaling every component by a nonzero constant.
IsoSection scaled(const IsoSection& s, const Rational& c);
IsoSection with_orientation(const IsoSection& s, int unit);

}  // namespace isohopf
