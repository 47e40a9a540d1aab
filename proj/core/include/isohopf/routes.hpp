#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isohopf/groebner.hpp"
#include "isohopf/iso_section.hpp"

namespace isohopf {

using Diagnostics = std::vector<std::pair<std::string, std::string>>;

struct RefinedIndex {
  long sqrt_e = 0;
  std::optional<long> d1, d2;
  std::string route;
  Diagnostics diagnostics;
};

// Degrees of the two ruling components for homogeneous sections.
struct RulingDegrees {
  long d_plus = 0;
  long d_minus = 0;
};

struct RouteOptions {
  std::uint64_t seed = 0;
  GroebnerOptions groebner;
  std::size_t retries = 5;
};

// Local multiplicity of a map C^n -> C^n at an isolated zero.
std::size_t classical_hopf_length(const std::vector<MultiPoly>& f, const GroebnerOptions& opts = {});

RefinedIndex route_rh3(const IsoSection& s, const RouteOptions& opts = {});
RefinedIndex route_rh5_homogeneous(const IsoSection& s, const RouteOptions& opts = {},
                                   RulingDegrees* degrees = nullptr);
RefinedIndex route_oh5_incidence(const IsoSection& s, const RouteOptions& opts = {},
                                 RulingDegrees* degrees = nullptr);
RefinedIndex route_rh7_clifford(const IsoSection& s, const RouteOptions& opts = {});
RefinedIndex route_oh8_torus(const IsoSection& s, const RouteOptions& opts = {});
RefinedIndex route_oh3_factored(const IsoSection& s, const Subspace& lambda, const RouteOptions& opts = {});
// A constant maximal isotropic subspace containing every value of s: the reference plane,
// its negative neighbour, or a coordinate plane.
std::optional<Subspace> find_containing_isotropic(const IsoSection& s);
RefinedIndex route_rh4_deform(const IsoSection& s, const RouteOptions& opts = {});

// Spin model: E = Hom(M+, M-) with q = det, s = v (x) F.
struct SpinData {
  RingPtr ring;                 // two base variables
  std::vector<long> base_weights;
  std::array<long, 2> m_plus;   // weights of M+
  std::array<long, 2> m_minus;  // weights of M-
  std::array<MultiPoly, 2> F;   // section of (M+)*
  std::array<MultiPoly, 2> v;   // section of M-
  int orientation = 1;
};

// The rank-4 section (v2 F2, v1 F1, v2 F1, -v1 F2) in X Y + Z W.
IsoSection spin_section(const SpinData& data);
RefinedIndex route_rh8_spin(const SpinData& data, const RouteOptions& opts = {});

}  // namespace isohopf
