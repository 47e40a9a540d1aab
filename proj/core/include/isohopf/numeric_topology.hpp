#pragma once

#include <cstdint>
#include <vector>

#include "isohopf/iso_section.hpp"

namespace isohopf {

// s = P(a + i b) in orthonormal real coordinates, as real polynomials in
// (u1, v1, ..., un, vn) with x_k = u_k + i v_k.
struct RealSplit {
  RingPtr ring;
  std::vector<MultiPoly> a, b;
};

RealSplit real_split_section(const IsoSection& s);

struct SphereDegreeOptions {
  std::size_t samples = 200000;
  std::uint64_t seed = 0;
  std::size_t max_samples = 50000000;
};

struct SphereDegree {
  long degree = 0;
  double raw = 0;
  double residual = 0;
};

// Degree of x -> F(x)/|F(x)| on the unit sphere of R^m; F has m components in m variables.
SphereDegree sphere_map_degree(const std::vector<MultiPoly>& f, const SphereDegreeOptions& opts = {});

struct WindingCheck {
  long degree = 0;
  SphereDegree plus, minus;
};

// deg s_+ and deg s_-, required to agree.
WindingCheck oh1_check(const IsoSection& s, const SphereDegreeOptions& opts = {});

}  // namespace isohopf
