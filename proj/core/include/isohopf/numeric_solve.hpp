#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "isohopf/poly.hpp"

namespace isohopf {

using Complex = std::complex<double>;
using CPoint2 = std::array<Complex, 2>;

// Roots of sum c_k z^k (coefficients low to high) as companion-matrix eigenvalues.
std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs);

struct SolveOptions {
  std::uint64_t seed = 0;
  double residual_tol = 1e-10;
  int newton_steps = 60;
};

// All common zeros in C^2 of two polynomials in a two-variable ring, assuming they are
// finitely many and simple. Throws CloseRoots / ResidualTooLarge when that fails numerically.
std::vector<CPoint2> solve_square_system(const MultiPoly& p, const MultiPoly& q, const SolveOptions& opts = {});

}  // namespace isohopf
