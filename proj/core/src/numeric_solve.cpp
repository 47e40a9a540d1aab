#include "isohopf/numeric_solve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "isohopf/error.hpp"
#include "isohopf/poly_algo.hpp"
#include "isohopf/random.hpp"

namespace isohopf {

std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == Complex(0)) --deg;
  if (deg <= 1) return {};
  const std::size_t m = deg - 1;
  // factor out roots at zero exactly
  std::size_t low = 0;
  while (low < m && coeffs[low] == Complex(0)) ++low;
  std::vector<Complex> roots(low, Complex(0));
  const std::size_t k = m - low;
  if (k == 0) return roots;
  const Complex lead = coeffs[deg - 1];
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(k, k);
  for (std::size_t r = 1; r < k; ++r) comp(r, r - 1) = 1;
  for (std::size_t r = 0; r < k; ++r) comp(r, k - 1) = -coeffs[low + r] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) fail(Errc::CloseRoots, "eigenvalue iteration did not converge");
  for (Eigen::Index r = 0; r < es.eigenvalues().size(); ++r) roots.push_back(es.eigenvalues()(r));
  return roots;
}

namespace {

std::vector<Complex> to_complex_coeffs(const MultiPoly& univariate, std::size_t var) {
  std::vector<Complex> out;
  for (const auto& c : coefficients_in(univariate, var)) {
    Rational v = c.is_zero() ? Rational(0) : c.evaluate(std::vector<Rational>(c.ring()->size(), Rational(0)));
    out.emplace_back(v.get_d(), 0.0);
  }
  return out;
}

struct System {
  MultiPoly p, q, px, py, qx, qy;
  explicit System(MultiPoly a, MultiPoly b)
      : p(std::move(a)), q(std::move(b)), px(p.derivative(0)), py(p.derivative(1)), qx(q.derivative(0)),
        qy(q.derivative(1)) {}
  double residual(const CPoint2& z) const {
    return std::max(std::abs(p.evaluate(std::span<const Complex>(z))), std::abs(q.evaluate(std::span<const Complex>(z))));
  }
  // returns false when the Jacobian degenerates
  bool newton(CPoint2& z, int steps, double tol) const {
    for (int it = 0; it < steps; ++it) {
      std::span<const Complex> pt(z);
      Complex f = p.evaluate(pt), g = q.evaluate(pt);
      Complex a = px.evaluate(pt), b = py.evaluate(pt), c = qx.evaluate(pt), d = qy.evaluate(pt);
      Complex det = a * d - b * c;
      if (std::abs(det) == 0.0) return false;
      Complex dx = (d * f - b * g) / det, dy = (a * g - c * f) / det;
      z[0] -= dx;
      z[1] -= dy;
      double step = std::max(std::abs(dx), std::abs(dy));
      if (step < 1e-15 * (1 + std::max(std::abs(z[0]), std::abs(z[1]))) && residual(z) < tol) return true;
    }
    return residual(z) < tol;
  }
};

}  // namespace

std::vector<CPoint2> solve_square_system(const MultiPoly& p, const MultiPoly& q, const SolveOptions& opts) {
  RingPtr ring = p.ring();
  if (!ring || ring->size() != 2 || !same_ring(ring, q.ring()))
    fail(Errc::WrongDimension, "square solver works in two variables");
  if (p.is_zero() || q.is_zero()) fail(Errc::NotZeroDimensional, "zero equation");
  if (p.total_degree() == 0 || q.total_degree() == 0) return {};

  // generic linear change x = X + l*Y, y = m*X + Y
  // redrawn until both equations keep their full degree in X
  Rng rng(mix_seed(opts.seed, 0x5eed));
  MultiPoly X = MultiPoly::variable(ring, 0), Y = MultiPoly::variable(ring, 1);
  Rational l, m;
  MultiPoly ps(ring), qs(ring);
  for (int attempt = 0;; ++attempt) {
    if (attempt == 32) fail(Errc::CloseRoots, "no generic shear found");
    l = Rational(rng.nonzero(7), 8);
    m = Rational(rng.nonzero(7), 9);
    l.canonicalize();
    m.canonicalize();
    std::vector<MultiPoly> change{X + Y * l, X * m + Y};
    ps = p.substitute_all(change);
    qs = q.substitute_all(change);
    if (ps.degree_in(0) == p.total_degree() && qs.degree_in(0) == q.total_degree()) break;
  }
  MultiPoly res = resultant(ps, qs, 0);
  if (res.is_zero()) fail(Errc::NotZeroDimensional, "equations share a common factor");
  System sheared(ps, qs);
  std::vector<CPoint2> found;
  for (Complex yk : univariate_roots(to_complex_coeffs(res, 1))) {
    std::vector<Complex> cx;
    for (const auto& c : coefficients_in(ps, 0)) {
      std::array<Complex, 2> pt{Complex(0), yk};
      cx.push_back(c.evaluate(std::span<const Complex>(pt)));
    }
    auto xs = univariate_roots(cx);
    if (xs.empty()) fail(Errc::CloseRoots, "no fibre candidates");
    CPoint2 best{};
    double best_res = INFINITY;
    for (Complex xc : xs) {
      CPoint2 z{xc, yk};
      double r = sheared.residual(z);
      if (r < best_res) best_res = r, best = z;
    }
    if (!sheared.newton(best, opts.newton_steps, opts.residual_tol))
      fail(Errc::ResidualTooLarge, "Newton polish did not reach the tolerance");
    found.push_back(best);
  }
  // undo the change of variables
  std::vector<CPoint2> out;
  for (const auto& z : found) {
    CPoint2 w{z[0] + z[1] * l.get_d(), z[0] * m.get_d() + z[1]};
    for (const auto& o : out)
      if (std::abs(o[0] - w[0]) + std::abs(o[1] - w[1]) < 1e-9 * (1 + std::abs(w[0]) + std::abs(w[1])))
        fail(Errc::CloseRoots, "two computed zeros coincide");
    out.push_back(w);
  }
  System original(p, q);
  for (auto& w : out)
    if (!original.newton(w, opts.newton_steps, opts.residual_tol))
      fail(Errc::ResidualTooLarge, "zero does not polish in original coordinates");
  return out;
}

}  // namespace isohopf
