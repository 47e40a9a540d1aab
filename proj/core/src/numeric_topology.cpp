#include "isohopf/numeric_topology.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "isohopf/random.hpp"

namespace isohopf {

RealSplit real_split_section(const IsoSection& s) {
  const std::size_t n = s.n();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("u" + std::to_string(k + 1));
    names.push_back("v" + std::to_string(k + 1));
  }
  names.push_back("imag_unit");
  RingPtr ext = make_ring(names);
  RingPtr ring = make_ring(std::vector<std::string>(names.begin(), names.end() - 1));
  const std::size_t iota = 2 * n;
  MultiPoly i = MultiPoly::variable(ext, iota);
  std::vector<MultiPoly> subst;
  for (std::size_t k = 0; k < n; ++k)
    subst.push_back(MultiPoly::variable(ext, 2 * k) + i * MultiPoly::variable(ext, 2 * k + 1));

  // real and imaginary parts of every component
  std::vector<MultiPoly> re, im;
  for (const auto& c : s.components) {
    MultiPoly full = c.substitute_all(subst);
    MultiPoly r(ring), m(ring);
    for (const auto& [mono, coef] : full.terms()) {
      Monomial rest = mono;
      unsigned e = rest.exp[iota];
      rest.exp[iota] = 0;
      Monomial trimmed;
      for (std::size_t v = 0; v < 2 * n; ++v) trimmed.exp[v] = rest.exp[v];
      MultiPoly t = MultiPoly::term(ring, trimmed, coef);
      switch (e % 4) {
        case 0: r += t; break;
        case 1: m += t; break;
        case 2: r -= t; break;
        default: m -= t; break;
      }
    }
    re.push_back(r);
    im.push_back(m);
  }
  GaussMatrix pinv = inverse(real_form_coordinates(s.space));
  RealSplit out;
  out.ring = ring;
  for (std::size_t row = 0; row < pinv.rows(); ++row) {
    MultiPoly a(ring), b(ring);
    for (std::size_t k = 0; k < pinv.cols(); ++k) {
      const Gauss& w = pinv.at(row, k);
      // (w.re + i w.im)(re + i im)
      a += re[k] * w.re - im[k] * w.im;
      b += im[k] * w.re + re[k] * w.im;
    }
    out.a.push_back(a);
    out.b.push_back(b);
  }
  return out;
}

namespace {

// polynomial flattened for fast double evaluation
struct FlatPoly {
  std::vector<double> coef;
  std::vector<std::vector<unsigned>> exps;

  explicit FlatPoly(const MultiPoly& p, std::size_t nv) {
    for (const auto& [mono, c] : p.terms()) {
      coef.push_back(c.get_d());
      exps.emplace_back(mono.exp.begin(), mono.exp.begin() + nv);
    }
  }
  double eval(const std::vector<std::vector<double>>& powers) const {
    double acc = 0;
    for (std::size_t t = 0; t < coef.size(); ++t) {
      double v = coef[t];
      for (std::size_t k = 0; k < exps[t].size(); ++k) v *= powers[k][exps[t][k]];
      acc += v;
    }
    return acc;
  }
};

constexpr double kPhi3 = 1.2207440845607;  // real root of x^4 = x + 1
constexpr std::size_t kBatch = 4096;

}  // namespace

SphereDegree sphere_map_degree(const std::vector<MultiPoly>& f, const SphereDegreeOptions& opts) {
  const std::size_t m = f.size();
  if (m < 2) fail(Errc::WrongDimension, "sphere maps need at least two components");
  if (f.front().ring()->size() != m) fail(Errc::DimensionMismatch, "map must have as many components as variables");
  if (opts.samples == 0 || opts.samples > opts.max_samples)
    fail(Errc::BudgetExceeded, "sample budget " + std::to_string(opts.samples) + " outside the allowed range");
  std::vector<FlatPoly> val;
  std::vector<std::vector<FlatPoly>> jac(m);
  unsigned maxdeg = 1;
  for (std::size_t r = 0; r < m; ++r) {
    val.emplace_back(f[r], m);
    maxdeg = std::max<unsigned>(maxdeg, static_cast<unsigned>(std::max<long>(0, f[r].total_degree())));
    for (std::size_t c = 0; c < m; ++c) jac[r].emplace_back(f[r].derivative(c), m);
  }

  Rng rng(mix_seed(opts.seed, 0x7090));
  const double shift[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
  const double alpha[3] = {1 / kPhi3, 1 / (kPhi3 * kPhi3), 1 / (kPhi3 * kPhi3 * kPhi3)};
  const bool quaternion = m == 4;

  std::vector<double> batch_sums;
  std::vector<std::vector<double>> powers(m, std::vector<double>(maxdeg + 1, 1.0));
  Eigen::MatrixXd mat(m, m), tangent(m, m - 1), dg(m, m);
  Eigen::VectorXd p(m), g(m);
  std::normal_distribution<double> normal;
  for (std::size_t start = 0; start < opts.samples; start += kBatch) {
    const std::size_t stop = std::min(opts.samples, start + kBatch);
    double sum = 0;
    for (std::size_t idx = start; idx < stop; ++idx) {
      if (quaternion) {
        double u[3];
        for (int k = 0; k < 3; ++k) {
          double v = shift[k] + alpha[k] * static_cast<double>(idx + 1);
          u[k] = v - std::floor(v);
        }
        const double r1 = std::sqrt(1 - u[0]), r2 = std::sqrt(u[0]);
        const double t1 = 2 * std::numbers::pi * u[1], t2 = 2 * std::numbers::pi * u[2];
        p << r1 * std::sin(t1), r1 * std::cos(t1), r2 * std::sin(t2), r2 * std::cos(t2);
        // p*i, p*j, p*k for p = (w, x, y, z)
        const double w = p(0), x = p(1), y = p(2), z = p(3);
        tangent.col(0) << -x, w, z, -y;
        tangent.col(1) << -y, -z, w, x;
        tangent.col(2) << -z, y, -x, w;
      } else {
        for (std::size_t k = 0; k < m; ++k) p(k) = normal(rng.engine());
        p.normalize();
        // Householder reflection sending e0 to p; its other columns span the tangent space
        Eigen::VectorXd v = p;
        v(0) -= 1;
        Eigen::MatrixXd h = Eigen::MatrixXd::Identity(m, m);
        if (v.norm() > 1e-12) h -= 2 * v * v.transpose() / v.squaredNorm();
        tangent = h.rightCols(m - 1);
        if (v.norm() > 1e-12) tangent.col(0) = -tangent.col(0);
      }
      for (std::size_t k = 0; k < m; ++k)
        for (unsigned e = 1; e <= maxdeg; ++e) powers[k][e] = powers[k][e - 1] * p(k);
      for (std::size_t r = 0; r < m; ++r) {
        g(r) = val[r].eval(powers);
        for (std::size_t c = 0; c < m; ++c) dg(r, c) = jac[r][c].eval(powers);
      }
      const double norm = g.norm();
      if (norm == 0) fail(Errc::ResidualTooLarge, "map vanishes at a sample point");
      mat.col(0) = g;
      mat.rightCols(m - 1) = dg * tangent;
      sum += mat.determinant() / std::pow(norm, static_cast<double>(m));
    }
    batch_sums.push_back(sum);
  }
  double total = 0;
  for (double s : batch_sums) total += s;
  SphereDegree out;
  out.raw = total / static_cast<double>(opts.samples);
  out.degree = std::lround(out.raw);
  out.residual = std::abs(out.raw - static_cast<double>(out.degree));
  if (out.residual > 0.25)
    fail(Errc::ResidualTooLarge, "winding estimate " + std::to_string(out.raw) + " is far from an integer");
  return out;
}

WindingCheck oh1_check(const IsoSection& s, const SphereDegreeOptions& opts) {
  RealSplit rs = real_split_section(s);
  WindingCheck w;
  w.plus = sphere_map_degree(rs.a, opts);
  w.minus = sphere_map_degree(rs.b, opts);
  if (w.plus.degree != w.minus.degree)
    fail(Errc::WindingMismatch, "deg s+ = " + std::to_string(w.plus.degree) + " but deg s- = " +
                                    std::to_string(w.minus.degree));
  w.degree = w.plus.degree;
  return w;
}

}  // namespace isohopf
