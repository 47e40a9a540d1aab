#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "isohopf/numeric_solve.hpp"
#include "isohopf/random.hpp"
#include "isohopf/routes.hpp"

namespace isohopf {

namespace {

constexpr double kKeepRadius = 0.5;
constexpr double kFarRadius = 2.0;
constexpr double kGap = 1e3;

Eigen::MatrixXcd to_eigen(const GaussMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Complex(m.at(r, c).re.get_d(), m.at(r, c).im.get_d());
  return out;
}

// dim(A ∩ B) for column spans, from the singular values of [orth(A) orth(B)]
int intersection_dim(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd qa = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ() *
                        Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd qb = Eigen::HouseholderQR<Eigen::MatrixXcd>(b).householderQ() *
                        Eigen::MatrixXcd::Identity(b.rows(), b.cols());
  Eigen::MatrixXcd both(a.rows(), a.cols() + b.cols());
  both << qa, qb;
  Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(both).singularValues();
  const Eigen::Index k = sv.size();
  if (sv(k - 1) > sv(0) / kGap) return 0;
  for (Eigen::Index r = k - 1; r > 0; --r) {
    if (sv(r - 1) > kGap * sv(r)) return static_cast<int>(k - r);
  }
  fail(Errc::RankAmbiguous, "no singular value gap");
}

struct Deformed {
  std::array<MultiPoly, 2> sigma, tau;
  MultiPoly f, g;
  std::vector<MultiPoly> split_components;  // (f sigma, g tau)
};

Deformed deform(const Factorization& fac, std::uint64_t seed, const Rational& t) {
  Rng rng(seed);
  RingPtr ring = fac.f.ring();
  auto bump = [&](const MultiPoly& p) { return p + MultiPoly::constant(ring, t * Rational(rng.nonzero(3))); };
  Deformed d;
  d.sigma = {bump(fac.sigma0[0]), bump(fac.sigma0[1])};
  d.tau = contract_omega(d.sigma);
  d.f = bump(fac.f);
  d.g = bump(fac.g);
  d.split_components = {d.f * d.sigma[0], d.f * d.sigma[1], d.g * d.tau[0], d.g * d.tau[1]};
  return d;
}

struct Count {
  long plus = 0, minus = 0;
  std::size_t sigma_zeros = 0, fg_zeros = 0;
};

Count count_zeros(const IsoSection& s, const Factorization& fac, std::uint64_t seed, std::size_t attempt) {
  // larger bumps on retries: near-tangent branches need room to separate
  Rational t(1, 65536);
  for (std::size_t k = 0; k < std::min<std::size_t>(attempt, 3); ++k) t *= 16;
  Deformed d = deform(fac, seed, t);
  std::vector<CPoint2> zeros;
  SolveOptions so;
  so.seed = mix_seed(seed, 1);
  auto sz = solve_square_system(d.sigma[0], d.sigma[1], so);
  so.seed = mix_seed(seed, 2);
  auto fz = solve_square_system(d.f, d.g, so);
  Count c;
  auto keep = [&](const std::vector<CPoint2>& in, std::size_t& counter) {
    for (const auto& z : in) {
      double r = std::max(std::abs(z[0]), std::abs(z[1]));
      if (r > kKeepRadius && r < kFarRadius) fail(Errc::CloseRoots, "zero in the ambiguous band");
      if (r <= kKeepRadius) {
        zeros.push_back(z);
        ++counter;
      }
    }
  };
  keep(sz, c.sigma_zeros);
  keep(fz, c.fg_zeros);

  // Jacobians in E coordinates
  Eigen::MatrixXcd basis = to_eigen(fac.splitting.basis);
  Eigen::MatrixXcd ref = to_eigen(s.space.reference());
  std::vector<std::array<MultiPoly, 2>> jac;
  for (const auto& comp : d.split_components) jac.push_back({comp.derivative(0), comp.derivative(1)});
  for (const auto& z : zeros) {
    Eigen::MatrixXcd j(4, 2);
    for (int r = 0; r < 4; ++r)
      for (int v = 0; v < 2; ++v) j(r, v) = jac[r][v].evaluate(std::span<const Complex>(z));
    Eigen::MatrixXcd je = basis * j;
    Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(je).singularValues();
    if (sv(1) < sv(0) / kGap) fail(Errc::RankAmbiguous, "zero is not simple");
    int dim = intersection_dim(je, ref);
    int sign = (dim % 2 == 0 ? 1 : -1) * s.space.orientation();
    (sign > 0 ? c.plus : c.minus)++;
  }
  return c;
}

}  // namespace

RefinedIndex route_rh4_deform(const IsoSection& s, const RouteOptions& opts) {
  if (s.n() != 2) fail(Errc::WrongDimension, "rh4 deforms only for n = 2");
  Factorization fac = factorize_n2(s, opts.seed);
  std::optional<Error> last;
  for (std::size_t attempt = 0; attempt <= opts.retries; ++attempt) {
    try {
      Count c = count_zeros(s, fac, mix_seed(opts.seed, 4000 + attempt), attempt);
      RefinedIndex r;
      r.route = "rh4";
      r.d1 = c.plus;
      r.d2 = c.minus;
      r.sqrt_e = c.plus - c.minus;
      r.diagnostics = {{"zeros_of_sigma_t", std::to_string(c.sigma_zeros)},
                       {"zeros_of_fg_t", std::to_string(c.fg_zeros)},
                       {"attempts", std::to_string(attempt + 1)}};
      return r;
    } catch (const Error& e) {
      if (e.code() != Errc::CloseRoots && e.code() != Errc::RankAmbiguous && e.code() != Errc::ResidualTooLarge)
        throw;
      last = e;
    }
  }
  throw *last;
}

}  // namespace isohopf
