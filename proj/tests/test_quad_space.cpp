#include <gtest/gtest.h>

#include "isohopf/error.hpp"
#include "isohopf/quad_space.hpp"
#include "isohopf/random.hpp"
#include "isohopf/routes.hpp"
#include "helpers.hpp"

using namespace isohopf;
using testing_helpers::span_of;

namespace {

// the other family: swap the last hyperbolic pair of the reference
Subspace negative_plane(const QuadSpace& e) {
  HyperbolicSplitting s = hyperbolic_splitting(e);
  const std::size_t n = e.half_rank();
  Subspace l = s.lambda();
  l.set_column(n - 1, s.lambda_dual().column(n - 1));
  return l;
}

Subspace act(const RatMatrix& g, const Subspace& l) { return to_gauss(g) * l; }

}  // namespace

TEST(QuadSpace, MaximalIsotropicExamples) {
  QuadSpace e = QuadSpace::hyperbolic(2);  // X Y + Z W
  EXPECT_TRUE(is_maximal_isotropic(e, span_of(4, {{1, 0, 0, 0}, {0, 0, 0, 1}})));
  EXPECT_FALSE(is_maximal_isotropic(e, span_of(4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  EXPECT_FALSE(is_maximal_isotropic(e, span_of(4, {{1, 0, 0, 0}})));
  EXPECT_TRUE(is_isotropic_subspace(e, span_of(4, {{1, 0, 0, 0}})));
}

TEST(QuadSpace, SignExamples) {
  QuadSpace e = QuadSpace::hyperbolic(2);
  Subspace ref = span_of(4, {{1, 0, 0, 0}, {0, 0, 0, 1}});
  Subspace xz = span_of(4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(isotropic_sign(e, ref), 1);
  EXPECT_EQ(isotropic_sign(e, e.reference()), 1);
  EXPECT_EQ(isotropic_sign(e, xz), -1);
  QuadSpace flipped = e.with_orientation(-1);
  EXPECT_EQ(isotropic_sign(flipped, ref), -1);
  EXPECT_EQ(isotropic_sign(flipped, xz), 1);
}

TEST(QuadSpace, SignRejectsNonMaximal) {
  QuadSpace e = QuadSpace::hyperbolic(2);
  try {
    isotropic_sign(e, span_of(4, {{1, 0, 0, 0}}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NotMaximalIsotropic);
  }
}

TEST(QuadSpace, ParityLaw) {
  for (std::size_t n : {2u, 3u}) {
    QuadSpace e = QuadSpace::hyperbolic(n);
    Subspace pos = e.reference(), neg = negative_plane(e);
    ASSERT_EQ(isotropic_sign(e, neg), -1);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      RatMatrix g1 = random_special_orthogonal(e, seed), g2 = random_special_orthogonal(e, seed + 100);
      for (const Subspace& a : {act(g1, pos), act(g1, neg)})
        for (const Subspace& b : {act(g2, pos), act(g2, neg), act(g1, pos)}) {
          const std::size_t dim = intersection_dim(a, b);
          const int expected = ((n - dim) % 2 == 0) ? 1 : -1;
          EXPECT_EQ(isotropic_sign(e, a) * isotropic_sign(e, b), expected) << "n=" << n << " seed=" << seed;
        }
    }
  }
}

TEST(QuadSpace, SignInvariantUnderSpecialOrthogonal) {
  QuadSpace e = QuadSpace::hyperbolic(2);
  Subspace pos = e.reference(), neg = negative_plane(e);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RatMatrix g = random_special_orthogonal(e, seed);
    EXPECT_EQ(isotropic_sign(e, act(g, pos)), 1);
    EXPECT_EQ(isotropic_sign(e, act(g, neg)), -1);
  }
}

TEST(QuadSpace, RandomSpecialOrthogonalIsAnIsometry) {
  for (QuadSpace e : {QuadSpace::hyperbolic(2), QuadSpace::hyperbolic(3), QuadSpace::eg2()}) {
    RatMatrix a = random_special_orthogonal(e, 5), b = random_special_orthogonal(e, 6);
    EXPECT_EQ(a.transpose() * e.gram() * a, e.gram());
    EXPECT_EQ(determinant(a), Rational(1));
    EXPECT_FALSE(a == b);
  }
  QuadSpace e = QuadSpace::hyperbolic(2);
  EXPECT_EQ(cayley_transform(e, RatMatrix(4, 4)), RatMatrix::identity(4));
}

TEST(QuadSpace, HyperbolicSplittingIdentities) {
  QuadSpace e = QuadSpace::hyperbolic(2);
  HyperbolicSplitting s = rational_hyperbolic_splitting(e);
  RatMatrix p = s.rational_basis();
  // Lambda = span(dX, dW), Lambda* = span(dY, dZ)
  EXPECT_EQ(intersection_dim(s.lambda(), span_of(4, {{1, 0, 0, 0}, {0, 0, 0, 1}})), 2u);
  EXPECT_EQ(intersection_dim(s.lambda_dual(), span_of(4, {{0, 1, 0, 0}, {0, 0, 1, 0}})), 2u);
  RatMatrix h(4, 4);
  h.at(0, 2) = h.at(2, 0) = h.at(1, 3) = h.at(3, 1) = Rational(1, 2);
  EXPECT_EQ(p.transpose() * e.gram() * p, h);
  EXPECT_EQ(p * s.rational_inverse(), RatMatrix::identity(4));
}

TEST(QuadSpace, Eg2SplitsOnlyOverGaussianRationals) {
  QuadSpace e = QuadSpace::eg2();
  HyperbolicSplitting s = hyperbolic_splitting(e);
  GaussMatrix b = to_gauss(e.gram());
  GaussMatrix g = s.basis.transpose() * b * s.basis;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Gauss expected = ((i + 3 == j) || (j + 3 == i)) ? Gauss(Rational(1, 2)) : Gauss(0);
      EXPECT_EQ(g.at(i, j), expected) << i << "," << j;
    }
  EXPECT_FALSE(s.is_rational());
  try {
    rational_hyperbolic_splitting(e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NoRationalSplitting);
  }
}

TEST(QuadSpace, SumOfSquaresHasNoRationalSplitting) {
  try {
    rational_hyperbolic_splitting(QuadSpace::sum_of_squares(4));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NoRationalSplitting);
  }
  EXPECT_FALSE(find_hyperbolic_basis(QuadSpace::sum_of_squares(4).gram(), false).has_value());
}

TEST(QuadSpace, RealFormCoordinates) {
  for (QuadSpace e : {QuadSpace::hyperbolic(1), QuadSpace::hyperbolic(2), QuadSpace::sum_of_squares(4)}) {
    GaussMatrix p = real_form_coordinates(e);
    GaussMatrix c = p.transpose() * to_gauss(e.gram()) * p;
    EXPECT_EQ(c, GaussMatrix::identity(e.rank()));
  }
  EXPECT_EQ(real_form_coordinates(QuadSpace::sum_of_squares(4)), GaussMatrix::identity(4));
}

TEST(QuadSpace, EnvelopesOfCoordinatePoint) {
  QuadSpace e = QuadSpace::hyperbolic(2);
  std::vector<Rational> v{1, 0, 0, 0};
  auto env = isotropic_envelopes_n2(e, v);
  EXPECT_EQ(isotropic_sign(e, env.plus), 1);
  EXPECT_EQ(isotropic_sign(e, env.minus), -1);
  EXPECT_EQ(intersection_dim(env.plus, env.minus), 1u);
  // (X, Y, Z, W) = (ac, -bd, ad, bc) at (a, b, c, d) = (1, 0, 1, 0); sigma = (X, W), tau = (Y, Z)
  auto proj = quadric_projections_n2({v[0], v[3], v[1], v[2]});
  EXPECT_EQ(proj.in_plus[1], 0);
  EXPECT_NE(proj.in_plus[0], 0);
  EXPECT_EQ(proj.in_minus[1], 0);
  EXPECT_NE(proj.in_minus[0], 0);
}

TEST(QuadSpace, EnvelopesReconstructRandomIsotropicVectors) {
  QuadSpace e = QuadSpace::hyperbolic(2);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    Rational a = rng.integer(-4, 4), b = rng.integer(-4, 4), c = rng.integer(-4, 4), d = rng.integer(-4, 4);
    if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
    std::vector<Rational> v{a * c, -b * d, a * d, b * c};
    ASSERT_EQ(e.value(v), 0);
    auto env = isotropic_envelopes_n2(e, v);
    GaussMatrix vv(4, 1);
    for (std::size_t k = 0; k < 4; ++k) vv.at(k, 0) = Gauss(v[k]);
    EXPECT_EQ(intersection_dim(env.plus, vv), 1u);
    EXPECT_EQ(intersection_dim(env.minus, vv), 1u);
    EXPECT_EQ(intersection_dim(env.plus, env.minus), 1u);
    EXPECT_EQ(isotropic_sign(e, env.plus), 1);
    EXPECT_EQ(isotropic_sign(e, env.minus), -1);
    auto proj = quadric_projections_n2({v[0], v[3], v[1], v[2]});
    auto st = quadric_point_n2(proj.in_plus, proj.in_minus);
    std::vector<Rational> back{st[0], st[2], st[3], st[1]};
    // projectively equal: all 2x2 minors vanish
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(back[i] * v[j], back[j] * v[i]);
  }
}
