#include <gtest/gtest.h>

#include <set>

#include "isohopf/clifford.hpp"
#include "isohopf/error.hpp"
#include "isohopf/groebner.hpp"
#include "isohopf/ideal.hpp"
#include "isohopf/module.hpp"
#include "isohopf/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace isohopf;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

PolyIdeal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(parse_poly(r, s));
  return PolyIdeal(r, g);
}

std::set<std::string> strings(const std::vector<MultiPoly>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST(Groebner, LexExample) {
  auto r = make_ring({"y", "x"});  // y > x in lex
  auto b = ideal(r, {"y - x^2", "x*y"}).groebner(MonomialOrder::lex());
  EXPECT_EQ(strings(b), strings({parse_poly(r, "y - x^2"), parse_poly(r, "x^3")}));
}

TEST(Groebner, AlreadyReduced) {
  auto r = xy();
  EXPECT_EQ(strings(ideal(r, {"x", "y"}).groebner()), strings({parse_poly(r, "x"), parse_poly(r, "y")}));
  EXPECT_EQ(strings(ideal(r, {"x^2", "y^2", "x*y"}).groebner()),
            strings({parse_poly(r, "x^2"), parse_poly(r, "x*y"), parse_poly(r, "y^2")}));
}

TEST(Groebner, StepBudgetRaisesResourceExhausted) {
  auto r = make_ring({"x", "y", "z"});
  GroebnerOptions tiny;
  tiny.step_budget = 1;
  try {
    // cyclic-3; coprime leading terms would need no reductions at all
    colength(ideal(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ResourceExhausted);
  }
}

TEST(Colength, Examples) {
  auto r = xy();
  EXPECT_EQ(colength(ideal(r, {"x^2", "y^2", "x*y"})), 3u);
  EXPECT_EQ(colength(ideal(r, {"x", "y"})), 1u);
  EXPECT_EQ(colength(ideal(r, {"x", "y^2"})), 2u);
  for (long d = 1; d <= 4; ++d)
    for (long i = 0; i <= d; ++i)
      for (long j = 0; j <= d; ++j) {
        MultiPoly x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
        PolyIdeal I(r, {x.pow(i), y.pow(d - j)});
        EXPECT_EQ(static_cast<long>(colength(I)), i * (d - j));
      }
}

TEST(Colength, InfiniteRaises) {
  auto r = xy();
  EXPECT_FALSE(colength_if_finite(ideal(r, {"x*y"})).has_value());
  try {
    colength(ideal(r, {"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotZeroDimensional);
  }
}

TEST(Colength, LexAndGrevlexAgree) {
  auto r = xy();
  Rng rng(3);
  for (int t = 0; t < 15; ++t) {
    MultiPoly f = testing_helpers::random_germ(r, static_cast<unsigned>(rng.integer(1, 3)), rng);
    MultiPoly g = testing_helpers::random_germ(r, static_cast<unsigned>(rng.integer(1, 3)), rng);
    PolyIdeal I(r, {f, g});
    auto gl = colength_if_finite(I);
    auto lx = count_standard_monomials(I.basis(MonomialOrder::lex()), 2, 1);
    EXPECT_EQ(gl, lx);
  }
}

TEST(Colength, MatchesTruncationOracle) {
  auto r = xy();
  Rng rng(17);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    MultiPoly f = testing_helpers::random_form(r, static_cast<unsigned>(rng.integer(1, 3)), rng);
    MultiPoly g = testing_helpers::random_form(r, static_cast<unsigned>(rng.integer(1, 3)), rng);
    PolyIdeal I(r, {f, g});
    auto c = colength_if_finite(I);
    if (!c) continue;
    ++checked;
    EXPECT_EQ(*c, oracle::local_length({f, g}, 2));
  }
  EXPECT_GT(checked, 10);
}

TEST(Colength, BezoutOnGenericCompleteIntersections) {
  auto r = xy();
  Rng rng(23);
  for (int t = 0; t < 15; ++t) {
    long a = rng.integer(1, 4), b = rng.integer(1, 4);
    MultiPoly f = testing_helpers::random_form(r, a, rng, 5), g = testing_helpers::random_form(r, b, rng, 5);
    PolyIdeal I(r, {f, g});
    auto c = colength_if_finite(I);
    if (!c) continue;  // common linear factor
    EXPECT_EQ(static_cast<long>(*c), oracle::bezout({a, b})) << f.to_string() << " , " << g.to_string();
  }
}

TEST(Saturate, Examples) {
  auto r = xy();
  // x(x, y) : x = (x, y), and (x, y) : x = (1)
  EXPECT_TRUE(same_ideal(saturate(ideal(r, {"x^2", "x*y"}), parse_poly(r, "x")), ideal(r, {"1"})));
  EXPECT_TRUE(same_ideal(saturate(ideal(r, {"x^2", "x*y"}), parse_poly(r, "y")), ideal(r, {"x"})));
  EXPECT_TRUE(same_ideal(saturate(ideal(r, {"x"}), parse_poly(r, "y")), ideal(r, {"x"})));
  EXPECT_TRUE(same_ideal(saturate(ideal(r, {"x*y"}), parse_poly(r, "x")), ideal(r, {"y"})));
}

TEST(Saturate, IdempotentAndMonotone) {
  auto r = xy();
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    MultiPoly h = testing_helpers::random_form(r, 1, rng);
    MultiPoly f = h.pow(2) * testing_helpers::random_form(r, 1, rng);
    MultiPoly g = h * testing_helpers::random_form(r, 2, rng);
    PolyIdeal I(r, {f, g});
    PolyIdeal S = saturate(I, h);
    for (const auto& gen : I.generators()) EXPECT_TRUE(S.contains(gen));
    EXPECT_TRUE(same_ideal(saturate(S, h), S));
  }
}

TEST(Eliminate, Examples) {
  auto r = make_ring({"x", "y", "z"});
  std::vector<std::size_t> x{0};
  PolyIdeal tc = eliminate(ideal(r, {"y - x^2", "z - x^3"}), x);
  EXPECT_TRUE(tc.contains(parse_poly(r, "z^2 - y^3")));
  EXPECT_FALSE(tc.contains(parse_poly(r, "z - y")));
  for (const auto& g : tc.generators()) EXPECT_LE(g.degree_in(0), 0);  // x is gone
  PolyIdeal e1 = eliminate(ideal(r, {"x"}), x);
  for (const auto& g : e1.generators()) EXPECT_TRUE(g.is_zero());
  PolyIdeal e2 = eliminate(ideal(r, {"x - y"}), x);
  for (const auto& g : e2.generators()) EXPECT_TRUE(g.is_zero());
}

TEST(ProjectiveDegree, Examples) {
  auto r = make_ring({"X", "Y", "Z", "W"});
  auto line = projective_degree(ideal(r, {"X", "Y"}));
  EXPECT_EQ(line.degree, 1u);
  EXPECT_EQ(line.dimension, 1u);
  auto conic = projective_degree(ideal(r, {"X*Y - Z^2", "W"}));
  EXPECT_EQ(conic.degree, 2u);
  EXPECT_EQ(conic.dimension, 1u);
  auto quadric = projective_degree(ideal(r, {"X*Y + Z*W"}));
  EXPECT_EQ(quadric.degree, 2u);
  EXPECT_EQ(quadric.dimension, 2u);
}

TEST(ProjectiveDegree, BezoutForCurves) {
  auto r = make_ring({"X", "Y", "Z", "W"});
  Rng rng(41);
  for (int t = 0; t < 4; ++t) {
    std::vector<MultiPoly> gens;
    std::vector<long> degs;
    for (int k = 0; k < 2; ++k) {
      long d = rng.integer(1, 3);
      degs.push_back(d);
      MultiPoly p(r);
      Monomial m;
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b)
          for (unsigned c = 0; a + b + c <= d; ++c) {
            m.exp = {};
            m.exp[0] = a;
            m.exp[1] = b;
            m.exp[2] = c;
            m.exp[3] = static_cast<std::uint16_t>(d - a - b - c);
            p.add_term(m, Rational(rng.integer(-3, 3)));
          }
      gens.push_back(p);
    }
    auto pd = projective_degree(PolyIdeal(r, gens));
    EXPECT_EQ(static_cast<long>(pd.degree), oracle::bezout(degs));
    EXPECT_EQ(pd.dimension, 1u);
  }
}

TEST(Module, KoszulKernel) {
  auto r = xy();
  PolyMatrix a(r, 1, 2);
  a.at(0, 0) = parse_poly(r, "x");
  a.at(0, 1) = parse_poly(r, "y");
  PolyModule k = module_kernel(a);
  std::vector<MultiPoly> koszul{parse_poly(r, "y"), parse_poly(r, "-x")};
  EXPECT_TRUE(module_contains(k, koszul));
  PolyModule kz(r, 2, {koszul});
  for (const auto& g : k.generators()) EXPECT_TRUE(module_contains(kz, g));
}

TEST(Module, IdentityHasZeroKernel) {
  auto r = xy();
  PolyMatrix a(r, 2, 2);
  a.at(0, 0) = parse_poly(r, "1");
  a.at(1, 1) = parse_poly(r, "1");
  a.at(0, 1) = MultiPoly(r);
  a.at(1, 0) = MultiPoly(r);
  for (const auto& g : module_kernel(a).generators())
    for (const auto& c : g) EXPECT_TRUE(c.is_zero());
}

TEST(Module, RunningExampleKernel) {
  auto r = xy();
  MultiPoly x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  for (long d = 2; d <= 4; ++d)
    for (long i = 1; i < d; ++i)
      for (long j = 1; j < d; ++j) {
        PolyMatrix a(r, 2, 2);
        a.at(0, 0) = y.pow(d);
        a.at(0, 1) = x.pow(d - i) * y.pow(d - j);
        a.at(1, 0) = x.pow(i) * y.pow(j);
        a.at(1, 1) = x.pow(d);
        PolyModule k = module_kernel(a);
        std::vector<MultiPoly> expected{x.pow(d - i), -y.pow(j)};
        EXPECT_TRUE(module_contains(k, expected));
        PolyModule ke(r, 2, {expected});
        for (const auto& g : k.generators()) EXPECT_TRUE(module_contains(ke, g));
      }
}

TEST(Module, KernelVectorsAreAnnihilated) {
  auto r = xy();
  Rng rng(53);
  for (int t = 0; t < 6; ++t) {
    PolyMatrix a(r, 2, 3);
    for (auto& e : a.entries) e = testing_helpers::random_form(r, static_cast<unsigned>(rng.integer(1, 2)), rng);
    PolyModule k = module_kernel(a);
    for (const auto& g : k.generators()) {
      PolyMatrix v(r, 3, 1);
      for (std::size_t i = 0; i < 3; ++i) v.at(i, 0) = g[i];
      EXPECT_TRUE((a * v).is_zero());
    }
  }
}

TEST(Module, SubquotientLength) {
  auto r = xy();
  MultiPoly one = parse_poly(r, "1"), zero(r), x = parse_poly(r, "x"), y = parse_poly(r, "y");
  PolyModule line(r, 2, {{one, zero}});
  PolyModule im(r, 2, {{x, zero}, {y, zero}});
  EXPECT_EQ(subquotient_length(line, im), 1u);
  EXPECT_EQ(subquotient_length(line, line), 0u);
}

TEST(Module, SubquotientLengthIsAdditive) {
  auto r = xy();
  MultiPoly one = parse_poly(r, "1"), zero(r);
  // K ⊃ I ⊃ J inside R^1
  PolyModule k(r, 1, {{one}});
  PolyModule i(r, 1, {{parse_poly(r, "x")}, {parse_poly(r, "y^2")}});
  PolyModule j(r, 1, {{parse_poly(r, "x^2")}, {parse_poly(r, "x*y")}, {parse_poly(r, "y^3")}});
  EXPECT_EQ(subquotient_length(k, j), subquotient_length(k, i) + subquotient_length(i, j));
  EXPECT_EQ(subquotient_length(k, i), 2u);
}

TEST(Module, RunningExampleCohomologyLengths) {
  for (auto [d, i, j] : std::vector<std::array<long, 3>>{{2, 1, 1}, {3, 2, 1}, {4, 1, 3}}) {
    IsoSection s = testing_helpers::running_example(d, i, j);
    SigmaTau st = split_sigma_tau(s, hyperbolic_splitting(s.space));
    CliffordComplex c = clifford_complex(st, s.ring);
    std::size_t hp = subquotient_length(module_kernel(c.d_even), module_image(c.d_odd));
    std::size_t hm = subquotient_length(module_kernel(c.d_odd), module_image(c.d_even));
    EXPECT_EQ(static_cast<long>(hp), i * (d - j));
    EXPECT_EQ(static_cast<long>(hm), j * (d - i));
  }
}
