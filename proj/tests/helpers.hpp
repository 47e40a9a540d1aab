#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isohopf/error.hpp"
#include "isohopf/iso_section.hpp"
#include "isohopf/poly.hpp"
#include "isohopf/quad_space.hpp"
#include "isohopf/random.hpp"

namespace testing_helpers {

using namespace isohopf;

inline IsoSection make_section(const std::vector<std::string>& vars, QuadSpace space,
                               const std::vector<std::string>& comps) {
  IsoSection s;
  s.ring = make_ring(vars);
  s.space = std::move(space);
  for (const auto& c : comps) s.components.push_back(parse_poly(s.ring, c));
  return s;
}

// (x^d, y^d, x^i y^j, -x^(d-i) y^(d-j)) in XY + ZW
inline IsoSection running_example(long d, long i, long j, bool with_torus = true) {
  RingPtr ring = make_ring({"x", "y"});
  MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
  IsoSection s;
  s.ring = ring;
  s.space = QuadSpace::hyperbolic(2);
  s.components = {x.pow(d), y.pow(d), x.pow(i) * y.pow(j), -(x.pow(d - i) * y.pow(d - j))};
  if (with_torus) s.torus = TorusWeights{{1, -1}, {d, -d, i - j, j - i}};
  return s;
}

inline IsoSection eg() { return running_example(2, 1, 1); }

inline MultiPoly random_form(const RingPtr& ring, unsigned degree, Rng& rng, long bound = 3) {
  MultiPoly p(ring);
  while (p.is_zero()) {
    for (unsigned a = 0; a <= degree; ++a) {
      Monomial m;
      m.exp[0] = static_cast<std::uint16_t>(a);
      m.exp[1] = static_cast<std::uint16_t>(degree - a);
      p.add_term(m, Rational(rng.integer(-bound, bound)));
    }
  }
  return p;
}

// degree-`degree` form plus, sometimes, a random term one degree higher
inline MultiPoly random_germ(const RingPtr& ring, unsigned degree, Rng& rng) {
  MultiPoly p = random_form(ring, degree, rng);
  if (degree > 0 && rng.integer(0, 1)) {
    Monomial m;
    long a = rng.integer(0, degree + 1);
    m.exp[0] = static_cast<std::uint16_t>(a);
    m.exp[1] = static_cast<std::uint16_t>(degree + 1 - a);
    p.add_term(m, Rational(rng.nonzero(2)));
  }
  return p;
}

// s = (f sigma0, g (sigma0 _| omega)) in XY + ZW, i.e. X = f a, W = f b, Y = -g b, Z = g a.
// Returns nullopt when the zero locus is not exactly the origin.
inline std::optional<IsoSection> random_factored_section(std::uint64_t seed) {
  Rng rng(seed);
  RingPtr ring = make_ring({"x", "y"});
  MultiPoly f = random_germ(ring, static_cast<unsigned>(rng.integer(0, 2)), rng);
  MultiPoly g = random_germ(ring, static_cast<unsigned>(rng.integer(0, 2)), rng);
  unsigned sd = static_cast<unsigned>(rng.integer(0, 2));
  MultiPoly a = random_germ(ring, sd, rng), b = random_germ(ring, sd, rng);
  IsoSection s;
  s.ring = ring;
  s.space = QuadSpace::hyperbolic(2);
  s.components = {f * a, -(g * b), g * a, f * b};
  for (const auto& c : s.components)
    if (sgn(c.constant_term()) != 0) return std::nullopt;
  try {
    return validate(s);
  } catch (const Error& e) {
    if (e.code() == Errc::ZeroLocusNotOriginOnly || e.code() == Errc::NotFiniteLength ||
        e.code() == Errc::NotZeroDimensional)
      return std::nullopt;
    throw;
  }
}

inline GaussMatrix span_of(std::size_t rank, const std::vector<std::vector<int>>& cols) {
  GaussMatrix m(rank, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rank; ++r) m.at(r, c) = Gauss(cols[c][r]);
  return m;
}

}  // namespace testing_helpers
