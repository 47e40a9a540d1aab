#include "isohopf/module.hpp"

#include "isohopf/error.hpp"

namespace isohopf {

PolyMatrix::PolyMatrix(RingPtr r, std::size_t m, std::size_t n)
    : ring(std::move(r)), rows(m), cols(n), entries(m * n, MultiPoly(ring)) {}

std::vector<MultiPoly> PolyMatrix::column(std::size_t j) const {
  std::vector<MultiPoly> c;
  for (std::size_t i = 0; i < rows; ++i) c.push_back(at(i, j));
  return c;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  PolyMatrix c(a.ring, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      for (std::size_t k = 0; k < a.cols; ++k) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

PolyModule::PolyModule(RingPtr ring, std::size_t rank, std::vector<std::vector<MultiPoly>> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.size() != rank_) fail(Errc::DimensionMismatch, "module generator has wrong length");
}

PolyModule module_image(const PolyMatrix& a) {
  std::vector<std::vector<MultiPoly>> gens;
  for (std::size_t j = 0; j < a.cols; ++j) gens.push_back(a.column(j));
  return PolyModule(a.ring, a.rows, std::move(gens));
}

namespace {

const TermOrder kPot(MonomialOrder::grevlex(), TermOrder::Module::PositionOverTerm);

// Basis of the stacked module generated by (top_j ; e_j); top positions dominate.
std::vector<ModPoly> stacked_basis(const std::vector<std::vector<MultiPoly>>& tops, std::size_t top_rank,
                                   const GroebnerOptions& opts) {
  std::vector<ModPoly> gens;
  const std::size_t p = tops.size();
  for (std::size_t j = 0; j < p; ++j) {
    ModPoly g;
    for (std::size_t k = 0; k < top_rank; ++k)
      for (const auto& [m, c] : tops[j][k].terms()) g.push_back({static_cast<std::uint32_t>(k), m, c});
    g.push_back({static_cast<std::uint32_t>(top_rank + j), Monomial{}, 1});
    gens.push_back(canonical(std::move(g), kPot));
  }
  return groebner_basis(gens, kPot, opts);
}

ModPoly shift_down(const ModPoly& g, std::size_t offset) {
  ModPoly out;
  for (const auto& t : g) out.push_back({static_cast<std::uint32_t>(t.pos - offset), t.mono, t.coef});
  return out;
}

}  // namespace

PolyModule module_kernel(const PolyMatrix& a, const GroebnerOptions& opts) {
  std::vector<std::vector<MultiPoly>> tops;
  for (std::size_t j = 0; j < a.cols; ++j) tops.push_back(a.column(j));
  auto gb = stacked_basis(tops, a.rows, opts);
  std::vector<std::vector<MultiPoly>> syz;
  for (const auto& g : gb) {
    if (g.front().pos < a.rows) continue;
    syz.push_back(from_modpoly_vector(shift_down(g, a.rows), a.ring, a.cols));
  }
  return PolyModule(a.ring, a.cols, std::move(syz));
}

bool module_contains(const PolyModule& m, const std::vector<MultiPoly>& v, const GroebnerOptions& opts) {
  std::vector<ModPoly> gens;
  for (const auto& g : m.generators()) gens.push_back(to_modpoly(g, kPot));
  auto gb = groebner_basis(gens, kPot, opts);
  return normal_form(to_modpoly(v, kPot), gb, kPot).empty();
}

std::size_t subquotient_length(const PolyModule& ker, const PolyModule& im, const GroebnerOptions& opts) {
  if (ker.rank() != im.rank()) fail(Errc::DimensionMismatch, "subquotient of modules of different rank");
  const std::size_t r = ker.rank();
  const std::size_t p = ker.generators().size();
  const RingPtr& ring = ker.ring();
  if (p == 0) {
    for (const auto& v : im.generators())
      for (const auto& c : v)
        if (!c.is_zero()) fail(Errc::NotContained, "image is not contained in the zero module");
    return 0;
  }
  auto gb = stacked_basis(ker.generators(), r, opts);
  std::vector<ModPoly> rel;
  for (const auto& g : gb)
    if (g.front().pos >= r) rel.push_back(shift_down(g, r));
  for (const auto& v : im.generators()) {
    ModPoly nf = normal_form(to_modpoly(v, kPot), gb, kPot);
    ModPoly lift;
    for (const auto& t : nf) {
      if (t.pos < r) fail(Errc::NotContained, "image generator is not in the kernel");
      lift.push_back({static_cast<std::uint32_t>(t.pos - r), t.mono, -t.coef});
    }
    if (!lift.empty()) rel.push_back(canonical(std::move(lift), kPot));
  }
  auto quot = groebner_basis(rel, kPot, opts);
  auto len = count_standard_monomials(quot, ring->size(), p);
  if (!len) fail(Errc::NotFiniteLength, "subquotient has infinite length");
  return *len;
}

}  // namespace isohopf
