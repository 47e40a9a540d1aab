#pragma once

#include <cstdint>
#include <vector>

#include "isohopf/monomial.hpp"
#include "isohopf/poly.hpp"
#include "isohopf/rational.hpp"

namespace isohopf {

// A term c * m * e_pos of a free module R^r; ideals use pos == 0.
struct ModTerm {
  std::uint32_t pos = 0;
  Monomial mono;
  Rational coef;
};

// Terms sorted strictly decreasing in the active TermOrder.
using ModPoly = std::vector<ModTerm>;

class TermOrder {
 public:
  enum class Module { PositionOverTerm, TermOverPosition };

  explicit TermOrder(MonomialOrder mono = MonomialOrder::grevlex(), Module mod = Module::PositionOverTerm)
      : mono_(mono), mod_(mod) {}

  const MonomialOrder& monomial_order() const { return mono_; }
  Module module_kind() const { return mod_; }

  // Lower position index ranks higher.
  int compare(std::uint32_t pa, const Monomial& a, std::uint32_t pb, const Monomial& b) const {
    if (mod_ == Module::PositionOverTerm) {
      if (pa != pb) return pa < pb ? 1 : -1;
      return mono_.compare(a, b);
    }
    int c = mono_.compare(a, b);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.pos, a.mono, b.pos, b.mono); }

 private:
  MonomialOrder mono_;
  Module mod_;
};

// 10^6 unless ISOHOPF_STEP_BUDGET is set.
std::size_t default_step_budget();

struct GroebnerOptions {
  std::size_t step_budget = default_step_budget();
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t reduction_steps = 0;
  std::size_t zero_reductions = 0;
};

// Sort, merge equal terms, drop zeros.
ModPoly canonical(ModPoly p, const TermOrder& order);
ModPoly to_modpoly(const MultiPoly& p, const TermOrder& order, std::uint32_t pos = 0);
ModPoly to_modpoly(const std::vector<MultiPoly>& vec, const TermOrder& order);
MultiPoly from_modpoly(const ModPoly& p, const RingPtr& ring);  // pos ignored
std::vector<MultiPoly> from_modpoly_vector(const ModPoly& p, const RingPtr& ring, std::size_t rank);

// Reduced Groebner basis, sorted by increasing leading term, each element monic.
std::vector<ModPoly> groebner_basis(const std::vector<ModPoly>& gens, const TermOrder& order,
                                    const GroebnerOptions& opts = {}, GroebnerStats* stats = nullptr);

// `basis` must already be a reduced basis for `order`; only pairs touching `extra` are formed.
std::vector<ModPoly> groebner_extend(const std::vector<ModPoly>& basis, const std::vector<ModPoly>& extra,
                                     const TermOrder& order, const GroebnerOptions& opts = {},
                                     GroebnerStats* stats = nullptr);

// Fully reduced normal form.
ModPoly normal_form(const ModPoly& p, const std::vector<ModPoly>& basis, const TermOrder& order);

// Count standard monomials of R^rank / <leading terms>; nullopt when infinite.
std::optional<std::size_t> count_standard_monomials(const std::vector<ModPoly>& basis, std::size_t nvars,
                                                    std::size_t rank);

}  // namespace isohopf
