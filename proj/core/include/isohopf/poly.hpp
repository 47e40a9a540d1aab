#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isohopf/monomial.hpp"
#include "isohopf/rational.hpp"

namespace isohopf {

class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);

// Sparse polynomial over Q. Terms are kept in a map keyed by exponent vector;
// iteration order is plain lex and carries no meaning.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring);
  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t i);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly term(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  int total_degree() const;  // -1 for zero
  int degree_in(std::size_t var) const;  // -1 for zero
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_homogeneous() const;  // zero counts as homogeneous
  bool is_weighted_homogeneous(std::span<const long> weights, long degree) const;

  Monomial leading_monomial(const MonomialOrder& order) const;  // requires nonzero
  Rational leading_coefficient(const MonomialOrder& order) const;
  MultiPoly monic(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly mul_term(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly derivative(std::size_t var) const;
  // replace variable `var` by `value`
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly substitute_all(std::span<const MultiPoly> values) const;  // values live in any ring
  MultiPoly evaluate_at(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  // map variable i to target variable var_map[i]
  MultiPoly rebase(RingPtr target, std::span<const std::size_t> var_map) const;
  // same-named variables are matched; throws RingMismatch if a used variable is missing
  MultiPoly rebase_by_name(RingPtr target) const;

  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

MultiPoly parse_poly(RingPtr ring, std::string_view text);
std::string format_poly(const MultiPoly& p);

}  // namespace isohopf
