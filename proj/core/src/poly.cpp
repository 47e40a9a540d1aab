#include "isohopf/poly.hpp"

#include <algorithm>
#include <set>

#include "isohopf/error.hpp"

namespace isohopf {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    fail(Errc::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) fail(Errc::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second) fail(Errc::InvalidArgument, "duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) fail(Errc::InvalidArgument, "variable index out of range");
  MultiPoly p(std::move(ring));
  p.add_term(Monomial::var(i), 1);
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) fail(Errc::InvalidArgument, "unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::term(RingPtr ring, const Monomial& m, const Rational& c) {
  MultiPoly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) fail(Errc::RingMismatch, "polynomials live in different rings");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.degree()));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[var]);
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial{}); }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool MultiPoly::is_weighted_homogeneous(std::span<const long> weights, long degree) const {
  for (const auto& [m, c] : terms_) {
    long w = 0;
    for (std::size_t i = 0; i < nvars(); ++i) w += weights[i] * static_cast<long>(m.exp[i]);
    if (w != degree) return false;
  }
  return true;
}

Monomial MultiPoly::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) fail(Errc::InvalidArgument, "leading monomial of zero");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return best->first;
}

Rational MultiPoly::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Rational lc = leading_coefficient(order);
  MultiPoly r = *this;
  r *= Rational(1) / lc;
  return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.ring_) check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.ring_) check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
  MultiPoly r(ring_);
  if (sgn(c) == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    r.add_term(d, c * m.exp[var]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_ring(value);
  MultiPoly r(ring_);
  std::vector<MultiPoly> powers{constant(ring_, 1)};
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.exp[var] = 0;
    r += powers[e].mul_term(rest, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute_all(std::span<const MultiPoly> values) const {
  if (values.size() != nvars()) fail(Errc::DimensionMismatch, "substitute_all needs one value per variable");
  RingPtr target = values.empty() ? ring_ : values.front().ring();
  MultiPoly r(target);
  std::vector<std::vector<MultiPoly>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powers[i].push_back(constant(target, 1));
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      unsigned e = m.exp[i];
      if (e == 0) continue;
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * values[i]);
      t = t * powers[i][e];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::evaluate_at(std::size_t var, const Rational& value) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    for (unsigned k = 0; k < m.exp[var]; ++k) f *= value;
    Monomial rest = m;
    rest.exp[var] = 0;
    r.add_term(rest, f);
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (unsigned k = 0; k < m.exp[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

namespace {
template <class T>
T ipow(T x, unsigned e) {
  T r(1);
  while (e) {
    if (e & 1u) r *= x;
    e >>= 1u;
    if (e) x *= x;
  }
  return r;
}
}  // namespace

double MultiPoly::evaluate(std::span<const double> point) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars(); ++i)
      if (m.exp[i]) t *= ipow(point[i], m.exp[i]);
    acc += t;
  }
  return acc;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> point) const {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < nvars(); ++i)
      if (m.exp[i]) t *= ipow(point[i], m.exp[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::rebase(RingPtr target, std::span<const std::size_t> var_map) const {
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m.exp[i] == 0) continue;
      if (i >= var_map.size() || var_map[i] >= target->size())
        fail(Errc::RingMismatch, "variable '" + ring_->name(i) + "' has no image");
      t.exp[var_map[i]] = static_cast<std::uint16_t>(t.exp[var_map[i]] + m.exp[i]);
    }
    r.add_term(t, c);
  }
  return r;
}

MultiPoly MultiPoly::rebase_by_name(RingPtr target) const {
  std::vector<std::size_t> map(nvars(), kMaxVars);
  for (std::size_t i = 0; i < nvars(); ++i)
    if (auto j = target->index_of(ring_->name(i))) map[i] = *j;
  return rebase(std::move(target), map);
}

std::string MultiPoly::to_string() const { return format_poly(*this); }

}  // namespace isohopf
