#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace isohopf {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector; slots past the ring size stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;  // this | other
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);  // requires b | a
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  // plain lex with variable 0 most significant; used for containers only
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  static Monomial var(std::size_t i, unsigned power = 1);
};

class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  // first `split` variables are eliminated: grevlex on them, ties broken by grevlex on the rest
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  // <0, 0, >0 as a is smaller, equal, larger than b
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}
  Kind kind_;
  std::size_t split_;
};

}  // namespace isohopf
