#include <algorithm>
#include <cctype>
#include <sstream>

#include "isohopf/error.hpp"
#include "isohopf/poly.hpp"

namespace isohopf {

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    bool neg = accept('-');
    if (!neg) accept('+');
    MultiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_ws();
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                             std::isdigit(static_cast<unsigned char>(s_[pos_]))))
      error("juxtaposition is not allowed; use '*'");
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 4096) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) error("expected denominator");
        num += "/" + den;
      } else {
        pos_ = save;
      }
      return MultiPoly::constant(ring_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(ring_, *idx);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(RingPtr ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  auto order = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m.exp[i] == 0) continue;
      if (need_star) out << "*";
      out << p.ring()->name(i);
      if (m.exp[i] > 1) out << "^" << m.exp[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace isohopf
