#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isohopf/matrix.hpp"

namespace isohopf {

// Columns span a subspace of E.
using Subspace = GaussMatrix;

// Basis (lambda_1..lambda_n, lambda*_1..lambda*_n) with
// B(lambda_i, lambda*_j) = delta_ij / 2 and both halves isotropic, so that
// q(sum sigma_k lambda_k + tau_k lambda*_k) = sum sigma_k tau_k.
struct HyperbolicSplitting {
  GaussMatrix basis;
  GaussMatrix inverse;
  std::size_t n = 0;

  bool is_rational() const;
  RatMatrix rational_basis() const;    // throws NoRationalSplitting
  RatMatrix rational_inverse() const;  // throws NoRationalSplitting
  Subspace lambda() const { return basis.columns(0, n); }
  Subspace lambda_dual() const { return basis.columns(n, 2 * n); }
  // apply g (acting on E) to every basis vector
  HyperbolicSplitting transformed(const RatMatrix& g) const;
};

// Quadratic space (E, q) with q(v) = v^T B v, B symmetric nondegenerate, together with
// a reference maximal isotropic subspace and an orientation unit.
class QuadSpace {
 public:
  static QuadSpace hyperbolic(std::size_t n);
  static QuadSpace sum_of_squares(std::size_t rank);
  static QuadSpace eg2();
  // Without a reference, one is derived (over Q if possible, else over Q(i)).
  static QuadSpace from_gram(RatMatrix gram, std::vector<std::string> names = {},
                             std::optional<Subspace> reference = std::nullopt, int orientation = 1);

  std::size_t rank() const { return gram_.rows(); }
  std::size_t half_rank() const { return gram_.rows() / 2; }
  const RatMatrix& gram() const { return gram_; }
  const std::vector<std::string>& names() const { return names_; }
  int orientation() const { return orientation_; }
  bool has_reference() const { return reference_.has_value(); }
  const Subspace& reference() const;  // throws NoRationalSplitting when the form never splits
  QuadSpace with_orientation(int unit) const;

  Rational value(const std::vector<Rational>& v) const;
  Gauss pairing(const GaussMatrix& v, const GaussMatrix& w) const;  // column vectors

 private:
  RatMatrix gram_;
  std::vector<std::string> names_;
  std::optional<Subspace> reference_;
  int orientation_ = 1;
};

bool is_isotropic_subspace(const QuadSpace& e, const Subspace& l);
// isotropic, n-dimensional
bool is_maximal_isotropic(const QuadSpace& e, const Subspace& l);
// +1 if l lies in the positive family, -1 otherwise.
int isotropic_sign(const QuadSpace& e, const Subspace& l);
int isotropic_sign(const QuadSpace& e, const RatMatrix& l);

// Splitting whose Lambda is the positive reference family member.
HyperbolicSplitting hyperbolic_splitting(const QuadSpace& e);
HyperbolicSplitting rational_hyperbolic_splitting(const QuadSpace& e);  // throws NoRationalSplitting

// Search for a hyperbolic basis; Q(i) entries only when allowed.
std::optional<GaussMatrix> find_hyperbolic_basis(const RatMatrix& gram, bool allow_gaussian);

// (I - A)^{-1} (I + A), A = B^{-1} s, s skew.
RatMatrix cayley_transform(const QuadSpace& e, const RatMatrix& skew);
RatMatrix random_special_orthogonal(const QuadSpace& e, std::uint64_t seed);

// P with P^T B P = I whose real span is a compact real form compatible with the orientation.
GaussMatrix real_form_coordinates(const QuadSpace& e);

struct IsotropicEnvelopes {
  Subspace plus;
  Subspace minus;
};
// The two maximal isotropic planes through an isotropic vector (rank 4 only).
IsotropicEnvelopes isotropic_envelopes_n2(const QuadSpace& e, const std::vector<Rational>& v);

// For rank 4 in split coordinates (sigma, tau): the point of P(Lambda_+) is
// [sigma1 : sigma2] (or [-tau2 : tau1]) and the point of P(Lambda_-) is
// [sigma1 : tau2] (or [-sigma2 : tau1]).
struct QuadricProjections {
  std::array<Rational, 2> in_plus;
  std::array<Rational, 2> in_minus;
};
QuadricProjections quadric_projections_n2(const std::array<Rational, 4>& sigma_tau);
// Inverse: [a:b] x [c:d] -> (sigma1, tau1, sigma2... ) returned as (sigma1, sigma2, tau1, tau2)
std::array<Rational, 4> quadric_point_n2(const std::array<Rational, 2>& in_plus, const std::array<Rational, 2>& in_minus);

bool gauss_sqrt(const Gauss& z, Gauss& root);

}  // namespace isohopf
