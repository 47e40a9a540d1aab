#pragma once

#include <vector>

#include "isohopf/groebner.hpp"
#include "isohopf/poly.hpp"

namespace isohopf {

// rows x cols matrix of polynomials; acts on column vectors R^cols -> R^rows
struct PolyMatrix {
  RingPtr ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MultiPoly> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(RingPtr r, std::size_t m, std::size_t n);
  MultiPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const MultiPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  std::vector<MultiPoly> column(std::size_t j) const;
  bool is_zero() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
};

// Submodule of R^rank given by generators (each of length rank).
class PolyModule {
 public:
  PolyModule(RingPtr ring, std::size_t rank, std::vector<std::vector<MultiPoly>> gens);
  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<std::vector<MultiPoly>>& generators() const { return gens_; }

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<std::vector<MultiPoly>> gens_;
};

PolyModule module_image(const PolyMatrix& a);
// Syzygies of the columns of `a`.
PolyModule module_kernel(const PolyMatrix& a, const GroebnerOptions& opts = {});
bool module_contains(const PolyModule& m, const std::vector<MultiPoly>& v, const GroebnerOptions& opts = {});
// length of ker/im; throws NotContained if im is not inside ker, NotFiniteLength if infinite
std::size_t subquotient_length(const PolyModule& ker, const PolyModule& im, const GroebnerOptions& opts = {});

}  // namespace isohopf
