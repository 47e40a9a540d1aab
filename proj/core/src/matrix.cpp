#include "isohopf/matrix.hpp"

#include <sstream>

namespace isohopf {

GaussMatrix to_gauss(const RatMatrix& m) {
  GaussMatrix g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g.at(i, j) = Gauss(m.at(i, j));
  return g;
}

std::optional<RatMatrix> to_rational(const GaussMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_real()) return std::nullopt;
      r.at(i, j) = m.at(i, j).re;
    }
  return r;
}

namespace {
template <class F>
std::string render(const Matrix<F>& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m.at(i, j));
  }
  out << "]";
  return out.str();
}
}  // namespace

std::string to_string(const RatMatrix& m) { return render(m); }
std::string to_string(const GaussMatrix& m) { return render(m); }

}  // namespace isohopf
