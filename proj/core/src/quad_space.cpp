#include "isohopf/quad_space.hpp"

#include "isohopf/random.hpp"

namespace isohopf {

namespace {

GaussMatrix col_vector(const std::vector<Rational>& v) {
  GaussMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = Gauss(v[i]);
  return m;
}

Gauss form(const GaussMatrix& b, const GaussMatrix& v, const GaussMatrix& w) {
  return (v.transpose() * b * w).at(0, 0);
}

void check_gram(const RatMatrix& g) {
  if (g.rows() != g.cols()) fail(Errc::DimensionMismatch, "Gram matrix must be square");
  if (g.rows() == 0 || g.rows() % 2 != 0) fail(Errc::DimensionMismatch, "quadratic space must have even positive rank");
  if (!(g == g.transpose())) fail(Errc::InvalidArgument, "Gram matrix must be symmetric");
  if (sgn(determinant(g)) == 0) fail(Errc::Singular, "quadratic form is degenerate");
}

std::optional<GaussMatrix> find_isotropic(const GaussMatrix& g, bool allow_gaussian) {
  const std::size_t m = g.rows();
  auto unit = [&](std::size_t k) {
    GaussMatrix c(m, 1);
    c.at(k, 0) = Gauss(1);
    return c;
  };
  auto root_of = [&](const Gauss& d, Gauss& r) {
    if (allow_gaussian) return gauss_sqrt(d, r);
    if (!d.is_real()) return false;
    Rational q;
    if (!rational_sqrt(d.re, q)) return false;
    r = Gauss(q);
    return true;
  };
  for (std::size_t k = 0; k < m; ++k)
    if (g.at(k, k).is_zero()) return unit(k);

  // orthogonal basis; an isotropic vector may show up along the way
  std::vector<GaussMatrix> ortho;
  std::vector<Gauss> diag;
  for (std::size_t k = 0; k < m; ++k) {
    GaussMatrix u = unit(k);
    for (std::size_t j = 0; j < ortho.size(); ++j) {
      Gauss c = form(g, u, ortho[j]) / diag[j];
      u = u - c * ortho[j];
    }
    Gauss qu = form(g, u, u);
    if (qu.is_zero()) return u;
    ortho.push_back(u);
    diag.push_back(qu);
  }
  // binary forms d_i y_i^2 + d_j y_j^2
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Gauss r;
      if (root_of(-(diag[i] / diag[j]), r)) return ortho[i] + r * ortho[j];
    }
  if (allow_gaussian) return std::nullopt;
  bool all_real = true;
  int pos = 0, neg = 0;
  for (const auto& d : diag) {
    if (!d.is_real()) all_real = false;
    else if (sgn(d.re) > 0) ++pos;
    else ++neg;
  }
  if (all_real && (pos == 0 || neg == 0)) return std::nullopt;
  // ternary and larger: small integer search in the orthogonal coordinates
  const int bound = m <= 4 ? 6 : 3;
  std::vector<int> c(m, -bound);
  for (;;) {
    bool nonzero = false;
    Gauss acc(0);
    for (std::size_t k = 0; k < m; ++k) {
      if (c[k] != 0) nonzero = true;
      acc += diag[k] * Gauss(Rational(c[k] * c[k]));
    }
    if (nonzero && acc.is_zero()) {
      GaussMatrix v(m, 1);
      for (std::size_t k = 0; k < m; ++k) v = v + Gauss(Rational(c[k])) * ortho[k];
      return v;
    }
    std::size_t k = 0;
    while (k < m && c[k] == bound) c[k++] = -bound;
    if (k == m) break;
    ++c[k];
  }
  return std::nullopt;
}

}  // namespace

bool gauss_sqrt(const Gauss& z, Gauss& root) {
  if (z.is_real()) {
    Rational r;
    if (sgn(z.re) >= 0) {
      if (!rational_sqrt(z.re, r)) return false;
      root = Gauss(r);
      return true;
    }
    if (!rational_sqrt(-z.re, r)) return false;
    root = Gauss(0, r);
    return true;
  }
  Rational mod;
  if (!rational_sqrt(z.norm(), mod)) return false;
  Rational x2 = (z.re + mod) / 2, x;
  if (!rational_sqrt(x2, x) || sgn(x) == 0) return false;
  Rational y = z.im / (2 * x);
  root = Gauss(x, y);
  return true;
}

std::optional<GaussMatrix> find_hyperbolic_basis(const RatMatrix& gram, bool allow_gaussian) {
  const std::size_t dim = gram.rows();
  const GaussMatrix b = to_gauss(gram);
  GaussMatrix v = GaussMatrix::identity(dim);
  std::vector<GaussMatrix> lam, dual;
  while (v.cols() > 0) {
    GaussMatrix g = v.transpose() * b * v;
    auto c = find_isotropic(g, allow_gaussian);
    if (!c) return std::nullopt;
    GaussMatrix iso = v * *c;
    GaussMatrix w;
    Gauss p;
    for (std::size_t k = 0; k < v.cols(); ++k) {
      p = form(b, iso, v.column(k));
      if (!p.is_zero()) {
        w = v.column(k);
        break;
      }
    }
    if (p.is_zero()) return std::nullopt;
    Gauss qw = form(b, w, w);
    GaussMatrix w2 = w - (qw / (Gauss(2) * p)) * iso;
    GaussMatrix star = (Gauss(1) / (Gauss(2) * p)) * w2;
    lam.push_back(iso);
    dual.push_back(star);
    GaussMatrix proj(dim, v.cols());
    for (std::size_t k = 0; k < v.cols(); ++k) {
      GaussMatrix u = v.column(k);
      GaussMatrix u2 = u - (Gauss(2) * form(b, u, star)) * iso - (Gauss(2) * form(b, u, iso)) * star;
      proj.set_column(k, u2);
    }
    v = column_basis(proj);
  }
  const std::size_t n = lam.size();
  GaussMatrix s(dim, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    s.set_column(k, lam[k]);
    s.set_column(n + k, dual[k]);
  }
  return s;
}

bool HyperbolicSplitting::is_rational() const { return to_rational(basis).has_value(); }

RatMatrix HyperbolicSplitting::rational_basis() const {
  auto r = to_rational(basis);
  if (!r) fail(Errc::NoRationalSplitting, "the hyperbolic splitting needs Gaussian rationals");
  return *r;
}

RatMatrix HyperbolicSplitting::rational_inverse() const {
  auto r = to_rational(inverse);
  if (!r) fail(Errc::NoRationalSplitting, "the hyperbolic splitting needs Gaussian rationals");
  return *r;
}

HyperbolicSplitting HyperbolicSplitting::transformed(const RatMatrix& g) const {
  HyperbolicSplitting s;
  s.n = n;
  s.basis = to_gauss(g) * basis;
  s.inverse = isohopf::inverse(s.basis);
  return s;
}

QuadSpace QuadSpace::from_gram(RatMatrix gram, std::vector<std::string> names, std::optional<Subspace> reference,
                               int orientation) {
  check_gram(gram);
  if (orientation != 1 && orientation != -1) fail(Errc::InvalidArgument, "orientation unit must be +1 or -1");
  QuadSpace e;
  e.gram_ = std::move(gram);
  if (names.empty())
    for (std::size_t k = 0; k < e.rank(); ++k) names.push_back("E" + std::to_string(k + 1));
  if (names.size() != e.rank()) fail(Errc::DimensionMismatch, "one coordinate name per basis vector is needed");
  e.names_ = std::move(names);
  e.orientation_ = orientation;
  if (reference) {
    if (reference->rows() != e.rank() || reference->cols() != e.half_rank() || isohopf::rank(*reference) != e.half_rank() ||
        !is_isotropic_subspace(e, *reference))
      fail(Errc::NotMaximalIsotropic, "reference subspace is not maximal isotropic");
    e.reference_ = std::move(reference);
  } else {
    auto s = find_hyperbolic_basis(e.gram_, false);
    if (!s) s = find_hyperbolic_basis(e.gram_, true);
    if (s && s->cols() == e.rank()) e.reference_ = s->columns(0, e.half_rank());
  }
  return e;
}

QuadSpace QuadSpace::hyperbolic(std::size_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "hyperbolic space needs n >= 1");
  RatMatrix g(2 * n, 2 * n);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    g.at(2 * k, 2 * k + 1) = Rational(1, 2);
    g.at(2 * k + 1, 2 * k) = Rational(1, 2);
  }
  if (n == 2) {
    names = {"X", "Y", "Z", "W"};
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back("X" + std::to_string(k + 1));
      names.push_back("Y" + std::to_string(k + 1));
    }
  }
  // reference: dX_1, ..., dX_{n-1}, dY_n
  Subspace ref(2 * n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) ref.at(2 * k, k) = Gauss(1);
  ref.at(2 * n - 1, n - 1) = Gauss(1);
  return from_gram(std::move(g), std::move(names), ref, 1);
}

QuadSpace QuadSpace::sum_of_squares(std::size_t r) {
  if (r == 0 || r % 2) fail(Errc::DimensionMismatch, "sum of squares needs even positive rank");
  RatMatrix g = RatMatrix::identity(r);
  // reference e_{2k-1} - i e_{2k}: calibrated so that the identity is the real form
  Subspace ref(r, r / 2);
  for (std::size_t k = 0; k < r / 2; ++k) {
    ref.at(2 * k, k) = Gauss(1);
    ref.at(2 * k + 1, k) = Gauss(0, -1);
  }
  return from_gram(std::move(g), {}, ref, 1);
}

QuadSpace QuadSpace::eg2() {
  RatMatrix g(6, 6);
  Rational h(1, 2);
  g.at(0, 1) = g.at(1, 0) = h;
  g.at(0, 2) = g.at(2, 0) = h;
  g.at(1, 2) = g.at(2, 1) = h;
  for (std::size_t k = 3; k < 6; ++k) g.at(k, k) = -1;
  return from_gram(std::move(g), {"X1", "X2", "X3", "X4", "X5", "X6"});
}

const Subspace& QuadSpace::reference() const {
  if (!reference_) fail(Errc::NoRationalSplitting, "no maximal isotropic subspace over Q or Q(i) was found");
  return *reference_;
}

QuadSpace QuadSpace::with_orientation(int unit) const {
  if (unit != 1 && unit != -1) fail(Errc::InvalidArgument, "orientation unit must be +1 or -1");
  QuadSpace e = *this;
  e.orientation_ = unit;
  return e;
}

Rational QuadSpace::value(const std::vector<Rational>& v) const {
  if (v.size() != rank()) fail(Errc::DimensionMismatch, "vector length does not match the space");
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) acc += v[i] * gram_.at(i, j) * v[j];
  return acc;
}

Gauss QuadSpace::pairing(const GaussMatrix& v, const GaussMatrix& w) const { return form(to_gauss(gram_), v, w); }

bool is_isotropic_subspace(const QuadSpace& e, const Subspace& l) {
  if (l.rows() != e.rank()) return false;
  return (l.transpose() * to_gauss(e.gram()) * l).is_zero();
}

bool is_maximal_isotropic(const QuadSpace& e, const Subspace& l) {
  return l.rows() == e.rank() && rank(l) == e.half_rank() && is_isotropic_subspace(e, l);
}

int isotropic_sign(const QuadSpace& e, const Subspace& l) {
  if (l.cols() != e.half_rank() || !is_maximal_isotropic(e, l))
    fail(Errc::NotMaximalIsotropic, "subspace is not maximal isotropic");
  std::size_t d = intersection_dim(l, e.reference());
  int parity = (d % 2) == (e.half_rank() % 2) ? 1 : -1;
  return parity * e.orientation();
}

int isotropic_sign(const QuadSpace& e, const RatMatrix& l) { return isotropic_sign(e, to_gauss(l)); }

HyperbolicSplitting hyperbolic_splitting(const QuadSpace& e) {
  const std::size_t n = e.half_rank();
  const GaussMatrix b = to_gauss(e.gram());
  GaussMatrix lam = e.reference();
  // W with lam^T B W = I/2, supported on pivot coordinates
  GaussMatrix lb = lam.transpose() * b;
  GaussMatrix red = lb;
  auto piv = row_reduce(red);
  if (piv.size() != n) fail(Errc::NotMaximalIsotropic, "reference subspace is degenerate");
  GaussMatrix minor(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) minor.at(i, k) = lb.at(i, piv[k]);
  GaussMatrix half = Gauss(Rational(1, 2)) * GaussMatrix::identity(n);
  GaussMatrix sol = solve(minor, half);
  GaussMatrix w(e.rank(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) w.at(piv[k], j) = sol.at(k, j);
  GaussMatrix wbw = w.transpose() * b * w;
  GaussMatrix dual = w - lam * wbw;
  if (e.orientation() < 0) {
    // other family: swap the last hyperbolic pair
    GaussMatrix a = lam.column(n - 1), c = dual.column(n - 1);
    lam.set_column(n - 1, c);
    dual.set_column(n - 1, a);
  }
  HyperbolicSplitting s;
  s.n = n;
  s.basis = lam.hcat(dual);
  s.inverse = inverse(s.basis);
  return s;
}

HyperbolicSplitting rational_hyperbolic_splitting(const QuadSpace& e) {
  HyperbolicSplitting s = hyperbolic_splitting(e);
  if (!s.is_rational()) fail(Errc::NoRationalSplitting, "the form has no rational hyperbolic splitting");
  return s;
}

RatMatrix cayley_transform(const QuadSpace& e, const RatMatrix& skew) {
  const std::size_t d = e.rank();
  if (!(skew.transpose() == RatMatrix(d, d) - skew)) fail(Errc::InvalidArgument, "matrix is not skew-symmetric");
  RatMatrix a = inverse(e.gram()) * skew;
  RatMatrix id = RatMatrix::identity(d);
  return inverse(id - a) * (id + a);
}

RatMatrix random_special_orthogonal(const QuadSpace& e, std::uint64_t seed) {
  const std::size_t d = e.rank();
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    RatMatrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        Rational v(rng.integer(-3, 3), 4);
        v.canonicalize();
        s.at(i, j) = v;
        s.at(j, i) = -v;
      }
    try {
      return cayley_transform(e, s);
    } catch (const Error& err) {
      if (err.code() != Errc::Singular) throw;
    }
  }
  fail(Errc::Singular, "could not draw a Cayley transform");
}

GaussMatrix real_form_coordinates(const QuadSpace& e) {
  if (e.gram() == RatMatrix::identity(e.rank())) return GaussMatrix::identity(e.rank());
  const std::size_t n = e.half_rank();
  HyperbolicSplitting s = hyperbolic_splitting(e);
  GaussMatrix r(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    r.at(k, 2 * k) = Gauss(1);
    r.at(k, 2 * k + 1) = Gauss(0, 1);
    r.at(n + k, 2 * k) = Gauss(1);
    r.at(n + k, 2 * k + 1) = Gauss(0, -1);
  }
  return s.basis * r;
}

IsotropicEnvelopes isotropic_envelopes_n2(const QuadSpace& e, const std::vector<Rational>& v) {
  if (e.rank() != 4) fail(Errc::WrongDimension, "isotropic envelopes are implemented for rank 4");
  if (v.size() != 4) fail(Errc::DimensionMismatch, "vector length does not match the space");
  bool zero = true;
  for (const auto& x : v) zero = zero && sgn(x) == 0;
  if (zero) fail(Errc::ZeroVector, "zero vector has no envelopes");
  if (sgn(e.value(v)) != 0) fail(Errc::NotIsotropic, "vector is not isotropic");
  const GaussMatrix b = to_gauss(e.gram());
  GaussMatrix vv = col_vector(v);
  GaussMatrix perp = nullspace(vv.transpose() * b);  // 3 columns, contains v
  std::vector<GaussMatrix> comp;
  GaussMatrix acc = vv;
  for (std::size_t k = 0; k < perp.cols() && comp.size() < 2; ++k) {
    GaussMatrix cand = acc.hcat(perp.column(k));
    if (rank(cand) > rank(acc)) {
      comp.push_back(perp.column(k));
      acc = cand;
    }
  }
  Gauss g11 = form(b, comp[0], comp[0]), g12 = form(b, comp[0], comp[1]), g22 = form(b, comp[1], comp[1]);
  std::vector<GaussMatrix> lines;
  if (g11.is_zero()) {
    lines.push_back(comp[0]);
    lines.push_back((-(g22 / (Gauss(2) * g12))) * comp[0] + comp[1]);
  } else {
    Gauss disc = g12 * g12 - g11 * g22, root;
    if (!gauss_sqrt(disc, root)) fail(Errc::NoRationalSplitting, "envelopes are not defined over Q(i)");
    for (int sgn_r : {1, -1}) {
      Gauss alpha = (-g12 + Gauss(sgn_r) * root) / g11;
      lines.push_back(alpha * comp[0] + comp[1]);
    }
  }
  IsotropicEnvelopes out;
  bool have_plus = false, have_minus = false;
  for (const auto& l : lines) {
    GaussMatrix plane = vv.hcat(l);
    int s = isotropic_sign(e, plane);
    if (s > 0) {
      out.plus = plane;
      have_plus = true;
    } else {
      out.minus = plane;
      have_minus = true;
    }
  }
  if (!have_plus || !have_minus) fail(Errc::ConsistencyFailure, "envelopes fell into one family");
  return out;
}

QuadricProjections quadric_projections_n2(const std::array<Rational, 4>& st) {
  const Rational &s1 = st[0], &s2 = st[1], &t1 = st[2], &t2 = st[3];
  QuadricProjections p;
  if (sgn(s1) != 0 || sgn(s2) != 0) p.in_plus = {s1, s2};
  else p.in_plus = {-t2, t1};
  if (sgn(s1) != 0 || sgn(t2) != 0) p.in_minus = {s1, t2};
  else p.in_minus = {-s2, t1};
  return p;
}

std::array<Rational, 4> quadric_point_n2(const std::array<Rational, 2>& ab, const std::array<Rational, 2>& cd) {
  const Rational &a = ab[0], &b = ab[1], &c = cd[0], &d = cd[1];
  return {a * c, b * c, -b * d, a * d};
}

}  // namespace isohopf
