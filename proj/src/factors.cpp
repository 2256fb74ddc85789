#include "jbt/factors.hpp"

#include <algorithm>
#include <cmath>

namespace jbt {

namespace {

const cxd kI(0.0, 1.0);

bool is_matrix_kind(FactorKind k) { return k != FactorKind::Spin; }

void check_same_factor(const Element& a, const Element& b, const char* op) {
  if (a.factor != b.factor)
    throw error(std::string(op) + ": elements from different factors");
}

}  // namespace

FactorDescriptor FactorDescriptor::rect(int m, int n) {
  if (m < 1 || n < 1) throw error("rect: need m, n >= 1");
  return FactorDescriptor{FactorKind::Rect, m, n};
}

FactorDescriptor FactorDescriptor::antisym(int n) {
  if (n < 1) throw error("antisym: need n >= 1");
  return FactorDescriptor{FactorKind::Antisym, n, n};
}

FactorDescriptor FactorDescriptor::sym(int n) {
  if (n < 1) throw error("sym: need n >= 1");
  return FactorDescriptor{FactorKind::Sym, n, n};
}

FactorDescriptor FactorDescriptor::spin(int n) {
  if (n < 3) throw error("spin: need n >= 3");
  return FactorDescriptor{FactorKind::Spin, n, n};
}

int FactorDescriptor::complex_dim() const {
  switch (kind) {
    case FactorKind::Rect: return m * n;
    case FactorKind::Antisym: return n * (n - 1) / 2;
    case FactorKind::Sym: return n * (n + 1) / 2;
    case FactorKind::Spin: return n;
  }
  throw error("complex_dim: bad kind");
}

bool FactorDescriptor::operator==(const FactorDescriptor& o) const {
  if (kind != o.kind) return false;
  if (kind == FactorKind::Rect) return m == o.m && n == o.n;
  return n == o.n;
}

std::string FactorDescriptor::str() const {
  switch (kind) {
    case FactorKind::Rect:
      return "rect(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case FactorKind::Antisym: return "antisym(" + std::to_string(n) + ")";
    case FactorKind::Sym: return "sym(" + std::to_string(n) + ")";
    case FactorKind::Spin: return "spin(" + std::to_string(n) + ")";
  }
  throw error("str: bad kind");
}

void validate_element(const Element& x, const Tolerance& tol) {
  const auto& f = x.factor;
  Eigen::Index want_rows = f.kind == FactorKind::Spin ? f.n : f.m;
  Eigen::Index want_cols = f.kind == FactorKind::Spin ? 1 : f.n;
  if (x.payload.rows() != want_rows || x.payload.cols() != want_cols)
    throw error("validate_element: payload shape does not match " + f.str());
  if (!all_finite(x.payload))
    throw error("validate_element: non-finite entries");
  if (f.kind == FactorKind::Sym &&
      rel_distance(x.payload, x.payload.transpose()) > tol.eq_tol)
    throw error("validate_element: payload not symmetric");
  if (f.kind == FactorKind::Antisym &&
      rel_distance(x.payload, Matrix(-x.payload.transpose())) > tol.eq_tol)
    throw error("validate_element: payload not antisymmetric");
}

Element zero_element(const FactorDescriptor& f) {
  Eigen::Index rows = f.kind == FactorKind::Spin ? f.n : f.m;
  Eigen::Index cols = f.kind == FactorKind::Spin ? 1 : f.n;
  return Element{f, Matrix::Zero(rows, cols)};
}

bool is_zero(const Element& x, const Tolerance& tol) {
  return max_abs(x.payload) <= tol.eq_tol;
}

Element conj_element(const Element& x) {
  return Element{x.factor, x.payload.conjugate()};
}

Element scale(const cxd& s, const Element& x) {
  return Element{x.factor, Matrix(s * x.payload)};
}

Element add(const Element& x, const Element& y) {
  check_same_factor(x, y, "add");
  return Element{x.factor, Matrix(x.payload + y.payload)};
}

Element sub(const Element& x, const Element& y) {
  check_same_factor(x, y, "sub");
  return Element{x.factor, Matrix(x.payload - y.payload)};
}

cxd inner(const Element& x, const Element& y) {
  check_same_factor(x, y, "inner");
  cxd s(0.0, 0.0);
  for (Eigen::Index j = 0; j < x.payload.cols(); ++j)
    for (Eigen::Index i = 0; i < x.payload.rows(); ++i)
      s += x.payload(i, j) * std::conj(y.payload(i, j));
  return s;
}

double coord_norm(const Element& x) { return x.payload.norm(); }

bool approx_eq(const Element& x, const Element& y, const Tolerance& tol) {
  check_same_factor(x, y, "approx_eq");
  return approx_eq(x.payload, y.payload, tol);
}

double rel_distance(const Element& x, const Element& y) {
  check_same_factor(x, y, "rel_distance");
  return rel_distance(x.payload, y.payload);
}

Element triple_product(const Element& a, const Element& b, const Element& c) {
  check_same_factor(a, b, "triple_product");
  check_same_factor(a, c, "triple_product");
  const auto& f = a.factor;
  if (is_matrix_kind(f.kind)) {
    Matrix bs = b.payload.adjoint();
    Matrix p = 0.5 * (a.payload * bs * c.payload + c.payload * bs * a.payload);
    return Element{f, p};
  }
  // Spin: {x,y,z} = <x|y> z + <z|y> x - <x|conj z> conj(y).
  cxd xy = inner(a, b);
  cxd zy = inner(c, b);
  cxd xzc = inner(a, conj_element(c));
  Matrix p = xy * c.payload + zy * a.payload - xzc * b.payload.conjugate();
  return Element{f, p};
}

Element q_apply(const Element& a, const Element& b, const Element& z) {
  return triple_product(a, z, b);
}

Element q_apply(const Element& a, const Element& z) {
  return triple_product(a, z, a);
}

Element cube(const Element& a) { return triple_product(a, a, a); }

double triple_norm(const Element& x) {
  if (is_matrix_kind(x.factor.kind)) {
    Eigen::JacobiSVD<Matrix> dec(x.payload);
    return dec.singularValues().size() ? dec.singularValues()(0) : 0.0;
  }
  double t = std::real(inner(x, x));
  double s = std::abs(inner(x, conj_element(x)));
  double disc = std::max(0.0, t * t - s * s);
  return std::sqrt(t + std::sqrt(disc));
}

std::vector<Element> factor_basis(const FactorDescriptor& f) {
  std::vector<Element> basis;
  basis.reserve(f.complex_dim());
  const double r2 = std::sqrt(0.5);
  switch (f.kind) {
    case FactorKind::Rect:
      for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) {
          Matrix e = Matrix::Zero(f.m, f.n);
          e(i, j) = 1.0;
          basis.push_back(Element{f, e});
        }
      break;
    case FactorKind::Sym:
      for (int i = 0; i < f.n; ++i) {
        Matrix e = Matrix::Zero(f.n, f.n);
        e(i, i) = 1.0;
        basis.push_back(Element{f, e});
      }
      for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j) {
          Matrix e = Matrix::Zero(f.n, f.n);
          e(i, j) = e(j, i) = r2;
          basis.push_back(Element{f, e});
        }
      break;
    case FactorKind::Antisym:
      for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j) {
          Matrix e = Matrix::Zero(f.n, f.n);
          e(i, j) = r2;
          e(j, i) = -r2;
          basis.push_back(Element{f, e});
        }
      break;
    case FactorKind::Spin:
      for (int i = 0; i < f.n; ++i) {
        Matrix e = Matrix::Zero(f.n, 1);
        e(i, 0) = 1.0;
        basis.push_back(Element{f, e});
      }
      break;
  }
  return basis;
}

Vector complex_coords(const Element& x) {
  auto basis = factor_basis(x.factor);
  Vector z(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    z(static_cast<Eigen::Index>(k)) = inner(x, basis[k]);
  return z;
}

Element from_complex_coords(const FactorDescriptor& f, const Vector& z) {
  auto basis = factor_basis(f);
  if (z.size() != static_cast<Eigen::Index>(basis.size()))
    throw error("from_complex_coords: dimension mismatch");
  Element x = zero_element(f);
  for (std::size_t k = 0; k < basis.size(); ++k)
    x.payload += z(static_cast<Eigen::Index>(k)) * basis[k].payload;
  return x;
}

RealVector real_coords(const Element& x) {
  Vector z = complex_coords(x);
  RealVector v(2 * z.size());
  v.head(z.size()) = z.real();
  v.tail(z.size()) = z.imag();
  return v;
}

Element from_real_coords(const FactorDescriptor& f, const RealVector& v) {
  int d = f.complex_dim();
  if (v.size() != 2 * d) throw error("from_real_coords: dimension mismatch");
  Vector z(d);
  z.real() = v.head(d);
  z.imag() = v.tail(d);
  return from_complex_coords(f, z);
}

Element RealLinearMap::apply(const Element& x) const {
  if (x.factor != domain) throw error("RealLinearMap: wrong domain factor");
  return from_real_coords(codomain, RealVector(mat * real_coords(x)));
}

double RealLinearMap::op_norm() const {
  if (mat.size() == 0) return 0.0;
  Eigen::JacobiSVD<RealMatrix> dec(mat);
  return dec.singularValues().size() ? dec.singularValues()(0) : 0.0;
}

RealLinearMap RealLinearMap::compose(const RealLinearMap& inner_map) const {
  if (inner_map.codomain != domain)
    throw error("RealLinearMap::compose: factor mismatch");
  return RealLinearMap{inner_map.domain, codomain, RealMatrix(mat * inner_map.mat)};
}

RealLinearMap RealLinearMap::inverse() const {
  if (domain != codomain) throw error("RealLinearMap::inverse: non-square");
  Eigen::FullPivLU<RealMatrix> lu(mat);
  if (!lu.isInvertible())
    throw error("RealLinearMap::inverse: singular map");
  return RealLinearMap{codomain, domain, RealMatrix(lu.inverse())};
}

RealLinearMap materialize(const FactorDescriptor& dom,
                          const FactorDescriptor& cod,
                          const std::function<Element(const Element&)>& f) {
  int d = dom.complex_dim();
  int c = cod.complex_dim();
  RealMatrix m(2 * c, 2 * d);
  auto basis = factor_basis(dom);
  for (int k = 0; k < d; ++k) {
    m.col(k) = real_coords(f(basis[k]));
    m.col(d + k) = real_coords(f(scale(kI, basis[k])));
  }
  return RealLinearMap{dom, cod, m};
}

RealLinearMap identity_map(const FactorDescriptor& f) {
  int d = f.complex_dim();
  return RealLinearMap{f, f, RealMatrix::Identity(2 * d, 2 * d)};
}

RealLinearMap L_operator(const Element& a, const Element& b) {
  check_same_factor(a, b, "L_operator");
  return materialize(a.factor, a.factor, [&](const Element& z) {
    return triple_product(a, b, z);
  });
}

RealLinearMap Q_operator(const Element& a, const Element& b) {
  check_same_factor(a, b, "Q_operator");
  return materialize(a.factor, a.factor, [&](const Element& z) {
    return triple_product(a, z, b);
  });
}

RealLinearMap Q_operator(const Element& a) { return Q_operator(a, a); }

FactorDescriptor spin_embedding_target(int n) {
  if (n == 3) return FactorDescriptor::sym(2);
  if (n == 4) return FactorDescriptor::rect(2, 2);
  throw error("spin_embedding_target: only n = 3, 4 supported");
}

Element spin_matrix_embedding(const Element& x) {
  if (x.factor.kind != FactorKind::Spin)
    throw error("spin_matrix_embedding: spin input required");
  int n = x.factor.n;
  if (n != 3 && n != 4)
    throw error("spin_matrix_embedding: only n = 3, 4 supported");
  cxd a = x.payload(0, 0), b = x.payload(1, 0), c = x.payload(2, 0);
  Matrix m(2, 2);
  if (n == 3) {
    m << a - kI * b, kI * c,
         kI * c, a + kI * b;
  } else {
    cxd d = x.payload(3, 0);
    m << a - kI * b, c - kI * d,
         -c - kI * d, a + kI * b;
  }
  return Element{spin_embedding_target(n), m};
}

Element spin_matrix_preimage(const Element& m, int n) {
  if (m.factor != spin_embedding_target(n))
    throw error("spin_matrix_preimage: factor mismatch");
  cxd m11 = m.payload(0, 0), m12 = m.payload(0, 1);
  cxd m21 = m.payload(1, 0), m22 = m.payload(1, 1);
  Matrix v(n, 1);
  v(0, 0) = (m11 + m22) / 2.0;
  v(1, 0) = (m22 - m11) / (2.0 * kI);
  if (n == 3) {
    v(2, 0) = m12 / kI;
  } else {
    v(2, 0) = (m12 - m21) / 2.0;
    v(3, 0) = kI * (m12 + m21) / 2.0;
  }
  return Element{FactorDescriptor::spin(n), v};
}

Element sample_element(const FactorDescriptor& f, Rng& rng) {
  switch (f.kind) {
    case FactorKind::Rect:
      return Element{f, rng.ginibre(f.m, f.n)};
    case FactorKind::Sym: {
      Matrix g = rng.ginibre(f.n, f.n);
      return Element{f, Matrix((g + g.transpose()) / 2.0)};
    }
    case FactorKind::Antisym: {
      Matrix g = rng.ginibre(f.n, f.n);
      return Element{f, Matrix((g - g.transpose()) / 2.0)};
    }
    case FactorKind::Spin:
      return Element{f, rng.ginibre(f.n, 1)};
  }
  throw error("sample_element: bad kind");
}

// --- sums -------------------------------------------------------------------

SumDescriptor SumElement::descriptor() const {
  SumDescriptor d;
  d.reserve(parts.size());
  for (const auto& p : parts) d.push_back(p.factor);
  return d;
}

SumElement zero_sum(const SumDescriptor& d) {
  SumElement x;
  x.parts.reserve(d.size());
  for (const auto& f : d) x.parts.push_back(zero_element(f));
  return x;
}

SumElement lift(const SumDescriptor& d, std::size_t slot, const Element& x) {
  if (slot >= d.size()) throw error("lift: slot out of range");
  if (d[slot] != x.factor) throw error("lift: factor mismatch at slot");
  SumElement s = zero_sum(d);
  s.parts[slot] = x;
  return s;
}

SumElement wrap(const Element& x) { return SumElement{{x}}; }

bool is_zero(const SumElement& x, const Tolerance& tol) {
  for (const auto& p : x.parts)
    if (!is_zero(p, tol)) return false;
  return true;
}

namespace {
void check_same_shape(const SumElement& a, const SumElement& b,
                      const char* op) {
  if (!same_descriptor(a.descriptor(), b.descriptor()))
    throw error(std::string(op) + ": sum descriptors differ");
}
}  // namespace

SumElement add(const SumElement& x, const SumElement& y) {
  check_same_shape(x, y, "add");
  SumElement r;
  for (std::size_t i = 0; i < x.parts.size(); ++i)
    r.parts.push_back(add(x.parts[i], y.parts[i]));
  return r;
}

SumElement sub(const SumElement& x, const SumElement& y) {
  check_same_shape(x, y, "sub");
  SumElement r;
  for (std::size_t i = 0; i < x.parts.size(); ++i)
    r.parts.push_back(sub(x.parts[i], y.parts[i]));
  return r;
}

SumElement scale(const cxd& s, const SumElement& x) {
  SumElement r;
  for (const auto& p : x.parts) r.parts.push_back(scale(s, p));
  return r;
}

SumElement triple_product(const SumElement& a, const SumElement& b,
                          const SumElement& c) {
  check_same_shape(a, b, "triple_product");
  check_same_shape(a, c, "triple_product");
  SumElement r;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    r.parts.push_back(triple_product(a.parts[i], b.parts[i], c.parts[i]));
  return r;
}

SumElement q_apply(const SumElement& a, const SumElement& z) {
  return triple_product(a, z, a);
}

SumElement cube(const SumElement& a) { return triple_product(a, a, a); }

double triple_norm(const SumElement& x) {
  double m = 0.0;
  for (const auto& p : x.parts) m = std::max(m, triple_norm(p));
  return m;
}

bool approx_eq(const SumElement& x, const SumElement& y,
               const Tolerance& tol) {
  check_same_shape(x, y, "approx_eq");
  for (std::size_t i = 0; i < x.parts.size(); ++i)
    if (!approx_eq(x.parts[i], y.parts[i], tol)) return false;
  return true;
}

double rel_distance(const SumElement& x, const SumElement& y) {
  check_same_shape(x, y, "rel_distance");
  double m = 0.0;
  for (std::size_t i = 0; i < x.parts.size(); ++i)
    m = std::max(m, rel_distance(x.parts[i], y.parts[i]));
  return m;
}

SumElement sample_sum(const SumDescriptor& d, Rng& rng) {
  SumElement x;
  x.parts.reserve(d.size());
  for (const auto& f : d) x.parts.push_back(sample_element(f, rng));
  return x;
}

bool same_descriptor(const SumDescriptor& a, const SumDescriptor& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string descriptor_str(const SumDescriptor& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += " + ";
    s += d[i].str();
  }
  return s.empty() ? "(empty)" : s;
}

}  // namespace jbt
