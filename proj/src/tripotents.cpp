#include "jbt/tripotents.hpp"

#include <algorithm>
#include <cmath>

namespace jbt {

namespace {

const cxd kI(0.0, 1.0);

double pair_scale(const Element& a, const Element& b) {
  return std::max(1.0, triple_norm(a) * triple_norm(b));
}

void require_tripotent(const Element& e, const Tolerance& tol,
                       const char* op) {
  if (!is_tripotent(e, tol))
    throw error(std::string(op) + ": input is not a tripotent");
}

/// Projection of y onto the complex line C e (e != 0).
Element line_projection(const Element& e, const Element& y) {
  cxd c = inner(y, e) / inner(e, e);
  return scale(c, e);
}

}  // namespace

bool is_tripotent(const Element& e, const Tolerance& tol) {
  return approx_eq(cube(e), e, tol);
}

bool is_tripotent(const SumElement& e, const Tolerance& tol) {
  for (const auto& p : e.parts)
    if (!is_tripotent(p, tol)) return false;
  return true;
}

Element peirce2_apply(const Element& e, const Element& x) {
  return q_apply(e, q_apply(e, x));
}

Element peirce1_apply(const Element& e, const Element& x) {
  Element lx = triple_product(e, e, x);
  Element llx = triple_product(e, e, lx);
  return sub(scale(4.0, lx), scale(4.0, llx));
}

Element peirce0_apply(const Element& e, const Element& x) {
  Element lx = triple_product(e, e, x);
  Element llx = triple_product(e, e, lx);
  return add(sub(x, scale(3.0, lx)), scale(2.0, llx));
}

Element peirce_apply(int j, const Element& e, const Element& x) {
  switch (j) {
    case 0: return peirce0_apply(e, x);
    case 1: return peirce1_apply(e, x);
    case 2: return peirce2_apply(e, x);
  }
  throw error("peirce_apply: j must be 0, 1 or 2");
}

SumElement peirce_apply(int j, const SumElement& e, const SumElement& x) {
  if (e.parts.size() != x.parts.size())
    throw error("peirce_apply: sum shapes differ");
  SumElement r;
  for (std::size_t i = 0; i < e.parts.size(); ++i)
    r.parts.push_back(peirce_apply(j, e.parts[i], x.parts[i]));
  return r;
}

Tripotent make_tripotent(const Element& e, const Tolerance& tol) {
  validate_element(e, tol);
  require_tripotent(e, tol, "make_tripotent");
  Tripotent t{e, true, true, true};
  if (is_zero(e, tol)) {
    t.minimal = false;
    t.complete = e.factor.complex_dim() == 0;
    t.unitary = t.complete;
    return t;
  }
  for (const auto& x : factor_basis(e.factor)) {
    Element p2x = peirce2_apply(e, x);
    Element p0x = peirce0_apply(e, x);
    if (!approx_eq(p2x, line_projection(e, p2x), tol)) t.minimal = false;
    if (!is_zero(p0x, tol)) t.complete = false;
    if (!approx_eq(p2x, x, tol)) t.unitary = false;
    if (!t.minimal && !t.complete && !t.unitary) break;
  }
  return t;
}

bool is_minimal_tripotent(const Element& e, const Tolerance& tol) {
  if (!is_tripotent(e, tol) || is_zero(e, tol)) return false;
  for (const auto& x : factor_basis(e.factor)) {
    Element p2x = peirce2_apply(e, x);
    if (!approx_eq(p2x, line_projection(e, p2x), tol)) return false;
  }
  return true;
}

namespace {

/// Complex orthonormal basis spanning the same space as the given real
/// coordinate vectors (columns). The block must be the realification of a
/// complex subspace, so exactly cols/2 vectors survive.
std::vector<Element> complex_basis_of_block(const FactorDescriptor& f,
                                            const RealMatrix& block) {
  int d = f.complex_dim();
  if (block.cols() == 0) return {};
  Matrix z(d, block.cols());
  for (Eigen::Index k = 0; k < block.cols(); ++k) {
    z.col(k).real() = block.col(k).head(d);
    z.col(k).imag() = block.col(k).tail(d);
  }
  Eigen::JacobiSVD<Matrix> dec(z, Eigen::ComputeThinU);
  double smax = dec.singularValues()(0);
  std::vector<Element> basis;
  for (Eigen::Index k = 0; k < dec.singularValues().size(); ++k) {
    if (dec.singularValues()(k) > 1e-7 * smax)
      basis.push_back(from_complex_coords(f, Vector(dec.matrixU().col(k))));
  }
  if (static_cast<Eigen::Index>(basis.size()) * 2 != block.cols())
    throw error("peirce: eigenspace is not a complex subspace");
  return basis;
}

}  // namespace

PeirceDecomposition peirce(const Element& e, const Tolerance& tol) {
  require_tripotent(e, tol, "peirce");
  const auto& f = e.factor;
  int d2 = 2 * f.complex_dim();

  RealLinearMap lmap = L_operator(e, e);
  RealMatrix lsym = (lmap.mat + lmap.mat.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(lsym);
  if (es.info() != Eigen::Success) throw error("peirce: eigensolver failed");

  // Snap each eigenvalue to the nearest admissible Peirce weight.
  std::vector<int> label(d2);
  const double targets[3] = {0.0, 0.5, 1.0};
  for (int k = 0; k < d2; ++k) {
    double lam = es.eigenvalues()(k);
    int best = 0;
    for (int j = 1; j < 3; ++j)
      if (std::abs(lam - targets[j]) < std::abs(lam - targets[best])) best = j;
    if (std::abs(lam - targets[best]) > tol.eq_tol)
      throw error("peirce: L(e,e) eigenvalue " + std::to_string(lam) +
                  " is not in {0, 1/2, 1} within tolerance");
    label[k] = best;
  }

  PeirceDecomposition out;
  out.e = e;
  RealMatrix blocks[3];
  for (int j = 0; j < 3; ++j) {
    int count = static_cast<int>(std::count(label.begin(), label.end(), j));
    blocks[j].resize(d2, count);
    int c = 0;
    for (int k = 0; k < d2; ++k)
      if (label[k] == j) blocks[j].col(c++) = es.eigenvectors().col(k);
  }
  auto projector = [&](const RealMatrix& w) {
    return RealLinearMap{f, f, RealMatrix(w * w.transpose())};
  };
  out.p0 = projector(blocks[0]);
  out.p1 = projector(blocks[1]);
  out.p2 = projector(blocks[2]);
  out.basis0 = complex_basis_of_block(f, blocks[0]);
  out.basis1 = complex_basis_of_block(f, blocks[1]);
  out.basis2 = complex_basis_of_block(f, blocks[2]);

  // Cross-check the eigenspace route against the algebraic identity P2 = Q(e)^2.
  RealLinearMap q = Q_operator(e);
  RealMatrix qq = q.mat * q.mat;
  if ((out.p2.mat - qq).norm() > tol.eq_tol * std::max(1.0, qq.norm()))
    throw error("peirce: P2(e) disagrees with Q(e)^2");
  return out;
}

bool leq(const Element& e, const Element& v, const Tolerance& tol) {
  Element diff = sub(v, e);
  return is_tripotent(diff, tol) && orthogonal(diff, e, tol);
}

bool leq(const SumElement& e, const SumElement& v, const Tolerance& tol) {
  if (e.parts.size() != v.parts.size()) throw error("leq: sum shapes differ");
  for (std::size_t i = 0; i < e.parts.size(); ++i)
    if (!leq(e.parts[i], v.parts[i], tol)) return false;
  return true;
}

bool orthogonal(const Element& a, const Element& b, const Tolerance& tol) {
  return L_operator(a, b).op_norm() <= tol.eq_tol * pair_scale(a, b);
}

bool orthogonal(const SumElement& a, const SumElement& b,
                const Tolerance& tol) {
  if (a.parts.size() != b.parts.size())
    throw error("orthogonal: sum shapes differ");
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!orthogonal(a.parts[i], b.parts[i], tol)) return false;
  return true;
}

bool colinear(const Element& u, const Element& v, const Tolerance& tol) {
  require_tripotent(u, tol, "colinear");
  require_tripotent(v, tol, "colinear");
  return approx_eq(peirce1_apply(v, u), u, tol) &&
         approx_eq(peirce1_apply(u, v), v, tol);
}

bool governs(const Element& u, const Element& v, const Tolerance& tol) {
  require_tripotent(u, tol, "governs");
  require_tripotent(v, tol, "governs");
  return approx_eq(peirce1_apply(v, u), u, tol) &&
         approx_eq(peirce2_apply(u, v), v, tol);
}

Element JordanStructure::product(const Element& a, const Element& b) const {
  return triple_product(a, unit, b);
}

Element JordanStructure::involution(const Element& a) const {
  return q_apply(unit, a);
}

Element JordanStructure::u_operator(const Element& a, const Element& x) const {
  Element ax = product(a, x);
  Element aa = product(a, a);
  return sub(scale(2.0, product(ax, a)), product(aa, x));
}

bool JordanStructure::contains(const Element& a) const {
  return approx_eq(peirce2_apply(unit, a), a, tol);
}

JordanStructure jordan_structure(const Element& e, const Tolerance& tol) {
  require_tripotent(e, tol, "jordan_structure");
  return JordanStructure{e, tol};
}

Element minimal_projection(double alpha, const cxd& gamma, FactorKind kind) {
  if (kind != FactorKind::Sym && kind != FactorKind::Rect)
    throw error("minimal_projection: kind must be sym(2) or rect(2,2)");
  if (alpha < -1e-12 || alpha > 1.0 + 1e-12)
    throw error("minimal_projection: alpha must lie in [0,1]");
  alpha = std::clamp(alpha, 0.0, 1.0);
  if (std::abs(std::abs(gamma) - 1.0) > 1e-9)
    throw error("minimal_projection: gamma must be unimodular");
  double s = std::sqrt(alpha * (1.0 - alpha));
  Matrix p(2, 2);
  if (kind == FactorKind::Sym) {
    if (std::abs(gamma.imag()) > 1e-9)
      throw error("minimal_projection: sym(2) needs real gamma");
    double g = gamma.real() >= 0 ? 1.0 : -1.0;
    p << alpha, g * s, g * s, 1.0 - alpha;
    return Element{FactorDescriptor::sym(2), p};
  }
  p << alpha, gamma * s, std::conj(gamma) * s, 1.0 - alpha;
  return Element{FactorDescriptor::rect(2, 2), p};
}

Element minimal_tripotent_param(const cxd& alpha, const cxd& beta,
                                const cxd& gamma, const cxd& delta,
                                FactorKind kind, const Tolerance& tol) {
  if (kind != FactorKind::Sym && kind != FactorKind::Rect)
    throw error("minimal_tripotent_param: kind must be sym(2) or rect(2,2)");
  double norm2 = std::norm(alpha) + std::norm(beta) + std::norm(gamma) +
                 std::norm(delta);
  if (std::abs(norm2 - 1.0) > tol.eq_tol * 10)
    throw error("minimal_tripotent_param: squared moduli must sum to 1");
  if (std::abs(alpha * delta - beta * gamma) > tol.eq_tol * 10)
    throw error("minimal_tripotent_param: need alpha*delta = beta*gamma");
  if (kind == FactorKind::Sym && std::abs(beta - gamma) > tol.eq_tol * 10)
    throw error("minimal_tripotent_param: sym(2) needs beta = gamma");
  Matrix v(2, 2);
  v << alpha, beta, gamma, delta;
  Element e{kind == FactorKind::Sym ? FactorDescriptor::sym(2)
                                    : FactorDescriptor::rect(2, 2),
            v};
  if (!is_minimal_tripotent(e, tol))
    throw error("minimal_tripotent_param: parameters do not give a minimal "
                "tripotent");
  return e;
}

bool is_quadrangle(const Quadrangle& q, const Tolerance& tol) {
  const Element* v[4] = {&q.v1, &q.v2, &q.v3, &q.v4};
  for (const auto* e : v)
    if (!is_tripotent(*e, tol)) return false;
  if (!orthogonal(q.v1, q.v3, tol) || !orthogonal(q.v2, q.v4, tol))
    return false;
  for (int i = 0; i < 4; ++i)
    if (!colinear(*v[i], *v[(i + 1) % 4], tol)) return false;
  return approx_eq(triple_product(q.v1, q.v2, q.v3), scale(0.5, q.v4), tol);
}

bool is_trangle(const Trangle& t, const Tolerance& tol) {
  if (!is_tripotent(t.v, tol) || !is_tripotent(t.u, tol) ||
      !is_tripotent(t.vt, tol))
    return false;
  if (!orthogonal(t.v, t.vt, tol)) return false;
  if (!governs(t.u, t.v, tol) || !governs(t.u, t.vt, tol)) return false;
  return approx_eq(q_apply(t.u, t.v), t.vt, tol);
}

Quadrangle enumerate_quadrangle(const Tolerance& tol) {
  auto f = FactorDescriptor::rect(2, 2);
  auto unit = [&](int i, int j) {
    Matrix m = Matrix::Zero(2, 2);
    m(i, j) = 1.0;
    return Element{f, m};
  };
  Quadrangle q{unit(0, 0), unit(0, 1), unit(1, 1), unit(1, 0)};
  if (!is_quadrangle(q, tol))
    throw error("enumerate_quadrangle: canonical instance failed validation");
  return q;
}

Trangle enumerate_trangle(const Tolerance& tol) {
  auto f = FactorDescriptor::sym(2);
  Matrix e11 = Matrix::Zero(2, 2), e22 = Matrix::Zero(2, 2),
         off = Matrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  e22(1, 1) = 1.0;
  off(0, 1) = off(1, 0) = 1.0;
  Trangle t{Element{f, e11}, Element{f, off}, Element{f, e22}};
  if (!is_trangle(t, tol))
    throw error("enumerate_trangle: canonical instance failed validation");
  return t;
}

namespace {

/// Partial isometries of the singular frame of a, one per cluster of equal
/// singular values, sorted by decreasing sigma.
std::vector<Element> frame_tripotents(const Element& a, const Tolerance& tol) {
  std::vector<Element> frame;
  const auto& f = a.factor;
  if (f.kind == FactorKind::Spin) return frame;  // pools build spin directly
  if (f.kind == FactorKind::Rect) {
    Svd dec = svd(a.payload);
    double smax = dec.sigma.size() ? dec.sigma(0) : 0.0;
    if (smax <= tol.rank_tol) return frame;
    Eigen::Index i = 0;
    while (i < dec.sigma.size() && dec.sigma(i) > tol.rank_tol * smax) {
      Eigen::Index j = i;
      Matrix u = Matrix::Zero(f.m, f.n);
      while (j < dec.sigma.size() &&
             dec.sigma(i) - dec.sigma(j) <= 1e-8 * std::max(1.0, smax)) {
        u += dec.u.col(j) * dec.v.col(j).adjoint();
        ++j;
      }
      frame.push_back(Element{f, u});
      i = j;
    }
    return frame;
  }
  // Sym / Antisym: spectral projectors of a^* a keep the frame inside the
  // subspace, since a P / sigma is an odd polynomial in a.
  Matrix m = a.payload.adjoint() * a.payload;
  HermEig eig = herm_eig(m, tol);
  int d = static_cast<int>(eig.lambda.size());
  std::vector<double> sig(d);
  for (int k = 0; k < d; ++k)
    sig[k] = std::sqrt(std::max(0.0, eig.lambda(d - 1 - k)));  // descending
  double smax = d ? sig[0] : 0.0;
  if (smax <= tol.rank_tol) return frame;
  int i = 0;
  while (i < d && sig[i] > tol.rank_tol * smax) {
    int j = i;
    Matrix p = Matrix::Zero(f.n, f.n);
    double mean = 0.0;
    while (j < d && sig[i] - sig[j] <= 1e-8 * std::max(1.0, smax)) {
      p += eig.w.col(d - 1 - j) * eig.w.col(d - 1 - j).adjoint();
      mean += sig[j];
      ++j;
    }
    mean /= (j - i);
    frame.push_back(Element{f, Matrix(a.payload * p / mean)});
    i = j;
  }
  return frame;
}

void push_unique(std::vector<Element>& pool, const Element& cand,
                 const Tolerance& tol) {
  if (!is_tripotent(cand, tol)) return;
  for (const auto& p : pool)
    if (rel_distance(p, cand) < 1e-6) return;
  pool.push_back(cand);
}

/// Two orthonormal real vectors of dimension n, deterministically sampled.
std::pair<RealVector, RealVector> random_real_frame(int n, Rng& rng) {
  RealVector a(n), b(n);
  for (int i = 0; i < n; ++i) a(i) = rng.normal();
  for (int i = 0; i < n; ++i) b(i) = rng.normal();
  a.normalize();
  b -= a.dot(b) * a;
  b.normalize();
  return {a, b};
}

Element spin_minimal(const RealVector& a, const RealVector& b, const cxd& phase,
                     const FactorDescriptor& f) {
  Matrix v(f.n, 1);
  for (int i = 0; i < f.n; ++i) v(i, 0) = phase * cxd(a(i), b(i)) / 2.0;
  return Element{f, v};
}

}  // namespace

std::vector<Element> tripotent_pool(const FactorDescriptor& f,
                                    std::uint64_t seed, int target,
                                    const Tolerance& tol) {
  Rng rng(mix_seed(seed, 0x7001));
  std::vector<Element> pool;
  pool.push_back(zero_element(f));

  if (f.kind == FactorKind::Spin) {
    while (static_cast<int>(pool.size()) < target) {
      auto [a, b] = random_real_frame(f.n, rng);
      cxd phase = rng.unimodular();
      Element e1 = spin_minimal(a, b, phase, f);
      Element e2 = conj_element(e1);
      push_unique(pool, e1, tol);
      push_unique(pool, add(e1, scale(rng.unimodular(), e2)), tol);
      // maximal "real direction" tripotent
      Matrix v(f.n, 1);
      for (int i = 0; i < f.n; ++i) v(i, 0) = phase * a(i);
      push_unique(pool, Element{f, v}, tol);
      push_unique(pool, scale(-1.0, e1), tol);
    }
    pool.resize(std::min<std::size_t>(pool.size(), target));
    return pool;
  }

  if (f == FactorDescriptor::rect(2, 2) || f == FactorDescriptor::sym(2)) {
    for (double alpha : {0.0, 0.3, 0.5, 1.0}) {
      cxd gamma = f.kind == FactorKind::Sym ? cxd(1.0, 0.0) : rng.unimodular();
      push_unique(pool, minimal_projection(alpha, gamma, f.kind), tol);
    }
  }

  while (static_cast<int>(pool.size()) < target) {
    Element a = sample_element(f, rng);
    auto frame = frame_tripotents(a, tol);
    Element acc = zero_element(f);
    for (const auto& u : frame) {
      push_unique(pool, u, tol);
      acc = add(acc, u);
      push_unique(pool, acc, tol);
    }
    if (!frame.empty())
      push_unique(pool, scale(rng.unimodular(), frame.front()), tol);
  }
  pool.resize(std::min<std::size_t>(pool.size(), target));
  return pool;
}

std::vector<Element> minimal_tripotent_pool(const FactorDescriptor& f,
                                            std::uint64_t seed, int target,
                                            const Tolerance& tol) {
  std::vector<Element> pool;
  Rng rng(mix_seed(seed, 0x7002));
  if (f.kind == FactorKind::Spin) {
    while (static_cast<int>(pool.size()) < target) {
      auto [a, b] = random_real_frame(f.n, rng);
      push_unique(pool, spin_minimal(a, b, rng.unimodular(), f), tol);
    }
    return pool;
  }
  while (static_cast<int>(pool.size()) < target) {
    Element a = sample_element(f, rng);
    for (const auto& u : frame_tripotents(a, tol))
      if (is_minimal_tripotent(u, tol)) {
        push_unique(pool, u, tol);
        if (static_cast<int>(pool.size()) >= target) break;
      }
  }
  return pool;
}

}  // namespace jbt
