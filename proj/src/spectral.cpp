#include "jbt/spectral.hpp"

#include <cmath>

namespace jbt {

namespace {

const cxd kI(0.0, 1.0);

struct Cluster {
  double mean;
  int begin, end;  // half-open index range into the descending sigma list
};

/// Merge a descending list of singular values: drop below rank_tol * smax,
/// group values within rank_tol * max(1, smax) of the cluster head.
std::vector<Cluster> cluster_sigma(const std::vector<double>& sig,
                                   const Tolerance& tol) {
  std::vector<Cluster> out;
  if (sig.empty()) return out;
  double smax = sig[0];
  if (smax <= tol.rank_tol) return out;
  double merge = tol.rank_tol * std::max(1.0, smax);
  int i = 0;
  int n = static_cast<int>(sig.size());
  while (i < n && sig[i] > tol.rank_tol * smax) {
    int j = i;
    double acc = 0.0;
    while (j < n && sig[i] - sig[j] <= merge) acc += sig[j++];
    out.push_back(Cluster{acc / (j - i), i, j});
    i = j;
  }
  return out;
}

SpectralResolution resolve_rect(const Element& a, const Tolerance& tol) {
  SpectralResolution r{a, {}};
  Svd dec = svd(a.payload);
  std::vector<double> sig(dec.sigma.data(), dec.sigma.data() + dec.sigma.size());
  for (const auto& c : cluster_sigma(sig, tol)) {
    Matrix u = Matrix::Zero(a.payload.rows(), a.payload.cols());
    for (int k = c.begin; k < c.end; ++k)
      u += dec.u.col(k) * dec.v.col(k).adjoint();
    r.terms.push_back(SpectralTerm{c.mean, Element{a.factor, u}});
  }
  return r;
}

/// Sym/Antisym route: spectral projectors of a^* a. The frame element
/// a P_k / sigma_k is an odd polynomial in a, hence stays in the subspace.
/// The adjoint square costs half the digits near the kernel (sqrt of its
/// eigenvalues bottoms out around sqrt(eps) * smax), so each cluster's sigma
/// is re-measured from ||a P|| and the rank cut applied to those values.
SpectralResolution resolve_selfdual(const Element& a, const Tolerance& tol) {
  SpectralResolution r{a, {}};
  Matrix m = a.payload.adjoint() * a.payload;
  HermEig eig = herm_eig(m, tol);
  int d = static_cast<int>(eig.lambda.size());
  std::vector<double> sig(d);
  for (int k = 0; k < d; ++k)
    sig[k] = std::sqrt(std::max(0.0, eig.lambda(d - 1 - k)));

  struct Piece {
    double sigma;
    int mult;
    Matrix p;
  };
  std::vector<Piece> pieces;
  for (const auto& c : cluster_sigma(sig, tol)) {
    Matrix p = Matrix::Zero(d, d);
    for (int k = c.begin; k < c.end; ++k)
      p += eig.w.col(d - 1 - k) * eig.w.col(d - 1 - k).adjoint();
    int mult = c.end - c.begin;
    double shat = (a.payload * p).norm() / std::sqrt(static_cast<double>(mult));
    pieces.push_back(Piece{shat, mult, std::move(p)});
  }
  if (pieces.empty()) return r;

  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.sigma > y.sigma; });
  double smax = pieces.front().sigma;
  if (smax <= tol.rank_tol) return r;
  double merge = tol.rank_tol * std::max(1.0, smax);
  std::size_t i = 0;
  while (i < pieces.size() && pieces[i].sigma > tol.rank_tol * smax) {
    Piece cur = pieces[i];
    std::size_t j = i + 1;
    while (j < pieces.size() && pieces[i].sigma - pieces[j].sigma <= merge) {
      cur.p += pieces[j].p;
      cur.mult += pieces[j].mult;
      ++j;
    }
    cur.sigma =
        (a.payload * cur.p).norm() / std::sqrt(static_cast<double>(cur.mult));
    r.terms.push_back(SpectralTerm{
        cur.sigma, Element{a.factor, Matrix(a.payload * cur.p / cur.sigma)}});
    i = j;
  }
  return r;
}

/// Spin route via the two-dimensional subtriple generated by x.
/// After the phase normalization x' = e^{-i theta/2} x the real and
/// imaginary coordinate parts c, d are orthogonal with |c| >= |d|, and
/// x = (|c|+|d|) e1 + (|c|-|d|) e2 for e_{1,2} = e^{i theta/2}(c_hat -+ ... ).
SpectralResolution resolve_spin(const Element& a, const Tolerance& tol) {
  SpectralResolution r{a, {}};
  cxd w = inner(a, conj_element(a));
  double theta = std::arg(w);
  cxd half_phase = std::exp(kI * (theta / 2.0));
  Matrix xp = a.payload / half_phase;
  RealVector c = xp.real().col(0);
  RealVector d = xp.imag().col(0);
  double nc = c.norm(), nd = d.norm();
  double l1 = nc + nd, l2 = nc - nd;
  if (l1 <= tol.rank_tol) return r;  // zero element

  auto mk = [&](const RealVector& re, const RealVector& im) {
    Matrix v(a.factor.n, 1);
    for (int i = 0; i < a.factor.n; ++i)
      v(i, 0) = half_phase * cxd(re(i), im(i));
    return Element{a.factor, v};
  };

  double merge = tol.rank_tol * std::max(1.0, l1);
  if (l1 - l2 <= merge) {  // coincident pair: one merged frame element
    RealVector ch = c / nc;
    r.terms.push_back(SpectralTerm{(l1 + l2) / 2.0, mk(ch, RealVector::Zero(a.factor.n))});
    return r;
  }
  RealVector ch = c / nc;
  RealVector dh = d / nd;
  r.terms.push_back(SpectralTerm{l1, mk(ch / 2.0, dh / 2.0)});
  if (l2 > tol.rank_tol * l1)
    r.terms.push_back(SpectralTerm{l2, mk(ch / 2.0, RealVector(-dh / 2.0))});
  return r;
}

}  // namespace

SpectralResolution resolve(const Element& a, const Tolerance& tol) {
  validate_element(a, tol);
  switch (a.factor.kind) {
    case FactorKind::Rect: return resolve_rect(a, tol);
    case FactorKind::Sym:
    case FactorKind::Antisym: return resolve_selfdual(a, tol);
    case FactorKind::Spin: return resolve_spin(a, tol);
  }
  throw error("resolve: bad kind");
}

double resolution_residual(const SpectralResolution& r) {
  Element acc = zero_element(r.a.factor);
  for (const auto& t : r.terms) acc = add(acc, scale(t.sigma, t.u));
  return rel_distance(acc, r.a);
}

Element range_tripotent(const Element& a, const Tolerance& tol) {
  auto res = resolve(a, tol);
  Element acc = zero_element(a.factor);
  for (const auto& t : res.terms) acc = add(acc, t.u);
  return acc;
}

SumElement range_tripotent(const SumElement& a, const Tolerance& tol) {
  SumElement r;
  for (const auto& p : a.parts) r.parts.push_back(range_tripotent(p, tol));
  return r;
}

Element support_tripotent(const Element& a, const Tolerance& tol) {
  auto res = resolve(a, tol);
  Element acc = zero_element(a.factor);
  for (const auto& t : res.terms)
    if (std::abs(t.sigma - 1.0) <= tol.eq_tol) acc = add(acc, t.u);
  return acc;
}

Element odd_calculus(const Element& a, const std::function<double(double)>& f,
                     const Tolerance& tol) {
  auto res = resolve(a, tol);
  Element acc = zero_element(a.factor);
  for (const auto& t : res.terms) {
    double v = f(t.sigma);
    if (!std::isfinite(v)) throw error("odd_calculus: non-finite value");
    acc = add(acc, scale(v, t.u));
  }
  return acc;
}

Element cube_root(const Element& a, const Tolerance& tol) {
  return odd_calculus(a, [](double s) { return std::cbrt(s); }, tol);
}

Element generalized_inverse(const Element& a, const Tolerance& tol) {
  return odd_calculus(a, [](double s) { return 1.0 / s; }, tol);
}

VnRegularity is_vn_regular(const Element& a, const Tolerance& tol) {
  Element w = generalized_inverse(a, tol);
  Element qa_w = q_apply(a, w);
  Element qw_a = q_apply(w, a);
  double scale_a = std::max(1.0, triple_norm(a));
  double scale_w = std::max(1.0, triple_norm(w));
  if (max_abs(sub(qa_w, a).payload) > tol.eq_tol * scale_a ||
      max_abs(sub(qw_a, w).payload) > tol.eq_tol * scale_w)
    throw error("is_vn_regular: witness identities failed; finite-dimensional "
                "regularity is violated, which signals an internal "
                "inconsistency");
  return VnRegularity{true, w};
}

bool is_positive_in(const Element& a, const Element& v, const Tolerance& tol) {
  auto res = resolve(a, tol);
  double smax = res.terms.empty() ? 0.0 : res.terms.front().sigma;
  for (const auto& t : res.terms) {
    if (t.sigma <= tol.eq_tol * std::max(1.0, smax)) continue;
    if (!leq(t.u, v, tol)) return false;
  }
  return true;
}

}  // namespace jbt
