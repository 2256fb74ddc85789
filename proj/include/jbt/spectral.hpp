#pragma once

#include "jbt/tripotents.hpp"

namespace jbt {

/// Finite spectral resolution a = sum_k sigma_k u_k with sigma strictly
/// decreasing positive and u_k mutually orthogonal tripotents. Singular
/// values below rank_tol * sigma_max are dropped; values within
/// rank_tol * max(1, sigma_max) of each other are merged into one term
/// carrying the cluster mean.
struct SpectralTerm {
  double sigma;
  Element u;
};
struct SpectralResolution {
  Element a;
  std::vector<SpectralTerm> terms;

  int rank() const { return static_cast<int>(terms.size()); }
};

SpectralResolution resolve(const Element& a, const Tolerance& tol = {});

/// Reconstruction residual of a resolution (relative, for diagnostics).
double resolution_residual(const SpectralResolution& r);

/// Range tripotent r(a) = sum_k u_k; the smallest tripotent with
/// a positive in its Peirce-2 Jordan algebra.
Element range_tripotent(const Element& a, const Tolerance& tol = {});
SumElement range_tripotent(const SumElement& a, const Tolerance& tol = {});

/// Support tripotent u(a): the part of the frame with sigma within eq_tol
/// of 1. Satisfies Q(u(a))(a) = u(a).
Element support_tripotent(const Element& a, const Tolerance& tol = {});

/// Odd functional calculus along the resolution: sum f(sigma_k) u_k.
Element odd_calculus(const Element& a, const std::function<double(double)>& f,
                     const Tolerance& tol = {});

/// cube_root(a)^[3] = a; lies in the subtriple generated by a.
Element cube_root(const Element& a, const Tolerance& tol = {});

/// Generalized inverse: Q(a)(a^dag) = a, Q(a^dag)(a) = a^dag, and
/// [Q(a), Q(a^dag)] = 0.
Element generalized_inverse(const Element& a, const Tolerance& tol = {});

/// Every element of a finite-dimensional triple is von Neumann regular;
/// the witness b = a^dag is computed and its identities are verified,
/// raising an inconsistency error if they fail.
struct VnRegularity {
  bool regular;
  Element witness;
};
VnRegularity is_vn_regular(const Element& a, const Tolerance& tol = {});

/// a is positive in the Jordan algebra E2(v): every frame tripotent of a
/// (above an eq_tol cutoff) lies below v.
bool is_positive_in(const Element& a, const Element& v,
                    const Tolerance& tol = {});

}  // namespace jbt
