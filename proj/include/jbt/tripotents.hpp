#pragma once

#include "jbt/factors.hpp"

namespace jbt {

/// {e,e,e} = e within tolerance.
bool is_tripotent(const Element& e, const Tolerance& tol = {});
bool is_tripotent(const SumElement& e, const Tolerance& tol = {});

/// Pointwise Peirce projections of a tripotent e, via the closed forms
/// P2 = Q(e)^2, P1 = 4(L - L^2), P0 = id - 3L + 2L^2 with L = L(e,e).
Element peirce2_apply(const Element& e, const Element& x);
Element peirce1_apply(const Element& e, const Element& x);
Element peirce0_apply(const Element& e, const Element& x);
Element peirce_apply(int j, const Element& e, const Element& x);
SumElement peirce_apply(int j, const SumElement& e, const SumElement& x);

/// Tripotent with its computed lattice flags.
/// minimal:  E2(e) = C e != 0;  complete: E0(e) = 0;  unitary: E2(e) = E.
struct Tripotent {
  Element e;
  bool minimal = false;
  bool complete = false;
  bool unitary = false;
};
Tripotent make_tripotent(const Element& e, const Tolerance& tol = {});
bool is_minimal_tripotent(const Element& e, const Tolerance& tol = {});

/// Full Peirce decomposition: eigenspace projectors of the materialized
/// L(e,e) with eigenvalues snapped to {0, 1/2, 1}; an eigenvalue further
/// than eq_tol from all three raises an inconsistency error. Cross-checked
/// against Q(e)^2 on construction.
struct PeirceDecomposition {
  Element e;
  RealLinearMap p2, p1, p0;
  std::vector<Element> basis2, basis1, basis0;  // complex bases

  int dim2() const { return static_cast<int>(basis2.size()); }
  int dim1() const { return static_cast<int>(basis1.size()); }
  int dim0() const { return static_cast<int>(basis0.size()); }
};
PeirceDecomposition peirce(const Element& e, const Tolerance& tol = {});

/// e <= v iff v - e is a tripotent orthogonal to e (both conditions checked).
bool leq(const Element& e, const Element& v, const Tolerance& tol = {});
bool leq(const SumElement& e, const SumElement& v, const Tolerance& tol = {});

/// a and b are orthogonal iff the materialized L(a,b) vanishes.
bool orthogonal(const Element& a, const Element& b, const Tolerance& tol = {});
bool orthogonal(const SumElement& a, const SumElement& b,
                const Tolerance& tol = {});

/// u and v colinear: u in E1(v) and v in E1(u).
bool colinear(const Element& u, const Element& v, const Tolerance& tol = {});
/// u governs v: u in E1(v) and v in E2(u).
bool governs(const Element& u, const Element& v, const Tolerance& tol = {});

/// The unital Jordan *-algebra structure carried by E2(e):
/// a o b = {a,e,b}, a* = {e,a,e}, U_a(x) = 2 (a o x) o a - (a o a) o x.
struct JordanStructure {
  Element unit;
  Tolerance tol;

  Element product(const Element& a, const Element& b) const;
  Element involution(const Element& a) const;
  Element u_operator(const Element& a, const Element& x) const;
  bool contains(const Element& a) const;  // a in E2(e)
};
JordanStructure jordan_structure(const Element& e, const Tolerance& tol = {});

/// Minimal projection of a rank-one unital piece:
/// [[alpha, gamma s],[conj(gamma) s, 1-alpha]] with s = sqrt(alpha(1-alpha)),
/// alpha in [0,1], |gamma| = 1. kind selects Sym(2) (needs gamma = 1) or
/// Rect(2,2).
Element minimal_projection(double alpha, const cxd& gamma, FactorKind kind);

/// Minimal tripotent [[alpha,beta],[gamma,delta]] subject to
/// sum of squared moduli = 1 and alpha delta = beta gamma; validated.
Element minimal_tripotent_param(const cxd& alpha, const cxd& beta,
                                const cxd& gamma, const cxd& delta,
                                FactorKind kind, const Tolerance& tol = {});

/// Quadrangle (v1,v2,v3,v4): v1 _|_ v3, v2 _|_ v4, cyclically colinear
/// neighbours, and {v1,v2,v3} = v4/2.
struct Quadrangle {
  Element v1, v2, v3, v4;
};
/// Trangle (v, u, vt): v _|_ vt, u governs both, vt = Q(u)(v).
struct Trangle {
  Element v, u, vt;
};

/// Canonical validated instances: the matrix-unit quadrangle of Rect(2,2)
/// and the (e11, e12+e21, e22) trangle of Sym(2).
Quadrangle enumerate_quadrangle(const Tolerance& tol = {});
Trangle enumerate_trangle(const Tolerance& tol = {});
bool is_quadrangle(const Quadrangle& q, const Tolerance& tol = {});
bool is_trangle(const Trangle& t, const Tolerance& tol = {});

/// Deterministic pool of tripotents used by the property suites: zero,
/// parametrized minimal families, singular-frame partial isometries of random
/// elements and their partial sums, unimodular multiples.
std::vector<Element> tripotent_pool(const FactorDescriptor& f,
                                    std::uint64_t seed, int target,
                                    const Tolerance& tol = {});
/// Pool restricted to minimal tripotents.
std::vector<Element> minimal_tripotent_pool(const FactorDescriptor& f,
                                            std::uint64_t seed, int target,
                                            const Tolerance& tol = {});

}  // namespace jbt
