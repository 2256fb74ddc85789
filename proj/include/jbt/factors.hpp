#pragma once

#include "jbt/numerics.hpp"

#include <functional>
#include <string>
#include <vector>

namespace jbt {

// Finite-dimensional Cartan factors.
//
// Rect(m, n)  : all complex m-by-n matrices, {a,b,c} = (a b* c + c b* a)/2.
// Antisym(n)  : antisymmetric n-by-n matrices (a = -a^T), same product.
// Sym(n)      : symmetric n-by-n matrices (a = a^T), same product.
// Spin(n)     : coordinate vectors in C^n (n >= 3) with
//               {x,y,z} = <x|y> z + <z|y> x - <x|conj(z)> conj(y),
//               <x|y> = sum_i x_i conj(y_i), conj entrywise.
//
// Antisym/Sym membership is the plain (anti)symmetry test: the defining
// conjugation is fixed to entrywise conjugation of matrices.

enum class FactorKind { Rect, Antisym, Sym, Spin };

struct FactorDescriptor {
  FactorKind kind = FactorKind::Rect;
  int m = 1;  // rows for Rect, otherwise unused
  int n = 1;  // cols for Rect, size for Antisym/Sym/Spin

  static FactorDescriptor rect(int m, int n);
  static FactorDescriptor antisym(int n);
  static FactorDescriptor sym(int n);
  static FactorDescriptor spin(int n);  // requires n >= 3

  int complex_dim() const;
  bool operator==(const FactorDescriptor& o) const;
  bool operator!=(const FactorDescriptor& o) const { return !(*this == o); }
  std::string str() const;
};

/// One element of a Cartan factor. Matrix kinds carry an m-by-n payload,
/// Spin(n) carries an n-by-1 coordinate column.
struct Element {
  FactorDescriptor factor;
  Matrix payload;
};

/// Checks shape, finiteness and the (anti)symmetry membership constraint.
void validate_element(const Element& x, const Tolerance& tol = {});

Element zero_element(const FactorDescriptor& f);
bool is_zero(const Element& x, const Tolerance& tol = {});
Element conj_element(const Element& x);  // entrywise conjugation
Element scale(const cxd& s, const Element& x);
Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);

/// Coordinate inner product in the orthonormal factor basis; linear in x,
/// conjugate-linear in y. For matrix kinds this is tr(y^* x).
cxd inner(const Element& x, const Element& y);
double coord_norm(const Element& x);  // sqrt(<x|x>)

bool approx_eq(const Element& x, const Element& y, const Tolerance& tol = {});
double rel_distance(const Element& x, const Element& y);

/// The triple product {a,b,c}; linear in a and c, conjugate-linear in b.
Element triple_product(const Element& a, const Element& b, const Element& c);
/// Q(a,b)(z) = {a,z,b}; q_apply(a,z) = Q(a)(z) = {a,z,a}.
Element q_apply(const Element& a, const Element& b, const Element& z);
Element q_apply(const Element& a, const Element& z);
Element cube(const Element& a);  // {a,a,a}

/// The JB*-triple norm: operator norm for matrix kinds,
/// sqrt(<x|x> + sqrt(<x|x>^2 - |<x|conj x>|^2)) for spin factors.
double triple_norm(const Element& x);

/// Orthonormal complex basis of the factor (Hilbert-Schmidt orthonormal for
/// matrix kinds, standard unit vectors for spin). All basis elements have
/// real payload entries, so entrywise conjugation fixes the basis.
std::vector<Element> factor_basis(const FactorDescriptor& f);

Vector complex_coords(const Element& x);
Element from_complex_coords(const FactorDescriptor& f, const Vector& z);
/// Doubled real coordinates (Re; Im) of the complex coordinates.
RealVector real_coords(const Element& x);
Element from_real_coords(const FactorDescriptor& f, const RealVector& v);

/// A real-linear map between factors, materialized on doubled real
/// coordinates. Complex-linear and conjugate-linear maps alike live here;
/// composition and inversion are plain matrix operations.
struct RealLinearMap {
  FactorDescriptor domain;
  FactorDescriptor codomain;
  RealMatrix mat;  // (2 dim codomain) x (2 dim domain)

  Element apply(const Element& x) const;
  double op_norm() const;
  RealLinearMap compose(const RealLinearMap& inner_map) const;  // this ∘ inner
  RealLinearMap inverse() const;  // throws jbt::error when singular
};

RealLinearMap materialize(const FactorDescriptor& dom,
                          const FactorDescriptor& cod,
                          const std::function<Element(const Element&)>& f);
RealLinearMap identity_map(const FactorDescriptor& f);

/// L(a,b): z -> {a,b,z} (complex-linear), materialized.
RealLinearMap L_operator(const Element& a, const Element& b);
/// Q(a,b): z -> {a,z,b} (conjugate-linear), materialized. Q(a) = Q(a,a).
RealLinearMap Q_operator(const Element& a, const Element& b);
RealLinearMap Q_operator(const Element& a);

/// Triple-isomorphic bridge from Spin(3) onto Sym(2) and from Spin(4) onto
/// Rect(2,2). Sends the minimal tripotents (a+ib)/2, (a-ib)/2 to e11, e22
/// (and for n=4 the pair built from the last two coordinates to e12, -e21).
Element spin_matrix_embedding(const Element& x);
Element spin_matrix_preimage(const Element& m, int n);
FactorDescriptor spin_embedding_target(int n);

/// Ginibre-style sampling: gaussian matrix projected onto the factor.
Element sample_element(const FactorDescriptor& f, Rng& rng);

// ---------------------------------------------------------------------------
// Finite l-infinity sums of Cartan factors. All structure is componentwise;
// the norm is the max of the part norms.

using SumDescriptor = std::vector<FactorDescriptor>;

struct SumElement {
  std::vector<Element> parts;

  SumDescriptor descriptor() const;
};

SumElement zero_sum(const SumDescriptor& d);
SumElement lift(const SumDescriptor& d, std::size_t slot, const Element& x);
SumElement wrap(const Element& x);  // one-part sum
bool is_zero(const SumElement& x, const Tolerance& tol = {});
SumElement add(const SumElement& x, const SumElement& y);
SumElement sub(const SumElement& x, const SumElement& y);
SumElement scale(const cxd& s, const SumElement& x);
SumElement triple_product(const SumElement& a, const SumElement& b,
                          const SumElement& c);
SumElement q_apply(const SumElement& a, const SumElement& z);
SumElement cube(const SumElement& a);
double triple_norm(const SumElement& x);
bool approx_eq(const SumElement& x, const SumElement& y,
               const Tolerance& tol = {});
double rel_distance(const SumElement& x, const SumElement& y);
SumElement sample_sum(const SumDescriptor& d, Rng& rng);
bool same_descriptor(const SumDescriptor& a, const SumDescriptor& b);
std::string descriptor_str(const SumDescriptor& d);

}  // namespace jbt
