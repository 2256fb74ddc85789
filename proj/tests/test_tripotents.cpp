#include <doctest.h>

#include "jbt/tripotents.hpp"

#include <cmath>

using namespace jbt;

namespace {

Element unit(const FactorDescriptor& f, int i, int j) {
  Element x = zero_element(f);
  x.payload(i, j) = 1.0;
  return x;
}

const FactorDescriptor m2 = FactorDescriptor::rect(2, 2);

Element ident2() {
  Element x = zero_element(m2);
  x.payload = Matrix::Identity(2, 2);
  return x;
}

}  // namespace

TEST_CASE("tripotent recognition") {
  CHECK(is_tripotent(unit(m2, 0, 0)));
  CHECK(is_tripotent(zero_element(m2)));
  CHECK_FALSE(is_tripotent(scale(2.0, unit(m2, 0, 0))));
  CHECK_FALSE(is_tripotent(add(unit(m2, 0, 0), unit(m2, 0, 1))));

  // (1, i, 0)/2 is a minimal spin tripotent
  Element s = zero_element(FactorDescriptor::spin(3));
  s.payload(0, 0) = 0.5;
  s.payload(1, 0) = cxd(0, 0.5);
  CHECK(is_tripotent(s));
  CHECK(is_minimal_tripotent(s));
}

TEST_CASE("lattice flags on hand examples") {
  Tripotent e = make_tripotent(unit(m2, 0, 0));
  CHECK(e.minimal);
  CHECK_FALSE(e.complete);
  CHECK_FALSE(e.unitary);

  Tripotent one = make_tripotent(ident2());
  CHECK_FALSE(one.minimal);
  CHECK(one.complete);
  CHECK(one.unitary);

  // [I | 0] in rect(2,3): complete (no zero part) but not unitary
  auto r23 = FactorDescriptor::rect(2, 3);
  Element wide = zero_element(r23);
  wide.payload(0, 0) = wide.payload(1, 1) = 1.0;
  Tripotent w = make_tripotent(wide);
  CHECK(w.complete);
  CHECK_FALSE(w.unitary);

  CHECK_THROWS_AS(make_tripotent(scale(0.5, ident2())), error);
}

TEST_CASE("peirce decomposition dimensions and projections") {
  PeirceDecomposition d = peirce(unit(m2, 0, 0));
  CHECK(d.dim2() == 1);
  CHECK(d.dim1() == 2);
  CHECK(d.dim0() == 1);

  PeirceDecomposition full = peirce(ident2());
  CHECK(full.dim2() == 4);
  CHECK(full.dim1() == 0);
  CHECK(full.dim0() == 0);

  Element s = zero_element(FactorDescriptor::spin(3));
  s.payload(0, 0) = 0.5;
  s.payload(1, 0) = cxd(0, 0.5);
  PeirceDecomposition sp = peirce(s);
  CHECK(sp.dim2() == 1);
  CHECK(sp.dim1() == 1);
  CHECK(sp.dim0() == 1);

  // projections are idempotent, complete and match the pointwise forms
  Rng rng(31);
  Element x = sample_element(m2, rng);
  Element e = unit(m2, 0, 0);
  Element p2 = peirce2_apply(e, x);
  Element p1 = peirce1_apply(e, x);
  Element p0 = peirce0_apply(e, x);
  CHECK(approx_eq(add(add(p2, p1), p0), x));
  CHECK(approx_eq(peirce2_apply(e, p2), p2));
  CHECK(is_zero(peirce2_apply(e, p1)));
  CHECK(is_zero(peirce1_apply(e, p0)));
  CHECK(approx_eq(d.p2.apply(x), p2));
  CHECK(approx_eq(d.p1.apply(x), p1));
  CHECK(approx_eq(d.p0.apply(x), p0));

  CHECK_THROWS_AS(peirce(scale(2.0, e)), error);
}

TEST_CASE("order, orthogonality, colinearity, governing") {
  Element e11 = unit(m2, 0, 0), e12 = unit(m2, 0, 1), e22 = unit(m2, 1, 1);

  CHECK(leq(e11, ident2()));
  CHECK(leq(e11, e11));
  CHECK(leq(zero_element(m2), e11));
  CHECK_FALSE(leq(e11, e22));
  CHECK_FALSE(leq(ident2(), e11));
  CHECK_FALSE(leq(e11, add(e11, e12)));

  CHECK(orthogonal(e11, e22));
  CHECK_FALSE(orthogonal(e11, e12));

  CHECK(colinear(e11, e12));
  CHECK_FALSE(colinear(e11, e22));

  auto s2 = FactorDescriptor::sym(2);
  Element p1 = unit(s2, 0, 0);
  Element off = zero_element(s2);
  off.payload(0, 1) = off.payload(1, 0) = 1.0;
  CHECK(governs(off, p1));
  CHECK_FALSE(governs(p1, off));
}

TEST_CASE("jordan algebra carried by a Peirce-2 space") {
  JordanStructure j = jordan_structure(ident2());
  Element e11 = unit(m2, 0, 0), e12 = unit(m2, 0, 1), e22 = unit(m2, 1, 1);

  CHECK(approx_eq(j.product(e11, e12), scale(0.5, e12)));
  CHECK(approx_eq(j.involution(e12), unit(m2, 1, 0)));
  CHECK(is_zero(j.u_operator(e11, e22)));
  CHECK(approx_eq(j.u_operator(e11, e11), e11));
  CHECK(j.contains(e22));

  JordanStructure corner = jordan_structure(e11);
  CHECK(corner.contains(e11));
  CHECK_FALSE(corner.contains(e22));
}

TEST_CASE("parametrized minimal families validate their constraints") {
  Element p = minimal_projection(0.5, 1.0, FactorKind::Sym);
  CHECK(is_minimal_tripotent(p));
  CHECK(p.payload(0, 1) == cxd(0.5, 0));

  Element q = minimal_projection(0.3, cxd(0, 1), FactorKind::Rect);
  CHECK(is_minimal_tripotent(q));

  CHECK_THROWS_AS(minimal_projection(1.5, 1.0, FactorKind::Sym), error);
  CHECK_THROWS_AS(minimal_projection(0.5, cxd(0, 1), FactorKind::Sym), error);
  CHECK_THROWS_AS(minimal_projection(0.5, 2.0, FactorKind::Rect), error);

  Element t = minimal_tripotent_param(0.5, 0.5, 0.5, 0.5, FactorKind::Rect);
  CHECK(is_minimal_tripotent(t));
  CHECK_THROWS_AS(
      minimal_tripotent_param(1.0, 0.0, 0.0, 1.0, FactorKind::Rect), error);
  CHECK_THROWS_AS(minimal_tripotent_param(0.0, std::sqrt(0.5), std::sqrt(0.5),
                                          0.0, FactorKind::Rect),
                  error);  // alpha*delta != beta*gamma
}

TEST_CASE("quadrangles and trangles") {
  Quadrangle q = enumerate_quadrangle();
  CHECK(is_quadrangle(q));
  Quadrangle broken = q;
  broken.v4 = scale(2.0, broken.v4);
  CHECK_FALSE(is_quadrangle(broken));

  Trangle t = enumerate_trangle();
  CHECK(is_trangle(t));
  Trangle skew = t;
  skew.vt = scale(-1.0, skew.vt);
  CHECK_FALSE(is_trangle(skew));
}

TEST_CASE("deterministic pools are well formed") {
  for (auto f : {FactorDescriptor::rect(2, 2), FactorDescriptor::antisym(4),
                 FactorDescriptor::spin(4)}) {
    auto pool = tripotent_pool(f, 42, 12);
    CHECK(pool.size() >= 12);
    for (const Element& e : pool) CHECK(is_tripotent(e));

    auto mins = minimal_tripotent_pool(f, 42, 6);
    CHECK(mins.size() >= 6);
    for (const Element& e : mins) CHECK(is_minimal_tripotent(e));
  }
  // pools are reproducible for a fixed seed
  auto a = tripotent_pool(m2, 7, 8);
  auto b = tripotent_pool(m2, 7, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(approx_eq(a[i], b[i]));
}
