#include <doctest.h>

#include "jbt/truncation.hpp"

using namespace jbt;

namespace {

const FactorDescriptor m2 = FactorDescriptor::rect(2, 2);

Element unit(int i, int j) {
  Element x = zero_element(m2);
  x.payload(i, j) = 1.0;
  return x;
}

Element ident2() {
  Element x = zero_element(m2);
  x.payload = Matrix::Identity(2, 2);
  return x;
}

}  // namespace

TEST_CASE("truncation on matrix hand values") {
  CHECK(is_truncation(unit(0, 0), ident2()));
  CHECK(is_truncation(unit(0, 0), unit(0, 0)));
  CHECK(is_truncation(zero_element(m2), ident2()));
  CHECK_FALSE(is_truncation(unit(0, 1), unit(0, 0)));
  CHECK_FALSE(is_truncation(ident2(), unit(0, 0)));

  // rescaling one diagonal entry keeps the other a truncation
  Element b = zero_element(m2);
  b.payload(0, 0) = 1.0;
  b.payload(1, 1) = 2.0;
  CHECK(is_truncation(unit(0, 0), b));
  // but a diagonal with an off-scale entry is no truncation of the identity
  Element a = zero_element(m2);
  a.payload(0, 0) = 1.0;
  a.payload(1, 1) = 0.3;
  CHECK_FALSE(is_truncation(a, ident2()));

  CHECK_THROWS_AS(
      is_truncation(unit(0, 0), zero_element(FactorDescriptor::sym(2))), error);
}

TEST_CASE("the three characterizations agree") {
  Rng rng(53);
  for (auto f : {m2, FactorDescriptor::sym(2), FactorDescriptor::spin(4)}) {
    for (int t = 0; t < 40; ++t) {
      Element b = sample_element(f, rng);
      Element a;
      if (t % 2 == 0) {
        // engineered positive: partial spectral sum of b
        auto res = resolve(b);
        a = zero_element(f);
        for (int k = 0; k < res.rank(); k += 2)
          a = add(a, scale(res.terms[k].sigma, res.terms[k].u));
      } else {
        a = sample_element(f, rng);
      }
      TruncationChecks c = truncation_characterizations(a, b);
      require_consistent(c);
      if (t % 2 == 0) CHECK(c.holds());
    }
  }

  CHECK_THROWS_AS(
      require_consistent(TruncationChecks{true, false, true}), error);
}

TEST_CASE("quadratic annihilators") {
  CHECK(inner_q_annihilator_membership(unit(1, 1), unit(0, 0)));
  CHECK(inner_q_annihilator_membership(unit(0, 1), unit(0, 0)));
  CHECK_FALSE(inner_q_annihilator_membership(unit(0, 0), unit(0, 0)));

  CHECK(outer_q_annihilator_membership(unit(0, 1), {unit(0, 0)}));
  CHECK_FALSE(outer_q_annihilator_membership(unit(0, 1), {unit(0, 1)}));
  CHECK(outer_q_annihilator_membership(zero_element(m2),
                                       {unit(0, 0), unit(0, 1), ident2()}));

  Rng rng(59);
  for (auto f : {FactorDescriptor::rect(3, 3), FactorDescriptor::spin(4)}) {
    for (int t = 0; t < 20; ++t)
      CHECK(annihilator_element_formula_check(sample_element(f, rng)));
  }
}

TEST_CASE("pure atoms and transition values") {
  PureAtom phi = pure_atom(unit(0, 0));
  Rng rng(61);
  Element x = sample_element(m2, rng);
  CHECK(std::abs(phi.value(x) - x.payload(0, 0)) < 1e-12);
  CHECK_THROWS_AS(pure_atom(ident2()), error);

  Element p1 = zero_element(m2);
  p1.payload << 0.5, 0.5, 0.5, 0.5;
  Element p2 = zero_element(m2);
  p2.payload << cxd(0.5, 0), cxd(0, 0.5), cxd(0, -0.5), cxd(0.5, 0);

  CHECK(std::abs(ttp(p1, unit(0, 0)) - 0.5) < 1e-12);
  CHECK(std::abs(ttp(p2, p1) - 0.5) < 1e-12);
  CHECK(std::abs(ttp(unit(0, 0), unit(0, 0)) - 1.0) < 1e-12);
  CHECK(std::abs(ttp(unit(0, 0), unit(1, 1)) - 0.0) < 1e-12);
  CHECK_THROWS_AS(ttp(ident2(), unit(0, 0)), error);
  CHECK_THROWS_AS(ttp(unit(0, 0), ident2()), error);
}

TEST_CASE("truncations of triple products") {
  Rng rng(67);
  auto s2 = FactorDescriptor::sym(2);
  for (int t = 0; t < 25; ++t) {
    Element b = sample_element(s2, rng);
    Element c = sample_element(s2, rng);
    Element d = q_apply(b, c);
    CHECK(truncation_of_triple_product(d, b, c));  // full product
    auto res = resolve(d);
    if (res.rank() > 1) {
      Element partial = scale(res.terms[0].sigma, res.terms[0].u);
      CHECK(truncation_of_triple_product(partial, b, c));
    }
    CHECK(truncation_of_triple_product(zero_element(s2), b, c));
  }

  // random a against an unrelated product is overwhelmingly not a truncation
  int spurious = 0;
  for (int t = 0; t < 25; ++t) {
    Element a = sample_element(s2, rng);
    Element b = sample_element(s2, rng);
    Element c = sample_element(s2, rng);
    if (truncation_of_triple_product(a, b, c)) ++spurious;
  }
  CHECK(spurious == 0);
}

TEST_CASE("sum truncations are componentwise and aligned") {
  SumDescriptor d{m2, FactorDescriptor::spin(3)};
  Rng rng(71);
  SumElement b = sample_sum(d, rng);
  SumElement a = zero_sum(d);
  auto res = resolve(b.parts[0]);
  REQUIRE(res.rank() > 0);
  a.parts[0] = scale(res.terms[0].sigma, res.terms[0].u);
  CHECK(is_truncation(a, b));

  a.parts[1] = sample_element(d[1], rng);
  CHECK_FALSE(is_truncation(a, b));

  CHECK_THROWS_AS(is_truncation(wrap(a.parts[0]), b), error);
}
