#include <doctest.h>

#include "jbt/json_io.hpp"
#include "jbt/preserver.hpp"

#include <cmath>

using namespace jbt;

namespace {

const FactorDescriptor m2 = FactorDescriptor::rect(2, 2);

Element unit(int i, int j) {
  Element x = zero_element(m2);
  x.payload(i, j) = 1.0;
  return x;
}

}  // namespace

TEST_CASE("scalar gauges evaluate and invert") {
  ScalarFunction inv = ScalarFunction::inverse_or_zero();
  CHECK(std::abs(inv(cxd(2, 0)) - cxd(0.5, 0)) < 1e-15);
  CHECK(std::abs(inv(cxd(0, 1)) - cxd(0, -1)) < 1e-15);
  CHECK(inv(cxd(0, 0)) == cxd(0, 0));
  CHECK(inv.inverse().kind == ScalarFunction::Kind::InverseOrZero);

  ScalarFunction c = ScalarFunction::conjugation();
  CHECK(c(cxd(1, 2)) == cxd(1, -2));
  CHECK(ScalarFunction::identity()(cxd(3, 4)) == cxd(3, 4));
}

TEST_CASE("gauge laws separate the inversion gauge from linear ones") {
  GaugeProperties id = gauge_properties(ScalarFunction::identity(), 300, 5);
  CHECK(id.all_product_laws());
  CHECK(id.additive);

  GaugeProperties cj = gauge_properties(ScalarFunction::conjugation(), 300, 5);
  CHECK(cj.all_product_laws());
  CHECK(cj.additive);

  GaugeProperties iz =
      gauge_properties(ScalarFunction::inverse_or_zero(), 300, 5);
  CHECK(iz.all_product_laws());
  CHECK_FALSE(iz.additive);
}

TEST_CASE("maps apply, invert and compose") {
  Rng rng(83);

  PreserverMap u = PreserverMap::unitary_multiplier(m2, 11);
  SumElement x = wrap(sample_element(m2, rng));
  CHECK(approx_eq(u.inverted().apply(u.apply(x)), x));
  CHECK(triple_norm(u.apply(x)) == doctest::Approx(triple_norm(x)));

  PreserverMap t = PreserverMap::transpose_on(m2);
  SumElement w = wrap(sample_element(m2, rng));
  CHECK(approx_eq(t.apply(w).parts[0].payload,
                  Matrix(w.parts[0].payload.transpose())));
  CHECK_THROWS_AS(PreserverMap::transpose_on(FactorDescriptor::rect(2, 3)),
                  error);

  PreserverMap cj = PreserverMap::conjugation_on(FactorDescriptor::sym(2));
  SumElement s = wrap(sample_element(FactorDescriptor::sym(2), rng));
  CHECK(approx_eq(cj.apply(s).parts[0], conj_element(s.parts[0])));

  PreserverMap so = PreserverMap::spin_orthogonal(4, 7);
  SumElement v = wrap(sample_element(FactorDescriptor::spin(4), rng));
  CHECK(approx_eq(so.inverted().apply(so.apply(v)), v));
  CHECK(triple_norm(so.apply(v)) == doctest::Approx(triple_norm(v)));

  PreserverMap chain = PreserverMap::compose({u.inverted(), u});
  CHECK(approx_eq(chain.apply(x), x));
}

TEST_CASE("norm perturbations invert by solving the norm equation") {
  PreserverMap base = PreserverMap::identity_on(m2);
  PreserverMap p = PreserverMap::norm_perturbation(base, unit(0, 0), 0.1);
  Rng rng(89);
  for (int i = 0; i < 10; ++i) {
    SumElement x = wrap(sample_element(m2, rng));
    SumElement y = p.apply(x);
    CHECK_FALSE(approx_eq(y, x));
    CHECK(approx_eq(p.inverted().apply(y), x));
  }
}

TEST_CASE("direct sums permute slots and validate sigma") {
  PreserverMap swap = PreserverMap::direct_sum(
      {1, 0},
      {PreserverMap::identity_on(m2), PreserverMap::identity_on(m2)});
  Rng rng(97);
  SumElement x = sample_sum(swap.domain(), rng);
  SumElement y = swap.apply(x);
  CHECK(approx_eq(y.parts[0], x.parts[1]));
  CHECK(approx_eq(y.parts[1], x.parts[0]));
  CHECK(approx_eq(swap.inverted().apply(y), x));

  CHECK_THROWS_AS(PreserverMap::direct_sum(
                      {0, 0}, {PreserverMap::identity_on(m2),
                               PreserverMap::identity_on(m2)}),
                  error);
  CHECK_THROWS_AS(PreserverMap::scale_on(m2, cxd(0, 0)), error);
}

TEST_CASE("preservation harness accepts a triple isomorphism") {
  PreserverMap id = PreserverMap::identity_on(m2);
  TrialReport rep = preserves_truncation_of_triple_products(id, 800, 42);
  CHECK(rep.passed());
  CHECK(rep.failures == 0);
  CHECK(rep.forward_positives >= 100);
  CHECK(rep.backward_positives >= 100);

  // determinism: the same seed reproduces the same counts
  TrialReport again = preserves_truncation_of_triple_products(id, 800, 42);
  CHECK(again.forward_positives == rep.forward_positives);
  CHECK(again.backward_positives == rep.backward_positives);

  TrialReport tiny = preserves_truncation_of_triple_products(id, 10, 42);
  CHECK(tiny.verdict == "inconclusive");
}

TEST_CASE("preservation harness rejects a norm perturbation with witnesses") {
  PreserverMap bad = PreserverMap::norm_perturbation(
      PreserverMap::identity_on(m2), unit(0, 0), 0.1);
  TrialReport rep = preserves_truncation_of_triple_products(bad, 400, 42);
  CHECK(rep.verdict == "fail");
  REQUIRE(!rep.witnesses.empty());

  // each witness isolates: the stored triple satisfies the relation on its
  // own side and its image under the tested direction breaks it
  PreserverMap inv = bad.inverted();
  for (const WitnessTriple& w : rep.witnesses) {
    CHECK(truncation_of_triple_product(w.a, w.b, w.c));
    const PreserverMap& used = w.direction == "forward" ? bad : inv;
    CHECK_FALSE(truncation_of_triple_product(
        used.apply(w.a), used.apply(w.b), used.apply(w.c)));
    CHECK(w.residual > 1e-9);
  }
}

TEST_CASE("truncation residual separates engineered from broken triples") {
  Rng rng(101);
  SumDescriptor d{FactorDescriptor::sym(2)};
  SumElement b = sample_sum(d, rng);
  SumElement c = sample_sum(d, rng);
  SumElement a = q_apply(b, c);
  CHECK(truncation_residual(a, b, c) < 1e-12);
  SumElement off = add(a, scale(0.5, sample_sum(d, rng)));
  CHECK(truncation_residual(off, b, c) > 1e-6);
}

TEST_CASE("consequence checks pass on an isomorphism and carry the check ids") {
  PreserverMap id = PreserverMap::identity_on(m2);
  auto results = verify_consequences(id, 200, 42);
  std::vector<std::string> want{"lemma-3.3",  "lemma-3.4", "lemma-3.5",
                                "remark-3.6", "corollary-3.7", "lemma-3.9",
                                "lemma-3.10", "proposition-3.11"};
  REQUIRE(results.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(results[i].id == want[i]);
    CHECK(results[i].pass());
    CHECK(results[i].trials > 0);
  }
}

TEST_CASE("linearity classification") {
  CHECK(classify(PreserverMap::identity_on(m2), 200, 1).verdict ==
        LinearityClass::ComplexLinear);

  ClassifyReport cj = classify(PreserverMap::conjugation_on(m2), 200, 1);
  CHECK(cj.verdict == LinearityClass::ConjugateLinear);
  CHECK(cj.isometric);

  // complex-linear but not a triple isomorphism
  ClassifyReport tw = classify(PreserverMap::peirce_twist(), 200, 1);
  CHECK(tw.verdict == LinearityClass::ComplexLinear);
  CHECK_FALSE(tw.triple_preserving);

  ClassifyReport rs = classify(PreserverMap::real_stretch(m2), 200, 1);
  CHECK(rs.verdict == LinearityClass::Nonlinear);
  REQUIRE(rs.factor_tags.size() == 1);
  CHECK(rs.factor_tags[0] == "real-mixed");
  CHECK(rs.additive);

  ClassifyReport split = classify(
      PreserverMap::direct_sum(
          {0, 1},
          {PreserverMap::identity_on(m2),
           PreserverMap::conjugation_on(FactorDescriptor::sym(2))}),
      200, 1);
  CHECK(split.verdict == LinearityClass::RealLinearSplit);
  REQUIRE(split.factor_tags.size() == 2);
  CHECK(split.factor_tags[0] == "complex-linear");
  CHECK(split.factor_tags[1] == "conjugate-linear");

  CHECK(classify(PreserverMap::gauge(FactorDescriptor::rect(1, 1),
                                     ScalarFunction::inverse_or_zero()),
                 200, 1)
            .verdict == LinearityClass::Nonlinear);
}

TEST_CASE("factor matching recovers the slot permutation and ranks") {
  PreserverMap swap = PreserverMap::direct_sum(
      {1, 0},
      {PreserverMap::identity_on(m2),
       PreserverMap::unitary_multiplier(m2, 3)});
  FactorMatch fm = factor_matching(swap, 42);
  CHECK(fm.valid);
  REQUIRE(fm.sigma.size() == 2);
  CHECK(fm.sigma[0] == 1);
  CHECK(fm.sigma[1] == 0);
  CHECK(fm.ranks_match);

  CHECK(greedy_rank(m2, 42) == 2);
  CHECK(greedy_rank(FactorDescriptor::rect(3, 1), 42) == 1);
  CHECK(greedy_rank(FactorDescriptor::sym(3), 42) == 3);
  CHECK(greedy_rank(FactorDescriptor::antisym(4), 42) == 2);
  CHECK(greedy_rank(FactorDescriptor::spin(5), 42) == 2);
}

TEST_CASE("rank-one factor analysis") {
  auto col3 = FactorDescriptor::rect(3, 1);
  RankOneReport ok =
      rank_one_preserver_check(PreserverMap::identity_on(col3), 200, 42);
  CHECK(ok.applicable);
  CHECK(ok.preserved);
  CHECK(ok.consistent);

  RankOneReport cj =
      rank_one_preserver_check(PreserverMap::conjugation_on(col3), 200, 42);
  CHECK(cj.applicable);
  CHECK(cj.conjugated);
  CHECK(cj.consistent);

  RankOneReport mixed =
      rank_one_preserver_check(PreserverMap::rank_one_mixed_gauge(3), 200, 42);
  CHECK(mixed.applicable);
  CHECK_FALSE(mixed.consistent);

  CHECK_FALSE(
      rank_one_preserver_check(PreserverMap::identity_on(m2), 200, 42)
          .applicable);
}

TEST_CASE("catalogues carry their advertised expectations") {
  auto sound = catalogue_sound_maps(42);
  CHECK(sound.size() >= 6);
  bool has_split = false;
  for (const auto& c : sound) {
    CHECK(c.map.valid());
    if (c.map.domain().size() > 1) has_split = true;
  }
  CHECK(has_split);

  auto broken = catalogue_broken_maps(42);
  CHECK(broken.size() >= 4);
  for (const auto& c : broken) CHECK(c.map.valid());
}

TEST_CASE("map recipes roundtrip through JSON") {
  json gauge = {{"recipe", "gauge"},
                {"factor", {{"kind", "rect"}, {"m", 1}, {"n", 1}}},
                {"f", "inverse-or-zero"}};
  PreserverMap g = map_from_json(gauge, 42);
  Element two = zero_element(FactorDescriptor::rect(1, 1));
  two.payload(0, 0) = 2.0;
  CHECK(std::abs(g.apply_one(two).payload(0, 0) - cxd(0.5, 0)) < 1e-15);

  json lin = {{"recipe", "linear"},
              {"factor", {{"kind", "rect"}, {"m", 2}, {"n", 2}}},
              {"op", "transpose"}};
  PreserverMap t = map_from_json(lin, 42);
  Rng rng(7);
  Element x = sample_element(m2, rng);
  CHECK(approx_eq(t.apply_one(x).payload, Matrix(x.payload.transpose())));

  json cat = {{"recipe", "catalogue"}, {"name", "transpose-m2"}, {"seed", 42}};
  CHECK(map_from_json(cat, 42).valid());

  json split = {{"recipe", "sum"},
                {"sigma", {1, 0}},
                {"parts", {lin, lin}}};
  PreserverMap sw = map_from_json(split, 42);
  CHECK(sw.domain().size() == 2);

  CHECK_THROWS_AS(map_from_json({{"recipe", "warp"}}, 42), error);
  CHECK_THROWS_AS(
      map_from_json({{"recipe", "linear"},
                     {"factor", {{"kind", "rect"}, {"m", 2}, {"n", 2}}},
                     {"op", "scale"},
                     {"value", 0.0}},
                    42),
      error);
  CHECK_THROWS_AS(
      map_from_json({{"recipe", "catalogue"}, {"name", "no-such-map"}}, 42),
      error);
}
