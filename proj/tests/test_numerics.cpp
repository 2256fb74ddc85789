#include <doctest.h>

#include "jbt/numerics.hpp"

#include <cmath>

using namespace jbt;

TEST_CASE("tolerance policy enforces its ordering invariant") {
  CHECK_THROWS_AS(Tolerance(1e-10, 1e-9), error);
  CHECK_THROWS_AS(Tolerance(2.0, 1e-9), error);
  CHECK_THROWS_AS(Tolerance(1e-9, 0.0), error);

  Tolerance t(1e-6, 1e-8);
  Tolerance tight = t.with_eq(1e-12);
  CHECK(tight.eq_tol == doctest::Approx(1e-12));
  CHECK(tight.rank_tol < tight.eq_tol);
}

TEST_CASE("mix_seed separates streams and is reproducible") {
  CHECK(mix_seed(42, 0) == mix_seed(42, 0));
  CHECK(mix_seed(42, 0) != mix_seed(42, 1));
  CHECK(mix_seed(42, 7) != mix_seed(43, 7));

  Rng a(mix_seed(42, 3));
  Rng b(mix_seed(42, 3));
  for (int i = 0; i < 20; ++i) CHECK(a.u64() == b.u64());
}

TEST_CASE("rng samplers have the advertised shape") {
  Rng rng(123);
  for (int i = 0; i < 50; ++i) {
    cxd u = rng.unimodular();
    CHECK(std::abs(std::abs(u) - 1.0) < 1e-14);
    double x = rng.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    int k = rng.uniform_int(2, 5);
    CHECK(k >= 2);
    CHECK(k <= 5);
  }
  Matrix g = rng.ginibre(3, 2);
  CHECK(g.rows() == 3);
  CHECK(g.cols() == 2);
  CHECK(all_finite(g));
}

TEST_CASE("relative comparison anchors at 1 for small matrices") {
  Matrix a = Matrix::Zero(2, 2);
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = 1e-12;
  CHECK(approx_eq(a, b));  // absolute regime near zero
  CHECK(rel_distance(a, b) == doctest::Approx(1e-12));

  Matrix big = Matrix::Constant(2, 2, cxd(1e9, 0));
  Matrix big2 = big;
  big2(1, 1) += 1.0;  // relative error 1e-9 despite absolute error 1
  CHECK(rel_distance(big, big2) == doctest::Approx(1e-9));

  CHECK_THROWS_AS(approx_eq(Matrix::Zero(2, 2), Matrix::Zero(3, 3)), error);
}

TEST_CASE("hermitian eigensolver on a hand value") {
  Matrix a(2, 2);
  a << cxd(2, 0), cxd(0, 1), cxd(0, -1), cxd(2, 0);
  HermEig e = herm_eig(a);
  CHECK(e.lambda(0) == doctest::Approx(1.0));
  CHECK(e.lambda(1) == doctest::Approx(3.0));
  Matrix rebuilt = e.w * e.lambda.cast<cxd>().asDiagonal() * e.w.adjoint();
  CHECK(approx_eq(rebuilt, a));

  Matrix skew(2, 2);
  skew << cxd(0, 0), cxd(1, 0), cxd(-1, 0), cxd(0, 0);
  CHECK_THROWS_AS(herm_eig(skew), error);
  CHECK_THROWS_AS(herm_eig(Matrix::Zero(2, 3)), error);
}

TEST_CASE("svd reconstructs and sorts decreasing") {
  Matrix a(2, 3);
  a << cxd(0, 0), cxd(0, 3), cxd(0, 0),
       cxd(1, 0), cxd(0, 0), cxd(0, 0);
  Svd s = svd(a);
  CHECK(s.sigma(0) == doctest::Approx(3.0));
  CHECK(s.sigma(1) == doctest::Approx(1.0));
  Matrix rebuilt = s.u * s.sigma.cast<cxd>().asDiagonal() * s.v.adjoint();
  CHECK(approx_eq(rebuilt, a));
  CHECK(approx_eq(Matrix(s.u.adjoint() * s.u), Matrix::Identity(2, 2)));
  CHECK(approx_eq(Matrix(s.v.adjoint() * s.v), Matrix::Identity(2, 2)));

  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = cxd(std::nan(""), 0);
  CHECK_THROWS_AS(svd(bad), error);
}
