#include "jbt/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace jbt {

Tolerance::Tolerance(double eq, double rank) : eq_tol(eq), rank_tol(rank) {
  if (!(0.0 < rank_tol) || !(rank_tol < eq_tol) || !(eq_tol < 1.0)) {
    throw error("Tolerance: need 0 < rank_tol < eq_tol < 1, got eq_tol=" +
                std::to_string(eq) + " rank_tol=" + std::to_string(rank));
  }
}

Tolerance Tolerance::with_eq(double eq) const {
  double rank = std::min(rank_tol, eq / 10.0);
  return Tolerance(eq, rank);
}

bool all_finite(const Matrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

bool approx_eq(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw error("approx_eq: shape mismatch");
  return rel_distance(a, b) <= tol.eq_tol;
}

double rel_distance(const Matrix& a, const Matrix& b) {
  double scale = std::max({1.0, max_abs(a), max_abs(b)});
  return max_abs(a - b) / scale;
}

Svd svd(const Matrix& a) {
  if (!all_finite(a)) throw error("svd: non-finite input");
  Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return Svd{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

HermEig herm_eig(const Matrix& a, const Tolerance& tol) {
  if (!all_finite(a)) throw error("herm_eig: non-finite input");
  if (a.rows() != a.cols()) throw error("herm_eig: non-square input");
  if (rel_distance(a, a.adjoint()) > tol.eq_tol)
    throw error("herm_eig: input is not hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es((a + Matrix(a.adjoint())) / 2.0);
  if (es.info() != Eigen::Success) throw error("herm_eig: solver failed");
  return HermEig{es.eigenvalues(), es.eigenvectors()};
}

double Rng::normal() { return normal_(gen_); }
double Rng::uniform() { return unif_(gen_); }

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(gen_);
}

std::uint64_t Rng::u64() { return gen_(); }

cxd Rng::gaussian() {
  double re = normal();
  double im = normal();
  return cxd(re, im) / std::sqrt(2.0);
}

cxd Rng::unimodular() {
  double theta = 2.0 * M_PI * uniform();
  return cxd(std::cos(theta), std::sin(theta));
}

Matrix Rng::ginibre(Eigen::Index rows, Eigen::Index cols) {
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = gaussian();
  return g;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace jbt
