#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace jbt {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Library-wide error type. Thrown on contract violations (bad input,
/// internal inconsistencies detected by cross-checks).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerance policy shared by every approximate comparison in the library.
/// eq_tol drives equality residuals, rank_tol the relative singular-value
/// cutoff used by spectral resolutions. Invariant: 0 < rank_tol < eq_tol < 1.
struct Tolerance {
  double eq_tol = 1e-9;
  double rank_tol = 1e-10;

  Tolerance() = default;
  Tolerance(double eq, double rank);

  /// Copy with a different eq_tol, keeping rank_tol consistent (rank_tol is
  /// scaled down alongside when the new eq_tol would violate the ordering).
  Tolerance with_eq(double eq) const;
};

bool all_finite(const Matrix& a);
double max_abs(const Matrix& a);

/// Entrywise approximate equality, relative to max(1, |a|_max, |b|_max).
bool approx_eq(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// Max-entry distance between a and b divided by max(1, |a|_max, |b|_max).
double rel_distance(const Matrix& a, const Matrix& b);

/// Thin singular value decomposition: a = u * diag(sigma) * v^*.
/// sigma is nonnegative and sorted in decreasing order, u and v have
/// orthonormal columns. Rejects non-finite input.
struct Svd {
  Matrix u;
  RealVector sigma;
  Matrix v;
};
Svd svd(const Matrix& a);

/// Eigendecomposition of a hermitian matrix: a = w * diag(lambda) * w^*,
/// lambda real ascending, w unitary. Rejects input that is not hermitian
/// within tol.
struct HermEig {
  RealVector lambda;
  Matrix w;
};
HermEig herm_eig(const Matrix& a, const Tolerance& tol = {});

/// Deterministic seedable generator for all sampling in the library.
/// One instance per trial (seeded via mix_seed) keeps parallel and serial
/// schedules reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal();
  double uniform();              // [0, 1)
  int uniform_int(int lo, int hi);  // inclusive bounds
  std::uint64_t u64();

  /// Standard complex gaussian: (N(0,1) + i N(0,1)) / sqrt(2).
  cxd gaussian();
  /// Uniform point on the unit circle.
  cxd unimodular();
  /// Matrix with independent standard complex gaussian entries.
  Matrix ginibre(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

/// Derives a stream seed from (seed, stream) so every trial owns an
/// independent deterministic generator. splitmix64-style mixing.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace jbt
