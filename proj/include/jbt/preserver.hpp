#pragma once

#include "jbt/truncation.hpp"

#include <memory>

namespace jbt {

// Candidate maps Delta between finite l-infinity sums of Cartan factors,
// built from invertible recipes, plus the sampling harness that tries to
// falsify "a is a truncation of {b,c,b}  iff  the images are".

/// Scalar gauge acting on a complex coordinate line.
struct ScalarFunction {
  enum class Kind { Identity, Conjugation, InverseOrZero, Table };

  Kind kind = Kind::Identity;
  // Table entries (input, output); lookup is exact-match on the input.
  std::vector<std::pair<cxd, cxd>> table;

  cxd operator()(const cxd& z) const;
  ScalarFunction inverse() const;
  std::string name() const;

  static ScalarFunction identity();
  static ScalarFunction conjugation();
  static ScalarFunction inverse_or_zero();
};

/// Which of the gauge-function laws hold on sampled scalars.
struct GaugeProperties {
  bool zero_fixed = false;          // f(0) = 0
  bool circle_preserved = false;    // |f(u)| = 1 for |u| = 1, f bijective there
  bool triple_multiplicative = false;  // f(l^2 conj(m)) = f(l)^2 conj(f(m))
  bool square_compatible = false;   // f(l^2) = f(l)^2
  bool conjugation_compatible = false;  // f(conj l) = conj(f(l))
  bool multiplicative = false;      // f(l m) = f(l) f(m)
  bool additive = false;            // f(l + m) = f(l) + f(m)

  bool all_product_laws() const {
    return zero_fixed && circle_preserved && triple_multiplicative &&
           square_compatible && conjugation_compatible && multiplicative;
  }
};
GaugeProperties gauge_properties(const ScalarFunction& f, int samples,
                                 std::uint64_t seed, const Tolerance& tol = {});

enum class LinearFlavour { Complex, Conjugate, General };

/// Invertible recipe tree. Leaves are real-linear operators on one factor,
/// scalar gauges (coefficient action on 1-dimensional factors, spectral
/// coefficient action otherwise) and norm-directed perturbations; interior
/// nodes permute factor slots or compose. Inversion is by recipe, so every
/// map carries an explicit inverse witness.
class PreserverMap {
 public:
  PreserverMap() = default;

  bool valid() const { return static_cast<bool>(node_); }
  const SumDescriptor& domain() const;
  const SumDescriptor& codomain() const;
  const std::string& label() const;

  SumElement apply(const SumElement& x) const;
  Element apply_one(const Element& x) const;  // single-slot convenience
  PreserverMap inverted() const;

  // Recipe builders.
  static PreserverMap linear(const FactorDescriptor& dom,
                             const FactorDescriptor& cod,
                             const RealLinearMap& op, LinearFlavour flavour,
                             const std::string& label);
  static PreserverMap gauge(const FactorDescriptor& f,
                            const ScalarFunction& fn);
  /// base followed by x -> base(x) + epsilon * ||x|| * direction.
  static PreserverMap norm_perturbation(const PreserverMap& base,
                                        const Element& direction,
                                        double epsilon);
  /// Slot i of the domain feeds slot sigma[i] of the codomain.
  static PreserverMap direct_sum(const std::vector<std::size_t>& sigma,
                                 const std::vector<PreserverMap>& parts);
  static PreserverMap compose(const std::vector<PreserverMap>& chain);

  // Named single-factor recipes.
  static PreserverMap identity_on(const FactorDescriptor& f);
  static PreserverMap unitary_multiplier(const FactorDescriptor& f,
                                         std::uint64_t seed);
  static PreserverMap transpose_on(const FactorDescriptor& f);
  static PreserverMap conjugation_on(const FactorDescriptor& f);
  static PreserverMap scale_on(const FactorDescriptor& f, const cxd& s);
  /// Spin coordinate rotation by a real orthogonal matrix times a phase.
  static PreserverMap spin_orthogonal(int n, std::uint64_t seed);
  /// Rect(2,2) basis swap e12 -> e21, e21 -> -e12 (diagonal cells fixed).
  static PreserverMap peirce_twist();
  /// x -> Re x + 2i Im x.
  static PreserverMap real_stretch(const FactorDescriptor& f);
  /// Spectral-line inversion x -> sum 1/sigma_k u_k (0 -> 0).
  static PreserverMap spectral_inversion(const FactorDescriptor& f);
  /// Rect(n,1): conjugates the first coordinate, fixes the others.
  static PreserverMap rank_one_mixed_gauge(int n);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit PreserverMap(std::shared_ptr<const Node> node);
};

/// One falsification witness: a domain-side triple whose truncation status
/// is not matched by the images. residual is the defect of the mapped
/// relation (the source relation holds within eq_tol).
struct WitnessTriple {
  SumElement a, b, c;
  std::string direction;  // "forward" | "backward"
  double residual = 0.0;
};

struct TrialReport {
  long trials = 0;
  long failures = 0;
  long forward_positives = 0;   // nontrivial truncation-positive samples
  long backward_positives = 0;
  std::vector<WitnessTriple> witnesses;
  std::string verdict;  // "pass" | "fail" | "inconclusive"

  bool passed() const { return verdict == "pass"; }
};

/// Both-directions sampling test. Mixes engineered truncation-positive
/// triples (partial spectral sums of {b,c,b}; annihilator offsets rebuilt
/// through cube roots), tripotent triples, plain random triples and boundary
/// cases. Verdict "pass" needs zero failures and at least 100 nontrivial
/// positives in each direction.
TrialReport preserves_truncation_of_triple_products(const PreserverMap& map,
                                                    long trials,
                                                    std::uint64_t seed,
                                                    const Tolerance& tol = {});

/// Residual of the relation "a is a truncation of {b,c,b}" (relative).
double truncation_residual(const SumElement& a, const SumElement& b,
                           const SumElement& c);

/// Structural consequences that any map passing the preservation test must
/// satisfy; each is checked directly on sampled and pooled inputs.
struct ConsequenceResult {
  std::string id;
  long trials = 0;
  long failures = 0;
  double max_residual = 0.0;
  std::string note;  // first failure description

  bool pass() const { return failures == 0; }
};
std::vector<ConsequenceResult> verify_consequences(const PreserverMap& map,
                                                   long trials,
                                                   std::uint64_t seed,
                                                   const Tolerance& tol = {});

enum class LinearityClass {
  ComplexLinear,
  ConjugateLinear,
  RealLinearSplit,
  Nonlinear
};
std::string linearity_str(LinearityClass c);

struct ClassifyReport {
  LinearityClass verdict = LinearityClass::Nonlinear;
  // Per domain slot: "complex-linear", "conjugate-linear" or "real-mixed".
  std::vector<std::string> factor_tags;
  bool additive_on_orthogonal = false;
  bool additive = false;
  bool real_homogeneous = false;
  bool triple_preserving = false;
  bool isometric = false;
  std::string detail;
};
/// Additivity is probed on orthogonal pairs first, then general pairs;
/// homogeneity on minimal-tripotent lines first, then general samples.
/// For linear verdicts, triple-product preservation and isometry are both
/// measured (each is a redundant witness of the other).
ClassifyReport classify(const PreserverMap& map, long trials,
                        std::uint64_t seed, const Tolerance& tol = {});

/// Recovered slot bijection for maps between sums: tracks one minimal
/// tripotent per domain slot, verifies images stay in the matched slot on
/// random samples, and compares greedy orthogonal-minimal rank counts.
struct FactorMatch {
  bool valid = false;
  std::vector<std::size_t> sigma;
  std::vector<int> domain_rank;
  std::vector<int> codomain_rank;  // indexed by codomain slot
  bool ranks_match = false;
  std::string detail;
};
FactorMatch factor_matching(const PreserverMap& map, std::uint64_t seed,
                            const Tolerance& tol = {});

/// Rank of a factor: the size of a maximal family of mutually orthogonal
/// minimal tripotents, found greedily over a deterministic pool.
int greedy_rank(const FactorDescriptor& f, std::uint64_t seed,
                const Tolerance& tol = {});

/// Hilbert-factor check: on Rect(1,n)/Rect(n,1) the coordinate inner
/// products of images must all match <a|e> or all match its conjugate;
/// mixing both is the obstruction used to reject basis-dependent gauges.
/// Continuity cannot be sampled and is recorded as an assumption.
struct RankOneReport {
  bool applicable = false;
  bool preserved = false;     // <Da|De> = <a|e> throughout
  bool conjugated = false;    // <Da|De> = conj(<a|e>) throughout
  bool consistent = false;    // no sample contradicts a single convention
  bool continuity_assumed = true;
  std::string detail;
};
RankOneReport rank_one_preserver_check(const PreserverMap& map, long trials,
                                       std::uint64_t seed,
                                       const Tolerance& tol = {});

/// Catalogues driving the acceptance harness. Sound maps are triple
/// isomorphisms by construction; broken maps each violate the preservation
/// relation while remaining invertible.
struct CataloguedMap {
  std::string name;
  PreserverMap map;
  LinearityClass expected;
};
std::vector<CataloguedMap> catalogue_sound_maps(std::uint64_t seed);
std::vector<CataloguedMap> catalogue_broken_maps(std::uint64_t seed);

}  // namespace jbt
