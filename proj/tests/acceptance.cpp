// Acceptance harness: one pass/fail line per criterion, exit code counts the
// failures. Thresholds are pinned here, independent of library defaults.

#include "jbt/json_io.hpp"
#include "jbt/lemma_suite.hpp"
#include "jbt/preserver.hpp"

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace jbt;

namespace {

int g_failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("[%s] %-4s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const std::vector<FactorDescriptor> kSixFactors = {
    FactorDescriptor::rect(2, 2), FactorDescriptor::rect(2, 3),
    FactorDescriptor::sym(2),     FactorDescriptor::antisym(4),
    FactorDescriptor::spin(3),    FactorDescriptor::spin(5)};

Element unit2(int i, int j) {
  Element x = zero_element(FactorDescriptor::rect(2, 2));
  x.payload(i, j) = 1.0;
  return x;
}

// A1: axiom residuals (Jordan identity, norm-cube law) stay below 1e-8 on
// 1000 samples per factor across six factors, within 30 s.
void a1_axioms() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteConfig cfg;
  cfg.factors = kSixFactors;
  cfg.trials = 1000;
  cfg.seed = 42;
  cfg.tol = Tolerance(1e-9, 1e-10);  // suite thresholds at 10x = 1e-8
  cfg.filter = {"jordan-identity", "gelfand-naimark"};
  auto results = run_checks(cfg);
  double worst = 0.0;
  long fails = 0;
  for (const auto& r : results) {
    worst = std::max(worst, r.max_residual);
    fails += r.failures;
  }
  double dt = seconds_since(t0);
  report("A1", fails == 0 && worst <= 1e-8 && dt <= 30.0,
         fmt("axiom suite: max residual %.2e (limit 1e-8), %ld failures, "
             "%.1fs (limit 30s)",
             worst, fails, dt));
}

// A2: the three truncation characterizations agree on 10^4 pairs per factor,
// half engineered positive, with zero disagreements at eq_tol 1e-9.
void a2_characterizations() {
  SuiteConfig cfg;
  cfg.factors = kSixFactors;
  cfg.trials = 10000;
  cfg.seed = 42;
  cfg.tol = Tolerance(1e-9, 1e-10);
  cfg.filter = {"lemma-2.2"};
  auto results = run_checks(cfg);
  long fails = 0, trials = 0;
  for (const auto& r : results) {
    fails += r.failures;
    trials += r.trials;
  }
  report("A2", fails == 0 && trials >= 10000 * 6,
         fmt("truncation routes: %ld recorded checks over 60000 pairs, "
             "%ld disagreements",
             trials, fails));
}

// A3: truncation coincides with the tripotent partial order over all ordered
// pool pairs in rect(2,2) and spin(4), at least 200 pairs per factor.
void a3_order() {
  Tolerance tol;
  long pairs = 0, exceptions = 0;
  for (auto f : {FactorDescriptor::rect(2, 2), FactorDescriptor::spin(4)}) {
    auto pool = tripotent_pool(f, 42, 16, tol);
    for (const Element& e : pool)
      for (const Element& v : pool) {
        ++pairs;
        if (is_truncation(e, v, tol) != leq(e, v, tol)) ++exceptions;
      }
  }
  report("A3", pairs >= 400 && exceptions == 0,
         fmt("order vs truncation: %ld ordered pairs, %ld exceptions", pairs,
             exceptions));
}

// A4: the inner quadratic annihilator of a tripotent is exactly the Peirce
// 0+1 part (checked on basis elements for 50 pooled tripotents), and the
// annihilator of a general element matches the range-tripotent projection
// formula on 1000 random a in rect(3,3).
void a4_annihilators() {
  Tolerance tol;
  long checked = 0, bad = 0;
  std::vector<Element> pool;
  for (auto f : {FactorDescriptor::rect(2, 2), FactorDescriptor::sym(2),
                 FactorDescriptor::antisym(4), FactorDescriptor::spin(4)}) {
    auto p = tripotent_pool(f, 42, 14, tol);
    pool.insert(pool.end(), p.begin(), p.end());
  }
  if (pool.size() > 50) pool.resize(50);
  for (const Element& e : pool) {
    ++checked;
    bool ok = true;
    for (const Element& x : factor_basis(e.factor)) {
      bool member = inner_q_annihilator_membership(x, e, tol);
      bool outside_p2 = is_zero(peirce2_apply(e, x), tol);
      if (member != outside_p2) ok = false;
    }
    // and the Peirce bases land on the advertised sides
    PeirceDecomposition d = peirce(e, tol);
    for (const Element& x : d.basis0)
      if (!inner_q_annihilator_membership(x, e, tol)) ok = false;
    for (const Element& x : d.basis1)
      if (!inner_q_annihilator_membership(x, e, tol)) ok = false;
    for (const Element& x : d.basis2)
      if (inner_q_annihilator_membership(x, e, tol)) ok = false;
    if (!ok) ++bad;
  }

  long formula_bad = 0;
  const long n = 1000;
  auto m3 = FactorDescriptor::rect(3, 3);
  for (long t = 0; t < n; ++t) {
    Rng rng(mix_seed(42, 0xa4 + static_cast<std::uint64_t>(t)));
    if (!annihilator_element_formula_check(sample_element(m3, rng), tol))
      ++formula_bad;
  }
  report("A4", checked == 50 && bad == 0 && formula_bad == 0,
         fmt("annihilators: %ld tripotents (%ld bad), %ld/%ld projection "
             "formula failures",
             checked, bad, formula_bad, n));
}

// A5: the spin-to-matrix bridge intertwines triple products and matches
// norms within 1e-9 on 100 random triples for n = 3 and n = 4.
void a5_spin_bridge() {
  double worst = 0.0;
  for (int n : {3, 4}) {
    auto f = FactorDescriptor::spin(n);
    for (int t = 0; t < 100; ++t) {
      Rng rng(mix_seed(42, 0xa50 + static_cast<std::uint64_t>(100 * n + t)));
      Element x = sample_element(f, rng);
      Element y = sample_element(f, rng);
      Element z = sample_element(f, rng);
      Element lhs = spin_matrix_embedding(triple_product(x, y, z));
      Element rhs = triple_product(spin_matrix_embedding(x),
                                   spin_matrix_embedding(y),
                                   spin_matrix_embedding(z));
      worst = std::max(worst, rel_distance(lhs, rhs));
      double nx = triple_norm(x);
      double gap = std::abs(nx - triple_norm(spin_matrix_embedding(x))) /
                   std::max(1.0, nx);
      worst = std::max(worst, gap);
    }
  }
  report("A5", worst <= 1e-9,
         fmt("spin bridge: worst intertwining/norm residual %.2e (limit 1e-9)",
             worst));
}

// A6: pinned scalar values: two transition parameters equal to 1/2 and the
// matrix-unit quadrangle product {e11,e12,e22} = e21/2, all to 1e-12.
void a6_pinned_values() {
  Tolerance tol;
  Element e11 = unit2(0, 0), e12 = unit2(0, 1);
  Element e21 = unit2(1, 0), e22 = unit2(1, 1);
  Element p1 = zero_element(FactorDescriptor::rect(2, 2));
  p1.payload << 0.5, 0.5, 0.5, 0.5;
  Element p2 = zero_element(FactorDescriptor::rect(2, 2));
  p2.payload << cxd(0.5, 0), cxd(0, 0.5), cxd(0, -0.5), cxd(0.5, 0);

  double d1 = std::abs(ttp(p1, e11, tol) - cxd(0.5, 0));
  double d2 = std::abs(ttp(p2, p1, tol) - cxd(0.5, 0));
  double d3 = max_abs(sub(triple_product(e11, e12, e22), scale(0.5, e21)).payload);
  report("A6", d1 <= 1e-12 && d2 <= 1e-12 && d3 <= 1e-12,
         fmt("pinned values: |ttp1-0.5|=%.2e |ttp2-0.5|=%.2e quadrangle "
             "defect=%.2e (limit 1e-12)",
             d1, d2, d3));
}

// A7: every catalogued sound map passes the both-directions harness over
// 10^4 trials with >= 100 nontrivial positives per direction, and the
// classifier returns the constructed linearity type. Under 2 minutes.
void a7_sound_catalogue() {
  auto t0 = std::chrono::steady_clock::now();
  auto sound = catalogue_sound_maps(42);
  bool has_split = false;
  std::string bad;
  for (const auto& c : sound) {
    if (c.map.domain().size() == 3) has_split = true;
    TrialReport rep = preserves_truncation_of_triple_products(c.map, 10000, 42);
    bool ok = rep.passed() && rep.forward_positives >= 100 &&
              rep.backward_positives >= 100;
    if (ok) {
      ClassifyReport cls = classify(c.map, 2000, 42);
      ok = cls.verdict == c.expected;
    }
    if (!ok) bad += (bad.empty() ? "" : ", ") + c.name;
  }
  double dt = seconds_since(t0);
  report("A7",
         sound.size() >= 6 && has_split && bad.empty() && dt <= 120.0,
         fmt("sound catalogue: %zu maps%s all pass+classify in %.1fs (limit "
             "120s)%s%s",
             sound.size(), has_split ? " (incl. 3-slot split)" : "", dt,
             bad.empty() ? "" : "; failing: ", bad.c_str()));
}

// A8: every catalogued broken map is rejected within 1000 trials and ships a
// witness that re-checks as a violation in isolation.
void a8_broken_catalogue() {
  auto broken = catalogue_broken_maps(42);
  std::string bad;
  for (const auto& c : broken) {
    TrialReport rep = preserves_truncation_of_triple_products(c.map, 1000, 42);
    bool ok = rep.verdict == "fail" && !rep.witnesses.empty();
    if (ok) {
      const WitnessTriple& w = rep.witnesses.front();
      const PreserverMap used =
          w.direction == "forward" ? c.map : c.map.inverted();
      ok = truncation_of_triple_product(w.a, w.b, w.c) &&
           !truncation_of_triple_product(used.apply(w.a), used.apply(w.b),
                                         used.apply(w.c)) &&
           w.residual > 1e-9;
    }
    if (!ok) bad += (bad.empty() ? "" : ", ") + c.name;
  }
  report("A8", broken.size() >= 4 && bad.empty(),
         fmt("broken catalogue: %zu maps rejected with isolated witnesses%s%s",
             broken.size(), bad.empty() ? "" : "; failing: ", bad.c_str()));
}

// A9: the coordinate inversion gauge satisfies every product law but not
// additivity, and on a one-dimensional factor it passes preservation while
// classifying nonlinear.
void a9_gauge() {
  GaugeProperties gp =
      gauge_properties(ScalarFunction::inverse_or_zero(), 400, 42);
  bool laws = gp.all_product_laws() && !gp.additive;

  PreserverMap g = PreserverMap::gauge(FactorDescriptor::rect(1, 1),
                                       ScalarFunction::inverse_or_zero());
  TrialReport rep = preserves_truncation_of_triple_products(g, 4000, 42);
  ClassifyReport cls = classify(g, 1000, 42);
  report("A9",
         laws && rep.passed() &&
             cls.verdict == LinearityClass::Nonlinear,
         fmt("inversion gauge: product laws %s, additive %s, preservation %s "
             "(fwd+=%ld bwd+=%ld), class %s",
             gp.all_product_laws() ? "hold" : "BROKEN",
             gp.additive ? "true" : "false", rep.verdict.c_str(),
             rep.forward_positives, rep.backward_positives,
             linearity_str(cls.verdict).c_str()));
}

// A10: spectral calculus identities on 1000 random elements per factor kind,
// plus range-tripotent agreement between sym(2) and its rect(2,2) ambient on
// 200 symmetric samples.
void a10_calculus() {
  double worst = 0.0;
  const long n = 1000;
  for (auto f : {FactorDescriptor::rect(2, 3), FactorDescriptor::antisym(4),
                 FactorDescriptor::sym(3), FactorDescriptor::spin(5)}) {
    for (long t = 0; t < n; ++t) {
      Rng rng(mix_seed(42, 0xa10 + static_cast<std::uint64_t>(t) * 7 +
                               static_cast<std::uint64_t>(f.kind)));
      Element a = sample_element(f, rng);
      worst = std::max(worst, rel_distance(cube(cube_root(a)), a));
      Element d = generalized_inverse(a);
      worst = std::max(worst, rel_distance(q_apply(a, d), a));
      worst = std::max(worst, rel_distance(q_apply(d, a), d));
      RealMatrix qa = Q_operator(a).mat, qd = Q_operator(d).mat;
      worst = std::max(worst, (qa * qd - qd * qa).norm() /
                                  std::max(1.0, (qa * qd).norm()));
    }
  }

  double agree = 0.0;
  auto s2 = FactorDescriptor::sym(2);
  auto m2 = FactorDescriptor::rect(2, 2);
  for (int t = 0; t < 200; ++t) {
    Rng rng(mix_seed(42, 0xa20 + static_cast<std::uint64_t>(t)));
    Element s = sample_element(s2, rng);
    Element ambient{m2, s.payload};  // same matrix, larger triple
    Element rs = range_tripotent(s);
    Element ra = range_tripotent(ambient);
    agree = std::max(agree, rel_distance(rs.payload, ra.payload));
  }
  bool ok = worst <= 1e-9 && agree <= 1e-9;
  report("A10", ok,
         fmt("spectral calculus: worst identity residual %.2e, subtriple "
             "range-tripotent gap %.2e (limits 1e-9)",
             worst, agree));
}

// A11: the property-suite CLI report is byte-identical across two runs with
// the same seed.
std::string capture(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "<nonzero exit>";
  return out;
}

void a11_determinism() {
  std::string cmd = std::string(JBT_CLI_PATH) +
                    " --json --seed 42 --trials 300 verify-lemmas 2>/dev/null";
  std::string first = capture(cmd);
  std::string second = capture(cmd);
  bool ok = !first.empty() && first == second &&
            first.find("<nonzero exit>") == std::string::npos;
  report("A11", ok,
         fmt("cli determinism: two runs, %zu bytes each, %s", first.size(),
             ok ? "identical" : "DIFFER"));
}

}  // namespace

int main() {
  a1_axioms();
  a2_characterizations();
  a3_order();
  a4_annihilators();
  a5_spin_bridge();
  a6_pinned_values();
  a7_sound_catalogue();
  a8_broken_catalogue();
  a9_gauge();
  a10_calculus();
  a11_determinism();
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures;
}
