#include "jbt/preserver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace jbt {

// ---------------------------------------------------------------------------
// Scalar gauges

cxd ScalarFunction::operator()(const cxd& z) const {
  switch (kind) {
    case Kind::Identity:
      return z;
    case Kind::Conjugation:
      return std::conj(z);
    case Kind::InverseOrZero:
      return z == cxd(0.0, 0.0) ? z : cxd(1.0, 0.0) / z;
    case Kind::Table:
      for (const auto& [in, out] : table)
        if (in == z) return out;
      throw error("table gauge: input not in table");
  }
  throw error("scalar function: bad kind");
}

ScalarFunction ScalarFunction::inverse() const {
  if (kind != Kind::Table) return *this;  // the built-ins are involutions
  ScalarFunction f;
  f.kind = Kind::Table;
  for (const auto& [in, out] : table) f.table.emplace_back(out, in);
  return f;
}

std::string ScalarFunction::name() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Conjugation:
      return "conjugation";
    case Kind::InverseOrZero:
      return "inverse-or-zero";
    case Kind::Table:
      return "table";
  }
  return "?";
}

ScalarFunction ScalarFunction::identity() { return {}; }
ScalarFunction ScalarFunction::conjugation() {
  ScalarFunction f;
  f.kind = Kind::Conjugation;
  return f;
}
ScalarFunction ScalarFunction::inverse_or_zero() {
  ScalarFunction f;
  f.kind = Kind::InverseOrZero;
  return f;
}

GaugeProperties gauge_properties(const ScalarFunction& f, int samples,
                                 std::uint64_t seed, const Tolerance& tol) {
  GaugeProperties p;
  ScalarFunction finv = f.inverse();
  auto near = [&](const cxd& x, const cxd& y) {
    return std::abs(x - y) <=
           tol.eq_tol * std::max({1.0, std::abs(x), std::abs(y)});
  };
  p.zero_fixed = std::abs(f(cxd(0.0, 0.0))) <= tol.eq_tol;
  p.circle_preserved = true;
  p.triple_multiplicative = true;
  p.square_compatible = true;
  p.conjugation_compatible = true;
  p.multiplicative = true;
  p.additive = true;
  Rng rng(mix_seed(seed, 0x6a06));
  for (int k = 0; k < samples; ++k) {
    cxd l = rng.gaussian(), m = rng.gaussian(), u = rng.unimodular();
    if (std::abs(std::abs(f(u)) - 1.0) > tol.eq_tol) p.circle_preserved = false;
    if (!near(f(finv(u)), u)) p.circle_preserved = false;
    if (!near(f(l * l * std::conj(m)), f(l) * f(l) * std::conj(f(m))))
      p.triple_multiplicative = false;
    if (!near(f(l * l), f(l) * f(l))) p.square_compatible = false;
    if (!near(f(std::conj(l)), std::conj(f(l)))) p.conjugation_compatible = false;
    if (!near(f(l * m), f(l) * f(m))) p.multiplicative = false;
    if (!near(f(l + m), f(l) + f(m))) p.additive = false;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Recipe tree

struct PreserverMap::Node {
  enum class Kind { Linear, Gauge, Perturb, Sum, Compose };

  Kind kind = Kind::Linear;
  std::string label;
  SumDescriptor dom, cod;

  // Linear
  RealLinearMap op;
  LinearFlavour flavour = LinearFlavour::General;

  // Gauge
  ScalarFunction fn;

  // Perturb: forward is x -> base(x) + epsilon ||x|| direction; solve_mode
  // marks the node as the inverse of that map.
  PreserverMap base, base_inv;
  Element direction;
  double epsilon = 0.0;
  bool solve_mode = false;

  // Sum
  std::vector<std::size_t> sigma;
  std::vector<PreserverMap> parts;

  // Compose (applied front to back)
  std::vector<PreserverMap> chain;
};

PreserverMap::PreserverMap(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

const SumDescriptor& PreserverMap::domain() const {
  if (!node_) throw error("empty preserver map");
  return node_->dom;
}
const SumDescriptor& PreserverMap::codomain() const {
  if (!node_) throw error("empty preserver map");
  return node_->cod;
}
const std::string& PreserverMap::label() const {
  if (!node_) throw error("empty preserver map");
  return node_->label;
}

namespace {

Element gauge_apply(const ScalarFunction& fn, const Element& x,
                    const Tolerance& tol) {
  if (x.factor.complex_dim() == 1) {
    Vector z = complex_coords(x);
    z(0) = fn(z(0));
    return from_complex_coords(x.factor, z);
  }
  // Spectral-line action: the gauge hits the (real, positive) coefficients
  // of the resolution.
  Element y = zero_element(x.factor);
  for (const auto& term : resolve(x, tol).terms)
    y = add(y, scale(fn(cxd(term.sigma, 0.0)), term.u));
  return y;
}

}  // namespace

Element PreserverMap::apply_one(const Element& x) const {
  if (domain().size() != 1)
    throw error("apply_one called on a map between sums");
  return apply(wrap(x)).parts[0];
}

SumElement PreserverMap::apply(const SumElement& x) const {
  if (!node_) throw error("empty preserver map");
  const Node& n = *node_;
  if (!same_descriptor(x.descriptor(), n.dom))
    throw error("preserver apply: element of " + descriptor_str(x.descriptor()) +
                " fed to a map on " + descriptor_str(n.dom));
  switch (n.kind) {
    case Node::Kind::Linear:
      return wrap(n.op.apply(x.parts[0]));
    case Node::Kind::Gauge:
      return wrap(gauge_apply(n.fn, x.parts[0], {}));
    case Node::Kind::Perturb: {
      const Element& v = x.parts[0];
      if (!n.solve_mode) {
        Element y = n.base.apply_one(v);
        return wrap(
            add(y, scale(cxd(n.epsilon * triple_norm(v), 0.0), n.direction)));
      }
      double r = triple_norm(n.base_inv.apply_one(v));
      for (int it = 0; it < 400; ++it) {
        Element z = n.base_inv.apply_one(
            sub(v, scale(cxd(n.epsilon * r, 0.0), n.direction)));
        double rn = triple_norm(z);
        if (std::abs(rn - r) <= 1e-14 * std::max(1.0, rn)) return wrap(z);
        r = rn;
      }
      throw error("norm perturbation inverse did not converge");
    }
    case Node::Kind::Sum: {
      SumElement y = zero_sum(n.cod);
      for (std::size_t i = 0; i < n.parts.size(); ++i)
        y.parts[n.sigma[i]] = n.parts[i].apply_one(x.parts[i]);
      return y;
    }
    case Node::Kind::Compose: {
      SumElement y = x;
      for (const auto& m : n.chain) y = m.apply(y);
      return y;
    }
  }
  throw error("preserver apply: bad node");
}

PreserverMap PreserverMap::inverted() const {
  if (!node_) throw error("empty preserver map");
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Linear:
      return linear(n.cod[0], n.dom[0], n.op.inverse(), n.flavour,
                    "inv " + n.label);
    case Node::Kind::Gauge:
      return gauge(n.dom[0], n.fn.inverse());
    case Node::Kind::Perturb: {
      auto m = std::make_shared<Node>(n);
      m->solve_mode = !n.solve_mode;
      std::swap(m->dom, m->cod);
      m->label = "inv " + n.label;
      return PreserverMap(m);
    }
    case Node::Kind::Sum: {
      std::vector<std::size_t> inv_sigma(n.sigma.size());
      std::vector<PreserverMap> inv_parts(n.parts.size());
      for (std::size_t i = 0; i < n.parts.size(); ++i) {
        inv_sigma[n.sigma[i]] = i;
        inv_parts[n.sigma[i]] = n.parts[i].inverted();
      }
      return direct_sum(inv_sigma, inv_parts);
    }
    case Node::Kind::Compose: {
      std::vector<PreserverMap> rev;
      for (auto it = n.chain.rbegin(); it != n.chain.rend(); ++it)
        rev.push_back(it->inverted());
      return compose(rev);
    }
  }
  throw error("preserver invert: bad node");
}

PreserverMap PreserverMap::linear(const FactorDescriptor& dom,
                                  const FactorDescriptor& cod,
                                  const RealLinearMap& op,
                                  LinearFlavour flavour,
                                  const std::string& label) {
  if (op.domain != dom || op.codomain != cod)
    throw error("linear recipe: operator does not match the factors");
  op.inverse();  // invertibility is part of the recipe contract
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Linear;
  n->label = label;
  n->dom = {dom};
  n->cod = {cod};
  n->op = op;
  n->flavour = flavour;
  return PreserverMap(n);
}

PreserverMap PreserverMap::gauge(const FactorDescriptor& f,
                                 const ScalarFunction& fn) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Gauge;
  n->label = "gauge " + fn.name() + " on " + f.str();
  n->dom = {f};
  n->cod = {f};
  n->fn = fn;
  return PreserverMap(n);
}

PreserverMap PreserverMap::norm_perturbation(const PreserverMap& base,
                                             const Element& direction,
                                             double epsilon) {
  if (base.domain().size() != 1 || base.codomain().size() != 1)
    throw error("norm perturbation: base must be a single-factor map");
  if (base.codomain()[0] != direction.factor)
    throw error("norm perturbation: direction outside the base codomain");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Perturb;
  n->label = "perturb(" + base.label() + ")";
  n->dom = base.domain();
  n->cod = base.codomain();
  n->base = base;
  n->base_inv = base.inverted();
  n->direction = direction;
  n->epsilon = epsilon;
  return PreserverMap(n);
}

PreserverMap PreserverMap::direct_sum(const std::vector<std::size_t>& sigma,
                                      const std::vector<PreserverMap>& parts) {
  if (sigma.size() != parts.size() || parts.empty())
    throw error("direct sum: sigma and parts must align");
  std::vector<char> hit(parts.size(), 0);
  for (std::size_t s : sigma) {
    if (s >= parts.size() || hit[s]) throw error("direct sum: sigma is not a permutation");
    hit[s] = 1;
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sum;
  n->label = "sum";
  n->dom.resize(parts.size());
  n->cod.resize(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].domain().size() != 1 || parts[i].codomain().size() != 1)
      throw error("direct sum: parts must be single-factor maps");
    n->dom[i] = parts[i].domain()[0];
    n->cod[sigma[i]] = parts[i].codomain()[0];
    n->label += (i ? "," : "(") + parts[i].label();
  }
  n->label += ")";
  n->sigma = sigma;
  n->parts = parts;
  return PreserverMap(n);
}

PreserverMap PreserverMap::compose(const std::vector<PreserverMap>& chain) {
  if (chain.empty()) throw error("compose: empty chain");
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!same_descriptor(chain[k].domain(), chain[k - 1].codomain()))
      throw error("compose: adjacent maps do not match");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Compose;
  n->label = "compose";
  for (std::size_t k = 0; k < chain.size(); ++k)
    n->label += (k ? "," : "(") + chain[k].label();
  n->label += ")";
  n->dom = chain.front().domain();
  n->cod = chain.back().codomain();
  n->chain = chain;
  return PreserverMap(n);
}

// ---------------------------------------------------------------------------
// Named recipes

namespace {

Matrix haar_unitary(int n, Rng& rng) {
  Matrix g = rng.ginibre(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = q.adjoint() * g;
  for (int j = 0; j < n; ++j) {
    double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

RealMatrix haar_orthogonal(int n, Rng& rng) {
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
  RealMatrix r = q.transpose() * g;
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

}  // namespace

PreserverMap PreserverMap::identity_on(const FactorDescriptor& f) {
  return linear(f, f, identity_map(f), LinearFlavour::Complex,
                "identity on " + f.str());
}

PreserverMap PreserverMap::unitary_multiplier(const FactorDescriptor& f,
                                              std::uint64_t seed) {
  if (f.kind == FactorKind::Spin) return spin_orthogonal(f.n, seed);
  Rng rng(mix_seed(seed, 0x0a11));
  if (f.kind == FactorKind::Rect) {
    Matrix u = haar_unitary(f.m, rng), v = haar_unitary(f.n, rng);
    auto op = materialize(f, f, [&](const Element& x) {
      return Element{f, u * x.payload * v};
    });
    return linear(f, f, op, LinearFlavour::Complex,
                  "unitary multiplier on " + f.str());
  }
  Matrix u = haar_unitary(f.n, rng);  // x -> u x u^T keeps (anti)symmetry
  auto op = materialize(f, f, [&](const Element& x) {
    return Element{f, u * x.payload * u.transpose()};
  });
  return linear(f, f, op, LinearFlavour::Complex,
                "unitary congruence on " + f.str());
}

PreserverMap PreserverMap::transpose_on(const FactorDescriptor& f) {
  if (f.kind != FactorKind::Rect || f.m != f.n)
    throw error("transpose recipe needs a square rectangular factor");
  auto op = materialize(f, f, [&](const Element& x) {
    return Element{f, x.payload.transpose().eval()};
  });
  return linear(f, f, op, LinearFlavour::Complex, "transpose on " + f.str());
}

PreserverMap PreserverMap::conjugation_on(const FactorDescriptor& f) {
  auto op = materialize(f, f, [](const Element& x) { return conj_element(x); });
  return linear(f, f, op, LinearFlavour::Conjugate,
                "conjugation on " + f.str());
}

PreserverMap PreserverMap::scale_on(const FactorDescriptor& f, const cxd& s) {
  if (std::abs(s) == 0.0) throw error("scale recipe must be nonzero");
  auto op = materialize(f, f, [&](const Element& x) { return scale(s, x); });
  return linear(f, f, op, LinearFlavour::Complex, "scale on " + f.str());
}

PreserverMap PreserverMap::spin_orthogonal(int n, std::uint64_t seed) {
  FactorDescriptor f = FactorDescriptor::spin(n);
  Rng rng(mix_seed(seed, 0x0591));
  RealMatrix o = haar_orthogonal(n, rng);
  cxd phase = rng.unimodular();
  auto op = materialize(f, f, [&](const Element& x) {
    return Element{f, (phase * (o.cast<cxd>() * x.payload)).eval()};
  });
  return linear(f, f, op, LinearFlavour::Complex,
                "orthogonal rotation on " + f.str());
}

PreserverMap PreserverMap::peirce_twist() {
  FactorDescriptor f = FactorDescriptor::rect(2, 2);
  auto op = materialize(f, f, [&](const Element& x) {
    Element y = zero_element(f);
    y.payload(0, 0) = x.payload(0, 0);
    y.payload(1, 1) = x.payload(1, 1);
    y.payload(1, 0) = x.payload(0, 1);
    y.payload(0, 1) = -x.payload(1, 0);
    return y;
  });
  return linear(f, f, op, LinearFlavour::Complex, "peirce twist on " + f.str());
}

PreserverMap PreserverMap::real_stretch(const FactorDescriptor& f) {
  auto op = materialize(f, f, [](const Element& x) {
    Element y = x;
    y.payload = x.payload.real().cast<cxd>() +
                cxd(0.0, 2.0) * x.payload.imag().cast<cxd>();
    return y;
  });
  return linear(f, f, op, LinearFlavour::General,
                "real stretch on " + f.str());
}

PreserverMap PreserverMap::spectral_inversion(const FactorDescriptor& f) {
  return gauge(f, ScalarFunction::inverse_or_zero());
}

PreserverMap PreserverMap::rank_one_mixed_gauge(int n) {
  FactorDescriptor f = FactorDescriptor::rect(n, 1);
  auto op = materialize(f, f, [](const Element& x) {
    Element y = x;
    y.payload(0, 0) = std::conj(x.payload(0, 0));
    return y;
  });
  return linear(f, f, op, LinearFlavour::General,
                "first-line conjugation on " + f.str());
}

// ---------------------------------------------------------------------------
// Sampling harness

namespace {

using Pools = std::vector<std::vector<Element>>;

Pools build_pools(const SumDescriptor& d, std::uint64_t seed,
                  const Tolerance& tol) {
  Pools p;
  for (std::size_t i = 0; i < d.size(); ++i)
    p.push_back(tripotent_pool(d[i], mix_seed(seed, 0xb001 + i), 16, tol));
  return p;
}

Element pool_pick(const std::vector<Element>& pool, const FactorDescriptor& f,
                  Rng& rng) {
  if (pool.empty() || rng.uniform() < 0.2) return zero_element(f);
  return pool[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
}

struct Triple {
  SumElement a, b, c;
};

// Mode map (cycled per trial): 0,1 partial spectral sums of {b,c,b};
// 2 the full product; 3,4 annihilator offsets rebuilt through cube roots;
// 5,6 pooled tripotent triples; 7 partial sums of a pooled product;
// 8 plain random; 9 boundary (zeros, extreme scales).
Triple sample_trial(const SumDescriptor& d, const Pools& pools, int mode,
                    Rng& rng, const Tolerance& tol) {
  Triple t{zero_sum(d), zero_sum(d), zero_sum(d)};
  auto partial_of_product = [&]() {
    SumElement prod = q_apply(t.b, t.c);
    for (std::size_t s = 0; s < d.size(); ++s) {
      Element acc = zero_element(d[s]);
      for (const auto& term : resolve(prod.parts[s], tol).terms)
        if (rng.uniform() < 0.65) acc = add(acc, scale(term.sigma, term.u));
      t.a.parts[s] = acc;
    }
  };
  switch (mode) {
    case 0:
    case 1:
      t.b = sample_sum(d, rng);
      t.c = sample_sum(d, rng);
      partial_of_product();
      break;
    case 2:
      t.b = sample_sum(d, rng);
      t.c = sample_sum(d, rng);
      t.a = q_apply(t.b, t.c);
      break;
    case 3:
    case 4: {
      t.a = sample_sum(d, rng);
      for (std::size_t s = 0; s < d.size(); ++s) {
        Element r = range_tripotent(t.a.parts[s], tol);
        Element z = add(peirce1_apply(r, sample_element(d[s], rng)),
                        peirce0_apply(r, sample_element(d[s], rng)));
        t.b.parts[s] = cube_root(add(t.a.parts[s], z), tol);
      }
      t.c = t.b;
      break;
    }
    case 5:
    case 6:
      for (std::size_t s = 0; s < d.size(); ++s)
        t.a.parts[s] = pool_pick(pools[s], d[s], rng);
      if (rng.uniform() < 0.5)
        for (std::size_t s = 0; s < d.size(); ++s)
          t.b.parts[s] = pool_pick(pools[s], d[s], rng);
      else
        t.b = sample_sum(d, rng);
      if (rng.uniform() < 0.5)
        t.c = t.b;
      else
        for (std::size_t s = 0; s < d.size(); ++s)
          t.c.parts[s] = pool_pick(pools[s], d[s], rng);
      break;
    case 7:
      for (std::size_t s = 0; s < d.size(); ++s) {
        t.b.parts[s] = pool_pick(pools[s], d[s], rng);
        t.c.parts[s] = pool_pick(pools[s], d[s], rng);
      }
      partial_of_product();
      break;
    case 8:
      t.a = sample_sum(d, rng);
      t.b = sample_sum(d, rng);
      t.c = sample_sum(d, rng);
      break;
    default:
      switch (rng.uniform_int(0, 3)) {
        case 0:  // a = 0 is a truncation of anything
          t.b = sample_sum(d, rng);
          t.c = sample_sum(d, rng);
          break;
        case 1:  // zero product
          t.a = sample_sum(d, rng);
          break;
        case 2:  // tiny scale, exact relation (random tiny a would only be a
                 // tolerance-level member, which unbounded inverses expose)
          t.b = scale(cxd(1e-6, 0.0), sample_sum(d, rng));
          t.c = sample_sum(d, rng);
          t.a = q_apply(t.b, t.c);
          break;
        default:
          t.b = scale(cxd(1e3, 0.0), sample_sum(d, rng));
          t.c = sample_sum(d, rng);
          t.a = q_apply(t.b, t.c);
          break;
      }
      break;
  }
  return t;
}

}  // namespace

double truncation_residual(const SumElement& a, const SumElement& b,
                           const SumElement& c) {
  SumElement d = q_apply(b, c);
  double worst = 0.0;
  for (std::size_t s = 0; s < a.parts.size(); ++s) {
    double na = triple_norm(a.parts[s]);
    double nd = triple_norm(d.parts[s]);
    double anchor = std::max(1.0, na * na * std::max(na, nd));
    Element gap = sub(cube(a.parts[s]), q_apply(a.parts[s], d.parts[s]));
    worst = std::max(worst, max_abs(gap.payload) / anchor);
  }
  return worst;
}

TrialReport preserves_truncation_of_triple_products(const PreserverMap& map,
                                                    long trials,
                                                    std::uint64_t seed,
                                                    const Tolerance& tol) {
  PreserverMap inv = map.inverted();
  const SumDescriptor dom = map.domain();
  const SumDescriptor cod = map.codomain();
  Pools pools_dom = build_pools(dom, mix_seed(seed, 0xd0), tol);
  Pools pools_cod = build_pools(cod, mix_seed(seed, 0xc0), tol);

  TrialReport rep;
  for (long t = 0; t < trials; ++t) {
    bool forward = (t % 2) == 0;
    Rng rng(mix_seed(seed, 0x7e57 + static_cast<std::uint64_t>(t)));
    const SumDescriptor& desc = forward ? dom : cod;
    const Pools& pools = forward ? pools_dom : pools_cod;
    const PreserverMap& used = forward ? map : inv;

    Triple s = sample_trial(desc, pools, static_cast<int>((t / 2) % 10), rng, tol);
    ++rep.trials;
    if (!truncation_of_triple_product(s.a, s.b, s.c, tol)) continue;
    if (!is_zero(s.a, tol))
      ++(forward ? rep.forward_positives : rep.backward_positives);

    SumElement ia = used.apply(s.a), ib = used.apply(s.b), ic = used.apply(s.c);
    if (!truncation_of_triple_product(ia, ib, ic, tol)) {
      ++rep.failures;
      if (rep.witnesses.size() < 8)
        rep.witnesses.push_back({s.a, s.b, s.c,
                                 forward ? "forward" : "backward",
                                 truncation_residual(ia, ib, ic)});
    }
  }
  rep.verdict = rep.failures > 0 ? "fail"
                : (rep.forward_positives >= 100 && rep.backward_positives >= 100)
                    ? "pass"
                    : "inconclusive";
  return rep;
}

// ---------------------------------------------------------------------------
// Consequence checks

namespace {

double q_ann_residual(const Element& z, const Element& a) {
  double na = triple_norm(a), nz = triple_norm(z);
  double anchor = std::max(1.0, na * na * std::max(1.0, nz));
  return max_abs(q_apply(a, z).payload) / anchor;
}

double q_ann_residual(const SumElement& z, const SumElement& a) {
  double worst = 0.0;
  for (std::size_t s = 0; s < z.parts.size(); ++s)
    worst = std::max(worst, q_ann_residual(z.parts[s], a.parts[s]));
  return worst;
}

struct Side {
  const PreserverMap* m;
  SumDescriptor desc;
  Pools pools;
  const char* tag;
};

struct Recorder {
  ConsequenceResult r;

  void sample(bool ok, double resid, const std::string& note) {
    ++r.trials;
    r.max_residual = std::max(r.max_residual, resid);
    if (!ok) {
      ++r.failures;
      if (r.note.empty()) r.note = note;
    }
  }
};

// Lifted pool tripotents plus a few componentwise combinations.
std::vector<SumElement> pool_tripotents(const Side& sd, long cap,
                                        std::uint64_t seed,
                                        const Tolerance& tol) {
  std::vector<SumElement> out;
  for (std::size_t s = 0; s < sd.desc.size(); ++s)
    for (const auto& e : sd.pools[s])
      out.push_back(lift(sd.desc, s, e));
  if (sd.desc.size() > 1) {
    Rng rng(mix_seed(seed, 0xcafe));
    for (int k = 0; k < 12; ++k) {
      SumElement e = zero_sum(sd.desc);
      for (std::size_t s = 0; s < sd.desc.size(); ++s)
        e.parts[s] = pool_pick(sd.pools[s], sd.desc[s], rng);
      if (is_tripotent(e, tol)) out.push_back(e);
    }
  }
  if (cap > 0 && static_cast<long>(out.size()) > cap)
    out.resize(static_cast<std::size_t>(cap));
  return out;
}

SumElement conditioned_sample(const SumDescriptor& d, Rng& rng,
                              const Tolerance& tol) {
  SumElement a = zero_sum(d);
  for (std::size_t s = 0; s < d.size(); ++s) {
    for (int tries = 0; tries < 40; ++tries) {
      Element x = sample_element(d[s], rng);
      SpectralResolution r = resolve(x, tol);
      if (r.rank() > 0 &&
          r.terms.back().sigma >= 0.05 * r.terms.front().sigma) {
        a.parts[s] = x;
        break;
      }
    }
  }
  return a;
}

}  // namespace

std::vector<ConsequenceResult> verify_consequences(const PreserverMap& map,
                                                   long trials,
                                                   std::uint64_t seed,
                                                   const Tolerance& tol) {
  PreserverMap inv = map.inverted();
  Side sides[2] = {
      {&map, map.domain(), build_pools(map.domain(), mix_seed(seed, 0xf1), tol),
       "forward"},
      {&inv, map.codomain(),
       build_pools(map.codomain(), mix_seed(seed, 0xf2), tol), "backward"},
  };
  long n = std::max<long>(16, trials / 8);
  std::vector<ConsequenceResult> out;

  // Zero is fixed and single-element annihilators transport.
  {
    Recorder rec;
    rec.r.id = "lemma-3.3";
    for (const Side& sd : sides) {
      SumElement z0 = sd.m->apply(zero_sum(sd.desc));
      rec.sample(is_zero(z0, tol), triple_norm(z0),
                 std::string(sd.tag) + ": zero not fixed");
      for (long k = 0; k < n; ++k) {
        Rng rng(mix_seed(seed, 0x3300 + 2 * k + (sd.m == &inv)));
        SumElement a = sample_sum(sd.desc, rng);
        SumElement z = zero_sum(sd.desc);
        for (std::size_t s = 0; s < sd.desc.size(); ++s) {
          Element r = range_tripotent(a.parts[s], tol);
          Element zs = add(peirce1_apply(r, sample_element(sd.desc[s], rng)),
                           peirce0_apply(r, sample_element(sd.desc[s], rng)));
          // a numerically trivial annihilator leaves only projection noise;
          // keep the member exact so unbounded gauges cannot inflate it
          if (coord_norm(zs) > tol.eq_tol) z.parts[s] = zs;
        }
        double img = q_ann_residual(sd.m->apply(z), sd.m->apply(a));
        rec.sample(img <= tol.eq_tol, img,
                   std::string(sd.tag) + ": annihilating pair not preserved");
        SumElement b = sample_sum(sd.desc, rng);
        if (q_ann_residual(b, a) > 1e-3) {
          double img2 = q_ann_residual(sd.m->apply(b), sd.m->apply(a));
          rec.sample(img2 > tol.eq_tol, 0.0,
                     std::string(sd.tag) + ": non-annihilating pair collapsed");
        }
      }
    }
    out.push_back(rec.r);
  }

  // Generalized inverses transport: Q(Da)(Da^dag) = Da and symmetrically.
  {
    Recorder rec;
    rec.r.id = "lemma-3.4";
    for (const Side& sd : sides) {
      for (long k = 0; k < n; ++k) {
        Rng rng(mix_seed(seed, 0x3400 + 2 * k + (sd.m == &inv)));
        SumElement a = conditioned_sample(sd.desc, rng, tol);
        SumElement w = zero_sum(sd.desc);
        for (std::size_t s = 0; s < sd.desc.size(); ++s)
          w.parts[s] = generalized_inverse(a.parts[s], tol);
        SumElement ia = sd.m->apply(a), iw = sd.m->apply(w);
        double worst = 0.0;
        for (std::size_t s = 0; s < sd.desc.size(); ++s) {
          const Element &x = ia.parts[s], &y = iw.parts[s];
          double nx = triple_norm(x), ny = triple_norm(y);
          double r1 = max_abs(sub(q_apply(x, y), x).payload) /
                      std::max(1.0, nx * nx * ny);
          double r2 = max_abs(sub(q_apply(y, x), y).payload) /
                      std::max(1.0, ny * ny * nx);
          worst = std::max({worst, r1, r2});
        }
        rec.sample(worst <= tol.eq_tol, worst,
                   std::string(sd.tag) + ": generalized inverse lost");
      }
    }
    out.push_back(rec.r);
  }

  // Tripotents and their partial order transport.
  {
    Recorder rec;
    rec.r.id = "lemma-3.5";
    for (const Side& sd : sides) {
      auto es = pool_tripotents(sd, n, mix_seed(seed, 0x3500), tol);
      for (const auto& e : es) {
        SumElement ie = sd.m->apply(e);
        rec.sample(is_tripotent(ie, tol), rel_distance(cube(ie), ie),
                   std::string(sd.tag) + ": tripotent image is not a tripotent");
      }
      long budget = n;
      for (std::size_t i = 0; i < es.size() && budget > 0; ++i)
        for (std::size_t j = 0; j < es.size() && budget > 0; ++j) {
          if (i == j || !leq(es[i], es[j], tol)) continue;
          --budget;
          rec.sample(leq(sd.m->apply(es[i]), sd.m->apply(es[j]), tol), 0.0,
                     std::string(sd.tag) + ": partial order lost");
        }
    }
    out.push_back(rec.r);
  }

  // Truncations of tripotents transport.
  {
    Recorder rec;
    rec.r.id = "remark-3.6";
    for (const Side& sd : sides) {
      auto es = pool_tripotents(sd, 0, mix_seed(seed, 0x3600), tol);
      long budget = n;
      for (std::size_t i = 0; i < es.size() && budget > 0; ++i)
        for (std::size_t j = 0; j < es.size() && budget > 0; ++j) {
          if (i == j || !is_truncation(es[i], es[j], tol)) continue;
          --budget;
          rec.sample(is_truncation(sd.m->apply(es[i]), sd.m->apply(es[j]), tol),
                     0.0,
                     std::string(sd.tag) + ": tripotent truncation lost");
        }
    }
    out.push_back(rec.r);
  }

  // The Peirce-1 + Peirce-0 part of each tripotent transports.
  {
    Recorder rec;
    rec.r.id = "corollary-3.7";
    for (const Side& sd : sides) {
      auto es = pool_tripotents(sd, n / 4 + 1, mix_seed(seed, 0x3700), tol);
      for (const auto& e : es) {
        if (is_zero(e, tol)) continue;
        SumElement ie = sd.m->apply(e);
        for (std::size_t s = 0; s < sd.desc.size(); ++s) {
          for (const auto& x : factor_basis(sd.desc[s])) {
            Element zs = sub(x, peirce2_apply(e.parts[s], x));
            if (triple_norm(zs) <= tol.eq_tol) continue;
            SumElement iz = sd.m->apply(lift(sd.desc, s, zs));
            double worst = 0.0;
            for (std::size_t u = 0; u < sd.desc.size(); ++u) {
              Element p2 = peirce2_apply(ie.parts[u], iz.parts[u]);
              worst = std::max(worst, max_abs(p2.payload) /
                                          std::max(1.0, triple_norm(iz)));
            }
            rec.sample(worst <= tol.eq_tol, worst,
                       std::string(sd.tag) +
                           ": Peirce-1+0 image leaks into Peirce-2");
          }
        }
      }
    }
    out.push_back(rec.r);
  }

  // Near-additivity on orthogonal pairs, up to a common annihilator.
  {
    Recorder rec;
    rec.r.id = "lemma-3.9";
    for (const Side& sd : sides) {
      for (long k = 0; k < n; ++k) {
        Rng rng(mix_seed(seed, 0x3900 + 2 * k + (sd.m == &inv)));
        SumElement a = zero_sum(sd.desc), b = zero_sum(sd.desc);
        for (std::size_t s = 0; s < sd.desc.size(); ++s) {
          Element e = pool_pick(sd.pools[s], sd.desc[s], rng);
          Element as = peirce2_apply(e, sample_element(sd.desc[s], rng));
          Element bs = peirce0_apply(e, sample_element(sd.desc[s], rng));
          // drop projection noise from trivial Peirce spaces (see lemma-3.3)
          if (coord_norm(as) > tol.eq_tol) a.parts[s] = as;
          if (coord_norm(bs) > tol.eq_tol) b.parts[s] = bs;
        }
        SumElement sroot = zero_sum(sd.desc);
        for (std::size_t s = 0; s < sd.desc.size(); ++s)
          sroot.parts[s] = add(cube_root(a.parts[s], tol),
                               cube_root(b.parts[s], tol));
        SumElement w = cube(sd.m->apply(sroot));
        SumElement ia = sd.m->apply(a), ib = sd.m->apply(b);
        SumElement z = sub(sub(w, ia), ib);
        double resid = std::max(q_ann_residual(z, ia), q_ann_residual(z, ib));
        rec.sample(resid <= tol.eq_tol, resid,
                   std::string(sd.tag) + ": orthogonal cube-root sum broken");
      }
    }
    out.push_back(rec.r);
  }

  // Additivity on families of mutually orthogonal tripotents.
  {
    Recorder rec;
    rec.r.id = "lemma-3.10";
    for (const Side& sd : sides) {
      for (long k = 0; k < n; ++k) {
        Rng rng(mix_seed(seed, 0x3a00 + 2 * k + (sd.m == &inv)));
        std::vector<SumElement> family;
        for (std::size_t s = 0; s < sd.desc.size(); ++s)
          for (const auto& term :
               resolve(sample_element(sd.desc[s], rng), tol).terms)
            family.push_back(lift(sd.desc, s, term.u));
        if (family.size() < 2) continue;
        SumElement total = zero_sum(sd.desc), image_sum = zero_sum(sd.desc);
        for (const auto& e : family) {
          total = add(total, e);
          image_sum = add(image_sum, sd.m->apply(e));
        }
        double resid = rel_distance(sd.m->apply(total), image_sum);
        rec.sample(resid <= tol.eq_tol, resid,
                   std::string(sd.tag) + ": orthogonal tripotent sum lost");
      }
    }
    out.push_back(rec.r);
  }

  // The Peirce-2 space of each tripotent transports onto the image's.
  {
    Recorder rec;
    rec.r.id = "proposition-3.11";
    for (const Side& sd : sides) {
      auto es = pool_tripotents(sd, n / 4 + 1, mix_seed(seed, 0x3b00), tol);
      for (const auto& e : es) {
        if (is_zero(e, tol)) continue;
        SumElement ie = sd.m->apply(e);
        for (std::size_t s = 0; s < sd.desc.size(); ++s) {
          for (const auto& x : factor_basis(sd.desc[s])) {
            Element zs = peirce2_apply(e.parts[s], x);
            if (triple_norm(zs) <= tol.eq_tol) continue;
            SumElement iz = sd.m->apply(lift(sd.desc, s, zs));
            SumElement p2 = zero_sum(sd.desc);
            for (std::size_t u = 0; u < sd.desc.size(); ++u)
              p2.parts[u] = peirce2_apply(ie.parts[u], iz.parts[u]);
            double resid = rel_distance(p2, iz);
            rec.sample(resid <= tol.eq_tol, resid,
                       std::string(sd.tag) + ": Peirce-2 image not Peirce-2");
          }
        }
      }
    }
    out.push_back(rec.r);
  }

  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string linearity_str(LinearityClass c) {
  switch (c) {
    case LinearityClass::ComplexLinear:
      return "complex_linear";
    case LinearityClass::ConjugateLinear:
      return "conjugate_linear";
    case LinearityClass::RealLinearSplit:
      return "real_linear_split";
    case LinearityClass::Nonlinear:
      return "nonlinear";
  }
  return "?";
}

ClassifyReport classify(const PreserverMap& map, long trials,
                        std::uint64_t seed, const Tolerance& tol) {
  ClassifyReport rep;
  const SumDescriptor& dom = map.domain();
  Pools pools = build_pools(dom, mix_seed(seed, 0xc1a5), tol);
  long n = std::max<long>(24, trials / 4);
  auto near = [&](const SumElement& x, const SumElement& y) {
    return approx_eq(x, y, tol);
  };

  // Additivity on orthogonal pairs first (Peirce-split within a slot and
  // cross-slot pairs), then on general pairs.
  rep.additive_on_orthogonal = true;
  for (long k = 0; k < n; ++k) {
    Rng rng(mix_seed(seed, 0xadd0 + k));
    std::size_t s = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(dom.size()) - 1));
    Element e = pool_pick(pools[s], dom[s], rng);
    SumElement a = lift(dom, s, peirce2_apply(e, sample_element(dom[s], rng)));
    SumElement b = lift(dom, s, peirce0_apply(e, sample_element(dom[s], rng)));
    if (dom.size() > 1 && rng.uniform() < 0.5) {
      std::size_t s2 = (s + 1) % dom.size();
      b = lift(dom, s2, sample_element(dom[s2], rng));
    }
    if (!near(map.apply(add(a, b)), add(map.apply(a), map.apply(b)))) {
      rep.additive_on_orthogonal = false;
      if (rep.detail.empty()) rep.detail = "additivity fails on an orthogonal pair";
      break;
    }
  }
  rep.additive = rep.additive_on_orthogonal;
  if (rep.additive)
    for (long k = 0; k < n; ++k) {
      Rng rng(mix_seed(seed, 0xadd1 + k));
      SumElement a = sample_sum(dom, rng), b = sample_sum(dom, rng);
      if (!near(map.apply(add(a, b)), add(map.apply(a), map.apply(b)))) {
        rep.additive = false;
        if (rep.detail.empty()) rep.detail = "additivity fails on a general pair";
        break;
      }
    }

  rep.real_homogeneous = true;
  for (long k = 0; k < n; ++k) {
    Rng rng(mix_seed(seed, 0x4ea1 + k));
    SumElement a = sample_sum(dom, rng);
    cxd r(4.0 * rng.uniform() - 2.0, 0.0);
    if (!near(map.apply(scale(r, a)), scale(r, map.apply(a)))) {
      rep.real_homogeneous = false;
      if (rep.detail.empty()) rep.detail = "real homogeneity fails";
      break;
    }
  }

  // Per-slot i-homogeneity, probed on minimal-tripotent lines first and then
  // on general slot samples.
  const cxd i_unit(0.0, 1.0);
  for (std::size_t s = 0; s < dom.size(); ++s) {
    auto minimals = minimal_tripotent_pool(dom[s], mix_seed(seed, 0x111 + s), 4, tol);
    bool all_linear = true, all_conj = true;
    auto probe = [&](const SumElement& x) {
      SumElement lhs = map.apply(scale(i_unit, x));
      SumElement img = map.apply(x);
      if (!near(lhs, scale(i_unit, img))) all_linear = false;
      if (!near(lhs, scale(-i_unit, img))) all_conj = false;
    };
    Rng rng(mix_seed(seed, 0x1501 + s));
    for (const auto& e : minimals)
      probe(lift(dom, s, scale(rng.gaussian(), e)));
    for (int k = 0; k < 16; ++k)
      probe(lift(dom, s, sample_element(dom[s], rng)));
    rep.factor_tags.push_back(all_linear  ? "complex-linear"
                              : all_conj ? "conjugate-linear"
                                         : "real-mixed");
  }

  if (!rep.additive || !rep.real_homogeneous) {
    rep.verdict = LinearityClass::Nonlinear;
    return rep;
  }
  bool any_complex = false, any_conj = false, any_mixed = false;
  for (const auto& tag : rep.factor_tags) {
    any_complex |= tag == "complex-linear";
    any_conj |= tag == "conjugate-linear";
    any_mixed |= tag == "real-mixed";
  }
  if (any_mixed) {
    rep.verdict = LinearityClass::Nonlinear;
    if (rep.detail.empty())
      rep.detail = "a factor is neither i-linear nor i-antilinear";
    return rep;
  }
  rep.verdict = (any_complex && any_conj) ? LinearityClass::RealLinearSplit
                : any_conj               ? LinearityClass::ConjugateLinear
                                         : LinearityClass::ComplexLinear;

  // For linear verdicts, triple-product preservation and isometry are two
  // redundant witnesses of the same property.
  rep.triple_preserving = true;
  rep.isometric = true;
  for (long k = 0; k < n; ++k) {
    Rng rng(mix_seed(seed, 0x791e + k));
    SumElement x = sample_sum(dom, rng), y = sample_sum(dom, rng),
               z = sample_sum(dom, rng);
    if (!near(map.apply(triple_product(x, y, z)),
              triple_product(map.apply(x), map.apply(y), map.apply(z))))
      rep.triple_preserving = false;
    double nx = triple_norm(x), nix = triple_norm(map.apply(x));
    if (std::abs(nix - nx) > tol.eq_tol * std::max(1.0, nx))
      rep.isometric = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Factor matching and the rank-one Hilbert check

int greedy_rank(const FactorDescriptor& f, std::uint64_t seed,
                const Tolerance& tol) {
  auto pool = minimal_tripotent_pool(f, mix_seed(seed, 0x4a7c), 24, tol);
  // conjugates stay minimal and supply the orthogonal partners that random
  // spin minimals almost never pair up with
  std::size_t n = pool.size();
  for (std::size_t i = 0; i < n; ++i) pool.push_back(conj_element(pool[i]));
  int best = 0;
  for (int restart = 0; restart < 6; ++restart) {
    Rng rng(mix_seed(seed, 0x9a00 + restart));
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1],
                order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
      bool ok = true;
      for (std::size_t j : kept)
        if (!orthogonal(pool[idx], pool[j], tol)) {
          ok = false;
          break;
        }
      if (ok) kept.push_back(idx);
    }
    best = std::max(best, static_cast<int>(kept.size()));
  }
  return best;
}

FactorMatch factor_matching(const PreserverMap& map, std::uint64_t seed,
                            const Tolerance& tol) {
  FactorMatch fm;
  const SumDescriptor& dom = map.domain();
  const SumDescriptor& cod = map.codomain();
  if (dom.size() != cod.size()) {
    fm.detail = "domain and codomain have different slot counts";
    return fm;
  }
  fm.sigma.assign(dom.size(), 0);
  std::vector<char> hit(cod.size(), 0);
  bool ok = true;

  auto carrier = [&](const SumElement& y, std::size_t& slot) {
    double best = -1.0, second = -1.0;
    for (std::size_t j = 0; j < y.parts.size(); ++j) {
      double nj = triple_norm(y.parts[j]);
      if (nj > best) {
        second = best;
        best = nj;
        slot = j;
      } else {
        second = std::max(second, nj);
      }
    }
    return second <= tol.eq_tol * std::max(1.0, best);
  };

  for (std::size_t i = 0; i < dom.size() && ok; ++i) {
    Element e =
        minimal_tripotent_pool(dom[i], mix_seed(seed, 0xfac0 + i), 2, tol).at(0);
    SumElement y = map.apply(lift(dom, i, e));
    std::size_t j = 0;
    if (!carrier(y, j)) {
      ok = false;
      fm.detail = "image of slot " + std::to_string(i) + " straddles factors";
      break;
    }
    if (hit[j]) {
      ok = false;
      fm.detail = "two slots land in one codomain factor";
      break;
    }
    hit[j] = 1;
    fm.sigma[i] = j;
  }

  if (ok)
    for (int k = 0; k < 32 && ok; ++k) {
      Rng rng(mix_seed(seed, 0xfad0 + k));
      std::size_t i = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(dom.size()) - 1));
      SumElement y = map.apply(lift(dom, i, sample_element(dom[i], rng)));
      std::size_t j = 0;
      if (!carrier(y, j) || j != fm.sigma[i]) {
        ok = false;
        fm.detail = "a sample escapes the matched factor";
      }
    }

  fm.domain_rank.resize(dom.size());
  fm.codomain_rank.resize(cod.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    fm.domain_rank[i] = greedy_rank(dom[i], mix_seed(seed, 0x4000 + i), tol);
  for (std::size_t j = 0; j < cod.size(); ++j)
    fm.codomain_rank[j] = greedy_rank(cod[j], mix_seed(seed, 0x5000 + j), tol);
  fm.valid = ok;
  if (ok) {
    fm.ranks_match = true;
    for (std::size_t i = 0; i < dom.size(); ++i)
      if (fm.domain_rank[i] != fm.codomain_rank[fm.sigma[i]])
        fm.ranks_match = false;
  }
  return fm;
}

RankOneReport rank_one_preserver_check(const PreserverMap& map, long trials,
                                       std::uint64_t seed,
                                       const Tolerance& tol) {
  RankOneReport rep;
  const SumDescriptor& dom = map.domain();
  if (dom.size() != 1 || dom[0].kind != FactorKind::Rect ||
      std::min(dom[0].m, dom[0].n) != 1 || dom[0].complex_dim() < 2) {
    rep.detail = "not a rank-one Hilbert factor of dimension >= 2";
    return rep;
  }
  rep.applicable = true;
  long lin_support = 0, conj_support = 0, neither = 0;
  for (long k = 0; k < std::max<long>(trials, 16); ++k) {
    Rng rng(mix_seed(seed, 0x0140 + k));
    Element a = sample_element(dom[0], rng), e = sample_element(dom[0], rng);
    cxd h = inner(a, e);
    cxd g = inner(map.apply_one(a), map.apply_one(e));
    double anchor = std::max({1.0, std::abs(g), std::abs(h)});
    bool lin_ok = std::abs(g - h) <= tol.eq_tol * anchor;
    bool conj_ok = std::abs(g - std::conj(h)) <= tol.eq_tol * anchor;
    if (!lin_ok && !conj_ok) ++neither;
    if (std::abs(h - std::conj(h)) > 1e-3) {  // discriminating sample
      if (lin_ok && !conj_ok) ++lin_support;
      if (conj_ok && !lin_ok) ++conj_support;
    }
  }
  rep.consistent = neither == 0 && !(lin_support > 0 && conj_support > 0);
  rep.preserved = rep.consistent && lin_support > 0;
  rep.conjugated = rep.consistent && conj_support > 0;
  if (!rep.consistent)
    rep.detail = neither > 0
                     ? "inner products match neither convention on samples"
                     : "samples split between both conventions";
  return rep;
}

// ---------------------------------------------------------------------------
// Catalogues

std::vector<CataloguedMap> catalogue_sound_maps(std::uint64_t seed) {
  const auto m2 = FactorDescriptor::rect(2, 2);
  const auto sym2 = FactorDescriptor::sym(2);
  std::vector<CataloguedMap> out;
  out.push_back({"identity-m2", PreserverMap::identity_on(m2),
                 LinearityClass::ComplexLinear});
  out.push_back({"unitary-multiplier-m2",
                 PreserverMap::unitary_multiplier(m2, mix_seed(seed, 1)),
                 LinearityClass::ComplexLinear});
  out.push_back({"transpose-m2", PreserverMap::transpose_on(m2),
                 LinearityClass::ComplexLinear});
  out.push_back({"conjugation-m2", PreserverMap::conjugation_on(m2),
                 LinearityClass::ConjugateLinear});
  out.push_back({"conjugate-unitary-m2",
                 PreserverMap::compose(
                     {PreserverMap::conjugation_on(m2),
                      PreserverMap::unitary_multiplier(m2, mix_seed(seed, 2))}),
                 LinearityClass::ConjugateLinear});
  out.push_back({"spin-rotation-spin4",
                 PreserverMap::spin_orthogonal(4, mix_seed(seed, 3)),
                 LinearityClass::ComplexLinear});
  out.push_back({"unitary-congruence-sym2",
                 PreserverMap::unitary_multiplier(sym2, mix_seed(seed, 4)),
                 LinearityClass::ComplexLinear});
  out.push_back({"swap-m2-m2",
                 PreserverMap::direct_sum({1, 0},
                                          {PreserverMap::identity_on(m2),
                                           PreserverMap::identity_on(m2)}),
                 LinearityClass::ComplexLinear});
  out.push_back(
      {"split-m2-sym2-spin3",
       PreserverMap::direct_sum(
           {0, 1, 2},
           {PreserverMap::unitary_multiplier(m2, mix_seed(seed, 5)),
            PreserverMap::conjugation_on(sym2),
            PreserverMap::spin_orthogonal(3, mix_seed(seed, 6))}),
       LinearityClass::RealLinearSplit});
  return out;
}

std::vector<CataloguedMap> catalogue_broken_maps(std::uint64_t seed) {
  (void)seed;
  const auto m2 = FactorDescriptor::rect(2, 2);
  Element e11 = zero_element(m2);
  e11.payload(0, 0) = 1.0;
  std::vector<CataloguedMap> out;
  out.push_back({"norm-perturbation-m2",
                 PreserverMap::norm_perturbation(PreserverMap::identity_on(m2),
                                                 e11, 0.1),
                 LinearityClass::Nonlinear});
  out.push_back(
      {"peirce-twist-m2", PreserverMap::peirce_twist(), LinearityClass::ComplexLinear});
  out.push_back({"real-stretch-m2", PreserverMap::real_stretch(m2),
                 LinearityClass::Nonlinear});
  out.push_back({"spectral-inversion-m2", PreserverMap::spectral_inversion(m2),
                 LinearityClass::Nonlinear});
  out.push_back({"first-line-conjugation-c3",
                 PreserverMap::rank_one_mixed_gauge(3),
                 LinearityClass::Nonlinear});
  out.push_back({"homothety-sym2",
                 PreserverMap::scale_on(FactorDescriptor::sym(2), cxd(2.0, 0.0)),
                 LinearityClass::ComplexLinear});
  return out;
}

}  // namespace jbt
