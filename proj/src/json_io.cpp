#include "jbt/json_io.hpp"

#include <fstream>

namespace jbt {

json complex_to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

cxd complex_from_json(const json& j) {
  if (j.is_number()) return cxd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cxd(j[0].get<double>(), j[1].get<double>());
  throw error("complex scalar must be a number or [re, im]");
}

json factor_to_json(const FactorDescriptor& f) {
  json j;
  switch (f.kind) {
    case FactorKind::Rect:
      j["kind"] = "rect";
      j["m"] = f.m;
      j["n"] = f.n;
      break;
    case FactorKind::Antisym:
      j["kind"] = "antisym";
      j["n"] = f.n;
      break;
    case FactorKind::Sym:
      j["kind"] = "sym";
      j["n"] = f.n;
      break;
    case FactorKind::Spin:
      j["kind"] = "spin";
      j["n"] = f.n;
      break;
  }
  return j;
}

FactorDescriptor factor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw error("factor descriptor must be an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  auto geti = [&](const char* key) {
    if (!j.contains(key)) throw error(std::string("factor needs ") + key);
    return j.at(key).get<int>();
  };
  if (kind == "rect") return FactorDescriptor::rect(geti("m"), geti("n"));
  if (kind == "antisym") return FactorDescriptor::antisym(geti("n"));
  if (kind == "sym") return FactorDescriptor::sym(geti("n"));
  if (kind == "spin") return FactorDescriptor::spin(geti("n"));
  throw error("unknown factor kind: " + kind);
}

json element_to_json(const Element& x) {
  json j;
  j["factor"] = factor_to_json(x.factor);
  if (x.factor.kind == FactorKind::Spin) {
    json data = json::array();
    for (Eigen::Index i = 0; i < x.payload.rows(); ++i)
      data.push_back(complex_to_json(x.payload(i, 0)));
    j["data"] = data;
  } else {
    json data = json::array();
    for (Eigen::Index r = 0; r < x.payload.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < x.payload.cols(); ++c)
        row.push_back(complex_to_json(x.payload(r, c)));
      data.push_back(row);
    }
    j["data"] = data;
  }
  return j;
}

Element element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("factor") || !j.contains("data"))
    throw error("element must be an object with factor and data");
  FactorDescriptor f = factor_from_json(j.at("factor"));
  const json& data = j.at("data");
  Element x = zero_element(f);
  if (f.kind == FactorKind::Spin) {
    if (!data.is_array() || static_cast<int>(data.size()) != f.n)
      throw error("spin data must list " + std::to_string(f.n) + " coordinates");
    for (int i = 0; i < f.n; ++i) x.payload(i, 0) = complex_from_json(data[i]);
  } else {
    int rows = f.kind == FactorKind::Rect ? f.m : f.n;
    int cols = f.n;
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
      throw error("matrix data must have " + std::to_string(rows) + " rows");
    for (int r = 0; r < rows; ++r) {
      const json& row = data[r];
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        throw error("matrix rows must have " + std::to_string(cols) + " cells");
      for (int c = 0; c < cols; ++c)
        x.payload(r, c) = complex_from_json(row[c]);
    }
  }
  validate_element(x);
  return x;
}

json sum_to_json(const SumElement& x) {
  json parts = json::array();
  for (const auto& p : x.parts) parts.push_back(element_to_json(p));
  return json{{"parts", parts}};
}

SumElement sum_from_json(const json& j) {
  if (j.is_object() && j.contains("parts")) {
    const json& parts = j.at("parts");
    if (!parts.is_array() || parts.empty())
      throw error("sum element needs a nonempty parts list");
    SumElement x;
    for (const auto& p : parts) x.parts.push_back(element_from_json(p));
    return x;
  }
  return wrap(element_from_json(j));
}

// ---------------------------------------------------------------------------

namespace {

PreserverMap linear_from_json(const json& j, std::uint64_t default_seed,
                              bool conj_recipe) {
  FactorDescriptor f = factor_from_json(j.at("factor"));
  std::string op = j.value("op", conj_recipe ? "conjugation" : "identity");
  std::uint64_t seed = j.value("seed", default_seed);
  if (op == "identity") return PreserverMap::identity_on(f);
  if (op == "transpose") return PreserverMap::transpose_on(f);
  if (op == "unitary") return PreserverMap::unitary_multiplier(f, seed);
  if (op == "scale")
    return PreserverMap::scale_on(f, complex_from_json(j.at("value")));
  if (op == "peirce-twist") return PreserverMap::peirce_twist();
  if (op == "real-stretch") return PreserverMap::real_stretch(f);
  if (op == "first-line-conjugation") {
    if (f.kind != FactorKind::Rect || f.n != 1)
      throw error("first-line-conjugation expects a rect(n,1) factor");
    return PreserverMap::rank_one_mixed_gauge(f.m);
  }
  if (op == "conjugation") return PreserverMap::conjugation_on(f);
  if (op == "conjugate-unitary")
    return PreserverMap::compose({PreserverMap::conjugation_on(f),
                                  PreserverMap::unitary_multiplier(f, seed)});
  if (op == "matrix") {
    const json& rows = j.at("matrix");
    int d = 2 * f.complex_dim();
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
      throw error("matrix op needs a " + std::to_string(d) + "-row real matrix");
    RealLinearMap m;
    m.domain = f;
    m.codomain = f;
    m.mat = RealMatrix(d, d);
    for (int r = 0; r < d; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != d)
        throw error("matrix op rows must have " + std::to_string(d) + " cells");
      for (int c = 0; c < d; ++c) m.mat(r, c) = rows[r][c].get<double>();
    }
    return PreserverMap::linear(f, f, m, LinearFlavour::General, "raw matrix");
  }
  throw error("unknown linear op: " + op);
}

}  // namespace

PreserverMap map_from_json(const json& j, std::uint64_t default_seed) {
  if (!j.is_object() || !j.contains("recipe"))
    throw error("map recipe must be an object with a recipe tag");
  std::string recipe = j.at("recipe").get<std::string>();
  if (recipe == "linear") return linear_from_json(j, default_seed, false);
  if (recipe == "conjlinear") return linear_from_json(j, default_seed, true);
  if (recipe == "gauge") {
    FactorDescriptor f = factor_from_json(j.at("factor"));
    std::string fn = j.value("f", "identity");
    if (fn == "identity") return PreserverMap::gauge(f, ScalarFunction::identity());
    if (fn == "conjugation")
      return PreserverMap::gauge(f, ScalarFunction::conjugation());
    if (fn == "inverse-or-zero")
      return PreserverMap::gauge(f, ScalarFunction::inverse_or_zero());
    throw error("unknown gauge function: " + fn);
  }
  if (recipe == "perturb") {
    PreserverMap base = map_from_json(j.at("base"), default_seed);
    double eps = j.value("epsilon", 0.1);
    Element dir = element_from_json(j.at("direction"));
    return PreserverMap::norm_perturbation(base, dir, eps);
  }
  if (recipe == "sum") {
    const json& parts = j.at("parts");
    std::vector<PreserverMap> maps;
    for (const auto& p : parts) maps.push_back(map_from_json(p, default_seed));
    std::vector<std::size_t> sigma;
    if (j.contains("sigma"))
      for (const auto& s : j.at("sigma")) sigma.push_back(s.get<std::size_t>());
    else
      for (std::size_t i = 0; i < maps.size(); ++i) sigma.push_back(i);
    return PreserverMap::direct_sum(sigma, maps);
  }
  if (recipe == "compose") {
    std::vector<PreserverMap> chain;
    for (const auto& p : j.at("maps")) chain.push_back(map_from_json(p, default_seed));
    return PreserverMap::compose(chain);
  }
  if (recipe == "catalogue") {
    std::string name = j.at("name").get<std::string>();
    std::uint64_t seed = j.value("seed", default_seed);
    for (const auto& c : catalogue_sound_maps(seed))
      if (c.name == name) return c.map;
    for (const auto& c : catalogue_broken_maps(seed))
      if (c.name == name) return c.map;
    throw error("unknown catalogue map: " + name);
  }
  throw error("unknown recipe: " + recipe);
}

// ---------------------------------------------------------------------------

json witness_to_json(const WitnessTriple& w) {
  json j;
  j["direction"] = w.direction;
  j["residual"] = w.residual;
  j["a"] = sum_to_json(w.a);
  j["b"] = sum_to_json(w.b);
  j["c"] = sum_to_json(w.c);
  return j;
}

json trial_report_to_json(const TrialReport& r) {
  json j;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["forward_positives"] = r.forward_positives;
  j["backward_positives"] = r.backward_positives;
  j["verdict"] = r.verdict;
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(witness_to_json(x));
  j["witnesses"] = w;
  return j;
}

json consequence_to_json(const ConsequenceResult& r) {
  json j;
  j["id"] = r.id;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json classify_to_json(const ClassifyReport& r) {
  json j;
  j["verdict"] = linearity_str(r.verdict);
  j["factor_tags"] = r.factor_tags;
  j["additive_on_orthogonal"] = r.additive_on_orthogonal;
  j["additive"] = r.additive;
  j["real_homogeneous"] = r.real_homogeneous;
  j["triple_preserving"] = r.triple_preserving;
  j["isometric"] = r.isometric;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json factor_match_to_json(const FactorMatch& m) {
  json j;
  j["valid"] = m.valid;
  j["sigma"] = m.sigma;
  j["domain_rank"] = m.domain_rank;
  j["codomain_rank"] = m.codomain_rank;
  j["ranks_match"] = m.ranks_match;
  if (!m.detail.empty()) j["detail"] = m.detail;
  return j;
}

json rank_one_to_json(const RankOneReport& r) {
  json j;
  j["applicable"] = r.applicable;
  j["inner_products_preserved"] = r.preserved;
  j["inner_products_conjugated"] = r.conjugated;
  j["consistent"] = r.consistent;
  j["continuity_assumed"] = r.continuity_assumed;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json gauge_properties_to_json(const GaugeProperties& p) {
  json j;
  j["zero_fixed"] = p.zero_fixed;
  j["circle_preserved"] = p.circle_preserved;
  j["triple_multiplicative"] = p.triple_multiplicative;
  j["square_compatible"] = p.square_compatible;
  j["conjugation_compatible"] = p.conjugation_compatible;
  j["multiplicative"] = p.multiplicative;
  j["additive"] = p.additive;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace jbt
