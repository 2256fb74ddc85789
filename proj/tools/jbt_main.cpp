#include "jbt/json_io.hpp"
#include "jbt/lemma_suite.hpp"
#include "jbt/spectral.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
  double tol = -1.0;  // < 0: library default
  std::uint64_t seed = 42;
  long trials = -1;  // < 0: per-command default
  bool json_out = false;
};

jbt::Tolerance make_tol(const Global& g) {
  jbt::Tolerance t;
  if (g.tol > 0) t.eq_tol = g.tol;
  return t;
}

jbt::json report_head(const std::string& command) {
  jbt::json j;
  j["tool"] = "jbt";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

void emit(const jbt::json& j, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw jbt::error("cannot write " + out_path);
    f << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

/// Inverse of FactorDescriptor::str(): "rect(2,3)", "sym(2)", "antisym(4)",
/// "spin(5)".
jbt::FactorDescriptor parse_factor(const std::string& s) {
  auto open = s.find('(');
  auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw jbt::error("bad factor '" + s + "', expected kind(dims)");
  std::string kind = s.substr(0, open);
  std::string args = s.substr(open + 1, close - open - 1);
  int a = 0, b = 0;
  auto comma = args.find(',');
  try {
    if (comma == std::string::npos) {
      a = std::stoi(args);
    } else {
      a = std::stoi(args.substr(0, comma));
      b = std::stoi(args.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw jbt::error("bad factor dimensions in '" + s + "'");
  }
  if (kind == "rect" && comma != std::string::npos)
    return jbt::FactorDescriptor::rect(a, b);
  if (kind == "sym") return jbt::FactorDescriptor::sym(a);
  if (kind == "antisym") return jbt::FactorDescriptor::antisym(a);
  if (kind == "spin") return jbt::FactorDescriptor::spin(a);
  throw jbt::error("unknown factor kind '" + kind + "'");
}

struct LoadedOperand {
  jbt::SumElement x;
  bool bare;  // input was a single element, mirror that shape on output
};

LoadedOperand load_operand(const std::string& path) {
  jbt::json j = jbt::load_json_file(path);
  bool bare = !(j.is_object() && j.contains("parts"));
  return LoadedOperand{jbt::sum_from_json(j), bare};
}

jbt::json operand_json(const jbt::SumElement& x, bool bare) {
  if (bare && x.parts.size() == 1) return jbt::element_to_json(x.parts[0]);
  return jbt::sum_to_json(x);
}

const char* yn(bool b) { return b ? "true" : "false"; }

int cmd_check_truncation(const std::string& pa, const std::string& pb,
                         const Global& g) {
  jbt::Tolerance tol = make_tol(g);
  LoadedOperand a = load_operand(pa);
  LoadedOperand b = load_operand(pb);
  if (!jbt::same_descriptor(a.x.descriptor(), b.x.descriptor()))
    throw jbt::error("factor mismatch: " + jbt::descriptor_str(a.x.descriptor()) +
                     " vs " + jbt::descriptor_str(b.x.descriptor()));
  bool def = true, dec = true, pei = true;
  for (std::size_t i = 0; i < a.x.parts.size(); ++i) {
    jbt::TruncationChecks c =
        jbt::truncation_characterizations(a.x.parts[i], b.x.parts[i], tol);
    jbt::require_consistent(c);
    def = def && c.by_definition;
    dec = dec && c.by_decomposition;
    pei = pei && c.by_peirce;
  }
  if (g.json_out) {
    jbt::json out = report_head("check-truncation");
    out["tolerance"] = tol.eq_tol;
    out["by_definition"] = def;
    out["by_decomposition"] = dec;
    out["by_peirce"] = pei;
    out["verdict"] = def;
    emit(out, "");
  } else {
    std::cout << "by-definition:    " << yn(def) << "\n"
              << "by-decomposition: " << yn(dec) << "\n"
              << "by-peirce:        " << yn(pei) << "\n"
              << "verdict: a is " << (def ? "" : "not ") << "a truncation of b\n";
  }
  return def ? 0 : 1;
}

int cmd_unary(const std::string& which, const std::string& path, const Global& g) {
  jbt::Tolerance tol = make_tol(g);
  LoadedOperand in = load_operand(path);
  jbt::SumElement out;
  for (const jbt::Element& part : in.x.parts) {
    if (which == "range-tripotent")
      out.parts.push_back(jbt::range_tripotent(part, tol));
    else if (which == "cube-root")
      out.parts.push_back(jbt::cube_root(part, tol));
    else
      out.parts.push_back(jbt::generalized_inverse(part, tol));
  }
  emit(operand_json(out, in.bare), "");
  return 0;
}

int cmd_peirce(const std::string& pe, const std::string& px, const Global& g) {
  jbt::Tolerance tol = make_tol(g);
  jbt::json je = jbt::load_json_file(pe);
  jbt::Element e = jbt::element_from_json(je);
  jbt::PeirceDecomposition dec = jbt::peirce(e, tol);
  jbt::json out = report_head("peirce");
  jbt::Tripotent t = jbt::make_tripotent(e, tol);
  out["minimal"] = t.minimal;
  out["complete"] = t.complete;
  out["unitary"] = t.unitary;
  out["dims"] = jbt::json{{"p2", dec.dim2()}, {"p1", dec.dim1()}, {"p0", dec.dim0()}};
  if (!px.empty()) {
    jbt::Element x = jbt::element_from_json(jbt::load_json_file(px));
    out["p2_part"] = jbt::element_to_json(jbt::peirce2_apply(e, x));
    out["p1_part"] = jbt::element_to_json(jbt::peirce1_apply(e, x));
    out["p0_part"] = jbt::element_to_json(jbt::peirce0_apply(e, x));
  }
  if (g.json_out) {
    emit(out, "");
  } else {
    std::cout << "tripotent: minimal=" << yn(t.minimal)
              << " complete=" << yn(t.complete) << " unitary=" << yn(t.unitary)
              << "\n"
              << "peirce dims: p2=" << dec.dim2() << " p1=" << dec.dim1()
              << " p0=" << dec.dim0() << "\n";
    if (!px.empty()) emit(out, "");
  }
  return 0;
}

int cmd_tripotent_check(const std::string& pe, const Global& g) {
  jbt::Tolerance tol = make_tol(g);
  LoadedOperand in = load_operand(pe);
  bool ok = jbt::is_tripotent(in.x, tol);
  jbt::json out = report_head("tripotent-check");
  out["tripotent"] = ok;
  if (ok && in.x.parts.size() == 1) {
    jbt::Tripotent t = jbt::make_tripotent(in.x.parts[0], tol);
    out["minimal"] = t.minimal;
    out["complete"] = t.complete;
    out["unitary"] = t.unitary;
  }
  if (g.json_out) {
    emit(out, "");
  } else {
    std::cout << "tripotent: " << yn(ok) << "\n";
    if (out.contains("minimal"))
      std::cout << "minimal=" << yn(out["minimal"].get<bool>())
                << " complete=" << yn(out["complete"].get<bool>())
                << " unitary=" << yn(out["unitary"].get<bool>()) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_ttp(const std::string& pe, const std::string& pv, const Global& g) {
  jbt::Tolerance tol = make_tol(g);
  jbt::Element e = jbt::element_from_json(jbt::load_json_file(pe));
  jbt::Element v = jbt::element_from_json(jbt::load_json_file(pv));
  jbt::cxd phi = jbt::ttp(e, v, tol);
  if (g.json_out) {
    jbt::json out = report_head("ttp");
    out["ttp"] = jbt::complex_to_json(phi);
    emit(out, "");
  } else {
    std::printf("ttp = %.17g %+.17gi\n", phi.real(), phi.imag());
  }
  return 0;
}

int cmd_verify_lemmas(const std::vector<std::string>& factor_strs,
                      const std::vector<std::string>& filter,
                      const std::string& out_path, const Global& g) {
  jbt::SuiteConfig cfg;
  cfg.tol = make_tol(g);
  cfg.seed = g.seed;
  if (g.trials > 0) cfg.trials = g.trials;
  if (!factor_strs.empty()) {
    cfg.factors.clear();
    for (const std::string& s : factor_strs) cfg.factors.push_back(parse_factor(s));
  }
  auto known = jbt::registered_check_ids();
  for (const std::string& id : filter)
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw jbt::error("unknown check id '" + id + "'");
  cfg.filter = filter;

  std::vector<jbt::CheckResult> results = jbt::run_checks(cfg);

  jbt::json out = report_head("verify-lemmas");
  out["seed"] = cfg.seed;
  out["trials"] = cfg.trials;
  out["tolerance"] = cfg.tol.eq_tol;
  jbt::json jf = jbt::json::array();
  for (const auto& f : cfg.factors) jf.push_back(f.str());
  out["factors"] = jf;
  jbt::json checks = jbt::json::object();
  bool all_pass = true;
  std::string failing;
  for (const auto& r : results) {
    checks[r.id] = jbt::json{{"trials", r.trials},
                             {"failures", r.failures},
                             {"max_residual", r.max_residual},
                             {"pass", r.pass()},
                             {"note", r.note}};
    if (!r.pass()) {
      all_pass = false;
      failing += (failing.empty() ? "" : " ") + r.id;
    }
  }
  out["checks"] = checks;
  out["all_pass"] = all_pass;

  if (!out_path.empty()) emit(out, out_path);
  if (g.json_out) {
    emit(out, "");
  } else {
    for (const auto& r : results)
      std::printf("%-16s %s  trials=%ld failures=%ld max_residual=%.3e%s%s\n",
                  r.id.c_str(), r.pass() ? "pass" : "FAIL", r.trials, r.failures,
                  r.max_residual, r.note.empty() ? "" : "  ", r.note.c_str());
    std::printf("%s\n", all_pass ? "all checks passed" : "some checks FAILED");
  }
  if (!all_pass) std::fprintf(stderr, "failing checks: %s\n", failing.c_str());
  return all_pass ? 0 : 1;
}

int cmd_falsify(const std::string& map_path, const std::string& catalogue_name,
                const std::string& out_path, const Global& g) {
  jbt::Tolerance tol = make_tol(g);
  long trials = g.trials > 0 ? g.trials : 2000;
  jbt::json jmap;
  if (!map_path.empty() && !catalogue_name.empty())
    throw jbt::error("give either a recipe file or --catalogue, not both");
  if (map_path.empty() && catalogue_name.empty())
    throw jbt::error("falsify needs a recipe file or --catalogue NAME");
  if (!map_path.empty())
    jmap = jbt::load_json_file(map_path);
  else
    jmap = jbt::json{{"recipe", "catalogue"}, {"name", catalogue_name}};

  jbt::PreserverMap map = jbt::map_from_json(jmap, g.seed);

  jbt::TrialReport rep =
      jbt::preserves_truncation_of_triple_products(map, trials, g.seed, tol);
  std::vector<jbt::ConsequenceResult> cons =
      jbt::verify_consequences(map, trials, g.seed, tol);
  jbt::ClassifyReport cls = jbt::classify(map, trials, g.seed, tol);

  jbt::json out = report_head("falsify");
  out["map"] = map.label();
  out["domain"] = jbt::descriptor_str(map.domain());
  out["codomain"] = jbt::descriptor_str(map.codomain());
  out["seed"] = g.seed;
  out["trials"] = trials;
  out["tolerance"] = tol.eq_tol;
  out["preservation"] = jbt::trial_report_to_json(rep);
  jbt::json jc = jbt::json::array();
  for (const auto& c : cons) jc.push_back(jbt::consequence_to_json(c));
  out["consequences"] = jc;
  out["classification"] = jbt::classify_to_json(cls);
  if (map.domain().size() > 1)
    out["factor_matching"] =
        jbt::factor_match_to_json(jbt::factor_matching(map, g.seed, tol));
  jbt::RankOneReport ro = jbt::rank_one_preserver_check(map, trials, g.seed, tol);
  if (ro.applicable) out["rank_one"] = jbt::rank_one_to_json(ro);
  if (jmap.is_object() && jmap.value("recipe", "") == "gauge") {
    std::string fname = jmap.value("f", "identity");
    jbt::ScalarFunction fn = fname == "conjugation" ? jbt::ScalarFunction::conjugation()
                             : fname == "inverse-or-zero"
                                 ? jbt::ScalarFunction::inverse_or_zero()
                                 : jbt::ScalarFunction::identity();
    out["gauge"] = jbt::gauge_properties_to_json(
        jbt::gauge_properties(fn, 400, g.seed, tol));
  }

  if (!out_path.empty()) emit(out, out_path);
  if (g.json_out) {
    emit(out, "");
  } else {
    std::printf("map: %s\n", map.label().c_str());
    std::printf("preservation: %s  trials=%ld failures=%ld fwd+=%ld bwd+=%ld\n",
                rep.verdict.c_str(), rep.trials, rep.failures,
                rep.forward_positives, rep.backward_positives);
    std::string bad;
    for (const auto& c : cons)
      if (!c.pass()) bad += (bad.empty() ? "" : " ") + c.id;
    std::printf("consequences: %s\n", bad.empty() ? "all pass" : ("FAIL " + bad).c_str());
    std::printf("classification: %s\n", jbt::linearity_str(cls.verdict).c_str());
    if (!rep.witnesses.empty())
      std::printf("witnesses: %zu recorded (first: %s direction, residual %.3e)\n",
                  rep.witnesses.size(), rep.witnesses.front().direction.c_str(),
                  rep.witnesses.front().residual);
    std::printf("verdict: %s\n", rep.verdict == "pass"      ? "preserver"
                                 : rep.verdict == "fail"    ? "falsified"
                                                            : "inconclusive");
  }
  if (rep.verdict == "fail") return 1;
  if (rep.verdict == "inconclusive") return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator and preserver lab for finite-dimensional JB*-triples"};
  app.set_version_flag("--version", std::string("jbt ") + kVersion);
  app.require_subcommand(1);

  Global g;
  if (const char* env = std::getenv("JBT_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') g.seed = v;
  }
  app.add_option("--tol", g.tol, "equality tolerance (default 1e-9)");
  app.add_option("--seed", g.seed, "rng seed (default: env JBT_SEED, else 42)");
  app.add_option("--trials", g.trials, "trial count override");
  app.add_flag("--json", g.json_out, "machine-readable JSON on stdout");

  std::string path_a, path_b, path_x, out_path, catalogue_name;
  std::vector<std::string> factor_strs, filter;

  CLI::App* c_check = app.add_subcommand(
      "check-truncation", "decide whether element a truncates element b");
  c_check->add_option("a", path_a, "element JSON file")->required();
  c_check->add_option("b", path_b, "element JSON file")->required();

  CLI::App* c_range = app.add_subcommand("range-tripotent",
                                         "range tripotent of an element");
  CLI::App* c_cbrt = app.add_subcommand("cube-root", "odd cube root");
  CLI::App* c_gi = app.add_subcommand("gen-inverse", "generalized inverse");
  for (CLI::App* c : {c_range, c_cbrt, c_gi})
    c->add_option("a", path_a, "element JSON file")->required();

  CLI::App* c_peirce =
      app.add_subcommand("peirce", "Peirce data of a tripotent, optionally "
                                   "splitting a second element");
  c_peirce->add_option("e", path_a, "tripotent JSON file")->required();
  c_peirce->add_option("x", path_x, "element to decompose");

  CLI::App* c_trip = app.add_subcommand("tripotent-check",
                                        "test {e,e,e} = e and report flags");
  c_trip->add_option("e", path_a, "element JSON file")->required();

  CLI::App* c_ttp = app.add_subcommand(
      "ttp", "transition parameter between minimal tripotents");
  c_ttp->add_option("e", path_a, "minimal tripotent JSON file")->required();
  c_ttp->add_option("v", path_b, "minimal tripotent JSON file")->required();

  CLI::App* c_verify = app.add_subcommand("verify-lemmas",
                                          "run the registered property suites");
  c_verify->add_option("--factor", factor_strs,
                       "factor list, e.g. rect(2,2) sym(2) spin(3)");
  c_verify->add_option("--filter", filter, "check ids to run");
  c_verify->add_option("--out", out_path, "write the JSON report to a file");

  CLI::App* c_falsify = app.add_subcommand(
      "falsify", "test a map recipe for preservation of truncations of "
                 "triple products");
  c_falsify->add_option("map", path_a, "map recipe JSON file");
  c_falsify->add_option("--catalogue", catalogue_name,
                        "built-in map name instead of a recipe file");
  c_falsify->add_option("--out", out_path, "write the JSON report to a file");

  for (CLI::App* c : app.get_subcommands({})) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return cmd_check_truncation(path_a, path_b, g);
    if (c_range->parsed()) return cmd_unary("range-tripotent", path_a, g);
    if (c_cbrt->parsed()) return cmd_unary("cube-root", path_a, g);
    if (c_gi->parsed()) return cmd_unary("gen-inverse", path_a, g);
    if (c_peirce->parsed()) return cmd_peirce(path_a, path_x, g);
    if (c_trip->parsed()) return cmd_tripotent_check(path_a, g);
    if (c_ttp->parsed()) return cmd_ttp(path_a, path_b, g);
    if (c_verify->parsed())
      return cmd_verify_lemmas(factor_strs, filter, out_path, g);
    if (c_falsify->parsed())
      return cmd_falsify(path_a, catalogue_name, out_path, g);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
