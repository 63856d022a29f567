#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fincat/io_json.hpp"
#include "fincat/kan.hpp"

// Batch front end. Every command reads JSON inputs, runs one computation and
// emits a single JSON report (stdout, and --out when given). Exit codes:
// 0 pass/success, 1 failed check (witness in the report), 2 input error.

namespace {

using fincat::io::json;

struct Options {
  std::vector<std::string> inputs;
  int bound = 3;
  int trunc = 3;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.inputs, "input file (repeatable)")->required();
  cmd->add_option("--bound", opt.bound, "search / size bound")->check(CLI::NonNegativeNumber);
  cmd->add_option("--trunc", opt.trunc, "truncation level")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", opt.out, "write the report here as well");
  cmd->add_option("--format", opt.format, "output format (json)");
}

int emit(const Options& opt, json report, bool pass) {
  report["pass"] = pass;
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    f << text;
  }
  return pass ? 0 : 1;
}

json base_report(const std::string& command, const Options& opt) {
  json j;
  j["command"] = command;
  j["inputs"] = opt.inputs;
  j["bounds"] = {{"bound", opt.bound}, {"trunc", opt.trunc}};
  return j;
}

int run_validate(const Options& opt) {
  json report = base_report("validate", opt);
  json results = json::array();
  bool all_ok = true;
  for (const auto& path : opt.inputs) {
    json j = fincat::io::load_file(path);
    std::string kind = fincat::io::kind_of(j);
    fincat::Report r;
    if (kind == "category") r = fincat::validate_category(fincat::io::category_from_json(j, false));
    else if (kind == "graph") r = fincat::io::graph_from_json(j, false).validate();
    else if (kind == "simplicial") r = fincat::io::simplicial_from_json(j, false).validate();
    else if (kind == "globular2") r = fincat::io::globular_from_json(j, false).validate();
    else if (kind == "operad") r = fincat::opd::validate_operad(fincat::io::operad_from_json(j, false));
    else if (kind == "store-term") {
      auto f = fincat::io::store_term_from_json(j, false);
      r = fincat::eff::validate_term(f.term, f.store, f.vars);
    } else {
      throw std::invalid_argument(path + ": no validator for kind \"" + kind + "\"");
    }
    json one;
    one["input"] = path;
    one["kind"] = kind;
    one["valid"] = r.ok();
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
    one["violations"] = violations;
    results.push_back(one);
    all_ok = all_ok && r.ok();
  }
  report["result"] = results;
  return emit(opt, report, all_ok);
}

int run_nerve(const Options& opt) {
  json report = base_report("nerve", opt);
  fincat::FinCategory c = fincat::io::category_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto x = fincat::simp::nerve(c, opt.trunc);
  json result;
  json sizes = json::array(), nondeg = json::array();
  for (int n = 0; n <= x.trunc; ++n) {
    sizes.push_back(x.levels[n].size());
    nondeg.push_back(x.levels[n].size() - fincat::simp::count_degenerate(x, n));
  }
  result["level_sizes"] = sizes;
  result["nondegenerate"] = nondeg;
  result["simplicial"] = fincat::io::simplicial_to_json(x);
  report["result"] = result;
  return emit(opt, report, true);
}

int run_segal(const Options& opt) {
  json report = base_report("segal", opt);
  auto x = fincat::io::simplicial_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto res = fincat::simp::segal_check(x);
  json result;
  result["ok"] = res.ok;
  result["vacuous"] = res.vacuous;
  if (!res.ok) {
    result["p"] = res.p;
    result["q"] = res.q;
    result["witness"] = res.witness;
  }
  report["result"] = result;
  return emit(opt, report, res.ok);
}

int run_categorify(const Options& opt) {
  json report = base_report("categorify", opt);
  auto x = fincat::io::simplicial_from_json(fincat::io::load_file(opt.inputs.at(0)));
  try {
    auto res = fincat::simp::categorify(x);
    json result;
    result["associativity_certified"] = res.associativity_certified;
    result["category"] = fincat::io::category_to_json(res.category);
    report["result"] = result;
    return emit(opt, report, true);
  } catch (const std::invalid_argument& e) {
    report["result"] = {{"error", e.what()}};
    return emit(opt, report, false);
  }
}

int run_kan(const Options& opt) {
  json report = base_report("kan", opt);
  auto source = std::make_shared<fincat::FinCategory>(
      fincat::io::category_from_json(fincat::io::load_file(opt.inputs.at(0))));
  auto target = std::make_shared<fincat::FinCategory>(
      fincat::io::category_from_json(fincat::io::load_file(opt.inputs.at(1))));
  auto ff = fincat::io::functor_from_json(fincat::io::load_file(opt.inputs.at(2)));
  auto sf = fincat::io::set_functor_from_json(fincat::io::load_file(opt.inputs.at(3)));

  fincat::FinFunctor i;
  i.source = source;
  i.target = target;
  i.object_map = ff.object_map;
  i.arrow_map = ff.arrow_map;
  fincat::Report fr = i.validate();
  if (!fr.ok())
    throw std::invalid_argument("functor violates invariant " + fr.violations[0].rule + ": " +
                                fr.violations[0].detail);
  fincat::SetFunctor f;
  f.base = source;
  f.carrier = sf.carrier;
  f.action = sf.action;
  fincat::Report sr = f.validate();
  if (!sr.ok())
    throw std::invalid_argument("set-functor violates invariant " + sr.violations[0].rule + ": " +
                                sr.violations[0].detail);

  auto lan = fincat::kan::pointwise_lan(f, i);
  json result;
  json values;
  for (const auto& e : target->objects) values[e] = lan.lan.at(e);
  result["values"] = values;
  result["fully_faithful"] = i.fully_faithful();
  report["result"] = result;
  return emit(opt, report, true);
}

int run_density(const Options& opt) {
  json report = base_report("density", opt);
  json results = json::array();
  bool all_iso = true;
  for (const auto& path : opt.inputs) {
    auto g = fincat::io::graph_from_json(fincat::io::load_file(path));
    auto rep = fincat::kan::density_check_graph(g, opt.bound);
    bool iso = rep.verdict == fincat::kan::DensityVerdict::Isomorphism;
    results.push_back({{"input", path},
                       {"verdict", iso ? "isomorphism" : "undetermined"},
                       {"detail", rep.detail}});
    all_iso = all_iso && iso;
  }
  report["result"] = results;
  return emit(opt, report, all_iso);
}

int run_factorize(const Options& opt) {
  json report = base_report("factorize", opt);
  auto g = fincat::io::graph_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto m = fincat::io::path_morphism_from_json(fincat::io::load_file(opt.inputs.at(1)), g);
  auto fact = fincat::freecat::arity_factorize(g, m);
  json result;
  result["middle_arity"] = fact.p;
  result["factorization"] = fincat::io::factorization_to_json(fact);
  report["result"] = result;
  return emit(opt, report, true);
}

int run_zigzag(const Options& opt) {
  json report = base_report("zigzag", opt);
  auto g = fincat::io::graph_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto a = fincat::io::factorization_from_json(fincat::io::load_file(opt.inputs.at(1)));
  auto b = fincat::io::factorization_from_json(fincat::io::load_file(opt.inputs.at(2)));
  auto res = fincat::freecat::zigzag_equivalent(g, a, b, opt.bound);
  json result;
  result["same_arrow"] = res.same_arrow;
  switch (res.status) {
    case fincat::freecat::ZigzagStatus::YesDirect: result["status"] = "yes-direct-mediator"; break;
    case fincat::freecat::ZigzagStatus::YesChain: result["status"] = "yes-chain"; break;
    case fincat::freecat::ZigzagStatus::NoWithinBound: result["status"] = "no-within-bound"; break;
  }
  result["chain_middles"] = res.chain_middles;
  report["result"] = result;
  bool pass = res.same_arrow && res.status != fincat::freecat::ZigzagStatus::NoWithinBound;
  return emit(opt, report, pass);
}

int run_pd_compose(const Options& opt) {
  json report = base_report("pd-compose", opt);
  auto sub = fincat::io::pd2_substitution_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto composite = fincat::glob::pd_compose(sub.outer, sub.fills);
  json result;
  result["composite"] = fincat::io::pd2_to_json(composite);
  report["result"] = result;
  return emit(opt, report, true);
}

int run_free2(const Options& opt) {
  json report = base_report("free2", opt);
  auto g = fincat::io::globular_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto cells = fincat::glob::free2_cells(g, opt.bound);
  std::map<std::string, int> by_shape;
  for (const auto& c : cells) by_shape[c.shape.encode()]++;
  json result;
  result["total"] = cells.size();
  result["by_shape"] = by_shape;
  report["result"] = result;
  return emit(opt, report, true);
}

int run_store_normalize(const Options& opt) {
  json report = base_report("store-normalize", opt);
  auto f = fincat::io::store_term_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto res = fincat::eff::normalize_store_term(f.term, f.store, f.vars);
  json result;
  result["budget_exceeded"] = res.budget_exceeded;
  result["steps"] = res.steps;
  result["normal_form"] = fincat::io::store_term_to_json(res.term, f.store, f.vars);
  result["denotation_preserved"] =
      fincat::eff::denote_store_term(f.term, f.store, f.vars).table ==
      fincat::eff::denote_store_term(res.term, f.store, f.vars).table;
  report["result"] = result;
  return emit(opt, report, !res.budget_exceeded && result["denotation_preserved"].get<bool>());
}

int run_store_canonical(const Options& opt) {
  json report = base_report("store-canonical", opt);
  auto f = fincat::io::store_term_from_json(fincat::io::load_file(opt.inputs.at(0)));
  auto denot = fincat::eff::denote_store_term(f.term, f.store, f.vars);
  auto canon = fincat::eff::canonical_store_term(denot, f.store, f.vars);
  json result;
  result["canonical"] = fincat::io::store_term_to_json(canon, f.store, f.vars);
  result["round_trip"] =
      fincat::eff::denote_store_term(canon, f.store, f.vars).table == denot.table;
  report["result"] = result;
  return emit(opt, report, result["round_trip"].get<bool>());
}

int run_theta(const Options& opt) {
  json report = base_report("theta", opt);
  auto spec = fincat::io::monad_spec_from_json(fincat::io::load_file(opt.inputs.at(0)));
  fincat::eff::FinMonad monad =
      spec.name == "state" ? fincat::eff::state_monad(spec.store)
                           : fincat::eff::classic_monad(spec.name, spec.exceptions);
  fincat::FinCategory theta = fincat::eff::theta_finitary(monad, opt.bound);
  fincat::Report r = fincat::validate_category(theta);
  json result;
  result["monad"] = spec.name;
  json homs;
  for (const auto& a : theta.objects)
    for (const auto& b : theta.objects)
      homs[a + "->" + b] = theta.hom(a, b).size();
  result["hom_sizes"] = homs;
  result["valid_category"] = r.ok();
  report["result"] = result;
  return emit(opt, report, r.ok());
}

int run_operad_validate(const Options& opt) {
  json report = base_report("operad-validate", opt);
  auto c = fincat::io::operad_from_json(fincat::io::load_file(opt.inputs.at(0)), false);
  fincat::Report r = fincat::opd::validate_operad(c);
  json result;
  result["valid"] = r.ok();
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
  result["violations"] = violations;
  report["result"] = result;
  return emit(opt, report, r.ok());
}

int run_operad_iso(const Options& opt) {
  json report = base_report("operad-iso", opt);
  auto c = fincat::io::operad_from_json(fincat::io::load_file(opt.inputs.at(0)));
  std::vector<int> sizes;
  for (int s = 0; s <= opt.bound; ++s) sizes.push_back(s);
  bool iso = fincat::opd::monad_iso_check(c, sizes);
  report["result"] = {{"reversal_is_monad_iso", iso}};
  return emit(opt, report, iso);
}

int run_strongly_regular(const Options& opt) {
  json report = base_report("strongly-regular", opt);
  auto eq = fincat::io::equation_from_json(fincat::io::load_file(opt.inputs.at(0)));
  report["result"] = {{"strongly_regular", fincat::opd::strongly_regular(eq)}};
  return emit(opt, report, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite category theory workbench"};
  app.require_subcommand(1);

  std::map<std::string, std::pair<Options, std::function<int(const Options&)>>> commands;
  auto reg = [&](const std::string& name, std::function<int(const Options&)> fn) {
    CLI::App* cmd = app.add_subcommand(name);
    commands[name] = {Options{}, std::move(fn)};
    add_common(cmd, commands[name].first);
  };
  reg("validate", run_validate);
  reg("nerve", run_nerve);
  reg("segal", run_segal);
  reg("categorify", run_categorify);
  reg("kan", run_kan);
  reg("density", run_density);
  reg("factorize", run_factorize);
  reg("zigzag", run_zigzag);
  reg("pd-compose", run_pd_compose);
  reg("free2", run_free2);
  reg("store-normalize", run_store_normalize);
  reg("store-canonical", run_store_canonical);
  reg("theta", run_theta);
  reg("operad-validate", run_operad_validate);
  reg("operad-iso", run_operad_iso);
  reg("strongly-regular", run_strongly_regular);

  CLI11_PARSE(app, argc, argv);
  try {
    for (auto& [name, entry] : commands)
      if (app.get_subcommand(name)->parsed()) return entry.second(entry.first);
    std::cerr << "no command selected\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
