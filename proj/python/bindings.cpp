#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fincat/io_json.hpp"
#include "fincat/kan.hpp"

// Python surface: the main operations, bridged through the same JSON
// documents the command-line front end uses, plus direct entry points for
// the small numeric calculi (monotone maps, pasting diagrams, Kleisli homs).

namespace py = pybind11;
using fincat::io::json;

namespace {

json parse(const std::string& text) { return json::parse(text); }

std::string nerve_json(const std::string& category, int trunc) {
  auto c = fincat::io::category_from_json(parse(category));
  return fincat::io::simplicial_to_json(fincat::simp::nerve(c, trunc)).dump();
}

py::dict nerve_counts(const std::string& category, int trunc) {
  auto c = fincat::io::category_from_json(parse(category));
  auto x = fincat::simp::nerve(c, trunc);
  py::list sizes, nondeg;
  for (int n = 0; n <= x.trunc; ++n) {
    sizes.append(x.levels[n].size());
    nondeg.append(x.levels[n].size() - fincat::simp::count_degenerate(x, n));
  }
  py::dict out;
  out["level_sizes"] = sizes;
  out["nondegenerate"] = nondeg;
  return out;
}

py::dict segal_check(const std::string& simplicial) {
  auto x = fincat::io::simplicial_from_json(parse(simplicial));
  auto res = fincat::simp::segal_check(x);
  py::dict out;
  out["ok"] = res.ok;
  out["vacuous"] = res.vacuous;
  if (!res.ok) {
    out["p"] = res.p;
    out["q"] = res.q;
    out["witness"] = res.witness;
  }
  return out;
}

std::string categorify(const std::string& simplicial) {
  auto x = fincat::io::simplicial_from_json(parse(simplicial));
  auto res = fincat::simp::categorify(x);
  return fincat::io::category_to_json(res.category).dump();
}

py::dict normal_form(int dom, int cod, const std::vector<int>& values) {
  fincat::simp::MonotoneMap f{dom, cod, values};
  auto nf = fincat::simp::normal_form(f);
  py::dict out;
  out["deltas"] = nf.deltas;
  out["sigmas"] = nf.sigmas;
  return out;
}

std::vector<int> compose_monotone(int a, int b, const std::vector<int>& f, int c,
                                  const std::vector<int>& g) {
  fincat::simp::MonotoneMap mf{a, b, f}, mg{b, c, g};
  return fincat::simp::compose_monotone(mf, mg).values;
}

std::size_t monotone_count(int m, int n) { return fincat::simp::all_monotone(m, n).size(); }

std::size_t kleisli_hom_count(int m, int n) {
  return fincat::freecat::kleisli_arity_hom(m, n).size();
}

std::vector<int> pd_compose(const std::vector<int>& outer, const py::list& columns) {
  fincat::glob::Pd2 shape{outer};
  std::vector<fincat::glob::ColumnFill> fills;
  for (const auto& col : columns) {
    fincat::glob::ColumnFill fill;
    if (py::isinstance<py::int_>(col)) {
      fill.path_len = col.cast<int>();
    } else {
      for (const auto& entry : col.cast<py::list>())
        fill.stack.push_back(fincat::glob::Pd2{entry.cast<std::vector<int>>()});
    }
    fills.push_back(fill);
  }
  return fincat::glob::pd_compose(shape, fills).heights;
}

std::string factorize(const std::string& graph, const std::string& morphism) {
  auto g = fincat::io::graph_from_json(parse(graph));
  auto m = fincat::io::path_morphism_from_json(parse(morphism), g);
  return fincat::io::factorization_to_json(fincat::freecat::arity_factorize(g, m)).dump();
}

std::string density_check(const std::string& graph, int bound) {
  auto g = fincat::io::graph_from_json(parse(graph));
  auto rep = fincat::kan::density_check_graph(g, bound);
  return rep.verdict == fincat::kan::DensityVerdict::Isomorphism ? "isomorphism" : "undetermined";
}

std::string store_normalize(const std::string& term) {
  auto f = fincat::io::store_term_from_json(parse(term));
  auto res = fincat::eff::normalize_store_term(f.term, f.store, f.vars);
  return fincat::io::store_term_to_json(res.term, f.store, f.vars).dump();
}

std::string store_canonical(const std::string& term) {
  auto f = fincat::io::store_term_from_json(parse(term));
  auto d = fincat::eff::denote_store_term(f.term, f.store, f.vars);
  return fincat::io::store_term_to_json(fincat::eff::canonical_store_term(d, f.store, f.vars),
                                        f.store, f.vars)
      .dump();
}

bool store_equivalent(const std::string& a, const std::string& b) {
  auto fa = fincat::io::store_term_from_json(parse(a));
  auto fb = fincat::io::store_term_from_json(parse(b));
  return fincat::eff::denote_store_term(fa.term, fa.store, fa.vars).table ==
         fincat::eff::denote_store_term(fb.term, fb.store, fb.vars).table;
}

bool strongly_regular(const std::string& equation) {
  return fincat::opd::strongly_regular(fincat::io::equation_from_json(parse(equation)));
}

std::vector<std::string> operad_validate(const std::string& operad) {
  auto c = fincat::io::operad_from_json(parse(operad), false);
  std::vector<std::string> out;
  for (const auto& v : fincat::opd::validate_operad(c).violations)
    out.push_back(v.rule + ": " + v.detail);
  return out;
}

bool operad_iso(const std::string& operad, int max_size) {
  auto c = fincat::io::operad_from_json(parse(operad));
  std::vector<int> sizes;
  for (int s = 0; s <= max_size; ++s) sizes.push_back(s);
  return fincat::opd::monad_iso_check(c, sizes);
}

py::dict theta_hom_sizes(const std::string& monad, int bound) {
  auto spec = fincat::io::monad_spec_from_json(parse(monad));
  fincat::eff::FinMonad m = spec.name == "state"
                                ? fincat::eff::state_monad(spec.store)
                                : fincat::eff::classic_monad(spec.name, spec.exceptions);
  fincat::FinCategory theta = fincat::eff::theta_finitary(m, bound);
  py::dict out;
  for (const auto& a : theta.objects)
    for (const auto& b : theta.objects)
      out[py::str(a + "->" + b)] = theta.hom(a, b).size();
  return out;
}

std::vector<std::string> validate(const std::string& text) {
  json j = parse(text);
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
    throw std::invalid_argument("no validator for kind \"" + kind + "\"");
  }
  std::vector<std::string> out;
  for (const auto& v : r.violations) out.push_back(v.rule + ": " + v.detail);
  return out;
}

std::size_t free_paths_count(const std::string& graph, int maxlen) {
  auto g = fincat::io::graph_from_json(parse(graph));
  return fincat::freecat::free_paths(g, maxlen).size();
}

std::size_t free2_count(const std::string& globular, int bound) {
  auto g = fincat::io::globular_from_json(parse(globular));
  return fincat::glob::free2_cells(g, bound).size();
}

}  // namespace

PYBIND11_MODULE(_fincat, m) {
  m.doc() = "finite category theory workbench";
  m.def("nerve_json", &nerve_json, py::arg("category_json"), py::arg("trunc") = 3);
  m.def("nerve_counts", &nerve_counts, py::arg("category_json"), py::arg("trunc") = 3);
  m.def("segal_check", &segal_check, py::arg("simplicial_json"));
  m.def("categorify", &categorify, py::arg("simplicial_json"));
  m.def("normal_form", &normal_form, py::arg("dom"), py::arg("cod"), py::arg("values"));
  m.def("compose_monotone", &compose_monotone);
  m.def("monotone_count", &monotone_count, py::arg("m"), py::arg("n"));
  m.def("kleisli_hom_count", &kleisli_hom_count, py::arg("m"), py::arg("n"));
  m.def("pd_compose", &pd_compose, py::arg("outer"), py::arg("columns"));
  m.def("factorize", &factorize, py::arg("graph_json"), py::arg("morphism_json"));
  m.def("density_check", &density_check, py::arg("graph_json"), py::arg("bound") = 3);
  m.def("store_normalize", &store_normalize, py::arg("term_json"));
  m.def("store_canonical", &store_canonical, py::arg("term_json"));
  m.def("store_equivalent", &store_equivalent, py::arg("a_json"), py::arg("b_json"));
  m.def("strongly_regular", &strongly_regular, py::arg("equation_json"));
  m.def("operad_validate", &operad_validate, py::arg("operad_json"));
  m.def("operad_iso", &operad_iso, py::arg("operad_json"), py::arg("max_size") = 3);
  m.def("theta_hom_sizes", &theta_hom_sizes, py::arg("monad_json"), py::arg("bound") = 2);
  m.def("validate", &validate, py::arg("json_text"));
  m.def("free_paths_count", &free_paths_count, py::arg("graph_json"), py::arg("maxlen"));
  m.def("free2_count", &free2_count, py::arg("globular_json"), py::arg("bound") = 2);
}
