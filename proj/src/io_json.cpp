#include "fincat/io_json.hpp"

#include <fstream>

namespace fincat::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void require_kind(const json& j, const std::string& kind) {
  if (kind_of(j) != kind) bad("expected kind \"" + kind + "\", found \"" + kind_of(j) + "\"");
}

std::vector<std::string> string_array(const json& j, const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_array()) bad("field \"" + field + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : j.at(field)) out.push_back(e.get<std::string>());
  return out;
}

std::map<std::string, std::string> string_map(const json& j) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = v.get<std::string>();
  return out;
}

void check_report(const Report& r, const std::string& what) {
  if (r.ok()) return;
  bad(what + " violates invariant " + r.violations[0].rule + ": " + r.violations[0].detail);
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("missing top-level \"kind\"");
  return j.at("kind").get<std::string>();
}

FinCategory category_from_json(const json& j, bool check) {
  require_kind(j, "category");
  FinCategory c;
  c.objects = string_array(j, "objects");
  for (const auto& a : j.at("arrows"))
    c.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                        a.at("tgt").get<std::string>()});
  for (const auto& [o, a] : j.at("identities").items()) c.identity[o] = a.get<std::string>();
  for (const auto& e : j.at("compositions"))
    c.composition[{e.at("first").get<std::string>(), e.at("then").get<std::string>()}] =
        e.at("equals").get<std::string>();
  if (check) check_report(validate_category(c), "category");
  return c;
}

json category_to_json(const FinCategory& c) {
  json j;
  j["kind"] = "category";
  j["objects"] = c.objects;
  json arrows = json::array();
  for (const auto& a : c.arrows) arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  j["arrows"] = arrows;
  j["identities"] = c.identity;
  json comps = json::array();
  for (const auto& [fg, h] : c.composition)
    comps.push_back({{"first", fg.first}, {"then", fg.second}, {"equals", h}});
  j["compositions"] = comps;
  return j;
}

freecat::Graph graph_from_json(const json& j, bool check) {
  require_kind(j, "graph");
  freecat::Graph g;
  g.vertices = string_array(j, "vertices");
  for (const auto& e : j.at("edges")) {
    std::string id = e.at("id").get<std::string>();
    g.edges.push_back(id);
    g.src[id] = e.at("src").get<std::string>();
    g.tgt[id] = e.at("tgt").get<std::string>();
  }
  if (check) check_report(g.validate(), "graph");
  return g;
}

json graph_to_json(const freecat::Graph& g) {
  json j;
  j["kind"] = "graph";
  j["vertices"] = g.vertices;
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"id", e}, {"src", g.src.at(e)}, {"tgt", g.tgt.at(e)}});
  j["edges"] = edges;
  return j;
}

simp::TruncSimplicialSet simplicial_from_json(const json& j, bool check) {
  require_kind(j, "simplicial");
  simp::TruncSimplicialSet x;
  x.trunc = j.at("trunc").get<int>();
  for (const auto& lvl : j.at("levels")) {
    std::vector<std::string> elems;
    for (const auto& e : lvl) elems.push_back(e.get<std::string>());
    x.levels.push_back(elems);
  }
  x.face.resize(x.trunc + 1);
  x.degen.resize(x.trunc + 1);
  for (int n = 1; n <= x.trunc; ++n) x.face[n].resize(n + 1);
  for (int n = 0; n < x.trunc; ++n) x.degen[n].resize(n + 1);
  for (const auto& f : j.at("faces")) {
    int lvl = f.at("level").get<int>();
    int i = f.at("index").get<int>();
    if (lvl < 1 || lvl > x.trunc || i < 0 || i > lvl) bad("face action out of range");
    x.face[lvl][i] = string_map(f.at("map"));
  }
  for (const auto& d : j.at("degeneracies")) {
    int lvl = d.at("level").get<int>();
    int i = d.at("index").get<int>();
    if (lvl < 0 || lvl >= x.trunc || i < 0 || i > lvl) bad("degeneracy action out of range");
    x.degen[lvl][i] = string_map(d.at("map"));
  }
  if (check) check_report(x.validate(), "simplicial set");
  return x;
}

json simplicial_to_json(const simp::TruncSimplicialSet& x) {
  json j;
  j["kind"] = "simplicial";
  j["trunc"] = x.trunc;
  j["levels"] = x.levels;
  json faces = json::array();
  for (int n = 1; n <= x.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      faces.push_back({{"level", n}, {"index", i}, {"map", x.face[n][i]}});
  j["faces"] = faces;
  json degen = json::array();
  for (int n = 0; n < x.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      degen.push_back({{"level", n}, {"index", i}, {"map", x.degen[n][i]}});
  j["degeneracies"] = degen;
  return j;
}

glob::GlobularSet2 globular_from_json(const json& j, bool check) {
  require_kind(j, "globular2");
  glob::GlobularSet2 g;
  g.cells0 = string_array(j, "cells0");
  for (const auto& a : j.at("cells1")) {
    std::string id = a.at("id").get<std::string>();
    g.cells1.push_back(id);
    g.s1[id] = a.at("src").get<std::string>();
    g.t1[id] = a.at("tgt").get<std::string>();
  }
  for (const auto& c : j.at("cells2")) {
    std::string id = c.at("id").get<std::string>();
    g.cells2.push_back(id);
    g.s2[id] = c.at("src").get<std::string>();
    g.t2[id] = c.at("tgt").get<std::string>();
  }
  if (check) check_report(g.validate(), "globular set");
  return g;
}

json globular_to_json(const glob::GlobularSet2& g) {
  json j;
  j["kind"] = "globular2";
  j["cells0"] = g.cells0;
  json c1 = json::array(), c2 = json::array();
  for (const auto& a : g.cells1)
    c1.push_back({{"id", a}, {"src", g.s1.at(a)}, {"tgt", g.t1.at(a)}});
  for (const auto& c : g.cells2)
    c2.push_back({{"id", c}, {"src", g.s2.at(c)}, {"tgt", g.t2.at(c)}});
  j["cells1"] = c1;
  j["cells2"] = c2;
  return j;
}

glob::Pd2 pd2_from_json(const json& j) {
  require_kind(j, "pd2");
  glob::Pd2 p;
  for (const auto& h : j.at("heights")) {
    int v = h.get<int>();
    if (v < 0) bad("pasting diagram heights must be nonnegative");
    p.heights.push_back(v);
  }
  return p;
}

json pd2_to_json(const glob::Pd2& p) {
  json j;
  j["kind"] = "pd2";
  j["heights"] = p.heights;
  return j;
}

Pd2SubstitutionFile pd2_substitution_from_json(const json& j) {
  require_kind(j, "pd2-substitution");
  Pd2SubstitutionFile out;
  for (const auto& h : j.at("outer")) out.outer.heights.push_back(h.get<int>());
  for (const auto& col : j.at("columns")) {
    glob::ColumnFill fill;
    if (col.contains("stack")) {
      for (const auto& entry : col.at("stack")) {
        glob::Pd2 p;
        for (const auto& h : entry) p.heights.push_back(h.get<int>());
        fill.stack.push_back(p);
      }
    } else if (col.contains("path")) {
      fill.path_len = col.at("path").get<int>();
    } else {
      bad("substitution column needs \"stack\" or \"path\"");
    }
    out.fills.push_back(fill);
  }
  return out;
}

namespace {

eff::StoreTerm term_from_json(const json& j) {
  if (j.contains("var")) return eff::make_var(j.at("var").get<int>());
  if (j.contains("lookup")) {
    std::vector<eff::StoreTerm> branches;
    for (const auto& b : j.at("branches")) branches.push_back(term_from_json(b));
    return eff::make_lookup(j.at("lookup").get<std::string>(), branches);
  }
  if (j.contains("update"))
    return eff::make_update(j.at("update").get<std::string>(), j.at("value").get<std::string>(),
                            term_from_json(j.at("body")));
  bad("store term node needs \"var\", \"lookup\" or \"update\"");
}

json term_to_json(const eff::StoreTerm& t) {
  json j;
  switch (t.kind) {
    case eff::StoreTerm::Var: j["var"] = t.var_index; break;
    case eff::StoreTerm::Lookup: {
      j["lookup"] = t.loc;
      json branches = json::array();
      for (const auto& b : t.children) branches.push_back(term_to_json(b));
      j["branches"] = branches;
      break;
    }
    case eff::StoreTerm::Update:
      j["update"] = t.loc;
      j["value"] = t.val;
      j["body"] = term_to_json(t.children[0]);
      break;
  }
  return j;
}

}  // namespace

StoreTermFile store_term_from_json(const json& j, bool check) {
  require_kind(j, "store-term");
  StoreTermFile out;
  out.store.locations = string_array(j, "locations");
  out.store.values = string_array(j, "values");
  out.vars = j.at("vars").get<int>();
  out.term = term_from_json(j.at("term"));
  if (check) check_report(eff::validate_term(out.term, out.store, out.vars), "store term");
  return out;
}

json store_term_to_json(const eff::StoreTerm& t, const eff::Store& store, int vars) {
  json j;
  j["kind"] = "store-term";
  j["locations"] = store.locations;
  j["values"] = store.values;
  j["vars"] = vars;
  j["term"] = term_to_json(t);
  return j;
}

opd::Operad operad_from_json(const json& j, bool check) {
  require_kind(j, "operad");
  opd::Operad c;
  c.max_arity = j.at("max_arity").get<int>();
  c.ops.resize(c.max_arity + 1);
  for (const auto& [arity, names] : j.at("operations").items()) {
    int n = std::stoi(arity);
    if (n < 0 || n > c.max_arity) bad("operation arity out of range");
    for (const auto& name : names) c.ops[n].push_back(name.get<std::string>());
  }
  c.identity = j.at("identity").get<std::string>();
  for (const auto& e : j.at("compositions")) {
    std::vector<std::string> args;
    for (const auto& a : e.at("args")) args.push_back(a.get<std::string>());
    std::string result = e.at("result").get<std::string>();
    if (c.arity_of(result) < 0) bad("composition result " + result + " is not an operation");
    c.comp[{e.at("op").get<std::string>(), args}] = result;
  }
  if (check) check_report(opd::validate_operad(c), "operad");
  return c;
}

json operad_to_json(const opd::Operad& c) {
  json j;
  j["kind"] = "operad";
  j["max_arity"] = c.max_arity;
  json ops;
  for (int n = 0; n <= c.max_arity; ++n) ops[std::to_string(n)] = c.ops[n];
  j["operations"] = ops;
  j["identity"] = c.identity;
  json comps = json::array();
  for (const auto& [key, val] : c.comp)
    comps.push_back({{"op", key.first}, {"args", key.second}, {"result", val}});
  j["compositions"] = comps;
  return j;
}

namespace {

opd::EquationTree::Term eq_term_from_json(const json& j) {
  if (j.contains("var")) return {true, j.at("var").get<std::string>(), {}};
  opd::EquationTree::Term t;
  t.is_var = false;
  t.name = j.at("op").get<std::string>();
  if (j.contains("args"))
    for (const auto& a : j.at("args")) t.args.push_back(eq_term_from_json(a));
  return t;
}

}  // namespace

opd::EquationTree equation_from_json(const json& j) {
  require_kind(j, "equation");
  return {eq_term_from_json(j.at("left")), eq_term_from_json(j.at("right"))};
}

freecat::PathMorphism path_morphism_from_json(const json& j, const freecat::Graph& g) {
  require_kind(j, "graph-to-paths");
  freecat::PathMorphism m;
  m.start = j.at("start").get<std::string>();
  for (const auto& p : j.at("paths")) {
    freecat::Path path;
    path.start = p.at("start").get<std::string>();
    for (const auto& e : p.at("edges")) path.edges.push_back(e.get<std::string>());
    m.edge_paths.push_back(path);
  }
  check_report(m.validate(g), "path morphism");
  return m;
}

json factorization_to_json(const freecat::ArityFactorization& f) {
  json j;
  j["kind"] = "arity-factorization";
  j["n"] = f.n;
  j["p"] = f.p;
  json e;
  e["start"] = f.e.start;
  json paths = json::array();
  for (const auto& p : f.e.edge_paths) paths.push_back({{"start", p.start}, {"edges", p.edges}});
  e["paths"] = paths;
  j["e"] = e;
  json fm;
  fm["vertices"] = f.f.vertex_map;
  fm["edges"] = f.f.edge_map;
  j["f"] = fm;
  return j;
}

freecat::ArityFactorization factorization_from_json(const json& j) {
  require_kind(j, "arity-factorization");
  freecat::ArityFactorization f;
  f.n = j.at("n").get<int>();
  f.p = j.at("p").get<int>();
  f.e.start = j.at("e").at("start").get<std::string>();
  for (const auto& p : j.at("e").at("paths")) {
    freecat::Path path;
    path.start = p.at("start").get<std::string>();
    for (const auto& e : p.at("edges")) path.edges.push_back(e.get<std::string>());
    f.e.edge_paths.push_back(path);
  }
  f.f.vertex_map = string_map(j.at("f").at("vertices"));
  f.f.edge_map = string_map(j.at("f").at("edges"));
  return f;
}

MonadSpec monad_spec_from_json(const json& j) {
  require_kind(j, "monad");
  MonadSpec spec;
  spec.name = j.at("name").get<std::string>();
  if (spec.name == "exceptions") spec.exceptions = string_array(j, "exceptions");
  if (spec.name == "state") {
    spec.store.locations = string_array(j, "locations");
    spec.store.values = string_array(j, "values");
  }
  return spec;
}

FunctorFile functor_from_json(const json& j) {
  require_kind(j, "functor");
  FunctorFile f;
  for (const auto& [k, v] : j.at("objects").items()) f.object_map[k] = v.get<std::string>();
  for (const auto& [k, v] : j.at("arrows").items()) f.arrow_map[k] = v.get<std::string>();
  return f;
}

SetFunctorFile set_functor_from_json(const json& j) {
  require_kind(j, "set-functor");
  SetFunctorFile f;
  for (const auto& [k, v] : j.at("carrier").items()) {
    std::vector<std::string> xs;
    for (const auto& e : v) xs.push_back(e.get<std::string>());
    f.carrier[k] = xs;
  }
  for (const auto& [k, v] : j.at("action").items()) f.action[k] = string_map(v);
  return f;
}

}  // namespace fincat::io
