#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fincat/kan.hpp"
#include "helpers.hpp"

using namespace fincat;
using namespace fincat::kan;
using namespace testutil;
using freecat::Graph;
using freecat::linear_quiver;

namespace {

// naive closure oracle over tagged elements, independent of union-find
template <typename Tag>
std::size_t closure_class_count(const std::vector<Tag>& elems,
                                const std::vector<std::pair<Tag, Tag>>& rel,
                                std::map<Tag, int>* cls_out = nullptr) {
  std::map<Tag, int> cls;
  int next = 0;
  for (const auto& e : elems) cls[e] = next++;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : rel) {
      int ca = cls.at(a), cb = cls.at(b);
      if (ca == cb) continue;
      int lo = std::min(ca, cb);
      for (auto& [t, c] : cls)
        if (c == ca || c == cb) c = lo;
      changed = true;
    }
  }
  std::set<int> ids;
  for (const auto& [t, c] : cls) ids.insert(c);
  if (cls_out) *cls_out = cls;
  return ids.size();
}

// the FinSet-style category of ordinals 0..n with all functions as arrows
std::shared_ptr<FinCategory> finset_upto(int n) {
  auto c = std::make_shared<FinCategory>();
  auto fname = [](int m, int k, const std::vector<int>& vals) {
    std::string s = "f" + std::to_string(m) + ">" + std::to_string(k) + ":";
    for (int v : vals) s += std::to_string(v);
    return s;
  };
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> funcs;
  for (int m = 0; m <= n; ++m) {
    c->objects.push_back(std::to_string(m));
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> fs;
      if (m == 0)
        fs.push_back({});
      else {
        std::vector<int> cur(m, 0);
        while (true) {
          if (k > 0) fs.push_back(cur);
          int i = m - 1;
          while (i >= 0 && cur[i] == k - 1) --i;
          if (i < 0 || k == 0) break;
          ++cur[i];
          for (int j = i + 1; j < m; ++j) cur[j] = 0;
        }
      }
      funcs[{m, k}] = fs;
      for (const auto& f : fs) c->arrows.push_back({fname(m, k, f), std::to_string(m), std::to_string(k)});
    }
  }
  for (int m = 0; m <= n; ++m) {
    std::vector<int> idv(m);
    for (int i = 0; i < m; ++i) idv[i] = i;
    c->identity[std::to_string(m)] = fname(m, m, idv);
  }
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= n; ++k)
      for (const auto& f : funcs[{m, k}])
        for (int l = 0; l <= n; ++l)
          for (const auto& g : funcs[{k, l}]) {
            std::vector<int> comp(m);
            for (int i = 0; i < m; ++i) comp[i] = g[f[i]];
            c->composition[{fname(m, k, f), fname(k, l, g)}] = fname(m, l, comp);
          }
  return c;
}

FinFunctor inclusion(const CatPtr& small, const CatPtr& big) {
  FinFunctor i;
  i.source = small;
  i.target = big;
  for (const auto& o : small->objects) i.object_map[o] = o;
  for (const auto& a : small->arrows) i.arrow_map[a.id] = a.id;
  return i;
}

SetFunctor identity_carrier(const CatPtr& base) {
  // for finset_upto bases: carrier of object "m" is {0..m-1}, arrows act as
  // the functions they name
  SetFunctor f;
  f.base = base;
  for (const auto& o : base->objects) {
    int m = std::stoi(o);
    std::vector<std::string> xs;
    for (int i = 0; i < m; ++i) xs.push_back(std::to_string(i));
    f.carrier[o] = xs;
  }
  for (const auto& a : base->arrows) {
    int m = std::stoi(a.src);
    std::string vals = a.id.substr(a.id.find(':') + 1);
    std::map<std::string, std::string> fn;
    for (int i = 0; i < m; ++i) fn[std::to_string(i)] = std::string(1, vals[i]);
    f.action[a.id] = fn;
  }
  return f;
}

}  // namespace

TEST_CASE("coend over a discrete base is the disjoint union of diagonals") {
  auto base = discrete_category({"u", "v"});
  MixedVarianceFunctor s;
  s.base = base;
  for (const auto& a : base->objects)
    for (const auto& b : base->objects) {
      std::vector<std::string> xs;
      if (a == b) xs = {a + "0", a + "1"};
      s.carrier[{a, b}] = xs;
    }
  for (const auto& [o, ida] : base->identity)
    for (const auto& b : base->objects) {
      for (const auto& x : s.carrier[{o, b}]) s.left[ida][b][x] = x;
      for (const auto& x : s.carrier[{b, o}]) s.right[ida][b][x] = x;
    }
  REQUIRE(s.validate().ok());
  CHECK(coend_set(s).apex.size() == 4);
}

TEST_CASE("coend over the arrow category glues the diagonal along a shared bijection") {
  auto base = arrow_category();
  MixedVarianceFunctor s;
  s.base = base;
  std::vector<std::string> two = {"0", "1"};
  for (const auto& a : base->objects)
    for (const auto& b : base->objects) s.carrier[{a, b}] = two;
  auto ident = [&](const Id& arrow) {
    for (const auto& b : base->objects)
      for (const auto& x : two) {
        s.left[arrow][b][x] = x;
        s.right[arrow][b][x] = x;
      }
  };
  ident("ida");
  ident("idb");
  ident("f");  // both legs act as the identity bijection
  REQUIRE(s.validate().ok());
  auto res = coend_set(s);
  CHECK(res.apex.size() == 2);  // (a,i) glued with (b,i) pairwise
  CHECK(res.injection.at({"a", "0"}) == res.injection.at({"b", "0"}));
  CHECK(res.injection.at({"a", "1"}) == res.injection.at({"b", "1"}));

  // against the naive closure oracle
  using Tag = std::pair<Id, std::string>;
  std::vector<Tag> elems = {{"a", "0"}, {"a", "1"}, {"b", "0"}, {"b", "1"}};
  std::vector<std::pair<Tag, Tag>> rel;
  for (const auto& x : two) rel.push_back({{"b", x}, {"a", x}});
  CHECK(closure_class_count(elems, rel) == res.apex.size());
}

TEST_CASE("coend of a constant singleton is a point") {
  auto base = arrow_category();
  MixedVarianceFunctor s;
  s.base = base;
  for (const auto& a : base->objects)
    for (const auto& b : base->objects) s.carrier[{a, b}] = {"*"};
  for (const auto& ar : base->arrows)
    for (const auto& b : base->objects) {
      s.left[ar.id][b]["*"] = "*";
      s.right[ar.id][b]["*"] = "*";
    }
  REQUIRE(s.validate().ok());
  CHECK(coend_set(s).apex.size() == 1);
}

TEST_CASE("Lan along the identity is the original functor") {
  auto base = finset_upto(2);
  REQUIRE(validate_category(*base).ok());
  SetFunctor f = identity_carrier(base);
  REQUIRE(f.validate().ok());
  FinFunctor id = inclusion(base, base);
  LanResult lan = pointwise_lan(f, id);
  REQUIRE(lan.lan.validate().ok());
  for (const auto& o : base->objects)
    CHECK(lan.lan.at(o).size() == f.at(o).size());
}

TEST_CASE("Lan at an object outside the image of a discrete inclusion is empty") {
  auto small = discrete_category({"u"});
  auto big = discrete_category({"u", "v"});
  FinFunctor i = inclusion(small, big);
  SetFunctor f;
  f.base = small;
  f.carrier["u"] = {"x", "y"};
  f.action["id_u"] = {{"x", "x"}, {"y", "y"}};
  auto at_v = pointwise_lan_at(f, i, "v");
  CHECK(at_v.classes.empty());
  auto at_u = pointwise_lan_at(f, i, "u");
  CHECK(at_u.classes.size() == 2);
  CHECK_THROWS_AS(pointwise_lan_at(f, i, "w"), std::invalid_argument);
}

TEST_CASE("Lan of the ordinal inclusion evaluates to the expected quotient at [3]") {
  auto small = finset_upto(2);
  auto big = finset_upto(3);
  FinFunctor i = inclusion(small, big);
  REQUIRE(i.validate().ok());
  CHECK(i.fully_faithful());
  SetFunctor f = identity_carrier(small);

  auto at3 = pointwise_lan_at(f, i, "3");
  // oracle: the identical relation closed naively
  using Tag = std::tuple<Id, Id, std::string>;
  std::vector<Tag> elems;
  for (const auto& c : small->objects)
    for (const auto& u : big->hom(c, "3"))
      for (const auto& x : f.at(c)) elems.push_back({c, u, x});
  std::vector<std::pair<Tag, Tag>> rel;
  for (const auto& w : small->arrows)
    for (const auto& u : big->hom(w.tgt, "3"))
      for (const auto& x : f.at(w.src))
        rel.push_back({{w.src, *big->compose(i.arrow_map.at(w.id), u), x},
                       {w.tgt, u, f.map_of(w.id).at(x)}});
  CHECK(closure_class_count(elems, rel) == at3.classes.size());
  CHECK(at3.classes.size() == 3);
}

TEST_CASE("unit is a bijection when the along-functor is fully faithful") {
  auto small = finset_upto(2);
  auto big = finset_upto(3);
  FinFunctor i = inclusion(small, big);
  SetFunctor f = identity_carrier(small);
  for (const auto& c : small->objects) {
    auto at = pointwise_lan_at(f, i, i.object_map.at(c));
    // unit: x -> class of (c, id, x)
    std::set<std::string> classes;
    for (const auto& x : f.at(c))
      classes.insert(at.tag.at({c, big->identity.at(i.object_map.at(c)), x}));
    CHECK(classes.size() == f.at(c).size());
    CHECK(classes.size() == at.classes.size());
  }
}

TEST_CASE("Lan along the terminal functor computes the ordinary colimit") {
  auto base = arrow_category();
  SetFunctor f;
  f.base = base;
  f.carrier = {{"a", {"p", "q"}}, {"b", {"x"}}};
  f.action["ida"] = {{"p", "p"}, {"q", "q"}};
  f.action["idb"] = {{"x", "x"}};
  f.action["f"] = {{"p", "x"}, {"q", "x"}};
  REQUIRE(f.validate().ok());

  auto terminal = discrete_category({"*"});
  FinFunctor bang;
  bang.source = base;
  bang.target = terminal;
  for (const auto& o : base->objects) bang.object_map[o] = "*";
  for (const auto& a : base->arrows) bang.arrow_map[a.id] = "id_*";
  REQUIRE(bang.validate().ok());

  auto at = pointwise_lan_at(f, bang, "*");
  CHECK(at.classes.size() == colimit_set_functor(f).apex.size());
}

TEST_CASE("Lan matches the comma-colimit oracle across a functor/diagram matrix") {
  std::mt19937 rng(4711);
  std::vector<std::pair<CatPtr, CatPtr>> c_and_e;
  c_and_e.push_back({arrow_category(), chain_poset(2)});
  c_and_e.push_back({discrete_category({"u", "v"}), discrete_category({"u", "v", "w"})});
  c_and_e.push_back({chain_poset(1), chain_poset(3)});
  c_and_e.push_back({finset_upto(1), finset_upto(2)});

  for (auto& [small, big] : c_and_e) {
    // functor: inclusion when ids line up, otherwise collapse everything
    FinFunctor i;
    bool incl = true;
    for (const auto& o : small->objects)
      if (!big->has_object(o)) incl = false;
    if (incl) {
      i = inclusion(small, big);
      if (!i.validate().ok()) incl = false;
    }
    if (!incl) continue;

    for (int trial = 0; trial < 6; ++trial) {
      // random small diagram on generators; composites forced where needed
      SetFunctor f;
      f.base = small;
      for (const auto& o : small->objects) {
        int sz = static_cast<int>(rng() % 3) + 1;
        std::vector<std::string> xs;
        for (int k = 0; k < sz; ++k) xs.push_back(o + "_" + std::to_string(k));
        f.carrier[o] = xs;
      }
      bool coherent = true;
      for (const auto& a : small->arrows) {
        std::map<std::string, std::string> fn;
        for (const auto& x : f.carrier[a.src]) {
          const auto& cod = f.carrier[a.tgt];
          fn[x] = cod[rng() % cod.size()];
        }
        f.action[a.id] = fn;
      }
      for (const auto& [o, ida] : small->identity)
        for (const auto& x : f.carrier[o]) f.action[ida][x] = x;
      // repair composites bottom-up until functorial (or give up on draw)
      for (int pass = 0; pass < 4 && !f.validate().ok(); ++pass)
        for (const auto& [fg, h] : small->composition) {
          const Arrow* fa = small->arrow(fg.first);
          std::map<std::string, std::string> fn;
          for (const auto& x : f.carrier[fa->src])
            fn[x] = f.action[fg.second][f.action[fg.first][x]];
          if (small->identity.at(fa->src) != fg.first &&
              small->identity.at(small->arrow(fg.second)->src) != fg.second)
            f.action[h] = fn;
        }
      if (!f.validate().ok()) {
        coherent = false;
      }
      if (!coherent) continue;

      for (const auto& e : big->objects) {
        auto got = pointwise_lan_at(f, i, e);
        using Tag = std::tuple<Id, Id, std::string>;
        std::vector<Tag> elems;
        for (const auto& c : small->objects)
          for (const auto& u : big->hom(i.object_map.at(c), e))
            for (const auto& x : f.at(c)) elems.push_back({c, u, x});
        std::vector<std::pair<Tag, Tag>> rel;
        for (const auto& w : small->arrows)
          for (const auto& u : big->hom(i.object_map.at(w.tgt), e))
            for (const auto& x : f.at(w.src))
              rel.push_back({{w.src, *big->compose(i.arrow_map.at(w.id), u), x},
                             {w.tgt, u, f.map_of(w.id).at(x)}});
        std::map<Tag, int> cls;
        CHECK(closure_class_count(elems, rel, &cls) == got.classes.size());
        // identical partitions
        for (const auto& [t1, c1] : cls)
          for (const auto& [t2, c2] : cls)
            if (c1 == c2) CHECK(got.tag.at(t1) == got.tag.at(t2));
      }
    }
  }
}

TEST_CASE("weighted colimit with constant singleton weight is the ordinary colimit") {
  // index: arrow category; shapes: quiver(1) -> quiver(2) by inclusion
  WeightedDiagram d;
  d.index = arrow_category();
  d.weight = {{"a", {"*"}}, {"b", {"*"}}};
  d.weight_action["ida"] = {{"*", "*"}};
  d.weight_action["idb"] = {{"*", "*"}};
  d.weight_action["f"] = {{"*", "*"}};
  d.shape["a"] = freecat::graph_presheaf(linear_quiver(1));
  d.shape["b"] = freecat::graph_presheaf(linear_quiver(2));
  std::map<Id, std::map<std::string, std::string>> incl = {
      {"V", {{"0", "0"}, {"1", "1"}}}, {"E", {{"e1", "e1"}}}};
  auto ident_action = [&](const Id& obj) {
    std::map<Id, std::map<std::string, std::string>> m;
    for (const auto& b : {"V", "E"})
      for (const auto& z : d.shape[obj].at(b)) m[b][z] = z;
    return m;
  };
  d.shape_action["ida"] = ident_action("a");
  d.shape_action["idb"] = ident_action("b");
  d.shape_action["f"] = incl;
  auto wc = weighted_colimit(d);

  // per-level ordinary colimit of the same diagram
  for (const auto& lvl : {"V", "E"}) {
    SetFunctor per;
    per.base = d.index;
    per.carrier = {{"a", d.shape["a"].at(lvl)}, {"b", d.shape["b"].at(lvl)}};
    per.action["ida"] = d.shape_action["ida"][lvl];
    per.action["idb"] = d.shape_action["idb"][lvl];
    per.action["f"] = d.shape_action["f"][lvl];
    REQUIRE(per.validate().ok());
    CHECK(wc.object.at(lvl).size() == colimit_set_functor(per).apex.size());
  }
}

TEST_CASE("a weight of size two duplicates that object's contribution") {
  WeightedDiagram d;
  d.index = discrete_category({"c"});
  d.weight = {{"c", {"w0", "w1"}}};
  d.weight_action["id_c"] = {{"w0", "w0"}, {"w1", "w1"}};
  d.shape["c"] = freecat::graph_presheaf(linear_quiver(0));
  d.shape_action["id_c"] = {{"V", {{"0", "0"}}}, {"E", {}}};
  auto wc = weighted_colimit(d);
  CHECK(wc.object.at("V").size() == 2);
}

TEST_CASE("filiform-weighted reconstruction returns the probe graph up to isomorphism") {
  Graph probe;
  probe.vertices = {"p", "q", "r", "s"};
  auto add = [&](const std::string& e, const std::string& a, const std::string& b) {
    probe.edges.push_back(e);
    probe.src[e] = a;
    probe.tgt[e] = b;
  };
  add("pq", "p", "q");
  add("qr", "q", "r");
  add("qs", "q", "s");
  auto wc = weighted_colimit(filiform_weighted_diagram(probe, 3));
  CHECK(!enumerate_nat_iso(wc.object, freecat::graph_presheaf(probe)).empty());
}

TEST_CASE("density probes: filiform pieces reconstruct graphs, bounds reported honestly") {
  CHECK(density_check_graph(linear_quiver(2), 3).verdict == DensityVerdict::Isomorphism);

  Graph forked;
  forked.vertices = {"0", "1", "2", "3", "4", "5"};
  auto add = [&](const std::string& e, const std::string& a, const std::string& b) {
    forked.edges.push_back(e);
    forked.src[e] = a;
    forked.tgt[e] = b;
  };
  add("g01", "0", "1");
  add("g12", "1", "2");
  add("g23", "2", "3");
  add("g04", "0", "4");
  add("g45", "4", "5");
  CHECK(density_check_graph(forked, 3).verdict == DensityVerdict::Isomorphism);
  CHECK(density_check_graph(forked, 1).verdict == DensityVerdict::Isomorphism);

  Graph lonely;
  lonely.vertices = {"x"};
  CHECK(density_check_graph(lonely, 0).verdict == DensityVerdict::Isomorphism);

  // an edge cannot be covered by vertex-only arities: undetermined, not failure
  auto rep = density_check_graph(linear_quiver(1), 0);
  CHECK(rep.verdict == DensityVerdict::Undetermined);
  CHECK(rep.detail.find("not bijective") != std::string::npos);
}
