#include "fincat/kan.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <set>
#include <stdexcept>

namespace fincat::kan {
namespace {

using freecat::Graph;
using freecat::Path;
using freecat::linear_quiver;

// generic tagged quotient with canonical minimal representatives
template <typename Tag>
std::pair<std::vector<std::string>, std::map<Tag, std::string>> quotient(
    const std::vector<Tag>& elems, const std::vector<std::pair<Tag, Tag>>& relation,
    const std::function<std::string(const Tag&)>& encode) {
  std::map<Tag, std::size_t> index;
  for (const auto& e : elems) index.emplace(e, index.size());
  UnionFind uf(elems.size());
  for (const auto& [a, b] : relation) uf.unite(index.at(a), index.at(b));
  std::map<std::size_t, std::string> rep;
  for (const auto& e : elems) {
    std::size_t root = uf.find(index.at(e));
    std::string enc = encode(e);
    auto it = rep.find(root);
    if (it == rep.end() || enc < it->second) rep[root] = enc;
  }
  std::map<Tag, std::string> tag;
  std::set<std::string> classes;
  for (const auto& e : elems) {
    const std::string& cls = rep.at(uf.find(index.at(e)));
    tag[e] = cls;
    classes.insert(cls);
  }
  return {{classes.begin(), classes.end()}, tag};
}

}  // namespace

Report MixedVarianceFunctor::validate() const {
  Report r;
  const FinCategory& c = *base;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      if (!carrier.count({a, b})) r.add("carrier-total", "no set at (" + a + ", " + b + ")");
  if (!r.ok()) return r;

  auto check_fn = [&](const std::map<std::string, std::string>& fn,
                      const std::vector<std::string>& dom, const std::vector<std::string>& cod,
                      const std::string& what) {
    std::set<std::string> codset(cod.begin(), cod.end());
    for (const auto& x : dom) {
      auto it = fn.find(x);
      if (it == fn.end())
        r.add("leg-total", what + " undefined on " + x);
      else if (!codset.count(it->second))
        r.add("leg-range", what + " leaves the codomain on " + x);
    }
  };
  for (const auto& a : c.arrows)
    for (const auto& b : c.objects) {
      if (!left.count(a.id) || !left.at(a.id).count(b)) {
        if (!carrier.at({a.tgt, b}).empty())
          r.add("left-total", "no contravariant action of " + a.id + " at " + b);
        continue;
      }
      check_fn(left.at(a.id).at(b), carrier.at({a.tgt, b}), carrier.at({a.src, b}),
               "left action of " + a.id + " at " + b);
    }
  for (const auto& a : c.arrows)
    for (const auto& b : c.objects) {
      if (!right.count(a.id) || !right.at(a.id).count(b)) {
        if (!carrier.at({b, a.src}).empty())
          r.add("right-total", "no covariant action of " + a.id + " at " + b);
        continue;
      }
      check_fn(right.at(a.id).at(b), carrier.at({b, a.src}), carrier.at({b, a.tgt}),
               "right action of " + a.id + " at " + b);
    }
  if (!r.ok()) return r;

  for (const auto& [o, ida] : c.identity)
    for (const auto& b : c.objects) {
      for (const auto& x : carrier.at({o, b}))
        if (left.at(ida).at(b).at(x) != x) r.add("left-identity", ida + " moves " + x);
      for (const auto& x : carrier.at({b, o}))
        if (right.at(ida).at(b).at(x) != x) r.add("right-identity", ida + " moves " + x);
    }
  for (const auto& [fg, h] : c.composition) {
    const auto& [f, g] = fg;
    for (const auto& b : c.objects) {
      for (const auto& x : carrier.at({c.arrow(g)->tgt, b}))
        if (left.at(f).at(b).at(left.at(g).at(b).at(x)) != left.at(h).at(b).at(x))
          r.add("left-functorial", "composite " + h + " at " + b + " on " + x);
      for (const auto& x : carrier.at({b, c.arrow(f)->src}))
        if (right.at(g).at(b).at(right.at(f).at(b).at(x)) != right.at(h).at(b).at(x))
          r.add("right-functorial", "composite " + h + " at " + b + " on " + x);
    }
  }
  for (const auto& f : c.arrows)
    for (const auto& g : c.arrows)
      for (const auto& x : carrier.at({f.tgt, g.src})) {
        const std::string& lr = right.at(g.id).at(f.src).at(left.at(f.id).at(g.src).at(x));
        const std::string& rl = left.at(f.id).at(g.tgt).at(right.at(g.id).at(f.tgt).at(x));
        if (lr != rl) r.add("legs-commute", f.id + " / " + g.id + " on " + x);
      }
  return r;
}

ColimitResult coend_set(const MixedVarianceFunctor& s) {
  using Tag = std::pair<Id, std::string>;
  std::vector<Tag> elems;
  for (const auto& c : s.base->objects)
    for (const auto& x : s.carrier.at({c, c})) elems.push_back({c, x});
  std::vector<std::pair<Tag, Tag>> rel;
  for (const auto& f : s.base->arrows)
    for (const auto& x : s.carrier.at({f.tgt, f.src})) {
      Tag covar{f.tgt, s.right.at(f.id).at(f.tgt).at(x)};
      Tag contra{f.src, s.left.at(f.id).at(f.src).at(x)};
      rel.push_back({covar, contra});
    }
  auto [classes, tag] = quotient<Tag>(
      elems, rel, [](const Tag& t) { return t.first + ":" + t.second; });
  ColimitResult out;
  out.apex = classes;
  for (const auto& [t, cls] : tag) out.injection[t] = cls;
  return out;
}

namespace {

using LanTag = std::tuple<Id, Id, std::string>;  // (c, u : i(c) -> e, x in Fc)

std::pair<std::vector<std::string>, std::map<LanTag, std::string>> lan_quotient(
    const SetFunctor& f, const FinFunctor& i, const Id& e) {
  const FinCategory& cdom = *i.source;
  const FinCategory& edom = *i.target;
  std::vector<LanTag> elems;
  for (const auto& c : cdom.objects)
    for (const auto& u : edom.hom(i.object_map.at(c), e))
      for (const auto& x : f.at(c)) elems.push_back({c, u, x});
  std::vector<std::pair<LanTag, LanTag>> rel;
  for (const auto& w : cdom.arrows) {
    const Id& c = w.src;
    const Id& cprime = w.tgt;
    for (const auto& u : edom.hom(i.object_map.at(cprime), e)) {
      Id iw_u = *edom.compose(i.arrow_map.at(w.id), u);
      for (const auto& x : f.at(c))
        rel.push_back({{c, iw_u, x}, {cprime, u, f.map_of(w.id).at(x)}});
    }
  }
  return quotient<LanTag>(elems, rel, [](const LanTag& t) {
    return std::get<0>(t) + "/" + std::get<1>(t) + "/" + std::get<2>(t);
  });
}

}  // namespace

LanAtResult pointwise_lan_at(const SetFunctor& f, const FinFunctor& i, const Id& e) {
  if (!i.target->has_object(e))
    throw std::invalid_argument("pointwise_lan_at: " + e + " is not an object of the target");
  auto [classes, tag] = lan_quotient(f, i, e);
  return {classes, tag};
}

LanResult pointwise_lan(const SetFunctor& f, const FinFunctor& i) {
  LanResult out;
  out.lan.base = i.target;
  for (const auto& e : i.target->objects) {
    auto at = pointwise_lan_at(f, i, e);
    out.lan.carrier[e] = at.classes;
    out.per_object[e] = std::move(at);
  }
  for (const auto& a : i.target->arrows) {
    std::map<std::string, std::string> fn;
    const auto& dom = out.per_object.at(a.src);
    const auto& cod = out.per_object.at(a.tgt);
    for (const auto& [t, cls] : dom.tag) {
      const auto& [c, u, x] = t;
      Id pushed = *i.target->compose(u, a.id);
      fn[cls] = cod.tag.at({c, pushed, x});
    }
    out.lan.action[a.id] = fn;
  }
  return out;
}

Report WeightedDiagram::validate() const {
  Report r;
  const FinCategory& c = *index;
  for (const auto& o : c.objects) {
    if (!weight.count(o)) r.add("weight-total", "no weight at " + o);
    if (!shape.count(o))
      r.add("shape-total", "no shape at " + o);
    else if (!shape.at(o).validate().ok())
      r.add("shape-object", "shape at " + o + " is not functorial");
  }
  if (!r.ok()) return r;
  CatPtr presheaf_base = shape.begin()->second.base;
  for (const auto& [o, sf] : shape)
    if (sf.base->objects != presheaf_base->objects)
      r.add("shared-base", "shape at " + o + " lives over a different base");

  for (const auto& a : c.arrows) {
    if (!weight_action.count(a.id)) {
      r.add("weight-action-total", a.id);
      continue;
    }
    // contravariant: W(tgt) -> W(src)
    std::set<std::string> codset(weight.at(a.src).begin(), weight.at(a.src).end());
    for (const auto& w : weight.at(a.tgt)) {
      auto it = weight_action.at(a.id).find(w);
      if (it == weight_action.at(a.id).end())
        r.add("weight-action", a.id + " undefined on " + w);
      else if (!codset.count(it->second))
        r.add("weight-action", a.id + " leaves the codomain on " + w);
    }
    for (const auto& b : presheaf_base->objects) {
      if (shape.at(a.src).at(b).empty()) continue;
      if (!shape_action.count(a.id) || !shape_action.at(a.id).count(b)) {
        r.add("shape-action-total", a.id + " at " + b);
        continue;
      }
      for (const auto& z : shape.at(a.src).at(b))
        if (!shape_action.at(a.id).at(b).count(z))
          r.add("shape-action", a.id + " undefined on " + z + " at " + b);
    }
  }
  if (!r.ok()) return r;
  // shape naturality per arrow of the index
  for (const auto& a : c.arrows)
    for (const auto& barr : presheaf_base->arrows)
      for (const auto& z : shape.at(a.src).at(barr.src)) {
        const std::string& one =
            shape_action.at(a.id).at(barr.tgt).at(shape.at(a.src).map_of(barr.id).at(z));
        const std::string& two =
            shape.at(a.tgt).map_of(barr.id).at(shape_action.at(a.id).at(barr.src).at(z));
        if (one != two) r.add("shape-naturality", a.id + " / " + barr.id + " on " + z);
      }
  // weight contravariant functoriality
  for (const auto& [o, ida] : c.identity)
    for (const auto& w : weight.at(o))
      if (weight_action.at(ida).at(w) != w) r.add("weight-identity", ida);
  for (const auto& [fg, h] : c.composition) {
    const auto& [f, g] = fg;
    for (const auto& w : weight.at(c.arrow(g)->tgt))
      if (weight_action.at(f).at(weight_action.at(g).at(w)) != weight_action.at(h).at(w))
        r.add("weight-functorial", h);
  }
  return r;
}

WeightedColimitResult weighted_colimit(const WeightedDiagram& d) {
  Report pre = d.validate();
  if (!pre.ok())
    throw std::invalid_argument("weighted_colimit: invalid diagram: " + pre.violations[0].rule);
  const FinCategory& c = *d.index;
  CatPtr presheaf_base = d.shape.begin()->second.base;

  WeightedColimitResult out;
  out.object.base = presheaf_base;
  using Tag = std::tuple<Id, std::string, std::string>;  // (c, w, z) at a fixed base level
  std::map<Id, std::map<Tag, std::string>> level_tag;
  for (const auto& b : presheaf_base->objects) {
    std::vector<Tag> elems;
    for (const auto& o : c.objects)
      for (const auto& w : d.weight.at(o))
        for (const auto& z : d.shape.at(o).at(b)) elems.push_back({o, w, z});
    std::vector<std::pair<Tag, Tag>> rel;
    for (const auto& a : c.arrows)
      for (const auto& w : d.weight.at(a.tgt))
        for (const auto& z : d.shape.at(a.src).at(b))
          rel.push_back({{a.src, d.weight_action.at(a.id).at(w), z},
                         {a.tgt, w, d.shape_action.at(a.id).at(b).at(z)}});
    auto [classes, tag] = quotient<Tag>(elems, rel, [](const Tag& t) {
      return std::get<0>(t) + "/" + std::get<1>(t) + "/" + std::get<2>(t);
    });
    out.object.carrier[b] = classes;
    level_tag[b] = std::move(tag);
    for (const auto& [t, cls] : level_tag[b])
      out.injection[{std::get<0>(t), std::get<1>(t), b, std::get<2>(t)}] = cls;
  }
  for (const auto& barr : presheaf_base->arrows) {
    std::map<std::string, std::string> fn;
    for (const auto& [t, cls] : level_tag.at(barr.src)) {
      const auto& [o, w, z] = t;
      fn[cls] = level_tag.at(barr.tgt).at({o, w, d.shape.at(o).map_of(barr.id).at(z)});
    }
    out.object.action[barr.id] = fn;
  }
  return out;
}

WeightedDiagram filiform_weighted_diagram(const Graph& probe, int bound) {
  WeightedDiagram d;
  d.index = std::make_shared<FinCategory>(freecat::delta0_truncated(bound));

  std::vector<std::vector<Path>> by_len(bound + 1);
  for (const auto& p : freecat::free_paths(probe, bound)) by_len[p.length()].push_back(p);
  for (int m = 0; m <= bound; ++m) {
    std::vector<std::string> ws;
    for (const auto& p : by_len[m]) ws.push_back(p.encode());
    d.weight[std::to_string(m)] = ws;
    d.shape[std::to_string(m)] = freecat::graph_presheaf(linear_quiver(m));
  }
  for (const auto& a : d.index->arrows) {
    const std::string& id = a.id;  // "d0[m->k]+o"
    int m = std::stoi(id.substr(3, id.find("->") - 3));
    int k = std::stoi(id.substr(id.find("->") + 2, id.find(']') - id.find("->") - 2));
    int o = std::stoi(id.substr(id.find('+') + 1));
    std::map<std::string, std::string> wact;
    for (const auto& p : by_len[k]) {
      Path sub{p.start, {}};
      std::string at = p.start;
      for (int step = 0; step < o; ++step) at = probe.tgt.at(p.edges[step]);
      sub.start = at;
      for (int step = 0; step < m; ++step) sub.edges.push_back(p.edges[o + step]);
      wact[p.encode()] = sub.encode();
    }
    d.weight_action[id] = wact;
    std::map<std::string, std::string> vmap, emap;
    for (int i = 0; i <= m; ++i) vmap[std::to_string(i)] = std::to_string(i + o);
    for (int i = 1; i <= m; ++i) emap["e" + std::to_string(i)] = "e" + std::to_string(i + o);
    d.shape_action[id] = {{"V", vmap}, {"E", emap}};
  }
  return d;
}

DensityReport density_check_graph(const Graph& probe, int bound) {
  DensityReport rep;
  WeightedDiagram d = filiform_weighted_diagram(probe, bound);
  WeightedColimitResult wc = weighted_colimit(d);

  // canonical comparison: the class of (c, path w, z) maps to the vertex or
  // edge of the probe that the weighted piece lands on
  std::map<std::string, std::string> to_vertex, to_edge;
  bool well_defined = true;
  for (const auto& [key, cls] : wc.injection) {
    const auto& [c, w, b, z] = key;
    (void)c;
    Path p{"", {}};
    {  // decode "v|e1|e2|..."
      std::string cur;
      std::vector<std::string> parts;
      for (char ch : w + std::string("|")) {
        if (ch == '|') {
          parts.push_back(cur);
          cur.clear();
        } else
          cur.push_back(ch);
      }
      p.start = parts[0];
      p.edges.assign(parts.begin() + 1, parts.end());
    }
    if (b == "V") {
      int i = std::stoi(z);
      std::string at = p.start;
      for (int step = 0; step < i; ++step) at = probe.tgt.at(p.edges[step]);
      auto [it, fresh] = to_vertex.emplace(cls, at);
      if (!fresh && it->second != at) well_defined = false;
    } else {
      int i = std::stoi(z.substr(1));
      const std::string& edge = p.edges[i - 1];
      auto [it, fresh] = to_edge.emplace(cls, edge);
      if (!fresh && it->second != edge) well_defined = false;
    }
  }
  if (!well_defined) {
    rep.detail = "comparison map is not constant on classes";
    return rep;
  }
  std::set<std::string> vimg, eimg;
  for (const auto& [cls, v] : to_vertex) vimg.insert(v);
  for (const auto& [cls, e] : to_edge) eimg.insert(e);
  bool v_bij = to_vertex.size() == probe.vertices.size() && vimg.size() == to_vertex.size() &&
               vimg.size() == probe.vertices.size();
  bool e_bij = to_edge.size() == probe.edges.size() && eimg.size() == to_edge.size() &&
               eimg.size() == probe.edges.size();
  if (v_bij && e_bij) {
    rep.verdict = DensityVerdict::Isomorphism;
    rep.detail = "comparison map is an isomorphism at bound " + std::to_string(bound);
  } else {
    rep.detail = "comparison not bijective at bound " + std::to_string(bound) + " (" +
                 std::to_string(to_vertex.size()) + "/" + std::to_string(probe.vertices.size()) +
                 " vertex classes, " + std::to_string(to_edge.size()) + "/" +
                 std::to_string(probe.edges.size()) + " edge classes)";
  }
  return rep;
}

}  // namespace fincat::kan
