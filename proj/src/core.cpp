#include "fincat/core.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace fincat {
namespace {

struct CatIndex {
  std::unordered_map<std::string, int> obj;
  std::unordered_map<std::string, int> arr;
  std::vector<int> src, tgt;          // by arrow index
  std::vector<int> ident;             // by object index, -1 if missing
  std::vector<std::vector<int>> comp;  // comp[f][g], -1 if undefined

  explicit CatIndex(const FinCategory& c) {
    for (const auto& o : c.objects) obj.emplace(o, static_cast<int>(obj.size()));
    for (const auto& a : c.arrows) arr.emplace(a.id, static_cast<int>(arr.size()));
    src.resize(c.arrows.size(), -1);
    tgt.resize(c.arrows.size(), -1);
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
      auto s = obj.find(c.arrows[i].src);
      auto t = obj.find(c.arrows[i].tgt);
      src[i] = s == obj.end() ? -1 : s->second;
      tgt[i] = t == obj.end() ? -1 : t->second;
    }
    ident.resize(c.objects.size(), -1);
    for (const auto& [o, a] : c.identity) {
      auto oi = obj.find(o);
      auto ai = arr.find(a);
      if (oi != obj.end() && ai != arr.end()) ident[oi->second] = ai->second;
    }
    comp.assign(c.arrows.size(), std::vector<int>(c.arrows.size(), -1));
    for (const auto& [fg, h] : c.composition) {
      auto fi = arr.find(fg.first);
      auto gi = arr.find(fg.second);
      auto hi = arr.find(h);
      if (fi != arr.end() && gi != arr.end() && hi != arr.end())
        comp[fi->second][gi->second] = hi->second;
    }
  }
};

}  // namespace

bool FinCategory::has_object(const Id& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

const Arrow* FinCategory::arrow(const Id& a) const {
  for (const auto& ar : arrows)
    if (ar.id == a) return &ar;
  return nullptr;
}

std::optional<Id> FinCategory::compose(const Id& f, const Id& g) const {
  auto it = composition.find({f, g});
  if (it == composition.end()) return std::nullopt;
  return it->second;
}

std::vector<Id> FinCategory::hom(const Id& a, const Id& b) const {
  std::vector<Id> out;
  for (const auto& ar : arrows)
    if (ar.src == a && ar.tgt == b) out.push_back(ar.id);
  return out;
}

Report validate_category(const FinCategory& c) {
  Report r;
  std::set<Id> objset(c.objects.begin(), c.objects.end());
  if (objset.size() != c.objects.size()) r.add("objects-unique", "duplicate object id");
  std::set<Id> arrset;
  for (const auto& a : c.arrows) {
    if (!arrset.insert(a.id).second) r.add("arrows-unique", "duplicate arrow id " + a.id);
    if (!objset.count(a.src)) r.add("arrow-endpoints", a.id + " has unknown source " + a.src);
    if (!objset.count(a.tgt)) r.add("arrow-endpoints", a.id + " has unknown target " + a.tgt);
  }
  if (!r.ok()) return r;  // index-based checks below assume well-formed ids

  CatIndex ix(c);
  const int nA = static_cast<int>(c.arrows.size());

  // identities exist, are endo-arrows
  for (std::size_t oi = 0; oi < c.objects.size(); ++oi) {
    if (ix.ident[oi] < 0) {
      r.add("identity-exists", "no identity arrow for object " + c.objects[oi]);
      continue;
    }
    int ia = ix.ident[oi];
    if (ix.src[ia] != static_cast<int>(oi) || ix.tgt[ia] != static_cast<int>(oi))
      r.add("identity-endo", "identity of " + c.objects[oi] + " is not an endo-arrow");
  }

  // composition defined exactly on composable pairs, endpoints correct
  for (int f = 0; f < nA; ++f)
    for (int g = 0; g < nA; ++g) {
      bool composable = ix.tgt[f] == ix.src[g];
      int h = ix.comp[f][g];
      if (composable && h < 0)
        r.add("composition-total",
              "missing composite of " + c.arrows[f].id + " then " + c.arrows[g].id);
      if (!composable && h >= 0)
        r.add("composition-domain",
              "composite defined for non-composable " + c.arrows[f].id + " ; " + c.arrows[g].id);
      if (composable && h >= 0 && (ix.src[h] != ix.src[f] || ix.tgt[h] != ix.tgt[g]))
        r.add("composite-endpoints",
              "composite of " + c.arrows[f].id + " then " + c.arrows[g].id + " has wrong endpoints");
    }
  if (!r.ok()) return r;

  // unit laws
  for (int f = 0; f < nA; ++f) {
    int idl = ix.ident[ix.src[f]];
    int idr = ix.ident[ix.tgt[f]];
    if (idl >= 0 && ix.comp[idl][f] != f)
      r.add("left-unit", "id ; " + c.arrows[f].id + " != " + c.arrows[f].id);
    if (idr >= 0 && ix.comp[f][idr] != f)
      r.add("right-unit", c.arrows[f].id + " ; id != " + c.arrows[f].id);
  }

  // associativity over every composable triple
  for (int f = 0; f < nA; ++f)
    for (int g = 0; g < nA; ++g) {
      if (ix.tgt[f] != ix.src[g]) continue;
      int fg = ix.comp[f][g];
      for (int h = 0; h < nA; ++h) {
        if (ix.tgt[g] != ix.src[h]) continue;
        int gh = ix.comp[g][h];
        if (fg < 0 || gh < 0) continue;
        if (ix.comp[fg][h] != ix.comp[f][gh])
          r.add("associativity", "(" + c.arrows[f].id + " ; " + c.arrows[g].id + ") ; " +
                                     c.arrows[h].id + " != " + c.arrows[f].id + " ; (" +
                                     c.arrows[g].id + " ; " + c.arrows[h].id + ")");
      }
    }
  return r;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory o;
  o.objects = c.objects;
  o.identity = c.identity;
  for (const auto& a : c.arrows) o.arrows.push_back({a.id, a.tgt, a.src});
  for (const auto& [fg, h] : c.composition) o.composition[{fg.second, fg.first}] = h;
  return o;
}

Report FinFunctor::validate() const {
  Report r;
  for (const auto& o : source->objects) {
    auto it = object_map.find(o);
    if (it == object_map.end()) {
      r.add("object-map-total", "no image for object " + o);
      continue;
    }
    if (!target->has_object(it->second))
      r.add("object-map-range", "image of " + o + " is not a target object");
  }
  for (const auto& a : source->arrows) {
    auto it = arrow_map.find(a.id);
    if (it == arrow_map.end()) {
      r.add("arrow-map-total", "no image for arrow " + a.id);
      continue;
    }
    const Arrow* im = target->arrow(it->second);
    if (!im) {
      r.add("arrow-map-range", "image of " + a.id + " is not a target arrow");
      continue;
    }
    if (im->src != object_map.at(a.src) || im->tgt != object_map.at(a.tgt))
      r.add("preserves-endpoints", "image of " + a.id + " has wrong endpoints");
  }
  if (!r.ok()) return r;
  for (const auto& [o, ida] : source->identity)
    if (arrow_map.at(ida) != target->identity.at(object_map.at(o)))
      r.add("preserves-identities", "identity of " + o + " not sent to an identity");
  for (const auto& [fg, h] : source->composition) {
    auto lhs = target->compose(arrow_map.at(fg.first), arrow_map.at(fg.second));
    if (!lhs || *lhs != arrow_map.at(h))
      r.add("preserves-composition",
            "image of " + fg.first + " ; " + fg.second + " is not the composite of the images");
  }
  return r;
}

bool FinFunctor::fully_faithful() const {
  for (const auto& a : source->objects)
    for (const auto& b : source->objects) {
      std::vector<Id> ha = source->hom(a, b);
      std::vector<Id> hb = target->hom(object_map.at(a), object_map.at(b));
      std::set<Id> images;
      for (const auto& f : ha) images.insert(arrow_map.at(f));
      if (images.size() != ha.size() || images.size() != hb.size()) return false;
    }
  return true;
}

const std::vector<std::string>& SetFunctor::at(const Id& o) const { return carrier.at(o); }

const std::map<std::string, std::string>& SetFunctor::map_of(const Id& a) const {
  return action.at(a);
}

Report SetFunctor::validate() const {
  Report r;
  for (const auto& o : base->objects)
    if (!carrier.count(o)) r.add("carrier-total", "no carrier for object " + o);
  static const std::map<std::string, std::string> kEmptyFn;
  for (const auto& a : base->arrows) {
    if (!carrier.count(a.src) || !carrier.count(a.tgt)) continue;
    if (!action.count(a.id) && !carrier.at(a.src).empty()) {
      r.add("action-total", "no function for arrow " + a.id);
      continue;
    }
    const auto& fn = action.count(a.id) ? action.at(a.id) : kEmptyFn;
    const auto& dom = carrier.at(a.src);
    const auto& cod = carrier.at(a.tgt);
    std::set<std::string> codset(cod.begin(), cod.end());
    for (const auto& x : dom) {
      auto it = fn.find(x);
      if (it == fn.end())
        r.add("function-total", "arrow " + a.id + " undefined on " + x);
      else if (!codset.count(it->second))
        r.add("function-range", "arrow " + a.id + " maps " + x + " outside the codomain");
    }
  }
  if (!r.ok()) return r;
  for (const auto& [o, ida] : base->identity)
    for (const auto& x : carrier.at(o))
      if (action.at(ida).at(x) != x)
        r.add("identity-action", "identity of " + o + " moves " + x);
  for (const auto& [fg, h] : base->composition) {
    const Arrow* f = base->arrow(fg.first);
    for (const auto& x : carrier.at(f->src)) {
      const std::string& via = action.at(fg.second).at(action.at(fg.first).at(x));
      if (via != action.at(h).at(x))
        r.add("functoriality",
              "action of " + h + " disagrees with " + fg.first + " then " + fg.second + " on " + x);
    }
  }
  return r;
}

Report check_naturality(const NatTransform& t) {
  Report r;
  if (t.source.base != t.target.base &&
      !(t.source.base && t.target.base && t.source.base->objects == t.target.base->objects &&
        t.source.base->arrows.size() == t.target.base->arrows.size())) {
    r.add("shared-base", "source and target do not share a base category");
    return r;
  }
  const FinCategory& base = *t.source.base;
  for (const auto& o : base.objects) {
    if (!t.components.count(o)) {
      r.add("component-total", "no component at " + o);
      continue;
    }
    for (const auto& x : t.source.at(o))
      if (!t.components.at(o).count(x)) r.add("component-total", "component at " + o + " undefined on " + x);
  }
  if (!r.ok()) return r;
  for (const auto& a : base.arrows) {
    for (const auto& x : t.source.at(a.src)) {
      const std::string& down_then_right = t.target.map_of(a.id).at(t.components.at(a.src).at(x));
      const std::string& right_then_down = t.components.at(a.tgt).at(t.source.map_of(a.id).at(x));
      if (down_then_right != right_then_down)
        r.add("naturality", "square for arrow " + a.id + " fails at element " + x);
    }
  }
  return r;
}

ColimitResult colimit_set_functor(const SetFunctor& f) {
  // tag every element of the object-indexed disjoint union
  std::vector<std::pair<Id, std::string>> elems;
  std::map<std::pair<Id, std::string>, std::size_t> index;
  for (const auto& o : f.base->objects)
    for (const auto& x : f.at(o)) {
      index[{o, x}] = elems.size();
      elems.push_back({o, x});
    }
  UnionFind uf(elems.size());
  for (const auto& a : f.base->arrows)
    for (const auto& x : f.at(a.src))
      uf.unite(index.at({a.src, x}), index.at({a.tgt, f.map_of(a.id).at(x)}));

  // canonical representative: lexicographically least (object, element) pair
  std::map<std::size_t, std::pair<Id, std::string>> rep;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::size_t root = uf.find(i);
    auto it = rep.find(root);
    if (it == rep.end() || elems[i] < it->second) rep[root] = elems[i];
  }
  ColimitResult out;
  std::set<std::string> apex;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& r = rep.at(uf.find(i));
    std::string cls = r.first + ":" + r.second;
    out.injection[elems[i]] = cls;
    apex.insert(cls);
  }
  out.apex.assign(apex.begin(), apex.end());
  return out;
}

namespace {

// Backtracking isomorphism search at the arrow level; object mapping is
// induced. Hom-profile pruning keeps this fast at desk scale.
struct IsoSearch {
  const FinCategory& a;
  const FinCategory& b;
  CatIndex ia, ib;
  std::vector<int> omap;  // a-object index -> b-object index
  std::vector<int> amap;  // a-arrow index -> b-arrow index
  std::vector<bool> oused, aused;

  IsoSearch(const FinCategory& a_, const FinCategory& b_) : a(a_), b(b_), ia(a_), ib(b_) {}

  bool arrows_consistent(int fa, int fb) {
    if (ia.src[fa] < 0 || ia.tgt[fa] < 0) return false;
    int so = omap[ia.src[fa]], to = omap[ia.tgt[fa]];
    if (ib.src[fb] != so || ib.tgt[fb] != to) return false;
    // identities to identities
    bool fa_id = ia.ident[ia.src[fa]] == fa;
    bool fb_id = ib.ident[ib.src[fb]] == fb;
    if (fa_id != fb_id) return false;
    // composition against already-assigned arrows
    int n = static_cast<int>(a.arrows.size());
    for (int g = 0; g < n; ++g) {
      if (amap[g] < 0 && g != fa) continue;
      int gb = g == fa ? fb : amap[g];
      if (ia.tgt[fa] == ia.src[g]) {
        int h = ia.comp[fa][g];
        if (h >= 0 && (amap[h] >= 0 || h == fa)) {
          int hb = h == fa ? fb : amap[h];
          if (ib.comp[fb][gb] != hb) return false;
        }
      }
      if (ia.tgt[g] == ia.src[fa]) {
        int h = ia.comp[g][fa];
        if (h >= 0 && (amap[h] >= 0 || h == fa)) {
          int hb = h == fa ? fb : amap[h];
          if (ib.comp[gb][fb] != hb) return false;
        }
      }
    }
    return true;
  }

  bool assign_arrows(std::size_t k) {
    if (k == a.arrows.size()) return true;
    for (int fb = 0; fb < static_cast<int>(b.arrows.size()); ++fb) {
      if (aused[fb]) continue;
      if (!arrows_consistent(static_cast<int>(k), fb)) continue;
      amap[k] = fb;
      aused[fb] = true;
      if (assign_arrows(k + 1)) return true;
      amap[k] = -1;
      aused[fb] = false;
    }
    return false;
  }

  bool assign_objects(std::size_t k) {
    if (k == a.objects.size()) {
      amap.assign(a.arrows.size(), -1);
      aused.assign(b.arrows.size(), false);
      return assign_arrows(0);
    }
    for (int ob = 0; ob < static_cast<int>(b.objects.size()); ++ob) {
      if (oused[ob]) continue;
      // prune: endo-hom size must match
      if (a.hom(a.objects[k], a.objects[k]).size() != b.hom(b.objects[ob], b.objects[ob]).size())
        continue;
      omap[k] = ob;
      oused[ob] = true;
      bool fine = true;
      for (std::size_t j = 0; j <= k && fine; ++j) {
        if (a.hom(a.objects[k], a.objects[j]).size() !=
                b.hom(b.objects[ob], b.objects[omap[j]]).size() ||
            a.hom(a.objects[j], a.objects[k]).size() !=
                b.hom(b.objects[omap[j]], b.objects[ob]).size())
          fine = false;
      }
      if (fine && assign_objects(k + 1)) return true;
      omap[k] = -1;
      oused[ob] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<CatIso> find_category_iso(const FinCategory& a, const FinCategory& b) {
  if (a.objects.size() != b.objects.size() || a.arrows.size() != b.arrows.size())
    return std::nullopt;
  IsoSearch s(a, b);
  s.omap.assign(a.objects.size(), -1);
  s.oused.assign(b.objects.size(), false);
  if (!s.assign_objects(0)) return std::nullopt;
  CatIso iso;
  for (std::size_t i = 0; i < a.objects.size(); ++i)
    iso.object_map[a.objects[i]] = b.objects[s.omap[i]];
  for (std::size_t i = 0; i < a.arrows.size(); ++i)
    iso.arrow_map[a.arrows[i].id] = b.arrows[s.amap[i]].id;
  return iso;
}

namespace {

// Shared worker for natural transformation enumeration. Assigns component
// values element by element, checking every naturality square whose inputs
// are already fixed.
struct NatSearch {
  const SetFunctor& f;
  const SetFunctor& g;
  bool bijective;
  std::vector<std::pair<Id, std::string>> slots;  // (object, element) in order
  std::map<Id, std::map<std::string, std::string>> comp;
  std::map<Id, std::set<std::string>> used;  // only for bijective mode
  std::vector<std::map<Id, std::map<std::string, std::string>>> out;

  bool square_ok(const Id& obj, const std::string& x) {
    for (const auto& a : f.base->arrows) {
      if (a.src == obj) {
        const std::string& fx = f.map_of(a.id).at(x);
        auto it = comp[a.tgt].find(fx);
        if (it != comp[a.tgt].end() &&
            g.map_of(a.id).at(comp[obj].at(x)) != it->second)
          return false;
      }
      if (a.tgt == obj) {
        for (const auto& [y, cy] : comp[a.src]) {
          if (f.map_of(a.id).at(y) == x && g.map_of(a.id).at(cy) != comp[obj].at(x))
            return false;
        }
      }
      if (a.src == obj && a.tgt == obj) {
        // endo arrows already covered by the two cases above
      }
    }
    return true;
  }

  void go(std::size_t k) {
    if (k == slots.size()) {
      out.push_back(comp);
      return;
    }
    const auto& [obj, x] = slots[k];
    for (const auto& y : g.at(obj)) {
      if (bijective && used[obj].count(y)) continue;
      comp[obj][x] = y;
      if (bijective) used[obj].insert(y);
      if (square_ok(obj, x)) go(k + 1);
      comp[obj].erase(x);
      if (bijective) used[obj].erase(y);
    }
  }
};

}  // namespace

std::vector<std::map<Id, std::map<std::string, std::string>>> enumerate_nat(
    const SetFunctor& f, const SetFunctor& g) {
  NatSearch s{f, g, false, {}, {}, {}, {}};
  for (const auto& o : f.base->objects)
    for (const auto& x : f.at(o)) s.slots.push_back({o, x});
  s.go(0);
  return s.out;
}

std::vector<std::map<Id, std::map<std::string, std::string>>> enumerate_nat_iso(
    const SetFunctor& f, const SetFunctor& g) {
  for (const auto& o : f.base->objects)
    if (f.at(o).size() != g.at(o).size()) return {};
  NatSearch s{f, g, true, {}, {}, {}, {}};
  for (const auto& o : f.base->objects)
    for (const auto& x : f.at(o)) s.slots.push_back({o, x});
  s.go(0);
  return s.out;
}

}  // namespace fincat
