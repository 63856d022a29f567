#include "fincat/globular.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace fincat::glob {
namespace {

std::string an(int col, int row) { return "a" + std::to_string(col) + "_" + std::to_string(row); }
std::string cn(int col, int row) { return "c" + std::to_string(col) + "_" + std::to_string(row); }
std::string vn(int col) { return "v" + std::to_string(col); }

struct Boundary {
  std::string left0, right0;
  std::vector<std::string> bottom1, top1;
};

Boundary boundary_of(const PdLabeling& l) {
  Boundary b;
  int w = l.shape.width();
  b.left0 = l.into.map0.at(vn(0));
  b.right0 = l.into.map0.at(vn(w));
  for (int j = 0; j < w; ++j) {
    b.bottom1.push_back(l.into.map1.at(an(j, 0)));
    b.top1.push_back(l.into.map1.at(an(j, l.shape.heights[j])));
  }
  return b;
}

}  // namespace

Report GlobularSet2::validate() const {
  Report r;
  std::set<std::string> c0(cells0.begin(), cells0.end());
  std::set<std::string> c1(cells1.begin(), cells1.end());
  std::set<std::string> c2(cells2.begin(), cells2.end());
  if (c0.size() != cells0.size() || c1.size() != cells1.size() || c2.size() != cells2.size())
    r.add("cells-unique", "duplicate cell id");
  for (const auto& a : cells1) {
    if (!s1.count(a) || !c0.count(s1.at(a))) r.add("s1-total", a);
    if (!t1.count(a) || !c0.count(t1.at(a))) r.add("t1-total", a);
  }
  for (const auto& c : cells2) {
    if (!s2.count(c) || !c1.count(s2.at(c))) r.add("s2-total", c);
    if (!t2.count(c) || !c1.count(t2.at(c))) r.add("t2-total", c);
  }
  if (!r.ok()) return r;
  for (const auto& c : cells2) {
    if (s1.at(s2.at(c)) != s1.at(t2.at(c))) r.add("globularity-s", c);
    if (t1.at(s2.at(c)) != t1.at(t2.at(c))) r.add("globularity-t", c);
  }
  return r;
}

std::string Pd2::encode() const {
  std::string s = "pd(";
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(heights[i]);
  }
  return s + ")";
}

GlobularSet2 pd_realize(const Pd2& p) {
  GlobularSet2 g;
  int w = p.width();
  for (int i = 0; i <= w; ++i) g.cells0.push_back(vn(i));
  for (int i = 0; i < w; ++i) {
    int k = p.heights[i];
    int levels = k == 0 ? 1 : k + 1;
    for (int j = 0; j < levels; ++j) {
      g.cells1.push_back(an(i, j));
      g.s1[an(i, j)] = vn(i);
      g.t1[an(i, j)] = vn(i + 1);
    }
    for (int j = 0; j < k; ++j) {
      g.cells2.push_back(cn(i, j));
      g.s2[cn(i, j)] = an(i, j);
      g.t2[cn(i, j)] = an(i, j + 1);
    }
  }
  return g;
}

Report GlobMorphism::validate(const GlobularSet2& from, const GlobularSet2& to) const {
  Report r;
  std::set<std::string> t0(to.cells0.begin(), to.cells0.end());
  std::set<std::string> t1s(to.cells1.begin(), to.cells1.end());
  std::set<std::string> t2s(to.cells2.begin(), to.cells2.end());
  for (const auto& v : from.cells0)
    if (!map0.count(v) || !t0.count(map0.at(v))) r.add("map0-total", v);
  for (const auto& a : from.cells1)
    if (!map1.count(a) || !t1s.count(map1.at(a))) r.add("map1-total", a);
  for (const auto& c : from.cells2)
    if (!map2.count(c) || !t2s.count(map2.at(c))) r.add("map2-total", c);
  if (!r.ok()) return r;
  for (const auto& a : from.cells1) {
    if (to.s1.at(map1.at(a)) != map0.at(from.s1.at(a))) r.add("commutes-s1", a);
    if (to.t1.at(map1.at(a)) != map0.at(from.t1.at(a))) r.add("commutes-t1", a);
  }
  for (const auto& c : from.cells2) {
    if (to.s2.at(map2.at(c)) != map1.at(from.s2.at(c))) r.add("commutes-s2", c);
    if (to.t2.at(map2.at(c)) != map1.at(from.t2.at(c))) r.add("commutes-t2", c);
  }
  return r;
}

std::string GlobMorphism::encode() const {
  std::string s = "0{";
  for (const auto& [k, v] : map0) s += k + ">" + v + ";";
  s += "}1{";
  for (const auto& [k, v] : map1) s += k + ">" + v + ";";
  s += "}2{";
  for (const auto& [k, v] : map2) s += k + ">" + v + ";";
  return s + "}";
}

std::vector<GlobMorphism> enumerate_glob_morphisms(const GlobularSet2& from,
                                                   const GlobularSet2& to) {
  std::vector<GlobMorphism> out;
  GlobMorphism cur;
  // assign 0-cells, then 1-cells constrained by endpoints, then 2-cells
  std::function<void(std::size_t)> go2 = [&](std::size_t k) {
    if (k == from.cells2.size()) {
      out.push_back(cur);
      return;
    }
    const std::string& c = from.cells2[k];
    for (const auto& img : to.cells2) {
      if (to.s2.at(img) != cur.map1.at(from.s2.at(c))) continue;
      if (to.t2.at(img) != cur.map1.at(from.t2.at(c))) continue;
      cur.map2[c] = img;
      go2(k + 1);
      cur.map2.erase(c);
    }
  };
  std::function<void(std::size_t)> go1 = [&](std::size_t k) {
    if (k == from.cells1.size()) {
      go2(0);
      return;
    }
    const std::string& a = from.cells1[k];
    for (const auto& img : to.cells1) {
      if (to.s1.at(img) != cur.map0.at(from.s1.at(a))) continue;
      if (to.t1.at(img) != cur.map0.at(from.t1.at(a))) continue;
      cur.map1[a] = img;
      go1(k + 1);
      cur.map1.erase(a);
    }
  };
  std::function<void(std::size_t)> go0 = [&](std::size_t k) {
    if (k == from.cells0.size()) {
      go1(0);
      return;
    }
    const std::string& v = from.cells0[k];
    for (const auto& img : to.cells0) {
      cur.map0[v] = img;
      go0(k + 1);
      cur.map0.erase(v);
    }
  };
  go0(0);
  return out;
}

Pd2 pd_compose(const Pd2& outer, const std::vector<ColumnFill>& fills) {
  if (fills.size() != outer.heights.size())
    throw std::invalid_argument("pd_compose: one fill per column expected");
  Pd2 out;
  for (int i = 0; i < outer.width(); ++i) {
    int k = outer.heights[i];
    const ColumnFill& fill = fills[i];
    if (k == 0) {
      if (!fill.stack.empty())
        throw std::invalid_argument("pd_compose: bare column " + std::to_string(i) +
                                    " takes a path length, not a stack");
      if (fill.path_len < 0) throw std::invalid_argument("pd_compose: negative path length");
      for (int j = 0; j < fill.path_len; ++j) out.heights.push_back(0);
      continue;
    }
    if (static_cast<int>(fill.stack.size()) != k)
      throw std::invalid_argument("pd_compose: column " + std::to_string(i) + " needs " +
                                  std::to_string(k) + " labels");
    int w = fill.stack[0].width();
    for (const auto& lab : fill.stack)
      if (lab.width() != w)
        throw std::invalid_argument("pd_compose: width mismatch within column " +
                                    std::to_string(i));
    for (int j = 0; j < w; ++j) {
      int h = 0;
      for (const auto& lab : fill.stack) h += lab.heights[j];
      out.heights.push_back(h);
    }
  }
  return out;
}

Report PdLabeling::validate(const GlobularSet2& x) const {
  return into.validate(pd_realize(shape), x);
}

std::string PdLabeling::encode() const { return shape.encode() + into.encode(); }

std::vector<PdLabeling> free2_cells(const GlobularSet2& x, int size_bound) {
  std::vector<Pd2> shapes;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int budget) {
    shapes.push_back(Pd2{cur});
    if (static_cast<int>(cur.size()) == size_bound) return;
    for (int h = 0; h <= budget; ++h) {
      cur.push_back(h);
      grow(cur, budget - h);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  grow(cur, size_bound);

  std::vector<PdLabeling> out;
  for (const auto& shape : shapes) {
    GlobularSet2 realized = pd_realize(shape);
    for (const auto& m : enumerate_glob_morphisms(realized, x))
      out.push_back(PdLabeling{shape, m});
  }
  return out;
}

namespace {

void validate_fills(const GlobularSet2& x, const Pd2& outer,
                    const std::vector<ColumnFillLabeled>& fills) {
  if (fills.size() != outer.heights.size())
    throw std::invalid_argument("substitution: one fill per column expected");
  std::string at;  // running right boundary 0-cell
  bool first = true;
  for (int i = 0; i < outer.width(); ++i) {
    const auto& fill = fills[i];
    std::string left, right;
    if (outer.heights[i] == 0) {
      if (!fill.stack.empty())
        throw std::invalid_argument("substitution: bare column " + std::to_string(i) +
                                    " takes a path");
      left = fill.path.start0;
      std::string cursor = fill.path.start0;
      for (const auto& c1 : fill.path.cells1) {
        if (x.s1.at(c1) != cursor)
          throw std::invalid_argument("substitution: path in column " + std::to_string(i) +
                                      " is not composable");
        cursor = x.t1.at(c1);
      }
      right = cursor;
    } else {
      if (static_cast<int>(fill.stack.size()) != outer.heights[i])
        throw std::invalid_argument("substitution: column " + std::to_string(i) + " needs " +
                                    std::to_string(outer.heights[i]) + " labels");
      int w = fill.stack[0].shape.width();
      for (const auto& lab : fill.stack) {
        if (lab.shape.width() != w)
          throw std::invalid_argument("substitution: width mismatch within column " +
                                      std::to_string(i));
        Report ok = lab.validate(x);
        if (!ok.ok())
          throw std::invalid_argument("substitution: label in column " + std::to_string(i) +
                                      " is not a morphism: " + ok.violations[0].rule);
      }
      for (std::size_t s = 1; s < fill.stack.size(); ++s) {
        Boundary below = boundary_of(fill.stack[s - 1]);
        Boundary above = boundary_of(fill.stack[s]);
        if (below.top1 != above.bottom1 || below.left0 != above.left0 ||
            below.right0 != above.right0)
          throw std::invalid_argument("substitution: stack boundary mismatch in column " +
                                      std::to_string(i));
      }
      Boundary b = boundary_of(fill.stack[0]);
      left = b.left0;
      right = b.right0;
    }
    if (!first && left != at)
      throw std::invalid_argument("substitution: 0-cell mismatch entering column " +
                                  std::to_string(i));
    at = right;
    first = false;
  }
}

std::vector<ColumnFill> shape_fills(const std::vector<ColumnFillLabeled>& fills) {
  std::vector<ColumnFill> out;
  for (const auto& f : fills) {
    ColumnFill cf;
    for (const auto& lab : f.stack) cf.stack.push_back(lab.shape);
    cf.path_len = static_cast<int>(f.path.cells1.size());
    out.push_back(cf);
  }
  return out;
}

}  // namespace

PdLabeling mu2_substitute(const GlobularSet2& x, const Pd2& outer,
                          const std::vector<ColumnFillLabeled>& fills,
                          const std::string& start0) {
  if (outer.width() == 0) {
    // a lone 0-cell: nothing to substitute, the label is the vertex itself
    PdLabeling out;
    out.shape = outer;
    out.into.map0[vn(0)] = start0;
    Report ok = out.validate(x);
    if (!ok.ok()) throw std::invalid_argument("substitution: width-0 outer needs its 0-cell label");
    return out;
  }
  validate_fills(x, outer, fills);
  PdLabeling out;
  out.shape = pd_compose(outer, shape_fills(fills));

  int col = 0;  // global column cursor in the composite
  for (int i = 0; i < outer.width(); ++i) {
    const auto& fill = fills[i];
    if (outer.heights[i] == 0) {
      std::string cursor = fill.path.start0;
      for (std::size_t j = 0; j < fill.path.cells1.size(); ++j) {
        out.into.map0[vn(col)] = cursor;
        out.into.map1[an(col, 0)] = fill.path.cells1[j];
        cursor = x.t1.at(fill.path.cells1[j]);
        ++col;
      }
      out.into.map0[vn(col)] = cursor;
      continue;
    }
    int w = fill.stack[0].shape.width();
    for (int j = 0; j < w; ++j) {
      // vertical trail of 1-cell images for this composite column
      std::vector<std::string> trail;
      std::vector<std::string> two_cells;
      for (std::size_t s = 0; s < fill.stack.size(); ++s) {
        const PdLabeling& lab = fill.stack[s];
        int h = lab.shape.heights[j];
        if (s == 0) trail.push_back(lab.into.map1.at(an(j, 0)));
        for (int r = 1; r <= h; ++r) trail.push_back(lab.into.map1.at(an(j, r)));
        for (int r = 0; r < h; ++r) two_cells.push_back(lab.into.map2.at(cn(j, r)));
      }
      for (std::size_t r = 0; r < trail.size(); ++r) out.into.map1[an(col, static_cast<int>(r))] = trail[r];
      for (std::size_t r = 0; r < two_cells.size(); ++r)
        out.into.map2[cn(col, static_cast<int>(r))] = two_cells[r];
      out.into.map0[vn(col)] = fill.stack[0].into.map0.at(vn(j));
      ++col;
    }
    out.into.map0[vn(col)] = fill.stack[0].into.map0.at(vn(w));
  }
  Report ok = out.validate(x);
  if (!ok.ok())
    throw std::invalid_argument("substitution: composite is not a morphism: " +
                                ok.violations[0].rule + " " + ok.violations[0].detail);
  return out;
}

PdLabeling eta2(const GlobularSet2& x, const std::string& cell2) {
  PdLabeling l;
  l.shape = Pd2{{1}};
  const std::string& s = x.s2.at(cell2);
  const std::string& t = x.t2.at(cell2);
  l.into.map0[vn(0)] = x.s1.at(s);
  l.into.map0[vn(1)] = x.t1.at(s);
  l.into.map1[an(0, 0)] = s;
  l.into.map1[an(0, 1)] = t;
  l.into.map2[cn(0, 0)] = cell2;
  Report ok = l.validate(x);
  if (!ok.ok()) throw std::invalid_argument("eta2: " + cell2 + " is not a 2-cell of the target");
  return l;
}

std::vector<ColumnFillLabeled> relabel_fills(const std::vector<ColumnFillLabeled>& fills,
                                             const GlobMorphism& through) {
  std::vector<ColumnFillLabeled> out;
  for (const auto& f : fills) {
    ColumnFillLabeled g;
    for (const auto& lab : f.stack) {
      PdLabeling moved;
      moved.shape = lab.shape;
      for (const auto& [k, v] : lab.into.map0) moved.into.map0[k] = through.map0.at(v);
      for (const auto& [k, v] : lab.into.map1) moved.into.map1[k] = through.map1.at(v);
      for (const auto& [k, v] : lab.into.map2) moved.into.map2[k] = through.map2.at(v);
      g.stack.push_back(moved);
    }
    if (f.stack.empty()) {
      g.path.start0 = through.map0.at(f.path.start0);
      for (const auto& c : f.path.cells1) g.path.cells1.push_back(through.map1.at(c));
    }
    out.push_back(g);
  }
  return out;
}

bool fills_equal(const std::vector<ColumnFillLabeled>& a, const std::vector<ColumnFillLabeled>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].stack.size() != b[i].stack.size()) return false;
    for (std::size_t s = 0; s < a[i].stack.size(); ++s)
      if (a[i].stack[s].encode() != b[i].stack[s].encode()) return false;
    if (a[i].stack.empty()) {
      if (a[i].path.start0 != b[i].path.start0 || a[i].path.cells1 != b[i].path.cells1)
        return false;
    }
  }
  return true;
}

Factorization2 arity_factorize2(const GlobularSet2& x, const Pd2& outer,
                                const std::vector<ColumnFillLabeled>& fills) {
  validate_fills(x, outer, fills);
  Factorization2 out;
  PdLabeling composite = mu2_substitute(x, outer, fills);
  out.middle = composite.shape;
  out.f = composite.into;

  // e places every image at its block position inside the middle
  int col = 0;
  for (int i = 0; i < outer.width(); ++i) {
    const auto& fill = fills[i];
    ColumnFillLabeled ef;
    if (outer.heights[i] == 0) {
      ef.path.start0 = vn(col);
      for (std::size_t j = 0; j < fill.path.cells1.size(); ++j) {
        ef.path.cells1.push_back(an(col, 0));
        ++col;
      }
      out.e.push_back(ef);
      continue;
    }
    int w = fill.stack[0].shape.width();
    std::vector<int> offset(w, 0);
    for (const auto& lab : fill.stack) {
      PdLabeling placed;
      placed.shape = lab.shape;
      for (int j = 0; j <= w; ++j) placed.into.map0[vn(j)] = vn(col + j);
      for (int j = 0; j < w; ++j) {
        int h = lab.shape.heights[j];
        int levels = h == 0 ? 1 : h + 1;
        for (int r = 0; r < levels; ++r)
          placed.into.map1[an(j, r)] = an(col + j, offset[j] + r);
        for (int r = 0; r < h; ++r) placed.into.map2[cn(j, r)] = cn(col + j, offset[j] + r);
      }
      for (int j = 0; j < w; ++j) offset[j] += lab.shape.heights[j];
      ef.stack.push_back(placed);
    }
    out.e.push_back(ef);
    col += w;
  }

  // exactness: pushing e through f yields the original fills
  if (!fills_equal(relabel_fills(out.e, out.f), fills))
    throw std::invalid_argument("arity_factorize2: recomposition failed");
  return out;
}

namespace {

std::string encode_path_cell(const LabeledPath& p) {
  std::string s = "P[" + p.start0;
  for (const auto& c : p.cells1) s += "|" + c;
  return s + "]";
}

}  // namespace

GlobularSet2 free2_truncation(const GlobularSet2& y, int bound) {
  GlobularSet2 out;
  out.cells0 = y.cells0;

  // paths of 1-cells, length <= bound
  std::vector<LabeledPath> paths;
  for (const auto& v : y.cells0) paths.push_back({v, {}});
  std::vector<LabeledPath> frontier = paths;
  for (int len = 1; len <= bound; ++len) {
    std::vector<LabeledPath> next;
    for (const auto& p : frontier) {
      std::string end = p.cells1.empty() ? p.start0 : y.t1.at(p.cells1.back());
      for (const auto& a : y.cells1)
        if (y.s1.at(a) == end) {
          LabeledPath q = p;
          q.cells1.push_back(a);
          next.push_back(q);
        }
    }
    paths.insert(paths.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& p : paths) {
    std::string id = encode_path_cell(p);
    out.cells1.push_back(id);
    out.s1[id] = p.start0;
    out.t1[id] = p.cells1.empty() ? p.start0 : y.t1.at(p.cells1.back());
  }

  for (const auto& cell : free2_cells(y, bound)) {
    // keep only cells whose boundary paths are within the path bound
    if (cell.shape.width() > bound) continue;
    std::string id = "F" + cell.encode();
    Boundary b = boundary_of(cell);
    LabeledPath bottom{b.left0, b.bottom1};
    LabeledPath top{b.left0, b.top1};
    out.cells2.push_back(id);
    out.s2[id] = encode_path_cell(bottom);
    out.t2[id] = encode_path_cell(top);
  }
  return out;
}

Pd2Site pd2_site(const std::vector<Pd2>& shapes) {
  Pd2Site site;
  site.shapes = shapes;
  auto cat = std::make_shared<FinCategory>();
  std::map<std::string, GlobularSet2> realized;
  for (const auto& s : shapes) {
    cat->objects.push_back(s.encode());
    realized[s.encode()] = pd_realize(s);
    site.shape_of[s.encode()] = s;
  }
  int counter = 0;
  std::map<std::tuple<Id, Id, std::string>, Id> lookup;
  std::vector<std::tuple<Id, Id, GlobMorphism>> all;
  for (const auto& a : shapes)
    for (const auto& b : shapes)
      for (const auto& m : enumerate_glob_morphisms(realized[a.encode()], realized[b.encode()])) {
        Id id = "u" + std::to_string(counter++);
        cat->arrows.push_back({id, a.encode(), b.encode()});
        site.arrow_morphism[id] = m;
        lookup[{a.encode(), b.encode(), m.encode()}] = id;
        all.push_back({a.encode(), b.encode(), m});
      }
  for (const auto& s : shapes) {
    GlobMorphism ident;
    const GlobularSet2& r = realized[s.encode()];
    for (const auto& v : r.cells0) ident.map0[v] = v;
    for (const auto& a : r.cells1) ident.map1[a] = a;
    for (const auto& c : r.cells2) ident.map2[c] = c;
    cat->identity[s.encode()] = lookup.at({s.encode(), s.encode(), ident.encode()});
  }
  for (const auto& [a1, b1, m1] : all)
    for (const auto& [a2, b2, m2] : all) {
      if (b1 != a2) continue;
      GlobMorphism comp;
      for (const auto& [k, v] : m1.map0) comp.map0[k] = m2.map0.at(v);
      for (const auto& [k, v] : m1.map1) comp.map1[k] = m2.map1.at(v);
      for (const auto& [k, v] : m1.map2) comp.map2[k] = m2.map2.at(v);
      cat->composition[{lookup.at({a1, b1, m1.encode()}), lookup.at({a2, b2, m2.encode()})}] =
          lookup.at({a1, b2, comp.encode()});
    }
  site.category = cat;
  return site;
}

SetFunctor glob_nerve2(const GlobularSet2& g, const Pd2Site& site) {
  SetFunctor x;
  x.base = std::make_shared<FinCategory>(opposite(*site.category));
  std::map<Id, std::vector<GlobMorphism>> homs;
  for (const auto& s : site.shapes) {
    std::vector<std::string> lvl;
    auto ms = enumerate_glob_morphisms(pd_realize(s), g);
    for (const auto& m : ms) lvl.push_back(m.encode());
    homs[s.encode()] = std::move(ms);
    x.carrier[s.encode()] = lvl;
  }
  for (const auto& [id, u] : site.arrow_morphism) {
    const Arrow* arr = site.category->arrow(id);
    // u : rho -> pi; precomposition maps Hom(pi, g) -> Hom(rho, g)
    std::map<std::string, std::string> fn;
    for (const auto& m : homs.at(arr->tgt)) {
      GlobMorphism comp;
      for (const auto& [k, v] : u.map0) comp.map0[k] = m.map0.at(v);
      for (const auto& [k, v] : u.map1) comp.map1[k] = m.map1.at(v);
      for (const auto& [k, v] : u.map2) comp.map2[k] = m.map2.at(v);
      fn[m.encode()] = comp.encode();
    }
    x.action[id] = fn;
  }
  return x;
}

Segal2Result segal2_check(const SetFunctor& x, const Pd2Site& site) {
  Segal2Result res;
  const std::string point = Pd2{{}}.encode();
  const std::string arrow = Pd2{{0}}.encode();
  const std::string twocell = Pd2{{1}}.encode();
  for (const auto& need : {point, arrow, twocell})
    if (!site.shape_of.count(need)) {
      res.failing_shape = need;
      res.detail = "the site does not include the atomic shape " + need;
      return res;
    }

  // locate the structural arrows by the morphisms they carry
  auto find_arrow = [&](const Id& from, const Id& to,
                        const std::function<bool(const GlobMorphism&)>& pick) -> Id {
    for (const auto& [id, m] : site.arrow_morphism) {
      const Arrow* arr = site.category->arrow(id);
      if (arr->src == from && arr->tgt == to && pick(m)) return id;
    }
    throw std::logic_error("segal2_check: structural arrow missing from the site");
  };
  Id src1 = find_arrow(point, arrow, [](const GlobMorphism& m) { return m.map0.at("v0") == "v0"; });
  Id tgt1 = find_arrow(point, arrow, [](const GlobMorphism& m) { return m.map0.at("v0") == "v1"; });
  Id src2 = find_arrow(arrow, twocell,
                       [](const GlobMorphism& m) { return m.map1.at("a0_0") == "a0_0"; });
  Id tgt2 = find_arrow(arrow, twocell,
                       [](const GlobMorphism& m) { return m.map1.at("a0_0") == "a0_1"; });

  GlobularSet2 g;
  g.cells0 = x.at(point);
  g.cells1 = x.at(arrow);
  g.cells2 = x.at(twocell);
  g.s1 = x.map_of(src1);
  g.t1 = x.map_of(tgt1);
  g.s2 = x.map_of(src2);
  g.t2 = x.map_of(tgt2);
  Report valid = g.validate();
  if (!valid.ok()) {
    res.failing_shape = twocell;
    res.detail = "candidate cells violate " + valid.violations[0].rule;
    return res;
  }

  for (const auto& shape : site.shapes) {
    GlobularSet2 realized = pd_realize(shape);
    // assemble the canonical morphism for every element, then compare levels
    std::set<std::string> assembled;
    for (const auto& z : x.at(shape.encode())) {
      GlobMorphism m;
      for (const auto& v : realized.cells0) {
        Id pick = find_arrow(point, shape.encode(),
                             [&](const GlobMorphism& u) { return u.map0.at("v0") == v; });
        m.map0[v] = x.map_of(pick).at(z);
      }
      for (const auto& a : realized.cells1) {
        Id pick = find_arrow(arrow, shape.encode(),
                             [&](const GlobMorphism& u) { return u.map1.at("a0_0") == a; });
        m.map1[a] = x.map_of(pick).at(z);
      }
      for (const auto& c : realized.cells2) {
        Id pick = find_arrow(twocell, shape.encode(),
                             [&](const GlobMorphism& u) { return u.map2.at("c0_0") == c; });
        m.map2[c] = x.map_of(pick).at(z);
      }
      if (!m.validate(realized, g).ok()) {
        res.failing_shape = shape.encode();
        res.detail = "element " + z + " does not restrict to a morphism";
        return res;
      }
      if (!assembled.insert(m.encode()).second) {
        res.failing_shape = shape.encode();
        res.detail = "two elements restrict to the same morphism";
        return res;
      }
    }
    std::set<std::string> expected;
    for (const auto& m : enumerate_glob_morphisms(realized, g)) expected.insert(m.encode());
    if (assembled != expected) {
      res.failing_shape = shape.encode();
      res.detail = "level has " + std::to_string(assembled.size()) + " elements, expected " +
                   std::to_string(expected.size());
      return res;
    }
  }
  res.ok = true;
  res.candidate = g;
  return res;
}

}  // namespace fincat::glob
