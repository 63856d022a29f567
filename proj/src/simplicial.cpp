#include "fincat/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fincat::simp {
namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

}  // namespace

bool MonotoneMap::valid() const {
  if (dom < 0 || cod < 0) return false;
  if (values.size() != static_cast<std::size_t>(dom) + 1) return false;
  for (int i = 0; i <= dom; ++i) {
    if (values[i] < 0 || values[i] > cod) return false;
    if (i > 0 && values[i - 1] > values[i]) return false;
  }
  return true;
}

MonotoneMap identity_map(int n) {
  MonotoneMap m{n, n, {}};
  for (int i = 0; i <= n; ++i) m.values.push_back(i);
  return m;
}

MonotoneMap face(int n, int i) {
  if (i < 0 || i > n + 1) throw std::invalid_argument("face index out of range");
  MonotoneMap m{n, n + 1, {}};
  for (int j = 0; j <= n; ++j) m.values.push_back(j < i ? j : j + 1);
  return m;
}

MonotoneMap degeneracy(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("degeneracy index out of range");
  MonotoneMap m{n + 1, n, {}};
  for (int j = 0; j <= n + 1; ++j) m.values.push_back(j <= i ? j : j - 1);
  return m;
}

MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.cod != g.dom) throw std::invalid_argument("compose_monotone: domain mismatch");
  MonotoneMap m{f.dom, g.cod, {}};
  for (int i = 0; i <= f.dom; ++i) m.values.push_back(g.values[f.values[i]]);
  return m;
}

std::vector<MonotoneMap> all_monotone(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> cur(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.push_back(MonotoneMap{m, n, cur});
    int k = m;
    while (k >= 0 && cur[k] == n) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j <= m; ++j) cur[j] = cur[k];
  }
  return out;
}

DeltaNormalForm normal_form(const MonotoneMap& f) {
  if (!f.valid()) throw std::invalid_argument("normal_form: not a monotone map");
  DeltaNormalForm nf;
  nf.dom = f.dom;
  nf.cod = f.cod;
  for (int j = 0; j < f.dom; ++j)
    if (f.values[j] == f.values[j + 1]) nf.sigmas.push_back(j);
  std::set<int> image(f.values.begin(), f.values.end());
  for (int i = f.cod; i >= 0; --i)
    if (!image.count(i)) nf.deltas.push_back(i);
  return nf;
}

MonotoneMap recompose(const DeltaNormalForm& nf) {
  MonotoneMap cur = identity_map(nf.dom);
  // degeneracies apply first, innermost (largest index) to outermost
  for (auto it = nf.sigmas.rbegin(); it != nf.sigmas.rend(); ++it)
    cur = compose_monotone(cur, degeneracy(cur.cod - 1, *it));
  for (auto it = nf.deltas.rbegin(); it != nf.deltas.rend(); ++it)
    cur = compose_monotone(cur, face(cur.cod, *it));
  if (cur.cod != nf.cod) throw std::invalid_argument("recompose: index bookkeeping is off");
  return cur;
}

Report TruncSimplicialSet::validate() const {
  Report r;
  const int n = trunc;
  if (static_cast<int>(levels.size()) != n + 1) {
    r.add("levels-shape", "expected " + std::to_string(n + 1) + " levels");
    return r;
  }
  auto has_face = [&](int lvl, int i) {
    return lvl >= 1 && lvl < static_cast<int>(face.size()) &&
           i < static_cast<int>(face[lvl].size());
  };
  auto has_degen = [&](int lvl, int i) {
    return lvl < static_cast<int>(degen.size()) && i < static_cast<int>(degen[lvl].size());
  };
  for (int lvl = 1; lvl <= n; ++lvl)
    for (int i = 0; i <= lvl; ++i)
      if (!has_face(lvl, i)) r.add("faces-shape", "missing face action at level " +
                                                      std::to_string(lvl) + " index " + std::to_string(i));
  for (int lvl = 0; lvl < n; ++lvl)
    for (int i = 0; i <= lvl; ++i)
      if (!has_degen(lvl, i)) r.add("degeneracies-shape", "missing degeneracy action at level " +
                                                              std::to_string(lvl) + " index " + std::to_string(i));
  if (!r.ok()) return r;

  auto total = [&](const std::map<std::string, std::string>& fn, int from, int to,
                   const std::string& what) {
    std::set<std::string> cod(levels[to].begin(), levels[to].end());
    for (const auto& x : levels[from]) {
      auto it = fn.find(x);
      if (it == fn.end())
        r.add("action-total", what + " undefined on " + x);
      else if (!cod.count(it->second))
        r.add("action-range", what + " maps " + x + " outside level " + std::to_string(to));
    }
  };
  for (int lvl = 1; lvl <= n; ++lvl)
    for (int i = 0; i <= lvl; ++i)
      total(face[lvl][i], lvl, lvl - 1, "face " + std::to_string(i) + " at level " + std::to_string(lvl));
  for (int lvl = 0; lvl < n; ++lvl)
    for (int i = 0; i <= lvl; ++i)
      total(degen[lvl][i], lvl, lvl + 1, "degeneracy " + std::to_string(i) + " at level " + std::to_string(lvl));
  if (!r.ok()) return r;

  auto name = [](const char* fam, int i, int j, int lvl) {
    return std::string(fam) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
           ") at level " + std::to_string(lvl);
  };
  // face-face: actions of face(i) . face(j) and face(j+1) . face(i), i <= j
  for (int lvl = 2; lvl <= n; ++lvl)
    for (int j = 0; j <= lvl - 1; ++j)
      for (int i = 0; i <= j; ++i)
        for (const auto& x : levels[lvl])
          if (face[lvl - 1][j].at(face[lvl][i].at(x)) != face[lvl - 1][i].at(face[lvl][j + 1].at(x)))
            r.add("delta-delta", name("witness", i, j, lvl) + " element " + x);
  // degeneracy-degeneracy: sigma(j) . sigma(i) = sigma(i) . sigma(j+1), i <= j
  for (int lvl = 0; lvl + 2 <= n; ++lvl)
    for (int j = 0; j <= lvl; ++j)
      for (int i = 0; i <= j; ++i)
        for (const auto& x : levels[lvl])
          if (degen[lvl + 1][i].at(degen[lvl][j].at(x)) !=
              degen[lvl + 1][j + 1].at(degen[lvl][i].at(x)))
            r.add("sigma-sigma", name("witness", i, j, lvl) + " element " + x);
  // mixed family
  for (int lvl = 0; lvl < n; ++lvl)
    for (int j = 0; j <= lvl; ++j)
      for (int i = 0; i <= lvl + 1; ++i)
        for (const auto& x : levels[lvl]) {
          const std::string& lhs = face[lvl + 1][i].at(degen[lvl][j].at(x));
          if (i == j || i == j + 1) {
            if (lhs != x) r.add("sigma-delta-unit", name("witness", i, j, lvl) + " element " + x);
          } else if (i < j) {
            if (lvl < 1) continue;
            if (lhs != degen[lvl - 1][j - 1].at(face[lvl][i].at(x)))
              r.add("sigma-delta-low", name("witness", i, j, lvl) + " element " + x);
          } else {  // i > j + 1
            if (lvl < 1) continue;
            if (lhs != degen[lvl - 1][j].at(face[lvl][i - 1].at(x)))
              r.add("sigma-delta-high", name("witness", i, j, lvl) + " element " + x);
          }
        }
  return r;
}

std::map<std::string, std::string> eval_simplicial(const TruncSimplicialSet& x,
                                                   const MonotoneMap& f) {
  if (f.dom > x.trunc || f.cod > x.trunc)
    throw std::invalid_argument("eval_simplicial: ordinal beyond the truncation");
  DeltaNormalForm nf = normal_form(f);
  std::map<std::string, std::string> out;
  for (const auto& start : x.levels[f.cod]) {
    std::string cur = start;
    int lvl = f.cod;
    for (int i : nf.deltas) {
      cur = x.face[lvl][i].at(cur);
      --lvl;
    }
    for (int j : nf.sigmas) {
      cur = x.degen[lvl][j].at(cur);
      ++lvl;
    }
    out[start] = cur;
  }
  return out;
}

TruncSimplicialSet nerve(const FinCategory& c, int n) {
  for (const auto& o : c.objects)
    if (o.find('|') != std::string::npos)
      throw std::invalid_argument("nerve: object ids must not contain '|'");
  for (const auto& a : c.arrows)
    if (a.id.find('|') != std::string::npos)
      throw std::invalid_argument("nerve: arrow ids must not contain '|'");

  TruncSimplicialSet x;
  x.trunc = n;
  x.levels.resize(n + 1);
  x.face.resize(n + 1);
  x.degen.resize(n + 1);
  x.levels[0] = c.objects;

  // composable tuples, built level by level
  std::vector<std::vector<std::vector<Id>>> tuples(n + 1);
  for (const auto& o : c.objects) tuples[0].push_back({o});  // placeholder: vertex names
  for (int lvl = 1; lvl <= n; ++lvl) {
    if (lvl == 1) {
      for (const auto& a : c.arrows) tuples[1].push_back({a.id});
    } else {
      for (const auto& t : tuples[lvl - 1])
        for (const auto& a : c.arrows)
          if (c.arrow(t.back())->tgt == a.src) {
            auto longer = t;
            longer.push_back(a.id);
            tuples[lvl].push_back(longer);
          }
    }
    for (const auto& t : tuples[lvl]) x.levels[lvl].push_back(join(t, '|'));
  }

  for (int lvl = 1; lvl <= n; ++lvl) {
    x.face[lvl].resize(lvl + 1);
    for (const auto& t : tuples[lvl]) {
      std::string key = join(t, '|');
      for (int i = 0; i <= lvl; ++i) {
        if (lvl == 1) {
          // faces to the vertex level: index 0 picks the target, 1 the source
          x.face[1][i][key] = i == 0 ? c.arrow(t[0])->tgt : c.arrow(t[0])->src;
          continue;
        }
        std::vector<Id> out;
        if (i == 0)
          out.assign(t.begin() + 1, t.end());
        else if (i == lvl)
          out.assign(t.begin(), t.end() - 1);
        else {
          out.assign(t.begin(), t.begin() + (i - 1));
          out.push_back(*c.compose(t[i - 1], t[i]));
          out.insert(out.end(), t.begin() + i + 1, t.end());
        }
        x.face[lvl][i][key] = join(out, '|');
      }
    }
  }
  for (int lvl = 0; lvl < n; ++lvl) {
    x.degen[lvl].resize(lvl + 1);
    if (lvl == 0) {
      for (const auto& o : c.objects) x.degen[0][0][o] = c.identity.at(o);
      continue;
    }
    for (const auto& t : tuples[lvl]) {
      std::string key = join(t, '|');
      for (int i = 0; i <= lvl; ++i) {
        std::vector<Id> out(t.begin(), t.begin() + i);
        Id vertex = i == 0 ? c.arrow(t[0])->src : c.arrow(t[i - 1])->tgt;
        out.push_back(c.identity.at(vertex));
        out.insert(out.end(), t.begin() + i, t.end());
        x.degen[lvl][i][key] = join(out, '|');
      }
    }
  }
  return x;
}

SegalResult segal_check(const TruncSimplicialSet& x) {
  SegalResult res;
  if (x.trunc < 2) {
    res.ok = true;
    res.vacuous = true;
    return res;
  }
  for (int p = 1; p < x.trunc; ++p)
    for (int q = 1; p + q <= x.trunc; ++q) {
      MonotoneMap first{p, p + q, {}};
      for (int i = 0; i <= p; ++i) first.values.push_back(i);
      MonotoneMap last{q, p + q, {}};
      for (int i = 0; i <= q; ++i) last.values.push_back(p + i);
      auto u = eval_simplicial(x, first);
      auto v = eval_simplicial(x, last);
      auto maxp = eval_simplicial(x, MonotoneMap{0, p, {p}});
      auto minq = eval_simplicial(x, MonotoneMap{0, q, {0}});

      std::map<std::pair<std::string, std::string>, std::string> seen;
      for (const auto& z : x.levels[p + q]) {
        auto key = std::make_pair(u.at(z), v.at(z));
        auto [it, fresh] = seen.emplace(key, z);
        if (!fresh) {
          res.ok = false;
          res.p = p;
          res.q = q;
          res.witness = "elements " + it->second + " and " + z + " share the pair (" +
                        key.first + ", " + key.second + ")";
          return res;
        }
      }
      for (const auto& a : x.levels[p])
        for (const auto& b : x.levels[q]) {
          if (maxp.at(a) != minq.at(b)) continue;
          if (!seen.count({a, b})) {
            res.ok = false;
            res.p = p;
            res.q = q;
            res.witness = "no filler for the pair (" + a + ", " + b + ")";
            return res;
          }
        }
    }
  res.ok = true;
  return res;
}

CategorifyResult categorify(const TruncSimplicialSet& x, bool allow_unverified_associativity) {
  SegalResult seg = segal_check(x);
  if (!seg.ok)
    throw std::invalid_argument("categorify: input fails the Segal condition at (" +
                                std::to_string(seg.p) + "," + std::to_string(seg.q) +
                                "): " + seg.witness);
  if (x.trunc < 2)
    throw std::invalid_argument("categorify: truncation below 2 carries no composition data");
  if (x.trunc < 3 && !allow_unverified_associativity)
    throw std::invalid_argument(
        "categorify: truncation 2 cannot certify associativity; pass the explicit flag to "
        "reconstruct anyway");

  CategorifyResult out;
  FinCategory& c = out.category;
  c.objects = x.levels[0];
  auto src_of = eval_simplicial(x, MonotoneMap{0, 1, {0}});
  auto tgt_of = eval_simplicial(x, MonotoneMap{0, 1, {1}});
  for (const auto& e : x.levels[1]) c.arrows.push_back({e, src_of.at(e), tgt_of.at(e)});
  for (const auto& o : x.levels[0]) c.identity[o] = x.degen[0][0].at(o);

  auto first_edge = eval_simplicial(x, MonotoneMap{1, 2, {0, 1}});
  auto second_edge = eval_simplicial(x, MonotoneMap{1, 2, {1, 2}});
  auto long_edge = eval_simplicial(x, MonotoneMap{1, 2, {0, 2}});
  for (const auto& z : x.levels[2])
    c.composition[{first_edge.at(z), second_edge.at(z)}] = long_edge.at(z);

  out.associativity_certified = x.trunc >= 3;
  if (x.trunc >= 3) {
    auto e1 = eval_simplicial(x, MonotoneMap{1, 3, {0, 1}});
    auto e2 = eval_simplicial(x, MonotoneMap{1, 3, {1, 2}});
    auto e3 = eval_simplicial(x, MonotoneMap{1, 3, {2, 3}});
    auto e13 = eval_simplicial(x, MonotoneMap{1, 3, {0, 3}});
    for (const auto& z : x.levels[3]) {
      auto left = c.compose(*c.compose(e1.at(z), e2.at(z)), e3.at(z));
      auto right = c.compose(e1.at(z), *c.compose(e2.at(z), e3.at(z)));
      if (!left || !right || *left != *right || *left != e13.at(z))
        throw std::invalid_argument("categorify: level-3 data refutes associativity at " + z);
    }
  }
  return out;
}

std::size_t count_degenerate(const TruncSimplicialSet& x, int level) {
  if (level < 1 || level > x.trunc) return 0;
  std::set<std::string> degenerate;
  for (int i = 0; i < level; ++i)
    for (const auto& [_, img] : x.degen[level - 1][i]) degenerate.insert(img);
  return degenerate.size();
}

namespace {

struct SimpIsoSearch {
  const TruncSimplicialSet& a;
  const TruncSimplicialSet& b;
  std::vector<std::pair<int, std::string>> slots;
  std::vector<std::map<std::string, std::string>> comp;  // per level
  std::vector<std::set<std::string>> used;

  bool consistent() {
    auto check = [&](int from, int to, const std::map<std::string, std::string>& fa,
                     const std::map<std::string, std::string>& fb) {
      // squares whose input is assigned
      for (const auto& [y, cy] : comp[from]) {
        auto out_it = comp[to].find(fa.at(y));
        if (out_it != comp[to].end() && fb.at(cy) != out_it->second) return false;
      }
      return true;
    };
    for (int l = 1; l <= a.trunc; ++l)
      for (std::size_t i = 0; i < a.face[l].size(); ++i)
        if (!check(l, l - 1, a.face[l][i], b.face[l][i])) return false;
    for (int l = 0; l < a.trunc; ++l)
      for (std::size_t i = 0; i < a.degen[l].size(); ++i)
        if (!check(l, l + 1, a.degen[l][i], b.degen[l][i])) return false;
    return true;
  }

  bool go(std::size_t k) {
    if (k == slots.size()) return true;
    const auto& [lvl, x] = slots[k];
    for (const auto& y : b.levels[lvl]) {
      if (used[lvl].count(y)) continue;
      comp[lvl][x] = y;
      used[lvl].insert(y);
      if (consistent() && go(k + 1)) return true;
      comp[lvl].erase(x);
      used[lvl].erase(y);
    }
    return false;
  }
};

}  // namespace

bool simplicial_isomorphic(const TruncSimplicialSet& a, const TruncSimplicialSet& b) {
  if (a.trunc != b.trunc) return false;
  for (int l = 0; l <= a.trunc; ++l)
    if (a.levels[l].size() != b.levels[l].size()) return false;
  SimpIsoSearch s{a, b, {}, {}, {}};
  s.comp.resize(a.trunc + 1);
  s.used.resize(a.trunc + 1);
  for (int l = 0; l <= a.trunc; ++l)
    for (const auto& x : a.levels[l]) s.slots.push_back({l, x});
  return s.go(0);
}

FinCategory delta_truncated(int n) {
  FinCategory c;
  auto enc = [](const MonotoneMap& m) {
    std::string s = "[" + std::to_string(m.dom) + "->" + std::to_string(m.cod) + "](";
    for (std::size_t i = 0; i < m.values.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m.values[i]);
    }
    return s + ")";
  };
  std::vector<MonotoneMap> maps;
  for (int m = 0; m <= n; ++m) {
    c.objects.push_back(std::to_string(m));
    for (int k = 0; k <= n; ++k)
      for (const auto& f : all_monotone(m, k)) maps.push_back(f);
  }
  for (const auto& f : maps)
    c.arrows.push_back({enc(f), std::to_string(f.dom), std::to_string(f.cod)});
  for (int m = 0; m <= n; ++m) c.identity[std::to_string(m)] = enc(identity_map(m));
  for (const auto& f : maps)
    for (const auto& g : maps)
      if (f.cod == g.dom) c.composition[{enc(f), enc(g)}] = enc(compose_monotone(f, g));
  return c;
}

}  // namespace fincat::simp
