#include "fincat/freecat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace fincat::freecat {
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

Report Graph::validate() const {
  Report r;
  std::set<std::string> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) r.add("vertices-unique", "duplicate vertex id");
  std::set<std::string> es(edges.begin(), edges.end());
  if (es.size() != edges.size()) r.add("edges-unique", "duplicate edge id");
  for (const auto& e : edges) {
    auto s = src.find(e);
    auto t = tgt.find(e);
    if (s == src.end() || !vs.count(s->second)) r.add("src-total", "edge " + e);
    if (t == tgt.end() || !vs.count(t->second)) r.add("tgt-total", "edge " + e);
  }
  return r;
}

std::vector<std::string> Graph::edges_from(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (src.at(e) == v) out.push_back(e);
  return out;
}

std::string Path::end(const Graph& g) const {
  return edges.empty() ? start : g.tgt.at(edges.back());
}

bool Path::valid_in(const Graph& g) const {
  std::string at = start;
  if (std::find(g.vertices.begin(), g.vertices.end(), at) == g.vertices.end()) return false;
  for (const auto& e : edges) {
    if (!g.src.count(e) || g.src.at(e) != at) return false;
    at = g.tgt.at(e);
  }
  return true;
}

std::string Path::encode() const {
  std::vector<std::string> parts = {start};
  parts.insert(parts.end(), edges.begin(), edges.end());
  return join(parts, '|');
}

Report GraphMorphism::validate(const Graph& from, const Graph& to) const {
  Report r;
  for (const auto& v : from.vertices) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end())
      r.add("vertex-map-total", v);
    else if (std::find(to.vertices.begin(), to.vertices.end(), it->second) == to.vertices.end())
      r.add("vertex-map-range", v);
  }
  for (const auto& e : from.edges) {
    auto it = edge_map.find(e);
    if (it == edge_map.end()) {
      r.add("edge-map-total", e);
      continue;
    }
    if (std::find(to.edges.begin(), to.edges.end(), it->second) == to.edges.end()) {
      r.add("edge-map-range", e);
      continue;
    }
    if (!r.ok()) continue;
    if (to.src.at(it->second) != vertex_map.at(from.src.at(e)))
      r.add("commutes-with-src", e);
    if (to.tgt.at(it->second) != vertex_map.at(from.tgt.at(e)))
      r.add("commutes-with-tgt", e);
  }
  return r;
}

Graph linear_quiver(int n) {
  if (n < 0) throw std::invalid_argument("linear_quiver: negative arity");
  Graph g;
  for (int i = 0; i <= n; ++i) g.vertices.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    std::string e = "e" + std::to_string(i);
    g.edges.push_back(e);
    g.src[e] = std::to_string(i - 1);
    g.tgt[e] = std::to_string(i);
  }
  return g;
}

std::vector<Path> free_paths(const Graph& g, int maxlen) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (const auto& v : g.vertices) frontier.push_back({v, {}});
  out = frontier;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (const auto& e : g.edges_from(p.end(g))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

Path mu_flatten(const Graph& g, const std::string& start, const std::vector<Path>& inner) {
  Path out{start, {}};
  std::string at = start;
  for (const auto& p : inner) {
    if (p.start != at)
      throw std::invalid_argument("mu_flatten: endpoint mismatch at " + at + " vs " + p.start);
    out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
    at = p.end(g);
  }
  return out;
}

Report PathMorphism::validate(const Graph& g) const {
  Report r;
  std::string at = start;
  if (std::find(g.vertices.begin(), g.vertices.end(), at) == g.vertices.end()) {
    r.add("start-vertex", start + " is not a vertex");
    return r;
  }
  for (std::size_t i = 0; i < edge_paths.size(); ++i) {
    const Path& p = edge_paths[i];
    if (!p.valid_in(g)) {
      r.add("edge-path", "image of edge " + std::to_string(i + 1) + " is not a path");
      return r;
    }
    if (p.start != at)
      r.add("composability", "edge " + std::to_string(i + 1) + " starts at " + p.start +
                                 ", expected " + at);
    at = p.end(g);
  }
  return r;
}

std::string PathMorphism::vertex_image(const Graph& g, int i) const {
  std::string at = start;
  for (int k = 0; k < i; ++k) at = edge_paths[k].end(g);
  return at;
}

PathMorphism ArityFactorization::recompose(const Graph& g) const {
  (void)g;
  PathMorphism out;
  out.start = f.vertex_map.at(e.start);
  for (const auto& p : e.edge_paths) {
    Path img{f.vertex_map.at(p.start), {}};
    for (const auto& edge : p.edges) img.edges.push_back(f.edge_map.at(edge));
    out.edge_paths.push_back(img);
  }
  return out;
}

ArityFactorization arity_factorize(const Graph& g, const PathMorphism& m) {
  Report pre = m.validate(g);
  if (!pre.ok())
    throw std::invalid_argument("arity_factorize: malformed morphism: " + pre.violations[0].rule);
  ArityFactorization out;
  out.n = m.arity();
  int p = 0;
  for (const auto& q : m.edge_paths) p += static_cast<int>(q.length());
  out.p = p;

  // e: vertex i goes to the running sum, edge i to the evident subpath
  out.e.start = "0";
  int cursor = 0;
  for (const auto& q : m.edge_paths) {
    Path seg{std::to_string(cursor), {}};
    for (std::size_t k = 0; k < q.length(); ++k) seg.edges.push_back("e" + std::to_string(cursor + 1 + k));
    cursor += static_cast<int>(q.length());
    out.e.edge_paths.push_back(seg);
  }

  // f: include the filiform middle along the concatenated image path
  std::vector<std::string> vertex_trail = {m.start};
  std::vector<std::string> edge_trail;
  for (const auto& q : m.edge_paths) {
    std::string at = q.start;
    for (const auto& edge : q.edges) {
      edge_trail.push_back(edge);
      at = g.tgt.at(edge);
      vertex_trail.push_back(at);
    }
  }
  for (int i = 0; i <= p; ++i) out.f.vertex_map[std::to_string(i)] = vertex_trail[i];
  for (int i = 1; i <= p; ++i) out.f.edge_map["e" + std::to_string(i)] = edge_trail[i - 1];
  return out;
}

FinCategory delta0_truncated(int n) {
  FinCategory c;
  auto name = [](int m, int k, int o) {
    return "d0[" + std::to_string(m) + "->" + std::to_string(k) + "]+" + std::to_string(o);
  };
  for (int m = 0; m <= n; ++m) c.objects.push_back(std::to_string(m));
  for (int m = 0; m <= n; ++m)
    for (int k = m; k <= n; ++k)
      for (int o = 0; o + m <= k; ++o)
        c.arrows.push_back({name(m, k, o), std::to_string(m), std::to_string(k)});
  for (int m = 0; m <= n; ++m) c.identity[std::to_string(m)] = name(m, m, 0);
  for (int m = 0; m <= n; ++m)
    for (int k = m; k <= n; ++k)
      for (int o = 0; o + m <= k; ++o)
        for (int l = k; l <= n; ++l)
          for (int o2 = 0; o2 + k <= l; ++o2)
            c.composition[{name(m, k, o), name(k, l, o2)}] = name(m, l, o + o2);
  return c;
}

SetFunctor graph_nerve(const Graph& g, int trunc) {
  Report pre = g.validate();
  if (!pre.ok()) throw std::invalid_argument("graph_nerve: invalid graph");
  auto base = std::make_shared<FinCategory>(opposite(delta0_truncated(trunc)));
  SetFunctor x;
  x.base = base;

  std::vector<std::vector<Path>> by_len(trunc + 1);
  for (const auto& p : free_paths(g, trunc)) by_len[p.length()].push_back(p);
  std::map<std::string, Path> decode;
  for (int n = 0; n <= trunc; ++n) {
    std::vector<std::string> lvl;
    for (const auto& p : by_len[n]) {
      lvl.push_back(p.encode());
      decode[p.encode()] = p;
    }
    x.carrier[std::to_string(n)] = lvl;
  }
  for (const auto& a : base->arrows) {
    // arrow "d0[m->k]+o" acts on level k by the window [o, o+m]
    const std::string& id = a.id;
    int m = std::stoi(id.substr(3, id.find("->") - 3));
    int k = std::stoi(id.substr(id.find("->") + 2, id.find(']') - id.find("->") - 2));
    int o = std::stoi(id.substr(id.find('+') + 1));
    std::map<std::string, std::string> fn;
    for (const auto& p : by_len[k]) {
      Path sub{p.start, {}};
      std::string at = p.start;
      for (int step = 0; step < o; ++step) at = g.tgt.at(p.edges[step]);
      sub.start = at;
      for (int step = 0; step < m; ++step) sub.edges.push_back(p.edges[o + step]);
      fn[p.encode()] = sub.encode();
    }
    x.action[id] = fn;
  }
  return x;
}

RepresentabilityResult segal_representability_check(const SetFunctor& x) {
  RepresentabilityResult res;
  int trunc = static_cast<int>(x.base->objects.size()) - 1;
  if (trunc < 2) {
    res.failing_level = 0;
    res.detail = "truncation below 2 carries no composability information";
    return res;
  }
  auto arrow_name = [](int m, int k, int o) {
    return "d0[" + std::to_string(m) + "->" + std::to_string(k) + "]+" + std::to_string(o);
  };
  Graph g;
  g.vertices = x.at("0");
  g.edges = x.at("1");
  g.src = x.map_of(arrow_name(0, 1, 0));
  g.tgt = x.map_of(arrow_name(0, 1, 1));
  if (!g.validate().ok()) {
    res.failing_level = 1;
    res.detail = "candidate source/target maps do not form a graph";
    return res;
  }

  for (int n = 0; n <= trunc; ++n) {
    std::set<Path> expected;
    for (const auto& p : free_paths(g, n))
      if (static_cast<int>(p.length()) == n) expected.insert(p);
    std::set<Path> seen;
    for (const auto& z : x.at(std::to_string(n))) {
      Path p{n == 0 ? z : x.map_of(arrow_name(0, n, 0)).at(z), {}};
      for (int i = 1; i <= n; ++i) p.edges.push_back(x.map_of(arrow_name(1, n, i - 1)).at(z));
      if (!p.valid_in(g)) {
        res.failing_level = n;
        res.detail = "element " + z + " does not restrict to a path";
        return res;
      }
      if (!seen.insert(p).second) {
        res.failing_level = n;
        res.detail = "two elements restrict to the path " + p.encode();
        return res;
      }
    }
    if (seen != expected) {
      res.failing_level = n;
      res.detail = "level " + std::to_string(n) + " has " + std::to_string(seen.size()) +
                   " elements but the graph has " + std::to_string(expected.size()) +
                   " paths of that length";
      return res;
    }
  }
  res.ok = true;
  res.graph = g;
  res.failing_level = -1;
  return res;
}

std::vector<PathMorphism> kleisli_arity_hom(int m, int n) {
  std::vector<PathMorphism> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    PathMorphism pm;
    pm.start = std::to_string(v[0]);
    for (int i = 1; i <= m; ++i) {
      Path seg{std::to_string(v[i - 1]), {}};
      for (int j = v[i - 1] + 1; j <= v[i]; ++j) seg.edges.push_back("e" + std::to_string(j));
      pm.edge_paths.push_back(seg);
    }
    out.push_back(pm);
    int k = m;
    while (k >= 0 && v[k] == n) --k;
    if (k < 0) break;
    ++v[k];
    for (int j = k + 1; j <= m; ++j) v[j] = v[k];
  }
  return out;
}

PathMorphism kleisli_compose(const PathMorphism& a, const PathMorphism& b, const Graph& target) {
  // a : [m] -> T[n], b : [n] -> T(target); the composite maps each edge path
  // of a through b edgewise and flattens.
  auto vertex_through_b = [&](const std::string& filiform_vertex) {
    return b.vertex_image(target, std::stoi(filiform_vertex));
  };
  PathMorphism out;
  out.start = vertex_through_b(a.start);
  for (const auto& p : a.edge_paths) {
    std::vector<Path> pieces;
    for (const auto& edge : p.edges) {
      int j = std::stoi(edge.substr(1));  // "ej" on the filiform graph
      pieces.push_back(b.edge_paths[j - 1]);
    }
    out.edge_paths.push_back(mu_flatten(target, vertex_through_b(p.start), pieces));
  }
  return out;
}

ZigzagResult zigzag_equivalent(const Graph& g, const ArityFactorization& a,
                               const ArityFactorization& b, int bound) {
  ZigzagResult res;
  PathMorphism ra = a.recompose(g);
  PathMorphism rb = b.recompose(g);
  auto same_morphism = [](const PathMorphism& x, const PathMorphism& y) {
    return x.start == y.start && x.edge_paths == y.edge_paths;
  };
  if (!same_morphism(ra, rb)) {
    res.same_arrow = false;
    return res;
  }
  if (bound < 0) bound = std::max(a.p, b.p) + 2;

  using Node = ArityFactorization;
  auto key = [](const Node& n) {
    std::string k = std::to_string(n.p) + "#" + n.e.start;
    for (const auto& q : n.e.edge_paths) k += "#" + q.encode();
    k += "$";
    for (const auto& [v, w] : n.f.vertex_map) k += v + ">" + w + ";";
    for (const auto& [e1, e2] : n.f.edge_map) k += e1 + ">" + e2 + ";";
    return k;
  };

  std::vector<Node> nodes = enumerate_factorizations(g, ra, bound);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[key(nodes[i])] = static_cast<int>(i);
  auto ita = index.find(key(a));
  auto itb = index.find(key(b));
  if (ita == index.end() || itb == index.end()) return res;  // outside the bound
  if (ita->second == itb->second) {
    res.status = ZigzagStatus::YesDirect;
    res.chain_middles = {a.p};
    return res;
  }

  // single-mediator steps: u = shift inclusion [p1] -> [p2] with offset o
  auto mediates = [&](const Node& n1, const Node& n2) {
    if (n1.p > n2.p) return false;
    for (int o = 0; o + n1.p <= n2.p; ++o) {
      // f1 must be f2 restricted to the window, e2 must be e1 shifted
      bool ok = true;
      for (int i = 0; i <= n1.p && ok; ++i)
        if (n1.f.vertex_map.at(std::to_string(i)) !=
            n2.f.vertex_map.at(std::to_string(i + o)))
          ok = false;
      for (int i = 1; i <= n1.p && ok; ++i)
        if (n1.f.edge_map.at("e" + std::to_string(i)) !=
            n2.f.edge_map.at("e" + std::to_string(i + o)))
          ok = false;
      if (!ok) continue;
      auto shift_vertex = [&](const std::string& v) { return std::to_string(std::stoi(v) + o); };
      if (n2.e.start != shift_vertex(n1.e.start)) continue;
      bool same = true;
      for (std::size_t i = 0; i < n1.e.edge_paths.size() && same; ++i) {
        const Path& p1 = n1.e.edge_paths[i];
        const Path& p2 = n2.e.edge_paths[i];
        if (p2.start != shift_vertex(p1.start) || p1.edges.size() != p2.edges.size()) same = false;
        for (std::size_t j = 0; j < p1.edges.size() && same; ++j)
          if (p2.edges[j] != "e" + std::to_string(std::stoi(p1.edges[j].substr(1)) + o))
            same = false;
      }
      if (same) return true;
    }
    return false;
  };

  // BFS over the symmetric closure of the mediator relation
  std::vector<int> prev(nodes.size(), -2);
  std::deque<int> queue;
  prev[ita->second] = -1;
  queue.push_back(ita->second);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == itb->second) break;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (prev[j] != -2) continue;
      if (mediates(nodes[cur], nodes[j]) || mediates(nodes[j], nodes[cur])) {
        prev[j] = cur;
        queue.push_back(static_cast<int>(j));
      }
    }
  }
  if (prev[itb->second] == -2) return res;
  std::vector<int> chain;
  for (int at = itb->second; at != -1; at = prev[at]) chain.push_back(nodes[at].p);
  std::reverse(chain.begin(), chain.end());
  res.chain_middles = chain;
  res.status = chain.size() <= 2 ? ZigzagStatus::YesDirect : ZigzagStatus::YesChain;
  return res;
}

std::vector<ArityFactorization> enumerate_factorizations(const Graph& g, const PathMorphism& m,
                                                         int max_p) {
  std::vector<ArityFactorization> out;
  int n = m.arity();
  for (int p = 0; p <= max_p; ++p) {
    // graph morphisms filiform[p] -> g are exactly paths of length p
    for (const auto& path : free_paths(g, p)) {
      if (static_cast<int>(path.length()) != p) continue;
      GraphMorphism f;
      std::string at = path.start;
      f.vertex_map["0"] = at;
      for (int i = 1; i <= p; ++i) {
        f.edge_map["e" + std::to_string(i)] = path.edges[i - 1];
        at = g.tgt.at(path.edges[i - 1]);
        f.vertex_map[std::to_string(i)] = at;
      }
      for (const auto& e : kleisli_arity_hom(n, p)) {
        ArityFactorization cand{n, p, e, f};
        PathMorphism re = cand.recompose(g);
        if (re.start == m.start && re.edge_paths == m.edge_paths) out.push_back(cand);
      }
    }
  }
  return out;
}

Report factorization_property_check(const Graph& g, int max_n, int maxlen,
                                    bool domain_one_only) {
  Report r;
  std::vector<Path> paths = free_paths(g, maxlen);
  int lo = domain_one_only ? 1 : 0;
  int hi = domain_one_only ? 1 : max_n;
  for (int n = lo; n <= hi; ++n) {
    std::function<void(PathMorphism&, const std::string&, int)> grow =
        [&](PathMorphism& cur, const std::string& at, int left) {
          if (left == 0) {
            ArityFactorization fact = arity_factorize(g, cur);
            PathMorphism back = fact.recompose(g);
            if (back.start != cur.start || back.edge_paths != cur.edge_paths)
              r.add("factorization-exact", "recomposition differs at arity " + std::to_string(n));
            return;
          }
          for (const auto& p : paths) {
            if (p.start != at) continue;
            cur.edge_paths.push_back(p);
            grow(cur, p.end(g), left - 1);
            cur.edge_paths.pop_back();
          }
        };
    for (const auto& v : g.vertices) {
      PathMorphism m;
      m.start = v;
      grow(m, v, n);
    }
  }
  return r;
}

CatPtr graph_base() {
  auto c = std::make_shared<FinCategory>();
  c->objects = {"V", "E"};
  c->arrows = {{"idV", "V", "V"}, {"idE", "E", "E"}, {"s", "E", "V"}, {"t", "E", "V"}};
  c->identity = {{"V", "idV"}, {"E", "idE"}};
  c->composition = {{{"idV", "idV"}, "idV"},
                    {{"idE", "idE"}, "idE"},
                    {{"idE", "s"}, "s"},
                    {{"s", "idV"}, "s"},
                    {{"idE", "t"}, "t"},
                    {{"t", "idV"}, "t"}};
  return c;
}

SetFunctor graph_presheaf(const Graph& g) {
  static const CatPtr base = graph_base();
  SetFunctor x;
  x.base = base;
  x.carrier["V"] = g.vertices;
  x.carrier["E"] = g.edges;
  x.action["s"] = g.src;
  x.action["t"] = g.tgt;
  x.action["idV"] = {};
  x.action["idE"] = {};
  for (const auto& v : g.vertices) x.action["idV"][v] = v;
  for (const auto& e : g.edges) x.action["idE"][e] = e;
  return x;
}

Graph presheaf_graph(const SetFunctor& x) {
  Graph g;
  g.vertices = x.at("V");
  g.edges = x.at("E");
  g.src = x.map_of("s");
  g.tgt = x.map_of("t");
  return g;
}

FinCategory free_category(const Graph& g) {
  // cycle check by DFS
  std::map<std::string, int> state;
  std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
    state[v] = 1;
    for (const auto& e : g.edges_from(v)) {
      const std::string& w = g.tgt.at(e);
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (const auto& v : g.vertices)
    if (state[v] == 0 && !dfs(v))
      throw std::invalid_argument("free_category: the graph has a cycle");

  FinCategory c;
  c.objects = g.vertices;
  // dotted ids keep nerve-compatible names (no '|')
  auto name = [](const Path& p) {
    std::string s = "p:" + p.start;
    for (const auto& e : p.edges) s += "." + e;
    return s;
  };
  auto paths = free_paths(g, static_cast<int>(g.edges.size()));
  for (const auto& p : paths) c.arrows.push_back({name(p), p.start, p.end(g)});
  for (const auto& v : g.vertices) c.identity[v] = name(Path{v, {}});
  for (const auto& p : paths)
    for (const auto& q : paths) {
      if (p.end(g) != q.start) continue;
      Path pq = p;
      pq.edges.insert(pq.edges.end(), q.edges.begin(), q.edges.end());
      c.composition[{name(p), name(q)}] = name(pq);
    }
  return c;
}

Graph underlying_graph(const FinCategory& c) {
  Graph g;
  g.vertices = c.objects;
  for (const auto& a : c.arrows) {
    g.edges.push_back(a.id);
    g.src[a.id] = a.src;
    g.tgt[a.id] = a.tgt;
  }
  return g;
}

}  // namespace fincat::freecat
