#include "fincat/effects.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fincat::eff {
namespace {

std::string frame(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

// parse one framed string starting at pos; advances pos
std::string unframe(const std::string& s, std::size_t& pos) {
  std::size_t colon = s.find(':', pos);
  std::size_t len = std::stoul(s.substr(pos, colon - pos));
  std::string out = s.substr(colon + 1, len);
  pos = colon + 1 + len;
  return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep, char open, char close) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == open) ++depth;
    if (ch == close) --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else
      cur.push_back(ch);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Report check_monad_laws(const FinMonad& t, const std::vector<std::string>& a) {
  Report r;
  std::vector<std::string> ta = t.obj(a);
  std::vector<std::string> tta = t.obj(ta);
  std::vector<std::string> ttta = t.obj(tta);

  // unit triangle, both sides
  std::map<std::string, std::string> eta_a;
  for (const auto& x : a) eta_a[x] = t.unit(a, x);
  std::map<std::string, std::string> t_eta = t.arr(a, ta, eta_a);
  for (const auto& x : ta) {
    if (t.mult(a, t_eta.at(x)) != x)
      r.add("unit-left", t.name + ": mu . T eta != id at " + x);
    if (t.mult(a, t.unit(ta, x)) != x)
      r.add("unit-right", t.name + ": mu . eta T != id at " + x);
  }

  // associativity square
  std::map<std::string, std::string> mu_a;
  for (const auto& z : tta) mu_a[z] = t.mult(a, z);
  std::map<std::string, std::string> t_mu = t.arr(tta, ta, mu_a);
  for (const auto& z : ttta) {
    const std::string& left = t.mult(a, t_mu.at(z));
    const std::string& right = t.mult(a, t.mult(ta, z));
    if (left != right) r.add("associativity", t.name + ": flattenings differ at " + z);
  }
  return r;
}

std::vector<std::string> Store::states() const {
  std::vector<std::string> out;
  std::vector<std::size_t> idx(locations.size(), 0);
  while (true) {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < locations.size(); ++i) m[locations[i]] = values[idx[i]];
    out.push_back(encode_state(m));
    std::size_t k = locations.size();
    while (k > 0 && idx[k - 1] + 1 == values.size()) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < locations.size(); ++j) idx[j] = 0;
  }
  return out;
}

std::size_t Store::state_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < locations.size(); ++i) n *= values.size();
  return n;
}

std::map<std::string, std::string> decode_state(const std::string& s) {
  std::map<std::string, std::string> m;
  for (const auto& part : split_top_level(s, ';', '\0', '\0')) {
    auto eq = part.find('=');
    m[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return m;
}

std::string encode_state(const std::map<std::string, std::string>& m) {
  std::string out;
  for (const auto& [l, v] : m) {
    if (!out.empty()) out += ";";
    out += l + "=" + v;
  }
  return out;
}

std::string StateFn::encode() const {
  std::string out;
  for (const auto& [s, sv] : table)
    out += frame(s) + frame(sv.first) + std::to_string(sv.second) + "|";
  return out;
}

namespace {

// element of the state monad at a set: per state (in order), the result
// state index and the leaf string
using StElem = std::vector<std::pair<int, std::string>>;

std::string st_encode(const StElem& e) {
  std::string out;
  for (const auto& [i, leaf] : e) out += std::to_string(i) + "," + frame(leaf) + "|";
  return out;
}

StElem st_decode(const std::string& s) {
  StElem out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    int idx = std::stoi(s.substr(pos, comma - pos));
    pos = comma + 1;
    std::string leaf = unframe(s, pos);
    ++pos;  // trailing '|'
    out.push_back({idx, leaf});
  }
  return out;
}

}  // namespace

FinMonad state_monad(const Store& store) {
  FinMonad m;
  const std::size_t ns = store.states().size();
  m.name = "state";

  m.obj = [ns](const std::vector<std::string>& a) {
    std::vector<std::string> out;
    if (a.empty()) {
      if (ns == 0) out.push_back("");
      return out;  // no functions S -> S x 0 when S is nonempty
    }
    std::vector<std::pair<int, std::string>> cur(ns, {0, a[0]});
    std::vector<std::size_t> digit(ns, 0);
    std::size_t base = ns * a.size();
    while (true) {
      StElem e;
      for (std::size_t s = 0; s < ns; ++s)
        e.push_back({static_cast<int>(digit[s] / a.size()), a[digit[s] % a.size()]});
      out.push_back(st_encode(e));
      std::size_t k = ns;
      while (k > 0 && digit[k - 1] + 1 == base) --k;
      if (k == 0) break;
      ++digit[k - 1];
      for (std::size_t j = k; j < ns; ++j) digit[j] = 0;
    }
    return out;
  };
  // leaf-wise pushforward; the domain carrier is re-enumerated via obj
  m.arr = [m](const std::vector<std::string>& a, const std::vector<std::string>&,
              const std::map<std::string, std::string>& f) {
    std::map<std::string, std::string> out;
    for (const auto& name : m.obj(a)) {
      StElem e = st_decode(name);
      StElem pushed;
      for (const auto& [i, leaf] : e) pushed.push_back({i, f.at(leaf)});
      out[name] = st_encode(pushed);
    }
    return out;
  };
  m.unit = [ns](const std::vector<std::string>&, const std::string& x) {
    StElem e;
    for (std::size_t s = 0; s < ns; ++s) e.push_back({static_cast<int>(s), x});
    return st_encode(e);
  };
  m.mult = [](const std::vector<std::string>&, const std::string& tt) {
    StElem outer = st_decode(tt);
    StElem flat;
    for (std::size_t s = 0; s < outer.size(); ++s) {
      const auto& [s1, inner_name] = outer[s];
      StElem inner = st_decode(inner_name);
      flat.push_back(inner[s1]);
    }
    return st_encode(flat);
  };
  return m;
}

StateFactorization state_factorize(const Store& store, int n, int a,
                                   const std::vector<StateFn>& h) {
  (void)store;
  (void)a;
  if (static_cast<int>(h.size()) != n)
    throw std::invalid_argument("state_factorize: one transformer per input expected");
  StateFactorization out;
  std::set<int> image;
  for (const auto& fn : h)
    for (const auto& [s, sv] : fn.table) image.insert(sv.second);
  out.f.assign(image.begin(), image.end());
  std::map<int, int> back;
  for (std::size_t k = 0; k < out.f.size(); ++k) back[out.f[k]] = static_cast<int>(k);
  out.p = static_cast<int>(out.f.size());
  for (int i = 0; i < n; ++i)
    for (const auto& [s, sv] : h[i].table) out.e[{s, i}] = {sv.first, back.at(sv.second)};
  return out;
}

bool state_factorization_exact(const Store& store, int n, const std::vector<StateFn>& h,
                               const StateFactorization& fact) {
  for (int i = 0; i < n; ++i)
    for (const auto& s : store.states()) {
      auto mid = fact.e.at({s, i});
      std::pair<std::string, int> got = {mid.first, fact.f.at(mid.second)};
      if (got != h[i].table.at(s)) return false;
    }
  return true;
}

std::string StoreTerm::encode() const {
  switch (kind) {
    case Var: return "x" + std::to_string(var_index);
    case Lookup: {
      std::string s = "L(" + loc + ")[";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += ",";
        s += children[i].encode();
      }
      return s + "]";
    }
    case Update: return "U(" + loc + ":=" + val + ")[" + children[0].encode() + "]";
  }
  return "";
}

StoreTerm make_var(int i) {
  StoreTerm t;
  t.kind = StoreTerm::Var;
  t.var_index = i;
  return t;
}

StoreTerm make_lookup(const std::string& loc, std::vector<StoreTerm> branches) {
  StoreTerm t;
  t.kind = StoreTerm::Lookup;
  t.loc = loc;
  t.children = std::move(branches);
  return t;
}

StoreTerm make_update(const std::string& loc, const std::string& val, StoreTerm inner) {
  StoreTerm t;
  t.kind = StoreTerm::Update;
  t.loc = loc;
  t.val = val;
  t.children.push_back(std::move(inner));
  return t;
}

Report validate_term(const StoreTerm& t, const Store& store, int n) {
  Report r;
  auto has_loc = [&](const std::string& l) {
    return std::find(store.locations.begin(), store.locations.end(), l) != store.locations.end();
  };
  auto has_val = [&](const std::string& v) {
    return std::find(store.values.begin(), store.values.end(), v) != store.values.end();
  };
  std::function<void(const StoreTerm&)> walk = [&](const StoreTerm& u) {
    switch (u.kind) {
      case StoreTerm::Var:
        if (u.var_index < 0 || u.var_index >= n) r.add("var-range", u.encode());
        break;
      case StoreTerm::Lookup:
        if (!has_loc(u.loc)) r.add("unknown-location", u.loc);
        if (u.children.size() != store.values.size())
          r.add("lookup-branches", u.encode() + " needs one branch per value");
        for (const auto& c : u.children) walk(c);
        break;
      case StoreTerm::Update:
        if (!has_loc(u.loc)) r.add("unknown-location", u.loc);
        if (!has_val(u.val)) r.add("unknown-value", u.val);
        if (u.children.size() != 1) r.add("update-child", u.encode());
        else walk(u.children[0]);
        break;
    }
  };
  walk(t);
  return r;
}

StateFn denote_store_term(const StoreTerm& t, const Store& store, int n) {
  Report ok = validate_term(t, store, n);
  if (!ok.ok())
    throw std::invalid_argument("denote_store_term: " + ok.violations[0].rule + " " +
                                ok.violations[0].detail);
  StateFn out;
  std::map<std::string, int> value_index;
  for (std::size_t i = 0; i < store.values.size(); ++i)
    value_index[store.values[i]] = static_cast<int>(i);
  std::function<std::pair<std::string, int>(const StoreTerm&, std::map<std::string, std::string>)>
      run = [&](const StoreTerm& u, std::map<std::string, std::string> s)
      -> std::pair<std::string, int> {
    switch (u.kind) {
      case StoreTerm::Var: return {encode_state(s), u.var_index};
      case StoreTerm::Lookup: return run(u.children[value_index.at(s.at(u.loc))], s);
      case StoreTerm::Update: {
        s[u.loc] = u.val;
        return run(u.children[0], s);
      }
    }
    return {"", 0};
  };
  for (const auto& s : store.states()) out.table[s] = run(t, decode_state(s));
  return out;
}

namespace {

// Stage one of normalization: no lookup remains below any update. Uses the
// update-lookup interaction on one location and the update-lookup
// commutation across locations, merging and sorting update chains on the way.
StoreTerm lift_lookups(const Store& store, StoreTerm t, int& steps, int budget, bool& blown) {
  if (blown) return t;
  if (++steps > budget) {
    blown = true;
    return t;
  }
  std::map<std::string, int> value_index;
  for (std::size_t i = 0; i < store.values.size(); ++i)
    value_index[store.values[i]] = static_cast<int>(i);
  std::map<std::string, int> loc_index;
  for (std::size_t i = 0; i < store.locations.size(); ++i)
    loc_index[store.locations[i]] = static_cast<int>(i);

  if (t.kind == StoreTerm::Var) return t;
  if (t.kind == StoreTerm::Lookup) {
    for (auto& c : t.children) c = lift_lookups(store, std::move(c), steps, budget, blown);
    return t;
  }
  // update head
  StoreTerm child = lift_lookups(store, std::move(t.children[0]), steps, budget, blown);
  if (blown) return t;
  if (child.kind == StoreTerm::Lookup && child.loc == t.loc) {
    // interaction update-lookup: the branch for the written value survives
    StoreTerm picked = child.children[value_index.at(t.val)];
    return lift_lookups(store, make_update(t.loc, t.val, std::move(picked)), steps, budget, blown);
  }
  if (child.kind == StoreTerm::Lookup) {
    // commutation update-lookup: pull the unrelated lookup outward
    std::vector<StoreTerm> branches;
    for (auto& b : child.children)
      branches.push_back(make_update(t.loc, t.val, std::move(b)));
    return lift_lookups(store, make_lookup(child.loc, std::move(branches)), steps, budget, blown);
  }
  if (child.kind == StoreTerm::Update && child.loc == t.loc) {
    // interaction update-update: the later write wins
    return lift_lookups(store, std::move(child), steps, budget, blown);
  }
  if (child.kind == StoreTerm::Update && loc_index.at(child.loc) < loc_index.at(t.loc)) {
    // commutation update-update: sort by location
    StoreTerm inner = make_update(t.loc, t.val, std::move(child.children[0]));
    return make_update(child.loc, child.val,
                       lift_lookups(store, std::move(inner), steps, budget, blown));
  }
  t.children[0] = std::move(child);
  return t;
}

// collapse a lookup tree under a known full context (lookup-lookup
// interaction and commutation applied through the context)
const StoreTerm* collapse_with_context(const StoreTerm& t,
                                       const std::map<std::string, std::string>& ctx,
                                       const std::map<std::string, int>& value_index,
                                       int& steps) {
  const StoreTerm* cur = &t;
  while (cur->kind == StoreTerm::Lookup) {
    ++steps;
    cur = &cur->children[static_cast<std::size_t>(value_index.at(ctx.at(cur->loc)))];
  }
  return cur;
}

}  // namespace

NormalizeResult normalize_store_term(const StoreTerm& t, const Store& store, int n,
                                     int step_budget) {
  Report ok = validate_term(t, store, n);
  if (!ok.ok())
    throw std::invalid_argument("normalize_store_term: " + ok.violations[0].rule);
  NormalizeResult res;
  bool blown = false;
  StoreTerm lifted = lift_lookups(store, t, res.steps, step_budget, blown);
  if (blown) {
    res.term = t;
    res.budget_exceeded = true;
    return res;
  }
  std::map<std::string, int> value_index;
  for (std::size_t i = 0; i < store.values.size(); ++i)
    value_index[store.values[i]] = static_cast<int>(i);

  // full read prefix: introduce a lookup for every location in order, then
  // specialize the lifted tree in each branch and drop no-op writes
  std::function<StoreTerm(std::size_t, std::map<std::string, std::string>&)> build =
      [&](std::size_t li, std::map<std::string, std::string>& ctx) -> StoreTerm {
    if (li == store.locations.size()) {
      const StoreTerm* leaf = collapse_with_context(lifted, ctx, value_index, res.steps);
      // leaf is now an update chain over a variable; drop writes that agree
      // with the context, keep the rest sorted (they already are)
      std::vector<std::pair<std::string, std::string>> writes;
      const StoreTerm* cur = leaf;
      while (cur->kind == StoreTerm::Update) {
        if (ctx.at(cur->loc) != cur->val) writes.push_back({cur->loc, cur->val});
        ++res.steps;
        cur = &cur->children[0];
      }
      StoreTerm out = make_var(cur->var_index);
      for (auto it = writes.rbegin(); it != writes.rend(); ++it)
        out = make_update(it->first, it->second, std::move(out));
      return out;
    }
    const std::string& loc = store.locations[li];
    std::vector<StoreTerm> branches;
    for (const auto& v : store.values) {
      ctx[loc] = v;
      branches.push_back(build(li + 1, ctx));
    }
    ctx.erase(loc);
    return make_lookup(loc, std::move(branches));
  };
  std::map<std::string, std::string> ctx;
  res.term = build(0, ctx);
  if (res.steps > step_budget) res.budget_exceeded = true;
  return res;
}

StoreTerm canonical_store_term(const StateFn& f, const Store& store, int n) {
  (void)n;
  std::function<StoreTerm(std::size_t, std::map<std::string, std::string>&)> build =
      [&](std::size_t li, std::map<std::string, std::string>& ctx) -> StoreTerm {
    if (li == store.locations.size()) {
      const auto& [sprime, var] = f.table.at(encode_state(ctx));
      std::map<std::string, std::string> target = decode_state(sprime);
      StoreTerm out = make_var(var);
      for (auto it = store.locations.rbegin(); it != store.locations.rend(); ++it)
        out = make_update(*it, target.at(*it), std::move(out));
      return out;
    }
    const std::string& loc = store.locations[li];
    std::vector<StoreTerm> branches;
    for (const auto& v : store.values) {
      ctx[loc] = v;
      branches.push_back(build(li + 1, ctx));
    }
    ctx.erase(loc);
    return make_lookup(loc, std::move(branches));
  };
  std::map<std::string, std::string> ctx;
  return build(0, ctx);
}

FinMonad classic_monad(const std::string& name, const std::vector<std::string>& params) {
  FinMonad m;
  m.name = name;
  if (name == "partiality") {
    m.obj = [](const std::vector<std::string>& a) {
      std::vector<std::string> out = a;
      out.push_back("#bot");
      return out;
    };
    m.arr = [](const std::vector<std::string>& a, const std::vector<std::string>&,
               const std::map<std::string, std::string>& f) {
      std::map<std::string, std::string> out;
      for (const auto& x : a) out[x] = f.at(x);
      out["#bot"] = "#bot";
      return out;
    };
    m.unit = [](const std::vector<std::string>&, const std::string& x) { return x; };
    m.mult = [](const std::vector<std::string>&, const std::string& z) { return z; };
    return m;
  }
  if (name == "nondeterminism") {
    m.obj = [](const std::vector<std::string>& a) {
      std::vector<std::string> out;
      std::size_t n = a.size();
      for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::string s = "{";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) {
            if (!first) s += ",";
            s += a[i];
            first = false;
          }
        out.push_back(s + "}");
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    m.arr = [](const std::vector<std::string>& a, const std::vector<std::string>&,
               const std::map<std::string, std::string>& f) {
      std::map<std::string, std::string> out;
      std::size_t n = a.size();
      for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::set<std::string> img;
        std::string key = "{";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) {
            if (!first) key += ",";
            key += a[i];
            first = false;
            img.insert(f.at(a[i]));
          }
        key += "}";
        std::string val = "{";
        first = true;
        for (const auto& y : img) {
          if (!first) val += ",";
          val += y;
          first = false;
        }
        out[key] = val + "}";
      }
      return out;
    };
    m.unit = [](const std::vector<std::string>&, const std::string& x) { return "{" + x + "}"; };
    m.mult = [](const std::vector<std::string>&, const std::string& z) {
      // union of the named subsets
      std::set<std::string> acc;
      std::string inner = z.substr(1, z.size() - 2);
      for (const auto& part : split_top_level(inner, ',', '{', '}')) {
        std::string body = part.substr(1, part.size() - 2);
        for (const auto& x : split_top_level(body, ',', '{', '}'))
          if (!x.empty()) acc.insert(x);
      }
      std::string out = "{";
      bool first = true;
      for (const auto& x : acc) {
        if (!first) out += ",";
        out += x;
        first = false;
      }
      return out + "}";
    };
    return m;
  }
  if (name == "exceptions") {
    std::vector<std::string> exns = params;
    m.obj = [exns](const std::vector<std::string>& a) {
      std::vector<std::string> out = a;
      for (const auto& e : exns) out.push_back("exn:" + e);
      return out;
    };
    m.arr = [exns](const std::vector<std::string>& a, const std::vector<std::string>&,
                   const std::map<std::string, std::string>& f) {
      std::map<std::string, std::string> out;
      for (const auto& x : a) out[x] = f.at(x);
      for (const auto& e : exns) out["exn:" + e] = "exn:" + e;
      return out;
    };
    m.unit = [](const std::vector<std::string>&, const std::string& x) { return x; };
    m.mult = [](const std::vector<std::string>&, const std::string& z) { return z; };
    return m;
  }
  throw std::invalid_argument("classic_monad: unknown name " + name);
}

int IOTree::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

std::string IOTree::encode() const {
  switch (kind) {
    case Ret: return "ret(" + value + ")";
    case Out: return "out(" + value + ")." + children[0].encode();
    case In: {
      std::string s = "in[";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += ",";
        s += children[i].encode();
      }
      return s + "]";
    }
  }
  return "";
}

IOTree io_graft(const IOTree& outer, const std::function<IOTree(const std::string&)>& at_leaf) {
  if (outer.kind == IOTree::Ret) return at_leaf(outer.value);
  IOTree out = outer;
  for (auto& c : out.children) c = io_graft(c, at_leaf);
  return out;
}

std::vector<IOTree> io_trees(const std::vector<std::string>& inputs,
                             const std::vector<std::string>& outputs,
                             const std::vector<std::string>& leaves, int depth) {
  std::vector<IOTree> out;
  for (const auto& x : leaves) {
    IOTree t;
    t.kind = IOTree::Ret;
    t.value = x;
    out.push_back(t);
  }
  if (depth == 0) return out;
  std::vector<IOTree> smaller = io_trees(inputs, outputs, leaves, depth - 1);
  for (const auto& o : outputs)
    for (const auto& sub : smaller) {
      IOTree t;
      t.kind = IOTree::Out;
      t.value = o;
      t.children = {sub};
      out.push_back(t);
    }
  if (!inputs.empty()) {
    // input nodes carry one child per input symbol
    std::vector<std::vector<IOTree>> tuples = {{}};
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::vector<std::vector<IOTree>> next;
      for (const auto& tup : tuples)
        for (const auto& sub : smaller) {
          auto t2 = tup;
          t2.push_back(sub);
          next.push_back(t2);
        }
      tuples = std::move(next);
    }
    for (const auto& tup : tuples) {
      IOTree t;
      t.kind = IOTree::In;
      t.children = tup;
      out.push_back(t);
    }
  }
  // drop duplicates introduced by depth overlap
  std::set<std::string> seen;
  std::vector<IOTree> uniq;
  for (const auto& t : out)
    if (seen.insert(t.encode()).second) uniq.push_back(t);
  return uniq;
}

std::string Word::encode() const {
  std::string s;
  for (const auto& l : letters) s += "[" + l.gen + "]" + (l.inverse ? "'" : "");
  return s.empty() ? "1" : s;
}

Word reduce_word(const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().inverse != l.inverse)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word free_group_mu(const BracketedWord& w) {
  Word flat;
  for (const auto& [inner, inverted] : w.factors) {
    if (!inverted) {
      flat.letters.insert(flat.letters.end(), inner.letters.begin(), inner.letters.end());
    } else {
      for (auto it = inner.letters.rbegin(); it != inner.letters.rend(); ++it)
        flat.letters.push_back({it->gen, !it->inverse});
    }
  }
  return reduce_word(flat);
}

FinCategory theta_finitary(const FinMonad& t, int bound) {
  FinCategory c;
  auto ordinal = [](int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  };
  std::vector<std::vector<std::string>> carriers(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    c.objects.push_back(std::to_string(n));
    carriers[n] = t.obj(ordinal(n));
  }
  auto arrow_name = [](int m, int n, const std::vector<std::string>& vals) {
    std::string s = "k[" + std::to_string(m) + "->" + std::to_string(n) + "]";
    for (const auto& v : vals) s += frame(v);
    return s;
  };
  // enumerate all functions [m] -> T[n]
  std::map<std::pair<int, int>, std::vector<std::vector<std::string>>> homs;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      std::vector<std::vector<std::string>> fs;
      if (m == 0) {
        fs.push_back({});
      } else if (!carriers[n].empty()) {
        std::vector<std::size_t> digit(m, 0);
        while (true) {
          std::vector<std::string> vals;
          for (int i = 0; i < m; ++i) vals.push_back(carriers[n][digit[i]]);
          fs.push_back(vals);
          int k = m;
          while (k > 0 && digit[k - 1] + 1 == carriers[n].size()) --k;
          if (k == 0) break;
          ++digit[k - 1];
          for (int j = k; j < m; ++j) digit[j] = 0;
        }
      }
      homs[{m, n}] = fs;
      for (const auto& f : fs) c.arrows.push_back({arrow_name(m, n, f), std::to_string(m),
                                                   std::to_string(n)});
    }
  for (int n = 0; n <= bound; ++n) {
    std::vector<std::string> vals;
    for (int i = 0; i < n; ++i) vals.push_back(t.unit(ordinal(n), std::to_string(i)));
    c.identity[std::to_string(n)] = arrow_name(n, n, vals);
  }
  // Kleisli composition: mu . T g . f
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (const auto& f : homs[{m, n}])
        for (int k = 0; k <= bound; ++k)
          for (const auto& g : homs[{n, k}]) {
            std::map<std::string, std::string> gmap;
            for (int i = 0; i < n; ++i) gmap[std::to_string(i)] = g[i];
            std::map<std::string, std::string> tg =
                t.arr(ordinal(n), carriers[k], gmap);
            std::vector<std::string> comp;
            for (int i = 0; i < m; ++i) comp.push_back(t.mult(ordinal(k), tg.at(f[i])));
            c.composition[{arrow_name(m, n, f), arrow_name(n, k, g)}] =
                arrow_name(m, k, comp);
          }
  return c;
}

}  // namespace fincat::eff
