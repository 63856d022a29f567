#include "fincat/operad.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincat::opd {
namespace {

std::string tuple_key(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i];
  }
  return s;
}

// enumerate tuples of operations with the given arities drawn from ops
void for_each_tuple(const std::vector<std::vector<std::string>>& pools,
                    const std::function<void(const std::vector<std::string>&)>& visit) {
  std::vector<std::size_t> idx(pools.size(), 0);
  for (const auto& p : pools)
    if (p.empty()) return;
  while (true) {
    std::vector<std::string> tup;
    for (std::size_t i = 0; i < pools.size(); ++i) tup.push_back(pools[i][idx[i]]);
    visit(tup);
    std::size_t k = pools.size();
    while (k > 0 && idx[k - 1] + 1 == pools[k - 1].size()) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < pools.size(); ++j) idx[j] = 0;
  }
}

// all arity vectors (k1..kn) with sum <= bound
void for_each_arity_vector(int n, int bound,
                           const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (i == n) {
      visit(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      go(i + 1, left - k);
    }
  };
  go(0, bound);
}

}  // namespace

int Operad::arity_of(const std::string& op) const {
  for (int n = 0; n <= max_arity; ++n)
    if (std::find(ops[n].begin(), ops[n].end(), op) != ops[n].end()) return n;
  return -1;
}

Report validate_operad(const Operad& c) {
  Report r;
  if (static_cast<int>(c.ops.size()) != c.max_arity + 1) {
    r.add("ops-shape", "expected one operation list per arity 0.." +
                           std::to_string(c.max_arity));
    return r;
  }
  if (c.arity_of(c.identity) != 1) r.add("identity-arity", c.identity + " is not a unary operation");

  // composition defined exactly on in-range tuples
  for (int n = 0; n <= c.max_arity; ++n)
    for (const auto& op : c.ops[n])
      for_each_arity_vector(n, c.max_arity, [&](const std::vector<int>& ks) {
        std::vector<std::vector<std::string>> pools;
        int total = 0;
        for (int k : ks) {
          pools.push_back(c.ops[k]);
          total += k;
        }
        (void)total;
        for_each_tuple(pools, [&](const std::vector<std::string>& args) {
          auto it = c.comp.find({op, args});
          if (it == c.comp.end()) {
            r.add("composition-total", op + " on (" + tuple_key(args) + ")");
            return;
          }
          int want = 0;
          for (const auto& a : args) want += c.arity_of(a);
          if (c.arity_of(it->second) != want)
            r.add("composition-arity", op + " on (" + tuple_key(args) + ")");
        });
      });
  if (!r.ok()) return r;

  // identity laws
  for (int n = 0; n <= c.max_arity; ++n)
    for (const auto& op : c.ops[n]) {
      std::vector<std::string> ids(n, c.identity);
      if (n <= c.max_arity && c.comp.at({op, ids}) != op)
        r.add("right-identity", op);
      if (c.comp.at({c.identity, {op}}) != op) r.add("left-identity", op);
    }

  // associativity wherever both routes stay in range
  for (int n = 0; n <= c.max_arity; ++n)
    for (const auto& op : c.ops[n])
      for_each_arity_vector(n, c.max_arity, [&](const std::vector<int>& ks) {
        std::vector<std::vector<std::string>> pools;
        for (int k : ks) pools.push_back(c.ops[k]);
        for_each_tuple(pools, [&](const std::vector<std::string>& args) {
          // inner arguments for each args[i]
          int total_k = 0;
          for (int k : ks) total_k += k;
          for_each_arity_vector(total_k, c.max_arity, [&](const std::vector<int>& ms) {
            std::vector<std::vector<std::string>> inner_pools;
            for (int m : ms) inner_pools.push_back(c.ops[m]);
            for_each_tuple(inner_pools, [&](const std::vector<std::string>& inner) {
              // route 1: (op . args) . inner
              const std::string& opargs = c.comp.at({op, args});
              auto route1 = c.comp.find({opargs, inner});
              // route 2: op . (args[i] . their slice of inner)
              std::vector<std::string> plugged;
              std::size_t at = 0;
              bool ok = true;
              for (std::size_t i = 0; i < args.size(); ++i) {
                int k = ks[i];
                std::vector<std::string> slice(inner.begin() + at, inner.begin() + at + k);
                at += k;
                auto it = c.comp.find({args[i], slice});
                if (it == c.comp.end()) {
                  ok = false;
                  break;
                }
                plugged.push_back(it->second);
              }
              if (!ok || route1 == c.comp.end()) return;
              auto route2 = c.comp.find({op, plugged});
              if (route2 == c.comp.end()) return;
              if (route1->second != route2->second)
                r.add("associativity",
                      op + " . (" + tuple_key(args) + ") . (" + tuple_key(inner) + ")");
            });
          });
        });
      });
  return r;
}

Operad reverse_operad(const Operad& c) {
  Operad out = c;
  out.comp.clear();
  for (const auto& [key, val] : c.comp) {
    auto rev = key.second;
    std::reverse(rev.begin(), rev.end());
    out.comp[{key.first, rev}] = val;
  }
  return out;
}

Operad terminal_operad(int n) {
  Operad c;
  c.max_arity = n;
  c.ops.resize(n + 1);
  for (int k = 0; k <= n; ++k) c.ops[k] = {"t" + std::to_string(k)};
  c.identity = "t1";
  for (int k = 0; k <= n; ++k)
    for_each_arity_vector(k, n, [&](const std::vector<int>& ks) {
      std::vector<std::string> args;
      int total = 0;
      for (int m : ks) {
        args.push_back("t" + std::to_string(m));
        total += m;
      }
      c.comp[{"t" + std::to_string(k), args}] = "t" + std::to_string(total);
    });
  return c;
}

std::vector<std::string> induced_carrier(const Operad& c, const std::vector<std::string>& x,
                                         int bound) {
  std::vector<std::string> out;
  for (int n = 0; n <= bound; ++n)
    for (const auto& op : c.ops[n]) {
      std::vector<std::vector<std::string>> pools(n, x);
      for_each_tuple(pools, [&](const std::vector<std::string>& tup) {
        out.push_back("(" + op + ";" + tuple_key(tup) + ")");
      });
    }
  return out;
}

namespace {

std::pair<std::string, std::vector<std::string>> decode_elem(const std::string& e) {
  // "(op;x1,x2)" with element names free of ';' at depth 0
  std::string body = e.substr(1, e.size() - 2);
  std::size_t semi = body.find(';');
  std::string op = body.substr(0, semi);
  std::string rest = body.substr(semi + 1);
  std::vector<std::string> xs;
  int depth = 0;
  std::string cur;
  for (char ch : rest) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      xs.push_back(cur);
      cur.clear();
    } else
      cur.push_back(ch);
  }
  if (!cur.empty()) xs.push_back(cur);
  return {op, xs};
}

}  // namespace

std::string induced_unit(const Operad& c, const std::string& x) {
  return "(" + c.identity + ";" + x + ")";
}

std::optional<std::string> induced_mult(const Operad& c, const std::string& nested) {
  auto [op, inner] = decode_elem(nested);
  std::vector<std::string> inner_ops;
  std::vector<std::string> flat;
  for (const auto& e : inner) {
    auto [iop, xs] = decode_elem(e);
    inner_ops.push_back(iop);
    for (const auto& x : xs) flat.push_back(x);
  }
  auto it = c.comp.find({op, inner_ops});
  if (it == c.comp.end()) return std::nullopt;  // outside the truncation
  return "(" + it->second + ";" + tuple_key(flat) + ")";
}

bool monad_iso_check(const Operad& c, const std::vector<int>& sizes) try {
  Operad rev = reverse_operad(c);
  auto reversal = [&](const std::string& elem) {
    auto [op, xs] = decode_elem(elem);
    std::reverse(xs.begin(), xs.end());
    return "(" + op + ";" + tuple_key(xs) + ")";
  };
  for (int size : sizes) {
    std::vector<std::string> x;
    for (int i = 0; i < size; ++i) x.push_back(std::to_string(i));
    // units commute with the reversal
    for (const auto& e : x)
      if (reversal(induced_unit(c, e)) != induced_unit(rev, e)) return false;
    // multiplications commute: phi . mu = mu_rev . phi_T . T phi
    std::vector<std::string> tx = induced_carrier(c, x, c.max_arity);
    for (int n = 0; n <= c.max_arity; ++n)
      for (const auto& op : c.ops[n]) {
        std::vector<std::vector<std::string>> pools(n, tx);
        for_each_tuple(pools, [&](const std::vector<std::string>& tup) {
          std::string nested = "(" + op + ";" + tuple_key(tup) + ")";
          auto flat = induced_mult(c, nested);
          if (!flat) return;
          // push the element through the reversal at both levels, then
          // multiply in the reverse operad
          std::vector<std::string> moved;
          for (const auto& t : tup) moved.push_back(reversal(t));
          std::reverse(moved.begin(), moved.end());
          std::string nested_rev = "(" + op + ";" + tuple_key(moved) + ")";
          auto flat_rev = induced_mult(rev, nested_rev);
          if (!flat_rev || reversal(*flat) != *flat_rev)
            throw std::runtime_error("reversal square fails at " + nested);
        });
      }
  }
  return true;
} catch (const std::runtime_error&) {
  return false;
}

bool strongly_regular(const EquationTree& eq) {
  auto leaves = [](const EquationTree::Term& t) {
    std::vector<std::string> out;
    std::function<void(const EquationTree::Term&)> walk = [&](const EquationTree::Term& u) {
      if (u.is_var) {
        out.push_back(u.name);
        return;
      }
      for (const auto& a : u.args) walk(a);
    };
    walk(t);
    return out;
  };
  std::vector<std::string> l = leaves(eq.left);
  std::vector<std::string> r = leaves(eq.right);
  if (l != r) return false;
  std::set<std::string> seen(l.begin(), l.end());
  return seen.size() == l.size();
}

bool algebra_valid(const Operad& c, const OperadAlgebra& alg) {
  // identity acts as the identity function
  for (const auto& x : alg.carrier) {
    auto it = alg.action.find({c.identity, {x}});
    if (it == alg.action.end() || it->second != x) return false;
  }
  // every in-range composition is respected
  for (const auto& [key, composite] : c.comp) {
    const auto& [op, args] = key;
    int total = 0;
    for (const auto& a : args) total += c.arity_of(a);
    // tuples for the flattened arity
    std::vector<std::vector<std::string>> pools(total, alg.carrier);
    bool good = true;
    for_each_tuple(pools, [&](const std::vector<std::string>& xs) {
      // evaluate op after evaluating each argument on its slice
      std::vector<std::string> mids;
      std::size_t at = 0;
      for (const auto& a : args) {
        int k = c.arity_of(a);
        std::vector<std::string> slice(xs.begin() + at, xs.begin() + at + k);
        at += k;
        auto it = alg.action.find({a, slice});
        if (it == alg.action.end()) {
          good = false;
          return;
        }
        mids.push_back(it->second);
      }
      auto lhs = alg.action.find({op, mids});
      auto rhs = alg.action.find({composite, xs});
      if (lhs == alg.action.end() || rhs == alg.action.end() || lhs->second != rhs->second)
        good = false;
    });
    if (!good) return false;
  }
  return true;
}

}  // namespace fincat::opd
