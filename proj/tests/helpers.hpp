#pragma once

// Shared builders and independent oracles for the test suites. Oracles here
// deliberately avoid the library's own computation paths: quotients are done
// by naive relation closure, counts by direct enumeration.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fincat/core.hpp"

namespace testutil {

using fincat::Arrow;
using fincat::FinCategory;
using fincat::Id;

inline std::shared_ptr<FinCategory> chain_poset(int n) {
  // linear poset on objects x0 < x1 < ... < xn
  auto c = std::make_shared<FinCategory>();
  for (int i = 0; i <= n; ++i) c->objects.push_back("x" + std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      c->arrows.push_back({"le" + std::to_string(i) + std::to_string(j), "x" + std::to_string(i),
                           "x" + std::to_string(j)});
  for (int i = 0; i <= n; ++i)
    c->identity["x" + std::to_string(i)] = "le" + std::to_string(i) + std::to_string(i);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        c->composition[{"le" + std::to_string(i) + std::to_string(j),
                        "le" + std::to_string(j) + std::to_string(k)}] =
            "le" + std::to_string(i) + std::to_string(k);
  return c;
}

inline std::shared_ptr<FinCategory> arrow_category() {
  auto c = std::make_shared<FinCategory>();
  c->objects = {"a", "b"};
  c->arrows = {{"ida", "a", "a"}, {"idb", "b", "b"}, {"f", "a", "b"}};
  c->identity = {{"a", "ida"}, {"b", "idb"}};
  c->composition = {{{"ida", "ida"}, "ida"},
                    {{"idb", "idb"}, "idb"},
                    {{"ida", "f"}, "f"},
                    {{"f", "idb"}, "f"}};
  return c;
}

inline std::shared_ptr<FinCategory> discrete_category(const std::vector<Id>& objects) {
  auto c = std::make_shared<FinCategory>();
  c->objects = objects;
  for (const auto& o : objects) {
    c->arrows.push_back({"id_" + o, o, o});
    c->identity[o] = "id_" + o;
    c->composition[{"id_" + o, "id_" + o}] = "id_" + o;
  }
  return c;
}

/// One-object category from a monoid multiplication table (must be a monoid;
/// callers validate). element 0 is the unit.
inline std::shared_ptr<FinCategory> monoid_category(const std::vector<std::vector<int>>& table) {
  auto c = std::make_shared<FinCategory>();
  c->objects = {"*"};
  int n = static_cast<int>(table.size());
  for (int i = 0; i < n; ++i) c->arrows.push_back({"m" + std::to_string(i), "*", "*"});
  c->identity["*"] = "m0";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c->composition[{"m" + std::to_string(i), "m" + std::to_string(j)}] =
          "m" + std::to_string(table[i][j]);
  return c;
}

/// The five-object chain-with-spur category: a: A->B, b: B->C, c: C->D,
/// d: A->E, with all composites present.
inline std::shared_ptr<FinCategory> chain_with_spur() {
  auto c = std::make_shared<FinCategory>();
  c->objects = {"A", "B", "C", "D", "E"};
  c->arrows = {{"1A", "A", "A"}, {"1B", "B", "B"}, {"1C", "C", "C"}, {"1D", "D", "D"},
               {"1E", "E", "E"}, {"a", "A", "B"},  {"b", "B", "C"},  {"c", "C", "D"},
               {"d", "A", "E"}, {"ba", "A", "C"},  {"cb", "B", "D"}, {"cba", "A", "D"}};
  c->identity = {{"A", "1A"}, {"B", "1B"}, {"C", "1C"}, {"D", "1D"}, {"E", "1E"}};
  auto& k = c->composition;
  for (const auto& ar : c->arrows) {
    k[{c->identity.at(ar.src), ar.id}] = ar.id;
    k[{ar.id, c->identity.at(ar.tgt)}] = ar.id;
  }
  k[{"a", "b"}] = "ba";
  k[{"b", "c"}] = "cb";
  k[{"a", "cb"}] = "cba";
  k[{"ba", "c"}] = "cba";
  return c;
}

/// Oracle: partition the elements of a set-valued diagram by the smallest
/// equivalence relation containing the graph of every arrow action, computed
/// by naive closure rather than union-find.
inline std::vector<std::set<std::pair<Id, std::string>>> closure_partition(
    const fincat::SetFunctor& f) {
  std::vector<std::pair<Id, std::string>> elems;
  for (const auto& o : f.base->objects)
    for (const auto& x : f.at(o)) elems.push_back({o, x});
  auto idx = [&](const std::pair<Id, std::string>& e) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), e) - elems.begin());
  };
  std::vector<std::vector<bool>> rel(elems.size(), std::vector<bool>(elems.size(), false));
  for (std::size_t i = 0; i < elems.size(); ++i) rel[i][i] = true;
  for (const auto& a : f.base->arrows)
    for (const auto& x : f.at(a.src)) {
      std::size_t i = idx({a.src, x});
      std::size_t j = idx({a.tgt, f.map_of(a.id).at(x)});
      rel[i][j] = rel[j][i] = true;
    }
  bool changed = true;  // transitive closure by repeated scanning
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (rel[i][j])
          for (std::size_t k = 0; k < elems.size(); ++k)
            if (rel[j][k] && !rel[i][k]) {
              rel[i][k] = true;
              changed = true;
            }
  }
  std::vector<std::set<std::pair<Id, std::string>>> classes;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen.count(i)) continue;
    std::set<std::pair<Id, std::string>> cls;
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (rel[i][j]) {
        cls.insert(elems[j]);
        seen.insert(j);
      }
    classes.push_back(cls);
  }
  return classes;
}

}  // namespace testutil
