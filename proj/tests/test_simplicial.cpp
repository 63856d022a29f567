#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/simplicial.hpp"
#include "helpers.hpp"

using namespace fincat;
using namespace fincat::simp;
using namespace testutil;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Oracle: every index-valid (deltas, sigmas) pair for maps [m] -> [n]
std::vector<DeltaNormalForm> all_normal_forms(int m, int n) {
  std::vector<std::vector<int>> delta_choices, sigma_choices;
  std::vector<DeltaNormalForm> out;
  // choose strictly decreasing deltas in [0..n] and strictly increasing
  // sigmas in [0..m-1] with m - h + k = n
  for (int k = 0; k <= n + 1; ++k) {
    int h = m - n + k;
    if (h < 0 || h > m) continue;
    // subsets of size k of {0..n}, descending
    std::vector<int> dsel(k);
    std::function<void(int, int)> pick_d = [&](int start, int depth) {
      if (depth == k) {
        std::vector<int> ssel(h);
        std::function<void(int, int)> pick_s = [&](int s0, int d2) {
          if (d2 == h) {
            DeltaNormalForm nf;
            nf.dom = m;
            nf.cod = n;
            nf.deltas = dsel;
            std::sort(nf.deltas.begin(), nf.deltas.end(), std::greater<int>());
            nf.sigmas = ssel;
            out.push_back(nf);
            return;
          }
          for (int j = s0; j < m; ++j) {
            ssel[d2] = j;
            pick_s(j + 1, d2 + 1);
          }
        };
        pick_s(0, 0);
        return;
      }
      for (int i = start; i <= n; ++i) {
        dsel[depth] = i;
        pick_d(i + 1, depth + 1);
      }
    };
    pick_d(0, 0);
  }
  return out;
}

}  // namespace

TEST_CASE("identity has empty normal form") {
  auto nf = normal_form(identity_map(2));
  CHECK(nf.deltas.empty());
  CHECK(nf.sigmas.empty());
}

TEST_CASE("normal forms of small maps match the factorization oracle") {
  // [2]->[1] with values (0,0,1): enumerate all composites and match
  MonotoneMap f{2, 1, {0, 0, 1}};
  int hits = 0;
  for (const auto& cand : all_normal_forms(2, 1))
    if (recompose(cand) == f) {
      ++hits;
      CHECK(cand.sigmas == std::vector<int>{0});
      CHECK(cand.deltas.empty());
    }
  CHECK(hits == 1);
  auto nf = normal_form(f);
  CHECK(nf.sigmas == std::vector<int>{0});
  CHECK(nf.deltas.empty());

  MonotoneMap g{0, 1, {1}};
  hits = 0;
  for (const auto& cand : all_normal_forms(0, 1))
    if (recompose(cand) == g) {
      ++hits;
      CHECK(cand.deltas == std::vector<int>{0});
      CHECK(cand.sigmas.empty());
    }
  CHECK(hits == 1);
  CHECK(normal_form(g).deltas == std::vector<int>{0});
}

TEST_CASE("normal_form is a bijection onto index-valid pairs for m,n <= 4") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto maps = all_monotone(m, n);
      CHECK(static_cast<long long>(maps.size()) == binom(m + n + 1, m + 1));
      std::set<std::pair<std::vector<int>, std::vector<int>>> forms;
      for (const auto& f : maps) {
        auto nf = normal_form(f);
        CHECK(static_cast<int>(nf.sigmas.size()) == m - n + static_cast<int>(nf.deltas.size()));
        CHECK(recompose(nf) == f);
        forms.insert({nf.deltas, nf.sigmas});
      }
      CHECK(forms.size() == maps.size());
      CHECK(all_normal_forms(m, n).size() == maps.size());
    }
}

TEST_CASE("composition: units, the unit cases of sigma.delta, and a direct evaluation") {
  MonotoneMap f{2, 1, {0, 1, 1}};
  CHECK(compose_monotone(identity_map(2), f) == f);
  CHECK(compose_monotone(f, identity_map(1)) == f);
  for (int n = 0; n <= 3; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i : {j, j + 1})
        CHECK(compose_monotone(face(n, i), degeneracy(n, j)) == identity_map(n));
  // delta0 then delta0 lands 0 at 2; cross-checked against the normal form
  MonotoneMap dd = compose_monotone(face(0, 0), face(1, 0));
  CHECK(dd.values == std::vector<int>{2});
  CHECK(recompose(normal_form(dd)) == dd);
  CHECK_THROWS_AS(compose_monotone(f, f), std::invalid_argument);
}

TEST_CASE("nerve of the arrow category has levels 2, 3, 4 and validates") {
  auto x = nerve(*arrow_category(), 2);
  CHECK(x.validate().ok());
  CHECK(x.levels[0].size() == 2);
  CHECK(x.levels[1].size() == 3);
  CHECK(x.levels[2].size() == 4);
}

TEST_CASE("eval on the nerve: edge-source map and functoriality of composites") {
  // triangle category: f: A->B, g: B->C, h = their composite
  FinCategory tri;
  tri.objects = {"A", "B", "C"};
  tri.arrows = {{"1A", "A", "A"}, {"1B", "B", "B"}, {"1C", "C", "C"},
                {"f", "A", "B"},  {"g", "B", "C"},  {"h", "A", "C"}};
  tri.identity = {{"A", "1A"}, {"B", "1B"}, {"C", "1C"}};
  for (const auto& ar : tri.arrows) {
    tri.composition[{tri.identity.at(ar.src), ar.id}] = ar.id;
    tri.composition[{ar.id, tri.identity.at(ar.tgt)}] = ar.id;
  }
  tri.composition[{"f", "g"}] = "h";
  REQUIRE(validate_category(tri).ok());
  auto x = nerve(tri, 3);
  CHECK(x.validate().ok());

  auto src = eval_simplicial(x, MonotoneMap{0, 1, {0}});
  CHECK(src.at("f") == "A");
  CHECK(src.at("g") == "B");
  CHECK(src.at("h") == "A");
  auto tgt = eval_simplicial(x, MonotoneMap{0, 1, {1}});
  CHECK(tgt.at("f") == "B");
  CHECK(tgt.at("g") == "C");
  CHECK(tgt.at("h") == "C");

  CHECK(eval_simplicial(x, identity_map(2)).at("f|g") == "f|g");

  // a composite evaluated directly agrees with the two-step evaluation
  for (const auto& f1 : all_monotone(1, 2))
    for (const auto& f2 : all_monotone(2, 3)) {
      auto direct = eval_simplicial(x, compose_monotone(f1, f2));
      auto left = eval_simplicial(x, f2);
      auto right = eval_simplicial(x, f1);
      for (const auto& z : x.levels[3]) CHECK(direct.at(z) == right.at(left.at(z)));
    }
  CHECK_THROWS_AS(eval_simplicial(x, identity_map(4)), std::invalid_argument);
}

TEST_CASE("nerve of the chain-with-spur category: level sizes and nondegenerate counts") {
  auto c = chain_with_spur();
  auto x = nerve(*c, 3);
  CHECK(x.validate().ok());
  CHECK(x.levels[0].size() == 5);
  CHECK(x.levels[1].size() == 12);

  // oracle: level n is the set of composable n-tuples
  std::size_t pairs = 0, triples = 0, nondeg2 = 0, nondeg3 = 0;
  std::set<Id> ids;
  for (const auto& [o, a] : c->identity) ids.insert(a);
  for (const auto& a1 : c->arrows)
    for (const auto& a2 : c->arrows) {
      if (a1.tgt != a2.src) continue;
      ++pairs;
      if (!ids.count(a1.id) && !ids.count(a2.id)) ++nondeg2;
      for (const auto& a3 : c->arrows) {
        if (a2.tgt != a3.src) continue;
        ++triples;
        if (!ids.count(a1.id) && !ids.count(a2.id) && !ids.count(a3.id)) ++nondeg3;
      }
    }
  CHECK(x.levels[2].size() == pairs);
  CHECK(x.levels[3].size() == triples);
  CHECK(x.levels[2].size() - count_degenerate(x, 2) == nondeg2);
  CHECK(x.levels[3].size() - count_degenerate(x, 3) == nondeg3);
  // frozen values from the enumeration above
  CHECK(pairs == 23);
  CHECK(triples == 39);
  CHECK(nondeg2 == 4);
  CHECK(nondeg3 == 1);
}

TEST_CASE("nerve of a discrete category is degenerate above level 0") {
  auto x = nerve(*discrete_category({"u", "v"}), 3);
  for (int lvl = 1; lvl <= 3; ++lvl)
    CHECK(count_degenerate(x, lvl) == x.levels[lvl].size());
}

TEST_CASE("degenerate counts match inclusion-exclusion over degeneracy images") {
  auto x = nerve(*chain_with_spur(), 3);
  // oracle: nerve simplices are degenerate iff the tuple contains an identity
  std::set<Id> ids;
  for (const auto& [o, a] : x.degen[0][0]) ids.insert(a);
  for (int lvl = 1; lvl <= 3; ++lvl) {
    std::size_t with_id = 0;
    for (const auto& name : x.levels[lvl]) {
      bool has = false;
      std::string cur;
      for (char ch : std::string(name) + "|") {
        if (ch == '|') {
          if (ids.count(cur)) has = true;
          cur.clear();
        } else
          cur.push_back(ch);
      }
      if (has) ++with_id;
    }
    CHECK(count_degenerate(x, lvl) == with_id);
  }
}

TEST_CASE("segal_check holds on nerves and fails with a witness otherwise") {
  CHECK(segal_check(nerve(*chain_with_spur(), 4)).ok);
  CHECK(segal_check(nerve(*arrow_category(), 3)).ok);

  // two composable nondegenerate edges, but no nondegenerate filler
  auto x = nerve(*arrow_category(), 2);
  std::vector<std::string> pruned;
  for (const auto& z : x.levels[2])
    if (z != "ida|f") pruned.push_back(z);
  x.levels[2] = pruned;
  for (int i = 0; i <= 2; ++i) x.face[2][i].erase("ida|f");
  for (int i = 0; i <= 1; ++i) {
    for (auto it = x.degen[1][i].begin(); it != x.degen[1][i].end();)
      it = it->second == "ida|f" ? x.degen[1][i].erase(it) : std::next(it);
  }
  auto res = segal_check(x);
  CHECK(!res.ok);
  CHECK(res.p == 1);
  CHECK(res.q == 1);
  CHECK(res.witness.find("no filler") != std::string::npos);

  // doubled filler: two 2-simplices over one composable pair
  auto y = nerve(*arrow_category(), 2);
  y.levels[2].push_back("extra");
  for (int i = 0; i <= 2; ++i) y.face[2][i]["extra"] = y.face[2][i].at("ida|f");
  auto res2 = segal_check(y);
  CHECK(!res2.ok);
  CHECK(res2.witness.find("share the pair") != std::string::npos);

  TruncSimplicialSet low;
  low.trunc = 1;
  low.levels = {{"o"}, {}};
  low.face.resize(2);
  low.face[1].resize(2);
  low.degen.resize(2);
  low.degen[0].resize(1);
  auto res3 = segal_check(low);
  CHECK(res3.ok);
  CHECK(res3.vacuous);
}

TEST_CASE("categorify round-trips the arrow category and the chain-with-spur") {
  auto c1 = arrow_category();
  auto got1 = categorify(nerve(*c1, 3));
  CHECK(got1.associativity_certified);
  CHECK(validate_category(got1.category).ok());
  CHECK(find_category_iso(got1.category, *c1).has_value());

  auto c2 = chain_with_spur();
  auto got2 = categorify(nerve(*c2, 4));
  CHECK(find_category_iso(got2.category, *c2).has_value());

  // nerve . categorify is isomorphic to the input as a simplicial set
  auto x = nerve(*c1, 3);
  CHECK(simplicial_isomorphic(nerve(got1.category, 3), x));
}

TEST_CASE("categorify on a Segal-failing input names the witness") {
  auto y = nerve(*arrow_category(), 2);
  y.levels[2].push_back("extra");
  for (int i = 0; i <= 2; ++i) y.face[2][i]["extra"] = y.face[2][i].at("ida|f");
  CHECK_THROWS_WITH_AS(categorify(y), doctest::Contains("Segal"), std::invalid_argument);

  // trunc 2 only reconstructs with the explicit flag
  auto x2 = nerve(*arrow_category(), 2);
  CHECK_THROWS_AS(categorify(x2), std::invalid_argument);
  auto loose = categorify(x2, true);
  CHECK(!loose.associativity_certified);
  CHECK(find_category_iso(loose.category, *arrow_category()).has_value());
}

TEST_CASE("delta_truncated is a valid category with the right hom counts") {
  FinCategory d = delta_truncated(3);
  CHECK(validate_category(d).ok());
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(d.hom(std::to_string(m), std::to_string(n)).size() ==
            static_cast<std::size_t>(binom(m + n + 1, m + 1)));
}
