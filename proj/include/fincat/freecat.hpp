#pragma once

#include <optional>

#include "fincat/core.hpp"

// Directed graphs, finite paths (the free-category construction, handled
// through explicit length bounds), and the filiform-arity machinery:
// factorization of path-valued morphisms, zig-zag equivalence between
// factorizations, path nerves and their Segal-style reconstruction.

namespace fincat::freecat {

struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::map<std::string, std::string> src;
  std::map<std::string, std::string> tgt;

  Report validate() const;
  std::vector<std::string> edges_from(const std::string& v) const;
};

/// A path: its start vertex plus a composable edge sequence (possibly empty;
/// the empty path carries its vertex).
struct Path {
  std::string start;
  std::vector<std::string> edges;

  std::size_t length() const { return edges.size(); }
  std::string end(const Graph& g) const;
  bool valid_in(const Graph& g) const;
  std::string encode() const;
  bool operator==(const Path& o) const { return start == o.start && edges == o.edges; }
  bool operator<(const Path& o) const {
    return std::tie(start, edges) < std::tie(o.start, o.edges);
  }
};

struct GraphMorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;

  Report validate(const Graph& from, const Graph& to) const;
};

/// The filiform graph 0 -> 1 -> ... -> n (vertices "0".."n", edges "e1".."en").
Graph linear_quiver(int n);

/// All paths of length <= maxlen, including one empty path per vertex.
std::vector<Path> free_paths(const Graph& g, int maxlen);

/// Concatenation of a composable sequence of paths (a path of paths in the
/// free category, flattened). Throws on an endpoint mismatch.
Path mu_flatten(const Graph& g, const std::string& start, const std::vector<Path>& inner);

/// A graph morphism from a filiform graph into the free category of g:
/// the image of vertex 0 plus the (composable) image path of each edge.
struct PathMorphism {
  std::string start;
  std::vector<Path> edge_paths;

  int arity() const { return static_cast<int>(edge_paths.size()); }
  Report validate(const Graph& g) const;
  std::string vertex_image(const Graph& g, int i) const;
};

/// e : filiform[n] -> paths of filiform[p], then f : filiform[p] -> g.
struct ArityFactorization {
  int n = 0;
  int p = 0;
  PathMorphism e;   // over linear_quiver(p)
  GraphMorphism f;  // linear_quiver(p) -> g

  /// The morphism this factorization recomposes to.
  PathMorphism recompose(const Graph& g) const;
};

/// Canonical factorization through the filiform graph of total image length;
/// vertex i of the source goes to the running sum of image lengths.
ArityFactorization arity_factorize(const Graph& g, const PathMorphism& m);

enum class ZigzagStatus { YesDirect, YesChain, NoWithinBound };

struct ZigzagResult {
  ZigzagStatus status = ZigzagStatus::NoWithinBound;
  bool same_arrow = true;  // false: inputs factor different morphisms
  std::vector<int> chain_middles;
};

/// Searches chains of single-mediator steps (shift inclusions between
/// filiform middles of arity <= bound). A negative bound selects the default
/// max(p_a, p_b) + 2.
ZigzagResult zigzag_equivalent(const Graph& g, const ArityFactorization& a,
                               const ArityFactorization& b, int bound = -1);

/// The path nerve: level n = paths of length exactly n, with the
/// shift-inclusion maps acting by subpath selection. Presented over the
/// opposite of the truncated distance-preserving category.
SetFunctor graph_nerve(const Graph& g, int trunc);

/// Distance-preserving maps between ordinals "0".."n" as a category; the
/// arrow with offset o from [m] to [k] is "m->k+o".
FinCategory delta0_truncated(int n);

struct RepresentabilityResult {
  bool ok = false;
  Graph graph;                 // the reconstructed graph when ok
  int failing_level = -1;
  std::string detail;
};

/// Reads a candidate graph off levels 0/1 and the two shifts, then checks
/// every level against the graph's paths of that length.
RepresentabilityResult segal_representability_check(const SetFunctor& x);

/// Morphisms filiform[m] -> free category of filiform[n]; each is recorded
/// as its weakly increasing vertex-image tuple.
std::vector<PathMorphism> kleisli_arity_hom(int m, int n);

/// Kleisli composite: substitute b's edge paths into a's, flattening with mu.
PathMorphism kleisli_compose(const PathMorphism& a, const PathMorphism& b, const Graph& target);

/// All factorizations of a morphism through filiform middles of arity
/// <= max_p whose recomposition is exactly the morphism.
std::vector<ArityFactorization> enumerate_factorizations(const Graph& g, const PathMorphism& m,
                                                         int max_p);

/// Verifies that every morphism filiform[n] -> paths(g) with n <= max_n and
/// edge paths of length <= maxlen factors exactly through its canonical
/// middle. `domain_one_only` restricts the sweep to n = 1; that restriction
/// is an optional fast path, never the default.
Report factorization_property_check(const Graph& g, int max_n, int maxlen,
                                    bool domain_one_only = false);

/// The two-object base category such that graphs are set-valued functors on
/// it: objects "V" and "E", arrows "s","t" : E -> V (already in presheaf
/// orientation).
CatPtr graph_base();

SetFunctor graph_presheaf(const Graph& g);
Graph presheaf_graph(const SetFunctor& x);

/// The free category of an acyclic graph: objects are vertices, arrows are
/// all paths. Throws std::invalid_argument on a cyclic input.
FinCategory free_category(const Graph& g);

/// The underlying graph of a category, keeping identity arrows as edges.
Graph underlying_graph(const FinCategory& c);

}  // namespace fincat::freecat
