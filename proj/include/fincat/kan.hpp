#pragma once

#include "fincat/core.hpp"
#include "fincat/freecat.hpp"

// Pointwise left Kan extensions along functors of finite categories via the
// coend formula, coends as wedge quotients, weighted colimits of
// presheaf-valued diagrams, and density probing for filiform arities.

namespace fincat::kan {

/// A functor of mixed variance into finite sets: a carrier per object pair
/// plus a contravariant left action and covariant right action per arrow.
/// left[a][b] : carrier(tgt a, b) -> carrier(src a, b)   (contravariant leg)
/// right[a][b] : carrier(b, src a) -> carrier(b, tgt a)  (covariant leg)
struct MixedVarianceFunctor {
  CatPtr base;
  std::map<std::pair<Id, Id>, std::vector<std::string>> carrier;
  std::map<Id, std::map<Id, std::map<std::string, std::string>>> left;
  std::map<Id, std::map<Id, std::map<std::string, std::string>>> right;

  Report validate() const;  // both legs functorial and commuting
};

/// The wedge quotient of the diagonal: disjoint union of carrier(c, c)
/// divided by left(f)(x) ~ right(f)(x) for every arrow f and every
/// x in carrier(tgt f, src f).
ColimitResult coend_set(const MixedVarianceFunctor& s);

/// One element of (Lan_i F)(e): the class of a pair (u : i(c) -> e, x in Fc).
struct LanClass {
  std::string id;  // canonical representative "c/u/x"
};

struct LanAtResult {
  std::vector<std::string> classes;
  /// cocone component: (c, u : i(c) -> e, x) -> class
  std::map<std::tuple<Id, Id, std::string>, std::string> tag;
};

/// (Lan_i F)(e) as the quotient of the disjoint union of E(ic, e) x Fc by
/// (u after i(w), x) ~ (u, F(w)(x)).
LanAtResult pointwise_lan_at(const SetFunctor& f, const FinFunctor& i, const Id& e);

struct LanResult {
  SetFunctor lan;  // on the target category of i
  std::map<Id, LanAtResult> per_object;
};

/// The whole extension: values at every object of the target plus the
/// functorial action by postcomposition.
LanResult pointwise_lan(const SetFunctor& f, const FinFunctor& i);

/// A presheaf-valued diagram with a set-valued weight. The shape objects all
/// live over one shared base (e.g. the graph base); shape arrows are given
/// componentwise per base object.
struct WeightedDiagram {
  CatPtr index;                                           // C
  std::map<Id, std::vector<std::string>> weight;          // contravariant on C
  std::map<Id, std::map<std::string, std::string>> weight_action;  // per arrow: W(tgt)->W(src)
  std::map<Id, SetFunctor> shape;                         // per object of C
  std::map<Id, std::map<Id, std::map<std::string, std::string>>> shape_action;  // per arrow, per base object

  Report validate() const;
};

struct WeightedColimitResult {
  SetFunctor object;  // over the shared presheaf base
  /// injection: (index object c, weight element w, base object b, element z) -> class
  std::map<std::tuple<Id, std::string, Id, std::string>, std::string> injection;
};

/// Computed componentwise over the presheaf base via the coend quotient.
WeightedColimitResult weighted_colimit(const WeightedDiagram& d);

enum class DensityVerdict { Isomorphism, Undetermined };

struct DensityReport {
  DensityVerdict verdict = DensityVerdict::Undetermined;
  std::string detail;
};

/// Probes whether a graph is the colimit of filiform pieces of arity
/// <= bound weighted by its own path sets. Positive answers are certified;
/// a failed comparison is only "undetermined" at this bound.
DensityReport density_check_graph(const freecat::Graph& probe, int bound);

/// The canonical comparison diagram used by density_check_graph, exposed for
/// reuse: weight c |-> Graph(filiform[c], probe), shape c |-> filiform[c].
WeightedDiagram filiform_weighted_diagram(const freecat::Graph& probe, int bound);

}  // namespace fincat::kan
