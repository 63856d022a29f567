#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Finite categories, functors into finite sets, natural transformations and
// colimits of finite set-valued diagrams. Everything here is a plain value:
// construct, validate, share freely across threads.

namespace fincat {

using Id = std::string;

struct Violation {
  std::string rule;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string detail) {
    violations.push_back({std::move(rule), std::move(detail)});
  }
};

struct Arrow {
  Id id;
  Id src;
  Id tgt;
};

/// An explicitly tabulated finite category. `composition` maps a composable
/// pair (f, g) with tgt(f) == src(g) to the composite "f then g"
/// (diagrammatic order). Partiality outside composable pairs is a
/// representation invariant, not an error state.
struct FinCategory {
  std::vector<Id> objects;
  std::vector<Arrow> arrows;
  std::map<Id, Id> identity;                    // object id -> arrow id
  std::map<std::pair<Id, Id>, Id> composition;  // (f, g) -> composite

  bool has_object(const Id& o) const;
  const Arrow* arrow(const Id& a) const;
  /// Composite "f then g", or nullopt if the pair is not composable.
  std::optional<Id> compose(const Id& f, const Id& g) const;
  /// Arrows a -> b, by filtering the arrow list.
  std::vector<Id> hom(const Id& a, const Id& b) const;
};

/// Every violated axiom instance, empty report iff valid.
Report validate_category(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

using CatPtr = std::shared_ptr<const FinCategory>;

struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::map<Id, Id> object_map;
  std::map<Id, Id> arrow_map;

  Report validate() const;  // preserves src/tgt, identities, composition
  bool fully_faithful() const;
};

/// A functor from a finite category to finite sets: one carrier per object,
/// one function per arrow. Presheaves are SetFunctors on the opposite.
struct SetFunctor {
  CatPtr base;
  std::map<Id, std::vector<std::string>> carrier;
  std::map<Id, std::map<std::string, std::string>> action;

  Report validate() const;
  const std::vector<std::string>& at(const Id& o) const;
  const std::map<std::string, std::string>& map_of(const Id& a) const;
};

struct NatTransform {
  SetFunctor source;
  SetFunctor target;
  std::map<Id, std::map<std::string, std::string>> components;
};

/// Lists every failing naturality square.
Report check_naturality(const NatTransform& t);

/// Quotient data for a colimit: apex classes plus the cocone injections.
/// Class ids are canonical minimal representatives ("object:element") so
/// output is reproducible.
struct ColimitResult {
  std::vector<std::string> apex;
  std::map<std::pair<Id, std::string>, std::string> injection;
};

/// Colimit of a finite set-valued diagram, computed as the coequalizer of the
/// two evident maps from the arrow-indexed disjoint union to the
/// object-indexed one, with the quotient done by union-find.
ColimitResult colimit_set_functor(const SetFunctor& f);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

struct CatIso {
  std::map<Id, Id> object_map;
  std::map<Id, Id> arrow_map;
};

/// Bijective isomorphism discovered by backtracking search. Equality of
/// categories always means this, never id-equality.
std::optional<CatIso> find_category_iso(const FinCategory& a, const FinCategory& b);

/// All natural transformations F => G over the same base, by backtracking
/// with per-arrow pruning.
std::vector<std::map<Id, std::map<std::string, std::string>>> enumerate_nat(
    const SetFunctor& f, const SetFunctor& g);

/// As above but every component bijective.
std::vector<std::map<Id, std::map<std::string, std::string>>> enumerate_nat_iso(
    const SetFunctor& f, const SetFunctor& g);

}  // namespace fincat
