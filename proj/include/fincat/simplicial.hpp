#pragma once

#include <optional>

#include "fincat/core.hpp"

// The simplicial calculus on finite ordinals [n] = {0..n}: weakly monotone
// maps, their unique face/degeneracy normal forms, truncated simplicial sets,
// the nerve of a finite category and the Segal reconstruction.

namespace fincat::simp {

struct MonotoneMap {
  int dom = 0;  // ordinal [dom]
  int cod = 0;
  std::vector<int> values;  // dom+1 entries, each in 0..cod

  bool valid() const;
  int operator()(int i) const { return values.at(static_cast<std::size_t>(i)); }
  bool operator==(const MonotoneMap& o) const {
    return dom == o.dom && cod == o.cod && values == o.values;
  }
  bool operator<(const MonotoneMap& o) const {
    return std::tie(dom, cod, values) < std::tie(o.dom, o.cod, o.values);
  }
};

MonotoneMap identity_map(int n);
/// Face inclusion [n] -> [n+1] omitting i (0 <= i <= n+1).
MonotoneMap face(int n, int i);
/// Degeneracy [n+1] -> [n] hitting i twice (0 <= i <= n).
MonotoneMap degeneracy(int n, int i);
/// "f then g"; throws std::invalid_argument on a domain mismatch.
MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g);
/// All monotone maps [m] -> [n].
std::vector<MonotoneMap> all_monotone(int m, int n);

/// f = face(i1) . ... . face(ik) . degeneracy(j1) . ... . degeneracy(jh)
/// with cod >= i1 > ... > ik >= 0 and 0 <= j1 < ... < jh < dom, and
/// dom - h + k = cod. Unique for every monotone map.
struct DeltaNormalForm {
  int dom = 0;
  int cod = 0;
  std::vector<int> deltas;  // strictly decreasing
  std::vector<int> sigmas;  // strictly increasing
};

DeltaNormalForm normal_form(const MonotoneMap& f);
MonotoneMap recompose(const DeltaNormalForm& nf);

/// Simplicial set truncated at level N, presented by generator actions.
/// face[n][i] is the action of face(n-1, i) (a map level n -> level n-1);
/// degen[n][i] the action of degeneracy(n, i) (level n -> level n+1).
struct TruncSimplicialSet {
  int trunc = 0;
  std::vector<std::vector<std::string>> levels;  // 0..trunc
  std::vector<std::vector<std::map<std::string, std::string>>> face;
  std::vector<std::vector<std::map<std::string, std::string>>> degen;

  /// Checks level/action shapes plus every simplicial identity instance that
  /// fits inside the truncation.
  Report validate() const;
};

/// Action X(f) : X_cod -> X_dom computed through the normal form of f.
/// Throws if either ordinal exceeds the truncation.
std::map<std::string, std::string> eval_simplicial(const TruncSimplicialSet& x,
                                                   const MonotoneMap& f);

/// Nerve of a finite category, truncated at N. Level n is the set of
/// composable n-tuples, encoded "f1|f2|...|fn" (level 0 holds object ids).
TruncSimplicialSet nerve(const FinCategory& c, int n);

/// True when every (p,q) square within the truncation is a pullback.
struct SegalResult {
  bool ok = false;
  bool vacuous = false;         // truncation too low to say anything
  std::string witness;          // offending element / pair description
  int p = 0, q = 0;             // offending square
};

SegalResult segal_check(const TruncSimplicialSet& x);

/// Rebuild a category from a Segal simplicial set. Requires trunc >= 3 unless
/// allow_unverified_associativity is set, in which case a trunc-2 input is
/// reconstructed without the level-3 certificate.
struct CategorifyResult {
  FinCategory category;
  bool associativity_certified = true;
};

CategorifyResult categorify(const TruncSimplicialSet& x,
                            bool allow_unverified_associativity = false);

std::size_t count_degenerate(const TruncSimplicialSet& x, int level);

/// Level-wise bijections commuting with all face and degeneracy actions.
bool simplicial_isomorphic(const TruncSimplicialSet& a, const TruncSimplicialSet& b);

/// The truncated simplicial category as data: objects "0".."n", all monotone
/// maps as arrows, composition tabulated. Arrow ids are canonical encodings.
FinCategory delta_truncated(int n);

}  // namespace fincat::simp
