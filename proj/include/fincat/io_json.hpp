#pragma once

#include <json.hpp>

#include "fincat/core.hpp"
#include "fincat/effects.hpp"
#include "fincat/freecat.hpp"
#include "fincat/globular.hpp"
#include "fincat/operad.hpp"
#include "fincat/simplicial.hpp"

// File formats: one JSON document per file with a top-level "kind"
// discriminator. Sets are arrays of strings, maps are objects. Readers
// validate the value's invariants and throw std::invalid_argument naming the
// violated invariant; writers emit canonically ordered keys.

namespace fincat::io {

using json = nlohmann::json;

/// Parses a file; errors carry the path and a position where available.
json load_file(const std::string& path);
std::string kind_of(const json& j);

FinCategory category_from_json(const json& j, bool check = true);
json category_to_json(const FinCategory& c);

freecat::Graph graph_from_json(const json& j, bool check = true);
json graph_to_json(const freecat::Graph& g);

simp::TruncSimplicialSet simplicial_from_json(const json& j, bool check = true);
json simplicial_to_json(const simp::TruncSimplicialSet& x);

glob::GlobularSet2 globular_from_json(const json& j, bool check = true);
json globular_to_json(const glob::GlobularSet2& g);

glob::Pd2 pd2_from_json(const json& j);
json pd2_to_json(const glob::Pd2& p);

struct Pd2SubstitutionFile {
  glob::Pd2 outer;
  std::vector<glob::ColumnFill> fills;
};
Pd2SubstitutionFile pd2_substitution_from_json(const json& j);

struct StoreTermFile {
  eff::Store store;
  int vars = 1;
  eff::StoreTerm term;
};
StoreTermFile store_term_from_json(const json& j, bool check = true);
json store_term_to_json(const eff::StoreTerm& t, const eff::Store& store, int vars);

opd::Operad operad_from_json(const json& j, bool check = true);
json operad_to_json(const opd::Operad& c);

opd::EquationTree equation_from_json(const json& j);

/// "graph-to-paths": a morphism from a filiform graph into the free category
/// of a separately supplied graph.
freecat::PathMorphism path_morphism_from_json(const json& j, const freecat::Graph& g);

json factorization_to_json(const freecat::ArityFactorization& f);
freecat::ArityFactorization factorization_from_json(const json& j);

struct MonadSpec {
  std::string name;  // partiality | nondeterminism | exceptions | state
  std::vector<std::string> exceptions;
  eff::Store store;  // state only
};
MonadSpec monad_spec_from_json(const json& j);

struct FunctorFile {
  std::map<Id, Id> object_map;
  std::map<Id, Id> arrow_map;
};
FunctorFile functor_from_json(const json& j);

struct SetFunctorFile {
  std::map<Id, std::vector<std::string>> carrier;
  std::map<Id, std::map<std::string, std::string>> action;
};
SetFunctorFile set_functor_from_json(const json& j);

}  // namespace fincat::io
