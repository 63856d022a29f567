#pragma once

#include <functional>
#include <optional>

#include "fincat/core.hpp"

// Effect monads on finite sets: state over a global store, partiality,
// nondeterminism, exceptions, bounded interactive I/O, plus the store-term
// calculus with its seven laws as rewriting, the free-group word calculus,
// and the arity-restricted Kleisli category of a finitary monad.

namespace fincat::eff {

/// A monad on finite sets presented operationally. Elements are strings;
/// `obj` lists the carrier of T(a) for a given finite set a, `arr` pushes a
/// function forward, `unit`/`mult` are the structure maps at a given set.
struct FinMonad {
  std::string name;
  std::function<std::vector<std::string>(const std::vector<std::string>&)> obj;
  std::function<std::map<std::string, std::string>(
      const std::vector<std::string>&, const std::vector<std::string>&,
      const std::map<std::string, std::string>&)>
      arr;
  std::function<std::string(const std::vector<std::string>&, const std::string&)> unit;
  std::function<std::string(const std::vector<std::string>&, const std::string&)> mult;
};

/// Checks both monad diagrams pointwise on the given set; failures name the
/// violating element.
Report check_monad_laws(const FinMonad& t, const std::vector<std::string>& a);

struct Store {
  std::vector<std::string> locations;
  std::vector<std::string> values;

  /// All states in lexicographic order; a state is a total map L -> V,
  /// encoded "l1=v;l2=v".
  std::vector<std::string> states() const;
  std::size_t state_count() const;
};

std::map<std::string, std::string> decode_state(const std::string& s);
std::string encode_state(const std::map<std::string, std::string>& m);

/// A state transformer S -> S x [n], tabulated per state. Results encode as
/// "state-code -> (state-code, index)".
struct StateFn {
  std::map<std::string, std::pair<std::string, int>> table;

  bool operator==(const StateFn& o) const { return table == o.table; }
  bool operator<(const StateFn& o) const { return table < o.table; }
  std::string encode() const;
};

/// The state monad at a finite set: carrier, unit and multiplication. For a
/// set of size n the carrier has (|S| * n)^|S| elements.
FinMonad state_monad(const Store& store);

/// h : [n] -> T a, decurried to S x [n] -> S x [p] -> S x [a] with the
/// injective enumeration of the image of h as second leg.
struct StateFactorization {
  int p = 0;
  std::map<std::pair<std::string, int>, std::pair<std::string, int>> e;  // S x [n] -> S x [p]
  std::vector<int> f;  // injective [p] -> [a], as image indices
};

StateFactorization state_factorize(const Store& store, int n, int a,
                                   const std::vector<StateFn>& h);

/// Recompose (S x f) . e and compare with h.
bool state_factorization_exact(const Store& store, int n, const std::vector<StateFn>& h,
                               const StateFactorization& fact);

struct StoreTerm {
  enum Kind { Var, Lookup, Update } kind = Var;
  int var_index = 0;
  std::string loc;
  std::string val;                 // Update only
  std::vector<StoreTerm> children;  // Lookup: one per value, in value order; Update: one

  std::string encode() const;
  bool operator==(const StoreTerm& o) const { return encode() == o.encode(); }
};

StoreTerm make_var(int i);
StoreTerm make_lookup(const std::string& loc, std::vector<StoreTerm> branches);
StoreTerm make_update(const std::string& loc, const std::string& val, StoreTerm inner);

Report validate_term(const StoreTerm& t, const Store& store, int n);

/// Compositional semantics: a variable returns its index, lookup branches on
/// the stored value, update writes before running the body.
StateFn denote_store_term(const StoreTerm& t, const Store& store, int n);

/// Oriented rewriting with the interaction laws as reductions and the
/// commutation laws as sorting by location; lookups move outward. The step
/// budget guards termination; exceeding it reports rather than loops.
struct NormalizeResult {
  StoreTerm term;
  bool budget_exceeded = false;
  int steps = 0;
};

NormalizeResult normalize_store_term(const StoreTerm& t, const Store& store, int n,
                                     int step_budget = 100000);

/// The semantic normal form: read every location in order, then write every
/// location in order, then return a variable. Distinct transformers receive
/// distinct terms.
StoreTerm canonical_store_term(const StateFn& f, const Store& store, int n);

/// partiality / nondeterminism / exceptions by name; exceptions take the set
/// E through `params` and use the plain sum carrier. A copower-style carrier
/// E.(A+E) admits no evident unit for empty or non-pointed E, so only the
/// sum form is provided.
FinMonad classic_monad(const std::string& name, const std::vector<std::string>& params = {});

struct IOTree {
  enum Kind { Ret, Out, In } kind = Ret;
  std::string value;             // Ret: leaf payload; Out: the emitted output
  std::vector<IOTree> children;  // Out: one; In: one per input symbol

  int depth() const;
  std::string encode() const;
};

/// Grafting: replace every leaf by the tree the payload denotes.
IOTree io_graft(const IOTree& outer, const std::function<IOTree(const std::string&)>& at_leaf);

/// All trees of depth <= depth over the given inputs/outputs/leaf alphabet.
std::vector<IOTree> io_trees(const std::vector<std::string>& inputs,
                             const std::vector<std::string>& outputs,
                             const std::vector<std::string>& leaves, int depth);

struct Letter {
  std::string gen;
  bool inverse = false;
  bool operator==(const Letter& o) const { return gen == o.gen && inverse == o.inverse; }
};

struct Word {
  std::vector<Letter> letters;
  bool operator==(const Word& o) const { return letters == o.letters; }
  std::string encode() const;
};

/// Cancel adjacent inverse pairs until none remain.
Word reduce_word(const Word& w);

/// One level of bracketing: a word whose letters are inner words.
struct BracketedWord {
  std::vector<std::pair<Word, bool>> factors;  // (inner word, inverted?)
};

/// Strip the outer brackets, distributing inversion, and reduce.
Word free_group_mu(const BracketedWord& w);

/// The arity-restricted Kleisli category: objects "0".."bound", arrows all
/// functions [m] -> T[n] with Kleisli composition.
FinCategory theta_finitary(const FinMonad& t, int bound);

}  // namespace fincat::eff
