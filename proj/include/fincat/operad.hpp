#pragma once

#include "fincat/core.hpp"

// Finitely truncated plain operads: validation, the reverse operad, the
// induced monad on finite sets, the reversal isomorphism check, and the
// strong-regularity test for equations.

namespace fincat::opd {

/// Operations per arity up to max_arity, an identity in arity 1, and a
/// composition table defined exactly where the total arity stays in range.
struct Operad {
  int max_arity = 0;
  std::vector<std::vector<std::string>> ops;  // ops[n] for n <= max_arity
  std::string identity;
  /// key: operation plus its argument tuple; value: the composite
  std::map<std::pair<std::string, std::vector<std::string>>, std::string> comp;

  int arity_of(const std::string& op) const;
};

/// Violated instances within the truncation: identity laws and
/// associativity wherever all composites stay in range.
Report validate_operad(const Operad& c);

/// Same operations, arguments plugged in reverse order.
Operad reverse_operad(const Operad& c);

/// The terminal operad truncated at n: one operation per arity.
Operad terminal_operad(int n);

/// Carrier of the induced monad at a finite set, arity-truncated: one entry
/// "(op;x1,x2)" per operation and argument tuple.
std::vector<std::string> induced_carrier(const Operad& c, const std::vector<std::string>& x,
                                         int bound);
std::string induced_unit(const Operad& c, const std::string& x);
/// Flatten one level: the outer tuple's entries are themselves carrier
/// elements; defined when the composite arity stays within the truncation.
std::optional<std::string> induced_mult(const Operad& c, const std::string& nested);

/// The reversal map commutes with units and multiplications on all sets of
/// the given sizes (elements "0","1",...), within the truncation.
bool monad_iso_check(const Operad& c, const std::vector<int>& sizes);

/// Terms of an equation: operation nodes over variable leaves.
struct EquationTree {
  struct Term {
    bool is_var = false;
    std::string name;          // variable or operation name
    std::vector<Term> args;
  };
  Term left, right;
};

/// Both sides list the same variables, without repetition, in the same order.
bool strongly_regular(const EquationTree& eq);

/// An algebra presented by per-arity operations; checked against the operad
/// laws by translation through the induced monad.
struct OperadAlgebra {
  std::vector<std::string> carrier;
  /// action[(op, tuple)] = element
  std::map<std::pair<std::string, std::vector<std::string>>, std::string> action;
};

/// True when the per-arity actions respect the identity and every in-range
/// composition of the operad.
bool algebra_valid(const Operad& c, const OperadAlgebra& alg);

}  // namespace fincat::opd
