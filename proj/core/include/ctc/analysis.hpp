#pragma once

#include <set>

#include "ctc/process.hpp"

namespace ctc {

/// The visible actions a term may ever perform. Constants get the least
/// sort consistent with their definitions. Throws UnboundConstant.
std::set<Action> sort(const Process& p, const DefEnv& env);

/// Every occurrence of constant `x` in `e` sits under some (multi-)prefix.
/// Other constants are unfolded, each at most once per path.
bool weakly_guarded(Symbol x, const Process& e, const DefEnv& env);

/// Every occurrence of `x` is under a visible prefix and every subterm that
/// contains `x` is a prefix, multi-prefix or sum.
bool guarded_and_sequential(Symbol x, const Process& e, const DefEnv& env);

/// Does `x` occur in `e`, looking through definitions of other constants?
bool occurs(Symbol x, const Process& e, const DefEnv& env);

/// Replace every `Const x` in `e` by `by` (no unfolding of other constants).
Process substitute(const Process& e, Symbol x, const Process& by);

/// Constants mentioned by `p` directly (not through definitions).
std::set<Symbol> constants_of(const Process& p);

/// Closedness and weak guardedness of every definition.
/// Throws UnboundConstant or UnguardedRecursion.
void validate(const DefEnv& env);

/// Closedness of a single term against `env`. Throws UnboundConstant.
void validate_term(const Process& p, const DefEnv& env);

}  // namespace ctc
