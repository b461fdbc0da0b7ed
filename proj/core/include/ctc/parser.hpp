#pragma once

#include <string_view>

#include "ctc/process.hpp"

namespace ctc {

/// Parse a single term. Constants are not resolved.
/// Throws SourceError.
Process parse_term(std::string_view text);

/// Parse `Name = term;` clauses into a validated environment.
/// Throws SourceError, DuplicateDefinition, UnboundConstant, UnguardedRecursion.
DefEnv parse_program(std::string_view text);

/// Same as parse_program but skips closedness and guardedness checks.
DefEnv parse_program_unchecked(std::string_view text);

}  // namespace ctc
