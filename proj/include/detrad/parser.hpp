#pragma once

#include <functional>
#include <string>

#include "detrad/polynomial.hpp"

namespace detrad {

// Maps a variable name occurring in polynomial text to a Variable, throwing
// ParseError (or RelationError) for names it does not accept.
using VarResolver = std::function<Variable(const std::string&)>;

// Resolver that only accepts names already declared in the pool.
VarResolver declared_vars(const VarPool& pool);

// Resolver that interns unknown names on first use (test convenience).
VarResolver interning_vars(VarPool& pool);

// Parses the canonical polynomial syntax: identifiers for variables, '^' for
// powers, '*' optional between factors, integer and a/b rational coefficients,
// parentheses, '+'/'-' with an optional leading sign.
Polynomial parse_polynomial(const std::string& text, CoeffField field,
                            const VarResolver& resolve);

}  // namespace detrad
