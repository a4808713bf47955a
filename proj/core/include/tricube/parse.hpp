#pragma once

#include <string>

#include "tricube/mpoly.hpp"

namespace tricube {

/// Parses an infix polynomial expression over the context's variables.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := uint | var | '(' expr ')' | '-' base
///
/// Juxtaposition is not multiplication: "2x1" is a syntax error. Whitespace
/// is ignored. Integer literals are reduced mod p; exponents must be plain
/// nonnegative integer literals. Any syntax error or undeclared variable
/// throws parse_error carrying a 1-based line and column.
MultiPoly parse_poly(const std::string& src, const CtxPtr& ctx);

}  // namespace tricube
