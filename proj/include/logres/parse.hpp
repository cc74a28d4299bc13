#pragma once

#include <string>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres {

// Grammar: integers, p/q literals, identifiers, + - * ^ and parentheses.
// Juxtaposition is rejected. Errors carry the 1-based column.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace logres
