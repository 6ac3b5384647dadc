#pragma once

#include <string>

#include "ross/diag.hpp"
#include "ross/snf/pe.hpp"

namespace ross::snf {

// Indented block notation: `Field (value)` leaves, `Block {` ... `}`
// interiors, one construct per line. parse_snf(serialize_snf(x)) is
// structurally equal to x.
std::string serialize_snf(const PredicateExpression& pe);

Result<PredicateExpression> parse_snf(const std::string& text);

}  // namespace ross::snf
