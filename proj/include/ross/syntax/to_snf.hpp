#pragma once

#include "ross/diag.hpp"
#include "ross/snf/pe.hpp"
#include "ross/syntax/parser.hpp"

namespace ross::syntax {

// Maps a parsed tree onto semantic normal form: subject -> Actor, direct
// object -> Actee, ditransitive second object and prepositional complements
// -> Extra with preposition-derived sub-roles, passives swap Actor/Actee,
// subordinate clauses become nested modification expressions.
Result<snf::PredicateExpression> tree_to_snf(const SyntaxTree& tree);

}  // namespace ross::syntax
