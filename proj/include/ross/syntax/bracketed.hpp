#pragma once

#include "ross/diag.hpp"
#include "ross/snf/pe.hpp"

namespace ross::syntax {

// Adapter for externally supplied bracketed constituency trees (one
// sentence). Accepts the label set {ROOT, S, NP, VP, PP, SBAR, ADJP, DT, NN,
// NNS, JJ, VB*, MD, RB, PRP, IN, .}; anything else is UnsupportedLabel. The
// mapping contract is the same as tree_to_snf.
Result<snf::PredicateExpression> bracketed_tree_to_snf(const std::string& text);

}  // namespace ross::syntax
