#pragma once

#include <string>

#include "ross/diag.hpp"
#include "ross/star/ast.hpp"

namespace ross::star {

// Parses one .star source text into a document. `//` comments are discarded
// by the lexer. The shipped corpus is irregular about terminator runs
// at definition boundaries; the parser repairs those and records one
// diagnostic per repair in the returned document.
Result<StarDocument> parse_star(const std::string& source,
                                const std::string& source_name = "");

// Canonical re-emission of a parsed document. parse_star(pretty_print(doc))
// is structurally equal to doc.
std::string pretty_print(const StarDocument& doc);

bool structurally_equal(const StarDocument& a, const StarDocument& b);

}  // namespace ross::star
