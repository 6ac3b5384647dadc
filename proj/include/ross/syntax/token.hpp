#pragma once

#include <string>
#include <vector>

namespace ross::syntax {

enum TokenMarker : unsigned {
    CommUnitBegin = 1u << 0,
    CommUnitEnd = 1u << 1,
    ParagraphBegin = 1u << 2,
    ParagraphEnd = 1u << 3,
    LineEnd = 1u << 4,  // internal: last token of a physical line
};

struct TokenNode {
    std::string value;
    std::string resolved;  // disambiguation fill; set only on pronoun tokens
    unsigned markers = 0;
    int index = 0;

    bool has(TokenMarker m) const { return (markers & m) != 0; }
};

// Words, expanded contractions, punctuation as standalone tokens. URLs and
// e-mail addresses survive as single tokens. Sentence-final . ! ? carry
// CommUnitEnd.
std::vector<TokenNode> tokenize(const std::string& text);

// Debug form: one token per entry, `value[/resolved]`.
std::string dump_tokens(const std::vector<TokenNode>& tokens);

bool looks_like_url(const std::string& chunk);
bool looks_like_email(const std::string& chunk);

}  // namespace ross::syntax
