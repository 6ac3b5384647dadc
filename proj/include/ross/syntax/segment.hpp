#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ross/syntax/token.hpp"

namespace ross::syntax {

enum class CommUnitKind {
    Sentence,
    URL,
    EmailAddress,
    SingleWordOnLine,
    TwoWordPhraseOnLine,
    AuthorInfo,
};

struct SentenceInfo {
    std::string content;  // original token text, space-joined
    bool paragraph_begin = false;
    bool paragraph_end = false;
};

struct CommunicationUnit {
    CommUnitKind kind = CommUnitKind::Sentence;
    int first_token = 0;
    int last_token = 0;  // inclusive; for sentences this is the full stop
    std::optional<SentenceInfo> sentence;
};

// Splits on full stops; classifies stop-less standalone lines by pattern.
std::vector<CommunicationUnit> segment_communication_units(const std::vector<TokenNode>& tokens);

const char* to_string(CommUnitKind kind);

}  // namespace ross::syntax
