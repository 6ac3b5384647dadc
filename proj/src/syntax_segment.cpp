#include "ross/syntax/segment.hpp"

#include <sstream>

namespace ross::syntax {

namespace {

CommunicationUnit make_sentence(const std::vector<TokenNode>& tokens, int first, int last) {
    CommunicationUnit unit;
    unit.kind = CommUnitKind::Sentence;
    unit.first_token = first;
    unit.last_token = last;
    SentenceInfo info;
    std::ostringstream content;
    for (int i = first; i <= last; ++i) {
        if (i > first) content << " ";
        content << tokens[i].value;
    }
    info.content = content.str();
    info.paragraph_begin = tokens[first].has(ParagraphBegin);
    info.paragraph_end = tokens[last].has(ParagraphEnd);
    unit.sentence = std::move(info);
    return unit;
}

}  // namespace

std::vector<CommunicationUnit> segment_communication_units(const std::vector<TokenNode>& tokens) {
    std::vector<CommunicationUnit> units;
    size_t i = 0;
    while (i < tokens.size()) {
        // A standalone line with no full stop is a non-sentence unit.
        size_t line_end = i;
        bool has_stop = false;
        while (line_end < tokens.size()) {
            if (tokens[line_end].has(CommUnitEnd)) has_stop = true;
            if (tokens[line_end].has(LineEnd)) break;
            ++line_end;
        }
        bool line_complete = line_end < tokens.size();
        if (line_complete && !has_stop) {
            size_t count = line_end - i + 1;
            CommunicationUnit unit;
            unit.first_token = static_cast<int>(i);
            unit.last_token = static_cast<int>(line_end);
            if (count == 1 && looks_like_url(tokens[i].value)) {
                unit.kind = CommUnitKind::URL;
            } else if (count == 1 && looks_like_email(tokens[i].value)) {
                unit.kind = CommUnitKind::EmailAddress;
            } else if (count == 1) {
                unit.kind = CommUnitKind::SingleWordOnLine;
            } else if (count == 2) {
                unit.kind = CommUnitKind::TwoWordPhraseOnLine;
            } else if (tokens[i].value == "By" || tokens[i].value == "by") {
                unit.kind = CommUnitKind::AuthorInfo;
            } else {
                units.push_back(make_sentence(tokens, static_cast<int>(i),
                                              static_cast<int>(line_end)));
                i = line_end + 1;
                continue;
            }
            units.push_back(unit);
            i = line_end + 1;
            continue;
        }
        // Sentence units split at full stops; they may span lines.
        size_t start = i;
        while (i < tokens.size() && !tokens[i].has(CommUnitEnd)) ++i;
        if (i < tokens.size()) {
            units.push_back(make_sentence(tokens, static_cast<int>(start), static_cast<int>(i)));
            ++i;
        } else if (start < tokens.size()) {
            units.push_back(make_sentence(tokens, static_cast<int>(start),
                                          static_cast<int>(tokens.size() - 1)));
        }
    }
    return units;
}

const char* to_string(CommUnitKind kind) {
    switch (kind) {
        case CommUnitKind::Sentence: return "Sentence";
        case CommUnitKind::URL: return "URL";
        case CommUnitKind::EmailAddress: return "EmailAddress";
        case CommUnitKind::SingleWordOnLine: return "SingleWordOnLine";
        case CommUnitKind::TwoWordPhraseOnLine: return "TwoWordPhraseOnLine";
        case CommUnitKind::AuthorInfo: return "AuthorInfo";
    }
    return "?";
}

}  // namespace ross::syntax
