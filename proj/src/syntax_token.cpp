#include "ross/syntax/token.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>

namespace ross::syntax {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

// doesn't -> does not, it's -> it is, ...
const std::map<std::string, std::pair<std::string, std::string>>& contractions() {
    static const std::map<std::string, std::pair<std::string, std::string>> table = {
        {"doesn't", {"does", "not"}}, {"didn't", {"did", "not"}},
        {"couldn't", {"could", "not"}}, {"wasn't", {"was", "not"}},
        {"isn't", {"is", "not"}},     {"don't", {"do", "not"}},
        {"can't", {"can", "not"}},    {"it's", {"it", "is"}},
    };
    return table;
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '-';
}

void emit_word(std::vector<TokenNode>& out, const std::string& word) {
    auto it = contractions().find(lower(word));
    if (it != contractions().end()) {
        std::string first = it->second.first;
        if (std::isupper(static_cast<unsigned char>(word[0]))) {
            first[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(first[0])));
        }
        out.push_back({first, "", 0, 0});
        out.push_back({it->second.second, "", 0, 0});
    } else {
        out.push_back({word, "", 0, 0});
    }
}

void emit_chunk(std::vector<TokenNode>& out, const std::string& chunk) {
    if (looks_like_url(chunk) || looks_like_email(chunk)) {
        out.push_back({chunk, "", 0, 0});
        return;
    }
    size_t i = 0;
    while (i < chunk.size()) {
        if (is_word_char(chunk[i])) {
            size_t j = i;
            while (j < chunk.size() && is_word_char(chunk[j])) ++j;
            emit_word(out, chunk.substr(i, j - i));
            i = j;
        } else {
            out.push_back({std::string(1, chunk[i]), "", 0, 0});
            ++i;
        }
    }
}

}  // namespace

bool looks_like_url(const std::string& chunk) {
    static const std::regex pattern(R"(^(https?://|www\.)\S+$)", std::regex::icase);
    return std::regex_match(chunk, pattern);
}

bool looks_like_email(const std::string& chunk) {
    static const std::regex pattern(R"(^[A-Za-z0-9._%+-]+(@|\(at\))[A-Za-z0-9.-]+\.[A-Za-z]{2,}$)");
    return std::regex_match(chunk, pattern);
}

std::vector<TokenNode> tokenize(const std::string& text) {
    std::vector<TokenNode> out;
    std::string chunk;
    bool line_had_tokens = false;
    bool pending_paragraph = true;  // document start behaves like a paragraph break

    auto flush_chunk = [&] {
        if (chunk.empty()) return;
        size_t before = out.size();
        emit_chunk(out, chunk);
        if (out.size() > before) line_had_tokens = true;
        chunk.clear();
    };

    auto end_line = [&](bool blank_line_follows) {
        flush_chunk();
        if (!out.empty() && line_had_tokens) {
            out.back().markers |= LineEnd;
            if (blank_line_follows) out.back().markers |= ParagraphEnd;
        }
        line_had_tokens = false;
    };

    size_t pos = 0;
    while (pos <= text.size()) {
        char c = pos < text.size() ? text[pos] : '\n';
        if (c == '\n' || pos == text.size()) {
            // Peek whether the following line is blank.
            size_t look = pos + 1;
            bool blank_next = true;
            while (look < text.size() && text[look] != '\n') {
                if (!std::isspace(static_cast<unsigned char>(text[look]))) {
                    blank_next = false;
                    break;
                }
                ++look;
            }
            bool had = line_had_tokens || !chunk.empty();
            end_line(blank_next && look < text.size());
            if (!had) pending_paragraph = true;
            if (pos == text.size()) break;
            ++pos;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush_chunk();
            ++pos;
            continue;
        }
        size_t before = out.size();
        chunk += c;
        ++pos;
        // Flush at chunk boundaries lazily; mark paragraph starts.
        if (pending_paragraph && out.size() == before) {
            // handled after flush below
        }
    }
    flush_chunk();

    // Indices, paragraph begins and communication-unit markers.
    bool unit_begin = true;
    bool paragraph_begin = true;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i].index = static_cast<int>(i);
        if (unit_begin) {
            out[i].markers |= CommUnitBegin;
            unit_begin = false;
        }
        if (paragraph_begin) {
            out[i].markers |= ParagraphBegin;
            paragraph_begin = false;
        }
        if (out[i].value == "." || out[i].value == "!" || out[i].value == "?") {
            out[i].markers |= CommUnitEnd;
            unit_begin = true;
        }
        if (out[i].has(ParagraphEnd)) paragraph_begin = true;
    }
    return out;
}

std::string dump_tokens(const std::vector<TokenNode>& tokens) {
    std::ostringstream out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out << " ";
        out << tokens[i].value;
        if (!tokens[i].resolved.empty()) out << "/" << tokens[i].resolved;
    }
    return out.str();
}

}  // namespace ross::syntax
