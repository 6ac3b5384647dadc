#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ross/diag.hpp"
#include "ross/snf/pe.hpp"
#include "ross/syntax/segment.hpp"
#include "ross/syntax/token.hpp"

namespace ross::syntax {

struct TreePP;

struct TreeNounPhrase {
    std::vector<std::string> specifiers;
    std::vector<std::string> qualifiers;
    std::string head;
    snf::HeadKind head_kind = snf::HeadKind::CommonNoun;
    std::vector<TreePP> postnominals;
    int head_token = -1;
    bool plural = false;
};

struct TreePP {
    std::string preposition;
    TreeNounPhrase noun_phrase;
};

// One clause, mirroring the phrase-structure printout: subject phrase plus a
// predicate phrase with adverbs, aux/main verbs, adjective phrase,
// prepositional complements and objects.
struct TreeMeaningUnit {
    std::string introductory_word;  // because / after / when / before
    bool leading = false;
    TreeNounPhrase subject;
    std::vector<std::string> pre_verb_adverbs;  // "not"
    std::string aux_verb;
    std::string copula;     // is/was/... when the predicate is built on "to be"
    std::string main_verb;  // empty for copula+adjective predicates
    bool passive = false;
    std::vector<std::string> post_verb_adverbs;  // "too", "so"
    std::string post_verb_adjective;
    std::optional<TreeNounPhrase> direct_object;
    std::optional<TreeNounPhrase> second_object;  // ditransitive: "a permit"
    std::vector<TreePP> complements;
    std::optional<TreePP> by_phrase;  // passive agent
    std::string wh_word;              // "what" / "who" for questions
    snf::DiscourseContext discourse = snf::DiscourseContext::None;
    int first_token = -1;
};

struct SyntaxTree {
    std::vector<TreeMeaningUnit> units;  // original syntactic order
};

// Deterministic parse of the restricted schema grammar; out-of-grammar input
// is refused with UnsupportedConstruction carrying the token index.
Result<SyntaxTree> parse_sentence(const CommunicationUnit& unit,
                                  const std::vector<TokenNode>& tokens);

std::string print_tree(const SyntaxTree& tree);

// Word classes of the closed front-end lexicon.
bool is_pronoun_word(const std::string& word);
bool is_known_verb_form(const std::string& word);

}  // namespace ross::syntax
