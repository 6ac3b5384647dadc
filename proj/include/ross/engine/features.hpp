#pragma once

#include <string>
#include <vector>

#include "ross/engine/spanning.hpp"
#include "ross/snf/pe.hpp"

namespace ross::engine {

enum class PronounGender { Male, Female, Nonspecific };
enum class PronounCardinality { Singular, Plural, Nonspecific };
enum class PronounActiveOrPassive { Active, Passive, Nonspecific };
enum class TemporalOrderIndicator { Following, Preceding, Undetermined };
enum class HypotheticalUsage {
    ExplanationOfCause,      // "because"
    ExplanationOfEffect,     // "causing ..."
    ExplanationOfObjective,  // "in order to ..."
    None,
};

// Everything knowable about an unresolved pronoun and the clause holding it.
struct PronounFeatureSet {
    std::string pronoun_word;
    PronounGender gender = PronounGender::Nonspecific;
    PronounCardinality cardinality = PronounCardinality::Nonspecific;
    PronounActiveOrPassive active_or_passive = PronounActiveOrPassive::Nonspecific;
    TemporalOrderIndicator temporal_order = TemporalOrderIndicator::Undetermined;
    HypotheticalUsage hypothetical = HypotheticalUsage::None;
    snf::DiscourseContext discourse = snf::DiscourseContext::None;
    snf::SyntacticRole syntactic_role = snf::SyntacticRole::Subject;
    snf::SemanticRole semantic_role = snf::SemanticRole::Actor;
    std::vector<ObjectInstanceSemanticWrapper> co_occurring;  // resolved clause mates
    bool negation_of_search_key = false;
    snf::PredicateRole predicate_role = snf::PredicateRole::VerbTakingEntityArgument;
    // Exactly one of the two search keys is set: the adjective for
    // attributive clauses, the CURRENT clause's verb otherwise. (The main
    // clause's verb is recovered from the spanning info's per-verb behavior
    // lists.)
    std::string search_key_adjective;
    std::string search_key_verb;
    int pe_first_token = -1;  // token-list scan start for write-back
};

// Gender/cardinality/voice from the pronoun lexeme; hypothetical usage and
// temporal order from the clause introducer ("because" explains a cause,
// "after" marks the clause as temporally preceding).
PronounFeatureSet build_pronoun_feature_set(
    const snf::PredicateExpression& pe, const snf::EntityArgument& pronoun_argument,
    const std::string& introducer,
    const std::vector<ObjectInstanceSemanticWrapper>& co_occurring);

}  // namespace ross::engine
