#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ross/diag.hpp"
#include "ross/engine/features.hpp"
#include "ross/engine/spanning.hpp"
#include "ross/model/apply.hpp"
#include "ross/star/ontology.hpp"
#include "ross/syntax/token.hpp"

namespace ross::resolve {

enum class Mechanism {
    WithinUnit,
    AdjectiveCausal,
    VerbNestedBehavior,
    GenerateAndTest,
    GenderNumberFallback,
};

const char* to_string(Mechanism mechanism);

struct ResolutionResult {
    std::string referent_instance;  // unique id in the master model
    std::string referent_class;
    std::string antecedent_word;  // noun head, e.g. "trophy"
    int pronoun_token_index = -1;
    std::optional<std::pair<std::string, std::string>> causal_feature;  // (type, value)
    Mechanism mechanism = Mechanism::AdjectiveCausal;
    std::string matched_behavior;
    std::string matched_nested_behavior;
    std::string pronoun_word;
    std::string clause_verb;  // current clause's verb (question answering)
};

// Shared mutable state for one resolution attempt.
struct ResolveContext {
    engine::SpanningInfoStack* stack = nullptr;
    model::InstanceModel* model = nullptr;
    const star::Ontology* ontology = nullptr;
    std::vector<syntax::TokenNode>* tokens = nullptr;  // master list; may be null in unit tests
    std::vector<Diagnostic>* warnings = nullptr;
    std::ostream* trace = nullptr;
};

// One candidate that survived the match predicates.
struct CandidateMatch {
    std::string instance_id;
    Mechanism mechanism = Mechanism::AdjectiveCausal;
    std::optional<std::pair<std::string, std::string>> causal;
    std::string behavior;
    std::string nested_behavior;
    double probability = 1.0;
};

// Stages in order: within-unit for post-verb object pronouns, exploratory
// search over the spanning stack, gender/number fallback. NotFound reports
// that every stage failed, so the caller may run the cataphora lookahead.
Result<ResolutionResult> resolve_pronoun(ResolveContext& ctx,
                                         const engine::PronounFeatureSet& features,
                                         const snf::PredicateExpression* current_pe);

// Walks spanning infos newest to oldest; the first info that yields a match
// wins; the cursor is reset afterwards.
Result<CandidateMatch> exploratory_search_stack(ResolveContext& ctx,
                                                const engine::PronounFeatureSet& features);

// Tests every candidate wrapper of one info; collects all successes and picks
// the highest nested-behavior probability, ties broken by wrapper order
// (actors first, then document order).
Result<CandidateMatch> exploratory_search_one_info(ResolveContext& ctx,
                                                   const engine::SpanningInformation& info,
                                                   const engine::PronounFeatureSet& features);

// Adjective-keyed causal features: does the populated-object class the
// candidate filled carry a causal-feature value whose dictionary contains the
// adjective? The temporal-order indicator selects PriorStates vs PostStates.
std::optional<std::pair<std::string, std::string>> match_adjective_causal_feature(
    const star::Ontology& ontology, const engine::SpanningInformation& info,
    const std::string& candidate_id, const engine::PronounFeatureSet& features,
    std::string* matched_behavior, double* probability);

// Verb-keyed nested behaviors: some main-clause rule must nest a rule for the
// current verb whose identity symbol binds the role the candidate filled, and
// the pronoun's role must match the parameter slot carrying the symbol.
std::optional<std::pair<std::string, std::string>> match_verb_nested_behavior(
    const star::Ontology& ontology, const engine::SpanningInformation& info,
    const std::string& candidate_id, const engine::PronounFeatureSet& features,
    double* probability);

// Scans the clause's token span for the first token equal to the pronoun,
// stopping at the unit-end marker; fills its resolved word.
Result<int> write_resolution_to_tokens(std::vector<syntax::TokenNode>& tokens,
                                       const engine::PronounFeatureSet& features,
                                       const std::string& antecedent_word);

}  // namespace ross::resolve
