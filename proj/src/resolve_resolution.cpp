#include "ross/resolve/resolution.hpp"

#include <algorithm>
#include <cctype>

#include "ross/resolve/reasoning.hpp"

namespace ross::resolve {

namespace {

using engine::ObjectInstanceSemanticWrapper;
using engine::PronounFeatureSet;
using engine::SpanningInformation;

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool section_for_temporal(const PronounFeatureSet& features) {
    // PriorStates unless the clause follows the main event.
    return features.temporal_order != engine::TemporalOrderIndicator::Following;
}

// Candidates in test order: actors first, then document order.
std::vector<const ObjectInstanceSemanticWrapper*> candidate_order(const SpanningInformation& info) {
    std::vector<const ObjectInstanceSemanticWrapper*> out;
    for (const auto& wrapper : info.wrappers) {
        if (wrapper.semantic_role == snf::SemanticRole::Actor) out.push_back(&wrapper);
    }
    for (const auto& wrapper : info.wrappers) {
        if (wrapper.semantic_role != snf::SemanticRole::Actor) out.push_back(&wrapper);
    }
    return out;
}

}  // namespace

const char* to_string(Mechanism mechanism) {
    switch (mechanism) {
        case Mechanism::WithinUnit: return "WithinUnit";
        case Mechanism::AdjectiveCausal: return "AdjectiveCausal";
        case Mechanism::VerbNestedBehavior: return "VerbNestedBehavior";
        case Mechanism::GenerateAndTest: return "GenerateAndTest";
        case Mechanism::GenderNumberFallback: return "GenderNumberFallback";
    }
    return "?";
}

std::optional<std::pair<std::string, std::string>> match_adjective_causal_feature(
    const star::Ontology& ontology, const engine::SpanningInformation& info,
    const std::string& candidate_id, const engine::PronounFeatureSet& features,
    std::string* matched_behavior, double* probability) {
    if (features.search_key_adjective.empty() || !info.applied) return std::nullopt;
    star::RuleRole filled_role;
    if (!info.applied->bound_role(candidate_id, &filled_role)) return std::nullopt;

    std::string adjective = lower(features.search_key_adjective);
    bool use_prior = section_for_temporal(features);
    for (const auto& per_verb : info.behaviors_per_verb) {
        for (const auto& name : per_verb.behaviors) {
            const star::BehaviorClass* behavior = ontology.find_behavior(name);
            if (!behavior) continue;
            const auto& section =
                use_prior ? behavior->def.prior_states : behavior->def.post_states;
            for (const auto& item : section) {
                const auto* pop = std::get_if<star::PopulatedObjectClassDef>(&item);
                if (!pop) continue;
                star::RuleRole pop_role;
                if (!star::role_of_label(pop->role_label, &pop_role) || pop_role != filled_role) {
                    continue;
                }
                for (const auto& binding : pop->attributes) {
                    if (binding.mode != star::BindingMode::Val) continue;
                    const star::AttributeTypeDef* attr =
                        ontology.find_attribute_type(pop->object_class, binding.attribute_type);
                    if (!attr || !attr->optional_causal_feature) continue;
                    for (const auto& value : attr->values) {
                        if (value.name != binding.value) continue;
                        if (std::find(value.dictionary.begin(), value.dictionary.end(),
                                      adjective) != value.dictionary.end()) {
                            if (matched_behavior) *matched_behavior = name;
                            if (probability) {
                                *probability = behavior->def.probability.value_or(1.0);
                            }
                            return std::make_pair(binding.attribute_type, binding.value);
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> match_verb_nested_behavior(
    const star::Ontology& ontology, const engine::SpanningInformation& info,
    const std::string& candidate_id, const engine::PronounFeatureSet& features,
    double* probability) {
    if (features.search_key_verb.empty() || !info.applied) return std::nullopt;
    star::RuleRole filled_role;
    if (!info.applied->bound_role(candidate_id, &filled_role)) return std::nullopt;

    // Behavior classes the current clause's verb can denote.
    std::vector<std::string> current_rules;
    for (const star::BehaviorClass* behavior :
         ontology.behaviors_for_verb(features.search_key_verb)) {
        if (behavior->def.negation == features.negation_of_search_key) {
            current_rules.push_back(behavior->def.name);
        }
    }
    if (current_rules.empty()) return std::nullopt;

    for (const auto& per_verb : info.behaviors_per_verb) {
        for (const auto& name : per_verb.behaviors) {
            const star::BehaviorClass* main_rule = ontology.find_behavior(name);
            if (!main_rule) continue;
            const star::BehaviorClassReferenceDef* ref = star::nested_reference(*main_rule);
            if (!ref) continue;
            if (std::find(current_rules.begin(), current_rules.end(), ref->behavior) ==
                current_rules.end()) {
                continue;
            }
            // Which parameter slot carries the identity symbol determines the
            // role the pronoun must occupy in the current clause.
            std::string symbol;
            snf::SemanticRole pronoun_slot = snf::SemanticRole::Actor;
            if (ref->actor && !ref->actor->identity.empty()) {
                symbol = ref->actor->identity;
                pronoun_slot = snf::SemanticRole::Actor;
            } else if (ref->actee && !ref->actee->identity.empty()) {
                symbol = ref->actee->identity;
                pronoun_slot = snf::SemanticRole::Actee;
            } else if (ref->extra && !ref->extra->identity.empty()) {
                symbol = ref->extra->identity;
                pronoun_slot = snf::SemanticRole::Extra;
            } else {
                continue;
            }
            if (features.semantic_role != pronoun_slot) continue;
            star::RuleRole identity_slot;
            if (!star::identity_role(*main_rule, symbol, &identity_slot)) continue;
            if (identity_slot != filled_role) continue;
            if (probability) *probability = ref->probability.value_or(1.0);
            return std::make_pair(name, ref->behavior);
        }
    }
    return std::nullopt;
}

Result<CandidateMatch> exploratory_search_one_info(ResolveContext& ctx,
                                                   const engine::SpanningInformation& info,
                                                   const engine::PronounFeatureSet& features) {
    std::vector<CandidateMatch> successes;
    for (const ObjectInstanceSemanticWrapper* wrapper : candidate_order(info)) {
        const std::string& id = wrapper->instance_id;
        if (ctx.trace) {
            *ctx.trace << "TestOneCandidateObjectInstance: " << id << "\n";
        }
        if (!features.search_key_adjective.empty()) {
            CandidateMatch match;
            match.instance_id = id;
            match.mechanism = Mechanism::AdjectiveCausal;
            if (auto causal = match_adjective_causal_feature(*ctx.ontology, info, id, features,
                                                             &match.behavior,
                                                             &match.probability)) {
                match.causal = causal;
                successes.push_back(std::move(match));
            }
            continue;
        }
        if (!features.search_key_verb.empty()) {
            CandidateMatch match;
            match.instance_id = id;
            match.mechanism = Mechanism::VerbNestedBehavior;
            if (auto pair = match_verb_nested_behavior(*ctx.ontology, info, id, features,
                                                       &match.probability)) {
                match.behavior = pair->first;
                match.nested_behavior = pair->second;
                successes.push_back(std::move(match));
                continue;
            }
            // Embedded reasoning handles the indirect association.
            if (features.hypothetical == engine::HypotheticalUsage::ExplanationOfCause) {
                auto report = generate_and_test(ctx, features, info, id);
                if (!report.ok() && report.code() != ErrorCode::NotFound) {
                    return report.error();
                }
                if (report.ok() && report.value().matched) {
                    CandidateMatch sandbox_match;
                    sandbox_match.instance_id = id;
                    sandbox_match.mechanism = Mechanism::GenerateAndTest;
                    sandbox_match.behavior = report.value().main_behavior;
                    sandbox_match.nested_behavior = report.value().forward_behavior;
                    successes.push_back(std::move(sandbox_match));
                }
            }
        }
    }
    if (successes.empty()) {
        return make_error(ErrorCode::NotFound, "no candidate in spanning info matched");
    }
    // Highest nested-behavior probability wins; stable order keeps ties on
    // the earlier candidate (actors first, then document order).
    size_t best = 0;
    for (size_t i = 1; i < successes.size(); ++i) {
        if (successes[i].probability > successes[best].probability) best = i;
    }
    return successes[best];
}

Result<CandidateMatch> exploratory_search_stack(ResolveContext& ctx,
                                                const engine::PronounFeatureSet& features) {
    ctx.stack->reset_current_to_top();
    const engine::SpanningInformation* info = nullptr;
    Result<CandidateMatch> found = make_error(ErrorCode::NotFound, "spanning info stack exhausted");
    while (ctx.stack->current(&info)) {
        if (ctx.trace) {
            *ctx.trace << "ExploratorySearchUsingOneSpanningInfo\n";
        }
        auto match = exploratory_search_one_info(ctx, *info, features);
        if (match.ok()) {
            found = match;
            break;
        }
        if (match.code() != ErrorCode::NotFound) {
            found = match;
            break;
        }
    }
    ctx.stack->reset_current_to_top();
    return found;
}

Result<int> write_resolution_to_tokens(std::vector<syntax::TokenNode>& tokens,
                                       const engine::PronounFeatureSet& features,
                                       const std::string& antecedent_word) {
    if (antecedent_word.empty()) {
        return make_error(ErrorCode::NotFoundRequiredItem, "empty antecedent word");
    }
    if (features.pronoun_word.empty()) {
        return make_error(ErrorCode::NotFoundRequiredItem, "empty pronoun word");
    }
    int start = features.pe_first_token >= 0 ? features.pe_first_token : 0;
    for (size_t i = static_cast<size_t>(start); i < tokens.size(); ++i) {
        if (lower(tokens[i].value) == lower(features.pronoun_word)) {
            tokens[i].resolved = antecedent_word;
            return static_cast<int>(i);
        }
        if (tokens[i].has(syntax::CommUnitEnd)) break;
    }
    return make_error(ErrorCode::NotFoundRequiredItem,
                      "pronoun '" + features.pronoun_word + "' not in the clause token span");
}

namespace {

// Within-unit pattern: a post-verb object pronoun resolves to the head of the
// subject's of-phrase ("The owners of the house sold it." -> house).
Result<ResolutionResult> within_unit(ResolveContext& ctx, const PronounFeatureSet& features,
                                     const snf::PredicateExpression& pe) {
    if (features.syntactic_role != snf::SyntacticRole::DirectObject) {
        return make_error(ErrorCode::NotFound, "pronoun is not a post-verb object");
    }
    for (const auto& arg : pe.entity_arguments) {
        if (arg.syntactic_role != snf::SyntacticRole::Subject || arg.designators.empty()) continue;
        const auto& designator = arg.designators.front();
        if (!designator.noun_phrase) continue;
        for (const auto& post : designator.noun_phrase->postnominals) {
            if (post.text.rfind("of ", 0) != 0) continue;
            // Last word of the retained designator text is the head.
            size_t space = post.text.rfind(' ');
            std::string head = post.text.substr(space + 1);
            auto classes = ctx.ontology->lookup_noun(lower(head));
            if (classes.empty()) continue;
            // Reuse an existing instance for the head word, else instantiate.
            std::string id;
            for (auto& context : ctx.model->contexts) {
                for (auto& [tp, frame] : context.timepoints) {
                    for (auto& instance : frame.components) {
                        if (lower(instance.content) == lower(head)) id = instance.unique_id;
                    }
                }
            }
            if (id.empty()) {
                auto created = model::instantiate_object(*ctx.model, *ctx.ontology,
                                                         classes.front()->name, head, false);
                if (!created.ok()) return created.error();
                id = created.take();
            }
            ResolutionResult result;
            result.referent_instance = id;
            result.referent_class = classes.front()->name;
            result.antecedent_word = head;
            result.mechanism = Mechanism::WithinUnit;
            return result;
        }
    }
    return make_error(ErrorCode::NotFound, "no within-unit antecedent pattern");
}

Result<ResolutionResult> gender_number_fallback(ResolveContext& ctx,
                                                const PronounFeatureSet& features) {
    struct Ranked {
        std::string id;
        size_t info_index;
        bool actor;
        std::string content;
        std::string class_name;
    };
    std::vector<Ranked> candidates;
    for (size_t n = 0; n < ctx.stack->size(); ++n) {
        const auto& info = ctx.stack->from_top(n);
        for (const auto& wrapper : info.wrappers) {
            const model::ObjectInstance* instance = ctx.model->find_instance(wrapper.instance_id);
            if (!instance) continue;
            // Cardinality filter.
            if (features.cardinality == engine::PronounCardinality::Plural && !instance->multiple) {
                continue;
            }
            if (features.cardinality == engine::PronounCardinality::Singular &&
                instance->multiple) {
                continue;
            }
            // "it" never picks a person; he/she respect declared gender.
            bool is_person = ctx.ontology->is_ancestor_or_equal("PersonObjectFrameClass",
                                                                instance->class_name);
            std::string pronoun = lower(features.pronoun_word);
            if (pronoun == "it" && is_person) continue;
            std::string gender = ctx.ontology->effective_gender(instance->class_name);
            if (features.gender == engine::PronounGender::Male && gender == "Female") continue;
            if (features.gender == engine::PronounGender::Female && gender == "Male") continue;
            candidates.push_back({wrapper.instance_id, n,
                                  wrapper.semantic_role == snf::SemanticRole::Actor,
                                  instance->content, instance->class_name});
        }
    }
    if (candidates.empty()) {
        return make_error(ErrorCode::NotFound, "gender/number fallback found no candidate");
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Ranked& a, const Ranked& b) {
        if (a.info_index != b.info_index) return a.info_index < b.info_index;
        return a.actor && !b.actor;
    });
    if (candidates.size() > 1 && candidates[0].info_index == candidates[1].info_index &&
        candidates[0].actor == candidates[1].actor) {
        if (ctx.warnings) {
            ctx.warnings->push_back(
                {Diagnostic::Kind::Warning,
                 "ambiguous gender/number fallback for '" + features.pronoun_word +
                     "'; choosing '" + candidates[0].content + "'",
                 {}});
        }
    }
    ResolutionResult result;
    result.referent_instance = candidates[0].id;
    result.referent_class = candidates[0].class_name;
    result.antecedent_word = candidates[0].content;
    result.mechanism = Mechanism::GenderNumberFallback;
    return result;
}

}  // namespace

Result<ResolutionResult> resolve_pronoun(ResolveContext& ctx,
                                         const engine::PronounFeatureSet& features,
                                         const snf::PredicateExpression* current_pe) {
    if (ctx.trace) {
        *ctx.trace << "PronounResolutionGeneralMethod: '" << features.pronoun_word << "'\n";
    }
    ResolutionResult result;

    // Stage 0: within-unit resolution for post-verb object pronouns.
    if (current_pe) {
        auto within = within_unit(ctx, features, *current_pe);
        if (within.ok()) {
            result = within.take();
        } else if (within.code() != ErrorCode::NotFound) {
            return within.error();
        }
    }

    // Stage 1: exploratory search over the spanning info stack.
    if (result.referent_instance.empty()) {
        if (ctx.trace) *ctx.trace << "ExploratorySearchUsingSpanningInfoStack\n";
        auto match = exploratory_search_stack(ctx, features);
        if (match.ok()) {
            const CandidateMatch& m = match.value();
            const model::ObjectInstance* instance = ctx.model->find_instance(m.instance_id);
            if (!instance) {
                return make_error(ErrorCode::UnknownInstance,
                                  "matched instance vanished: " + m.instance_id);
            }
            result.referent_instance = m.instance_id;
            result.referent_class = instance->class_name;
            result.antecedent_word = instance->content;
            result.causal_feature = m.causal;
            result.mechanism = m.mechanism;
            result.matched_behavior = m.behavior;
            result.matched_nested_behavior = m.nested_behavior;
        } else if (match.code() != ErrorCode::NotFound) {
            return match.error();
        }
    }

    // Stage 2: gender/number matching over the stack wrappers.
    if (result.referent_instance.empty()) {
        auto fallback = gender_number_fallback(ctx, features);
        if (fallback.ok()) {
            result = fallback.take();
        } else if (fallback.code() != ErrorCode::NotFound) {
            return fallback.error();
        }
    }

    if (result.referent_instance.empty()) {
        // Distinguishable code: the caller may retry with a lookahead
        // spanning info (possibly-cataphoric pronoun).
        return make_error(ErrorCode::NotFound,
                          "pronoun '" + features.pronoun_word + "' not resolved");
    }

    result.pronoun_word = features.pronoun_word;
    result.clause_verb = features.search_key_verb;

    // Follow-up tasks: the causal feature lands on the referent in the master
    // model, the token list gets the disambiguation fill.
    if (result.causal_feature) {
        auto ok = model::set_attribute(*ctx.model, *ctx.ontology, result.referent_instance,
                                       result.causal_feature->first,
                                       result.causal_feature->second);
        if (!ok.ok()) return ok.error();
    }
    if (ctx.tokens) {
        auto index = write_resolution_to_tokens(*ctx.tokens, features, result.antecedent_word);
        if (!index.ok()) return index.error();
        result.pronoun_token_index = index.value();
    }
    if (ctx.trace) {
        *ctx.trace << "Resolved '" << features.pronoun_word << "' -> '" << result.antecedent_word
                   << "' via " << to_string(result.mechanism) << "\n";
    }
    return result;
}

}  // namespace ross::resolve
