#include "ross/engine/driver.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ross::engine {

namespace {

using model::AppliedRecord;
using model::RoleBindings;
using resolve::ResolutionResult;
using snf::PredicateExpression;

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool argument_has_pronoun(const snf::EntityArgument& arg) {
    for (const auto& designator : arg.designators) {
        const snf::NounPhrase* np = nullptr;
        if (designator.noun_phrase) np = &*designator.noun_phrase;
        if (designator.prep_complement) np = &designator.prep_complement->noun_phrase;
        if (np && !np->head_words.empty() && np->head_words.front().kind == snf::HeadKind::Pronoun) {
            return true;
        }
    }
    return false;
}

// Per-expression processing state; memoized so the cataphora lookahead and
// the normal pass never instantiate or apply twice.
struct PeState {
    bool entities_done = false;
    bool behaviors_done = false;
    std::map<std::pair<int, int>, std::string> arg_instances;
    std::vector<ObjectInstanceSemanticWrapper> wrappers;
    std::vector<BehaviorClassesPerVerb> verb_behaviors;
    std::optional<AppliedRecord> applied;
};

class EngineRun {
public:
    EngineRun(const std::vector<ParsedUnit>& units, std::vector<syntax::TokenNode> tokens,
              const star::Ontology& ontology, std::ostream* trace)
        : units_(units), ontology_(ontology), trace_(trace) {
        output_.tokens = std::move(tokens);
    }

    Result<EngineOutput> run() {
        for (const auto& parsed : units_) {
            if (parsed.unit.kind != syntax::CommUnitKind::Sentence) {
                output_.skipped_units.push_back(parsed.unit.kind);
                if (trace_) {
                    *trace_ << "EngineDriver: skipping non-sentence unit ("
                            << syntax::to_string(parsed.unit.kind) << ")\n";
                }
                continue;
            }
            for (const auto& root : parsed.roots) {
                for (const PredicateExpression* pe : snf::flatten_pe_order(root)) {
                    linear_.push_back(pe);
                }
            }
        }
        for (size_t i = 0; i < linear_.size(); ++i) {
            if (auto err = process(i)) return *err;
        }
        return std::move(output_);
    }

private:
    std::optional<Error> process(size_t i) {
        const PredicateExpression* pe = linear_[i];
        if (pe->mood == snf::GrammaticalMood::Imperative) return std::nullopt;
        if (pe->mood == snf::GrammaticalMood::Interrogative) {
            // Questions route to the question-answering module.
            output_.warnings.push_back(
                {Diagnostic::Kind::Warning, "interrogative unit left to question answering", {}});
            return std::nullopt;
        }
        if (trace_) *trace_ << "ProcessPredicateUnitIndicative\n";
        PeState& state = memo_[pe];
        process_entities(*pe, state);
        process_attributive(*pe, state);
        if (auto err = process_pronouns(*pe, state, i)) return *err;
        process_behaviors(*pe, state);

        SpanningInformation info = make_info(*pe, state);
        output_.spanning_log.push_back(info);
        stack_.push(std::move(info));
        if (trace_) *trace_ << "Push spanning info (stack size " << stack_.size() << ")\n";
        return std::nullopt;
    }

    void process_entities(const PredicateExpression& pe, PeState& state) {
        if (state.entities_done) return;
        state.entities_done = true;
        for (size_t a = 0; a < pe.entity_arguments.size(); ++a) {
            const auto& arg = pe.entity_arguments[a];
            if (argument_has_pronoun(arg)) continue;
            for (size_t d = 0; d < arg.designators.size(); ++d) {
                const auto& designator = arg.designators[d];
                const snf::NounPhrase* np = nullptr;
                if (designator.noun_phrase) np = &*designator.noun_phrase;
                if (designator.prep_complement) np = &designator.prep_complement->noun_phrase;
                if (!np || np->head_words.empty()) continue;
                const snf::HeadWord& head = np->head_words.front();
                if (head.kind == snf::HeadKind::Pronoun) continue;

                std::string class_name;
                bool multiple = false;
                if (head.kind == snf::HeadKind::ProperNoun) {
                    // Unknown proper nouns resolve to the person class.
                    class_name = "PersonObjectFrameClass";
                } else {
                    std::string prev = np->qualifiers.empty() ? "" : np->qualifiers.back();
                    auto classes = ontology_.lookup_noun(lower(head.word), lower(prev));
                    if (classes.empty()) {
                        output_.warnings.push_back({Diagnostic::Kind::Warning,
                                                    "no ontology class for noun '" + head.word + "'",
                                                    {}});
                        continue;
                    }
                    class_name = classes.front()->name;
                    multiple = ontology_.is_plural_form(*classes.front(), lower(head.word));
                }
                auto id = model::instantiate_object(output_.model, ontology_, class_name,
                                                    head.word, multiple);
                if (!id.ok()) continue;
                state.arg_instances[{static_cast<int>(a), static_cast<int>(d)}] = id.value();
                state.wrappers.push_back({id.value(), arg.semantic_role, arg.extra_sub_role,
                                          arg.syntactic_role, arg.predicate_ordinal});
                if (trace_) {
                    *trace_ << "EntityResolutionRoutine: '" << head.word << "' -> " << class_name
                            << " (" << id.value() << ")\n";
                }
                set_context_discourse(pe);
            }
        }
    }

    // "The X is too A" with a non-pronoun subject adds the causal attribute
    // directly.
    void process_attributive(const PredicateExpression& pe, PeState& state) {
        if (pe.specifiers.empty() ||
            pe.specifiers.front().role != snf::PredicateRole::ToBeAttributive) {
            return;
        }
        if (pe.attributive_arguments.empty() ||
            pe.attributive_arguments.front().designators.empty()) {
            return;
        }
        const std::string adjective =
            lower(pe.attributive_arguments.front().designators.front().adjective);
        for (const auto& wrapper : state.wrappers) {
            if (wrapper.syntactic_role != snf::SyntacticRole::Subject) continue;
            const model::ObjectInstance* instance =
                output_.model.find_instance(wrapper.instance_id);
            if (!instance) continue;
            if (auto causal = causal_value_for(instance->class_name, adjective)) {
                (void)model::set_attribute(output_.model, ontology_, wrapper.instance_id,
                                           causal->first, causal->second);
            }
        }
    }

    std::optional<std::pair<std::string, std::string>> causal_value_for(
        const std::string& class_name, const std::string& adjective) const {
        std::vector<std::string> chain{class_name};
        const auto& ancestors = ontology_.ancestors(class_name);
        chain.insert(chain.end(), ancestors.begin(), ancestors.end());
        for (const auto& name : chain) {
            const star::ObjectFrameClass* cls = ontology_.find_class(name);
            if (!cls) continue;
            for (const auto& attr : cls->attribute_types) {
                if (!attr.optional_causal_feature) continue;
                for (const auto& value : attr.values) {
                    if (std::find(value.dictionary.begin(), value.dictionary.end(), adjective) !=
                        value.dictionary.end()) {
                        return std::make_pair(attr.name, value.name);
                    }
                }
            }
        }
        return std::nullopt;
    }

    void process_behaviors(const PredicateExpression& pe, PeState& state) {
        if (state.behaviors_done) return;
        state.behaviors_done = true;
        if (pe.specifiers.empty()) return;
        const auto& spec = pe.specifiers.front();
        if (spec.role != snf::PredicateRole::VerbTakingEntityArgument) return;
        bool negation = false;
        for (const auto& mod : pe.modifications) {
            if (mod.position == snf::SyntacticPosition::PreVerb && mod.adverbial_phrase == "not") {
                negation = true;
            }
        }

        // Role lists; an In/Into complement of an objectless verb acts as the
        // passive participant ("fit in the suitcase").
        std::vector<std::string> actor_ids, actee_ids, extra_ids;
        for (const auto& wrapper : state.wrappers) {
            switch (wrapper.semantic_role) {
                case snf::SemanticRole::Actor: actor_ids.push_back(wrapper.instance_id); break;
                case snf::SemanticRole::Actee: actee_ids.push_back(wrapper.instance_id); break;
                case snf::SemanticRole::Extra: extra_ids.push_back(wrapper.instance_id); break;
            }
        }
        if (actee_ids.empty()) {
            std::vector<std::string> remaining;
            for (const auto& wrapper : state.wrappers) {
                if (wrapper.semantic_role != snf::SemanticRole::Extra) continue;
                if (wrapper.extra_sub_role == snf::ExtraSubRole::In ||
                    wrapper.extra_sub_role == snf::ExtraSubRole::Into) {
                    actee_ids.push_back(wrapper.instance_id);
                } else {
                    remaining.push_back(wrapper.instance_id);
                }
            }
            extra_ids = std::move(remaining);
        }
        auto classes_of = [&](const std::vector<std::string>& ids) {
            std::vector<std::string> out;
            for (const auto& id : ids) {
                if (const auto* instance = output_.model.find_instance(id)) {
                    out.push_back(instance->class_name);
                }
            }
            return out;
        };
        auto rules = ontology_.search_behavior_classes(lower(spec.main_verb), negation,
                                                       classes_of(actor_ids),
                                                       classes_of(actee_ids),
                                                       classes_of(extra_ids));
        if (trace_) {
            *trace_ << "SearchObjectFrameClassBehaviorClasses: '" << spec.main_verb << "' -> "
                    << rules.size() << " rule(s)\n";
        }
        if (rules.empty()) return;  // attribute-only clause; nothing to apply

        BehaviorClassesPerVerb per_verb;
        per_verb.verb = lower(spec.main_verb);
        per_verb.negation = negation;
        for (const auto* rule : rules) per_verb.behaviors.push_back(rule->def.name);
        state.verb_behaviors.push_back(std::move(per_verb));

        RoleBindings bindings{actor_ids, actee_ids, extra_ids};
        std::string at = output_.model.primary_context().latest_timepoint();
        if (at.empty()) return;
        auto applied = model::apply_behavior_class(output_.model, ontology_, *rules.front(),
                                                   bindings, at);
        if (applied.ok()) {
            state.applied = applied.take();
            if (trace_) {
                *trace_ << "ProcessBehaviorClassForSubjectActive: applied "
                        << rules.front()->def.name << " at " << at << "\n";
            }
        } else {
            output_.warnings.push_back({Diagnostic::Kind::Warning,
                                        "behavior application failed: " +
                                            applied.error().to_string(),
                                        {}});
        }
    }

    std::optional<Error> process_pronouns(const PredicateExpression& pe, PeState& state,
                                          size_t index) {
        for (const auto& arg : pe.entity_arguments) {
            if (!argument_has_pronoun(arg)) continue;
            PronounFeatureSet features =
                build_pronoun_feature_set(pe, arg, pe.introductory_word, state.wrappers);
            resolve::ResolveContext ctx;
            ctx.stack = &stack_;
            ctx.model = &output_.model;
            ctx.ontology = &ontology_;
            ctx.tokens = &output_.tokens;
            ctx.warnings = &output_.warnings;
            ctx.trace = trace_;

            auto result = resolve::resolve_pronoun(ctx, features, &pe);
            if (!result.ok() && result.code() == ErrorCode::NotFound &&
                index + 1 < linear_.size()) {
                // Lookahead: possibly a cataphoric pronoun. Build a temporary
                // spanning info from the next expression's non-pronoun
                // arguments and retry against it.
                if (trace_) *trace_ << "Lookahead: possibly a cataphoric pronoun\n";
                const PredicateExpression* next = linear_[index + 1];
                PeState& next_state = memo_[next];
                process_entities(*next, next_state);
                process_behaviors(*next, next_state);
                SpanningInfoStack lookahead;
                lookahead.push(make_info(*next, next_state));
                resolve::ResolveContext retry = ctx;
                retry.stack = &lookahead;
                result = resolve::resolve_pronoun(retry, features, &pe);
            }
            if (result.ok()) {
                state.wrappers.push_back({result.value().referent_instance, arg.semantic_role,
                                          arg.extra_sub_role, arg.syntactic_role,
                                          arg.predicate_ordinal});
                output_.resolutions.push_back(result.take());
            } else if (result.code() == ErrorCode::NotFound) {
                output_.warnings.push_back({Diagnostic::Kind::Warning,
                                            "pronoun '" + features.pronoun_word +
                                                "' left unresolved",
                                            {}});
            } else {
                return result.error();
            }
        }
        return std::nullopt;
    }

    SpanningInformation make_info(const PredicateExpression& pe, const PeState& state) {
        SpanningInformation info;
        if (!pe.specifiers.empty()) info.discourse = pe.specifiers.front().discourse;
        if (!output_.model.contexts.empty()) {
            info.context_id = output_.model.contexts.front().unique_id;
            info.structural_parent_class = output_.model.contexts.front().parent_class;
        }
        info.wrappers = state.wrappers;
        info.behaviors_per_verb = state.verb_behaviors;
        info.applied = state.applied;
        return info;
    }

    void set_context_discourse(const PredicateExpression& pe) {
        if (output_.model.contexts.empty() || pe.specifiers.empty()) return;
        model::Context& context = output_.model.contexts.front();
        if (context.discourse.empty()) {
            context.discourse = discourse_label(pe.specifiers.front().discourse);
        }
    }

    const std::vector<ParsedUnit>& units_;
    const star::Ontology& ontology_;
    std::ostream* trace_;
    EngineOutput output_;
    SpanningInfoStack stack_;
    std::vector<const PredicateExpression*> linear_;
    std::map<const PredicateExpression*, PeState> memo_;
};

}  // namespace

Result<EngineOutput> engine_driver(const std::vector<ParsedUnit>& units,
                                   std::vector<syntax::TokenNode> tokens,
                                   const star::Ontology& ontology, std::ostream* trace) {
    EngineRun run(units, std::move(tokens), ontology, trace);
    return run.run();
}

std::string discourse_label(snf::DiscourseContext discourse) {
    std::string name = snf::to_string(discourse);
    for (const char* prefix : {"Declarative", "Interrogative"}) {
        std::string p(prefix);
        if (name.rfind(p, 0) == 0 && name.size() > p.size()) {
            return p + "-" + name.substr(p.size());
        }
    }
    return name;
}

}  // namespace ross::engine
