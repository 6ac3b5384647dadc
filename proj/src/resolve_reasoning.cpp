#include "ross/resolve/reasoning.hpp"

#include <algorithm>
#include <sstream>

namespace ross::resolve {

namespace {

using engine::PronounFeatureSet;
using engine::SpanningInformation;
using model::InstanceModel;
using model::ObjectInstance;
using model::RoleBindings;
using star::BehaviorClass;
using star::BehaviorClassReferenceDef;
using star::PopulatedObjectClassDef;
using star::RuleRole;

std::vector<std::string>& slot_for(RoleBindings& bindings, snf::SemanticRole role) {
    switch (role) {
        case snf::SemanticRole::Actor: return bindings.actors;
        case snf::SemanticRole::Actee: return bindings.actees;
        case snf::SemanticRole::Extra: return bindings.extras;
    }
    return bindings.extras;
}

std::vector<std::string>& slot_for(RoleBindings& bindings, RuleRole role) {
    switch (role) {
        case RuleRole::Actor: return bindings.actors;
        case RuleRole::Actee: return bindings.actees;
        case RuleRole::Extra: return bindings.extras;
    }
    return bindings.extras;
}

// Clones a master instance into the sandbox, keeping its unique id so
// identity checks can refer back to the master model. Sandbox id counters are
// bumped past the clone to keep fresh ids collision-free.
std::string clone_into(InstanceModel& sandbox, const star::Ontology& ontology,
                       const ObjectInstance& original, bool keep_attributes) {
    model::Context& context = sandbox.primary_context();
    if (context.timepoints.empty()) {
        context.parent_class = "BehavioralStructuralParentClass";
        context.timeline_name = context.parent_class + ".Timeline";
        model::StructuralParentInstance frame;
        frame.parent_class = context.parent_class;
        context.timepoints.emplace("T01", std::move(frame));
    }
    (void)ontology;
    ObjectInstance clone;
    clone.class_name = original.class_name;
    clone.content = original.content;
    clone.unique_id = original.unique_id;
    clone.multiple = original.multiple;
    if (keep_attributes) clone.attributes = original.attributes;
    size_t dash = original.unique_id.rfind('-');
    if (dash != std::string::npos) {
        int n = std::atoi(original.unique_id.c_str() + dash + 1);
        int& counter = sandbox.id_counters[original.class_name];
        counter = std::max(counter, n);
    }
    std::string id = clone.unique_id;
    context.timepoints[context.latest_timepoint()].components.push_back(std::move(clone));
    return id;
}

std::string materialize_fresh(InstanceModel& sandbox, const std::string& class_name,
                              bool multiple) {
    model::Context& context = sandbox.primary_context();
    if (context.timepoints.empty()) {
        context.parent_class = "BehavioralStructuralParentClass";
        context.timeline_name = context.parent_class + ".Timeline";
        model::StructuralParentInstance frame;
        frame.parent_class = context.parent_class;
        context.timepoints.emplace("T01", std::move(frame));
    }
    ObjectInstance instance;
    instance.class_name = class_name;
    instance.content = "";
    instance.unique_id = sandbox.fresh_id(class_name);
    instance.multiple = multiple;
    std::string id = instance.unique_id;
    context.timepoints[context.latest_timepoint()].components.push_back(std::move(instance));
    return id;
}

}  // namespace

MatchReport match_states(const star::Ontology& ontology,
                         const model::StructuralParentInstance& west_frame,
                         const model::StructuralParentInstance& east_frame,
                         const std::vector<model::AttributeWrite>& east_new_writes) {
    MatchReport report;
    // Group the new writes per East instance, in write order.
    std::vector<std::pair<std::string, std::vector<const model::AttributeWrite*>>> grouped;
    for (const auto& write : east_new_writes) {
        auto it = std::find_if(grouped.begin(), grouped.end(),
                               [&](const auto& g) { return g.first == write.instance_id; });
        if (it == grouped.end()) {
            grouped.push_back({write.instance_id, {&write}});
        } else {
            it->second.push_back(&write);
        }
    }
    if (grouped.empty()) return report;  // nothing generated: no match

    for (const auto& [east_id, writes] : grouped) {
        const ObjectInstance* east = east_frame.find(east_id);
        if (!east) return MatchReport{};
        const ObjectInstance* matched_west = nullptr;
        for (const auto& west : west_frame.components) {
            bool related = ontology.is_ancestor_or_equal(west.class_name, east->class_name) ||
                           ontology.is_ancestor_or_equal(east->class_name, west.class_name);
            if (!related) continue;
            bool carries_all = true;
            for (const auto* write : writes) {
                const model::AttributePair* attr = west.find_attribute(write->type);
                if (!attr || attr->value != write->value) {
                    carries_all = false;
                    break;
                }
            }
            if (!carries_all) continue;
            // Identity compatibility: a collection with an identity set only
            // stands for its members.
            if (west.multiple && !west.identity_members.empty()) {
                if (std::find(west.identity_members.begin(), west.identity_members.end(),
                              east->unique_id) == west.identity_members.end()) {
                    continue;
                }
            }
            matched_west = &west;
            break;
        }
        if (!matched_west) return MatchReport{};
        if (report.west_instance.empty()) {
            report.west_instance = matched_west->unique_id;
            report.east_instance = east->unique_id;
        }
    }
    report.matched = true;
    return report;
}

Result<SandboxContext> process_one_forward_rule(
    ResolveContext& ctx, const engine::PronounFeatureSet& features,
    const engine::SpanningInformation& info, const std::string& candidate_id,
    const star::BehaviorClass& rule, const star::BehaviorClassReferenceDef** nested) {
    const star::Ontology& ontology = *ctx.ontology;
    SandboxContext west;
    west.side = SandboxContext::Side::West;

    const ObjectInstance* candidate = ctx.model->find_instance(candidate_id);
    if (!candidate) {
        return make_error(ErrorCode::UnknownInstance, "candidate '" + candidate_id + "' missing");
    }

    RoleBindings bindings;
    // The candidate enters the role the pronoun occupies in the clause.
    slot_for(bindings, features.semantic_role)
        .push_back(clone_into(west.sandbox, ontology, *candidate, false));

    // Co-occurring clause mates fill their own roles.
    for (const auto& wrapper : features.co_occurring) {
        if (wrapper.instance_id == candidate_id) continue;
        const ObjectInstance* mate = ctx.model->find_instance(wrapper.instance_id);
        if (!mate) continue;
        slot_for(bindings, wrapper.semantic_role)
            .push_back(clone_into(west.sandbox, ontology, *mate, false));
    }

    // Any prior role the clause did not supply is materialized fresh so the
    // rule can be applied at all.
    for (const auto& item : rule.def.prior_states) {
        const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
        if (!pop) continue;
        RuleRole role;
        if (!star::role_of_label(pop->role_label, &role)) continue;
        std::vector<std::string>& slot = slot_for(bindings, role);
        if (slot.empty()) {
            slot.push_back(materialize_fresh(west.sandbox, pop->object_class, pop->multiple));
        }
    }

    auto applied = model::apply_behavior_class(west.sandbox, ontology, rule, bindings, "T01");
    if (!applied.ok()) return applied.error();
    for (const auto& [symbol, id] : applied.value().symbol_bindings) west.symbols[symbol] = id;

    // Consequent-only roles (the fresh "listener" collection) materialize at
    // the post timepoint with their val-bindings; an identity-symbol-carrying
    // collection stands for every discourse person instance except the
    // candidate.
    model::Context& context = west.sandbox.primary_context();
    std::string latest = context.latest_timepoint();
    for (const auto& item : rule.def.post_states) {
        const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
        if (!pop) continue;
        RuleRole role;
        if (!star::role_of_label(pop->role_label, &role)) continue;
        if (!slot_for(bindings, role).empty()) continue;
        std::string id = materialize_fresh(west.sandbox, pop->object_class, pop->multiple);
        ObjectInstance* instance = context.frame(latest)->find(id);
        for (const auto& binding : pop->attributes) {
            if (binding.mode == star::BindingMode::Val) {
                std::string declaring;
                ontology.find_attribute_type(pop->object_class, binding.attribute_type,
                                             &declaring);
                instance->upsert_attribute(binding.attribute_type, binding.value, declaring);
            } else if (binding.mode == star::BindingMode::Var) {
                instance->identity_symbol = binding.value;
                west.symbols[binding.value] = id;
            }
        }
        if (pop->multiple && !instance->identity_symbol.empty()) {
            for (const auto& wrapper : info.wrappers) {
                if (wrapper.instance_id == candidate_id) continue;
                const ObjectInstance* person = ctx.model->find_instance(wrapper.instance_id);
                if (person && ontology.is_ancestor_or_equal("PersonObjectFrameClass",
                                                            person->class_name)) {
                    instance->identity_members.push_back(person->unique_id);
                }
            }
        }
    }

    *nested = star::nested_reference_any(rule);
    return west;
}

Result<bool> forward_inference_with_nested(ResolveContext& ctx, SandboxContext& west,
                                           const star::BehaviorClassReferenceDef& ref) {
    const star::Ontology& ontology = *ctx.ontology;
    const BehaviorClass* nested_rule = ontology.find_behavior(ref.behavior);
    if (!nested_rule) {
        return make_error(ErrorCode::UnresolvedRef, "nested behavior '" + ref.behavior + "'");
    }
    RoleBindings bindings;
    auto bind = [&](const std::optional<star::BehaviorParameter>& param,
                    RuleRole role) -> std::optional<Error> {
        if (!param) return std::nullopt;
        if (!param->identity.empty()) {
            auto it = west.symbols.find(param->identity);
            if (it == west.symbols.end()) {
                return make_error(ErrorCode::UnboundParameter,
                                  "parameter symbol '" + param->identity + "' is unbound");
            }
            slot_for(bindings, role).push_back(it->second);
        } else {
            slot_for(bindings, role)
                .push_back(materialize_fresh(west.sandbox, param->class_ref, false));
        }
        return std::nullopt;
    };
    if (auto e = bind(ref.actor, RuleRole::Actor)) return *e;
    if (auto e = bind(ref.actee, RuleRole::Actee)) return *e;
    if (auto e = bind(ref.extra, RuleRole::Extra)) return *e;

    std::string latest = west.sandbox.primary_context().latest_timepoint();
    auto applied =
        model::apply_behavior_class(west.sandbox, ontology, *nested_rule, bindings, latest);
    if (!applied.ok()) return applied.error();
    return true;
}

Result<MatchReport> east_build_and_match(ResolveContext& ctx,
                                         const engine::SpanningInformation& info,
                                         const std::string& candidate_id,
                                         const SandboxContext& west) {
    (void)candidate_id;
    const star::Ontology& ontology = *ctx.ontology;
    const model::Context& west_context = west.sandbox.contexts.front();
    const model::StructuralParentInstance* west_frame =
        west_context.frame(west_context.latest_timepoint());

    for (const auto& per_verb : info.behaviors_per_verb) {
        for (const auto& name : per_verb.behaviors) {
            const BehaviorClass* main_rule = ontology.find_behavior(name);
            if (!main_rule || !info.applied) continue;
            const BehaviorClassReferenceDef* ref = star::nested_reference(*main_rule);
            if (!ref) continue;
            const BehaviorClass* nested_rule = ontology.find_behavior(ref->behavior);
            if (!nested_rule) continue;

            SandboxContext east;
            east.side = SandboxContext::Side::East;
            for (const auto& wrapper : info.wrappers) {
                const ObjectInstance* instance = ctx.model->find_instance(wrapper.instance_id);
                if (instance) clone_into(east.sandbox, ontology, *instance, true);
            }

            RoleBindings bindings;
            bool bindable = true;
            auto bind = [&](const std::optional<star::BehaviorParameter>& param,
                            RuleRole role) {
                if (!param || !bindable) return;
                if (!param->identity.empty()) {
                    // The symbol names a role in the main rule; the instance
                    // bound to that role during application is the referent.
                    RuleRole main_role;
                    if (!star::identity_role(*main_rule, param->identity, &main_role)) {
                        bindable = false;
                        return;
                    }
                    bool found = false;
                    for (const auto& [r, id] : info.applied->role_bindings) {
                        if (r == main_role) {
                            slot_for(bindings, role).push_back(id);
                            found = true;
                            break;
                        }
                    }
                    if (!found) bindable = false;
                } else {
                    slot_for(bindings, role)
                        .push_back(materialize_fresh(east.sandbox, param->class_ref, false));
                }
            };
            bind(ref->actor, RuleRole::Actor);
            bind(ref->actee, RuleRole::Actee);
            bind(ref->extra, RuleRole::Extra);
            if (!bindable) continue;

            std::string latest = east.sandbox.primary_context().latest_timepoint();
            auto applied = model::apply_behavior_class(east.sandbox, ontology, *nested_rule,
                                                       bindings, latest);
            if (!applied.ok()) continue;

            const model::Context& east_context = east.sandbox.contexts.front();
            const model::StructuralParentInstance* east_frame =
                east_context.frame(east_context.latest_timepoint());
            if (ctx.trace) *ctx.trace << dump_sandbox(east);
            MatchReport report =
                match_states(ontology, *west_frame, *east_frame, applied.value().post_writes);
            if (ctx.trace) {
                *ctx.trace << "MatchNewObjectInstanceStatesLatestPriorAgainstEarliestPost: "
                           << (report.matched ? "matched" : "no match") << "\n";
            }
            if (report.matched) {
                report.main_behavior = name;
                report.nested_behavior = ref->behavior;
                return report;
            }
        }
    }
    return make_error(ErrorCode::NotFound, "no main-clause rule produced a matching East side");
}

Result<MatchReport> generate_and_test(ResolveContext& ctx,
                                      const engine::PronounFeatureSet& features,
                                      const engine::SpanningInformation& info,
                                      const std::string& candidate_id) {
    const star::Ontology& ontology = *ctx.ontology;
    const ObjectInstance* candidate = ctx.model->find_instance(candidate_id);
    if (!candidate) {
        return make_error(ErrorCode::UnknownInstance, "candidate '" + candidate_id + "' missing");
    }
    if (ctx.trace) {
        *ctx.trace << "GenerateAndTestForCausativeSituation: candidate=" << candidate->content
                   << "\n";
    }

    // The candidate's class occupies the pronoun's role; co-occurring clause
    // mates supply the rest.
    std::vector<std::string> actors, actees, extras;
    auto classes_for = [&](snf::SemanticRole role) -> std::vector<std::string>& {
        switch (role) {
            case snf::SemanticRole::Actor: return actors;
            case snf::SemanticRole::Actee: return actees;
            case snf::SemanticRole::Extra: return extras;
        }
        return extras;
    };
    classes_for(features.semantic_role).push_back(candidate->class_name);
    for (const auto& wrapper : features.co_occurring) {
        const ObjectInstance* mate = ctx.model->find_instance(wrapper.instance_id);
        if (mate) classes_for(wrapper.semantic_role).push_back(mate->class_name);
    }

    auto forward_rules = ontology.search_behavior_classes(features.search_key_verb, false, actors,
                                                          actees, extras,
                                                          star::SearchDirection::Forward);
    if (forward_rules.empty()) {
        return make_error(ErrorCode::NotFound,
                          "no forward rule for '" + features.search_key_verb + "' fits class " +
                              candidate->class_name);
    }

    for (const BehaviorClass* rule : forward_rules) {
        if (!rule->def.causal_rule) continue;
        const BehaviorClassReferenceDef* nested = nullptr;
        auto west = process_one_forward_rule(ctx, features, info, candidate_id, *rule, &nested);
        if (!west.ok()) return west.error();
        if (!nested) continue;  // degenerate rule: West built, nothing to chain
        auto inferred = forward_inference_with_nested(ctx, west.value(), *nested);
        if (!inferred.ok()) return inferred.error();
        if (ctx.trace) *ctx.trace << dump_sandbox(west.value());
        auto report = east_build_and_match(ctx, info, candidate_id, west.value());
        if (report.ok() && report.value().matched) {
            MatchReport matched = report.take();
            matched.forward_behavior = rule->def.name;
            return matched;
        }
        if (!report.ok() && report.code() != ErrorCode::NotFound) return report.error();
    }
    MatchReport report;
    report.matched = false;
    return report;
}

std::string dump_sandbox(const SandboxContext& sandbox) {
    std::ostringstream out;
    out << (sandbox.side == SandboxContext::Side::West ? "WEST" : "EAST")
        << ": StructuralParent contains:\n";
    const model::Context& context = sandbox.sandbox.contexts.front();
    const auto* frame = context.frame(context.latest_timepoint());
    if (!frame) return out.str();
    for (const auto& instance : frame->components) {
        out << "// Instance: " << instance.class_name;
        if (!instance.identity_symbol.empty()) out << " (" << instance.identity_symbol << ")";
        for (const auto& attr : instance.attributes) {
            out << " -> Attr:" << attr.type << " = \"" << attr.value << "\"";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ross::resolve
