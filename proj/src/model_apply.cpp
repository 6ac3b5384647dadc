#include "ross/model/apply.hpp"

#include <algorithm>

namespace ross::model {

namespace {

using star::BindingMode;
using star::PopulatedObjectClassDef;
using star::RuleRole;

const std::vector<std::string>& bindings_for(const RoleBindings& bindings, RuleRole role) {
    switch (role) {
        case RuleRole::Actor: return bindings.actors;
        case RuleRole::Actee: return bindings.actees;
        case RuleRole::Extra: return bindings.extras;
    }
    return bindings.extras;
}

std::string default_parent_class(const star::Ontology& ontology, const std::string& class_name) {
    const star::ObjectFrameClass* cls = ontology.find_class(class_name);
    if (cls) {
        if (!cls->structural_parent_bases.empty()) return cls->structural_parent_bases.front();
        for (const auto& anc : ontology.ancestors(class_name)) {
            const star::ObjectFrameClass* a = ontology.find_class(anc);
            if (a && !a->structural_parent_bases.empty()) {
                return a->structural_parent_bases.front();
            }
        }
    }
    return "EverydayObjectStructuralParentClass";
}

std::string timeline_name_for(const star::Ontology& ontology, const std::string& parent_class) {
    const star::ObjectFrameClass* cls = ontology.find_class(parent_class);
    if (cls && !cls->dimension_systems.empty()) {
        return parent_class + "." + cls->dimension_systems.front();
    }
    return parent_class + ".Timeline";
}

}  // namespace

bool AppliedRecord::bound_role(const std::string& instance_id, star::RuleRole* role) const {
    for (const auto& [r, id] : role_bindings) {
        if (id == instance_id) {
            *role = r;
            return true;
        }
    }
    return false;
}

Result<std::string> instantiate_object(InstanceModel& model, const star::Ontology& ontology,
                                       const std::string& class_name, const std::string& word,
                                       bool multiple) {
    Context& context = model.primary_context();
    if (context.timepoints.empty()) {
        if (context.parent_class.empty()) {
            context.parent_class = default_parent_class(ontology, class_name);
            context.timeline_name = timeline_name_for(ontology, context.parent_class);
        }
        StructuralParentInstance frame;
        frame.parent_class = context.parent_class;
        context.timepoints.emplace("T01", std::move(frame));
    }
    ObjectInstance instance;
    instance.class_name = class_name;
    instance.content = word;
    instance.unique_id = model.fresh_id(class_name);
    instance.multiple = multiple;
    std::string id = instance.unique_id;
    context.timepoints[context.latest_timepoint()].components.push_back(std::move(instance));
    return id;
}

Result<AppliedRecord> apply_behavior_class(InstanceModel& model, const star::Ontology& ontology,
                                           const star::BehaviorClass& behavior,
                                           const RoleBindings& bindings, const std::string& at) {
    Context& context = model.primary_context();
    if (context.timepoints.empty()) {
        return make_error(ErrorCode::MissingTimepoint, "context has no timepoints");
    }
    std::string latest = context.latest_timepoint();
    if (at != latest) {
        return make_error(ErrorCode::MissingTimepoint,
                          "application timepoint " + at + " is not the latest (" + latest + ")");
    }
    StructuralParentInstance* frame = context.frame(at);

    AppliedRecord record;
    record.behavior = behavior.def.name;
    record.at = at;

    // Role-class compatibility first; nothing is written on failure.
    for (const auto& item : behavior.def.prior_states) {
        const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
        if (!pop) continue;
        RuleRole role;
        if (!star::role_of_label(pop->role_label, &role)) continue;
        for (const auto& id : bindings_for(bindings, role)) {
            const ObjectInstance* instance = frame->find(id);
            if (!instance) {
                return make_error(ErrorCode::UnknownInstance,
                                  "instance '" + id + "' missing at " + at);
            }
            if (!ontology.is_ancestor_or_equal(pop->object_class, instance->class_name)) {
                return make_error(ErrorCode::RoleMismatch,
                                  "instance '" + id + "' of class " + instance->class_name +
                                      " cannot fill " + pop->role_label + " (" +
                                      pop->object_class + ") in " + behavior.def.name);
            }
        }
    }

    auto write_bindings = [&](const std::vector<star::StateItem>& items,
                              StructuralParentInstance* target, bool negate, bool prior,
                              std::vector<AttributeWrite>* writes) -> std::optional<Error> {
        for (const auto& item : items) {
            const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
            if (!pop) continue;
            RuleRole role;
            if (!star::role_of_label(pop->role_label, &role)) continue;
            for (const auto& id : bindings_for(bindings, role)) {
                ObjectInstance* instance = target->find(id);
                if (!instance) continue;  // extras may be absent from the clones
                for (const auto& binding : pop->attributes) {
                    std::string declaring;
                    const star::AttributeTypeDef* attr = ontology.find_attribute_type(
                        instance->class_name, binding.attribute_type, &declaring);
                    if (!attr) {
                        return make_error(ErrorCode::UnresolvedRef,
                                          "attribute type '" + binding.attribute_type +
                                              "' not found on " + instance->class_name);
                    }
                    switch (binding.mode) {
                        case BindingMode::Val: {
                            // Antecedent causal features (TooBig, TooWeak) are
                            // match keys, not assertions: the text has not
                            // stated them yet. Pronoun resolution adds the
                            // winning one afterwards.
                            if (prior && attr->optional_causal_feature) break;
                            std::string value = binding.value;
                            if (negate && attr->is_state && !attr->values.empty()) {
                                value = attr->values.front().name;  // the "Not..." value
                            }
                            instance->upsert_attribute(binding.attribute_type, value, declaring);
                            writes->push_back({id, binding.attribute_type, value});
                            break;
                        }
                        case BindingMode::Var:
                            record.symbol_bindings[binding.value] = id;
                            instance->identity_symbol = binding.value;
                            break;
                        case BindingMode::Expr:
                            // Positional/temporal slots resolve against the
                            // timeline ordinals; they are not stored on the
                            // instance and never exported.
                            break;
                    }
                }
            }
        }
        return std::nullopt;
    };

    // (1) PriorStates writes at `at`.
    if (auto e = write_bindings(behavior.def.prior_states, frame, false, true,
                                &record.prior_writes)) {
        return *e;
    }
    for (const auto& item : behavior.def.prior_states) {
        const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
        if (!pop) continue;
        RuleRole role;
        if (star::role_of_label(pop->role_label, &role)) {
            for (const auto& id : bindings_for(bindings, role)) {
                record.role_bindings.push_back({role, id});
            }
        }
    }

    // (2) A fresh timepoint with identity-linked clones.
    std::string next = next_timepoint(at);
    if (!context.frame(next)) {
        StructuralParentInstance clones = *context.frame(at);
        context.timepoints.emplace(next, std::move(clones));
    } else {
        StructuralParentInstance* existing = context.frame(next);
        for (const auto& component : context.frame(at)->components) {
            if (!existing->find(component.unique_id)) existing->components.push_back(component);
        }
    }

    // (3) PostStates writes on the clones, complemented under negation.
    if (auto e = write_bindings(behavior.def.post_states, context.frame(next),
                                behavior.def.negation, false, &record.post_writes)) {
        return *e;
    }
    return record;
}

Result<bool> set_attribute(InstanceModel& model, const star::Ontology& ontology,
                           const std::string& instance_id, const std::string& type,
                           const std::string& value) {
    for (auto& context : model.contexts) {
        for (auto& [tp, frame] : context.timepoints) {
            if (ObjectInstance* instance = frame.find(instance_id)) {
                std::string declaring;
                const star::AttributeTypeDef* attr =
                    ontology.find_attribute_type(instance->class_name, type, &declaring);
                if (!attr) {
                    return make_error(ErrorCode::IllegalValue,
                                      "attribute type '" + type + "' not found on " +
                                          instance->class_name);
                }
                bool legal = std::any_of(
                    attr->values.begin(), attr->values.end(),
                    [&](const star::AttributeValueDef& v) { return v.name == value; });
                if (!legal) {
                    return make_error(ErrorCode::IllegalValue,
                                      "value '" + value + "' not legal for '" + type + "'");
                }
                instance->upsert_attribute(type, value, declaring);
                return true;
            }
        }
    }
    return make_error(ErrorCode::UnknownInstance, "no instance '" + instance_id + "'");
}

}  // namespace ross::model
