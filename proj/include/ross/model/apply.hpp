#pragma once

#include <map>
#include <string>
#include <vector>

#include "ross/diag.hpp"
#include "ross/model/instance.hpp"
#include "ross/star/ontology.hpp"

namespace ross::model {

struct RoleBindings {
    std::vector<std::string> actors;  // instance unique ids
    std::vector<std::string> actees;
    std::vector<std::string> extras;
};

struct AttributeWrite {
    std::string instance_id;
    std::string type;
    std::string value;
};

// What one behavior-class application did: which instance filled which rule
// role, identity symbol bindings, and the attribute writes per section.
struct AppliedRecord {
    std::string behavior;
    std::string at;  // prior-states timepoint
    std::vector<std::pair<star::RuleRole, std::string>> role_bindings;
    std::map<std::string, std::string> symbol_bindings;  // q$ -> instance id
    std::vector<AttributeWrite> prior_writes;
    std::vector<AttributeWrite> post_writes;

    bool bound_role(const std::string& instance_id, star::RuleRole* role) const;
};

// Creates an instance with a fresh unique id and empty attributes and inserts
// it into the context's latest timepoint (establishing the context and T01 on
// first use). The structural parent class defaults to
// EverydayObjectStructuralParentClass unless the class declares bases.
Result<std::string> instantiate_object(InstanceModel& model, const star::Ontology& ontology,
                                       const std::string& class_name, const std::string& word,
                                       bool multiple);

// PriorStates val-bindings write onto the bound instances at `at`; a fresh
// timepoint at+1 receives clones of every instance; PostStates val-bindings
// write onto the clones. Negation complements PostStates state-attribute
// writes to the first ("Not...") value of the value set. Nested behavior
// references are not applied here. Identity var bindings (q$, extra$) bind
// instance ids for later identity checks.
Result<AppliedRecord> apply_behavior_class(InstanceModel& model, const star::Ontology& ontology,
                                           const star::BehaviorClass& behavior,
                                           const RoleBindings& bindings, const std::string& at);

// Upserts at the timepoint where the instance first appears (the prior-states
// moment the causal feature explains).
Result<bool> set_attribute(InstanceModel& model, const star::Ontology& ontology,
                           const std::string& instance_id, const std::string& type,
                           const std::string& value);

}  // namespace ross::model
