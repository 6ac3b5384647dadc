#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ross/diag.hpp"

namespace ross::star {

// One named value inside an AttributeType's value list, e.g.
//   "TooBig" : Dictionary ( English ( { "big" } ) );
// By convention the first value of every list is the negative ("Not...") one.
struct AttributeValueDef {
    std::string name;
    std::vector<std::string> dictionary;  // lowercased surface words
};

struct AttributeTypeDef {
    std::string name;
    std::string super_type;  // e.g. "Qualitative"
    bool is_state = false;
    bool optional_causal_feature = false;
    std::vector<AttributeValueDef> values;
    SourceLoc loc;
};

enum class BindingMode { Val, Var, Expr };

// <Attribute ref = LiftingState val = "NotLifting" />
// <Attribute ref = RelativeLocation var = a$ />
// <Attribute ref = RelativeLocation expr = (a$+1) />
struct AttributeBinding {
    std::string attribute_type;
    BindingMode mode = BindingMode::Val;
    std::string value;  // value name, or symbol for Var/Expr
    int offset = 0;     // Expr only: (a$+N)
    SourceLoc loc;
};

struct PopulatedObjectClassDef {
    std::string role_label;  // "AntecedentActor", "ConsequentExtra", ...
    std::string object_class;
    bool binder_source = false;
    bool passive_participant = false;
    bool extra_participant = false;
    bool multiple = false;
    std::string dimension_system;  // parsed, retained, unused
    std::vector<AttributeBinding> attributes;
    SourceLoc loc;
};

struct BehaviorParameter {
    std::string class_ref;
    std::string identity;  // symbol such as q$ or extra$; empty if none
};

struct BehaviorClassReferenceDef {
    std::string behavior;
    std::optional<double> probability;
    std::optional<BehaviorParameter> actor;
    std::optional<BehaviorParameter> actee;
    std::optional<BehaviorParameter> extra;
    SourceLoc loc;
};

using StateItem = std::variant<PopulatedObjectClassDef, BehaviorClassReferenceDef>;

struct BehaviorClassDef {
    std::string name;
    bool causal_rule = false;
    bool negation = false;
    std::string bridge_class;
    std::optional<double> probability;
    // 5-slot verb form list: base, simple past, past participle,
    // 3rd-person-singular present, present participle. Duplicates allowed.
    std::vector<std::string> verb_dictionary;
    std::vector<StateItem> prior_states;
    std::vector<StateItem> post_states;
    SourceLoc loc;
};

struct ObjectFrameClassDef {
    std::string name;
    std::string structure_trait;
    std::vector<std::string> dictionary;        // noun forms, lowercased
    std::vector<std::string> dictionary_prior;  // leading words of two-word nouns
    bool prior_is_noun = false;
    std::vector<std::string> higher_classes;
    std::vector<std::string> structural_parent_bases;
    std::vector<AttributeTypeDef> attribute_types;
    std::vector<std::string> dimension_systems;  // names only; semantics out of scope
    bool has_structure_block = false;
    std::string gender;  // "", "Male" or "Female"
    SourceLoc loc;
};

using ClassDef = std::variant<ObjectFrameClassDef, BehaviorClassDef>;

struct StarDocument {
    std::string source_name;
    std::vector<ClassDef> class_defs;
    std::vector<Diagnostic> diagnostics;  // one entry per lexical/structural repair
};

inline const std::string& class_def_name(const ClassDef& def) {
    if (const auto* obj = std::get_if<ObjectFrameClassDef>(&def)) return obj->name;
    return std::get<BehaviorClassDef>(def).name;
}

}  // namespace ross::star
