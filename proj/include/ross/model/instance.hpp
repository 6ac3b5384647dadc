#pragma once

#include <map>
#include <string>
#include <vector>

#include "ross/diag.hpp"

namespace ross::model {

struct AttributePair {
    std::string type;
    std::string value;
    std::string declaring_class;  // ancestor that declares the type; export prefix
};

struct ObjectInstance {
    std::string class_name;
    std::string content;    // surface noun, e.g. "councilmen"
    std::string unique_id;  // "TrophyObjectFrameClass-1"
    bool multiple = false;  // collection
    std::vector<AttributePair> attributes;  // insertion-ordered, unique by type
    std::string identity_symbol;            // q$/extra$ bound during application
    // Inclusion set for freshly created collections (sandbox listeners):
    // unique ids of the instances this collection stands for.
    std::vector<std::string> identity_members;

    void upsert_attribute(const std::string& type, const std::string& value,
                          const std::string& declaring_class);
    const AttributePair* find_attribute(const std::string& type) const;
};

// A "holder" instance: one diorama frame at one timepoint.
struct StructuralParentInstance {
    std::string parent_class;
    std::vector<ObjectInstance> components;

    ObjectInstance* find(const std::string& unique_id);
    const ObjectInstance* find(const std::string& unique_id) const;
};

struct Context {
    std::string unique_id;      // "1", "2", ...
    std::string discourse;      // "Declarative-PastSimple"
    std::string leading_class;
    std::string parent_class;   // e.g. EverydayObjectStructuralParentClass
    std::string timeline_name;  // e.g. "...StructuralParentClass.EverydayObjectDimensionSystem"
    std::map<std::string, StructuralParentInstance> timepoints;  // "T01" -> frame

    std::string latest_timepoint() const;  // "" when empty
    StructuralParentInstance* frame(const std::string& timepoint);
    const StructuralParentInstance* frame(const std::string& timepoint) const;
};

struct InstanceModel {
    std::string text_source = "SubmittedFromWebClient";
    std::string document_file;  // set when the input came from a file
    std::vector<Context> contexts;
    std::map<std::string, int> id_counters;

    Context& primary_context();

    // The instance at the earliest timepoint it appears in, or null.
    ObjectInstance* find_instance(const std::string& unique_id);
    const ObjectInstance* find_instance(const std::string& unique_id) const;

    std::string fresh_id(const std::string& class_name);
};

// "T01" -> "T02"; values are the enumerated tokens T01..T99.
std::string next_timepoint(const std::string& timepoint);

// Deterministic full dump (attributes, identity bindings); used by tests to
// hash model state.
std::string canonical_dump(const InstanceModel& model);

}  // namespace ross::model
