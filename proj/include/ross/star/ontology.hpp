#pragma once

#include <map>
#include <string>
#include <vector>

#include "ross/diag.hpp"
#include "ross/star/ast.hpp"

namespace ross::star {

// A merged object frame class: partial definitions with the same name are
// unioned at link time.
struct ObjectFrameClass {
    std::string name;
    std::string structure_trait;
    std::vector<std::string> dictionary;
    std::vector<std::string> dictionary_prior;
    bool prior_is_noun = false;
    std::vector<std::string> higher_classes;
    std::vector<std::string> structural_parent_bases;
    std::vector<AttributeTypeDef> attribute_types;
    std::vector<std::string> dimension_systems;
    std::string gender;
    int order = 0;  // definition order across the loaded documents
};

struct BehaviorClass {
    BehaviorClassDef def;
    int order = 0;
};

enum class RuleRole { Actor, Actee, Extra };

// "AntecedentActor" / "ConsequentActee" / ... -> role part
bool role_of_label(const std::string& label, RuleRole* role);

enum class SearchDirection { Unspecified, Forward };

// Immutable after link_ontology; safe for unsynchronized shared reads.
class Ontology {
public:
    const ObjectFrameClass* find_class(const std::string& name) const;
    const BehaviorClass* find_behavior(const std::string& name) const;

    // Transitive ancestor set (excluding the class itself), in deterministic
    // depth-first order of the HigherClasses declarations.
    const std::vector<std::string>& ancestors(const std::string& name) const;
    bool is_ancestor_or_equal(const std::string& ancestor, const std::string& descendant) const;

    // Exact dictionary match; pass the preceding token to enable two-word
    // nouns ("container object"). Unknown words yield an empty list.
    std::vector<const ObjectFrameClass*> lookup_noun(const std::string& word,
                                                     const std::string& prev_word = "") const;

    // First dictionary form is the singular by corpus convention.
    bool is_plural_form(const ObjectFrameClass& cls, const std::string& word) const;

    std::vector<const BehaviorClass*> behaviors_for_verb(const std::string& verb) const;

    // Verb matches any of the 5 dictionary forms; the negation flag must be
    // equal; every supplied class must sit at or below some prior-state
    // populated-object class of the same role. Result follows ontology file
    // order. An empty result is valid; callers requiring >=1 map it to
    // NotFoundRequiredItem themselves.
    std::vector<const BehaviorClass*> search_behavior_classes(
        const std::string& verb, bool negation,
        const std::vector<std::string>& actor_classes,
        const std::vector<std::string>& actee_classes,
        const std::vector<std::string>& extra_classes,
        SearchDirection direction = SearchDirection::Unspecified) const;

    // Effective (inheritance-merged) attribute type; also reports the class
    // that declares it, which the instance-model export prefixes onto
    // attribute names.
    const AttributeTypeDef* find_attribute_type(const std::string& class_name,
                                                const std::string& type_name,
                                                std::string* declaring_class = nullptr) const;

    // Declared gender of a class or its nearest declaring ancestor; "" if none.
    std::string effective_gender(const std::string& class_name) const;

    const std::map<std::string, ObjectFrameClass>& classes() const { return classes_; }
    const std::map<std::string, BehaviorClass>& behaviors() const { return behaviors_; }

    friend Result<Ontology> link_ontology(const std::vector<StarDocument>& docs);

private:
    std::map<std::string, ObjectFrameClass> classes_;
    std::map<std::string, BehaviorClass> behaviors_;
    std::map<std::string, std::vector<std::string>> ancestors_;
    std::map<std::string, std::vector<std::string>> noun_index_;  // single-word
    std::map<std::string, std::vector<std::string>> two_word_index_;  // "prior word"
    std::map<std::string, std::vector<std::string>> verb_index_;
};

Result<Ontology> link_ontology(const std::vector<StarDocument>& docs);

// First BehaviorClassReference in the prior states, if any.
const BehaviorClassReferenceDef* nested_reference(const BehaviorClass& behavior);

// First reference in the prior states, else in the post states (forward
// rules such as the advocate rule carry theirs in the consequent).
const BehaviorClassReferenceDef* nested_reference_any(const BehaviorClass& behavior);

// Which prior-state populated-object role carries a var binding of `symbol`.
bool identity_role(const BehaviorClass& behavior, const std::string& symbol, RuleRole* role);

// Loads every file named by `manifest` (one name per line, '#' comments) in
// order, parses and links. Paths are relative to the manifest's directory.
Result<Ontology> load_ontology_dir(const std::string& dir,
                                   std::vector<Diagnostic>* diagnostics = nullptr);

}  // namespace ross::star
