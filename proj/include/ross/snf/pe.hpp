#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ross/diag.hpp"

namespace ross::snf {

enum class GrammaticalMood { Indicative, Interrogative, Imperative };

enum class PredicateRole {
    ToBeAttributive,          // "The sky is gray."
    ToBeIsA,                  // "A car is a vehicle."
    Capability,               // "can"
    HasAVerb,                 // "A vehicle has wheels."
    ToBeTakingEntityArgument, // "The car is in the garage."
    VerbTakingEntityArgument, // "The man walked."
};

enum class DiscourseContext {
    DeclarativePastSimple,
    DeclarativePastPerfect,
    DeclarativePastProgressive,
    DeclarativePastPerfectProgressive,
    DeclarativePresentSimple,
    DeclarativePresentPerfect,
    DeclarativePresentProgressive,
    DeclarativePresentPerfectProgressive,
    DeclarativeFutureSimple,
    DeclarativeFuturePerfect,
    DeclarativeFutureProgressive,
    DeclarativeFuturePerfectProgressive,
    InterrogativePastSimple,
    InterrogativePastPerfect,
    InterrogativePastProgressive,
    InterrogativePastPerfectProgressive,
    Imperative,
    Hypothetical,
    None,
};

enum class SemanticRole { Actor, Actee, Extra };

enum class ExtraSubRole {
    None,
    IndirectObject,
    About,
    Above,
    Around,
    At,
    Before,
    From,
    Into,
    Over,
    Under,
    In,
    On,
    After,
    By,
    Of,
};

enum class SyntacticRole { Subject, DirectObject, IndirectObject, Other };

enum class HeadKind { Pronoun, CommonNoun, ProperNoun };

enum class SyntacticPosition { Leading, PreVerb, InVerbSequence, PostVerb, Final };

struct PredicateSpecifier {
    int ordinal = 0;
    std::string main_verb;  // auxiliary "to be" is never stored here
    PredicateRole role = PredicateRole::VerbTakingEntityArgument;
    DiscourseContext discourse = DiscourseContext::None;
    std::string trailing_connective;
};

struct PredicateExpression;

struct HeadWord {
    std::string word;
    HeadKind kind = HeadKind::CommonNoun;
};

struct PostnominalModifier {
    std::string text;  // e.g. "of the house"
    std::unique_ptr<PredicateExpression> nested;
};

struct NounPhrase {
    std::vector<std::string> specifiers;  // "the", "a", "his"
    std::vector<std::string> qualifiers;  // "brown", "city", "final"
    std::vector<HeadWord> head_words;
    std::vector<PostnominalModifier> postnominals;

    NounPhrase() = default;
    NounPhrase(const NounPhrase& other);
    NounPhrase& operator=(const NounPhrase& other);
    NounPhrase(NounPhrase&&) = default;
    NounPhrase& operator=(NounPhrase&&) = default;
};

struct PrepComplement {
    std::string preposition;
    NounPhrase noun_phrase;
};

struct EntityDesignator {
    std::optional<NounPhrase> noun_phrase;
    std::optional<PrepComplement> prep_complement;
    std::string trailing_connective;
};

struct EntityArgument {
    std::vector<EntityDesignator> designators;
    std::unique_ptr<PredicateExpression> nested;
    SemanticRole semantic_role = SemanticRole::Actor;
    ExtraSubRole extra_sub_role = ExtraSubRole::None;
    SyntacticRole syntactic_role = SyntacticRole::Subject;
    int predicate_ordinal = 0;
};

enum class AttributiveRole { Attribute, HigherClass };

struct AttributiveDesignator {
    std::string degree;  // normalized: "so" is stored as "too"
    std::string adjective;
};

struct AttributiveArgument {
    AttributiveRole role = AttributiveRole::Attribute;
    std::vector<AttributiveDesignator> designators;
};

struct ModificationSpecifier {
    std::string adverbial_phrase;  // "not", "quickly"
    std::string introducer;        // adverbial-expression introducer: "because", "after"
    std::unique_ptr<PredicateExpression> nested;
    SyntacticPosition position = SyntacticPosition::Final;
    int predicate_ordinal = 0;
};

struct PredicateExpression {
    GrammaticalMood mood = GrammaticalMood::Indicative;
    std::string introductory_word;
    std::vector<PredicateSpecifier> specifiers;
    std::vector<EntityArgument> entity_arguments;
    std::vector<AttributiveArgument> attributive_arguments;
    std::vector<ModificationSpecifier> modifications;
    int first_token_index = -1;

    PredicateExpression clone() const;
};

// Every predicate expression reachable from `root`, exactly once, in original
// syntactic order: leading adverbial clauses first, then the expression
// itself, then nested argument/modifier expressions. Nesting below the first
// level is spliced into this list rather than recursed into.
std::vector<const PredicateExpression*> flatten_pe_order(const PredicateExpression& root);
std::vector<PredicateExpression*> flatten_pe_order(PredicateExpression& root);

// Structural equality; token indices are ignored.
bool structurally_equal(const PredicateExpression& a, const PredicateExpression& b);

// Ontology-independent invariant checks; returns one diagnostic per violation.
std::vector<Diagnostic> validate_pe(const PredicateExpression& pe);

const char* to_string(GrammaticalMood v);
const char* to_string(PredicateRole v);
const char* to_string(DiscourseContext v);
const char* to_string(SemanticRole v);
const char* to_string(ExtraSubRole v);
const char* to_string(SyntacticRole v);
const char* to_string(HeadKind v);
const char* to_string(SyntacticPosition v);
const char* to_string(AttributiveRole v);

}  // namespace ross::snf
