#include "ross/snf/pe.hpp"

#include <algorithm>

namespace ross::snf {

namespace {

std::unique_ptr<PredicateExpression> clone_ptr(const std::unique_ptr<PredicateExpression>& p) {
    if (!p) return nullptr;
    return std::make_unique<PredicateExpression>(p->clone());
}

}  // namespace

NounPhrase::NounPhrase(const NounPhrase& other)
    : specifiers(other.specifiers), qualifiers(other.qualifiers), head_words(other.head_words) {
    for (const auto& post : other.postnominals) {
        postnominals.push_back({post.text, clone_ptr(post.nested)});
    }
}

NounPhrase& NounPhrase::operator=(const NounPhrase& other) {
    if (this == &other) return *this;
    NounPhrase copy(other);
    *this = std::move(copy);
    return *this;
}

PredicateExpression PredicateExpression::clone() const {
    PredicateExpression out;
    out.mood = mood;
    out.introductory_word = introductory_word;
    out.specifiers = specifiers;
    out.attributive_arguments = attributive_arguments;
    out.first_token_index = first_token_index;
    for (const auto& arg : entity_arguments) {
        EntityArgument copy;
        copy.designators = arg.designators;
        copy.nested = clone_ptr(arg.nested);
        copy.semantic_role = arg.semantic_role;
        copy.extra_sub_role = arg.extra_sub_role;
        copy.syntactic_role = arg.syntactic_role;
        copy.predicate_ordinal = arg.predicate_ordinal;
        out.entity_arguments.push_back(std::move(copy));
    }
    for (const auto& mod : modifications) {
        ModificationSpecifier copy;
        copy.adverbial_phrase = mod.adverbial_phrase;
        copy.introducer = mod.introducer;
        copy.nested = clone_ptr(mod.nested);
        copy.position = mod.position;
        copy.predicate_ordinal = mod.predicate_ordinal;
        out.modifications.push_back(std::move(copy));
    }
    return out;
}

namespace {

template <typename PE, typename Out>
void flatten_into(PE& pe, Out& out) {
    // Leading adverbial clauses precede the expression they modify.
    for (auto& mod : pe.modifications) {
        if (mod.position == SyntacticPosition::Leading && mod.nested) {
            flatten_into(*mod.nested, out);
        }
    }
    out.push_back(&pe);
    for (auto& arg : pe.entity_arguments) {
        if (arg.nested) flatten_into(*arg.nested, out);
        for (auto& designator : arg.designators) {
            if (designator.noun_phrase) {
                for (auto& post : designator.noun_phrase->postnominals) {
                    if (post.nested) flatten_into(*post.nested, out);
                }
            }
        }
    }
    for (auto& mod : pe.modifications) {
        if (mod.position != SyntacticPosition::Leading && mod.nested) {
            flatten_into(*mod.nested, out);
        }
    }
}

}  // namespace

std::vector<const PredicateExpression*> flatten_pe_order(const PredicateExpression& root) {
    std::vector<const PredicateExpression*> out;
    flatten_into(root, out);
    return out;
}

std::vector<PredicateExpression*> flatten_pe_order(PredicateExpression& root) {
    std::vector<PredicateExpression*> out;
    flatten_into(root, out);
    return out;
}

namespace {

bool equal(const NounPhrase& a, const NounPhrase& b) {
    if (a.specifiers != b.specifiers || a.qualifiers != b.qualifiers ||
        a.head_words.size() != b.head_words.size() ||
        a.postnominals.size() != b.postnominals.size()) {
        return false;
    }
    for (size_t i = 0; i < a.head_words.size(); ++i) {
        if (a.head_words[i].word != b.head_words[i].word ||
            a.head_words[i].kind != b.head_words[i].kind) {
            return false;
        }
    }
    for (size_t i = 0; i < a.postnominals.size(); ++i) {
        if (a.postnominals[i].text != b.postnominals[i].text) return false;
        bool ha = a.postnominals[i].nested != nullptr;
        bool hb = b.postnominals[i].nested != nullptr;
        if (ha != hb) return false;
        if (ha && !structurally_equal(*a.postnominals[i].nested, *b.postnominals[i].nested)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool structurally_equal(const PredicateExpression& a, const PredicateExpression& b) {
    if (a.mood != b.mood || a.introductory_word != b.introductory_word ||
        a.specifiers.size() != b.specifiers.size() ||
        a.entity_arguments.size() != b.entity_arguments.size() ||
        a.attributive_arguments.size() != b.attributive_arguments.size() ||
        a.modifications.size() != b.modifications.size()) {
        return false;
    }
    for (size_t i = 0; i < a.specifiers.size(); ++i) {
        const auto& sa = a.specifiers[i];
        const auto& sb = b.specifiers[i];
        if (sa.ordinal != sb.ordinal || sa.main_verb != sb.main_verb || sa.role != sb.role ||
            sa.discourse != sb.discourse || sa.trailing_connective != sb.trailing_connective) {
            return false;
        }
    }
    for (size_t i = 0; i < a.entity_arguments.size(); ++i) {
        const auto& ea = a.entity_arguments[i];
        const auto& eb = b.entity_arguments[i];
        if (ea.semantic_role != eb.semantic_role || ea.extra_sub_role != eb.extra_sub_role ||
            ea.syntactic_role != eb.syntactic_role ||
            ea.predicate_ordinal != eb.predicate_ordinal ||
            ea.designators.size() != eb.designators.size()) {
            return false;
        }
        for (size_t j = 0; j < ea.designators.size(); ++j) {
            const auto& da = ea.designators[j];
            const auto& db = eb.designators[j];
            if (da.trailing_connective != db.trailing_connective) return false;
            if (da.noun_phrase.has_value() != db.noun_phrase.has_value()) return false;
            if (da.noun_phrase && !equal(*da.noun_phrase, *db.noun_phrase)) return false;
            if (da.prep_complement.has_value() != db.prep_complement.has_value()) return false;
            if (da.prep_complement) {
                if (da.prep_complement->preposition != db.prep_complement->preposition ||
                    !equal(da.prep_complement->noun_phrase, db.prep_complement->noun_phrase)) {
                    return false;
                }
            }
        }
        bool ha = ea.nested != nullptr, hb = eb.nested != nullptr;
        if (ha != hb) return false;
        if (ha && !structurally_equal(*ea.nested, *eb.nested)) return false;
    }
    for (size_t i = 0; i < a.attributive_arguments.size(); ++i) {
        const auto& aa = a.attributive_arguments[i];
        const auto& ab = b.attributive_arguments[i];
        if (aa.role != ab.role || aa.designators.size() != ab.designators.size()) return false;
        for (size_t j = 0; j < aa.designators.size(); ++j) {
            if (aa.designators[j].degree != ab.designators[j].degree ||
                aa.designators[j].adjective != ab.designators[j].adjective) {
                return false;
            }
        }
    }
    for (size_t i = 0; i < a.modifications.size(); ++i) {
        const auto& ma = a.modifications[i];
        const auto& mb = b.modifications[i];
        if (ma.adverbial_phrase != mb.adverbial_phrase || ma.introducer != mb.introducer ||
            ma.position != mb.position || ma.predicate_ordinal != mb.predicate_ordinal) {
            return false;
        }
        bool ha = ma.nested != nullptr, hb = mb.nested != nullptr;
        if (ha != hb) return false;
        if (ha && !structurally_equal(*ma.nested, *mb.nested)) return false;
    }
    return true;
}

std::vector<Diagnostic> validate_pe(const PredicateExpression& pe) {
    std::vector<Diagnostic> out;
    auto report = [&](const std::string& message) {
        out.push_back({Diagnostic::Kind::Warning, message, {}});
    };

    auto order = flatten_pe_order(pe);
    if (std::count(order.begin(), order.end(), &pe) != 1) {
        report("expression order does not contain the root exactly once");
    }

    for (const PredicateExpression* node : order) {
        std::vector<int> ordinals;
        for (const auto& spec : node->specifiers) ordinals.push_back(spec.ordinal);
        auto has_ordinal = [&](int n) {
            return std::find(ordinals.begin(), ordinals.end(), n) != ordinals.end();
        };
        if (node->specifiers.empty()) report("predicate expression without predicate specifiers");
        for (const auto& arg : node->entity_arguments) {
            if (arg.designators.empty() && !arg.nested) {
                report("entity argument has neither designators nor a nested expression");
            }
            if (arg.extra_sub_role != ExtraSubRole::None && arg.semantic_role != SemanticRole::Extra) {
                report("extra sub-role set on a non-extra argument");
            }
            if (!has_ordinal(arg.predicate_ordinal)) {
                report("entity argument refers to missing predicate ordinal " +
                       std::to_string(arg.predicate_ordinal));
            }
            for (const auto& designator : arg.designators) {
                if (!designator.noun_phrase && !designator.prep_complement) {
                    report("entity designator has neither noun phrase nor complement");
                }
                if (designator.noun_phrase && designator.noun_phrase->head_words.empty()) {
                    report("noun phrase without head words");
                }
                if (designator.prep_complement &&
                    designator.prep_complement->noun_phrase.head_words.empty()) {
                    report("prepositional complement without head words");
                }
            }
        }
        for (const auto& attr : node->attributive_arguments) {
            if (attr.role == AttributiveRole::Attribute && attr.designators.empty()) {
                report("attributive argument with role Attribute has no designators");
            }
        }
        for (const auto& mod : node->modifications) {
            if (mod.adverbial_phrase.empty() && mod.introducer.empty() && !mod.nested) {
                report("modification specifier carries no payload");
            }
            if (!has_ordinal(mod.predicate_ordinal)) {
                report("modification refers to missing predicate ordinal " +
                       std::to_string(mod.predicate_ordinal));
            }
        }
    }
    return out;
}

const char* to_string(GrammaticalMood v) {
    switch (v) {
        case GrammaticalMood::Indicative: return "Indicative";
        case GrammaticalMood::Interrogative: return "Interrogative";
        case GrammaticalMood::Imperative: return "Imperative";
    }
    return "?";
}

const char* to_string(PredicateRole v) {
    switch (v) {
        case PredicateRole::ToBeAttributive: return "PredicateToBeAttributive";
        case PredicateRole::ToBeIsA: return "PredicateToBeIsA";
        case PredicateRole::Capability: return "PredicateCapability";
        case PredicateRole::HasAVerb: return "PredicateHasAVerb";
        case PredicateRole::ToBeTakingEntityArgument: return "PredicateToBeTakingEntityArgument";
        case PredicateRole::VerbTakingEntityArgument: return "PredicateVerbTakingEntityArgument";
    }
    return "?";
}

const char* to_string(DiscourseContext v) {
    switch (v) {
        case DiscourseContext::DeclarativePastSimple: return "DeclarativePastSimple";
        case DiscourseContext::DeclarativePastPerfect: return "DeclarativePastPerfect";
        case DiscourseContext::DeclarativePastProgressive: return "DeclarativePastProgressive";
        case DiscourseContext::DeclarativePastPerfectProgressive: return "DeclarativePastPerfectProgressive";
        case DiscourseContext::DeclarativePresentSimple: return "DeclarativePresentSimple";
        case DiscourseContext::DeclarativePresentPerfect: return "DeclarativePresentPerfect";
        case DiscourseContext::DeclarativePresentProgressive: return "DeclarativePresentProgressive";
        case DiscourseContext::DeclarativePresentPerfectProgressive: return "DeclarativePresentPerfectProgressive";
        case DiscourseContext::DeclarativeFutureSimple: return "DeclarativeFutureSimple";
        case DiscourseContext::DeclarativeFuturePerfect: return "DeclarativeFuturePerfect";
        case DiscourseContext::DeclarativeFutureProgressive: return "DeclarativeFutureProgressive";
        case DiscourseContext::DeclarativeFuturePerfectProgressive: return "DeclarativeFuturePerfectProgressive";
        case DiscourseContext::InterrogativePastSimple: return "InterrogativePastSimple";
        case DiscourseContext::InterrogativePastPerfect: return "InterrogativePastPerfect";
        case DiscourseContext::InterrogativePastProgressive: return "InterrogativePastProgressive";
        case DiscourseContext::InterrogativePastPerfectProgressive: return "InterrogativePastPerfectProgressive";
        case DiscourseContext::Imperative: return "Imperative";
        case DiscourseContext::Hypothetical: return "Hypothetical";
        case DiscourseContext::None: return "None";
    }
    return "?";
}

const char* to_string(SemanticRole v) {
    switch (v) {
        case SemanticRole::Actor: return "Actor";
        case SemanticRole::Actee: return "Actee";
        case SemanticRole::Extra: return "Extra";
    }
    return "?";
}

const char* to_string(ExtraSubRole v) {
    switch (v) {
        case ExtraSubRole::None: return "None";
        case ExtraSubRole::IndirectObject: return "IndirectObject";
        case ExtraSubRole::About: return "About";
        case ExtraSubRole::Above: return "Above";
        case ExtraSubRole::Around: return "Around";
        case ExtraSubRole::At: return "At";
        case ExtraSubRole::Before: return "Before";
        case ExtraSubRole::From: return "From";
        case ExtraSubRole::Into: return "Into";
        case ExtraSubRole::Over: return "Over";
        case ExtraSubRole::Under: return "Under";
        case ExtraSubRole::In: return "In";
        case ExtraSubRole::On: return "On";
        case ExtraSubRole::After: return "After";
        case ExtraSubRole::By: return "By";
        case ExtraSubRole::Of: return "Of";
    }
    return "?";
}

const char* to_string(SyntacticRole v) {
    switch (v) {
        case SyntacticRole::Subject: return "Subject";
        case SyntacticRole::DirectObject: return "DirectObject";
        case SyntacticRole::IndirectObject: return "IndirectObject";
        case SyntacticRole::Other: return "Other";
    }
    return "?";
}

const char* to_string(HeadKind v) {
    switch (v) {
        case HeadKind::Pronoun: return "Pronoun";
        case HeadKind::CommonNoun: return "CommonNoun";
        case HeadKind::ProperNoun: return "ProperNoun";
    }
    return "?";
}

const char* to_string(SyntacticPosition v) {
    switch (v) {
        case SyntacticPosition::Leading: return "Leading";
        case SyntacticPosition::PreVerb: return "PreVerb";
        case SyntacticPosition::InVerbSequence: return "InVerbSequence";
        case SyntacticPosition::PostVerb: return "PostVerb";
        case SyntacticPosition::Final: return "Final";
    }
    return "?";
}

const char* to_string(AttributiveRole v) {
    switch (v) {
        case AttributiveRole::Attribute: return "Attribute";
        case AttributiveRole::HigherClass: return "HigherClass";
    }
    return "?";
}

}  // namespace ross::snf
