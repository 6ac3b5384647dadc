#include "ross/syntax/to_snf.hpp"

#include <map>
#include <sstream>

namespace ross::syntax {

namespace {

using snf::EntityArgument;
using snf::EntityDesignator;
using snf::ExtraSubRole;
using snf::ModificationSpecifier;
using snf::NounPhrase;
using snf::PredicateExpression;
using snf::PrepComplement;
using snf::SemanticRole;
using snf::SyntacticPosition;
using snf::SyntacticRole;

ExtraSubRole sub_role_for(const std::string& preposition) {
    static const std::map<std::string, ExtraSubRole> table = {
        {"about", ExtraSubRole::About}, {"above", ExtraSubRole::Above},
        {"around", ExtraSubRole::Around}, {"at", ExtraSubRole::At},
        {"before", ExtraSubRole::Before}, {"from", ExtraSubRole::From},
        {"into", ExtraSubRole::Into}, {"over", ExtraSubRole::Over},
        {"under", ExtraSubRole::Under}, {"in", ExtraSubRole::In},
        {"on", ExtraSubRole::On}, {"after", ExtraSubRole::After},
        {"by", ExtraSubRole::By}, {"of", ExtraSubRole::Of},
    };
    auto it = table.find(preposition);
    return it == table.end() ? ExtraSubRole::None : it->second;
}

std::string pp_text(const TreePP& pp) {
    std::ostringstream out;
    out << pp.preposition;
    for (const auto& s : pp.noun_phrase.specifiers) out << " " << s;
    for (const auto& q : pp.noun_phrase.qualifiers) out << " " << q;
    out << " " << pp.noun_phrase.head;
    return out.str();
}

NounPhrase convert_np(const TreeNounPhrase& np) {
    NounPhrase out;
    out.specifiers = np.specifiers;
    out.qualifiers = np.qualifiers;
    out.head_words.push_back({np.head, np.head_kind});
    for (const auto& post : np.postnominals) {
        out.postnominals.push_back({pp_text(post), nullptr});
    }
    return out;
}

EntityArgument make_entity(const TreeNounPhrase& np, SemanticRole role, SyntacticRole syn) {
    EntityArgument arg;
    EntityDesignator designator;
    designator.noun_phrase = convert_np(np);
    arg.designators.push_back(std::move(designator));
    arg.semantic_role = role;
    arg.syntactic_role = syn;
    return arg;
}

EntityArgument make_prep_entity(const TreePP& pp, SemanticRole role) {
    EntityArgument arg;
    EntityDesignator designator;
    designator.prep_complement = PrepComplement{pp.preposition, convert_np(pp.noun_phrase)};
    arg.designators.push_back(std::move(designator));
    arg.semantic_role = role;
    arg.syntactic_role = SyntacticRole::Other;
    if (role == SemanticRole::Extra) arg.extra_sub_role = sub_role_for(pp.preposition);
    return arg;
}

PredicateExpression convert_unit(const TreeMeaningUnit& unit) {
    PredicateExpression pe;
    pe.first_token_index = unit.first_token;
    pe.mood = unit.wh_word.empty() ? snf::GrammaticalMood::Indicative
                                   : snf::GrammaticalMood::Interrogative;
    if (!unit.introductory_word.empty()) pe.introductory_word = unit.introductory_word;

    snf::PredicateSpecifier spec;
    spec.ordinal = 0;
    spec.discourse = unit.discourse;

    if (!unit.post_verb_adjective.empty()) {
        // Copula + adjective: "it is too big"
        spec.role = snf::PredicateRole::ToBeAttributive;
        spec.main_verb = unit.copula;
        snf::AttributiveArgument attr;
        attr.role = snf::AttributiveRole::Attribute;
        snf::AttributiveDesignator designator;
        if (!unit.post_verb_adverbs.empty()) designator.degree = "too";  // "so" normalizes
        designator.adjective = unit.post_verb_adjective;
        attr.designators.push_back(designator);
        pe.attributive_arguments.push_back(std::move(attr));
    } else if (!unit.copula.empty() && unit.direct_object) {
        // Copula + NP: "a car is a vehicle"
        spec.role = snf::PredicateRole::ToBeIsA;
        spec.main_verb = unit.copula;
        snf::AttributiveArgument attr;
        attr.role = snf::AttributiveRole::HigherClass;
        snf::AttributiveDesignator designator;
        designator.adjective = unit.direct_object->head;
        attr.designators.push_back(designator);
        pe.attributive_arguments.push_back(std::move(attr));
    } else if (!unit.copula.empty() && !unit.passive) {
        // Copula + prepositional complement: "the car is in the garage"
        spec.role = snf::PredicateRole::ToBeTakingEntityArgument;
        spec.main_verb = unit.copula;
    } else {
        spec.role = snf::PredicateRole::VerbTakingEntityArgument;
        spec.main_verb = unit.main_verb;
    }
    pe.specifiers.push_back(std::move(spec));

    // Entity arguments.
    if (!unit.wh_word.empty()) {
        TreeNounPhrase wh;
        wh.head = unit.wh_word;
        wh.head_kind = snf::HeadKind::Pronoun;
        pe.entity_arguments.push_back(make_entity(wh, SemanticRole::Actor, SyntacticRole::Subject));
    } else if (unit.passive) {
        // Surface subject takes the passive role; the by-phrase supplies the actor.
        pe.entity_arguments.push_back(
            make_entity(unit.subject, SemanticRole::Actee, SyntacticRole::Subject));
        if (unit.by_phrase) {
            pe.entity_arguments.push_back(make_prep_entity(*unit.by_phrase, SemanticRole::Actor));
        }
    } else {
        pe.entity_arguments.push_back(
            make_entity(unit.subject, SemanticRole::Actor, SyntacticRole::Subject));
    }
    if (unit.direct_object &&
        pe.specifiers.front().role == snf::PredicateRole::VerbTakingEntityArgument) {
        pe.entity_arguments.push_back(
            make_entity(*unit.direct_object, SemanticRole::Actee, SyntacticRole::DirectObject));
    }
    if (unit.second_object) {
        EntityArgument extra = make_entity(*unit.second_object, SemanticRole::Extra,
                                           SyntacticRole::IndirectObject);
        extra.extra_sub_role = ExtraSubRole::IndirectObject;
        pe.entity_arguments.push_back(std::move(extra));
    }
    for (const auto& pp : unit.complements) {
        pe.entity_arguments.push_back(make_prep_entity(pp, SemanticRole::Extra));
    }

    // Negation is a pre-verb modification.
    for (const auto& adv : unit.pre_verb_adverbs) {
        ModificationSpecifier mod;
        mod.adverbial_phrase = adv;
        mod.position = SyntacticPosition::PreVerb;
        pe.modifications.push_back(std::move(mod));
    }
    return pe;
}

}  // namespace

Result<snf::PredicateExpression> tree_to_snf(const SyntaxTree& tree) {
    if (tree.units.empty()) {
        return make_error(ErrorCode::UnsupportedConstruction, "empty syntax tree");
    }
    size_t main_index = tree.units.size();
    for (size_t i = 0; i < tree.units.size(); ++i) {
        if (tree.units[i].introductory_word.empty()) {
            main_index = i;
            break;
        }
    }
    if (main_index == tree.units.size()) main_index = 0;

    PredicateExpression root = convert_unit(tree.units[main_index]);
    for (size_t i = 0; i < tree.units.size(); ++i) {
        if (i == main_index) continue;
        const TreeMeaningUnit& unit = tree.units[i];
        PredicateExpression nested = convert_unit(unit);
        nested.introductory_word = unit.introductory_word;
        ModificationSpecifier mod;
        mod.introducer = unit.introductory_word;
        mod.position = unit.leading ? SyntacticPosition::Leading : SyntacticPosition::Final;
        mod.nested = std::make_unique<PredicateExpression>(std::move(nested));
        root.modifications.push_back(std::move(mod));
    }
    return root;
}

}  // namespace ross::syntax
