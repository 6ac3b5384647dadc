#include "ross/engine/features.hpp"

#include <algorithm>
#include <cctype>

namespace ross::engine {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

void lexeme_features(const std::string& pronoun, PronounFeatureSet* features) {
    std::string w = lower(pronoun);
    if (w == "he") {
        features->gender = PronounGender::Male;
        features->cardinality = PronounCardinality::Singular;
        features->active_or_passive = PronounActiveOrPassive::Active;
    } else if (w == "she") {
        features->gender = PronounGender::Female;
        features->cardinality = PronounCardinality::Singular;
        features->active_or_passive = PronounActiveOrPassive::Active;
    } else if (w == "him") {
        features->gender = PronounGender::Male;
        features->cardinality = PronounCardinality::Singular;
        features->active_or_passive = PronounActiveOrPassive::Passive;
    } else if (w == "her") {
        features->gender = PronounGender::Female;
        features->cardinality = PronounCardinality::Singular;
        features->active_or_passive = PronounActiveOrPassive::Passive;
    } else if (w == "it") {
        features->gender = PronounGender::Nonspecific;
        features->cardinality = PronounCardinality::Singular;
        features->active_or_passive = PronounActiveOrPassive::Nonspecific;
    } else if (w == "they") {
        features->gender = PronounGender::Nonspecific;
        features->cardinality = PronounCardinality::Plural;
        features->active_or_passive = PronounActiveOrPassive::Active;
    } else if (w == "them") {
        features->gender = PronounGender::Nonspecific;
        features->cardinality = PronounCardinality::Plural;
        features->active_or_passive = PronounActiveOrPassive::Passive;
    }
}

}  // namespace

PronounFeatureSet build_pronoun_feature_set(
    const snf::PredicateExpression& pe, const snf::EntityArgument& pronoun_argument,
    const std::string& introducer,
    const std::vector<ObjectInstanceSemanticWrapper>& co_occurring) {
    PronounFeatureSet features;
    for (const auto& designator : pronoun_argument.designators) {
        if (designator.noun_phrase && !designator.noun_phrase->head_words.empty()) {
            features.pronoun_word = designator.noun_phrase->head_words.front().word;
            break;
        }
        if (designator.prep_complement &&
            !designator.prep_complement->noun_phrase.head_words.empty()) {
            features.pronoun_word = designator.prep_complement->noun_phrase.head_words.front().word;
            break;
        }
    }
    lexeme_features(features.pronoun_word, &features);

    std::string intro = lower(introducer);
    if (intro == "because" || intro == "since") {
        features.hypothetical = HypotheticalUsage::ExplanationOfCause;
    }
    features.temporal_order = (intro == "after") ? TemporalOrderIndicator::Preceding
                                                 : TemporalOrderIndicator::Undetermined;

    if (!pe.specifiers.empty()) {
        const auto& spec = pe.specifiers.front();
        features.discourse = spec.discourse;
        features.predicate_role = spec.role;
        if (spec.role == snf::PredicateRole::ToBeAttributive) {
            for (const auto& attr : pe.attributive_arguments) {
                if (!attr.designators.empty()) {
                    features.search_key_adjective = attr.designators.front().adjective;
                    break;
                }
            }
        } else {
            features.search_key_verb = spec.main_verb;
        }
    }
    for (const auto& mod : pe.modifications) {
        if (mod.position == snf::SyntacticPosition::PreVerb && mod.adverbial_phrase == "not") {
            features.negation_of_search_key = true;
        }
    }
    features.syntactic_role = pronoun_argument.syntactic_role;
    features.semantic_role = pronoun_argument.semantic_role;
    features.co_occurring = co_occurring;
    features.pe_first_token = pe.first_token_index;
    return features;
}

}  // namespace ross::engine
