#include "ross/api/qa.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ross/syntax/parser.hpp"
#include "ross/syntax/segment.hpp"

namespace ross::api {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string capitalized(const std::string& s) {
    std::string out = s;
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

Result<std::string> answer_adjective(const std::string& adjective, const std::string& copula,
                                     const Session& session, const star::Ontology& ontology) {
    std::string adj = lower(adjective);
    std::set<std::string> seen;
    for (const auto& context : session.model.contexts) {
        for (const auto& [tp, frame] : context.timepoints) {
            for (const auto& instance : frame.components) {
                if (!seen.insert(instance.unique_id).second) continue;
                for (const auto& attr : instance.attributes) {
                    const star::AttributeTypeDef* def =
                        ontology.find_attribute_type(instance.class_name, attr.type);
                    if (!def || !def->optional_causal_feature) continue;
                    for (const auto& value : def->values) {
                        if (value.name != attr.value) continue;
                        if (std::find(value.dictionary.begin(), value.dictionary.end(), adj) ==
                            value.dictionary.end()) {
                            continue;
                        }
                        std::ostringstream out;
                        bool proper = !instance.content.empty() &&
                                      std::isupper(static_cast<unsigned char>(instance.content[0]));
                        if (proper) {
                            out << instance.content;
                        } else {
                            out << "The " << instance.content;
                        }
                        out << " " << copula << " too " << adj << ".";
                        return out.str();
                    }
                }
            }
        }
    }
    return make_error(ErrorCode::NoAnswer, "no instance carries a '" + adj + "' causal feature");
}

Result<std::string> answer_verb(const std::string& verb, const Session& session) {
    for (const auto& resolution : session.resolutions) {
        if (lower(resolution.clause_verb) != lower(verb)) continue;
        if (resolution.pronoun_token_index < 0 ||
            resolution.pronoun_token_index >= static_cast<int>(session.tokens.size())) {
            continue;
        }
        std::ostringstream out;
        out << capitalized(resolution.antecedent_word);
        for (size_t i = resolution.pronoun_token_index + 1; i < session.tokens.size(); ++i) {
            const auto& token = session.tokens[i];
            out << " " << token.value;
            if (token.has(syntax::CommUnitEnd)) break;
        }
        return out.str();
    }
    return make_error(ErrorCode::NoAnswer, "no resolved clause for verb '" + verb + "'");
}

}  // namespace

Result<std::string> answer_question(const std::string& question, const Session& session,
                                    const star::Ontology& ontology) {
    if (!session.has_model) {
        return make_error(ErrorCode::NoModel, "no prior disambiguation in this session");
    }
    auto tokens = syntax::tokenize(question);
    auto units = syntax::segment_communication_units(tokens);
    if (units.empty() || units.front().kind != syntax::CommUnitKind::Sentence) {
        return make_error(ErrorCode::UnsupportedConstruction, "question is not a sentence");
    }
    auto tree = syntax::parse_sentence(units.front(), tokens);
    if (!tree.ok()) return tree.error();
    const auto& unit = tree.value().units.front();
    if (unit.wh_word.empty()) {
        return make_error(ErrorCode::UnsupportedConstruction, "not a supported question form");
    }
    if (!unit.post_verb_adjective.empty()) {
        return answer_adjective(unit.post_verb_adjective,
                                unit.copula.empty() ? "is" : unit.copula, session, ontology);
    }
    if (!unit.main_verb.empty()) {
        return answer_verb(unit.main_verb, session);
    }
    return make_error(ErrorCode::UnsupportedConstruction, "not a supported question form");
}

}  // namespace ross::api
