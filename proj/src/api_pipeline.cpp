#include "ross/api/pipeline.hpp"

#include <sstream>

#include "ross/syntax/parser.hpp"
#include "ross/syntax/to_snf.hpp"

namespace ross::api {

Result<Pipeline> Pipeline::load(const std::string& ontology_dir) {
    auto ontology = star::load_ontology_dir(ontology_dir);
    if (!ontology.ok()) return ontology.error();
    return Pipeline(ontology.take());
}

Result<DisambiguationOutcome> Pipeline::disambiguate(const std::string& text,
                                                     std::ostream* trace) const {
    auto tokens = syntax::tokenize(text);
    auto units = syntax::segment_communication_units(tokens);
    std::vector<engine::ParsedUnit> parsed;
    for (const auto& unit : units) {
        engine::ParsedUnit item;
        item.unit = unit;
        if (unit.kind == syntax::CommUnitKind::Sentence) {
            auto tree = syntax::parse_sentence(unit, tokens);
            if (!tree.ok()) return tree.error();
            auto pe = syntax::tree_to_snf(tree.value());
            if (!pe.ok()) return pe.error();
            item.roots.push_back(pe.take());
        }
        parsed.push_back(std::move(item));
    }
    auto output = engine::engine_driver(parsed, std::move(tokens), ontology_, trace);
    if (!output.ok()) return output.error();
    DisambiguationOutcome outcome;
    outcome.output = output.take();
    outcome.annotated = render_annotated(outcome.output.tokens);
    return outcome;
}

std::string render_annotated(const std::vector<syntax::TokenNode>& tokens) {
    std::ostringstream out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out << " ";
        out << tokens[i].value;
        if (!tokens[i].resolved.empty()) out << "(" << tokens[i].resolved << ")";
    }
    return out.str();
}

}  // namespace ross::api
