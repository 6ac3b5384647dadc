#pragma once

#include <ostream>
#include <string>

#include "ross/engine/driver.hpp"
#include "ross/star/ontology.hpp"

namespace ross::api {

struct DisambiguationOutcome {
    std::string annotated;  // tokens space-joined, pronouns as pronoun(antecedent)
    engine::EngineOutput output;
};

// One loaded ontology plus the operations over it. Immutable after load;
// each disambiguation run owns its private engine state.
class Pipeline {
public:
    static Result<Pipeline> load(const std::string& ontology_dir);
    explicit Pipeline(star::Ontology ontology) : ontology_(std::move(ontology)) {}

    const star::Ontology& ontology() const { return ontology_; }

    Result<DisambiguationOutcome> disambiguate(const std::string& text,
                                               std::ostream* trace = nullptr) const;

private:
    star::Ontology ontology_;
};

// Single-space token join; resolved pronoun tokens render `pronoun(antecedent)`.
std::string render_annotated(const std::vector<syntax::TokenNode>& tokens);

}  // namespace ross::api
