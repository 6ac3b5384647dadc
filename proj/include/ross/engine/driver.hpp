#pragma once

#include <ostream>
#include <vector>

#include "ross/engine/features.hpp"
#include "ross/engine/spanning.hpp"
#include "ross/model/instance.hpp"
#include "ross/resolve/resolution.hpp"
#include "ross/snf/pe.hpp"
#include "ross/star/ontology.hpp"
#include "ross/syntax/segment.hpp"
#include "ross/syntax/token.hpp"

namespace ross::engine {

struct ParsedUnit {
    syntax::CommunicationUnit unit;
    std::vector<snf::PredicateExpression> roots;  // empty for non-sentence kinds
};

struct EngineOutput {
    std::vector<syntax::TokenNode> tokens;  // with resolved-word fills
    model::InstanceModel model;
    std::vector<resolve::ResolutionResult> resolutions;
    std::vector<syntax::CommUnitKind> skipped_units;
    std::vector<Diagnostic> warnings;
    std::vector<SpanningInformation> spanning_log;  // pushes, in order
};

// Iterates communication units and their predicate expressions in syntactic
// order: entity resolution and instantiation for non-pronoun arguments,
// pronoun dispatch with a one-expression lookahead retry for cataphora,
// behavior-class selection and application, one spanning info pushed per
// processed expression.
Result<EngineOutput> engine_driver(const std::vector<ParsedUnit>& units,
                                   std::vector<syntax::TokenNode> tokens,
                                   const star::Ontology& ontology,
                                   std::ostream* trace = nullptr);

// "Declarative-PastSimple" style label for the instance-model export.
std::string discourse_label(snf::DiscourseContext discourse);

}  // namespace ross::engine
