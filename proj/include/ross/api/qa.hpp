#pragma once

#include <string>
#include <vector>

#include "ross/diag.hpp"
#include "ross/model/instance.hpp"
#include "ross/resolve/resolution.hpp"
#include "ross/star/ontology.hpp"
#include "ross/syntax/token.hpp"

namespace ross::api {

// Retained output of the last disambiguation, for follow-up question
// answering. Without a model, questions yield NoModel, never an invented
// answer.
struct Session {
    std::string id;
    bool has_model = false;
    model::InstanceModel model;
    std::vector<resolve::ResolutionResult> resolutions;
    std::vector<syntax::TokenNode> tokens;
};

// "What is too ADJ ?" / "Who was too ADJ ?" search the instance model for
// the causal-feature carrier; "Who VERB-ed ...?" answers from the clause whose
// pronoun resolution matched that verb.
Result<std::string> answer_question(const std::string& question, const Session& session,
                                    const star::Ontology& ontology);

}  // namespace ross::api
