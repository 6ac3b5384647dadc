#pragma once

#include <map>
#include <string>

#include "ross/resolve/resolution.hpp"

namespace ross::resolve {

// A temporary instance model private to one candidate test. Never aliases
// master-model storage; discarded unless its candidate wins.
struct SandboxContext {
    enum class Side { West, East };
    Side side = Side::West;
    model::InstanceModel sandbox;
    std::map<std::string, std::string> symbols;  // extra$/q$ -> sandbox instance id
};

struct MatchReport {
    bool matched = false;
    std::string forward_behavior;  // the West-side rule for the current verb
    std::string main_behavior;     // the East-side main-clause rule
    std::string nested_behavior;
    std::string west_instance;
    std::string east_instance;
};

// The generate-and-test reasoner: forward-apply a rule for the current verb
// with the candidate as its actor (West, earlier), re-derive the main
// clause's nested consequences (East, later), and test whether the generated
// states meet up. Gated by the caller on ExplanationOfCause + a verb key.
Result<MatchReport> generate_and_test(ResolveContext& ctx,
                                      const engine::PronounFeatureSet& features,
                                      const engine::SpanningInformation& info,
                                      const std::string& candidate_id);

// Builds the West sandbox: clones the candidate in as the rule's actor,
// materializes actee/extras from the co-occurring wrappers and the rule's
// populated-object classes (fresh listener collections exclude the
// candidate), applies the consequent writes. Returns the nested reference
// for forward application through `nested`.
Result<SandboxContext> process_one_forward_rule(
    ResolveContext& ctx, const engine::PronounFeatureSet& features,
    const engine::SpanningInformation& info, const std::string& candidate_id,
    const star::BehaviorClass& rule, const star::BehaviorClassReferenceDef** nested);

// Applies the nested behavior class to the parameter instances bound in the
// sandbox (UnboundParameter when a symbol has no binding).
Result<bool> forward_inference_with_nested(ResolveContext& ctx, SandboxContext& west,
                                           const star::BehaviorClassReferenceDef& ref);

// Clones the spanning info's instances into a fresh East sandbox per
// main-clause rule, applies that rule's nested reference (q$ binds per the
// rule), and runs the matcher; the first success terminates.
Result<MatchReport> east_build_and_match(ResolveContext& ctx,
                                         const engine::SpanningInformation& info,
                                         const std::string& candidate_id,
                                         const SandboxContext& west);

// Every newly written East instance must meet a West instance of a related
// class carrying all its new (type, value) pairs; a West collection with an
// identity set additionally requires the East instance to be a member.
MatchReport match_states(const star::Ontology& ontology,
                         const model::StructuralParentInstance& west_frame,
                         const model::StructuralParentInstance& east_frame,
                         const std::vector<model::AttributeWrite>& east_new_writes);

// WEST/EAST structural-parent table dump for tracing.
std::string dump_sandbox(const SandboxContext& sandbox);

}  // namespace ross::resolve
