#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ross/model/apply.hpp"
#include "ross/snf/pe.hpp"

namespace ross::engine {

// Links one prior meaning unit's instance to its semantic/syntactic roles.
struct ObjectInstanceSemanticWrapper {
    std::string instance_id;
    snf::SemanticRole semantic_role = snf::SemanticRole::Actor;
    snf::ExtraSubRole extra_sub_role = snf::ExtraSubRole::None;
    snf::SyntacticRole syntactic_role = snf::SyntacticRole::Subject;
    int predicate_ordinal = 0;
};

struct BehaviorClassesPerVerb {
    std::string verb;  // surface form, e.g. "refused"
    bool negation = false;
    std::vector<std::string> behaviors;  // search order
};

struct SpanningInformation {
    snf::DiscourseContext discourse = snf::DiscourseContext::None;
    std::string context_id;
    std::string structural_parent_class;
    std::vector<ObjectInstanceSemanticWrapper> wrappers;
    std::vector<BehaviorClassesPerVerb> behaviors_per_verb;
    std::optional<model::AppliedRecord> applied;
};

// Bounded LIFO of spanning infos with a non-destructive cursor. Trim keeps
// the size within [10, 15] meaning units.
class SpanningInfoStack {
public:
    static constexpr size_t kHighWater = 15;
    static constexpr size_t kLowWater = 10;

    void push(SpanningInformation info);
    bool pop(SpanningInformation* out);

    // Current() walks newest to oldest without popping; returns false when
    // the walk is exhausted.
    bool current(const SpanningInformation** out);
    void reset_current_to_top();
    void discard_all();

    size_t size() const { return items_.size(); }
    const SpanningInformation& from_top(size_t n) const { return items_[items_.size() - 1 - n]; }

private:
    std::deque<SpanningInformation> items_;  // back = newest
    size_t cursor_ = 0;                      // offset from the top
};

}  // namespace ross::engine
