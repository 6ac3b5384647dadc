#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>

#include "doctest.h"
#include "engine_util.hpp"
#include "ross/api/pipeline.hpp"

using namespace ross;
using namespace ross::engine;
using test_util::resolved_word;
using test_util::run_engine;

TEST_CASE("trophy document resolves it to trophy") {
    auto output = run_engine("The trophy doesn't fit in the brown suitcase because it's too big.");
    REQUIRE(output.ok());
    CHECK(resolved_word(output.value(), "it") == "trophy");
    REQUIRE(output.value().resolutions.size() == 1);
    CHECK(output.value().resolutions[0].antecedent_word == "trophy");
}

TEST_CASE("a URL-only document produces an empty model and no errors") {
    auto output = run_engine("http://example.org/start\n");
    REQUIRE(output.ok());
    CHECK(output.value().model.contexts.empty());
    CHECK(output.value().resolutions.empty());
    REQUIRE(output.value().skipped_units.size() == 1);
    CHECK(output.value().skipped_units[0] == syntax::CommUnitKind::URL);
}

TEST_CASE("advocated document resolves they to demonstrators") {
    auto output = run_engine(
        "The city councilmen refused the demonstrators a permit because they advocated violence.");
    REQUIRE(output.ok());
    CHECK(resolved_word(output.value(), "they") == "demonstrators");
}

TEST_CASE("main clause of the lift schema fills model, wrappers and verb list") {
    auto output = run_engine("The man did not lift his son because he was too weak.");
    REQUIRE(output.ok());
    const auto& log = output.value().spanning_log;
    REQUIRE(log.size() == 2);  // main clause + because clause
    const SpanningInformation& main_info = log[0];
    REQUIRE(main_info.wrappers.size() == 2);
    REQUIRE(main_info.behaviors_per_verb.size() == 1);
    CHECK(main_info.behaviors_per_verb[0].verb == "lift");
    CHECK(main_info.behaviors_per_verb[0].behaviors ==
          std::vector<std::string>{"NotLift_Weak_BehaviorClass", "NotLift_Heavy_BehaviorClass"});
    REQUIRE(main_info.applied.has_value());
    CHECK(main_info.applied->behavior == "NotLift_Weak_BehaviorClass");

    // The model gained exactly the man and son instances.
    std::set<std::string> contents;
    for (const auto& [tp, frame] : output.value().model.contexts.front().timepoints) {
        for (const auto& instance : frame.components) contents.insert(instance.content);
    }
    CHECK(contents == std::set<std::string>{"man", "son"});
}

TEST_CASE("top spanning info only references instances of its own expression") {
    auto output = run_engine(
        "Joe paid the detective. The man did not lift his son because he was too weak.");
    REQUIRE(output.ok());
    const auto& log = output.value().spanning_log;
    REQUIRE(log.size() == 3);
    std::set<std::string> lift_instances;
    for (const auto& wrapper : log[1].wrappers) lift_instances.insert(wrapper.instance_id);
    // The lift clause's info must not reference Joe or the detective.
    for (const auto& wrapper : log[0].wrappers) {
        CHECK(lift_instances.count(wrapper.instance_id) == 0);
    }
}

TEST_CASE("cataphora lookahead resolves the leading clause pronoun") {
    std::ostringstream trace;
    auto output = run_engine("Because it was too big, the trophy did not fit in the suitcase.",
                             &trace);
    REQUIRE(output.ok());
    CHECK(resolved_word(output.value(), "it") == "trophy");
    CHECK(trace.str().find("Lookahead") != std::string::npos);
    REQUIRE(output.value().resolutions.size() == 1);
    CHECK(output.value().resolutions[0].mechanism == resolve::Mechanism::AdjectiveCausal);
}

TEST_CASE("within-unit pattern does not use the lookahead") {
    std::ostringstream trace;
    auto output = run_engine("The owners of the house sold it.", &trace);
    REQUIRE(output.ok());
    CHECK(resolved_word(output.value(), "it") == "house");
    CHECK(trace.str().find("Lookahead") == std::string::npos);
    REQUIRE(output.value().resolutions.size() == 1);
    CHECK(output.value().resolutions[0].mechanism == resolve::Mechanism::WithinUnit);
}

TEST_CASE("engine output is deterministic across runs") {
    const char* text =
        "The city councilmen refused the demonstrators a permit because they feared violence.";
    auto a = run_engine(text);
    auto b = run_engine(text);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(api::render_annotated(a.value().tokens) == api::render_annotated(b.value().tokens));
    CHECK(model::canonical_dump(a.value().model) == model::canonical_dump(b.value().model));
    REQUIRE(a.value().resolutions.size() == b.value().resolutions.size());
    for (size_t i = 0; i < a.value().resolutions.size(); ++i) {
        CHECK(a.value().resolutions[i].referent_instance ==
              b.value().resolutions[i].referent_instance);
        CHECK(a.value().resolutions[i].mechanism == b.value().resolutions[i].mechanism);
    }
}

TEST_CASE("every applied verb has a nonempty behavior list in its info") {
    for (const char* text :
         {"The trophy doesn't fit in the brown suitcase because it's too big.",
          "The man did not lift his son because he was too heavy.",
          "Joe paid the detective after he received the final report on the case."}) {
        CAPTURE(text);
        auto output = run_engine(text);
        REQUIRE(output.ok());
        for (const auto& info : output.value().spanning_log) {
            if (!info.applied) continue;
            bool listed = false;
            for (const auto& per_verb : info.behaviors_per_verb) {
                if (!per_verb.behaviors.empty() &&
                    std::find(per_verb.behaviors.begin(), per_verb.behaviors.end(),
                              info.applied->behavior) != per_verb.behaviors.end()) {
                    listed = true;
                }
            }
            CHECK(listed);
        }
    }
}

TEST_CASE("spanning stack trims to the low-water mark") {
    SpanningInfoStack stack;
    for (int i = 0; i < 16; ++i) stack.push(SpanningInformation{});
    CHECK(stack.size() == SpanningInfoStack::kLowWater);
    for (size_t i = stack.size(); i <= SpanningInfoStack::kHighWater; ++i) {
        stack.push(SpanningInformation{});
    }
    CHECK(stack.size() >= SpanningInfoStack::kLowWater);
    CHECK(stack.size() <= SpanningInfoStack::kHighWater);
}

TEST_CASE("current walks newest to oldest after a reset") {
    SpanningInfoStack stack;
    for (int i = 0; i < 3; ++i) {
        SpanningInformation info;
        info.context_id = std::to_string(i);
        stack.push(std::move(info));
    }
    stack.reset_current_to_top();
    const SpanningInformation* info = nullptr;
    std::vector<std::string> walked;
    while (stack.current(&info)) walked.push_back(info->context_id);
    CHECK(walked == std::vector<std::string>{"2", "1", "0"});
}

TEST_CASE("pop on an empty stack signals absence") {
    SpanningInfoStack stack;
    SpanningInformation out;
    CHECK(!stack.pop(&out));
}

TEST_CASE("feature set for an attributive because clause") {
    auto tokens = syntax::tokenize("because it is too big");
    (void)tokens;
    auto output = run_engine("The trophy doesn't fit in the brown suitcase because it's too big.");
    REQUIRE(output.ok());
    // Reconstruct the features the driver used for the nested clause.
    auto engine_tokens = syntax::tokenize(
        "The trophy doesn't fit in the brown suitcase because it's too big.");
    auto units = syntax::segment_communication_units(engine_tokens);
    auto tree = syntax::parse_sentence(units[0], engine_tokens);
    REQUIRE(tree.ok());
    auto pe = syntax::tree_to_snf(tree.value());
    REQUIRE(pe.ok());
    const snf::PredicateExpression* nested = nullptr;
    for (const auto& mod : pe.value().modifications) {
        if (mod.nested) nested = mod.nested.get();
    }
    REQUIRE(nested != nullptr);
    PronounFeatureSet features = build_pronoun_feature_set(
        *nested, nested->entity_arguments[0], nested->introductory_word, {});
    CHECK(features.pronoun_word == "it");
    CHECK(features.gender == PronounGender::Nonspecific);
    CHECK(features.cardinality == PronounCardinality::Singular);
    CHECK(features.search_key_adjective == "big");
    CHECK(features.search_key_verb.empty());
    CHECK(features.hypothetical == HypotheticalUsage::ExplanationOfCause);
    CHECK(features.temporal_order == TemporalOrderIndicator::Undetermined);
}

TEST_CASE("feature set for an after clause") {
    auto tokens = syntax::tokenize(
        "Joe paid the detective after he received the final report on the case.");
    auto units = syntax::segment_communication_units(tokens);
    auto tree = syntax::parse_sentence(units[0], tokens);
    REQUIRE(tree.ok());
    auto pe = syntax::tree_to_snf(tree.value());
    REQUIRE(pe.ok());
    const snf::PredicateExpression* nested = nullptr;
    for (const auto& mod : pe.value().modifications) {
        if (mod.nested) nested = mod.nested.get();
    }
    REQUIRE(nested != nullptr);
    PronounFeatureSet features = build_pronoun_feature_set(
        *nested, nested->entity_arguments[0], nested->introductory_word, {});
    CHECK(features.pronoun_word == "he");
    CHECK(features.gender == PronounGender::Male);
    CHECK(features.cardinality == PronounCardinality::Singular);
    CHECK(features.search_key_verb == "received");
    CHECK(features.search_key_adjective.empty());
    CHECK(features.temporal_order == TemporalOrderIndicator::Preceding);
    CHECK(features.hypothetical == HypotheticalUsage::None);
}

TEST_CASE("feature set for the advocated clause carries violence as co-occurring") {
    auto output = run_engine(
        "The city councilmen refused the demonstrators a permit because they advocated violence.");
    REQUIRE(output.ok());
    // The because-clause info holds the resolved pronoun plus violence.
    const auto& log = output.value().spanning_log;
    REQUIRE(log.size() == 2);
    bool has_violence = false;
    for (const auto& wrapper : log[1].wrappers) {
        const auto* instance = output.value().model.find_instance(wrapper.instance_id);
        if (instance && instance->content == "violence") has_violence = true;
    }
    CHECK(has_violence);
}

TEST_CASE("every resolution's token index carries the resolved word") {
    for (const char* text :
         {"The trophy doesn't fit in the brown suitcase because it's too big.",
          "Joe paid the detective after he delivered the final report on the case.",
          "The city councilmen refused the demonstrators a permit because they advocated "
          "violence."}) {
        CAPTURE(text);
        auto output = run_engine(text);
        REQUIRE(output.ok());
        REQUIRE(!output.value().resolutions.empty());
        for (const auto& resolution : output.value().resolutions) {
            REQUIRE(resolution.pronoun_token_index >= 0);
            const auto& token = output.value().tokens[resolution.pronoun_token_index];
            CHECK(token.resolved == resolution.antecedent_word);
            CHECK(token.value == resolution.pronoun_word);
        }
    }
}
