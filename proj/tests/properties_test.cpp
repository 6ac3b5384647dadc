#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "engine_util.hpp"
#include "ross/api/pipeline.hpp"
#include "ross/model/xml.hpp"
#include "ross/resolve/reasoning.hpp"
#include "ross/snf/text.hpp"
#include "ross/star/parser.hpp"

using namespace ross;
using test_util::corpus_ontology;
using test_util::run_engine;

namespace {

// Random ontology with inheritance edges pointing only at lower indices: a
// DAG by construction.
star::StarDocument random_dag(std::mt19937& rng, int classes) {
    star::StarDocument doc;
    std::uniform_int_distribution<int> fanout(0, 3);
    for (int i = 0; i < classes; ++i) {
        star::ObjectFrameClassDef def;
        def.name = "C" + std::to_string(i);
        int edges = i == 0 ? 0 : fanout(rng);
        std::uniform_int_distribution<int> pick(0, i - 1);
        for (int e = 0; e < edges; ++e) {
            std::string higher = "C" + std::to_string(pick(rng));
            if (std::find(def.higher_classes.begin(), def.higher_classes.end(), higher) ==
                def.higher_classes.end()) {
                def.higher_classes.push_back(higher);
            }
        }
        doc.class_defs.push_back(std::move(def));
    }
    return doc;
}

const char* kSchemas[] = {
    "The trophy doesn't fit in the brown suitcase because it's too big.",
    "The trophy doesn't fit in the brown suitcase because it's too small.",
    "The man didn't lift his son because he was too weak.",
    "The man didn't lift his son because he was too heavy.",
    "Joe paid the detective after he received the final report on the case.",
    "Joe paid the detective after he delivered the final report on the case.",
    "The city councilmen refused the demonstrators a permit because they feared violence.",
    "The city councilmen refused the demonstrators a permit because they advocated violence.",
};

std::string probability_ontology(double actor_probability, double requestor_probability) {
    std::ostringstream out;
    out << R"(
BehaviorClass "TieActorRuleBehaviorClass"
(
  <CausalRule val = "true" />
  Dictionary ( English ( { "drop", "dropped", "dropped", "drops", "dropping" } ););
  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <Attribute ref = RefusingState val = "NotRefusing" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    BehaviorClassReference
    (
      <Probability expr = )" << actor_probability << R"( />
      <BehaviorClass ref = AnticipateHarmfulEventBehaviorClass />
      <ParameterActor ref = PersonObjectFrameClass expr = q$ />
      <ParameterActee ref = CognitiveRepresentationOfHarmfulEvent />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <Attribute ref = PassiveIsRefusedState val = "NotRefused" />
    );
  );
);
BehaviorClass "TieRequestorRuleBehaviorClass"
(
  <CausalRule val = "true" />
  Dictionary ( English ( { "drop", "dropped", "dropped", "drops", "dropping" } ););
  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <Attribute ref = RefusingState val = "NotRefusing" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <Attribute ref = PassiveIsRefusedState val = "NotRefused" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    BehaviorClassReference
    (
      <Probability expr = )" << requestor_probability << R"( />
      <BehaviorClass ref = AnticipateHarmfulEventBehaviorClass />
      <ParameterActor ref = PersonObjectFrameClass expr = q$ />
      <ParameterActee ref = CognitiveRepresentationOfHarmfulEvent />
    );
  );
);
)";
    return out.str();
}

// Winner of the two-rule probability tie-break under the given probabilities.
std::string tie_break_winner(double actor_probability, double requestor_probability) {
    std::vector<star::StarDocument> docs;
    for (const char* name :
         {"upper.star", "trophy_suitcase.star", "person_lifts.star", "pay_deliver.star"}) {
        auto doc = star::parse_star(
            test_util::read_file(test_util::source_path("data/ontology/") + name), name);
        REQUIRE(doc.ok());
        docs.push_back(doc.take());
    }
    auto extra =
        star::parse_star(probability_ontology(actor_probability, requestor_probability), "extra");
    REQUIRE(extra.ok());
    docs.push_back(extra.take());
    auto linked = star::link_ontology(docs);
    REQUIRE(linked.ok());
    const star::Ontology& ont = linked.value();

    model::InstanceModel model;
    std::string councilmen =
        model::instantiate_object(model, ont, "CityCouncilmanObjectFrameClass", "councilmen", true)
            .take();
    std::string demonstrators =
        model::instantiate_object(model, ont, "DemonstratorObjectFrameClass", "demonstrators", true)
            .take();
    model::RoleBindings bindings;
    bindings.actors = {councilmen};
    bindings.actees = {demonstrators};
    auto applied = model::apply_behavior_class(
        model, ont, *ont.find_behavior("TieActorRuleBehaviorClass"), bindings, "T01");
    REQUIRE(applied.ok());

    engine::SpanningInformation info;
    info.wrappers = {{councilmen, snf::SemanticRole::Actor, snf::ExtraSubRole::None,
                      snf::SyntacticRole::Subject, 0},
                     {demonstrators, snf::SemanticRole::Actee, snf::ExtraSubRole::None,
                      snf::SyntacticRole::DirectObject, 0}};
    info.behaviors_per_verb = {
        {"dropped", false, {"TieActorRuleBehaviorClass", "TieRequestorRuleBehaviorClass"}}};
    info.applied = applied.take();
    engine::SpanningInfoStack stack;
    stack.push(std::move(info));

    std::vector<Diagnostic> warnings;
    resolve::ResolveContext ctx;
    ctx.stack = &stack;
    ctx.model = &model;
    ctx.ontology = &ont;
    ctx.warnings = &warnings;

    engine::PronounFeatureSet features;
    features.pronoun_word = "they";
    features.cardinality = engine::PronounCardinality::Plural;
    features.search_key_verb = "feared";
    features.semantic_role = snf::SemanticRole::Actor;
    auto match = resolve::exploratory_search_one_info(ctx, stack.from_top(0), features);
    REQUIRE(match.ok());
    const model::ObjectInstance* instance = model.find_instance(match.value().instance_id);
    REQUIRE(instance != nullptr);
    return instance->content;
}

}  // namespace

TEST_CASE("random inheritance DAGs link; injected back-edges cycle") {
    std::mt19937 rng(20140814);
    for (int round = 0; round < 25; ++round) {
        int classes = 3 + static_cast<int>(rng() % 12);
        star::StarDocument doc = random_dag(rng, classes);
        auto linked = star::link_ontology({doc});
        REQUIRE(linked.ok());
        // Closure is acyclic and transitively closed.
        for (const auto& [name, cls] : linked.value().classes()) {
            const auto& ancestors = linked.value().ancestors(name);
            CHECK(std::find(ancestors.begin(), ancestors.end(), name) == ancestors.end());
            for (const auto& a : ancestors) {
                for (const auto& deeper : linked.value().ancestors(a)) {
                    CHECK(linked.value().is_ancestor_or_equal(deeper, name));
                }
            }
        }

        // Inject a guaranteed two-node cycle.
        if (classes >= 2) {
            star::StarDocument cyclic = random_dag(rng, classes);
            int a = static_cast<int>(rng() % (classes - 1));
            int b = a + 1 + static_cast<int>(rng() % (classes - a - 1));
            auto& def_b = std::get<star::ObjectFrameClassDef>(cyclic.class_defs[b]);
            def_b.higher_classes.push_back("C" + std::to_string(a));
            auto& def_a = std::get<star::ObjectFrameClassDef>(cyclic.class_defs[a]);
            def_a.higher_classes.push_back("C" + std::to_string(b));
            auto linked_cyclic = star::link_ontology({cyclic});
            REQUIRE(!linked_cyclic.ok());
            CHECK(linked_cyclic.error().code == ErrorCode::CycleDetected);
        }
    }
}

TEST_CASE("semantic normal form round-trips over the corpus") {
    for (const char* text : kSchemas) {
        CAPTURE(text);
        auto tokens = syntax::tokenize(text);
        auto units = syntax::segment_communication_units(tokens);
        auto tree = syntax::parse_sentence(units[0], tokens);
        REQUIRE(tree.ok());
        auto pe = syntax::tree_to_snf(tree.value());
        REQUIRE(pe.ok());
        auto reparsed = snf::parse_snf(snf::serialize_snf(pe.value()));
        REQUIRE(reparsed.ok());
        CHECK(snf::structurally_equal(pe.value(), reparsed.value()));
    }
}

TEST_CASE("stack size stays within the trim band") {
    std::mt19937 rng(7);
    for (int round = 0; round < 10; ++round) {
        engine::SpanningInfoStack stack;
        int pushes = static_cast<int>(rng() % 40);
        for (int i = 0; i < pushes; ++i) {
            stack.push(engine::SpanningInformation{});
            CHECK(stack.size() <= engine::SpanningInfoStack::kHighWater);
            if (i >= static_cast<int>(engine::SpanningInfoStack::kLowWater)) {
                CHECK(stack.size() >= engine::SpanningInfoStack::kLowWater);
            }
        }
    }
}

TEST_CASE("failed generate-and-test leaves the master model bit-identical") {
    const auto& ont = corpus_ontology();
    model::InstanceModel model;
    std::string councilmen =
        model::instantiate_object(model, ont, "CityCouncilmanObjectFrameClass", "councilmen", true)
            .take();
    std::string demonstrators =
        model::instantiate_object(model, ont, "DemonstratorObjectFrameClass", "demonstrators", true)
            .take();
    std::string permit =
        model::instantiate_object(model, ont, "PermitObjectFrameClass", "permit", false).take();
    std::string violence = model::instantiate_object(
                               model, ont, "CommunicationUnitProposedActionObjectFrameClass",
                               "violence", false)
                               .take();
    model::RoleBindings bindings;
    bindings.actors = {councilmen};
    bindings.actees = {demonstrators};
    bindings.extras = {permit};
    auto applied = model::apply_behavior_class(
        model, ont, *ont.find_behavior("RefusingSomethingDueToFearBehaviorClass"), bindings, "T01");
    REQUIRE(applied.ok());

    engine::SpanningInformation info;
    info.wrappers = {{councilmen, snf::SemanticRole::Actor, snf::ExtraSubRole::None,
                      snf::SyntacticRole::Subject, 0},
                     {demonstrators, snf::SemanticRole::Actee, snf::ExtraSubRole::None,
                      snf::SyntacticRole::DirectObject, 0},
                     {permit, snf::SemanticRole::Extra, snf::ExtraSubRole::IndirectObject,
                      snf::SyntacticRole::IndirectObject, 0}};
    info.behaviors_per_verb = {{"refused", false, {"RefusingSomethingDueToFearBehaviorClass"}}};
    info.applied = applied.take();
    engine::SpanningInfoStack stack;
    stack.push(std::move(info));

    std::vector<Diagnostic> warnings;
    resolve::ResolveContext ctx;
    ctx.stack = &stack;
    ctx.model = &model;
    ctx.ontology = &ont;
    ctx.warnings = &warnings;

    engine::PronounFeatureSet features;
    features.pronoun_word = "they";
    features.cardinality = engine::PronounCardinality::Plural;
    features.search_key_verb = "advocated";
    features.semantic_role = snf::SemanticRole::Actor;
    features.hypothetical = engine::HypotheticalUsage::ExplanationOfCause;
    features.co_occurring = {{violence, snf::SemanticRole::Actee, snf::ExtraSubRole::None,
                              snf::SyntacticRole::DirectObject, 0}};

    std::string before = model::canonical_dump(model);
    auto failed = resolve::generate_and_test(ctx, features, stack.from_top(0), councilmen);
    REQUIRE(failed.ok());
    CHECK(!failed.value().matched);
    CHECK(model::canonical_dump(model) == before);
}

TEST_CASE("uniform probability scaling never changes the winner") {
    std::string reference = tie_break_winner(0.9, 0.4);
    CHECK(reference == "councilmen");
    for (double scale : {0.25, 0.5, 1.0}) {
        CAPTURE(scale);
        CHECK(tie_break_winner(0.9 * scale, 0.4 * scale) == reference);
    }
}

TEST_CASE("repeated engine runs are identical") {
    for (const char* text : kSchemas) {
        CAPTURE(text);
        auto a = run_engine(text);
        auto b = run_engine(text);
        REQUIRE(a.ok());
        REQUIRE(b.ok());
        CHECK(api::render_annotated(a.value().tokens) == api::render_annotated(b.value().tokens));
        CHECK(model::export_xml(a.value().model) == model::export_xml(b.value().model));
        CHECK(model::canonical_dump(a.value().model) == model::canonical_dump(b.value().model));
    }
}

TEST_CASE("every stored attribute pair passes the value-set check") {
    const auto& ont = corpus_ontology();
    for (const char* text : kSchemas) {
        CAPTURE(text);
        auto output = run_engine(text);
        REQUIRE(output.ok());
        for (const auto& context : output.value().model.contexts) {
            for (const auto& [tp, frame] : context.timepoints) {
                for (const auto& instance : frame.components) {
                    for (const auto& attr : instance.attributes) {
                        const auto* def =
                            ont.find_attribute_type(instance.class_name, attr.type);
                        CAPTURE(instance.unique_id);
                        CAPTURE(attr.type);
                        REQUIRE(def != nullptr);
                        bool legal = std::any_of(
                            def->values.begin(), def->values.end(),
                            [&](const star::AttributeValueDef& v) { return v.name == attr.value; });
                        CHECK(legal);
                    }
                }
            }
        }
    }
}
