#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ross/star/ontology.hpp"
#include "ross/star/parser.hpp"
#include "test_util.hpp"

using namespace ross;
using namespace ross::star;
using test_util::corpus_ontology;

namespace {

std::vector<std::string> names(const std::vector<const BehaviorClass*>& list) {
    std::vector<std::string> out;
    for (const auto* b : list) out.push_back(b->def.name);
    return out;
}

Result<Ontology> link_text(const std::string& text) {
    auto doc = parse_star(text);
    REQUIRE(doc.ok());
    return link_ontology({doc.value()});
}

}  // namespace

TEST_CASE("partial PersonObjectFrameClass definitions merge") {
    const Ontology& ont = corpus_ontology();
    const ObjectFrameClass* person = ont.find_class("PersonObjectFrameClass");
    REQUIRE(person != nullptr);
    std::set<std::string> attrs;
    for (const auto& a : person->attribute_types) attrs.insert(a.name);
    CHECK(attrs.count("FunctionalAttributeType1"));
    CHECK(attrs.count("FunctionalAttributeType2"));
    CHECK(attrs.count("LiftingState"));
    CHECK(attrs.count("PassiveIsLiftedState"));
}

TEST_CASE("trophy ancestors include enclosable and everyday tiers") {
    const Ontology& ont = corpus_ontology();
    const auto& anc = ont.ancestors("TrophyObjectFrameClass");
    CHECK(std::count(anc.begin(), anc.end(), "EnclosableObjectObjectFrameClass") == 1);
    CHECK(std::count(anc.begin(), anc.end(), "EverydayObjectFrameClass") == 1);
}

TEST_CASE("ancestor sets are transitively closed") {
    const Ontology& ont = corpus_ontology();
    for (const auto& [name, cls] : ont.classes()) {
        for (const auto& a : ont.ancestors(name)) {
            for (const auto& deeper : ont.ancestors(a)) {
                CAPTURE(name);
                CAPTURE(a);
                CAPTURE(deeper);
                CHECK(ont.is_ancestor_or_equal(deeper, name));
            }
        }
    }
}

TEST_CASE("self-inheritance is a cycle") {
    auto linked = link_text("ObjectFrameClass \"A\" ( HigherClasses ( { \"A\" } ); );");
    REQUIRE(!linked.ok());
    CHECK(linked.error().code == ErrorCode::CycleDetected);
}

TEST_CASE("two-node cycle reports its path") {
    auto linked = link_text(
        "ObjectFrameClass \"A\" ( HigherClasses ( { \"B\" } ); );"
        "ObjectFrameClass \"B\" ( HigherClasses ( { \"A\" } ); );");
    REQUIRE(!linked.ok());
    CHECK(linked.error().code == ErrorCode::CycleDetected);
    CHECK(linked.error().message.find("->") != std::string::npos);
}

TEST_CASE("unresolved higher class is rejected") {
    auto linked = link_text("ObjectFrameClass \"A\" ( HigherClasses ( { \"Nope\" } ); );");
    REQUIRE(!linked.ok());
    CHECK(linked.error().code == ErrorCode::UnresolvedRef);
    CHECK(linked.error().message.find("Nope") != std::string::npos);
}

TEST_CASE("conflicting duplicate attribute type is rejected") {
    auto linked = link_text(
        "ObjectFrameClass \"A\" ( AttributeTypes ( AttributeType \"T\" ("
        "  <SuperType val = \"Qualitative\"/> \"Values\" ( { \"NotX\", \"X\" } ); ); ); );"
        "ObjectFrameClass \"A\" ( AttributeTypes ( AttributeType \"T\" ("
        "  <SuperType val = \"Qualitative\"/> \"Values\" ( { \"NotY\", \"Y\" } ); ); ); );");
    REQUIRE(!linked.ok());
    CHECK(linked.error().code == ErrorCode::DuplicateAttributeType);
}

TEST_CASE("val binding outside the value set is rejected") {
    auto linked = link_text(
        "ObjectFrameClass \"A\" ( AttributeTypes ( AttributeType \"T\" ("
        "  <SuperType val = \"Qualitative\"/> \"Values\" ( { \"NotX\", \"X\" } ); ); ); );"
        "BehaviorClass \"B\" ( Dictionary ( English ( { \"b\" } ); );"
        "  PriorStates ( PopulatedObjectClass \"AntecedentActor\" ("
        "    <ObjectFrameClass ref = A /> <Attribute ref = T val = \"Purple\" /> ); ); );");
    REQUIRE(!linked.ok());
    CHECK(linked.error().code == ErrorCode::IllegalValueBinding);
}

TEST_CASE("lookup_noun exact forms") {
    const Ontology& ont = corpus_ontology();

    auto trophys = ont.lookup_noun("trophys");
    REQUIRE(trophys.size() == 1);
    CHECK(trophys[0]->name == "TrophyObjectFrameClass");
    CHECK(ont.is_plural_form(*trophys[0], "trophys"));

    auto suitcase = ont.lookup_noun("suitcase");
    REQUIRE(suitcase.size() == 1);
    CHECK(suitcase[0]->name == "SuitcaseObjectFrameClass");
    CHECK(!ont.is_plural_form(*suitcase[0], "suitcase"));

    CHECK(ont.lookup_noun("zzz").empty());
}

TEST_CASE("two-word nouns need the prior word") {
    const Ontology& ont = corpus_ontology();
    CHECK(ont.lookup_noun("object").empty());
    auto container = ont.lookup_noun("object", "container");
    REQUIRE(container.size() == 1);
    CHECK(container[0]->name == "ContainerObjectObjectFrameClass");
}

TEST_CASE("search matches lift rules for man and son") {
    const Ontology& ont = corpus_ontology();
    auto rules = ont.search_behavior_classes("lift", true, {"ManObjectFrameClass"},
                                             {"SonObjectFrameClass"}, {});
    CHECK(names(rules) ==
          std::vector<std::string>{"NotLift_Weak_BehaviorClass", "NotLift_Heavy_BehaviorClass"});
}

TEST_CASE("search matches fit rules for trophy into suitcase") {
    const Ontology& ont = corpus_ontology();
    auto rules = ont.search_behavior_classes("fit", true, {"TrophyObjectFrameClass"},
                                             {"SuitcaseObjectFrameClass"}, {});
    CHECK(names(rules) ==
          std::vector<std::string>{"NotFit_Big_BehaviorClass", "NotFit_Small_BehaviorClass"});
}

TEST_CASE("search rejects reversed roles") {
    const Ontology& ont = corpus_ontology();
    auto rules = ont.search_behavior_classes("fit", false, {"SuitcaseObjectFrameClass"},
                                             {"TrophyObjectFrameClass"}, {});
    CHECK(rules.empty());
}

TEST_CASE("search with empty roles equals verb lookup filtered by negation") {
    const Ontology& ont = corpus_ontology();
    for (const char* verb : {"fit", "lift", "pay", "refused", "feared", "advocated"}) {
        for (bool negation : {false, true}) {
            auto searched = ont.search_behavior_classes(verb, negation, {}, {}, {});
            std::vector<const BehaviorClass*> indexed;
            for (const auto* b : ont.behaviors_for_verb(verb)) {
                if (b->def.negation == negation) indexed.push_back(b);
            }
            CAPTURE(verb);
            CAPTURE(negation);
            CHECK(names(searched) == names(indexed));
        }
    }
}

TEST_CASE("nested_reference picks the first prior-state reference") {
    const Ontology& ont = corpus_ontology();

    const BehaviorClass* pay = ont.find_behavior("PayAfterReceivingBehaviorClass");
    REQUIRE(pay != nullptr);
    const auto* ref = nested_reference(*pay);
    REQUIRE(ref != nullptr);
    CHECK(ref->behavior == "ReceiveBehaviorClass");
    CHECK(ref->actor->identity == "q$");

    const BehaviorClass* weak = ont.find_behavior("NotLift_Weak_BehaviorClass");
    REQUIRE(weak != nullptr);
    CHECK(nested_reference(*weak) == nullptr);

    const BehaviorClass* refuse = ont.find_behavior("RefusingSomethingDueToFearBehaviorClass");
    REQUIRE(refuse != nullptr);
    const auto* anticipate = nested_reference(*refuse);
    REQUIRE(anticipate != nullptr);
    CHECK(anticipate->behavior == "AnticipateHarmfulEventBehaviorClass");
}

TEST_CASE("identity_role reports the q$-carrying role") {
    const Ontology& ont = corpus_ontology();
    RuleRole role;
    REQUIRE(identity_role(*ont.find_behavior("PayAfterReceivingBehaviorClass"), "q$", &role));
    CHECK(role == RuleRole::Actor);
    REQUIRE(identity_role(*ont.find_behavior("PersonIsPaidAfterDeliveringBehaviorClass"), "q$", &role));
    CHECK(role == RuleRole::Actee);
}

TEST_CASE("every dictionary word is reachable through an index") {
    const Ontology& ont = corpus_ontology();
    for (const auto& [name, cls] : ont.classes()) {
        for (const auto& word : cls.dictionary) {
            CAPTURE(name);
            CAPTURE(word);
            std::vector<const ObjectFrameClass*> hits;
            if (cls.dictionary_prior.empty()) {
                hits = ont.lookup_noun(word);
            } else {
                hits = ont.lookup_noun(word, cls.dictionary_prior.front());
            }
            bool reachable = std::any_of(hits.begin(), hits.end(),
                                         [&](const ObjectFrameClass* c) { return c->name == name; });
            CHECK(reachable);
        }
    }
    for (const auto& [name, behavior] : ont.behaviors()) {
        for (const auto& form : behavior.def.verb_dictionary) {
            auto hits = ont.behaviors_for_verb(form);
            bool reachable = std::any_of(hits.begin(), hits.end(), [&](const BehaviorClass* b) {
                return b->def.name == name;
            });
            CAPTURE(name);
            CAPTURE(form);
            CHECK(reachable);
        }
    }
}

TEST_CASE("effective attribute types resolve through inheritance") {
    const Ontology& ont = corpus_ontology();
    std::string declaring;
    const AttributeTypeDef* attr =
        ont.find_attribute_type("TrophyObjectFrameClass", "FittingState", &declaring);
    REQUIRE(attr != nullptr);
    CHECK(declaring == "EnclosableObjectObjectFrameClass");
    CHECK(attr->values.front().name == "NotFitting");

    attr = ont.find_attribute_type("ManObjectFrameClass", "LiftingState", &declaring);
    REQUIRE(attr != nullptr);
    CHECK(declaring == "PersonObjectFrameClass");
}

TEST_CASE("gender is declared on man and son, inherited by neither") {
    const Ontology& ont = corpus_ontology();
    CHECK(ont.effective_gender("ManObjectFrameClass") == "Male");
    CHECK(ont.effective_gender("SonObjectFrameClass") == "Male");
    CHECK(ont.effective_gender("DemonstratorObjectFrameClass") == "");
    CHECK(ont.effective_gender("SuitcaseObjectFrameClass") == "");
}

TEST_CASE("noun lookups never reach behavior classes and verb lookups never reach nouns") {
    const Ontology& ont = corpus_ontology();
    // "fit" is a verb dictionary form only.
    CHECK(ont.lookup_noun("fit").empty());
    CHECK(ont.lookup_noun("refused").empty());
    // "trophy" is a noun dictionary form only.
    CHECK(ont.behaviors_for_verb("trophy").empty());
    CHECK(ont.behaviors_for_verb("councilmen").empty());
}
