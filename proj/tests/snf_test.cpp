#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ross/snf/pe.hpp"
#include "ross/snf/text.hpp"
#include "ross/syntax/parser.hpp"
#include "ross/syntax/segment.hpp"
#include "ross/syntax/to_snf.hpp"
#include "ross/syntax/token.hpp"

using namespace ross;
using namespace ross::snf;

namespace {

PredicateExpression pe_for(const std::string& text) {
    auto tokens = syntax::tokenize(text);
    auto units = syntax::segment_communication_units(tokens);
    REQUIRE(units.size() == 1);
    auto tree = syntax::parse_sentence(units[0], tokens);
    REQUIRE(tree.ok());
    auto pe = syntax::tree_to_snf(tree.value());
    REQUIRE(pe.ok());
    return pe.take();
}

const char* kCouncilmen =
    "The city councilmen refused the demonstrators a permit because they feared violence.";
const char* kTrophy =
    "The trophy doesn't fit in the brown suitcase because it's too big.";
const char* kLift = "The man did not lift his son because he was too weak.";

}  // namespace

TEST_CASE("councilmen expression passes validation") {
    PredicateExpression pe = pe_for(kCouncilmen);
    CHECK(validate_pe(pe).empty());
    REQUIRE(pe.specifiers.size() == 1);
    CHECK(pe.specifiers[0].main_verb == "refused");
    CHECK(pe.specifiers[0].role == PredicateRole::VerbTakingEntityArgument);
    CHECK(pe.specifiers[0].discourse == DiscourseContext::DeclarativePastSimple);
}

TEST_CASE("dangling predicate ordinal is reported") {
    PredicateExpression pe = pe_for(kLift);
    pe.entity_arguments[0].predicate_ordinal = 3;
    auto diags = validate_pe(pe);
    CHECK(diags.size() == 1);
}

TEST_CASE("extra sub-role on an actor argument is reported") {
    PredicateExpression pe = pe_for(kLift);
    pe.entity_arguments[0].extra_sub_role = ExtraSubRole::Around;
    auto diags = validate_pe(pe);
    CHECK(diags.size() == 1);
}

TEST_CASE("flatten order on a trailing adverbial clause") {
    PredicateExpression pe = pe_for("The man could not lift his son because he was so weak.");
    auto order = flatten_pe_order(pe);
    REQUIRE(order.size() == 2);
    CHECK(order[0] == &pe);
    CHECK(order[1]->introductory_word == "because");
    CHECK(order[1]->specifiers[0].role == PredicateRole::ToBeAttributive);
}

TEST_CASE("flatten order of a single clause is the clause itself") {
    PredicateExpression pe = pe_for("Joe paid the detective.");
    auto order = flatten_pe_order(pe);
    REQUIRE(order.size() == 1);
    CHECK(order[0] == &pe);
}

TEST_CASE("leading adverbial clause comes first in flatten order") {
    PredicateExpression pe = pe_for("Before the first light dawned, Joe ran several miles.");
    auto order = flatten_pe_order(pe);
    REQUIRE(order.size() == 2);
    CHECK(order[0]->introductory_word == "before");
    CHECK(order[1] == &pe);
}

TEST_CASE("flatten order is a permutation of all reachable expressions") {
    for (const char* text : {kCouncilmen, kTrophy, kLift,
                             "Because it was too big, the trophy did not fit in the suitcase."}) {
        CAPTURE(text);
        PredicateExpression pe = pe_for(text);
        auto order = flatten_pe_order(pe);
        std::set<const PredicateExpression*> seen(order.begin(), order.end());
        CHECK(seen.size() == order.size());
        CHECK(seen.count(&pe) == 1);
        for (const auto& mod : pe.modifications) {
            if (mod.nested) CHECK(seen.count(mod.nested.get()) == 1);
        }
    }
}

TEST_CASE("serialize / parse round trip") {
    for (const char* text : {kCouncilmen, kTrophy, kLift,
                             "The man was bitten by the dog.",
                             "Joe paid the detective after he received the final report on the case.",
                             "Because it was too big, the trophy did not fit in the suitcase.",
                             "The owners of the house sold it."}) {
        CAPTURE(text);
        PredicateExpression pe = pe_for(text);
        std::string serialized = serialize_snf(pe);
        auto reparsed = parse_snf(serialized);
        REQUIRE(reparsed.ok());
        CHECK(structurally_equal(pe, reparsed.value()));
        CHECK(serialize_snf(reparsed.value()) == serialized);
    }
}

TEST_CASE("councilmen serialization carries the nested feared expression") {
    PredicateExpression pe = pe_for(kCouncilmen);
    std::string serialized = serialize_snf(pe);
    CHECK(serialized.find("MainVerbWord (refused)") != std::string::npos);
    CHECK(serialized.find("AdverbPhraseIntroductoryWord (because)") != std::string::npos);
    CHECK(serialized.find("MainVerbWord (feared)") != std::string::npos);
    CHECK(serialized.find("SyntacticPosition (Final)") != std::string::npos);
    CHECK(serialized.find("Qualifier (city)") != std::string::npos);
}

TEST_CASE("hand-written notation parses") {
    const char* text =
        "PredicateExpression {\n"
        "  GrammaticalMood (Indicative)\n"
        "  PredicateSpecifier {\n"
        "    Ordinal (0)\n"
        "    MainVerbWord (refused)\n"
        "    Role (PredicateVerbTakingEntityArgument)\n"
        "    DiscourseContext (DeclarativePastSimple)\n"
        "  }\n"
        "  EntityArgument {\n"
        "    SemanticRole (Actor)\n"
        "    SyntacticRole (Subject)\n"
        "    PredicateOrdinal (0)\n"
        "    Designator {\n"
        "      NounPhrase {\n"
        "        Specifier (the)\n"
        "        Qualifier (city)\n"
        "        HeadWord (councilmen / CommonNoun)\n"
        "      }\n"
        "    }\n"
        "  }\n"
        "}\n";
    auto pe = parse_snf(text);
    REQUIRE(pe.ok());
    CHECK(pe.value().specifiers[0].main_verb == "refused");
    CHECK(pe.value().entity_arguments[0].designators[0].noun_phrase->head_words[0].word ==
          "councilmen");
}

TEST_CASE("unclosed block is a syntax error with location") {
    auto pe = parse_snf("PredicateExpression {\n  GrammaticalMood (Indicative)\n");
    REQUIRE(!pe.ok());
    CHECK(pe.error().code == ErrorCode::SyntaxError);
}

TEST_CASE("passive syntax assigns dog actor and man actee") {
    PredicateExpression pe = pe_for("The man was bitten by the dog.");
    REQUIRE(pe.entity_arguments.size() == 2);
    CHECK(pe.entity_arguments[0].semantic_role == SemanticRole::Actee);
    CHECK(pe.entity_arguments[0].designators[0].noun_phrase->head_words[0].word == "man");
    CHECK(pe.entity_arguments[1].semantic_role == SemanticRole::Actor);
    CHECK(pe.entity_arguments[1].designators[0].prep_complement->noun_phrase.head_words[0].word ==
          "dog");
    CHECK(pe.specifiers[0].main_verb == "bitten");
}

TEST_CASE("too and so normalize to the same designator") {
    PredicateExpression a = pe_for("The man did not lift his son because he was too weak.");
    PredicateExpression b = pe_for("The man did not lift his son because he was so weak.");
    CHECK(structurally_equal(a, b));
}

TEST_CASE("the pinned notation file parses to the frontend's expression") {
    std::ifstream golden(std::string(ROSS_SOURCE_DIR) + "/tests/golden/councilmen.snf");
    REQUIRE(golden.good());
    std::ostringstream text;
    text << golden.rdbuf();
    auto parsed = parse_snf(text.str());
    REQUIRE(parsed.ok());
    PredicateExpression from_frontend = pe_for(kCouncilmen);
    CHECK(structurally_equal(parsed.value(), from_frontend));
}
