#include "ross/syntax/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ross::syntax {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

const std::set<std::string>& specifier_words() {
    static const std::set<std::string> words = {
        "the", "a", "an", "his", "her", "its", "their", "this", "that",
        "these", "those", "first", "several", "some", "another", "each",
    };
    return words;
}

const std::set<std::string>& adjective_words() {
    static const std::set<std::string> words = {
        "big",   "small", "weak",  "heavy", "brown",     "final", "fast", "hot",
        "old",   "green", "angry", "black", "colorless", "tall",  "strong",
        "white", "silver",
    };
    return words;
}

const std::set<std::string>& noun_words() {
    static const std::set<std::string> words = {
        "trophy", "trophys", "trophies", "suitcase", "suitcases", "man", "men",
        "son", "sons", "detective", "detectives", "report", "reports", "case",
        "cases", "city", "cities", "councilman", "councilmen", "demonstrator", "demonstrators",
        "permit", "permits", "violence", "owner", "owners", "house", "houses",
        "dog", "dogs", "ball", "balls", "mile", "miles", "light", "lights",
        "contest", "contests", "year", "years", "building", "buildings", "sky",
        "car", "cars", "vehicle", "vehicles", "garage", "garages", "block",
        "blocks", "person", "persons", "people", "object", "objects",
        "container", "containers", "deliverable", "deliverables", "idea",
        "ideas", "wheel", "wheels", "bank", "banks", "sheriff", "stream",
        "woods", "spring", "bed", "party", "beach", "home",
    };
    return words;
}

const std::set<std::string>& plural_nouns() {
    static const std::set<std::string> words = {
        "trophys", "trophies", "suitcases", "men", "sons", "detectives",
        "reports", "cases", "councilmen", "demonstrators", "permits", "owners",
        "houses", "dogs", "balls", "miles", "lights", "contests", "years",
        "buildings", "cars", "vehicles", "garages", "blocks", "persons",
        "people", "objects", "containers", "deliverables", "ideas", "wheels",
        "banks", "woods",
    };
    return words;
}

enum class VerbTense { Base, Past, PastParticiple, ThirdPerson, Gerund };

// surface form -> tense; the 5-form groups of the closed verb lexicon.
const std::map<std::string, VerbTense>& verb_forms() {
    static const std::map<std::string, VerbTense> forms = [] {
        std::map<std::string, VerbTense> out;
        auto add = [&](const char* base, const char* past, const char* pp, const char* third,
                       const char* gerund) {
            out.emplace(base, VerbTense::Base);
            out.emplace(past, VerbTense::Past);
            out.emplace(pp, VerbTense::PastParticiple);
            out.emplace(third, VerbTense::ThirdPerson);
            out.emplace(gerund, VerbTense::Gerund);
        };
        add("fit", "fit", "fitted", "fits", "fitting");
        add("lift", "lifted", "lifted", "lifts", "lifting");
        add("pay", "paid", "paid", "pays", "paying");
        add("refuse", "refused", "refused", "refuses", "refusing");
        add("fear", "feared", "feared", "fears", "fearing");
        add("advocate", "advocated", "advocated", "advocates", "advocating");
        add("receive", "received", "received", "receives", "receiving");
        add("deliver", "delivered", "delivered", "delivers", "delivering");
        add("sell", "sold", "sold", "sells", "selling");
        add("run", "ran", "run", "runs", "running");
        add("walk", "walked", "walked", "walks", "walking");
        add("bite", "bit", "bitten", "bites", "biting");
        add("dawn", "dawned", "dawned", "dawns", "dawning");
        add("arrive", "arrived", "arrived", "arrives", "arriving");
        add("sleep", "slept", "slept", "sleeps", "sleeping");
        add("hit", "hit", "hit", "hits", "hitting");
        add("throw", "threw", "thrown", "throws", "throwing");
        add("push", "pushed", "pushed", "pushes", "pushing");
        add("win", "won", "won", "wins", "winning");
        add("go", "went", "gone", "goes", "going");
        add("move", "moved", "moved", "moves", "moving");
        add("collapse", "collapsed", "collapsed", "collapses", "collapsing");
        return out;
    }();
    return forms;
}

const std::set<std::string>& aux_words() {
    static const std::set<std::string> words = {"does", "do", "did", "can", "could",
                                                "will", "would", "has", "have", "had"};
    return words;
}

const std::set<std::string>& copula_words() {
    static const std::set<std::string> words = {"is", "was", "are", "were"};
    return words;
}

const std::set<std::string>& preposition_words() {
    static const std::set<std::string> words = {"in", "on", "at", "from", "into", "over",
                                                "under", "around", "about", "above", "by",
                                                "of", "to", "with", "for"};
    return words;
}

const std::set<std::string>& introducer_words() {
    static const std::set<std::string> words = {"because", "after", "when", "before",
                                                "while", "since"};
    return words;
}

const std::set<std::string>& pronoun_words() {
    static const std::set<std::string> words = {"he", "she", "it", "they", "him", "her", "them"};
    return words;
}

bool is_plural_pronoun(const std::string& w) { return w == "they" || w == "them"; }

class SentenceParser {
public:
    SentenceParser(const CommunicationUnit& unit, const std::vector<TokenNode>& tokens)
        : tokens_(tokens), pos_(unit.first_token), end_(unit.last_token + 1) {
        // Leave the terminal full stop out of the parse.
        if (end_ > pos_ && tokens_[end_ - 1].has(CommUnitEnd)) --end_;
    }

    Result<SyntaxTree> run() {
        SyntaxTree tree;
        if (done()) return fail("empty sentence");
        std::string first = lower(cur().value);
        if (first == "what" || first == "who") {
            auto q = parse_question();
            if (!q) return q.error();
            tree.units.push_back(q.take());
            if (!done()) return fail("unexpected trailing tokens");
            return tree;
        }
        if (introducer_words().count(first)) {
            // Leading adverbial clause: "Because it was too big, ..."
            std::string introducer = first;
            int clause_start = pos();
            advance();
            auto leading = parse_clause();
            if (!leading) return leading.error();
            leading.value().introductory_word = introducer;
            leading.value().leading = true;
            leading.value().first_token = clause_start;
            if (done() || cur().value != ",") return fail("expected ',' after leading clause");
            advance();
            tree.units.push_back(leading.take());
        }
        int main_start = pos();
        auto main = parse_clause();
        if (!main) return main.error();
        main.value().first_token = main_start;
        tree.units.push_back(main.take());
        while (!done() && introducer_words().count(lower(cur().value))) {
            std::string introducer = lower(cur().value);
            int clause_start = pos();
            advance();
            auto sub = parse_clause();
            if (!sub) return sub.error();
            sub.value().introductory_word = introducer;
            sub.value().first_token = clause_start;
            tree.units.push_back(sub.take());
        }
        if (!done()) return fail("unexpected trailing tokens");
        return tree;
    }

private:
    bool done() const { return pos_ >= end_; }
    const TokenNode& cur() const { return tokens_[pos_]; }
    int pos() const { return pos_; }
    void advance() { ++pos_; }

    Error fail(const std::string& message) const {
        SourceLoc loc;
        loc.line = 1;
        loc.col = done() ? end_ : pos_;
        std::string detail = message;
        if (!done()) detail += " at '" + cur().value + "'";
        detail += " (token " + std::to_string(loc.col) + ")";
        return make_error(ErrorCode::UnsupportedConstruction, detail, loc);
    }

    bool at_np_start() const {
        if (done()) return false;
        std::string w = lower(cur().value);
        if (specifier_words().count(w) || pronoun_words().count(w)) return true;
        if (noun_words().count(w) || adjective_words().count(w)) return true;
        // Unknown capitalized word: proper noun.
        return !cur().value.empty() && std::isupper(static_cast<unsigned char>(cur().value[0])) &&
               !aux_words().count(w) && !copula_words().count(w) && !verb_forms().count(w) &&
               !introducer_words().count(w) && !preposition_words().count(w);
    }

    bool word_continues_np() const {
        if (done()) return false;
        std::string w = lower(cur().value);
        return noun_words().count(w) || adjective_words().count(w);
    }

    Result<TreeNounPhrase> parse_np(bool allow_of_postnominal) {
        TreeNounPhrase np;
        if (done()) return fail("expected a noun phrase");
        // Possessives are specifiers when a noun run follows.
        while (!done() && specifier_words().count(lower(cur().value))) {
            std::string w = lower(cur().value);
            if (w == "her" &&
                (pos_ + 1 >= end_ || !noun_phraseish(lower(tokens_[pos_ + 1].value)))) {
                break;  // object pronoun, not a specifier
            }
            np.specifiers.push_back(lower(cur().value));
            advance();
        }
        if (done()) return fail("noun phrase ends before a head word");
        std::string w = lower(cur().value);
        if (pronoun_words().count(w) && np.specifiers.empty()) {
            np.head = cur().value;
            np.head_kind = snf::HeadKind::Pronoun;
            np.head_token = pos();
            np.plural = is_plural_pronoun(w);
            advance();
        } else {
            std::vector<std::pair<std::string, int>> run;
            while (!done() && word_continues_np()) {
                run.push_back({cur().value, pos()});
                advance();
            }
            if (run.empty()) {
                // Proper noun: capitalized word outside the lexicon.
                if (!done() && !cur().value.empty() &&
                    std::isupper(static_cast<unsigned char>(cur().value[0])) &&
                    !verb_forms().count(w) && !aux_words().count(w) && !copula_words().count(w)) {
                    np.head = cur().value;
                    np.head_kind = snf::HeadKind::ProperNoun;
                    np.head_token = pos();
                    advance();
                } else {
                    return fail("expected a noun head word");
                }
            } else {
                // Last noun-lexicon word of the run is the head.
                size_t head_idx = run.size();
                for (size_t i = run.size(); i-- > 0;) {
                    if (noun_words().count(lower(run[i].first))) {
                        head_idx = i;
                        break;
                    }
                }
                if (head_idx == run.size()) return fail("noun run without a known head");
                for (size_t i = 0; i < run.size(); ++i) {
                    if (i == head_idx) continue;
                    if (i < head_idx) {
                        np.qualifiers.push_back(lower(run[i].first));
                    } else {
                        return fail("trailing word after noun head");
                    }
                }
                np.head = run[head_idx].first;
                np.head_kind = snf::HeadKind::CommonNoun;
                np.head_token = run[head_idx].second;
                np.plural = plural_nouns().count(lower(np.head)) > 0;
            }
        }
        if (allow_of_postnominal) {
            while (!done() && lower(cur().value) == "of") {
                TreePP pp;
                pp.preposition = "of";
                advance();
                auto inner = parse_np(false);
                if (!inner) return inner.error();
                pp.noun_phrase = inner.take();
                np.postnominals.push_back(std::move(pp));
            }
        }
        return np;
    }

    bool noun_phraseish(const std::string& w) const {
        return specifier_words().count(w) || noun_words().count(w) ||
               adjective_words().count(w) || pronoun_words().count(w);
    }

    Result<TreePP> parse_pp() {
        TreePP pp;
        pp.preposition = lower(cur().value);
        advance();
        auto np = parse_np(false);
        if (!np) return np.error();
        pp.noun_phrase = np.take();
        return pp;
    }

    snf::DiscourseContext discourse_for(bool interrogative, bool past) const {
        if (interrogative) {
            return past ? snf::DiscourseContext::InterrogativePastSimple
                        : snf::DiscourseContext::InterrogativePastSimple;  // see below
        }
        return past ? snf::DiscourseContext::DeclarativePastSimple
                    : snf::DiscourseContext::DeclarativePresentSimple;
    }

    Result<TreeMeaningUnit> parse_clause() {
        TreeMeaningUnit unit;
        unit.first_token = pos();
        auto subject = parse_np(true);
        if (!subject) return subject.error();
        unit.subject = subject.take();
        if (done()) return fail("clause has no predicate");

        bool past = false;
        std::string w = lower(cur().value);
        if (copula_words().count(w)) {
            unit.copula = w;
            past = (w == "was" || w == "were");
            advance();
            if (!done() && lower(cur().value) == "not") {
                unit.pre_verb_adverbs.push_back("not");
                advance();
            }
            if (!done() && (lower(cur().value) == "too" || lower(cur().value) == "so")) {
                unit.post_verb_adverbs.push_back(lower(cur().value));
                advance();
            }
            if (done()) return fail("copula without a complement");
            std::string next = lower(cur().value);
            auto verb_it = verb_forms().find(next);
            if (verb_it != verb_forms().end() && verb_it->second == VerbTense::PastParticiple &&
                unit.post_verb_adverbs.empty()) {
                // Passive: "was bitten (by the dog)"
                unit.passive = true;
                unit.main_verb = next;
                past = true;
                advance();
                while (!done() && preposition_words().count(lower(cur().value))) {
                    auto pp = parse_pp();
                    if (!pp) return pp.error();
                    if (pp.value().preposition == "by" && !unit.by_phrase) {
                        unit.by_phrase = pp.take();
                    } else {
                        unit.complements.push_back(pp.take());
                    }
                }
            } else if (adjective_words().count(next)) {
                unit.post_verb_adjective = next;
                advance();
            } else if (preposition_words().count(next)) {
                while (!done() && preposition_words().count(lower(cur().value))) {
                    auto pp = parse_pp();
                    if (!pp) return pp.error();
                    unit.complements.push_back(pp.take());
                }
            } else if (at_np_start()) {
                // "A car is a vehicle."
                auto object = parse_np(false);
                if (!object) return object.error();
                unit.direct_object = object.take();
            } else {
                return fail("unsupported copula complement");
            }
            unit.discourse = discourse_for(false, past);
            return unit;
        }

        if (aux_words().count(w)) {
            unit.aux_verb = w;
            past = (w == "did" || w == "could" || w == "would" || w == "had");
            advance();
            if (!done() && lower(cur().value) == "not") {
                unit.pre_verb_adverbs.push_back("not");
                advance();
            }
        }
        if (done()) return fail("clause has no verb");
        std::string verb = lower(cur().value);
        auto verb_it = verb_forms().find(verb);
        if (verb_it == verb_forms().end()) return fail("unknown verb");
        unit.main_verb = verb;
        if (unit.aux_verb.empty()) {
            past = (verb_it->second == VerbTense::Past ||
                    verb_it->second == VerbTense::PastParticiple);
        }
        advance();

        if (at_np_start()) {
            auto object = parse_np(true);
            if (!object) return object.error();
            unit.direct_object = object.take();
            if (at_np_start()) {
                auto second = parse_np(false);
                if (!second) return second.error();
                unit.second_object = second.take();
            }
        }
        while (!done() && preposition_words().count(lower(cur().value))) {
            auto pp = parse_pp();
            if (!pp) return pp.error();
            // A complement after an object attaches to that object.
            if (unit.second_object) {
                unit.second_object->postnominals.push_back(pp.take());
            } else if (unit.direct_object) {
                unit.direct_object->postnominals.push_back(pp.take());
            } else {
                unit.complements.push_back(pp.take());
            }
        }
        unit.discourse = discourse_for(false, past);
        return unit;
    }

    Result<TreeMeaningUnit> parse_question() {
        TreeMeaningUnit unit;
        unit.first_token = pos();
        unit.wh_word = lower(cur().value);
        advance();
        if (done()) return fail("incomplete question");
        std::string w = lower(cur().value);
        if (copula_words().count(w)) {
            // "What is too big ?" / "Who was too weak ?"
            unit.copula = w;
            bool past = (w == "was" || w == "were");
            advance();
            if (!done() && (lower(cur().value) == "too" || lower(cur().value) == "so")) {
                unit.post_verb_adverbs.push_back(lower(cur().value));
                advance();
            }
            if (done() || !adjective_words().count(lower(cur().value))) {
                return fail("question needs an adjective");
            }
            unit.post_verb_adjective = lower(cur().value);
            advance();
            unit.discourse = past ? snf::DiscourseContext::InterrogativePastSimple
                                  : snf::DiscourseContext::InterrogativePastSimple;
            return unit;
        }
        auto verb_it = verb_forms().find(w);
        if (verb_it == verb_forms().end()) return fail("question needs a verb");
        // "Who received the final report ?"
        unit.main_verb = w;
        advance();
        if (at_np_start()) {
            auto object = parse_np(true);
            if (!object) return object.error();
            unit.direct_object = object.take();
        }
        while (!done() && preposition_words().count(lower(cur().value))) {
            auto pp = parse_pp();
            if (!pp) return pp.error();
            if (unit.direct_object) {
                unit.direct_object->postnominals.push_back(pp.take());
            } else {
                unit.complements.push_back(pp.take());
            }
        }
        unit.discourse = snf::DiscourseContext::InterrogativePastSimple;
        return unit;
    }

    const std::vector<TokenNode>& tokens_;
    int pos_;
    int end_;
};

void print_np(std::ostringstream& out, const TreeNounPhrase& np, int depth) {
    std::string pad(depth * 2, ' ');
    out << pad << "NounPhrase:\n";
    if (!np.specifiers.empty()) {
        out << pad << "  Specifier List:";
        for (const auto& s : np.specifiers) out << " " << s;
        out << "\n";
    }
    if (!np.qualifiers.empty()) {
        out << pad << "  Qualifier List:";
        for (const auto& q : np.qualifiers) out << " " << q;
        out << "\n";
    }
    out << pad << "  Head word: " << np.head << "\n";
    for (const auto& pp : np.postnominals) {
        out << pad << "  PrepositionalPhrase:\n";
        out << pad << "    Head word: " << pp.preposition << "\n";
        print_np(out, pp.noun_phrase, depth + 2);
    }
}

}  // namespace

Result<SyntaxTree> parse_sentence(const CommunicationUnit& unit,
                                  const std::vector<TokenNode>& tokens) {
    if (unit.kind != CommUnitKind::Sentence) {
        return make_error(ErrorCode::UnsupportedConstruction,
                          "communication unit is not a sentence");
    }
    SentenceParser parser(unit, tokens);
    return parser.run();
}

std::string print_tree(const SyntaxTree& tree) {
    std::ostringstream out;
    for (const auto& unit : tree.units) {
        out << "MeaningUnit\n";
        if (!unit.introductory_word.empty()) {
            out << "Introductory word: " << unit.introductory_word << "\n";
        }
        if (!unit.wh_word.empty()) out << "Wh word: " << unit.wh_word << "\n";
        out << "SubjectPhrase:\n";
        print_np(out, unit.subject, 1);
        out << "PredicatePhrase:\n";
        for (const auto& adv : unit.pre_verb_adverbs) out << "  PreVerbAdverb: " << adv << "\n";
        if (!unit.aux_verb.empty()) out << "  AuxVerbWord: " << unit.aux_verb << "\n";
        if (!unit.copula.empty()) out << "  AuxVerbWord: " << unit.copula << "\n";
        if (!unit.main_verb.empty()) out << "  MainVerbWord: " << unit.main_verb << "\n";
        for (const auto& adv : unit.post_verb_adverbs) out << "  PostVerbAdverb: " << adv << "\n";
        if (!unit.post_verb_adjective.empty()) {
            out << "  PostVerbAdjectivePhrase:\n    Head word: " << unit.post_verb_adjective
                << "\n";
        }
        for (const auto& pp : unit.complements) {
            out << "  Prepositional phrase complement:\n";
            out << "    Head word: " << pp.preposition << "\n";
            print_np(out, pp.noun_phrase, 2);
        }
        if (unit.direct_object) {
            out << "  DirectObject:\n";
            print_np(out, *unit.direct_object, 2);
        }
        if (unit.second_object) {
            out << "  IndirectObject:\n";
            print_np(out, *unit.second_object, 2);
        }
    }
    return out.str();
}

bool is_pronoun_word(const std::string& word) { return pronoun_words().count(lower(word)) > 0; }

bool is_known_verb_form(const std::string& word) { return verb_forms().count(lower(word)) > 0; }

}  // namespace ross::syntax
