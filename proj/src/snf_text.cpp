#include "ross/snf/text.hpp"

#include <map>
#include <sstream>

namespace ross::snf {

namespace {

void indent(std::ostringstream& out, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
}

void leaf(std::ostringstream& out, int depth, const char* name, const std::string& value) {
    indent(out, depth);
    out << name << " (" << value << ")\n";
}

void write_np(std::ostringstream& out, int depth, const NounPhrase& np);
void write_pe(std::ostringstream& out, int depth, const PredicateExpression& pe);

void write_np(std::ostringstream& out, int depth, const NounPhrase& np) {
    indent(out, depth);
    out << "NounPhrase {\n";
    for (const auto& s : np.specifiers) leaf(out, depth + 1, "Specifier", s);
    for (const auto& q : np.qualifiers) leaf(out, depth + 1, "Qualifier", q);
    for (const auto& head : np.head_words) {
        leaf(out, depth + 1, "HeadWord", head.word + " / " + to_string(head.kind));
    }
    for (const auto& post : np.postnominals) {
        if (post.nested) {
            indent(out, depth + 1);
            out << "Postnominal {\n";
            leaf(out, depth + 2, "Text", post.text);
            write_pe(out, depth + 2, *post.nested);
            indent(out, depth + 1);
            out << "}\n";
        } else {
            leaf(out, depth + 1, "Postnominal", post.text);
        }
    }
    indent(out, depth);
    out << "}\n";
}

void write_pe(std::ostringstream& out, int depth, const PredicateExpression& pe) {
    indent(out, depth);
    out << "PredicateExpression {\n";
    leaf(out, depth + 1, "GrammaticalMood", to_string(pe.mood));
    if (!pe.introductory_word.empty()) {
        leaf(out, depth + 1, "IntroductoryWord", pe.introductory_word);
    }
    for (const auto& spec : pe.specifiers) {
        indent(out, depth + 1);
        out << "PredicateSpecifier {\n";
        leaf(out, depth + 2, "Ordinal", std::to_string(spec.ordinal));
        leaf(out, depth + 2, "MainVerbWord", spec.main_verb);
        leaf(out, depth + 2, "Role", to_string(spec.role));
        leaf(out, depth + 2, "DiscourseContext", to_string(spec.discourse));
        if (!spec.trailing_connective.empty()) {
            leaf(out, depth + 2, "TrailingConnective", spec.trailing_connective);
        }
        indent(out, depth + 1);
        out << "}\n";
    }
    for (const auto& arg : pe.entity_arguments) {
        indent(out, depth + 1);
        out << "EntityArgument {\n";
        leaf(out, depth + 2, "SemanticRole", to_string(arg.semantic_role));
        if (arg.extra_sub_role != ExtraSubRole::None) {
            leaf(out, depth + 2, "ExtraSubRole", to_string(arg.extra_sub_role));
        }
        leaf(out, depth + 2, "SyntacticRole", to_string(arg.syntactic_role));
        leaf(out, depth + 2, "PredicateOrdinal", std::to_string(arg.predicate_ordinal));
        for (const auto& designator : arg.designators) {
            indent(out, depth + 2);
            out << "Designator {\n";
            if (designator.prep_complement) {
                leaf(out, depth + 3, "Preposition", designator.prep_complement->preposition);
                write_np(out, depth + 3, designator.prep_complement->noun_phrase);
            }
            if (designator.noun_phrase) {
                write_np(out, depth + 3, *designator.noun_phrase);
            }
            if (!designator.trailing_connective.empty()) {
                leaf(out, depth + 3, "TrailingConnective", designator.trailing_connective);
            }
            indent(out, depth + 2);
            out << "}\n";
        }
        if (arg.nested) write_pe(out, depth + 2, *arg.nested);
        indent(out, depth + 1);
        out << "}\n";
    }
    for (const auto& attr : pe.attributive_arguments) {
        indent(out, depth + 1);
        out << "AttributiveArgument {\n";
        leaf(out, depth + 2, "Role", to_string(attr.role));
        for (const auto& designator : attr.designators) {
            std::string text = designator.degree.empty()
                                   ? designator.adjective
                                   : designator.degree + " " + designator.adjective;
            leaf(out, depth + 2, "AttributeDesignator", text);
        }
        indent(out, depth + 1);
        out << "}\n";
    }
    for (const auto& mod : pe.modifications) {
        indent(out, depth + 1);
        out << "ModificationSpecifier {\n";
        leaf(out, depth + 2, "SyntacticPosition", to_string(mod.position));
        leaf(out, depth + 2, "PredicateOrdinal", std::to_string(mod.predicate_ordinal));
        if (!mod.adverbial_phrase.empty()) {
            leaf(out, depth + 2, "AdverbialPhrase", mod.adverbial_phrase);
        }
        if (!mod.introducer.empty()) {
            leaf(out, depth + 2, "AdverbPhraseIntroductoryWord", mod.introducer);
        }
        if (mod.nested) write_pe(out, depth + 2, *mod.nested);
        indent(out, depth + 1);
        out << "}\n";
    }
    indent(out, depth);
    out << "}\n";
}

template <typename E>
bool enum_from(const std::string& text, E last, E* out) {
    for (int i = 0; i <= static_cast<int>(last); ++i) {
        E candidate = static_cast<E>(i);
        if (text == to_string(candidate)) {
            *out = candidate;
            return true;
        }
    }
    return false;
}

struct Line {
    std::string name;
    std::string value;  // leaf payload
    bool opens = false;
    bool closes = false;
    int number = 0;
    int col = 0;
};

class Reader {
public:
    explicit Reader(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            size_t begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            size_t end = raw.find_last_not_of(" \t\r");
            std::string body = raw.substr(begin, end - begin + 1);
            Line line;
            line.number = number;
            line.col = static_cast<int>(begin) + 1;
            if (body == "}") {
                line.closes = true;
            } else if (body.size() >= 2 && body.back() == '{') {
                line.opens = true;
                line.name = body.substr(0, body.size() - 1);
                while (!line.name.empty() && line.name.back() == ' ') line.name.pop_back();
            } else {
                size_t open = body.find('(');
                size_t close = body.rfind(')');
                if (open == std::string::npos || close == std::string::npos || close < open) {
                    line.name = body;  // reported as error at use site
                } else {
                    line.name = body.substr(0, open);
                    while (!line.name.empty() && line.name.back() == ' ') line.name.pop_back();
                    line.value = body.substr(open + 1, close - open - 1);
                }
            }
            lines_.push_back(std::move(line));
        }
    }

    bool done() const { return idx_ >= lines_.size(); }
    const Line& cur() const { return lines_[idx_]; }
    void next() { ++idx_; }

    Error err(const std::string& message) const {
        SourceLoc loc;
        if (idx_ < lines_.size()) loc = {lines_[idx_].number, lines_[idx_].col};
        return make_error(ErrorCode::SyntaxError, message, loc);
    }

private:
    std::vector<Line> lines_;
    size_t idx_ = 0;
};

Result<PredicateExpression> read_pe(Reader& reader);

Result<NounPhrase> read_np(Reader& reader) {
    NounPhrase np;
    reader.next();  // consume "NounPhrase {"
    while (!reader.done() && !reader.cur().closes) {
        const Line& line = reader.cur();
        if (line.name == "Specifier") {
            np.specifiers.push_back(line.value);
            reader.next();
        } else if (line.name == "Qualifier") {
            np.qualifiers.push_back(line.value);
            reader.next();
        } else if (line.name == "HeadWord") {
            size_t sep = line.value.find(" / ");
            if (sep == std::string::npos) return reader.err("head word needs 'word / kind'");
            HeadWord head;
            head.word = line.value.substr(0, sep);
            if (!enum_from(line.value.substr(sep + 3), HeadKind::ProperNoun, &head.kind)) {
                return reader.err("unknown head kind");
            }
            np.head_words.push_back(std::move(head));
            reader.next();
        } else if (line.name == "Postnominal" && !line.opens) {
            np.postnominals.push_back({line.value, nullptr});
            reader.next();
        } else if (line.name == "Postnominal" && line.opens) {
            reader.next();
            PostnominalModifier post;
            while (!reader.done() && !reader.cur().closes) {
                if (reader.cur().name == "Text") {
                    post.text = reader.cur().value;
                    reader.next();
                } else if (reader.cur().name == "PredicateExpression") {
                    auto nested = read_pe(reader);
                    if (!nested) return nested.error();
                    post.nested = std::make_unique<PredicateExpression>(nested.take());
                } else {
                    return reader.err("unexpected line in Postnominal");
                }
            }
            if (reader.done()) return reader.err("unclosed Postnominal");
            reader.next();
            np.postnominals.push_back(std::move(post));
        } else {
            return reader.err("unexpected line in NounPhrase: " + line.name);
        }
    }
    if (reader.done()) return reader.err("unclosed NounPhrase");
    reader.next();  // '}'
    return np;
}

Result<PredicateExpression> read_pe(Reader& reader) {
    if (reader.done() || reader.cur().name != "PredicateExpression" || !reader.cur().opens) {
        return reader.err("expected 'PredicateExpression {'");
    }
    reader.next();
    PredicateExpression pe;
    while (!reader.done() && !reader.cur().closes) {
        const Line& line = reader.cur();
        if (line.name == "GrammaticalMood") {
            if (!enum_from(line.value, GrammaticalMood::Imperative, &pe.mood)) {
                return reader.err("unknown mood");
            }
            reader.next();
        } else if (line.name == "IntroductoryWord") {
            pe.introductory_word = line.value;
            reader.next();
        } else if (line.name == "PredicateSpecifier" && line.opens) {
            reader.next();
            PredicateSpecifier spec;
            while (!reader.done() && !reader.cur().closes) {
                const Line& f = reader.cur();
                if (f.name == "Ordinal") spec.ordinal = std::stoi(f.value);
                else if (f.name == "MainVerbWord") spec.main_verb = f.value;
                else if (f.name == "Role") {
                    if (!enum_from(f.value, PredicateRole::VerbTakingEntityArgument, &spec.role)) {
                        return reader.err("unknown predicate role");
                    }
                } else if (f.name == "DiscourseContext") {
                    if (!enum_from(f.value, DiscourseContext::None, &spec.discourse)) {
                        return reader.err("unknown discourse context");
                    }
                } else if (f.name == "TrailingConnective") spec.trailing_connective = f.value;
                else return reader.err("unexpected line in PredicateSpecifier: " + f.name);
                reader.next();
            }
            if (reader.done()) return reader.err("unclosed PredicateSpecifier");
            reader.next();
            pe.specifiers.push_back(std::move(spec));
        } else if (line.name == "EntityArgument" && line.opens) {
            reader.next();
            EntityArgument arg;
            std::optional<std::string> pending_prep;
            while (!reader.done() && !reader.cur().closes) {
                const Line& f = reader.cur();
                if (f.name == "SemanticRole") {
                    if (!enum_from(f.value, SemanticRole::Extra, &arg.semantic_role)) {
                        return reader.err("unknown semantic role");
                    }
                    reader.next();
                } else if (f.name == "ExtraSubRole") {
                    if (!enum_from(f.value, ExtraSubRole::Of, &arg.extra_sub_role)) {
                        return reader.err("unknown extra sub-role");
                    }
                    reader.next();
                } else if (f.name == "SyntacticRole") {
                    if (!enum_from(f.value, SyntacticRole::Other, &arg.syntactic_role)) {
                        return reader.err("unknown syntactic role");
                    }
                    reader.next();
                } else if (f.name == "PredicateOrdinal") {
                    arg.predicate_ordinal = std::stoi(f.value);
                    reader.next();
                } else if (f.name == "Designator" && f.opens) {
                    reader.next();
                    EntityDesignator designator;
                    pending_prep.reset();
                    while (!reader.done() && !reader.cur().closes) {
                        const Line& d = reader.cur();
                        if (d.name == "Preposition") {
                            pending_prep = d.value;
                            reader.next();
                        } else if (d.name == "NounPhrase" && d.opens) {
                            auto np = read_np(reader);
                            if (!np) return np.error();
                            if (pending_prep) {
                                designator.prep_complement = PrepComplement{*pending_prep, np.take()};
                                pending_prep.reset();
                            } else {
                                designator.noun_phrase = np.take();
                            }
                        } else if (d.name == "TrailingConnective") {
                            designator.trailing_connective = d.value;
                            reader.next();
                        } else {
                            return reader.err("unexpected line in Designator: " + d.name);
                        }
                    }
                    if (reader.done()) return reader.err("unclosed Designator");
                    reader.next();
                    arg.designators.push_back(std::move(designator));
                } else if (f.name == "PredicateExpression" && f.opens) {
                    auto nested = read_pe(reader);
                    if (!nested) return nested.error();
                    arg.nested = std::make_unique<PredicateExpression>(nested.take());
                } else {
                    return reader.err("unexpected line in EntityArgument: " + f.name);
                }
            }
            if (reader.done()) return reader.err("unclosed EntityArgument");
            reader.next();
            pe.entity_arguments.push_back(std::move(arg));
        } else if (line.name == "AttributiveArgument" && line.opens) {
            reader.next();
            AttributiveArgument attr;
            while (!reader.done() && !reader.cur().closes) {
                const Line& f = reader.cur();
                if (f.name == "Role") {
                    if (!enum_from(f.value, AttributiveRole::HigherClass, &attr.role)) {
                        return reader.err("unknown attributive role");
                    }
                } else if (f.name == "AttributeDesignator") {
                    AttributiveDesignator designator;
                    size_t space = f.value.find(' ');
                    if (space != std::string::npos &&
                        (f.value.substr(0, space) == "too" || f.value.substr(0, space) == "so")) {
                        designator.degree = "too";  // degree words normalize to "too"
                        designator.adjective = f.value.substr(space + 1);
                    } else {
                        designator.adjective = f.value;
                    }
                    attr.designators.push_back(std::move(designator));
                } else {
                    return reader.err("unexpected line in AttributiveArgument: " + f.name);
                }
                reader.next();
            }
            if (reader.done()) return reader.err("unclosed AttributiveArgument");
            reader.next();
            pe.attributive_arguments.push_back(std::move(attr));
        } else if (line.name == "ModificationSpecifier" && line.opens) {
            reader.next();
            ModificationSpecifier mod;
            while (!reader.done() && !reader.cur().closes) {
                const Line& f = reader.cur();
                if (f.name == "SyntacticPosition") {
                    if (!enum_from(f.value, SyntacticPosition::Final, &mod.position)) {
                        return reader.err("unknown syntactic position");
                    }
                    reader.next();
                } else if (f.name == "PredicateOrdinal") {
                    mod.predicate_ordinal = std::stoi(f.value);
                    reader.next();
                } else if (f.name == "AdverbialPhrase") {
                    mod.adverbial_phrase = f.value;
                    reader.next();
                } else if (f.name == "AdverbPhraseIntroductoryWord") {
                    mod.introducer = f.value;
                    reader.next();
                } else if (f.name == "PredicateExpression" && f.opens) {
                    auto nested = read_pe(reader);
                    if (!nested) return nested.error();
                    mod.nested = std::make_unique<PredicateExpression>(nested.take());
                } else {
                    return reader.err("unexpected line in ModificationSpecifier: " + f.name);
                }
            }
            if (reader.done()) return reader.err("unclosed ModificationSpecifier");
            reader.next();
            pe.modifications.push_back(std::move(mod));
        } else {
            return reader.err("unexpected line in PredicateExpression: " + line.name);
        }
    }
    if (reader.done()) return reader.err("unclosed PredicateExpression");
    reader.next();  // '}'
    return pe;
}

}  // namespace

std::string serialize_snf(const PredicateExpression& pe) {
    std::ostringstream out;
    write_pe(out, 0, pe);
    return out.str();
}

Result<PredicateExpression> parse_snf(const std::string& text) {
    Reader reader(text);
    auto pe = read_pe(reader);
    if (!pe) return pe.error();
    if (!reader.done()) return reader.err("trailing content after expression");
    return pe;
}

}  // namespace ross::snf
