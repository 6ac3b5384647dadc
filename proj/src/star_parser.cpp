#include "ross/star/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ross::star {

namespace {

enum class Tok {
    Ident,     // ObjectFrameClass, Dictionary, RelativeLocation ...
    String,    // "ContainerObjectObjectFrameClass"
    Symbol,    // a$, t1$, q$, extra$
    Number,    // 0.9
    LParen, RParen, LBrace, RBrace,
    Lt, Gt, Slash, Eq, Comma, Semi, Colon, Plus,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Result<std::vector<Token>> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws_and_comments();
            if (pos_ >= src_.size()) break;
            SourceLoc loc{line_, col_};
            char c = src_[pos_];
            if (c == '"') {
                std::string text;
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"') {
                    text += src_[pos_];
                    advance();
                }
                if (pos_ >= src_.size()) {
                    return make_error(ErrorCode::UnboundSyntax, "unterminated string", loc);
                }
                advance();  // closing quote
                // Names in the corpus occasionally carry stray spaces inside
                // the quotes (" NotLift_Heavy_BehaviorClass ").
                out.push_back({Tok::String, trim(text), loc});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string text;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                        src_[pos_] == '_' || src_[pos_] == '$')) {
                    text += src_[pos_];
                    advance();
                }
                if (!text.empty() && text.back() == '$') {
                    out.push_back({Tok::Symbol, text, loc});
                } else {
                    out.push_back({Tok::Ident, text, loc});
                }
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string text;
                while (pos_ < src_.size() &&
                       (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                    text += src_[pos_];
                    advance();
                }
                out.push_back({Tok::Number, text, loc});
            } else {
                Tok kind;
                switch (c) {
                    case '(': kind = Tok::LParen; break;
                    case ')': kind = Tok::RParen; break;
                    case '{': kind = Tok::LBrace; break;
                    case '}': kind = Tok::RBrace; break;
                    case '<': kind = Tok::Lt; break;
                    case '>': kind = Tok::Gt; break;
                    case '/': kind = Tok::Slash; break;
                    case '=': kind = Tok::Eq; break;
                    case ',': kind = Tok::Comma; break;
                    case ';': kind = Tok::Semi; break;
                    case ':': kind = Tok::Colon; break;
                    case '+': kind = Tok::Plus; break;
                    default:
                        return make_error(ErrorCode::UnknownElement,
                                          std::string("unexpected character '") + c + "'", loc);
                }
                out.push_back({kind, std::string(1, c), loc});
                advance();
            }
        }
        out.push_back({Tok::End, "", {line_, col_}});
        return out;
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// One key=value pair inside an empty element, e.g. ref = PersonObjectFrameClass.
struct Property {
    std::string key;
    std::string attr;   // val | ref | var | expr
    std::string value;  // string/identifier/symbol text
    int offset = 0;     // expr (sym+N)
    SourceLoc loc;
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::string source_name)
        : toks_(std::move(toks)), doc_{std::move(source_name), {}, {}} {}

    Result<StarDocument> run() {
        while (!at(Tok::End)) {
            consume_terminator_run();
            if (at(Tok::End)) break;
            if (!at(Tok::Ident)) {
                return err(ErrorCode::UnknownElement,
                           "expected a top-level definition, found '" + cur().text + "'");
            }
            if (cur().text == "ObjectFrameClass") {
                auto def = parse_object_frame_class();
                if (!def) return def.error();
                doc_.class_defs.push_back(def.take());
            } else if (cur().text == "BehaviorClass") {
                auto def = parse_behavior_class();
                if (!def) return def.error();
                doc_.class_defs.push_back(def.take());
            } else {
                return err(ErrorCode::UnknownElement, "unknown keyword '" + cur().text + "'");
            }
        }
        return std::move(doc_);
    }

private:
    const Token& cur() const { return toks_[idx_]; }
    const Token& peek(size_t n = 1) const {
        return toks_[std::min(idx_ + n, toks_.size() - 1)];
    }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_ident(const char* name) const { return at(Tok::Ident) && cur().text == name; }
    Token take() { return toks_[idx_++]; }

    Error err(ErrorCode code, const std::string& msg) const {
        return make_error(code, msg, cur().loc);
    }

    void repair(const std::string& msg, SourceLoc loc) {
        doc_.diagnostics.push_back({Diagnostic::Kind::Repair, msg, loc});
    }

    // A new top-level definition begins with one of the two keywords followed
    // by a quoted name. Seen mid-body it means the previous definition lost
    // closers to the corpus' irregular terminator runs.
    bool at_definition_start() const {
        return at(Tok::Ident) &&
               (cur().text == "ObjectFrameClass" || cur().text == "BehaviorClass") &&
               peek().kind == Tok::String;
    }

    // Consumes runs of ')' and ';' that the corpus leaves at definition
    // boundaries. One diagnostic per extra run.
    void consume_terminator_run() {
        int extra = 0;
        SourceLoc loc = cur().loc;
        while (at(Tok::RParen) || at(Tok::Semi)) {
            if (cur().kind == Tok::RParen) ++extra;
            take();
        }
        if (extra > 0) {
            repair("discarded terminator run of " + std::to_string(extra) +
                       " unmatched ')' at definition boundary",
                   loc);
        }
    }

    // Consumes up to `max_parens` closing parens, tolerating doubled or
    // missing ';' after each. Never reaches past the expected nesting, so
    // enclosing closers stay available to their own blocks.
    void consume_closers(int max_parens) {
        while (at(Tok::Semi)) take();
        for (int i = 0; i < max_parens && at(Tok::RParen); ++i) {
            take();
            while (at(Tok::Semi)) take();
        }
    }

    // Expects ')' closing a body. Missing closers in front of a new top-level
    // definition (or EOF) are repaired.
    bool close_body(const char* what) {
        if (at(Tok::RParen)) {
            take();
            if (at(Tok::Semi)) take();
            return true;
        }
        if (at_definition_start() || at(Tok::End)) {
            repair(std::string("inserted missing ')' to close ") + what, cur().loc);
            return true;
        }
        return false;
    }

    bool body_done() {
        return at(Tok::RParen) || at_definition_start() || at(Tok::End);
    }

    // <Key attr = value [attr = value]* />
    Result<std::vector<Property>> parse_empty_element() {
        take();  // '<'
        if (!at(Tok::Ident)) return err(ErrorCode::UnboundSyntax, "expected element name after '<'");
        SourceLoc loc = cur().loc;
        std::string key = take().text;
        std::vector<Property> props;
        while (at(Tok::Ident) &&
               (cur().text == "val" || cur().text == "ref" || cur().text == "var" ||
                cur().text == "expr")) {
            Property p;
            p.key = key;
            p.loc = loc;
            p.attr = take().text;
            if (!at(Tok::Eq)) return err(ErrorCode::UnboundSyntax, "expected '=' in element");
            take();
            if (at(Tok::String) || at(Tok::Ident) || at(Tok::Symbol) || at(Tok::Number)) {
                p.value = take().text;
            } else if (at(Tok::LParen)) {
                // (a$+1) style expression
                take();
                if (!at(Tok::Symbol)) return err(ErrorCode::UnboundSyntax, "expected symbol in expr");
                p.value = take().text;
                if (at(Tok::Plus)) {
                    take();
                    if (!at(Tok::Number)) return err(ErrorCode::UnboundSyntax, "expected offset in expr");
                    p.offset = std::stoi(take().text);
                }
                if (!at(Tok::RParen)) return err(ErrorCode::UnboundSyntax, "expected ')' in expr");
                take();
            } else {
                return err(ErrorCode::UnboundSyntax, "expected value in element");
            }
            props.push_back(std::move(p));
        }
        if (props.empty()) {
            Property p;
            p.key = key;
            p.loc = loc;
            props.push_back(std::move(p));
        }
        if (!at(Tok::Slash)) return err(ErrorCode::UnboundSyntax, "expected '/>' closing element");
        take();
        if (!at(Tok::Gt)) return err(ErrorCode::UnboundSyntax, "expected '>' closing element");
        take();
        return props;
    }

    // { "a", "b" } with liberal ',' / ';' separators and trailing separators.
    Result<std::vector<std::string>> parse_string_list() {
        if (!at(Tok::LBrace)) return err(ErrorCode::UnboundSyntax, "expected '{'");
        take();
        std::vector<std::string> words;
        while (!at(Tok::RBrace)) {
            if (at(Tok::Comma) || at(Tok::Semi)) {
                take();
                continue;
            }
            if (!at(Tok::String)) return err(ErrorCode::UnboundSyntax, "expected string in list");
            words.push_back(take().text);
        }
        take();  // '}'
        return words;
    }

    // Dictionary ( English ( { ... } ); );  — terminator runs vary.
    Result<std::vector<std::string>> parse_dictionary_body() {
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '(' after Dictionary");
        take();
        if (!at_ident("English")) return err(ErrorCode::UnknownElement, "expected language block");
        take();
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '(' after English");
        take();
        auto words = parse_string_list();
        if (!words) return words.error();
        consume_closers(2);  // English, Dictionary
        return words;
    }

    Result<AttributeTypeDef> parse_attribute_type() {
        take();  // AttributeType
        if (!at(Tok::String)) return err(ErrorCode::UnboundSyntax, "expected attribute type name");
        AttributeTypeDef def;
        def.loc = cur().loc;
        def.name = take().text;
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
        take();
        while (!body_done()) {
            if (at(Tok::Lt)) {
                auto props = parse_empty_element();
                if (!props) return props.error();
                for (const auto& p : props.value()) {
                    if (p.key == "SuperType") def.super_type = p.value;
                    else if (p.key == "StateAttributeType") def.is_state = (p.value == "true");
                    else if (p.key == "OptionalCausalFeature") def.optional_causal_feature = (p.value == "true");
                    else return make_error(ErrorCode::UnknownElement, "unknown attribute-type property '" + p.key + "'", p.loc);
                }
            } else if (at(Tok::String) && cur().text == "Values") {
                take();
                if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '(' after Values");
                take();
                if (!at(Tok::LBrace)) return err(ErrorCode::UnboundSyntax, "expected '{' in Values");
                take();
                while (!at(Tok::RBrace)) {
                    if (at(Tok::Comma) || at(Tok::Semi)) {
                        take();
                        continue;
                    }
                    if (!at(Tok::String)) return err(ErrorCode::UnboundSyntax, "expected value name");
                    AttributeValueDef value;
                    value.name = take().text;
                    if (at(Tok::Colon)) {
                        take();
                        if (!at_ident("Dictionary")) return err(ErrorCode::UnknownElement, "expected Dictionary after ':'");
                        take();
                        auto words = parse_dictionary_body();
                        if (!words) return words.error();
                        value.dictionary = words.take();
                    }
                    def.values.push_back(std::move(value));
                }
                take();  // '}'
                consume_closers(1);  // Values
            } else {
                return err(ErrorCode::UnknownElement, "unexpected token in AttributeType: '" + cur().text + "'");
            }
        }
        if (!close_body("AttributeType")) return err(ErrorCode::UnboundSyntax, "unclosed AttributeType");
        return def;
    }

    Result<PopulatedObjectClassDef> parse_populated_object_class() {
        take();  // PopulatedObjectClass
        if (!at(Tok::String)) return err(ErrorCode::UnboundSyntax, "expected role label");
        PopulatedObjectClassDef def;
        def.loc = cur().loc;
        def.role_label = take().text;
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
        take();
        while (!body_done()) {
            if (!at(Tok::Lt)) return err(ErrorCode::UnknownElement, "expected '<' property in PopulatedObjectClass");
            auto props = parse_empty_element();
            if (!props) return props.error();
            for (const auto& p : props.value()) {
                if (p.key == "ObjectFrameClass") def.object_class = p.value;
                else if (p.key == "BinderSourceFlag") def.binder_source = (p.value == "true");
                else if (p.key == "PassiveParticipant") def.passive_participant = (p.value == "true");
                else if (p.key == "ExtraParticipant") def.extra_participant = (p.value == "true");
                else if (p.key == "Multiple") def.multiple = (p.value == "true");
                else if (p.key == "DimensionSystem") def.dimension_system = p.value;
                else if (p.key == "Attribute") {
                    // First pair names the type; kinded pairs follow in the same element.
                    if (p.attr == "ref") {
                        AttributeBinding binding;
                        binding.attribute_type = p.value;
                        binding.loc = p.loc;
                        def.attributes.push_back(binding);
                    } else if (!def.attributes.empty()) {
                        AttributeBinding& binding = def.attributes.back();
                        binding.value = p.value;
                        binding.offset = p.offset;
                        if (p.attr == "val") binding.mode = BindingMode::Val;
                        else if (p.attr == "var") binding.mode = BindingMode::Var;
                        else binding.mode = BindingMode::Expr;
                    } else {
                        return make_error(ErrorCode::UnboundSyntax, "attribute binding without ref", p.loc);
                    }
                } else {
                    return make_error(ErrorCode::UnknownElement, "unknown populated-object property '" + p.key + "'", p.loc);
                }
            }
        }
        if (!close_body("PopulatedObjectClass")) return err(ErrorCode::UnboundSyntax, "unclosed PopulatedObjectClass");
        return def;
    }

    Result<BehaviorClassReferenceDef> parse_behavior_class_reference() {
        take();  // BehaviorClassReference
        BehaviorClassReferenceDef def;
        def.loc = cur().loc;
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
        take();
        while (!body_done()) {
            if (!at(Tok::Lt)) return err(ErrorCode::UnknownElement, "expected '<' property in BehaviorClassReference");
            auto props = parse_empty_element();
            if (!props) return props.error();
            BehaviorParameter param;
            std::string param_kind;
            for (const auto& p : props.value()) {
                if (p.key == "BehaviorClass") def.behavior = p.value;
                else if (p.key == "Probability") def.probability = std::stod(p.value);
                else if (p.key == "ParameterActor" || p.key == "ParameterActee" || p.key == "ParameterExtra") {
                    param_kind = p.key;
                    if (p.attr == "ref") param.class_ref = p.value;
                    else param.identity = p.value;
                } else {
                    return make_error(ErrorCode::UnknownElement, "unknown reference property '" + p.key + "'", p.loc);
                }
            }
            if (param_kind == "ParameterActor") def.actor = param;
            else if (param_kind == "ParameterActee") def.actee = param;
            else if (param_kind == "ParameterExtra") def.extra = param;
        }
        if (!close_body("BehaviorClassReference")) return err(ErrorCode::UnboundSyntax, "unclosed BehaviorClassReference");
        return def;
    }

    Result<std::vector<StateItem>> parse_states_body() {
        take();  // PriorStates / PostStates
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '(' after states keyword");
        take();
        std::vector<StateItem> items;
        while (!body_done()) {
            if (at_ident("PopulatedObjectClass")) {
                auto pop = parse_populated_object_class();
                if (!pop) return pop.error();
                items.push_back(pop.take());
            } else if (at_ident("BehaviorClassReference")) {
                auto ref = parse_behavior_class_reference();
                if (!ref) return ref.error();
                items.push_back(ref.take());
            } else {
                return err(ErrorCode::UnknownElement, "unexpected token in states: '" + cur().text + "'");
            }
        }
        if (!close_body("states block")) return err(ErrorCode::UnboundSyntax, "unclosed states block");
        return items;
    }

    Result<ClassDef> parse_object_frame_class() {
        take();  // ObjectFrameClass
        if (!at(Tok::String)) return err(ErrorCode::UnboundSyntax, "expected class name");
        ObjectFrameClassDef def;
        def.loc = cur().loc;
        def.name = take().text;
        if (def.name.empty()) return err(ErrorCode::UnboundSyntax, "empty class name");
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '(' after class name");
        take();
        while (!body_done()) {
            if (at(Tok::Lt)) {
                auto props = parse_empty_element();
                if (!props) return props.error();
                for (const auto& p : props.value()) {
                    if (p.key == "StructureTrait") def.structure_trait = p.value;
                    else if (p.key == "Gender") def.gender = p.value;
                    else return make_error(ErrorCode::UnknownElement, "unknown object-frame property '" + p.key + "'", p.loc);
                }
            } else if (at_ident("Dictionary")) {
                take();
                auto words = parse_dictionary_body();
                if (!words) return words.error();
                for (auto& w : words.value()) def.dictionary.push_back(lower(w));
            } else if (at_ident("DictionaryPriorWord")) {
                take();
                if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
                take();
                while (!body_done()) {
                    if (at(Tok::Lt)) {
                        auto props = parse_empty_element();
                        if (!props) return props.error();
                        for (const auto& p : props.value()) {
                            if (p.key == "DictionaryWordIsNoun") def.prior_is_noun = (p.value == "true");
                            else return make_error(ErrorCode::UnknownElement, "unknown prior-word property '" + p.key + "'", p.loc);
                        }
                    } else if (at_ident("English")) {
                        take();
                        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
                        take();
                        auto words = parse_string_list();
                        if (!words) return words.error();
                        for (auto& w : words.value()) def.dictionary_prior.push_back(lower(w));
                        consume_closers(1);  // English
                    } else {
                        return err(ErrorCode::UnknownElement, "unexpected token in DictionaryPriorWord");
                    }
                }
                if (!close_body("DictionaryPriorWord")) {
                    return err(ErrorCode::UnboundSyntax, "unclosed DictionaryPriorWord");
                }
            } else if (at_ident("HigherClasses")) {
                take();
                if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
                take();
                auto names = parse_string_list();
                if (!names) return names.error();
                def.higher_classes = names.take();
                consume_closers(1);
            } else if (at_ident("StructuralParentClassesBase")) {
                take();
                if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
                take();
                auto names = parse_string_list();
                if (!names) return names.error();
                def.structural_parent_bases = names.take();
                consume_closers(1);
            } else if (at_ident("AttributeTypes")) {
                take();
                if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
                take();
                while (at_ident("AttributeType")) {
                    auto attr = parse_attribute_type();
                    if (!attr) return attr.error();
                    def.attribute_types.push_back(attr.take());
                }
                if (!close_body("AttributeTypes")) return err(ErrorCode::UnboundSyntax, "unclosed AttributeTypes");
            } else if (at_ident("AttributeType")) {
                // The corpus sometimes lists attribute types directly at class level.
                auto attr = parse_attribute_type();
                if (!attr) return attr.error();
                def.attribute_types.push_back(attr.take());
            } else if (at_ident("DimensionSystems")) {
                take();
                if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '('");
                take();
                while (at_ident("DimensionSystem")) {
                    take();
                    if (at(Tok::String)) def.dimension_systems.push_back(take().text);
                    if (!skip_balanced_parens()) return err(ErrorCode::UnboundSyntax, "unclosed DimensionSystem");
                }
                if (!close_body("DimensionSystems")) return err(ErrorCode::UnboundSyntax, "unclosed DimensionSystems");
            } else if (at_ident("Structure")) {
                take();
                def.has_structure_block = true;
                if (!skip_balanced_parens()) return err(ErrorCode::UnboundSyntax, "unclosed Structure");
            } else {
                return err(ErrorCode::UnknownElement, "unexpected token in ObjectFrameClass: '" + cur().text + "'");
            }
        }
        if (!close_body("ObjectFrameClass")) return err(ErrorCode::UnboundSyntax, "unclosed ObjectFrameClass");
        return ClassDef{std::move(def)};
    }

    Result<ClassDef> parse_behavior_class() {
        take();  // BehaviorClass
        if (!at(Tok::String)) return err(ErrorCode::UnboundSyntax, "expected behavior class name");
        BehaviorClassDef def;
        def.loc = cur().loc;
        def.name = take().text;
        if (def.name.empty()) return err(ErrorCode::UnboundSyntax, "empty behavior class name");
        if (!at(Tok::LParen)) return err(ErrorCode::UnboundSyntax, "expected '(' after behavior name");
        take();
        while (!body_done()) {
            if (at(Tok::Lt)) {
                auto props = parse_empty_element();
                if (!props) return props.error();
                for (const auto& p : props.value()) {
                    if (p.key == "CausalRule") def.causal_rule = (p.value == "true");
                    else if (p.key == "Negation") def.negation = (p.value == "true");
                    else if (p.key == "BridgeObjectFrameClass") def.bridge_class = p.value;
                    else if (p.key == "Probability") def.probability = std::stod(p.value);
                    else return make_error(ErrorCode::UnknownElement, "unknown behavior property '" + p.key + "'", p.loc);
                }
            } else if (at_ident("Dictionary")) {
                take();
                auto words = parse_dictionary_body();
                if (!words) return words.error();
                for (auto& w : words.value()) def.verb_dictionary.push_back(lower(w));
            } else if (at_ident("PriorStates")) {
                auto items = parse_states_body();
                if (!items) return items.error();
                def.prior_states = items.take();
            } else if (at_ident("PostStates")) {
                auto items = parse_states_body();
                if (!items) return items.error();
                def.post_states = items.take();
            } else {
                return err(ErrorCode::UnknownElement, "unexpected token in BehaviorClass: '" + cur().text + "'");
            }
        }
        if (!close_body("BehaviorClass")) return err(ErrorCode::UnboundSyntax, "unclosed BehaviorClass");
        if (def.verb_dictionary.empty()) {
            return make_error(ErrorCode::UnboundSyntax,
                              "behavior class '" + def.name + "' has an empty verb dictionary", def.loc);
        }
        return ClassDef{std::move(def)};
    }

    bool skip_balanced_parens() {
        if (!at(Tok::LParen)) return false;
        int depth = 0;
        do {
            if (at(Tok::End)) return false;
            if (at(Tok::LParen)) ++depth;
            if (at(Tok::RParen)) --depth;
            take();
        } while (depth > 0);
        if (at(Tok::Semi)) take();
        return true;
    }

    static std::string lower(const std::string& s) {
        std::string out = s;
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        return out;
    }

    std::vector<Token> toks_;
    size_t idx_ = 0;
    StarDocument doc_;
};

}  // namespace

Result<StarDocument> parse_star(const std::string& source, const std::string& source_name) {
    Lexer lexer(source);
    auto toks = lexer.run();
    if (!toks) return toks.error();
    Parser parser(toks.take(), source_name);
    return parser.run();
}

}  // namespace ross::star
