#include "ross/syntax/bracketed.hpp"

#include <cctype>
#include <set>

#include "ross/syntax/parser.hpp"
#include "ross/syntax/to_snf.hpp"

namespace ross::syntax {

namespace {

struct Node {
    std::string label;
    std::string token;  // leaf text
    std::vector<Node> children;

    bool leaf() const { return children.empty() && !token.empty(); }
};

bool label_supported(const std::string& label) {
    static const std::set<std::string> exact = {"ROOT", "S",  "NP",  "VP", "PP", "SBAR",
                                                "ADJP", "DT", "NN",  "NNS", "JJ", "RB",
                                                "PRP",  "IN", "MD",  "."};
    if (exact.count(label)) return true;
    return label.rfind("VB", 0) == 0;  // VB, VBD, VBZ, VBN, VBG, VBP
}

class TreeReader {
public:
    explicit TreeReader(const std::string& text) : text_(text) {}

    Result<Node> run() {
        skip_ws();
        auto node = read_node();
        if (!node) return node;
        skip_ws();
        if (pos_ != text_.size()) {
            return make_error(ErrorCode::SyntaxError, "trailing text after tree");
        }
        return node;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Result<Node> read_node() {
        if (pos_ >= text_.size() || text_[pos_] != '(') {
            return make_error(ErrorCode::SyntaxError, "expected '('");
        }
        ++pos_;
        skip_ws();
        Node node;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')') {
            node.label += text_[pos_++];
        }
        if (node.label.empty()) return make_error(ErrorCode::SyntaxError, "node without label");
        if (!label_supported(node.label)) {
            return make_error(ErrorCode::UnsupportedLabel, "unsupported label '" + node.label + "'");
        }
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] != ')') {
            if (text_[pos_] == '(') {
                auto child = read_node();
                if (!child) return child;
                node.children.push_back(child.take());
            } else {
                std::string token;
                while (pos_ < text_.size() &&
                       !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
                       text_[pos_] != '(' && text_[pos_] != ')') {
                    token += text_[pos_++];
                }
                node.token = token;
            }
            skip_ws();
        }
        if (pos_ >= text_.size()) return make_error(ErrorCode::SyntaxError, "unclosed node");
        ++pos_;  // ')'
        return node;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

bool is_verb_tag(const std::string& label) {
    return label.rfind("VB", 0) == 0 || label == "MD";
}

std::string normalize_verb(const std::string& token) {
    if (token == "'s") return "is";
    if (token == "n't") return "not";
    return token;
}

std::string lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

TreeNounPhrase convert_np_node(const Node& np) {
    TreeNounPhrase out;
    for (const auto& child : np.children) {
        if (child.label == "DT") {
            out.specifiers.push_back(lower(child.token));
        } else if (child.label == "JJ") {
            out.qualifiers.push_back(lower(child.token));
        } else if (child.label == "NN" || child.label == "NNS") {
            if (!out.head.empty()) out.qualifiers.push_back(out.head);
            out.head = child.token;
            out.head_kind = snf::HeadKind::CommonNoun;
            out.plural = (child.label == "NNS");
        } else if (child.label == "PRP") {
            out.head = child.token;
            out.head_kind = snf::HeadKind::Pronoun;
        } else if (child.label == "NP") {
            TreeNounPhrase inner = convert_np_node(child);
            out.specifiers.insert(out.specifiers.end(), inner.specifiers.begin(),
                                  inner.specifiers.end());
            out.qualifiers.insert(out.qualifiers.end(), inner.qualifiers.begin(),
                                  inner.qualifiers.end());
            if (out.head.empty()) {
                out.head = inner.head;
                out.head_kind = inner.head_kind;
                out.plural = inner.plural;
            }
        }
    }
    return out;
}

struct VpParts {
    std::vector<std::string> verbs;  // in order
    std::vector<std::string> adverbs;
    std::string adjective;
    std::string degree;
    std::vector<TreePP> complements;
    std::optional<std::pair<std::string, Node>> subordinate;  // introducer, S node
    std::optional<TreeNounPhrase> object;
    std::optional<TreeNounPhrase> second_object;
};

Result<bool> collect_vp(const Node& vp, VpParts& parts) {
    for (const auto& child : vp.children) {
        if (is_verb_tag(child.label)) {
            parts.verbs.push_back(normalize_verb(child.token));
        } else if (child.label == "RB") {
            std::string adv = normalize_verb(child.token);
            if (adv == "too" || adv == "so") {
                parts.degree = "too";
            } else {
                parts.adverbs.push_back(adv);
            }
        } else if (child.label == "VP") {
            auto nested = collect_vp(child, parts);
            if (!nested) return nested.error();
        } else if (child.label == "PP") {
            TreePP pp;
            for (const auto& inner : child.children) {
                if (inner.label == "IN") pp.preposition = inner.token;
                if (inner.label == "NP") pp.noun_phrase = convert_np_node(inner);
            }
            parts.complements.push_back(std::move(pp));
        } else if (child.label == "ADJP") {
            for (const auto& inner : child.children) {
                if (inner.label == "RB" &&
                    (inner.token == "too" || inner.token == "so")) {
                    parts.degree = "too";
                } else if (inner.label == "JJ") {
                    parts.adjective = inner.token;
                }
            }
        } else if (child.label == "SBAR") {
            std::string introducer;
            const Node* s = nullptr;
            for (const auto& inner : child.children) {
                if (inner.label == "IN") introducer = inner.token;
                if (inner.label == "S") s = &inner;
            }
            if (!s) return make_error(ErrorCode::SyntaxError, "SBAR without S");
            parts.subordinate = std::make_pair(introducer, *s);
        } else if (child.label == "NP") {
            if (!parts.object) {
                parts.object = convert_np_node(child);
            } else {
                parts.second_object = convert_np_node(child);
            }
        }
    }
    return true;
}

Result<TreeMeaningUnit> convert_clause(const Node& s, std::optional<std::pair<std::string, Node>>* subordinate);

Result<TreeMeaningUnit> convert_clause(const Node& s,
                                       std::optional<std::pair<std::string, Node>>* subordinate) {
    TreeMeaningUnit unit;
    const Node* vp = nullptr;
    for (const auto& child : s.children) {
        if (child.label == "NP" && unit.subject.head.empty()) {
            unit.subject = convert_np_node(child);
        } else if (child.label == "VP") {
            vp = &child;
        }
    }
    if (!vp) return make_error(ErrorCode::SyntaxError, "clause without VP");
    VpParts parts;
    auto ok = collect_vp(*vp, parts);
    if (!ok) return ok.error();

    static const std::set<std::string> to_be = {"is", "was", "are", "were"};
    static const std::set<std::string> aux = {"does", "do", "did", "can", "could", "will",
                                              "would", "has", "have", "had"};
    bool past = false;
    for (const auto& verb : parts.verbs) {
        if (to_be.count(verb)) {
            unit.copula = verb;
            past = past || verb == "was" || verb == "were";
        } else if (aux.count(verb)) {
            unit.aux_verb = verb;
            past = past || verb == "did" || verb == "could" || verb == "had";
        } else {
            unit.main_verb = verb;
        }
    }
    for (const auto& adv : parts.adverbs) {
        if (adv == "not") unit.pre_verb_adverbs.push_back("not");
    }
    if (!parts.degree.empty()) unit.post_verb_adverbs.push_back("too");
    unit.post_verb_adjective = parts.adjective;
    unit.direct_object = parts.object;
    unit.second_object = parts.second_object;
    // Copula + participle is a passive; a by-phrase supplies the agent.
    if (!unit.copula.empty() && !unit.main_verb.empty() && unit.post_verb_adjective.empty()) {
        unit.passive = true;
    }
    for (auto& pp : parts.complements) {
        if (unit.passive && pp.preposition == "by" && !unit.by_phrase) {
            unit.by_phrase = pp;
        } else {
            unit.complements.push_back(pp);
        }
    }
    if (unit.main_verb.empty() && unit.copula.empty()) {
        return make_error(ErrorCode::SyntaxError, "clause without a verb");
    }
    // Tense: prefer an explicit past-tense verb tag; aux/copula computed above.
    unit.discourse = past ? snf::DiscourseContext::DeclarativePastSimple
                          : snf::DiscourseContext::DeclarativePresentSimple;
    if (subordinate) *subordinate = parts.subordinate;
    return unit;
}

}  // namespace

Result<snf::PredicateExpression> bracketed_tree_to_snf(const std::string& text) {
    TreeReader reader(text);
    auto root = reader.run();
    if (!root) return root.error();

    const Node* s = &root.value();
    if (s->label == "ROOT") {
        for (const auto& child : s->children) {
            if (child.label == "S") {
                s = &child;
                break;
            }
        }
    }
    if (s->label != "S") return make_error(ErrorCode::SyntaxError, "no S clause under ROOT");

    SyntaxTree tree;
    std::optional<std::pair<std::string, Node>> subordinate;
    auto main = convert_clause(*s, &subordinate);
    if (!main) return main.error();
    tree.units.push_back(main.take());
    while (subordinate) {
        auto pair = *subordinate;
        subordinate.reset();
        auto sub = convert_clause(pair.second, &subordinate);
        if (!sub) return sub.error();
        sub.value().introductory_word = pair.first;
        tree.units.push_back(sub.take());
    }
    return tree_to_snf(tree);
}

}  // namespace ross::syntax
