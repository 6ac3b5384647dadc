#include "ross/star/ontology.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ross/star/parser.hpp"

namespace ross::star {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool same_attribute_type(const AttributeTypeDef& a, const AttributeTypeDef& b) {
    if (a.super_type != b.super_type || a.is_state != b.is_state ||
        a.optional_causal_feature != b.optional_causal_feature ||
        a.values.size() != b.values.size()) {
        return false;
    }
    for (size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].name != b.values[i].name ||
            a.values[i].dictionary != b.values[i].dictionary) {
            return false;
        }
    }
    return true;
}

void merge_words(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& w : from) {
        if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
    }
}

}  // namespace

bool role_of_label(const std::string& label, RuleRole* role) {
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return label.size() >= s.size() && label.compare(label.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with("Actor")) { *role = RuleRole::Actor; return true; }
    if (ends_with("Actee")) { *role = RuleRole::Actee; return true; }
    if (ends_with("Extra")) { *role = RuleRole::Extra; return true; }
    return false;
}

const ObjectFrameClass* Ontology::find_class(const std::string& name) const {
    auto it = classes_.find(name);
    return it == classes_.end() ? nullptr : &it->second;
}

const BehaviorClass* Ontology::find_behavior(const std::string& name) const {
    auto it = behaviors_.find(name);
    return it == behaviors_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& Ontology::ancestors(const std::string& name) const {
    static const std::vector<std::string> kEmpty;
    auto it = ancestors_.find(name);
    return it == ancestors_.end() ? kEmpty : it->second;
}

bool Ontology::is_ancestor_or_equal(const std::string& ancestor,
                                    const std::string& descendant) const {
    if (ancestor == descendant) return true;
    const auto& anc = ancestors(descendant);
    return std::find(anc.begin(), anc.end(), ancestor) != anc.end();
}

std::vector<const ObjectFrameClass*> Ontology::lookup_noun(const std::string& word,
                                                           const std::string& prev_word) const {
    std::vector<const ObjectFrameClass*> out;
    std::string w = lower(word);
    if (!prev_word.empty()) {
        auto it = two_word_index_.find(lower(prev_word));
        if (it != two_word_index_.end()) {
            for (const auto& name : it->second) {
                const ObjectFrameClass* cls = find_class(name);
                if (cls && std::find(cls->dictionary.begin(), cls->dictionary.end(), w) !=
                               cls->dictionary.end()) {
                    out.push_back(cls);
                }
            }
        }
        if (!out.empty()) return out;
    }
    auto it = noun_index_.find(w);
    if (it != noun_index_.end()) {
        for (const auto& name : it->second) out.push_back(find_class(name));
    }
    return out;
}

bool Ontology::is_plural_form(const ObjectFrameClass& cls, const std::string& word) const {
    std::string w = lower(word);
    for (size_t i = 0; i < cls.dictionary.size(); ++i) {
        if (cls.dictionary[i] == w) return i > 0;
    }
    return false;
}

std::vector<const BehaviorClass*> Ontology::behaviors_for_verb(const std::string& verb) const {
    std::vector<const BehaviorClass*> out;
    auto it = verb_index_.find(lower(verb));
    if (it != verb_index_.end()) {
        for (const auto& name : it->second) out.push_back(find_behavior(name));
    }
    return out;
}

std::vector<const BehaviorClass*> Ontology::search_behavior_classes(
    const std::string& verb, bool negation, const std::vector<std::string>& actor_classes,
    const std::vector<std::string>& actee_classes, const std::vector<std::string>& extra_classes,
    SearchDirection) const {
    std::vector<const BehaviorClass*> out;
    for (const BehaviorClass* behavior : behaviors_for_verb(verb)) {
        if (behavior->def.negation != negation) continue;
        auto covers = [&](RuleRole role, const std::vector<std::string>& supplied) {
            for (const auto& cls : supplied) {
                bool found = false;
                for (const auto& item : behavior->def.prior_states) {
                    const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
                    if (!pop) continue;
                    RuleRole pop_role;
                    if (!role_of_label(pop->role_label, &pop_role) || pop_role != role) continue;
                    if (is_ancestor_or_equal(pop->object_class, cls)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
            return true;
        };
        if (!covers(RuleRole::Actor, actor_classes)) continue;
        if (!covers(RuleRole::Actee, actee_classes)) continue;
        if (!covers(RuleRole::Extra, extra_classes)) continue;
        out.push_back(behavior);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const BehaviorClass* a, const BehaviorClass* b) { return a->order < b->order; });
    return out;
}

const AttributeTypeDef* Ontology::find_attribute_type(const std::string& class_name,
                                                      const std::string& type_name,
                                                      std::string* declaring_class) const {
    auto check = [&](const std::string& name) -> const AttributeTypeDef* {
        const ObjectFrameClass* cls = find_class(name);
        if (!cls) return nullptr;
        for (const auto& attr : cls->attribute_types) {
            if (attr.name == type_name) {
                if (declaring_class) *declaring_class = name;
                return &attr;
            }
        }
        return nullptr;
    };
    if (const AttributeTypeDef* attr = check(class_name)) return attr;
    for (const auto& anc : ancestors(class_name)) {
        if (const AttributeTypeDef* attr = check(anc)) return attr;
    }
    return nullptr;
}

std::string Ontology::effective_gender(const std::string& class_name) const {
    const ObjectFrameClass* cls = find_class(class_name);
    if (cls && !cls->gender.empty()) return cls->gender;
    for (const auto& anc : ancestors(class_name)) {
        const ObjectFrameClass* a = find_class(anc);
        if (a && !a->gender.empty()) return a->gender;
    }
    return "";
}

const BehaviorClassReferenceDef* nested_reference(const BehaviorClass& behavior) {
    for (const auto& item : behavior.def.prior_states) {
        if (const auto* ref = std::get_if<BehaviorClassReferenceDef>(&item)) return ref;
    }
    return nullptr;
}

const BehaviorClassReferenceDef* nested_reference_any(const BehaviorClass& behavior) {
    if (const auto* ref = nested_reference(behavior)) return ref;
    for (const auto& item : behavior.def.post_states) {
        if (const auto* ref = std::get_if<BehaviorClassReferenceDef>(&item)) return ref;
    }
    return nullptr;
}

bool identity_role(const BehaviorClass& behavior, const std::string& symbol, RuleRole* role) {
    for (const auto& item : behavior.def.prior_states) {
        const auto* pop = std::get_if<PopulatedObjectClassDef>(&item);
        if (!pop) continue;
        for (const auto& binding : pop->attributes) {
            if (binding.mode == BindingMode::Var && binding.value == symbol) {
                return role_of_label(pop->role_label, role);
            }
        }
    }
    return false;
}

Result<Ontology> link_ontology(const std::vector<StarDocument>& docs) {
    Ontology ont;
    int order = 0;

    // Merge object frame classes; collect behavior classes.
    for (const auto& doc : docs) {
        for (const auto& def : doc.class_defs) {
            if (const auto* obj = std::get_if<ObjectFrameClassDef>(&def)) {
                auto [it, inserted] = ont.classes_.try_emplace(obj->name);
                ObjectFrameClass& merged = it->second;
                if (inserted) {
                    merged.name = obj->name;
                    merged.order = order++;
                }
                if (merged.structure_trait.empty()) merged.structure_trait = obj->structure_trait;
                if (merged.gender.empty()) merged.gender = obj->gender;
                merged.prior_is_noun = merged.prior_is_noun || obj->prior_is_noun;
                merge_words(merged.dictionary, obj->dictionary);
                merge_words(merged.dictionary_prior, obj->dictionary_prior);
                merge_words(merged.higher_classes, obj->higher_classes);
                merge_words(merged.structural_parent_bases, obj->structural_parent_bases);
                merge_words(merged.dimension_systems, obj->dimension_systems);
                for (const auto& attr : obj->attribute_types) {
                    auto existing = std::find_if(
                        merged.attribute_types.begin(), merged.attribute_types.end(),
                        [&](const AttributeTypeDef& a) { return a.name == attr.name; });
                    if (existing == merged.attribute_types.end()) {
                        merged.attribute_types.push_back(attr);
                    } else if (!same_attribute_type(*existing, attr)) {
                        return make_error(ErrorCode::DuplicateAttributeType,
                                          "class '" + obj->name + "' redefines attribute type '" +
                                              attr.name + "' with a different value set",
                                          attr.loc);
                    }
                }
            } else {
                const auto& beh = std::get<BehaviorClassDef>(def);
                auto [it, inserted] = ont.behaviors_.try_emplace(beh.name, BehaviorClass{beh, order});
                if (!inserted) {
                    return make_error(ErrorCode::UnboundSyntax,
                                      "duplicate behavior class '" + beh.name + "'", beh.loc);
                }
                ++order;
            }
        }
    }

    // Resolve class references and compute the inheritance closure.
    for (const auto& [name, cls] : ont.classes_) {
        for (const auto& higher : cls.higher_classes) {
            if (!ont.classes_.count(higher)) {
                return make_error(ErrorCode::UnresolvedRef,
                                  "unresolved higher class '" + higher + "' referenced by '" + name + "'");
            }
        }
        for (const auto& base : cls.structural_parent_bases) {
            if (!ont.classes_.count(base)) {
                return make_error(ErrorCode::UnresolvedRef,
                                  "unresolved structural parent '" + base + "' referenced by '" + name + "'");
            }
        }
    }
    for (const auto& [name, cls] : ont.classes_) {
        std::vector<std::string> chain;       // DFS path, for cycle reporting
        std::vector<std::string> closure;
        std::set<std::string> visiting, done;
        std::string cycle;
        // Iterative DFS preserving declaration order.
        struct Frame { const ObjectFrameClass* cls; size_t next; };
        std::vector<Frame> stack{{&cls, 0}};
        visiting.insert(name);
        chain.push_back(name);
        while (!stack.empty()) {
            Frame& frame = stack.back();
            if (frame.next >= frame.cls->higher_classes.size()) {
                visiting.erase(frame.cls->name);
                done.insert(frame.cls->name);
                chain.pop_back();
                stack.pop_back();
                continue;
            }
            const std::string& higher = frame.cls->higher_classes[frame.next++];
            if (visiting.count(higher)) {
                std::ostringstream path;
                for (const auto& link : chain) path << link << " -> ";
                path << higher;
                return make_error(ErrorCode::CycleDetected,
                                  "inheritance cycle: " + path.str());
            }
            if (std::find(closure.begin(), closure.end(), higher) == closure.end()) {
                closure.push_back(higher);
            }
            if (!done.count(higher)) {
                const ObjectFrameClass* next_cls = ont.find_class(higher);
                visiting.insert(higher);
                chain.push_back(higher);
                stack.push_back({next_cls, 0});
            } else {
                // Splice the already-computed descendants of `higher`.
                for (const auto& deep : ont.ancestors_[higher]) {
                    if (std::find(closure.begin(), closure.end(), deep) == closure.end()) {
                        closure.push_back(deep);
                    }
                }
            }
        }
        ont.ancestors_[name] = std::move(closure);
    }

    // Validate behavior classes.
    for (const auto& [name, behavior] : ont.behaviors_) {
        const BehaviorClassDef& def = behavior.def;
        if (!def.bridge_class.empty() && !ont.classes_.count(def.bridge_class)) {
            return make_error(ErrorCode::UnresolvedRef,
                              "unresolved bridge class '" + def.bridge_class + "' in '" + name + "'",
                              def.loc);
        }
        std::set<std::string> bound_vars;       // var occurrences, in order
        std::set<std::string> all_vars;
        for (const auto& item : def.prior_states) {
            if (const auto* pop = std::get_if<PopulatedObjectClassDef>(&item)) {
                for (const auto& b : pop->attributes) {
                    if (b.mode == BindingMode::Var) all_vars.insert(b.value);
                }
            }
        }
        for (const auto& item : def.post_states) {
            if (const auto* pop = std::get_if<PopulatedObjectClassDef>(&item)) {
                for (const auto& b : pop->attributes) {
                    if (b.mode == BindingMode::Var) all_vars.insert(b.value);
                }
            }
        }
        auto check_items = [&](const std::vector<StateItem>& items, bool prior) -> std::optional<Error> {
            for (const auto& item : items) {
                if (const auto* pop = std::get_if<PopulatedObjectClassDef>(&item)) {
                    RuleRole role;
                    if (!role_of_label(pop->role_label, &role)) {
                        return make_error(ErrorCode::UnboundSyntax,
                                          "unrecognized role label '" + pop->role_label + "' in '" + name + "'",
                                          pop->loc);
                    }
                    const char* expected = prior ? "Antecedent" : "Consequent";
                    if (pop->role_label.rfind(expected, 0) != 0) {
                        return make_error(ErrorCode::UnboundSyntax,
                                          "role label '" + pop->role_label + "' in the wrong states section of '" +
                                              name + "'",
                                          pop->loc);
                    }
                    if (!ont.classes_.count(pop->object_class)) {
                        return make_error(ErrorCode::UnresolvedRef,
                                          "unresolved object class '" + pop->object_class + "' in '" + name + "'",
                                          pop->loc);
                    }
                    for (const auto& binding : pop->attributes) {
                        const AttributeTypeDef* attr =
                            ont.find_attribute_type(pop->object_class, binding.attribute_type);
                        if (!attr) {
                            return make_error(ErrorCode::UnresolvedRef,
                                              "attribute type '" + binding.attribute_type +
                                                  "' not found on '" + pop->object_class + "' in '" + name + "'",
                                              binding.loc);
                        }
                        if (binding.mode == BindingMode::Val) {
                            bool legal = std::any_of(attr->values.begin(), attr->values.end(),
                                                     [&](const AttributeValueDef& v) { return v.name == binding.value; });
                            if (!legal) {
                                return make_error(ErrorCode::IllegalValueBinding,
                                                  "value '" + binding.value + "' not in value set of '" +
                                                      binding.attribute_type + "' (rule '" + name + "')",
                                                  binding.loc);
                            }
                        } else if (binding.mode == BindingMode::Var) {
                            bound_vars.insert(binding.value);
                        } else {
                            if (!bound_vars.count(binding.value)) {
                                return make_error(ErrorCode::UnboundSyntax,
                                                  "expr symbol '" + binding.value +
                                                      "' used before any var binding in '" + name + "'",
                                                  binding.loc);
                            }
                        }
                    }
                } else {
                    const auto& ref = std::get<BehaviorClassReferenceDef>(item);
                    if (!ont.behaviors_.count(ref.behavior)) {
                        return make_error(ErrorCode::UnresolvedRef,
                                          "unresolved behavior reference '" + ref.behavior + "' in '" + name + "'",
                                          ref.loc);
                    }
                    for (const auto* param : {&ref.actor, &ref.actee, &ref.extra}) {
                        if (!param->has_value()) continue;
                        if (!ont.classes_.count((*param)->class_ref)) {
                            return make_error(ErrorCode::UnresolvedRef,
                                              "unresolved parameter class '" + (*param)->class_ref + "' in '" +
                                                  name + "'",
                                              ref.loc);
                        }
                        if (!(*param)->identity.empty() && !all_vars.count((*param)->identity)) {
                            return make_error(ErrorCode::UnboundSyntax,
                                              "identity symbol '" + (*param)->identity +
                                                  "' is not bound anywhere in '" + name + "'",
                                              ref.loc);
                        }
                    }
                }
            }
            return std::nullopt;
        };
        if (auto e = check_items(def.prior_states, true)) return *e;
        if (auto e = check_items(def.post_states, false)) return *e;
    }

    // Word indices.
    for (const auto& [name, cls] : ont.classes_) {
        if (cls.dictionary_prior.empty()) {
            for (const auto& w : cls.dictionary) ont.noun_index_[w].push_back(name);
        } else {
            for (const auto& p : cls.dictionary_prior) ont.two_word_index_[p].push_back(name);
        }
    }
    for (auto& [word, names] : ont.noun_index_) {
        std::stable_sort(names.begin(), names.end(), [&](const auto& a, const auto& b) {
            return ont.classes_.at(a).order < ont.classes_.at(b).order;
        });
    }
    for (const auto& [name, behavior] : ont.behaviors_) {
        std::set<std::string> seen;
        for (const auto& form : behavior.def.verb_dictionary) {
            if (seen.insert(form).second) ont.verb_index_[form].push_back(name);
        }
    }
    for (auto& [word, names] : ont.verb_index_) {
        std::stable_sort(names.begin(), names.end(), [&](const auto& a, const auto& b) {
            return ont.behaviors_.at(a).order < ont.behaviors_.at(b).order;
        });
    }

    return ont;
}

Result<Ontology> load_ontology_dir(const std::string& dir, std::vector<Diagnostic>* diagnostics) {
    namespace fs = std::filesystem;
    fs::path manifest = fs::path(dir) / "manifest.txt";
    std::ifstream in(manifest);
    if (!in) {
        return make_error(ErrorCode::OntologyLoadError, "cannot open " + manifest.string());
    }
    std::vector<StarDocument> docs;
    std::string line;
    while (std::getline(in, line)) {
        std::string name;
        for (char c : line) {
            if (c == '#') break;
            name += c;
        }
        while (!name.empty() && (name.back() == ' ' || name.back() == '\r' || name.back() == '\t')) {
            name.pop_back();
        }
        size_t b = name.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        name = name.substr(b);
        fs::path file = fs::path(dir) / name;
        std::ifstream src(file);
        if (!src) {
            return make_error(ErrorCode::OntologyLoadError, "cannot open " + file.string());
        }
        std::ostringstream text;
        text << src.rdbuf();
        auto doc = parse_star(text.str(), name);
        if (!doc) {
            Error e = doc.error();
            e.message = name + ": " + e.message;
            if (e.code != ErrorCode::OntologyLoadError) e.code = ErrorCode::OntologyLoadError;
            return e;
        }
        if (diagnostics) {
            for (const auto& d : doc.value().diagnostics) diagnostics->push_back(d);
        }
        docs.push_back(doc.take());
    }
    auto linked = link_ontology(docs);
    if (!linked) {
        Error e = linked.error();
        e.code = ErrorCode::OntologyLoadError;
        return e;
    }
    return linked;
}

}  // namespace ross::star
