#include <sstream>

#include "ross/star/parser.hpp"

namespace ross::star {

namespace {

void emit_word_list(std::ostringstream& out, const std::vector<std::string>& words,
                    const std::string& indent) {
    out << indent << "  {";
    for (size_t i = 0; i < words.size(); ++i) {
        out << (i ? ", " : " ") << '"' << words[i] << '"';
    }
    out << " }\n";
}

void emit_attribute_type(std::ostringstream& out, const AttributeTypeDef& def,
                         const std::string& indent) {
    out << indent << "AttributeType \"" << def.name << "\"\n" << indent << "(\n";
    if (!def.super_type.empty()) {
        out << indent << "  <SuperType val = \"" << def.super_type << "\" />\n";
    }
    if (def.is_state) out << indent << "  <StateAttributeType val = \"true\" />\n";
    if (def.optional_causal_feature) out << indent << "  <OptionalCausalFeature val = \"true\" />\n";
    if (!def.values.empty()) {
        out << indent << "  \"Values\"\n" << indent << "  (\n" << indent << "    {\n";
        for (const auto& value : def.values) {
            out << indent << "      \"" << value.name << '"';
            if (!value.dictionary.empty()) {
                out << " : Dictionary ( English ( {";
                for (size_t i = 0; i < value.dictionary.size(); ++i) {
                    out << (i ? ", " : " ") << '"' << value.dictionary[i] << '"';
                }
                out << " } ) );";
            } else {
                out << ",";
            }
            out << "\n";
        }
        out << indent << "    }\n" << indent << "  );\n";
    }
    out << indent << ");\n";
}

void emit_binding(std::ostringstream& out, const AttributeBinding& binding,
                  const std::string& indent) {
    out << indent << "<Attribute ref = " << binding.attribute_type;
    switch (binding.mode) {
        case BindingMode::Val:
            out << " val = \"" << binding.value << "\"";
            break;
        case BindingMode::Var:
            out << " var = " << binding.value;
            break;
        case BindingMode::Expr:
            if (binding.offset != 0) {
                out << " expr = (" << binding.value << "+" << binding.offset << ")";
            } else {
                out << " expr = " << binding.value;
            }
            break;
    }
    out << " />\n";
}

void emit_state_items(std::ostringstream& out, const std::vector<StateItem>& items,
                      const std::string& indent) {
    for (const auto& item : items) {
        if (const auto* pop = std::get_if<PopulatedObjectClassDef>(&item)) {
            out << indent << "PopulatedObjectClass \"" << pop->role_label << "\"\n"
                << indent << "(\n";
            out << indent << "  <ObjectFrameClass ref = " << pop->object_class << " />\n";
            if (pop->binder_source) out << indent << "  <BinderSourceFlag val = \"true\" />\n";
            if (pop->passive_participant) out << indent << "  <PassiveParticipant val = \"true\" />\n";
            if (pop->extra_participant) out << indent << "  <ExtraParticipant val = \"true\" />\n";
            if (pop->multiple) out << indent << "  <Multiple val = \"true\" />\n";
            if (!pop->dimension_system.empty()) {
                out << indent << "  <DimensionSystem ref = " << pop->dimension_system << " />\n";
            }
            for (const auto& binding : pop->attributes) {
                emit_binding(out, binding, indent + "  ");
            }
            out << indent << ");\n";
        } else {
            const auto& ref = std::get<BehaviorClassReferenceDef>(item);
            out << indent << "BehaviorClassReference\n" << indent << "(\n";
            if (ref.probability) out << indent << "  <Probability expr = " << *ref.probability << " />\n";
            out << indent << "  <BehaviorClass ref = " << ref.behavior << " />\n";
            auto emit_param = [&](const char* name, const std::optional<BehaviorParameter>& param) {
                if (!param) return;
                out << indent << "  <" << name << " ref = " << param->class_ref;
                if (!param->identity.empty()) out << " expr = " << param->identity;
                out << " />\n";
            };
            emit_param("ParameterActor", ref.actor);
            emit_param("ParameterActee", ref.actee);
            emit_param("ParameterExtra", ref.extra);
            out << indent << ");\n";
        }
    }
}

}  // namespace

std::string pretty_print(const StarDocument& doc) {
    std::ostringstream out;
    for (const auto& def : doc.class_defs) {
        if (const auto* obj = std::get_if<ObjectFrameClassDef>(&def)) {
            out << "ObjectFrameClass \"" << obj->name << "\"\n(\n";
            if (!obj->structure_trait.empty()) {
                out << "  <StructureTrait val = \"" << obj->structure_trait << "\" />\n";
            }
            if (!obj->gender.empty()) out << "  <Gender val = \"" << obj->gender << "\" />\n";
            if (!obj->dictionary_prior.empty()) {
                out << "  DictionaryPriorWord\n  (\n";
                if (obj->prior_is_noun) out << "    <DictionaryWordIsNoun val = \"true\" />\n";
                out << "    English\n    (\n";
                emit_word_list(out, obj->dictionary_prior, "    ");
                out << "    );\n  );\n";
            }
            if (!obj->dictionary.empty()) {
                out << "  Dictionary ( English\n  (\n";
                emit_word_list(out, obj->dictionary, "  ");
                out << "  ););\n";
            }
            if (!obj->higher_classes.empty()) {
                out << "  HigherClasses\n  (\n";
                emit_word_list(out, obj->higher_classes, "  ");
                out << "  );\n";
            }
            if (!obj->structural_parent_bases.empty()) {
                out << "  StructuralParentClassesBase\n  (\n";
                emit_word_list(out, obj->structural_parent_bases, "  ");
                out << "  );\n";
            }
            if (!obj->attribute_types.empty()) {
                out << "  AttributeTypes\n  (\n";
                for (const auto& attr : obj->attribute_types) {
                    emit_attribute_type(out, attr, "    ");
                }
                out << "  );\n";
            }
            if (!obj->dimension_systems.empty()) {
                out << "  DimensionSystems\n  (\n";
                for (const auto& name : obj->dimension_systems) {
                    out << "    DimensionSystem \"" << name << "\" ();\n";
                }
                out << "  );\n";
            }
            if (obj->has_structure_block) out << "  Structure ();\n";
            out << ");\n\n";
        } else {
            const auto& beh = std::get<BehaviorClassDef>(def);
            out << "BehaviorClass \"" << beh.name << "\"\n(\n";
            if (beh.causal_rule) out << "  <CausalRule val = \"true\" />\n";
            if (beh.negation) out << "  <Negation val = \"true\" />\n";
            if (!beh.bridge_class.empty()) {
                out << "  <BridgeObjectFrameClass ref = " << beh.bridge_class << " />\n";
            }
            if (beh.probability) out << "  <Probability expr = " << *beh.probability << " />\n";
            if (!beh.verb_dictionary.empty()) {
                out << "  Dictionary ( English\n  (\n";
                emit_word_list(out, beh.verb_dictionary, "  ");
                out << "  ););\n";
            }
            if (!beh.prior_states.empty()) {
                out << "  PriorStates\n  (\n";
                emit_state_items(out, beh.prior_states, "    ");
                out << "  );\n";
            }
            if (!beh.post_states.empty()) {
                out << "  PostStates\n  (\n";
                emit_state_items(out, beh.post_states, "    ");
                out << "  );\n";
            }
            out << ");\n\n";
        }
    }
    return out.str();
}

namespace {

bool equal(const AttributeBinding& a, const AttributeBinding& b) {
    return a.attribute_type == b.attribute_type && a.mode == b.mode && a.value == b.value &&
           a.offset == b.offset;
}

bool equal(const AttributeTypeDef& a, const AttributeTypeDef& b) {
    if (a.name != b.name || a.super_type != b.super_type || a.is_state != b.is_state ||
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

bool equal(const PopulatedObjectClassDef& a, const PopulatedObjectClassDef& b) {
    if (a.role_label != b.role_label || a.object_class != b.object_class ||
        a.binder_source != b.binder_source || a.passive_participant != b.passive_participant ||
        a.extra_participant != b.extra_participant || a.multiple != b.multiple ||
        a.dimension_system != b.dimension_system || a.attributes.size() != b.attributes.size()) {
        return false;
    }
    for (size_t i = 0; i < a.attributes.size(); ++i) {
        if (!equal(a.attributes[i], b.attributes[i])) return false;
    }
    return true;
}

bool equal(const std::optional<BehaviorParameter>& a, const std::optional<BehaviorParameter>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->class_ref == b->class_ref && a->identity == b->identity;
}

bool equal(const std::vector<StateItem>& a, const std::vector<StateItem>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].index() != b[i].index()) return false;
        if (const auto* pa = std::get_if<PopulatedObjectClassDef>(&a[i])) {
            if (!equal(*pa, std::get<PopulatedObjectClassDef>(b[i]))) return false;
        } else {
            const auto& ra = std::get<BehaviorClassReferenceDef>(a[i]);
            const auto& rb = std::get<BehaviorClassReferenceDef>(b[i]);
            if (ra.behavior != rb.behavior || ra.probability != rb.probability ||
                !equal(ra.actor, rb.actor) || !equal(ra.actee, rb.actee) ||
                !equal(ra.extra, rb.extra)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool structurally_equal(const StarDocument& a, const StarDocument& b) {
    if (a.class_defs.size() != b.class_defs.size()) return false;
    for (size_t i = 0; i < a.class_defs.size(); ++i) {
        const auto& da = a.class_defs[i];
        const auto& db = b.class_defs[i];
        if (da.index() != db.index()) return false;
        if (const auto* oa = std::get_if<ObjectFrameClassDef>(&da)) {
            const auto& ob = std::get<ObjectFrameClassDef>(db);
            if (oa->name != ob.name || oa->structure_trait != ob.structure_trait ||
                oa->dictionary != ob.dictionary || oa->dictionary_prior != ob.dictionary_prior ||
                oa->prior_is_noun != ob.prior_is_noun || oa->higher_classes != ob.higher_classes ||
                oa->structural_parent_bases != ob.structural_parent_bases ||
                oa->dimension_systems != ob.dimension_systems || oa->gender != ob.gender ||
                oa->attribute_types.size() != ob.attribute_types.size()) {
                return false;
            }
            for (size_t j = 0; j < oa->attribute_types.size(); ++j) {
                if (!equal(oa->attribute_types[j], ob.attribute_types[j])) return false;
            }
        } else {
            const auto& ba = std::get<BehaviorClassDef>(da);
            const auto& bb = std::get<BehaviorClassDef>(db);
            if (ba.name != bb.name || ba.causal_rule != bb.causal_rule ||
                ba.negation != bb.negation || ba.bridge_class != bb.bridge_class ||
                ba.probability != bb.probability || ba.verb_dictionary != bb.verb_dictionary ||
                !equal(ba.prior_states, bb.prior_states) ||
                !equal(ba.post_states, bb.post_states)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace ross::star
