#include "ross/model/instance.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ross::model {

void ObjectInstance::upsert_attribute(const std::string& type, const std::string& value,
                                      const std::string& declaring_class) {
    for (auto& attr : attributes) {
        if (attr.type == type) {
            attr.value = value;
            if (!declaring_class.empty()) attr.declaring_class = declaring_class;
            return;
        }
    }
    attributes.push_back({type, value, declaring_class});
}

const AttributePair* ObjectInstance::find_attribute(const std::string& type) const {
    for (const auto& attr : attributes) {
        if (attr.type == type) return &attr;
    }
    return nullptr;
}

ObjectInstance* StructuralParentInstance::find(const std::string& unique_id) {
    for (auto& component : components) {
        if (component.unique_id == unique_id) return &component;
    }
    return nullptr;
}

const ObjectInstance* StructuralParentInstance::find(const std::string& unique_id) const {
    for (const auto& component : components) {
        if (component.unique_id == unique_id) return &component;
    }
    return nullptr;
}

std::string Context::latest_timepoint() const {
    if (timepoints.empty()) return "";
    return timepoints.rbegin()->first;
}

StructuralParentInstance* Context::frame(const std::string& timepoint) {
    auto it = timepoints.find(timepoint);
    return it == timepoints.end() ? nullptr : &it->second;
}

const StructuralParentInstance* Context::frame(const std::string& timepoint) const {
    auto it = timepoints.find(timepoint);
    return it == timepoints.end() ? nullptr : &it->second;
}

Context& InstanceModel::primary_context() {
    if (contexts.empty()) {
        Context context;
        context.unique_id = "1";
        contexts.push_back(std::move(context));
    }
    return contexts.front();
}

ObjectInstance* InstanceModel::find_instance(const std::string& unique_id) {
    for (auto& context : contexts) {
        for (auto& [tp, frame] : context.timepoints) {
            if (ObjectInstance* instance = frame.find(unique_id)) return instance;
        }
    }
    return nullptr;
}

const ObjectInstance* InstanceModel::find_instance(const std::string& unique_id) const {
    for (const auto& context : contexts) {
        for (const auto& [tp, frame] : context.timepoints) {
            if (const ObjectInstance* instance = frame.find(unique_id)) return instance;
        }
    }
    return nullptr;
}

std::string InstanceModel::fresh_id(const std::string& class_name) {
    int n = ++id_counters[class_name];
    return class_name + "-" + std::to_string(n);
}

std::string next_timepoint(const std::string& timepoint) {
    int n = 1;
    if (timepoint.size() == 3 && timepoint[0] == 'T') {
        n = std::stoi(timepoint.substr(1)) + 1;
    }
    std::ostringstream out;
    out << "T" << std::setw(2) << std::setfill('0') << n;
    return out.str();
}

std::string canonical_dump(const InstanceModel& model) {
    std::ostringstream out;
    out << "source=" << model.text_source << " file=" << model.document_file << "\n";
    for (const auto& context : model.contexts) {
        out << "context " << context.unique_id << " " << context.discourse << " "
            << context.parent_class << "\n";
        for (const auto& [tp, frame] : context.timepoints) {
            out << " " << tp << ":\n";
            for (const auto& instance : frame.components) {
                out << "  " << instance.class_name << "." << instance.unique_id << " ("
                    << instance.content << ")";
                if (instance.multiple) out << " multiple";
                if (!instance.identity_symbol.empty()) out << " sym=" << instance.identity_symbol;
                if (!instance.identity_members.empty()) {
                    out << " members=";
                    for (const auto& member : instance.identity_members) out << member << ",";
                }
                out << "\n";
                for (const auto& attr : instance.attributes) {
                    out << "    " << attr.declaring_class << "." << attr.type << " = "
                        << attr.value << "\n";
                }
            }
        }
    }
    return out.str();
}

}  // namespace ross::model
