#include "ross/model/xml.hpp"

#include <sstream>

namespace ross::model {

std::string export_xml(const InstanceModel& model) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"US-ASCII\" standalone=\"yes\"?>\n\n";
    out << "<InstanceModel>\n\n";
    out << "  <TranscriptHeader>\n";
    out << "    <TextSource value=\"" << model.text_source << "\">\n";
    out << "    </TextSource>\n";
    if (!model.document_file.empty()) {
        out << "    <DocumentFile name=\"" << model.document_file << "\">\n";
        out << "    </DocumentFile>\n";
    }
    out << "  </TranscriptHeader>\n\n";
    out << "  <ConceptualModel>\n";
    for (const auto& context : model.contexts) {
        out << "\n    <LocalContext contextId = \"" << context.unique_id << "\">\n\n";
        if (!context.discourse.empty()) {
            out << "      <MoodAndTense>\n";
            out << "        " << context.discourse << "\n";
            out << "      </MoodAndTense>\n\n";
        }
        if (!context.parent_class.empty()) {
            out << "      <StructuralParent name=\"" << context.parent_class << "\" >\n";
            out << "        <Timeline name = \"" << context.timeline_name << "\"/>\n";
            out << "      </StructuralParent>\n";
        }
        for (const auto& [tp, frame] : context.timepoints) {
            out << "\n      <TimelineTimePoint value = \"" << tp << "\">\n";
            out << "        <InstanceStructure>\n";
            for (const auto& instance : frame.components) {
                out << "          <Component>\n";
                out << "            " << instance.class_name << "." << instance.unique_id << " ("
                    << instance.content << ")\n";
                if (!instance.attributes.empty()) {
                    out << "            <Attributes>\n";
                    for (const auto& attr : instance.attributes) {
                        out << "              <Attribute>\n";
                        out << "                " << attr.declaring_class << "." << attr.type
                            << " = " << attr.value << "\n";
                        out << "              </Attribute>\n";
                    }
                    out << "            </Attributes>\n";
                }
                out << "          </Component>\n";
            }
            out << "        </InstanceStructure>\n";
            out << "      </TimelineTimePoint>\n";
        }
        out << "\n    </LocalContext>\n";
    }
    out << "\n  </ConceptualModel>\n\n";
    out << "</InstanceModel>\n";
    return out.str();
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// value of `key = "..."` or `key="..."` inside a tag line
std::string quoted_value(const std::string& line) {
    size_t open = line.find('"');
    if (open == std::string::npos) return "";
    size_t close = line.find('"', open + 1);
    if (close == std::string::npos) return "";
    return line.substr(open + 1, close - open - 1);
}

}  // namespace

Result<InstanceModel> import_xml(const std::string& text) {
    InstanceModel model;
    model.text_source.clear();
    std::istringstream in(text);
    std::string raw;
    Context* context = nullptr;
    StructuralParentInstance* frame = nullptr;
    ObjectInstance* instance = nullptr;
    std::string pending_timepoint;
    int line_no = 0;

    auto err = [&](const std::string& message) {
        return make_error(ErrorCode::SyntaxError, message, {line_no, 1});
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trimmed(raw);
        if (line.empty() || line.rfind("<?xml", 0) == 0) continue;
        if (line.rfind("<TextSource", 0) == 0) {
            model.text_source = quoted_value(line);
        } else if (line.rfind("<DocumentFile", 0) == 0) {
            model.document_file = quoted_value(line);
        } else if (line.rfind("<LocalContext", 0) == 0) {
            Context fresh;
            fresh.unique_id = quoted_value(line);
            model.contexts.push_back(std::move(fresh));
            context = &model.contexts.back();
        } else if (line == "<MoodAndTense>") {
            if (!context) return err("MoodAndTense outside LocalContext");
            if (!std::getline(in, raw)) return err("truncated MoodAndTense");
            ++line_no;
            context->discourse = trimmed(raw);
        } else if (line.rfind("<StructuralParent", 0) == 0) {
            if (!context) return err("StructuralParent outside LocalContext");
            context->parent_class = quoted_value(line);
        } else if (line.rfind("<Timeline name", 0) == 0) {
            if (!context) return err("Timeline outside LocalContext");
            context->timeline_name = quoted_value(line);
        } else if (line.rfind("<TimelineTimePoint", 0) == 0) {
            if (!context) return err("TimelineTimePoint outside LocalContext");
            pending_timepoint = quoted_value(line);
            StructuralParentInstance fresh;
            fresh.parent_class = context->parent_class;
            auto [it, inserted] = context->timepoints.emplace(pending_timepoint, std::move(fresh));
            if (!inserted) return err("duplicate timepoint " + pending_timepoint);
            frame = &it->second;
        } else if (line == "<Component>") {
            if (!frame) return err("Component outside TimelineTimePoint");
            if (!std::getline(in, raw)) return err("truncated Component");
            ++line_no;
            std::string header = trimmed(raw);
            // ClassName.UniqueId (content)
            size_t paren = header.find(" (");
            if (paren == std::string::npos || header.back() != ')') {
                return err("malformed component header");
            }
            std::string id_part = header.substr(0, paren);
            std::string content = header.substr(paren + 2, header.size() - paren - 3);
            size_t dot = id_part.find('.');
            if (dot == std::string::npos) return err("malformed component id");
            ObjectInstance fresh;
            fresh.class_name = id_part.substr(0, dot);
            fresh.unique_id = id_part.substr(dot + 1);
            fresh.content = content;
            frame->components.push_back(std::move(fresh));
            instance = &frame->components.back();
            // Track counters so later instantiation stays unique.
            size_t dash = instance->unique_id.rfind('-');
            if (dash != std::string::npos) {
                int n = std::atoi(instance->unique_id.c_str() + dash + 1);
                int& counter = model.id_counters[instance->class_name];
                counter = std::max(counter, n);
            }
        } else if (line == "<Attribute>") {
            if (!instance) return err("Attribute outside Component");
            if (!std::getline(in, raw)) return err("truncated Attribute");
            ++line_no;
            std::string body = trimmed(raw);
            size_t eq = body.find(" = ");
            if (eq == std::string::npos) return err("malformed attribute line");
            std::string lhs = body.substr(0, eq);
            std::string value = body.substr(eq + 3);
            size_t dot = lhs.find('.');
            if (dot == std::string::npos) return err("malformed attribute name");
            instance->attributes.push_back(
                {lhs.substr(dot + 1), value, lhs.substr(0, dot)});
        } else if (line == "</TimelineTimePoint>") {
            frame = nullptr;
            instance = nullptr;
        } else if (line == "</Component>") {
            instance = nullptr;
        }
    }
    return model;
}

}  // namespace ross::model
