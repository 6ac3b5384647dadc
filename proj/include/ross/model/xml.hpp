#pragma once

#include <string>

#include "ross/diag.hpp"
#include "ross/model/instance.hpp"

namespace ross::model {

// External instance-model form: InstanceModel / TranscriptHeader /
// ConceptualModel / LocalContext / MoodAndTense / StructuralParent+Timeline /
// TimelineTimePoint / InstanceStructure / Component / Attributes / Attribute,
// 2-space indentation, US-ASCII header.
std::string export_xml(const InstanceModel& model);

// Reads the export format back; re-exporting the result is byte-identical.
Result<InstanceModel> import_xml(const std::string& text);

}  // namespace ross::model
