#include "ross/diag.hpp"

#include <sstream>

namespace ross {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Success: return "Success";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::UnboundSyntax: return "UnboundSyntax";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnsupportedConstruction: return "UnsupportedConstruction";
        case ErrorCode::UnsupportedLabel: return "UnsupportedLabel";
        case ErrorCode::UnresolvedRef: return "UnresolvedRef";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::DuplicateAttributeType: return "DuplicateAttributeType";
        case ErrorCode::IllegalValueBinding: return "IllegalValueBinding";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NotFoundRequiredItem: return "NotFoundRequiredItem";
        case ErrorCode::RoleMismatch: return "RoleMismatch";
        case ErrorCode::MissingTimepoint: return "MissingTimepoint";
        case ErrorCode::UnknownInstance: return "UnknownInstance";
        case ErrorCode::IllegalValue: return "IllegalValue";
        case ErrorCode::UnboundParameter: return "UnboundParameter";
        case ErrorCode::AmbiguousFallback: return "AmbiguousFallback";
        case ErrorCode::ResolutionFailed: return "ResolutionFailed";
        case ErrorCode::NoModel: return "NoModel";
        case ErrorCode::NoAnswer: return "NoAnswer";
        case ErrorCode::UnknownTask: return "UnknownTask";
        case ErrorCode::OntologyLoadError: return "OntologyLoadError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string Error::to_string() const {
    std::ostringstream out;
    out << error_code_name(code);
    if (loc.line > 0) {
        out << " at " << loc.line << ":" << loc.col;
    }
    if (!message.empty()) {
        out << ": " << message;
    }
    return out.str();
}

}  // namespace ross
