#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ross {

enum class ErrorCode {
    Success = 0,
    // lexing / parsing
    UnknownElement,
    UnboundSyntax,
    SyntaxError,
    UnsupportedConstruction,
    UnsupportedLabel,
    // linking
    UnresolvedRef,
    CycleDetected,
    DuplicateAttributeType,
    IllegalValueBinding,
    // engine / model
    NotFound,
    NotFoundRequiredItem,
    RoleMismatch,
    MissingTimepoint,
    UnknownInstance,
    IllegalValue,
    UnboundParameter,
    AmbiguousFallback,
    ResolutionFailed,
    // api
    NoModel,
    NoAnswer,
    UnknownTask,
    OntologyLoadError,
    IoError,
};

const char* error_code_name(ErrorCode code);

struct SourceLoc {
    int line = 0;  // 1-based; 0 = unknown
    int col = 0;
};

struct Error {
    ErrorCode code = ErrorCode::Success;
    std::string message;
    SourceLoc loc;

    std::string to_string() const;
};

// Non-fatal findings: parser repairs, engine warnings. Severity is implied
// by where the diagnostic is collected.
struct Diagnostic {
    enum class Kind { Repair, Warning };
    Kind kind = Kind::Warning;
    std::string message;
    SourceLoc loc;
};

template <typename T>
class Result {
public:
    Result(T value) : data_(std::move(value)) {}
    Result(Error error) : data_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(data_); }
    explicit operator bool() const { return ok(); }

    T& value() { return std::get<T>(data_); }
    const T& value() const { return std::get<T>(data_); }
    T&& take() { return std::move(std::get<T>(data_)); }

    const Error& error() const { return std::get<Error>(data_); }
    ErrorCode code() const { return ok() ? ErrorCode::Success : error().code; }

private:
    std::variant<T, Error> data_;
};

inline Error make_error(ErrorCode code, std::string message, SourceLoc loc = {}) {
    return Error{code, std::move(message), loc};
}

}  // namespace ross
