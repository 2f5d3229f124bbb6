#pragma once

#include <stdexcept>
#include <string>

namespace polidiff {

enum class ErrorKind {
    // taxonomy
    MissingCategory,
    MissingAttribute,
    DuplicateValue,
    // annotation
    SchemaError,
    UnknownLabel,
    EndpointUnavailable,
    MalformedResponse,
    EmptyInput,
    // corpus
    ArchiveUnreachable,
    RobotsDisallowed,
    ExtractionEmpty,
    BadMonthRange,
    // policy gate
    TooShort,
    InsufficientData,
    // change detection
    NoPair,
    // query engine
    UnknownCategory,
    UnknownQuery,
    ShapeMismatch,
    // statistics
    DegenerateTable,
    AllZeroDifferences,
    TooFewPairs,
    // pipeline
    EmptyCorpus,
    ConfigError,
    IoError,
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for all module-level failures. `subject` carries the
// offending identifier (category name, value, policy id, ...) when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string subject = {})
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind),
          subject_(std::move(subject)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& subject() const { return subject_; }

private:
    ErrorKind kind_;
    std::string subject_;
};

}  // namespace polidiff
