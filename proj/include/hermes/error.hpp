#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermes {

enum class ErrorCode {
    // input model
    MalformedInput,
    UnsupportedVersion,
    StructuralError,
    BrokenRef,
    ExternalRef,
    // reduction
    UnknownEndpoint,
    // taxonomy
    UnknownLabel,
    AmbiguousMerged,
    // agents
    MissingPlaceholder,
    TransportError,
    AuthError,
    BackendOverload,
    UnparseableOutput,
    SchemaMismatch,
    AllAgentsFailed,
    // reporting
    EmptyCorpus,
    DuplicateEndpoint,
    // evaluation
    MalformedFile,
    BadEndpointKey,
    UniverseMismatch,
    NoCommonEndpoints,
    // plumbing
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type used across the library. The code is the stable part;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hermes
