#include "hermes/error.hpp"

namespace hermes {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
        case ErrorCode::StructuralError: return "StructuralError";
        case ErrorCode::BrokenRef: return "BrokenRef";
        case ErrorCode::ExternalRef: return "ExternalRef";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::AmbiguousMerged: return "AmbiguousMerged";
        case ErrorCode::MissingPlaceholder: return "MissingPlaceholder";
        case ErrorCode::TransportError: return "TransportError";
        case ErrorCode::AuthError: return "AuthError";
        case ErrorCode::BackendOverload: return "BackendOverload";
        case ErrorCode::UnparseableOutput: return "UnparseableOutput";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::AllAgentsFailed: return "AllAgentsFailed";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::DuplicateEndpoint: return "DuplicateEndpoint";
        case ErrorCode::MalformedFile: return "MalformedFile";
        case ErrorCode::BadEndpointKey: return "BadEndpointKey";
        case ErrorCode::UniverseMismatch: return "UniverseMismatch";
        case ErrorCode::NoCommonEndpoints: return "NoCommonEndpoints";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace hermes
