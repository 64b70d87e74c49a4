#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermes/openapi_model.hpp"

namespace hermes {

struct ReducerOptions {
    /// Reductions whose serialized form exceeds this many bytes carry a
    /// warning. Nothing is truncated.
    std::size_t size_warning_bytes = 256 * 1024;
};

/// A single operation cut out of its document together with everything it
/// references. Detectors and agents only ever see this.
struct ReducedEndpoint {
    EndpointRef endpoint;
    std::string api_title;
    std::optional<std::string> summary;
    std::optional<std::string> description;
    std::optional<std::string> operation_id;
    /// Path-level parameters merged with operation parameters, with
    /// `#/components/parameters/...` references followed.
    std::vector<Parameter> parameters;
    std::optional<RequestBody> request_body;
    std::map<std::string, Response> responses;
    std::map<std::string, Schema> schema_closure;
    /// Non-schema component sections reached from the operation
    /// (parameters, responses, requestBodies, ...), section -> name -> raw.
    std::map<std::string, std::map<std::string, json>> component_closure;
    std::vector<SecurityRequirement> security;
    std::map<std::string, SecurityScheme> security_schemes_used;
    /// Sorted, deduplicated ref targets that could not be resolved locally.
    std::vector<std::string> broken_refs;
    std::vector<std::string> warnings;
    std::string reduced_json;
};

struct SchemaClosure {
    std::map<std::string, Schema> schemas;
    std::vector<std::string> broken_refs;
};

/// Least fixed point of `$ref` following from the operation's parameters,
/// request body and responses. Cycles terminate; missing and non-local
/// targets are returned as broken refs.
SchemaClosure collect_schema_closure(const Document& doc, const EndpointRef& ep);

/// Throws UnknownEndpoint when `ep` is not in `doc`.
ReducedEndpoint reduce_endpoint(const Document& doc, const EndpointRef& ep,
                                const ReducerOptions& options = {});

/// Every `$ref` string value found anywhere under `node`, in traversal order.
std::vector<std::string> collect_refs(const json& node);

/// Follows a chain of schema refs through the closure. Returns the first
/// non-ref schema, or the last ref when the chain is broken or cyclic.
const Schema& follow_refs(const ReducedEndpoint& re, const Schema& schema);

}  // namespace hermes
