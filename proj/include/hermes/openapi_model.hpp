#pragma once

// In-memory model of an OpenAPI 3.x document.
//
// Every typed node keeps the JSON it was parsed from in `raw`. The typed
// fields are an interpreted view used by the detectors; serialization always
// goes through `raw`, so keys the model does not interpret (vendor extensions,
// composition keywords, examples) survive a parse/serialize cycle untouched.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hermes {

using json = nlohmann::json;

/// Declaration order is the canonical endpoint ordering within one path.
enum class HttpMethod { Get, Post, Put, Patch, Delete, Head, Options, Trace };

std::string_view to_upper_string(HttpMethod m) noexcept;
std::string_view to_lower_string(HttpMethod m) noexcept;
std::optional<HttpMethod> parse_http_method(std::string_view text) noexcept;  // case-insensitive

struct EndpointRef {
    HttpMethod method = HttpMethod::Get;
    std::string path;

    /// `METHOD:/path`
    std::string key() const;

    bool operator==(const EndpointRef&) const = default;
    /// Path-lexicographic, then method order.
    std::strong_ordering operator<=>(const EndpointRef& other) const;
};

/// Parses `METHOD:/path`. The method is matched case-insensitively and
/// normalized; the path must start with `/` and contain no whitespace.
std::optional<EndpointRef> parse_endpoint_key(std::string_view text);

enum class SchemaKind { Object, Array, String, Integer, Number, Boolean, Ref, Untyped };

std::string_view to_string(SchemaKind kind) noexcept;

struct Schema {
    SchemaKind kind = SchemaKind::Untyped;
    std::map<std::string, Schema> properties;
    std::vector<std::string> required;
    std::shared_ptr<const Schema> items;
    // Members of allOf/oneOf/anyOf plus a schema-valued additionalProperties.
    std::vector<Schema> composed;
    std::optional<std::string> description;
    std::optional<std::string> format;
    std::optional<std::string> pattern;
    json enum_values;  // null when absent
    json example;      // null when absent
    std::string ref_target;
    json raw;

    bool is_primitive() const noexcept;
    bool has_constraints() const noexcept;  // format, pattern or enum

    bool operator==(const Schema& other) const;
};

enum class ParameterLocation { Path, Query, Header, Cookie };

std::string_view to_string(ParameterLocation loc) noexcept;

struct Parameter {
    std::string name;
    ParameterLocation location = ParameterLocation::Query;
    bool required = false;
    std::optional<std::string> description;
    Schema schema;
    std::string ref_target;  // non-empty when the parameter itself is a $ref
    json raw;

    bool operator==(const Parameter&) const = default;
};

struct RequestBody {
    bool required = false;
    std::optional<std::string> description;
    std::map<std::string, Schema> content;  // media type -> schema
    std::string ref_target;
    json raw;

    bool operator==(const RequestBody&) const = default;
};

struct Response {
    std::string description;
    std::map<std::string, Schema> content;
    std::string ref_target;
    json raw;

    bool operator==(const Response&) const = default;
};

/// Scheme name -> scopes.
using SecurityRequirement = std::map<std::string, std::vector<std::string>>;

struct SecurityScheme {
    std::string type;
    std::optional<std::string> scheme;
    std::optional<std::string> bearer_format;
    std::optional<std::string> description;
    json raw;

    bool operator==(const SecurityScheme&) const = default;
};

struct Operation {
    std::optional<std::string> summary;
    std::optional<std::string> description;
    std::optional<std::string> operation_id;
    std::vector<Parameter> parameters;
    std::optional<RequestBody> request_body;
    std::map<std::string, Response> responses;  // status code or "default"
    std::optional<std::vector<SecurityRequirement>> security;
    json raw;

    bool operator==(const Operation&) const = default;
};

struct PathItem {
    std::vector<Parameter> parameters;  // shared by every operation on the path
    std::map<HttpMethod, Operation> operations;
    json raw;

    bool operator==(const PathItem&) const = default;
};

struct Components {
    std::map<std::string, Schema> schemas;
    std::map<std::string, SecurityScheme> security_schemes;
    // parameters, responses, requestBodies, headers, examples, links, callbacks
    std::map<std::string, std::map<std::string, json>> other;

    bool operator==(const Components&) const = default;
};

struct Info {
    std::string title;
    std::string version;
    std::optional<std::string> description;
    json raw;

    bool operator==(const Info&) const = default;
};

enum class SourceFormat { Json, Yaml };

struct Source {
    std::string origin;
    SourceFormat format = SourceFormat::Json;

    bool operator==(const Source&) const = default;
};

struct Document {
    std::string openapi_version;
    Info info;
    std::map<std::string, PathItem> paths;
    Components components;
    std::optional<std::vector<SecurityRequirement>> global_security;
    Source source;
    json extensions;                    // top-level keys the model does not interpret
    std::vector<std::string> warnings;  // non-fatal model issues

    /// Source is provenance, not content.
    bool operator==(const Document& other) const;
};

/// Parses OpenAPI 3.x from JSON or YAML text. Without a hint the format is
/// sniffed: a leading `{` means JSON, anything else is read as YAML.
Document parse_document(std::string_view raw,
                        std::optional<SourceFormat> format_hint = std::nullopt,
                        std::string origin = {});

json to_json(const Document& doc);
/// Sorted keys, two-space indent, no trailing newline.
std::string canonical_dump(const json& value);
std::string serialize_document(const Document& doc);

std::vector<EndpointRef> list_endpoints(const Document& doc);

const Operation* find_operation(const Document& doc, const EndpointRef& ep) noexcept;

/// Resolves a local `#/components/schemas/<name>` pointer, one hop only.
/// Throws BrokenRef when the name is absent and ExternalRef for any other
/// kind of pointer.
const Schema& resolve_ref(const Document& doc, std::string_view ref_target);

/// Splits a local `#/components/<section>/<name>` pointer, decoding JSON
/// pointer escapes. Returns nullopt for external or non-component pointers.
struct ComponentPointer {
    std::string section;
    std::string name;
};
std::optional<ComponentPointer> parse_component_pointer(std::string_view ref_target);
std::string make_component_pointer(std::string_view section, std::string_view name);

Schema parse_schema(const json& node);
SecurityRequirement parse_security_requirement(const json& node);

// Single-object parsers, used when following component references. `where`
// prefixes error and warning messages.
Parameter parse_parameter(const json& node, const std::string& where,
                          std::vector<std::string>& warnings);
RequestBody parse_request_body(const json& node, const std::string& where);
Response parse_response(const json& node, const std::string& where);

}  // namespace hermes
