#include "hermes/openapi_model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <regex>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "hermes/error.hpp"

namespace hermes {

namespace {

constexpr std::array<std::string_view, 8> kUpperMethods = {"GET", "POST", "PUT", "PATCH",
                                                           "DELETE", "HEAD", "OPTIONS", "TRACE"};
constexpr std::array<std::string_view, 8> kLowerMethods = {"get", "post", "put", "patch",
                                                           "delete", "head", "options", "trace"};

const std::array<std::string_view, 7> kOtherComponentSections = {
    "parameters", "responses", "requestBodies", "headers", "examples", "links", "callbacks"};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::optional<std::string> optional_string(const json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end() || !it->is_string()) {
        return std::nullopt;
    }
    return it->get<std::string>();
}

// --- YAML -> JSON ---------------------------------------------------------

json plain_scalar(const std::string& text) {
    if (text.empty() || text == "~" || text == "null" || text == "Null" || text == "NULL") {
        return nullptr;
    }
    if (text == "true" || text == "True" || text == "TRUE") {
        return true;
    }
    if (text == "false" || text == "False" || text == "FALSE") {
        return false;
    }
    static const std::regex kInt(R"([-+]?[0-9]+)");
    static const std::regex kFloat(R"([-+]?(\.[0-9]+|[0-9]+\.[0-9]*)([eE][-+]?[0-9]+)?)");
    if (std::regex_match(text, kInt)) {
        std::int64_t value = 0;
        const char* first = text.data() + (text[0] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size()) {
            return value;
        }
        return text;
    }
    if (std::regex_match(text, kFloat)) {
        return std::stod(text);
    }
    return text;
}

json yaml_to_json(const YAML::Node& node) {
    switch (node.Type()) {
        case YAML::NodeType::Null:
        case YAML::NodeType::Undefined:
            return nullptr;
        case YAML::NodeType::Scalar:
            // "?" marks a plain (unquoted) scalar whose type must be inferred.
            return node.Tag() == "?" ? plain_scalar(node.Scalar()) : json(node.Scalar());
        case YAML::NodeType::Sequence: {
            json out = json::array();
            for (const auto& item : node) {
                out.push_back(yaml_to_json(item));
            }
            return out;
        }
        case YAML::NodeType::Map: {
            json out = json::object();
            for (const auto& kv : node) {
                out[kv.first.as<std::string>()] = yaml_to_json(kv.second);
            }
            return out;
        }
    }
    return nullptr;
}

bool looks_like_json(std::string_view raw) {
    size_t i = 0;
    if (raw.substr(0, 3) == "\xEF\xBB\xBF") {
        i = 3;
    }
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
    }
    return i < raw.size() && raw[i] == '{';
}

// --- typed views ----------------------------------------------------------

SchemaKind kind_from_type(const json& type) {
    std::string name;
    if (type.is_string()) {
        name = type.get<std::string>();
    } else if (type.is_array()) {
        for (const auto& t : type) {
            if (t.is_string() && t.get<std::string>() != "null") {
                name = t.get<std::string>();
                break;
            }
        }
    }
    if (name == "object") return SchemaKind::Object;
    if (name == "array") return SchemaKind::Array;
    if (name == "string") return SchemaKind::String;
    if (name == "integer") return SchemaKind::Integer;
    if (name == "number") return SchemaKind::Number;
    if (name == "boolean") return SchemaKind::Boolean;
    return SchemaKind::Untyped;
}

std::map<std::string, Schema> parse_content(const json& node) {
    std::map<std::string, Schema> content;
    if (!node.is_object()) {
        return content;
    }
    for (const auto& [media, media_obj] : node.items()) {
        if (!media_obj.is_object()) {
            continue;
        }
        auto it = media_obj.find("schema");
        content.emplace(media, it != media_obj.end() ? parse_schema(*it) : Schema{});
    }
    return content;
}

std::optional<ParameterLocation> parse_location(std::string_view text) {
    if (text == "path") return ParameterLocation::Path;
    if (text == "query") return ParameterLocation::Query;
    if (text == "header") return ParameterLocation::Header;
    if (text == "cookie") return ParameterLocation::Cookie;
    return std::nullopt;
}

}  // namespace

Parameter parse_parameter(const json& node, const std::string& where,
                          std::vector<std::string>& warnings) {
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, where + ": parameter is not an object");
    }
    Parameter p;
    p.raw = node;
    if (auto ref = optional_string(node, "$ref")) {
        p.ref_target = *ref;
        return p;
    }
    p.name = optional_string(node, "name").value_or("");
    auto in = optional_string(node, "in");
    auto loc = in ? parse_location(*in) : std::nullopt;
    if (!loc) {
        throw Error(ErrorCode::StructuralError,
                    fmt::format("{}: parameter '{}' has invalid location '{}'", where, p.name,
                                in.value_or("")));
    }
    p.location = *loc;
    auto req = node.find("required");
    p.required = req != node.end() && req->is_boolean() && req->get<bool>();
    if (p.location == ParameterLocation::Path && !p.required) {
        warnings.push_back(
            fmt::format("{}: path parameter '{}' is not marked required", where, p.name));
        p.required = true;
    }
    p.description = optional_string(node, "description");
    if (auto it = node.find("schema"); it != node.end()) {
        p.schema = parse_schema(*it);
    } else if (auto c = node.find("content"); c != node.end()) {
        auto content = parse_content(*c);
        if (!content.empty()) {
            p.schema = content.begin()->second;
        }
    }
    return p;
}

static std::vector<Parameter> parse_parameters(const json& node, const std::string& where,
                                               std::vector<std::string>& warnings) {
    std::vector<Parameter> out;
    if (node.is_null()) {
        return out;
    }
    if (!node.is_array()) {
        throw Error(ErrorCode::StructuralError, where + ": parameters is not a list");
    }
    for (const auto& item : node) {
        out.push_back(parse_parameter(item, where, warnings));
    }
    return out;
}

static bool is_response_key(std::string_view key) {
    if (key == "default") {
        return true;
    }
    if (key.size() != 3 || key[0] < '1' || key[0] > '5') {
        return false;
    }
    const bool digits = std::isdigit(static_cast<unsigned char>(key[1])) &&
                        std::isdigit(static_cast<unsigned char>(key[2]));
    const bool range = (key[1] == 'X' || key[1] == 'x') && (key[2] == 'X' || key[2] == 'x');
    return digits || range;
}

Response parse_response(const json& node, const std::string& where) {
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, where + ": response is not an object");
    }
    Response r;
    r.raw = node;
    if (auto ref = optional_string(node, "$ref")) {
        r.ref_target = *ref;
        return r;
    }
    r.description = optional_string(node, "description").value_or("");
    if (auto it = node.find("content"); it != node.end()) {
        r.content = parse_content(*it);
    }
    return r;
}

RequestBody parse_request_body(const json& node, const std::string& where) {
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, where + ": requestBody is not an object");
    }
    RequestBody b;
    b.raw = node;
    if (auto ref = optional_string(node, "$ref")) {
        b.ref_target = *ref;
        return b;
    }
    auto req = node.find("required");
    b.required = req != node.end() && req->is_boolean() && req->get<bool>();
    b.description = optional_string(node, "description");
    if (auto it = node.find("content"); it != node.end()) {
        b.content = parse_content(*it);
    }
    return b;
}

namespace {

std::vector<SecurityRequirement> parse_security_list(const json& node, const std::string& where) {
    if (!node.is_array()) {
        throw Error(ErrorCode::StructuralError, where + ": security is not a list");
    }
    std::vector<SecurityRequirement> out;
    for (const auto& item : node) {
        out.push_back(parse_security_requirement(item));
    }
    return out;
}

Operation parse_operation(const json& node, const std::string& where,
                          std::vector<std::string>& warnings) {
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, where + ": operation is not an object");
    }
    Operation op;
    op.raw = node;
    op.summary = optional_string(node, "summary");
    op.description = optional_string(node, "description");
    op.operation_id = optional_string(node, "operationId");
    if (auto it = node.find("parameters"); it != node.end()) {
        op.parameters = parse_parameters(*it, where, warnings);
    }
    if (auto it = node.find("requestBody"); it != node.end()) {
        op.request_body = parse_request_body(*it, where);
    }
    if (auto it = node.find("responses"); it != node.end()) {
        if (!it->is_object()) {
            throw Error(ErrorCode::StructuralError, where + ": responses is not a map");
        }
        for (const auto& [code, resp] : it->items()) {
            if (code.rfind("x-", 0) == 0) {
                continue;
            }
            if (!is_response_key(code)) {
                throw Error(ErrorCode::StructuralError,
                            fmt::format("{}: invalid response key '{}'", where, code));
            }
            op.responses.emplace(code, parse_response(resp, where + " " + code));
        }
    }
    if (auto it = node.find("security"); it != node.end()) {
        op.security = parse_security_list(*it, where);
    }
    return op;
}

void check_required_names(const Schema& s, const std::string& where,
                          std::vector<std::string>& warnings) {
    if (s.kind == SchemaKind::Ref) {
        return;
    }
    if (!s.properties.empty()) {
        for (const auto& name : s.required) {
            if (!s.properties.contains(name)) {
                warnings.push_back(
                    fmt::format("{}: required property '{}' is not declared", where, name));
            }
        }
    }
    for (const auto& [name, prop] : s.properties) {
        check_required_names(prop, where + "." + name, warnings);
    }
    if (s.items) {
        check_required_names(*s.items, where + "[]", warnings);
    }
    for (const auto& c : s.composed) {
        check_required_names(c, where, warnings);
    }
}

SecurityScheme parse_security_scheme(const json& node) {
    SecurityScheme s;
    s.raw = node;
    s.type = optional_string(node, "type").value_or("");
    s.scheme = optional_string(node, "scheme");
    s.bearer_format = optional_string(node, "bearerFormat");
    s.description = optional_string(node, "description");
    return s;
}

Components parse_components(const json& node, std::vector<std::string>& warnings) {
    Components c;
    if (node.is_null()) {
        return c;
    }
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, "components is not a map");
    }
    if (auto it = node.find("schemas"); it != node.end()) {
        if (!it->is_object()) {
            throw Error(ErrorCode::StructuralError, "components.schemas is not a map");
        }
        for (const auto& [name, schema] : it->items()) {
            auto parsed = parse_schema(schema);
            check_required_names(parsed, "components.schemas." + name, warnings);
            c.schemas.emplace(name, std::move(parsed));
        }
    }
    if (auto it = node.find("securitySchemes"); it != node.end() && it->is_object()) {
        for (const auto& [name, scheme] : it->items()) {
            c.security_schemes.emplace(name, parse_security_scheme(scheme));
        }
    }
    for (auto section : kOtherComponentSections) {
        auto it = node.find(std::string(section));
        if (it == node.end() || !it->is_object()) {
            continue;
        }
        auto& out = c.other[std::string(section)];
        for (const auto& [name, value] : it->items()) {
            out.emplace(name, value);
        }
    }
    return c;
}

std::string version_text(const json& node) {
    if (node.is_string()) {
        return node.get<std::string>();
    }
    if (node.is_number()) {
        return node.dump();
    }
    return {};
}

Info parse_info(const json& node) {
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, "info is missing or not a map");
    }
    Info info;
    info.raw = node;
    info.title = optional_string(node, "title").value_or("");
    info.version = version_text(node.value("version", json()));
    info.description = optional_string(node, "description");
    return info;
}

}  // namespace

// --- enums ------------------------------------------------------------------

std::string_view to_upper_string(HttpMethod m) noexcept {
    return kUpperMethods[static_cast<size_t>(m)];
}

std::string_view to_lower_string(HttpMethod m) noexcept {
    return kLowerMethods[static_cast<size_t>(m)];
}

std::optional<HttpMethod> parse_http_method(std::string_view text) noexcept {
    for (size_t i = 0; i < kUpperMethods.size(); ++i) {
        const auto& name = kUpperMethods[i];
        if (name.size() == text.size() &&
            std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
                return a == std::toupper(static_cast<unsigned char>(b));
            })) {
            return static_cast<HttpMethod>(i);
        }
    }
    return std::nullopt;
}

std::string_view to_string(SchemaKind kind) noexcept {
    switch (kind) {
        case SchemaKind::Object: return "object";
        case SchemaKind::Array: return "array";
        case SchemaKind::String: return "string";
        case SchemaKind::Integer: return "integer";
        case SchemaKind::Number: return "number";
        case SchemaKind::Boolean: return "boolean";
        case SchemaKind::Ref: return "ref";
        case SchemaKind::Untyped: return "untyped";
    }
    return "untyped";
}

std::string_view to_string(ParameterLocation loc) noexcept {
    switch (loc) {
        case ParameterLocation::Path: return "path";
        case ParameterLocation::Query: return "query";
        case ParameterLocation::Header: return "header";
        case ParameterLocation::Cookie: return "cookie";
    }
    return "query";
}

// --- EndpointRef ------------------------------------------------------------

std::string EndpointRef::key() const {
    return std::string(to_upper_string(method)) + ":" + path;
}

std::strong_ordering EndpointRef::operator<=>(const EndpointRef& other) const {
    if (auto c = path.compare(other.path); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return method <=> other.method;
}

std::optional<EndpointRef> parse_endpoint_key(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        return std::nullopt;
    }
    auto method = parse_http_method(text.substr(0, colon));
    auto path = text.substr(colon + 1);
    if (!method || path.empty() || path.front() != '/') {
        return std::nullopt;
    }
    for (char c : path) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }
    return EndpointRef{*method, std::string(path)};
}

// --- Schema -----------------------------------------------------------------

bool Schema::is_primitive() const noexcept {
    return kind == SchemaKind::String || kind == SchemaKind::Integer ||
           kind == SchemaKind::Number || kind == SchemaKind::Boolean;
}

bool Schema::has_constraints() const noexcept {
    return format.has_value() || pattern.has_value() || !enum_values.is_null();
}

bool Schema::operator==(const Schema& other) const {
    const bool items_equal = (!items && !other.items) ||
                             (items && other.items && *items == *other.items);
    return items_equal && kind == other.kind && properties == other.properties &&
           required == other.required && composed == other.composed &&
           description == other.description && format == other.format &&
           pattern == other.pattern && enum_values == other.enum_values &&
           example == other.example && ref_target == other.ref_target && raw == other.raw;
}

Schema parse_schema(const json& node) {
    Schema s;
    s.raw = node;
    if (!node.is_object()) {
        return s;
    }
    if (auto ref = optional_string(node, "$ref")) {
        s.kind = SchemaKind::Ref;
        s.ref_target = *ref;
        s.description = optional_string(node, "description");
        return s;
    }
    if (auto it = node.find("type"); it != node.end()) {
        s.kind = kind_from_type(*it);
    } else if (node.contains("properties")) {
        s.kind = SchemaKind::Object;
    } else if (node.contains("items")) {
        s.kind = SchemaKind::Array;
    }
    if (auto it = node.find("properties"); it != node.end() && it->is_object()) {
        for (const auto& [name, prop] : it->items()) {
            s.properties.emplace(name, parse_schema(prop));
        }
    }
    if (auto it = node.find("required"); it != node.end() && it->is_array()) {
        for (const auto& r : *it) {
            if (r.is_string()) {
                s.required.push_back(r.get<std::string>());
            }
        }
    }
    if (auto it = node.find("items"); it != node.end() && it->is_object()) {
        s.items = std::make_shared<const Schema>(parse_schema(*it));
    }
    for (const char* key : {"allOf", "oneOf", "anyOf"}) {
        if (auto it = node.find(key); it != node.end() && it->is_array()) {
            for (const auto& member : *it) {
                s.composed.push_back(parse_schema(member));
            }
        }
    }
    if (auto it = node.find("additionalProperties"); it != node.end() && it->is_object()) {
        s.composed.push_back(parse_schema(*it));
    }
    s.description = optional_string(node, "description");
    s.format = optional_string(node, "format");
    s.pattern = optional_string(node, "pattern");
    if (auto it = node.find("enum"); it != node.end()) {
        s.enum_values = *it;
    }
    if (auto it = node.find("example"); it != node.end()) {
        s.example = *it;
    }
    return s;
}

SecurityRequirement parse_security_requirement(const json& node) {
    SecurityRequirement req;
    if (!node.is_object()) {
        throw Error(ErrorCode::StructuralError, "security requirement is not a map");
    }
    for (const auto& [name, scopes] : node.items()) {
        std::vector<std::string> list;
        if (scopes.is_array()) {
            for (const auto& s : scopes) {
                if (s.is_string()) {
                    list.push_back(s.get<std::string>());
                }
            }
        }
        req.emplace(name, std::move(list));
    }
    return req;
}

// --- Document ---------------------------------------------------------------

bool Document::operator==(const Document& other) const {
    return openapi_version == other.openapi_version && info == other.info &&
           paths == other.paths && components == other.components &&
           global_security == other.global_security && extensions == other.extensions &&
           warnings == other.warnings;
}

Document parse_document(std::string_view raw, std::optional<SourceFormat> format_hint,
                        std::string origin) {
    if (raw.empty()) {
        throw Error(ErrorCode::MalformedInput, "input is empty");
    }
    const SourceFormat format =
        format_hint.value_or(looks_like_json(raw) ? SourceFormat::Json : SourceFormat::Yaml);

    json root;
    if (format == SourceFormat::Json) {
        try {
            root = json::parse(raw);
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::MalformedInput, e.what());
        }
    } else {
        try {
            root = yaml_to_json(YAML::Load(std::string(raw)));
        } catch (const YAML::Exception& e) {
            throw Error(ErrorCode::MalformedInput, e.what());
        }
    }
    if (!root.is_object()) {
        throw Error(ErrorCode::MalformedInput, "document root is not a map");
    }

    Document doc;
    doc.source = Source{std::move(origin), format};

    auto version_it = root.find("openapi");
    if (version_it == root.end()) {
        const bool swagger = root.contains("swagger");
        throw Error(ErrorCode::UnsupportedVersion,
                    swagger ? "Swagger 2.0 documents are not supported"
                            : "missing 'openapi' version field");
    }
    doc.openapi_version = version_text(*version_it);
    if (doc.openapi_version.rfind("3.", 0) != 0) {
        throw Error(ErrorCode::UnsupportedVersion,
                    fmt::format("openapi version '{}' is not 3.x", doc.openapi_version));
    }

    doc.info = parse_info(root.value("info", json()));

    if (auto it = root.find("paths"); it != root.end() && !it->is_null()) {
        if (!it->is_object()) {
            throw Error(ErrorCode::StructuralError, "paths is not a map");
        }
        for (const auto& [path, item] : it->items()) {
            if (path.rfind("x-", 0) == 0) {
                continue;
            }
            if (path.empty() || path.front() != '/') {
                throw Error(ErrorCode::StructuralError,
                            fmt::format("path '{}' does not begin with '/'", path));
            }
            if (!item.is_object()) {
                throw Error(ErrorCode::StructuralError,
                            fmt::format("path item '{}' is not a map", path));
            }
            PathItem pi;
            pi.raw = item;
            if (auto p = item.find("parameters"); p != item.end()) {
                pi.parameters = parse_parameters(*p, path, doc.warnings);
            }
            for (const auto& [key, value] : item.items()) {
                if (auto method = parse_http_method(key); method && key == lower(key)) {
                    const auto where = fmt::format("{}:{}", to_upper_string(*method), path);
                    pi.operations.emplace(*method, parse_operation(value, where, doc.warnings));
                }
            }
            doc.paths.emplace(path, std::move(pi));
        }
    }

    doc.components = parse_components(root.value("components", json()), doc.warnings);

    if (auto it = root.find("security"); it != root.end()) {
        doc.global_security = parse_security_list(*it, "global");
    }

    doc.extensions = json::object();
    for (const auto& [key, value] : root.items()) {
        if (key != "openapi" && key != "info" && key != "paths" && key != "components" &&
            key != "security") {
            doc.extensions[key] = value;
        }
    }
    return doc;
}

json to_json(const Document& doc) {
    json out = doc.extensions.is_object() ? doc.extensions : json::object();
    out["openapi"] = doc.openapi_version;
    out["info"] = doc.info.raw;
    json paths = json::object();
    for (const auto& [path, item] : doc.paths) {
        paths[path] = item.raw;
    }
    out["paths"] = std::move(paths);

    json components = json::object();
    for (const auto& [name, schema] : doc.components.schemas) {
        components["schemas"][name] = schema.raw;
    }
    for (const auto& [name, scheme] : doc.components.security_schemes) {
        components["securitySchemes"][name] = scheme.raw;
    }
    for (const auto& [section, entries] : doc.components.other) {
        for (const auto& [name, value] : entries) {
            components[section][name] = value;
        }
    }
    if (!components.empty()) {
        out["components"] = std::move(components);
    }
    if (doc.global_security) {
        json list = json::array();
        for (const auto& req : *doc.global_security) {
            list.push_back(json(req));
        }
        out["security"] = std::move(list);
    }
    return out;
}

std::string canonical_dump(const json& value) {
    return value.dump(2, ' ', false, json::error_handler_t::replace);
}

std::string serialize_document(const Document& doc) {
    return canonical_dump(to_json(doc));
}

std::vector<EndpointRef> list_endpoints(const Document& doc) {
    std::vector<EndpointRef> out;
    for (const auto& [path, item] : doc.paths) {
        for (const auto& [method, op] : item.operations) {
            out.push_back(EndpointRef{method, path});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Operation* find_operation(const Document& doc, const EndpointRef& ep) noexcept {
    auto path_it = doc.paths.find(ep.path);
    if (path_it == doc.paths.end()) {
        return nullptr;
    }
    auto op_it = path_it->second.operations.find(ep.method);
    return op_it == path_it->second.operations.end() ? nullptr : &op_it->second;
}

std::optional<ComponentPointer> parse_component_pointer(std::string_view ref_target) {
    constexpr std::string_view prefix = "#/components/";
    if (ref_target.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
    }
    auto rest = ref_target.substr(prefix.size());
    auto slash = rest.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 >= rest.size()) {
        return std::nullopt;
    }
    auto encoded = rest.substr(slash + 1);
    if (encoded.find('/') != std::string_view::npos) {
        return std::nullopt;  // deeper pointers into a component are not supported
    }
    std::string name;
    for (size_t i = 0; i < encoded.size(); ++i) {
        if (encoded[i] == '~' && i + 1 < encoded.size() &&
            (encoded[i + 1] == '0' || encoded[i + 1] == '1')) {
            name.push_back(encoded[i + 1] == '0' ? '~' : '/');
            ++i;
        } else {
            name.push_back(encoded[i]);
        }
    }
    return ComponentPointer{std::string(rest.substr(0, slash)), std::move(name)};
}

std::string make_component_pointer(std::string_view section, std::string_view name) {
    std::string out = "#/components/";
    out += section;
    out += '/';
    for (char c : name) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

const Schema& resolve_ref(const Document& doc, std::string_view ref_target) {
    auto ptr = parse_component_pointer(ref_target);
    if (!ptr || ptr->section != "schemas") {
        throw Error(ErrorCode::ExternalRef,
                    fmt::format("'{}' is not a local component schema reference", ref_target));
    }
    auto it = doc.components.schemas.find(ptr->name);
    if (it == doc.components.schemas.end()) {
        throw Error(ErrorCode::BrokenRef,
                    fmt::format("schema '{}' is not defined in components", ptr->name));
    }
    return it->second;
}

}  // namespace hermes
