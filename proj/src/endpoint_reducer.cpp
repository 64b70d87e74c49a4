#include "hermes/endpoint_reducer.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <fmt/format.h>

#include "hermes/error.hpp"

namespace hermes {

namespace {

constexpr const char* kOperationKeys[] = {"summary",     "description", "operationId",
                                          "parameters",  "requestBody", "responses",
                                          "security",    "deprecated"};

constexpr int kMaxRefHops = 16;

void collect_refs_into(const json& node, std::vector<std::string>& out) {
    if (node.is_object()) {
        if (auto it = node.find("$ref"); it != node.end() && it->is_string()) {
            out.push_back(it->get<std::string>());
        }
        for (const auto& [key, value] : node.items()) {
            if (key != "$ref") {
                collect_refs_into(value, out);
            }
        }
    } else if (node.is_array()) {
        for (const auto& item : node) {
            collect_refs_into(item, out);
        }
    }
}

const json* lookup_component(const Document& doc, const ComponentPointer& ptr) {
    if (ptr.section == "schemas") {
        auto it = doc.components.schemas.find(ptr.name);
        return it == doc.components.schemas.end() ? nullptr : &it->second.raw;
    }
    if (ptr.section == "securitySchemes") {
        auto it = doc.components.security_schemes.find(ptr.name);
        return it == doc.components.security_schemes.end() ? nullptr : &it->second.raw;
    }
    auto section = doc.components.other.find(ptr.section);
    if (section == doc.components.other.end()) {
        return nullptr;
    }
    auto it = section->second.find(ptr.name);
    return it == section->second.end() ? nullptr : &it->second;
}

struct Closure {
    std::map<std::string, std::map<std::string, json>> sections;
    std::set<std::string> broken;
};

Closure close_over(const Document& doc, const std::vector<const json*>& roots) {
    Closure closure;
    std::deque<std::string> pending;
    for (const json* root : roots) {
        for (auto& ref : collect_refs(*root)) {
            pending.push_back(std::move(ref));
        }
    }
    std::set<std::string> seen;
    while (!pending.empty()) {
        std::string ref = std::move(pending.front());
        pending.pop_front();
        if (!seen.insert(ref).second) {
            continue;
        }
        auto ptr = parse_component_pointer(ref);
        const json* target = ptr ? lookup_component(doc, *ptr) : nullptr;
        if (!target) {
            closure.broken.insert(ref);
            continue;
        }
        closure.sections[ptr->section].emplace(ptr->name, *target);
        for (auto& next : collect_refs(*target)) {
            pending.push_back(std::move(next));
        }
    }
    return closure;
}

json reduced_operation_json(const Operation& op) {
    json out = json::object();
    for (const char* key : kOperationKeys) {
        if (auto it = op.raw.find(key); it != op.raw.end()) {
            out[key] = *it;
        }
    }
    return out;
}

template <typename T, typename Parse>
T follow_component(const Document& doc, T value, const char* section, Parse parse) {
    for (int hop = 0; hop < kMaxRefHops && !value.ref_target.empty(); ++hop) {
        auto ptr = parse_component_pointer(value.ref_target);
        if (!ptr || ptr->section != section) {
            break;
        }
        const json* target = lookup_component(doc, *ptr);
        if (!target) {
            break;
        }
        try {
            value = parse(*target);
        } catch (const Error&) {
            break;  // malformed component; the raw reference stays in place
        }
    }
    return value;
}

}  // namespace

std::vector<std::string> collect_refs(const json& node) {
    std::vector<std::string> out;
    collect_refs_into(node, out);
    return out;
}

SchemaClosure collect_schema_closure(const Document& doc, const EndpointRef& ep) {
    const Operation* op = find_operation(doc, ep);
    if (!op) {
        throw Error(ErrorCode::UnknownEndpoint, ep.key());
    }
    const json op_json = reduced_operation_json(*op);
    const json& path_raw = doc.paths.at(ep.path).raw;
    const json path_params = path_raw.value("parameters", json());
    Closure closure = close_over(doc, {&op_json, &path_params});

    SchemaClosure out;
    for (const auto& [name, raw] : closure.sections["schemas"]) {
        out.schemas.emplace(name, doc.components.schemas.at(name));
    }
    out.broken_refs.assign(closure.broken.begin(), closure.broken.end());
    return out;
}

ReducedEndpoint reduce_endpoint(const Document& doc, const EndpointRef& ep,
                                const ReducerOptions& options) {
    const Operation* op = find_operation(doc, ep);
    if (!op) {
        throw Error(ErrorCode::UnknownEndpoint, ep.key());
    }
    const PathItem& path_item = doc.paths.at(ep.path);

    ReducedEndpoint re;
    re.endpoint = ep;
    re.api_title = doc.info.title;
    re.summary = op->summary;
    re.description = op->description;
    re.operation_id = op->operation_id;

    // Effective security: an operation-level key wins even when empty.
    json op_json = reduced_operation_json(*op);
    if (op->security) {
        re.security = *op->security;
    } else if (doc.global_security) {
        re.security = *doc.global_security;
        if (!re.security.empty()) {
            json list = json::array();
            for (const auto& req : re.security) {
                list.push_back(json(req));
            }
            op_json["security"] = std::move(list);
        }
    }

    const json path_params = path_item.raw.value("parameters", json());
    Closure closure = close_over(doc, {&op_json, &path_params});

    for (const auto& req : re.security) {
        for (const auto& [name, scopes] : req) {
            auto it = doc.components.security_schemes.find(name);
            if (it == doc.components.security_schemes.end()) {
                closure.broken.insert(make_component_pointer("securitySchemes", name));
            } else {
                re.security_schemes_used.emplace(name, it->second);
            }
        }
    }

    for (auto& [section, entries] : closure.sections) {
        if (section == "schemas") {
            for (const auto& [name, raw] : entries) {
                re.schema_closure.emplace(name, doc.components.schemas.at(name));
            }
        } else if (section == "securitySchemes") {
            for (const auto& [name, raw] : entries) {
                re.security_schemes_used.emplace(name, doc.components.security_schemes.at(name));
            }
        } else {
            re.component_closure.emplace(section, entries);
        }
    }
    re.broken_refs.assign(closure.broken.begin(), closure.broken.end());

    // Typed views with component references followed.
    std::vector<std::string> sink;
    auto parse_param = [&](const json& node) {
        return parse_parameter(node, ep.key(), sink);
    };
    std::vector<Parameter> merged;
    for (const auto& p : path_item.parameters) {
        merged.push_back(follow_component(doc, p, "parameters", parse_param));
    }
    for (const auto& p : op->parameters) {
        Parameter resolved = follow_component(doc, p, "parameters", parse_param);
        auto same = std::find_if(merged.begin(), merged.end(), [&](const Parameter& q) {
            return q.ref_target.empty() && resolved.ref_target.empty() &&
                   q.name == resolved.name && q.location == resolved.location;
        });
        if (same != merged.end()) {
            *same = std::move(resolved);
        } else {
            merged.push_back(std::move(resolved));
        }
    }
    re.parameters = std::move(merged);

    if (op->request_body) {
        re.request_body = follow_component(doc, *op->request_body, "requestBodies",
                                           [&](const json& node) {
                                               return parse_request_body(node, ep.key());
                                           });
    }
    for (const auto& [code, resp] : op->responses) {
        re.responses.emplace(code, follow_component(doc, resp, "responses", [&](const json& node) {
                                 return parse_response(node, ep.key() + " " + code);
                             }));
    }

    // Standalone document.
    json path_json = json::object();
    path_json[std::string(to_lower_string(ep.method))] = std::move(op_json);
    if (!path_params.is_null()) {
        path_json["parameters"] = path_params;
    }
    json root = json::object();
    root["openapi"] = doc.openapi_version;
    root["info"] = json{{"title", doc.info.title}, {"version", doc.info.version}};
    root["paths"][ep.path] = std::move(path_json);

    json components = json::object();
    for (const auto& [name, schema] : re.schema_closure) {
        components["schemas"][name] = schema.raw;
    }
    for (const auto& [name, scheme] : re.security_schemes_used) {
        components["securitySchemes"][name] = scheme.raw;
    }
    for (const auto& [section, entries] : re.component_closure) {
        for (const auto& [name, raw] : entries) {
            components[section][name] = raw;
        }
    }
    if (!components.empty()) {
        root["components"] = std::move(components);
    }
    re.reduced_json = canonical_dump(root);

    if (re.reduced_json.size() > options.size_warning_bytes) {
        re.warnings.push_back(fmt::format("reduced representation is {} bytes (threshold {})",
                                          re.reduced_json.size(),
                                          options.size_warning_bytes));
    }
    return re;
}

const Schema& follow_refs(const ReducedEndpoint& re, const Schema& schema) {
    const Schema* current = &schema;
    for (int hop = 0; hop < kMaxRefHops && current->kind == SchemaKind::Ref; ++hop) {
        auto ptr = parse_component_pointer(current->ref_target);
        if (!ptr || ptr->section != "schemas") {
            break;
        }
        auto it = re.schema_closure.find(ptr->name);
        if (it == re.schema_closure.end()) {
            break;
        }
        current = &it->second;
    }
    return *current;
}

}  // namespace hermes
