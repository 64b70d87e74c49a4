#pragma once

// Checks the three reducer laws on one generated document. Shared by the
// property tests and the acceptance binary.

#include <algorithm>
#include <string>
#include <vector>

#include "hermes/endpoint_reducer.hpp"
#include "random_openapi.hpp"

namespace hermes::testkit {

namespace detail {

// Independent walk over the reduced document: every $ref must land on an
// entry present in its components section or be reported as broken.
inline void check_self_contained(const ReducedEndpoint& re, std::vector<std::string>& failures) {
    const auto reduced = nlohmann::json::parse(re.reduced_json);
    const auto& comps = reduced.contains("components") ? reduced.at("components") : nlohmann::json::object();

    std::vector<std::string> refs;
    std::vector<const nlohmann::json*> stack{&reduced};
    while (!stack.empty()) {
        const auto* node = stack.back();
        stack.pop_back();
        if (node->is_object()) {
            for (const auto& [k, v] : node->items()) {
                if (k == "$ref" && v.is_string()) refs.push_back(v.get<std::string>());
                else stack.push_back(&v);
            }
        } else if (node->is_array()) {
            for (const auto& v : *node) stack.push_back(&v);
        }
    }

    const std::string prefix = "#/components/";
    for (const auto& ref : refs) {
        const bool broken = std::find(re.broken_refs.begin(), re.broken_refs.end(), ref) != re.broken_refs.end();
        bool resolves = false;
        if (ref.rfind(prefix, 0) == 0) {
            const auto rest = ref.substr(prefix.size());
            const auto slash = rest.find('/');
            if (slash != std::string::npos && rest.find('/', slash + 1) == std::string::npos) {
                auto name = rest.substr(slash + 1);
                for (std::size_t p = 0; (p = name.find("~1", p)) != std::string::npos;) name.replace(p, 2, "/");
                for (std::size_t p = 0; (p = name.find("~0", p)) != std::string::npos;) name.replace(p, 2, "~");
                const auto section = rest.substr(0, slash);
                resolves = comps.contains(section) && comps.at(section).contains(name);
            }
        }
        if (resolves == broken) {
            failures.push_back(re.endpoint.key() + ": ref " + ref +
                               (resolves ? " resolves but is listed broken" : " dangles and is not listed broken"));
        }
    }

    std::vector<std::string> closure_names;
    for (const auto& [name, s] : re.schema_closure) closure_names.push_back(name);
    std::vector<std::string> emitted;
    if (comps.contains("schemas")) {
        for (const auto& [name, s] : comps.at("schemas").items()) emitted.push_back(name);
    }
    if (closure_names != emitted) {
        failures.push_back(re.endpoint.key() + ": components.schemas differs from schema_closure");
    }
    if (!std::is_sorted(re.broken_refs.begin(), re.broken_refs.end()) ||
        std::adjacent_find(re.broken_refs.begin(), re.broken_refs.end()) != re.broken_refs.end()) {
        failures.push_back(re.endpoint.key() + ": broken_refs not sorted and unique");
    }
    std::size_t methods = 0;
    for (const auto& [k, v] : reduced.at("paths").begin()->items()) {
        methods += (k != "parameters" && k.rfind("x-", 0) != 0) ? 1 : 0;
    }
    if (reduced.at("paths").size() != 1 || methods != 1) {
        failures.push_back(re.endpoint.key() + ": reduced document must hold exactly one operation");
    }
}

}  // namespace detail

inline std::vector<std::string> check_reducer_laws(const nlohmann::json& raw, RandomOpenApi& gen, int seed,
                                                   std::size_t& endpoints_checked) {
    std::vector<std::string> failures;
    const auto doc = parse_document(raw.dump());

    auto widened = raw;
    gen.add_unrelated_endpoint(widened, seed);
    const auto wide_doc = parse_document(widened.dump());

    for (const auto& ep : list_endpoints(doc)) {
        ++endpoints_checked;
        const auto re = reduce_endpoint(doc, ep);
        detail::check_self_contained(re, failures);

        const auto again = reduce_endpoint(parse_document(re.reduced_json), ep);
        if (again.reduced_json != re.reduced_json) {
            failures.push_back(ep.key() + ": reduce of reduced_json is not byte-identical");
        }
        if (reduce_endpoint(wide_doc, ep).reduced_json != re.reduced_json) {
            failures.push_back(ep.key() + ": adding an unrelated endpoint changed reduced_json");
        }
    }
    return failures;
}

}  // namespace hermes::testkit
