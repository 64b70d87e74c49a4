#pragma once

// Deterministic detectors, one per smell category. Each one reads only the
// reduced endpoint and returns at most one Finding per category (several
// evidence bullets each). An empty result means the smell is absent.

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hermes/diagnosis.hpp"
#include "hermes/endpoint_reducer.hpp"
#include "hermes/smell_taxonomy.hpp"

namespace hermes {

inline constexpr std::string_view kRulesModelId = "hermes-rules/1.0";

struct Thresholds {
    int lazy_min_summary_words = 4;
    int lazy_min_description_chars = 40;
    int bloated_min_description_chars = 600;
    double bloated_max_info_density = 0.4;  // distinct words / total words
    int tangled_min_concern_buckets = 3;
    std::set<std::string> path_verb_list = {"get",  "create", "update", "delete", "set",  "fetch",
                                            "add",  "remove", "new",    "list",   "find", "make",
                                            "do",   "execute", "post",  "put"};
    std::set<std::string> generic_phrases = {"success", "successful response", "get data", "ok",
                                             "response"};
    /// Marker names (`multiline_brace_block`, `class_keyword`,
    /// `inline_json_object`) or `regex:<ECMAScript pattern>` entries, matched
    /// against summary and description only.
    std::vector<std::string> excessive_structured_markers = {
        "multiline_brace_block", "class_keyword", "inline_json_object"};

    /// Throws ConfigError when a value is out of range.
    void validate() const;

    bool operator==(const Thresholds&) const = default;
};

/// Flat JSON object keyed by the field names above; absent keys keep their
/// defaults, unknown keys are rejected.
Thresholds thresholds_from_json(const json& node);
Thresholds load_thresholds(const std::filesystem::path& path);
json to_json(const Thresholds& t);

std::vector<Finding> detect_lazy(const ReducedEndpoint& re, const Thresholds& t);
std::vector<Finding> detect_input(const ReducedEndpoint& re, const Thresholds& t);
std::vector<Finding> detect_response(const ReducedEndpoint& re, const Thresholds& t);
std::vector<Finding> detect_security(const ReducedEndpoint& re, const Thresholds& t);
/// Emits separate PATH and METHOD findings, or a single Path_and_Method
/// finding when `merged` is set.
std::vector<Finding> detect_path_and_method(const ReducedEndpoint& re, const Thresholds& t,
                                            bool merged = false);
std::vector<Finding> detect_bloated(const ReducedEndpoint& re, const Thresholds& t);
std::vector<Finding> detect_tangled(const ReducedEndpoint& re, const Thresholds& t);
std::vector<Finding> detect_fragmented(const ReducedEndpoint& re, const Thresholds& t);
std::vector<Finding> detect_excessive_structured(const ReducedEndpoint& re, const Thresholds& t);

/// Runs every detector whose category is part of `universe`.
Diagnosis run_rules(const ReducedEndpoint& re, const Thresholds& t,
                    const LabelUniverse& universe);

}  // namespace hermes
