#pragma once

#include <string>
#include <vector>

#include "hermes/diagnosis.hpp"
#include "hermes/smell_taxonomy.hpp"

namespace hermes {

/// Markdown diagnostic report for one endpoint.
std::string render_report(const Diagnosis& d);

/// Canonical JSON: endpoint, api_title, model_id, labels, findings, plus
/// category_errors and warnings when non-empty.
std::string render_findings_json(const Diagnosis& d);
json findings_to_json(const Diagnosis& d);

/// Inverse of render_findings_json. Throws MalformedFile.
Diagnosis parse_findings_json(std::string_view text);
Diagnosis findings_from_json(const json& node);

struct CategoryRow {
    Label label = Label::Lazy;
    int frequency = 0;            // endpoints exhibiting the label
    double pct_of_endpoints = 0;  // frequency / total_endpoints

    bool operator==(const CategoryRow&) const = default;
};

struct EcosystemSummary {
    std::string universe;
    int total_endpoints = 0;
    int total_smells = 0;
    double avg_smells_per_endpoint = 0;
    /// Every universe label, by frequency descending then label name.
    std::vector<CategoryRow> per_category;

    bool operator==(const EcosystemSummary&) const = default;
};

/// Counts endpoints per projected label. Throws EmptyCorpus and
/// DuplicateEndpoint.
EcosystemSummary aggregate(const std::vector<Diagnosis>& diagnoses, const LabelUniverse& universe);

/// Aligned table with integer percentages, then totals.
std::string render_summary_text(const EcosystemSummary& s);
/// Full-precision canonical JSON.
std::string render_summary_json(const EcosystemSummary& s);
std::string render_summary_csv(const EcosystemSummary& s);

}  // namespace hermes
