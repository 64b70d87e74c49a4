#include "hermes/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "hermes/error.hpp"
#include "text_util.hpp"

namespace hermes {

namespace {

std::string label_list(const std::vector<Label>& labels) {
    if (labels.empty()) {
        return "none";
    }
    std::vector<std::string> names;
    for (auto l : labels) {
        names.emplace_back(display_name(l));
    }
    return text::join(names, ", ");
}

// Keeps a bullet on one markdown line.
std::string one_line(std::string_view s) {
    std::string out = text::trim(s);
    std::replace(out.begin(), out.end(), '\n', ' ');
    std::replace(out.begin(), out.end(), '\r', ' ');
    return out;
}

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::MalformedFile, what);
}

std::string string_field(const json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end() || !it->is_string()) {
        malformed(fmt::format("findings: `{}` must be a string", key));
    }
    return it->get<std::string>();
}

std::vector<std::string> string_list(const json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end()) {
        return {};
    }
    if (!it->is_array()) {
        malformed(fmt::format("findings: `{}` must be an array of strings", key));
    }
    std::vector<std::string> out;
    for (const auto& v : *it) {
        if (!v.is_string()) {
            malformed(fmt::format("findings: `{}` must be an array of strings", key));
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

Label label_field(const json& value) {
    if (!value.is_string()) {
        malformed("findings: label must be a string");
    }
    auto l = label_from_key(value.get<std::string>());
    if (!l) {
        throw Error(ErrorCode::UnknownLabel, fmt::format("'{}'", value.get<std::string>()));
    }
    return *l;
}

}  // namespace

std::string render_report(const Diagnosis& d) {
    const auto labels = d.labels();
    std::string out;
    out += "## API Info\n";
    out += fmt::format("- Title: \"{}\"\n\n", d.api_title);
    out += "## Endpoint Info\n";
    out += fmt::format("- Method: \"{}\"\n", to_upper_string(d.endpoint.method));
    out += fmt::format("- Path: \"{}\"\n\n", d.endpoint.path);
    out += "## Model\n";
    out += fmt::format("- {}\n\n", d.model_id);
    out += "## Identified Smells\n";
    out += label_list(labels) + "\n";

    if (!d.findings.empty()) {
        out += "\n### Explanations\n";
        for (auto label : labels) {
            out += fmt::format("\n### {}\n", display_name(label));
            for (const auto& f : d.findings) {
                if (f.category != label) continue;
                for (const auto& e : f.evidence) {
                    out += "- " + one_line(e) + "\n";
                }
            }
        }
        out += "\n## Improvement Suggestions\n";
        for (const auto& f : d.findings) {
            for (const auto& a : f.suggestions) {
                out += fmt::format("\n{} |\n", one_line(a.title));
                if (!text::is_blank(a.body)) {
                    out += text::trim(a.body) + "\n";
                }
            }
        }
    }

    if (!d.category_errors.empty()) {
        out += "\n## Agent Errors\n";
        for (const auto& [label, message] : d.category_errors) {
            out += fmt::format("- {}: {}\n", label, one_line(message));
        }
    }
    return out;
}

json findings_to_json(const Diagnosis& d) {
    json labels = json::array();
    for (auto l : d.labels()) {
        labels.push_back(label_key(l));
    }
    json findings = json::array();
    for (const auto& f : d.findings) {
        json suggestions = json::array();
        for (const auto& a : f.suggestions) {
            suggestions.push_back({{"title", a.title}, {"body", a.body}});
        }
        findings.push_back({{"category", label_key(f.category)},
                            {"evidence", f.evidence},
                            {"suggestions", std::move(suggestions)},
                            {"detector", to_string(f.detector)},
                            {"confidence", f.confidence}});
    }
    json out = {{"endpoint", d.endpoint.key()},
                {"api_title", d.api_title},
                {"model_id", d.model_id},
                {"labels", std::move(labels)},
                {"findings", std::move(findings)}};
    if (!d.category_errors.empty()) {
        out["category_errors"] = d.category_errors;
    }
    if (!d.warnings.empty()) {
        out["warnings"] = d.warnings;
    }
    return out;
}

std::string render_findings_json(const Diagnosis& d) {
    return canonical_dump(findings_to_json(d));
}

Diagnosis findings_from_json(const json& node) {
    if (!node.is_object()) {
        malformed("findings: root must be an object");
    }
    Diagnosis d;
    const auto key = string_field(node, "endpoint");
    auto ep = parse_endpoint_key(key);
    if (!ep) {
        throw Error(ErrorCode::BadEndpointKey, fmt::format("'{}'", key));
    }
    d.endpoint = *ep;
    d.api_title = string_field(node, "api_title");
    d.model_id = string_field(node, "model_id");
    d.warnings = string_list(node, "warnings");

    auto findings = node.find("findings");
    if (findings == node.end() || !findings->is_array()) {
        malformed("findings: `findings` must be an array");
    }
    for (const auto& item : *findings) {
        if (!item.is_object() || !item.contains("category")) {
            malformed("findings: each finding must be an object with a category");
        }
        Finding f;
        f.category = label_field(item.at("category"));
        f.endpoint = d.endpoint;
        f.evidence = string_list(item, "evidence");
        if (auto s = item.find("suggestions"); s != item.end()) {
            if (!s->is_array()) malformed("findings: `suggestions` must be an array");
            for (const auto& a : *s) {
                if (!a.is_object()) malformed("findings: suggestion must be an object");
                f.suggestions.push_back(Action{string_field(a, "title"), string_field(a, "body")});
            }
        }
        const auto detector = item.value("detector", std::string("rules"));
        if (detector != "rules" && detector != "agent") {
            malformed(fmt::format("findings: unknown detector '{}'", detector));
        }
        f.detector = detector == "rules" ? DetectorKind::Rules : DetectorKind::Agent;
        if (auto c = item.find("confidence"); c != item.end()) {
            if (!c->is_number()) malformed("findings: `confidence` must be a number");
            f.confidence = c->get<double>();
        }
        d.findings.push_back(std::move(f));
    }

    if (auto errors = node.find("category_errors"); errors != node.end()) {
        if (!errors->is_object()) malformed("findings: `category_errors` must be an object");
        for (const auto& [label, message] : errors->items()) {
            if (!message.is_string()) malformed("findings: category error must be a string");
            d.category_errors[label] = message.get<std::string>();
        }
    }

    // `labels` is derived; a file that disagrees with its findings was edited by hand.
    if (auto labels = node.find("labels"); labels != node.end()) {
        if (!labels->is_array()) malformed("findings: `labels` must be an array");
        std::vector<Label> listed;
        for (const auto& l : *labels) listed.push_back(label_field(l));
        if (listed != d.labels()) {
            malformed(fmt::format("findings for {}: `labels` does not match the findings", key));
        }
    }
    return d;
}

Diagnosis parse_findings_json(std::string_view text) {
    json node = json::parse(text, nullptr, false);
    if (node.is_discarded()) {
        malformed("findings: not valid JSON");
    }
    return findings_from_json(node);
}

EcosystemSummary aggregate(const std::vector<Diagnosis>& diagnoses,
                           const LabelUniverse& universe) {
    if (diagnoses.empty()) {
        throw Error(ErrorCode::EmptyCorpus, "no diagnoses to aggregate");
    }
    std::set<std::string> seen;
    std::vector<int> counts(universe.size(), 0);
    EcosystemSummary s;
    s.universe = universe.name;
    for (const auto& d : diagnoses) {
        const auto key = d.endpoint.key();
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::DuplicateEndpoint, key);
        }
        const auto labels = d.labels();
        for (auto l : project_labels(labels, universe)) {
            ++counts[*universe.index_of(l)];
            ++s.total_smells;
        }
    }
    s.total_endpoints = static_cast<int>(diagnoses.size());
    s.avg_smells_per_endpoint =
        static_cast<double>(s.total_smells) / static_cast<double>(s.total_endpoints);
    for (std::size_t i = 0; i < universe.size(); ++i) {
        s.per_category.push_back(CategoryRow{
            universe.labels[i], counts[i],
            static_cast<double>(counts[i]) / static_cast<double>(s.total_endpoints)});
    }
    std::sort(s.per_category.begin(), s.per_category.end(),
              [](const CategoryRow& a, const CategoryRow& b) {
                  if (a.frequency != b.frequency) return a.frequency > b.frequency;
                  return label_key(a.label) < label_key(b.label);
              });
    return s;
}

std::string render_summary_text(const EcosystemSummary& s) {
    std::size_t width = std::string_view("Smell").size();
    for (const auto& row : s.per_category) {
        width = std::max(width, label_key(row.label).size());
    }
    std::string out = fmt::format("{:<{}}  {:>9}  {:>14}\n", "Smell", width, "Frequency",
                                  "% of endpoints");
    for (const auto& row : s.per_category) {
        out += fmt::format("{:<{}}  {:>9}  {:>13}%\n", label_key(row.label), width,
                           row.frequency, std::lround(row.pct_of_endpoints * 100.0));
    }
    out += fmt::format("\nEndpoints: {}\nTotal smells: {}\nAverage smells per endpoint: {:.2f}\n",
                       s.total_endpoints, s.total_smells, s.avg_smells_per_endpoint);
    return out;
}

std::string render_summary_json(const EcosystemSummary& s) {
    json rows = json::array();
    for (const auto& row : s.per_category) {
        rows.push_back({{"label", label_key(row.label)},
                        {"frequency", row.frequency},
                        {"pct_of_endpoints", row.pct_of_endpoints}});
    }
    return canonical_dump({{"universe", s.universe},
                           {"total_endpoints", s.total_endpoints},
                           {"total_smells", s.total_smells},
                           {"avg_smells_per_endpoint", s.avg_smells_per_endpoint},
                           {"per_category", std::move(rows)}});
}

std::string render_summary_csv(const EcosystemSummary& s) {
    std::string out = "label,frequency,pct_of_endpoints\n";
    for (const auto& row : s.per_category) {
        out += fmt::format("{},{},{}\n", label_key(row.label), row.frequency,
                           row.pct_of_endpoints);
    }
    return out;
}

}  // namespace hermes
