#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hermes/openapi_model.hpp"
#include "hermes/smell_taxonomy.hpp"

namespace hermes {

enum class DetectorKind { Rules, Agent };

std::string_view to_string(DetectorKind kind) noexcept;

/// A suggested remediation. Titles read `[CATEGORY] - <action title>`.
struct Action {
    std::string title;
    std::string body;

    bool operator==(const Action&) const = default;
};

bool is_action_title(std::string_view title);

struct Finding {
    Label category = Label::Lazy;
    EndpointRef endpoint;
    std::vector<std::string> evidence;  // complete sentences
    std::vector<Action> suggestions;
    DetectorKind detector = DetectorKind::Rules;
    double confidence = 1.0;

    bool operator==(const Finding&) const = default;
};

/// All findings for one endpoint from one detector run.
struct Diagnosis {
    EndpointRef endpoint;
    std::string api_title;
    std::string model_id;
    std::vector<Finding> findings;
    /// Label key -> failure message, for categories whose agent failed.
    std::map<std::string, std::string> category_errors;
    std::vector<std::string> warnings;

    /// Distinct finding categories in order of first appearance.
    std::vector<Label> labels() const;

    bool operator==(const Diagnosis&) const = default;
};

}  // namespace hermes
