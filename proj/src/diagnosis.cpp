#include "hermes/diagnosis.hpp"

#include <algorithm>
#include <regex>

namespace hermes {

std::string_view to_string(DetectorKind kind) noexcept {
    return kind == DetectorKind::Rules ? "rules" : "agent";
}

bool is_action_title(std::string_view title) {
    static const std::regex kTitle(R"(\[[A-Z_]+\] - .+)");
    return std::regex_match(title.begin(), title.end(), kTitle);
}

std::vector<Label> Diagnosis::labels() const {
    std::vector<Label> out;
    for (const auto& f : findings) {
        if (std::find(out.begin(), out.end(), f.category) == out.end()) {
            out.push_back(f.category);
        }
    }
    return out;
}

}  // namespace hermes
