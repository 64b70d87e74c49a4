#pragma once

// Agent replies that break the JSON-only output contract in common ways.

#include <string>
#include <vector>

#include "scripted_agents.hpp"

namespace hermes::testkit {

struct ParseFixture {
    std::string name;
    std::string raw;
    bool should_parse;
    std::vector<std::string> expected_repairs;
};

inline std::vector<ParseFixture> contract_fixtures() {
    const std::string lazy = golden_replies().at("Lazy");
    std::string trailing = lazy;
    // Add a trailing comma before the closing brace.
    trailing.insert(trailing.rfind('}'), ",");
    return {
        {"clean JSON", lazy, true, {}},
        {"code-fenced JSON", "```json\n" + lazy + "\n```", true, {"strip_code_fences"}},
        {"leading prose", "Here is my analysis of the endpoint:\n" + lazy + "\nLet me know if you need more.", true,
         {"extract_first_object"}},
        {"trailing comma", trailing, true, {"remove_trailing_commas"}},
        {"pure prose", "I think the endpoint is lazy.", false, {}},
    };
}

}  // namespace hermes::testkit
