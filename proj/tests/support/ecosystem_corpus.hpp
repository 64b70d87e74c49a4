#pragma once

// Synthetic 600-endpoint corpus with fixed per-label endpoint counts
// (a reference ecosystem distribution).

#include <string>
#include <utility>
#include <vector>

#include "hermes/diagnosis.hpp"

namespace hermes::testkit {

inline const std::vector<std::pair<Label, int>>& ecosystem_counts() {
    static const std::vector<std::pair<Label, int>> counts = {
        {Label::Response, 600}, {Label::Lazy, 540},    {Label::Input, 530},   {Label::Security, 410},
        {Label::PathAndMethod, 320}, {Label::Tangled, 30}, {Label::Bloated, 10}, {Label::Fragmented, 10},
    };
    return counts;
}

inline constexpr int kEcosystemEndpoints = 600;

// Endpoint i carries label L when i < count(L). A second finding for the same
// label on some endpoints checks that counting is per endpoint.
inline std::vector<Diagnosis> ecosystem_corpus() {
    std::vector<Diagnosis> out;
    for (int i = 0; i < kEcosystemEndpoints; ++i) {
        Diagnosis d;
        d.endpoint = EndpointRef{HttpMethod::Get, "/ecosystem/e" + std::to_string(i)};
        d.api_title = "Corpus";
        d.model_id = "synthetic";
        for (const auto& [label, count] : ecosystem_counts()) {
            if (i >= count) continue;
            Finding f;
            f.category = label;
            f.endpoint = d.endpoint;
            f.evidence = {"Synthetic evidence."};
            d.findings.push_back(f);
            if (label == Label::Lazy && i % 3 == 0) d.findings.push_back(f);
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace hermes::testkit
