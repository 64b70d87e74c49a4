#pragma once

// Random (gold, pred) corpora checked against the brute-force oracle.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hermes/evaluation.hpp"
#include "metrics_oracle.hpp"

namespace hermes::testkit {

/// The first `size` labels of default8, as an ad-hoc universe.
inline LabelUniverse sub_universe(int size) {
    auto u = LabelUniverse::default8();
    u.labels.resize(static_cast<std::size_t>(size));
    u.name = "default8[" + std::to_string(size) + "]";
    return u;
}

struct RandomCorpus {
    AnnotationSet gold;
    PredictionSet pred;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
    int L = 0;
};

inline std::vector<Label> labels_of(std::uint32_t mask, const LabelUniverse& u) {
    std::vector<Label> out;
    for (std::size_t b = 0; b < u.labels.size(); ++b) {
        if (mask & (1u << b)) out.push_back(u.labels[b]);
    }
    return out;
}

inline RandomCorpus random_corpus(std::mt19937& rng) {
    RandomCorpus c;
    c.L = std::uniform_int_distribution<int>(1, 8)(rng);
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto u = sub_universe(c.L);
    c.gold.universe = u;
    c.pred.universe = u;
    const std::uint32_t full = (1u << c.L) - 1;
    // Sparse and dense corpora both appear.
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    auto draw = [&] {
        std::uint32_t m = 0;
        for (int b = 0; b < c.L; ++b) {
            if (std::bernoulli_distribution(density)(rng)) m |= 1u << b;
        }
        return m & full;
    };
    for (int i = 0; i < n; ++i) {
        const auto g = draw();
        const auto p = std::bernoulli_distribution(0.2)(rng) ? g : draw();
        c.masks.emplace_back(g, p);
        const auto key = "GET:/r" + std::to_string(i);
        c.gold.entries[key] = labels_of(g, u);
        c.pred.entries[key] = labels_of(p, u);
    }
    return c;
}

struct OracleComparison {
    int corpora = 0;
    double max_abs_diff = 0;
    std::vector<std::string> failures;
};

inline OracleComparison compare_with_oracle(int corpora, std::uint32_t seed, double tolerance = 1e-12) {
    OracleComparison out;
    std::mt19937 rng(seed);
    for (int t = 0; t < corpora; ++t) {
        const auto c = random_corpus(rng);
        const auto r = compute_metrics(c.gold, c.pred);
        const auto o = brute_force_metrics(c.masks, c.L);
        const std::pair<const char*, std::pair<double, double>> pairs[] = {
            {"jaccard", {r.jaccard, o.jaccard}},
            {"f1_micro", {r.f1_micro, o.f1_micro}},
            {"f1_macro", {r.f1_macro, o.f1_macro}},
            {"hamming_loss", {r.hamming_loss, o.hamming_loss}},
            {"cardinality_diff", {r.cardinality_diff, o.cardinality_diff}},
        };
        for (const auto& [name, values] : pairs) {
            const double diff = std::abs(values.first - values.second);
            out.max_abs_diff = std::max(out.max_abs_diff, diff);
            if (!(diff <= tolerance)) {
                out.failures.push_back("corpus " + std::to_string(t) + " " + name + ": " +
                                       std::to_string(values.first) + " vs oracle " + std::to_string(values.second));
            }
        }
        ++out.corpora;
    }
    return out;
}

}  // namespace hermes::testkit
