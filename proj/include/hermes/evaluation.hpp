#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermes/openapi_model.hpp"
#include "hermes/smell_taxonomy.hpp"

namespace hermes {

/// Per-endpoint label sets. Used for both gold annotations and predictions.
struct AnnotationSet {
    LabelUniverse universe;
    /// Canonical `METHOD:/path` -> labels in universe order.
    std::map<std::string, std::vector<Label>> entries;
    std::filesystem::path source;
    std::string model_id;  // predictions only
    std::vector<std::string> warnings;
};

using PredictionSet = AnnotationSet;

/// Accepts either a plain object of `"METHOD:/path": [labels]` or an
/// envelope `{"universe": ..., "model_id": ..., "entries": {...}}`. A universe
/// named by the envelope takes precedence over `universe`. Labels outside the
/// universe are dropped with a warning.
/// Throws IoError, MalformedFile, UnknownLabel, AmbiguousMerged, BadEndpointKey.
AnnotationSet load_annotations(const std::filesystem::path& path, const LabelUniverse& universe);
AnnotationSet annotations_from_json(const json& node, const LabelUniverse& universe,
                                    std::filesystem::path source = {});

struct LabelCounts {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    std::optional<double> f1;  // absent when tp + fp + fn == 0

    bool operator==(const LabelCounts&) const = default;
};

struct MetricsReport {
    std::string universe;
    std::string model_id;
    double jaccard = 0;
    double f1_micro = 0;
    double f1_macro = 0;
    double hamming_loss = 0;
    double cardinality_diff = 0;
    int n_instances = 0;
    int universe_size = 0;
    int missing_in_pred = 0;  // gold keys without a prediction
    int missing_in_gold = 0;  // predicted keys without gold
    std::map<Label, LabelCounts> per_label;
};

/// Metrics over the endpoint keys present in both sets.
/// Throws UniverseMismatch and NoCommonEndpoints.
MetricsReport compute_metrics(const AnnotationSet& gold, const PredictionSet& pred);

MetricsReport evaluate_file_pair(const std::filesystem::path& gold_path,
                                 const std::filesystem::path& pred_path,
                                 const LabelUniverse& universe);

/// Canonical JSON including the zero-division conventions in force.
json to_json(const MetricsReport& r);
std::string render_metrics_table(const MetricsReport& r);

}  // namespace hermes
