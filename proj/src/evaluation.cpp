#include "hermes/evaluation.hpp"

#include <fstream>
#include <set>

#include <fmt/format.h>

#include "hermes/error.hpp"
#include "text_util.hpp"

namespace hermes {

namespace {

constexpr std::string_view kEnvelopeKeys[] = {"universe", "model_id", "entries"};

bool is_envelope(const json& node) {
    if (!node.contains("entries") || !node.at("entries").is_object()) {
        return false;
    }
    for (const auto& [key, value] : node.items()) {
        if (std::find(std::begin(kEnvelopeKeys), std::end(kEnvelopeKeys), key) ==
            std::end(kEnvelopeKeys)) {
            return false;
        }
    }
    return true;
}

double ratio_or_one(double num, double den) {
    return den == 0.0 ? 1.0 : num / den;
}

}  // namespace

AnnotationSet annotations_from_json(const json& node, const LabelUniverse& universe,
                                    std::filesystem::path source) {
    if (!node.is_object()) {
        throw Error(ErrorCode::MalformedFile,
                    fmt::format("{}: root must be a JSON object", source.string()));
    }
    AnnotationSet set;
    set.universe = universe;
    set.source = std::move(source);
    const json* entries = &node;
    if (is_envelope(node)) {
        if (auto u = node.find("universe"); u != node.end()) {
            if (!u->is_string()) {
                throw Error(ErrorCode::MalformedFile, "`universe` must be a string");
            }
            set.universe = LabelUniverse::by_name(u->get<std::string>());
        }
        if (auto m = node.find("model_id"); m != node.end()) {
            if (!m->is_string()) {
                throw Error(ErrorCode::MalformedFile, "`model_id` must be a string");
            }
            set.model_id = m->get<std::string>();
        }
        entries = &node.at("entries");
    }

    for (const auto& [key, value] : entries->items()) {
        auto ep = parse_endpoint_key(key);
        if (!ep) {
            throw Error(ErrorCode::BadEndpointKey, fmt::format("'{}'", key));
        }
        if (!value.is_array()) {
            throw Error(ErrorCode::MalformedFile,
                        fmt::format("labels for {} must be an array of strings", key));
        }
        std::vector<Label> parsed;
        for (const auto& item : value) {
            if (!item.is_string()) {
                throw Error(ErrorCode::MalformedFile,
                            fmt::format("labels for {} must be an array of strings", key));
            }
            parsed.push_back(parse_label(item.get<std::string>(), set.universe));
        }
        std::vector<std::string> dropped;
        for (auto l : parsed) {
            const Label one[] = {l};
            if (project_labels(one, set.universe).empty()) {
                dropped.emplace_back(label_key(l));
            }
        }
        if (!dropped.empty()) {
            set.warnings.push_back(fmt::format("{}: dropped labels outside {}: {}", key,
                                               set.universe.name, text::join(dropped, ", ")));
        }
        // Keys differing only in method case collapse onto one entry.
        auto& slot = set.entries[ep->key()];
        parsed.insert(parsed.end(), slot.begin(), slot.end());
        slot = project_labels(parsed, set.universe);
    }
    return set;
}

AnnotationSet load_annotations(const std::filesystem::path& path, const LabelUniverse& universe) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + path.string());
    }
    json node = json::parse(in, nullptr, false);
    if (node.is_discarded()) {
        throw Error(ErrorCode::MalformedFile, path.string() + ": not valid JSON");
    }
    auto set = annotations_from_json(node, universe, path);
    if (set.model_id.empty()) {
        set.model_id = path.stem().string();
    }
    return set;
}

MetricsReport compute_metrics(const AnnotationSet& gold, const PredictionSet& pred) {
    if (gold.universe != pred.universe) {
        throw Error(ErrorCode::UniverseMismatch,
                    fmt::format("gold uses {} but predictions use {}", gold.universe.name,
                                pred.universe.name));
    }
    const auto& universe = gold.universe;
    const auto L = universe.size();

    MetricsReport r;
    r.universe = universe.name;
    r.model_id = pred.model_id;
    r.universe_size = static_cast<int>(L);
    for (auto l : universe.labels) {
        r.per_label[l] = LabelCounts{};
    }

    double jaccard_sum = 0;
    double hamming_sum = 0;
    double cardinality_sum = 0;
    for (const auto& [key, gold_labels] : gold.entries) {
        auto it = pred.entries.find(key);
        if (it == pred.entries.end()) {
            ++r.missing_in_pred;
            continue;
        }
        const std::set<Label> y(gold_labels.begin(), gold_labels.end());
        const std::set<Label> yhat(it->second.begin(), it->second.end());
        std::size_t inter = 0;
        std::size_t uni = 0;
        for (auto l : universe.labels) {
            const bool in_y = y.contains(l);
            const bool in_yhat = yhat.contains(l);
            auto& c = r.per_label[l];
            if (in_y && in_yhat) {
                ++c.tp;
                ++inter;
            } else if (in_yhat) {
                ++c.fp;
            } else if (in_y) {
                ++c.fn;
            }
            uni += (in_y || in_yhat) ? 1 : 0;
        }
        jaccard_sum += ratio_or_one(static_cast<double>(inter), static_cast<double>(uni));
        hamming_sum += static_cast<double>(uni - inter) / static_cast<double>(L);
        cardinality_sum += static_cast<double>(yhat.size()) - static_cast<double>(y.size());
        ++r.n_instances;
    }
    for (const auto& [key, labels] : pred.entries) {
        if (!gold.entries.contains(key)) {
            ++r.missing_in_gold;
        }
    }
    if (r.n_instances == 0) {
        throw Error(ErrorCode::NoCommonEndpoints, "gold and predictions share no endpoint keys");
    }

    const double n = r.n_instances;
    r.jaccard = jaccard_sum / n;
    r.hamming_loss = hamming_sum / n;
    r.cardinality_diff = cardinality_sum / n;

    int tp = 0;
    int fp = 0;
    int fn = 0;
    double macro_sum = 0;
    int macro_n = 0;
    for (auto& [label, c] : r.per_label) {
        tp += c.tp;
        fp += c.fp;
        fn += c.fn;
        const int den = 2 * c.tp + c.fp + c.fn;
        if (den > 0) {
            c.f1 = 2.0 * c.tp / den;
            macro_sum += *c.f1;
            ++macro_n;
        }
    }
    r.f1_micro = ratio_or_one(2.0 * tp, 2.0 * tp + fp + fn);
    r.f1_macro = macro_n == 0 ? 1.0 : macro_sum / macro_n;
    return r;
}

MetricsReport evaluate_file_pair(const std::filesystem::path& gold_path,
                                 const std::filesystem::path& pred_path,
                                 const LabelUniverse& universe) {
    const auto gold = load_annotations(gold_path, universe);
    const auto pred = load_annotations(pred_path, universe);
    return compute_metrics(gold, pred);
}

json to_json(const MetricsReport& r) {
    json per_label = json::object();
    for (const auto& [label, c] : r.per_label) {
        per_label[std::string(label_key(label))] = {
            {"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn},
            {"f1", c.f1 ? json(*c.f1) : json(nullptr)}};
    }
    return {{"universe", r.universe},
            {"model_id", r.model_id},
            {"jaccard", r.jaccard},
            {"f1_micro", r.f1_micro},
            {"f1_macro", r.f1_macro},
            {"hamming_loss", r.hamming_loss},
            {"cardinality_diff", r.cardinality_diff},
            {"n_instances", r.n_instances},
            {"universe_size", r.universe_size},
            {"missing_in_pred", r.missing_in_pred},
            {"missing_in_gold", r.missing_in_gold},
            {"per_label", std::move(per_label)},
            {"conventions",
             {{"jaccard_empty_union", 1.0},
              {"f1_micro_zero_denominator", 1.0},
              {"f1_macro", "mean over labels with tp+fp+fn > 0; 1.0 when none"}}}};
}

std::string render_metrics_table(const MetricsReport& r) {
    std::string out;
    out += fmt::format("{:<18}{}\n", "Model", r.model_id.empty() ? "-" : r.model_id);
    out += fmt::format("{:<18}{} (L={})\n", "Universe", r.universe, r.universe_size);
    out += fmt::format("{:<18}{}", "Instances", r.n_instances);
    if (r.missing_in_pred > 0 || r.missing_in_gold > 0) {
        out += fmt::format("  (missing in pred: {}, missing in gold: {})", r.missing_in_pred,
                           r.missing_in_gold);
    }
    out += "\n\n";
    out += fmt::format("{:<18}{:>10.4f}\n", "Jaccard", r.jaccard);
    out += fmt::format("{:<18}{:>10.4f}\n", "F1 micro", r.f1_micro);
    out += fmt::format("{:<18}{:>10.4f}\n", "F1 macro", r.f1_macro);
    out += fmt::format("{:<18}{:>10.4f}\n", "Hamming loss", r.hamming_loss);
    out += fmt::format("{:<18}{:>+10.4f}\n", "Cardinality diff", r.cardinality_diff);
    out += fmt::format("\n{:<22}{:>5}{:>5}{:>5}{:>9}\n", "Label", "TP", "FP", "FN", "F1");
    for (const auto& [label, c] : r.per_label) {
        out += fmt::format("{:<22}{:>5}{:>5}{:>5}{:>9}\n", label_key(label), c.tp, c.fp, c.fn,
                           c.f1 ? fmt::format("{:.4f}", *c.f1) : std::string("-"));
    }
    return out;
}

}  // namespace hermes
