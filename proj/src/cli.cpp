#include "hermes/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hermes/agent_detectors.hpp"
#include "hermes/endpoint_reducer.hpp"
#include "hermes/error.hpp"
#include "hermes/evaluation.hpp"
#include "hermes/reporting.hpp"
#include "hermes/rule_detectors.hpp"
#include "hermes/source_loader.hpp"

namespace fs = std::filesystem;

namespace hermes::cli {

namespace {

struct Options {
    std::string spec;
    std::vector<std::string> endpoints;
    bool all = false;
    std::string detectors = "rules";
    std::string universe = "default8";
    std::string thresholds;
    std::string out_dir = "hermes-out";
    std::string formats = "md,json";
    int jobs = 1;
    bool fail_on_smells = false;

    std::string llm_base_url;
    std::string llm_model;
    double llm_timeout = 120;
    int llm_retries = 2;
    int llm_concurrency = 4;
    std::string prompts_dir;

    std::string findings_path;
    std::string findings_dir;
    std::string gold;
    std::string pred;
    std::string summary_as = "text";
};

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
        return std::nullopt;
    }
    return std::string(v);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << content)) {
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string label_line(const Diagnosis& d) {
    const auto labels = d.labels();
    if (labels.empty()) {
        return "none";
    }
    std::string out;
    for (auto l : labels) {
        if (!out.empty()) out += ", ";
        out += label_key(l);
    }
    return out;
}

ChatBackendConfig backend_config(const Options& o) {
    ChatBackendConfig cfg;
    cfg.base_url = !o.llm_base_url.empty() ? o.llm_base_url
                                           : env("HERMES_LLM_BASE_URL").value_or("");
    cfg.model_id = !o.llm_model.empty() ? o.llm_model : env("HERMES_LLM_MODEL").value_or("");
    cfg.api_key = env("HERMES_LLM_API_KEY");
    cfg.request_timeout = std::chrono::milliseconds(static_cast<long long>(o.llm_timeout * 1000));
    cfg.max_retries = o.llm_retries;
    cfg.max_concurrent_requests = o.llm_concurrency;
    if (cfg.base_url.empty()) {
        throw Error(ErrorCode::ConfigError,
                    "LLM detectors need --llm-base-url or HERMES_LLM_BASE_URL");
    }
    if (cfg.model_id.empty()) {
        throw Error(ErrorCode::ConfigError, "LLM detectors need --llm-model or HERMES_LLM_MODEL");
    }
    cfg.validate();
    return cfg;
}

std::vector<EndpointRef> select_endpoints(const Document& doc, const Options& o) {
    if (o.endpoints.empty()) {
        return list_endpoints(doc);
    }
    std::vector<EndpointRef> out;
    for (const auto& key : o.endpoints) {
        auto ep = parse_endpoint_key(key);
        if (!ep) {
            throw Error(ErrorCode::BadEndpointKey, fmt::format("'{}'", key));
        }
        if (find_operation(doc, *ep) == nullptr) {
            throw Error(ErrorCode::UnknownEndpoint, ep->key());
        }
        if (std::find(out.begin(), out.end(), *ep) == out.end()) {
            out.push_back(*ep);
        }
    }
    return out;
}

// Rule findings first within a label, then agent findings.
Diagnosis merge(Diagnosis rules, Diagnosis agent) {
    Diagnosis d = std::move(agent);
    d.model_id = rules.model_id + "+" + d.model_id;
    std::vector<Finding> all = std::move(rules.findings);
    all.insert(all.end(), d.findings.begin(), d.findings.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const Finding& a, const Finding& b) { return a.category < b.category; });
    d.findings = std::move(all);
    return d;
}

json audit_json(const AgentRun& run) {
    json out = json::object();
    for (const auto& r : run.results) {
        out[std::string(label_key(r.label))] = {{"raw_response", r.raw_response},
                                                {"parse_repairs_applied", r.parse_repairs_applied},
                                                {"warnings", r.warnings}};
    }
    return out;
}

struct EndpointOutcome {
    std::optional<Diagnosis> diagnosis;
    std::optional<AgentRun> audit;
    std::string error;
};

struct Analysis {
    std::vector<EndpointRef> endpoints;
    std::vector<EndpointOutcome> outcomes;
};

Analysis analyze_all(const Options& o) {
    const auto doc = load_document(o.spec);
    const auto universe = LabelUniverse::by_name(o.universe);
    Thresholds thresholds = o.thresholds.empty() ? Thresholds{} : load_thresholds(o.thresholds);
    thresholds.validate();

    const bool use_rules = o.detectors == "rules" || o.detectors == "both";
    const bool use_llm = o.detectors == "llm" || o.detectors == "both";
    std::optional<ChatBackendConfig> cfg;
    std::unique_ptr<HttpChatBackend> backend;
    std::map<Label, PromptTemplate> templates;
    if (use_llm) {
        cfg = backend_config(o);
        backend = std::make_unique<HttpChatBackend>(*cfg);
        const auto dir = o.prompts_dir.empty() ? default_prompts_dir() : fs::path(o.prompts_dir);
        templates = load_prompt_templates(dir, universe.labels);
    }

    Analysis a;
    a.endpoints = select_endpoints(doc, o);
    a.outcomes.resize(a.endpoints.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < a.endpoints.size(); i = next++) {
            auto& outcome = a.outcomes[i];
            try {
                const auto re = reduce_endpoint(doc, a.endpoints[i]);
                std::optional<Diagnosis> rules;
                if (use_rules) {
                    rules = run_rules(re, thresholds, universe);
                }
                if (use_llm) {
                    outcome.audit =
                        orchestrate_with_audit(re, universe.labels, templates, *backend, *cfg);
                    outcome.diagnosis = rules ? merge(std::move(*rules), outcome.audit->diagnosis)
                                              : outcome.audit->diagnosis;
                } else {
                    outcome.diagnosis = std::move(rules);
                }
            } catch (const std::exception& e) {
                outcome.error = e.what();
            }
        }
    };
    const auto workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(o.jobs, 1)), a.endpoints.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) t.join();
    return a;
}

int cmd_analyze(const Options& o, bool write_reports, std::ostream& out, std::ostream& err) {
    if (o.spec.empty()) {
        throw Error(ErrorCode::ConfigError, "--spec is required");
    }
    std::set<std::string> formats;
    {
        std::stringstream ss(o.formats);
        std::string f;
        while (std::getline(ss, f, ',')) {
            if (f != "md" && f != "json") {
                throw Error(ErrorCode::ConfigError, fmt::format("unknown format '{}'", f));
            }
            formats.insert(f);
        }
    }
    const auto a = analyze_all(o);
    if (write_reports) {
        fs::create_directories(o.out_dir);
    }

    bool failed = false;
    bool smells = false;
    std::map<std::string, int> used_names;
    for (std::size_t i = 0; i < a.endpoints.size(); ++i) {
        const auto key = a.endpoints[i].key();
        const auto& outcome = a.outcomes[i];
        if (!outcome.diagnosis) {
            err << "hermes: error: " << key << ": " << outcome.error << "\n";
            failed = true;
            continue;
        }
        const auto& d = *outcome.diagnosis;
        smells = smells || !d.findings.empty();
        out << key << ": " << label_line(d) << "\n";
        for (const auto& [label, message] : d.category_errors) {
            err << "hermes: warning: " << key << ": " << label << " agent failed: " << message
                << "\n";
        }
        if (!write_reports) {
            continue;
        }
        auto base = report_basename(a.endpoints[i]);
        if (const int n = ++used_names[base]; n > 1) {
            base += fmt::format("-{}", n);
        }
        const fs::path dir(o.out_dir);
        if (formats.contains("md")) {
            write_file(dir / (base + ".report.md"), render_report(d));
        }
        if (formats.contains("json")) {
            write_file(dir / (base + ".findings.json"), render_findings_json(d) + "\n");
        }
        if (outcome.audit) {
            write_file(dir / (base + ".agent.json"), canonical_dump(audit_json(*outcome.audit)) + "\n");
        }
    }
    if (failed) {
        return kExitError;
    }
    return smells && o.fail_on_smells ? kExitSmells : kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.spec.empty()) {
        throw Error(ErrorCode::ConfigError, "--spec is required");
    }
    if (o.endpoints.size() != 1) {
        throw Error(ErrorCode::ConfigError, "reduce needs exactly one --endpoint");
    }
    const auto doc = load_document(o.spec);
    auto ep = parse_endpoint_key(o.endpoints.front());
    if (!ep) {
        throw Error(ErrorCode::BadEndpointKey, fmt::format("'{}'", o.endpoints.front()));
    }
    const auto re = reduce_endpoint(doc, *ep);
    for (const auto& w : re.warnings) {
        err << "hermes: warning: " << w << "\n";
    }
    out << re.reduced_json << "\n";
    return kExitOk;
}

int cmd_list(const Options& o, std::ostream& out) {
    if (o.spec.empty()) {
        throw Error(ErrorCode::ConfigError, "--spec is required");
    }
    const auto doc = load_document(o.spec);
    for (const auto& ep : list_endpoints(doc)) {
        const auto* op = find_operation(doc, ep);
        out << ep.key();
        if (op != nullptr && op->summary) {
            out << "\t" << *op->summary;
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
    const auto d = parse_findings_json(read_file(o.findings_path));
    out << render_report(d);
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const auto universe = LabelUniverse::by_name(o.universe);
    const auto report = evaluate_file_pair(o.gold, o.pred, universe);
    out << render_metrics_table(report);
    fs::create_directories(o.out_dir);
    const auto name = report.model_id.empty() ? std::string("metrics") : report.model_id;
    const auto path = fs::path(o.out_dir) / (name + ".metrics.json");
    write_file(path, canonical_dump(to_json(report)) + "\n");
    out << "\nwrote " << path.string() << "\n";
    return kExitOk;
}

int cmd_aggregate(const Options& o, std::ostream& out) {
    const auto universe = LabelUniverse::by_name(o.universe);
    if (!fs::is_directory(o.findings_dir)) {
        throw Error(ErrorCode::IoError, o.findings_dir + " is not a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.findings_dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.ends_with(".findings.json")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<Diagnosis> diagnoses;
    for (const auto& f : files) {
        try {
            diagnoses.push_back(parse_findings_json(read_file(f)));
        } catch (const Error& e) {
            throw Error(e.code(), f.string() + ": " + e.what());
        }
    }
    const auto summary = aggregate(diagnoses, universe);
    if (o.summary_as == "json") {
        out << render_summary_json(summary) << "\n";
    } else if (o.summary_as == "csv") {
        out << render_summary_csv(summary);
    } else {
        out << render_summary_text(summary);
    }
    return kExitOk;
}

}  // namespace

std::string report_basename(const EndpointRef& ep) {
    std::string path;
    for (char c : ep.path) {
        if (c == '{' || c == '}') continue;
        path.push_back(c == '/' ? '_'
                                : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return std::string(to_upper_string(ep.method)) + "_" + path;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Detects documentation and REST design smells in OpenAPI 3.x endpoints.",
                 "hermes"};
    app.require_subcommand(1);

    app.add_option("--spec", o.spec, "OpenAPI document path or http(s) URL");
    app.add_option("--endpoint", o.endpoints, "Endpoint key METHOD:/path (repeatable)");
    app.add_flag("--all", o.all, "Select every endpoint (the default when none is given)");
    app.add_option("--detectors", o.detectors, "rules, llm or both")
        ->check(CLI::IsMember({"rules", "llm", "both"}));
    app.add_option("--universe", o.universe, "default8, full9 or full10")
        ->check(CLI::IsMember({"default8", "full9", "full10"}));
    app.add_option("--thresholds", o.thresholds, "JSON file with rule thresholds");
    app.add_option("--out", o.out_dir, "Output directory");
    app.add_option("--format", o.formats, "Comma-separated report formats: md, json");
    app.add_option("--jobs", o.jobs, "Endpoints analyzed in parallel")->check(CLI::PositiveNumber);
    app.add_flag("--fail-on-smells", o.fail_on_smells, "Exit 1 when any smell is found");
    app.add_option("--llm-base-url", o.llm_base_url, "Chat-completion base URL");
    app.add_option("--llm-model", o.llm_model, "Chat model id");
    app.add_option("--llm-timeout", o.llm_timeout, "Request timeout in seconds")
        ->check(CLI::PositiveNumber);
    app.add_option("--llm-retries", o.llm_retries, "Retries on transport errors and 5xx")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--llm-concurrency", o.llm_concurrency, "Agent requests in flight")
        ->check(CLI::PositiveNumber);
    app.add_option("--prompts", o.prompts_dir, "Directory with prompt templates");

    auto* analyze = app.add_subcommand("analyze", "Detect smells and write reports");
    auto* detect = app.add_subcommand("detect", "Detect smells and print labels only");
    auto* reduce = app.add_subcommand("reduce", "Print the reduced document for one endpoint");
    auto* list = app.add_subcommand("list", "List endpoints");
    auto* report = app.add_subcommand("report", "Render a report from a findings file");
    report->add_option("findings", o.findings_path, "Findings JSON file")->required();
    auto* eval = app.add_subcommand("eval", "Compare predictions with gold annotations");
    eval->add_option("--gold", o.gold, "Gold annotations file")->required();
    eval->add_option("--pred", o.pred, "Predictions file")->required();
    auto* agg = app.add_subcommand("aggregate", "Summarize a directory of findings files");
    agg->add_option("findings_dir", o.findings_dir, "Directory of .findings.json files")
        ->required();
    agg->add_option("--as", o.summary_as, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    for (auto* sub : {analyze, detect, reduce, list, report, eval, agg}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        if (o.all && !o.endpoints.empty()) {
            throw Error(ErrorCode::ConfigError, "--all and --endpoint are mutually exclusive");
        }
        if (analyze->parsed()) return cmd_analyze(o, true, out, err);
        if (detect->parsed()) return cmd_analyze(o, false, out, err);
        if (reduce->parsed()) return cmd_reduce(o, out, err);
        if (list->parsed()) return cmd_list(o, out);
        if (report->parsed()) return cmd_report(o, out);
        if (eval->parsed()) return cmd_eval(o, out);
        if (agg->parsed()) return cmd_aggregate(o, out);
    } catch (const std::exception& e) {
        err << "hermes: error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace hermes::cli
