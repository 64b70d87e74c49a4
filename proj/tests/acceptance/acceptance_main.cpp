// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "detector_laws.hpp"
#include "ecosystem_corpus.hpp"
#include "hermes/agent_detectors.hpp"
#include "hermes/cli.hpp"
#include "hermes/error.hpp"
#include "hermes/reporting.hpp"
#include "metrics_corpus.hpp"
#include "mock_chat_server.hpp"
#include "parse_fixtures.hpp"
#include "reducer_laws.hpp"
#include "scripted_agents.hpp"
#include "test_paths.hpp"

using namespace hermes;
namespace fs = std::filesystem;

namespace {

using Failure = std::optional<std::string>;

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // 0 means no runtime bound
    std::function<Failure()> check;
};

std::string order_api_path() { return (testkit::data_dir() / "order_api.json").string(); }

int run_cli(std::vector<std::string> args, std::string& out, std::string& err) {
    args.insert(args.begin(), "hermes");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    out = o.str();
    err = e.str();
    return code;
}

const std::string kExpectedLine = "GET:/orders/createNewOrder: Lazy, Security, Input, Response, Path_and_Method\n";
const std::string kReportBase = "GET__orders_createneworder";

Failure golden_rules() {
    const auto dir = testkit::scratch_dir("acceptance-rules");
    std::string out, err;
    if (run_cli({"analyze", "--spec", order_api_path(), "--all", "--detectors", "rules", "--out", dir.string()}, out,
                err) != cli::kExitOk) {
        return "analyze failed: " + err;
    }
    if (out != kExpectedLine) return "label line was: " + out;
    const auto d = parse_findings_json(testkit::read_text(dir / (kReportBase + ".findings.json")));
    const std::vector<Label> want{Label::Lazy, Label::Security, Label::Input, Label::Response, Label::PathAndMethod};
    if (d.labels() != want) return std::string("findings.json label set differs");
    const auto report = testkit::read_text(dir / (kReportBase + ".report.md"));
    std::size_t pos = 0;
    for (const std::string h : {"## API Info", "## Endpoint Info", "## Model", "## Identified Smells",
                                "### Explanations", "## Improvement Suggestions"}) {
        const auto at = report.find(h, pos);
        if (at == std::string::npos) return "header missing or out of order: " + h;
        pos = at + h.size();
    }
    return std::nullopt;
}

Failure golden_agents() {
    testkit::MockChatServer server(
        [](const std::string& prompt, int) { return testkit::MockReply{200, testkit::golden_reply_for(prompt)}; });
    const auto dir = testkit::scratch_dir("acceptance-agents");
    std::string out, err;
    if (run_cli({"analyze", "--spec", order_api_path(), "--detectors", "llm", "--llm-base-url", server.base_url(),
                 "--llm-model", "mock-model", "--out", dir.string()},
                out, err) != cli::kExitOk) {
        return "analyze failed: " + err;
    }
    if (out != kExpectedLine) return "label line was: " + out;
    const auto d = parse_findings_json(testkit::read_text(dir / (kReportBase + ".findings.json")));
    std::vector<std::string> titles;
    for (const auto& f : d.findings) {
        for (const auto& s : f.suggestions) titles.push_back(s.title);
    }
    const std::vector<std::string> want{"[LAZY] - Improve documentation", "[SECURITY] - Define authentication",
                                        "[INPUT] - Add validation", "[RESPONSE] - Improve responses",
                                        "[PATH_AND_METHOD] - Fix REST design"};
    if (titles != want) return fmt::format("titles were: {}", fmt::join(titles, " | "));
    return std::nullopt;
}

Failure ecosystem_aggregation() {
    const auto s = aggregate(testkit::ecosystem_corpus(), LabelUniverse::default8());
    if (s.total_endpoints != 600) return fmt::format("total_endpoints = {}", s.total_endpoints);
    if (s.total_smells != 2450) return fmt::format("total_smells = {}", s.total_smells);
    if (std::abs(s.avg_smells_per_endpoint - 4.08) > 0.005) {
        return fmt::format("avg = {}", s.avg_smells_per_endpoint);
    }
    std::vector<long> pct;
    for (const auto& row : s.per_category) pct.push_back(std::lround(row.pct_of_endpoints * 100));
    if (pct != std::vector<long>{100, 90, 88, 68, 53, 5, 2, 2}) return fmt::format("percentages {}", fmt::join(pct, "/"));
    return std::nullopt;
}

Failure metrics_oracle() {
    const auto r = testkit::compare_with_oracle(1000, 20260415u);
    if (r.corpora != 1000) return fmt::format("only {} corpora", r.corpora);
    if (!r.failures.empty()) return fmt::format("{} mismatches, first: {}", r.failures.size(), r.failures.front());
    return std::nullopt;
}

Failure reducer_laws() {
    std::size_t endpoints = 0;
    int docs = 0;
    for (std::uint32_t seed = 0; seed < 120; ++seed, ++docs) {
        testkit::RandomOpenApi gen(seed);
        const auto failures = testkit::check_reducer_laws(gen.document(), gen, static_cast<int>(seed), endpoints);
        if (!failures.empty()) return fmt::format("seed {}: {}", seed, failures.front());
    }
    if (docs < 100 || endpoints == 0) return std::string("corpus too small");
    return std::nullopt;
}

Failure detector_laws() {
    std::size_t outputs = 0;
    auto failures =
        testkit::check_detector_laws(nlohmann::json::parse(testkit::read_text(order_api_path())), outputs);
    if (!failures.empty()) return "order api: " + failures.front();
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        testkit::RandomOpenApi gen(seed);
        failures = testkit::check_detector_laws(gen.document(), outputs);
        if (!failures.empty()) return fmt::format("seed {}: {}", seed, failures.front());
    }
    return std::nullopt;
}

Failure output_contract() {
    int ok = 0;
    const auto fixtures = testkit::contract_fixtures();
    for (const auto& fx : fixtures) {
        try {
            const auto r = parse_agent_output(fx.raw, Label::Lazy);
            if (!fx.should_parse) return fx.name + ": accepted";
            if (r.parse_repairs_applied != fx.expected_repairs) return fx.name + ": unexpected repairs";
            const auto it = r.detected_endpoints.find(testkit::kOrderEndpointKey);
            if (r.detected_endpoints.size() != 1 || it == r.detected_endpoints.end() ||
                it->second.suggestions.size() != 1 ||
                it->second.suggestions[0].title != "[LAZY] - Improve documentation") {
                return fx.name + ": content not recovered";
            }
        } catch (const Error& e) {
            if (fx.should_parse || e.code() != ErrorCode::UnparseableOutput) return fx.name + ": " + e.what();
        }
        ++ok;
    }
    if (ok != 5 || fixtures.size() != 5) return fmt::format("{}/5 fixtures", ok);
    return std::nullopt;
}

Failure broken_ref_linkage() {
    auto raw = nlohmann::json::parse(testkit::read_text(order_api_path()));
    const std::string missing = "#/components/schemas/ShippingAddress";
    raw["components"]["schemas"]["CreateOrderRequest"]["properties"]["shipping"] = {{"$ref", missing}};
    const auto doc = parse_document(raw.dump());
    const auto ep = list_endpoints(doc).at(0);
    const auto re = reduce_endpoint(doc, ep);
    if (re.broken_refs != std::vector<std::string>{missing}) {
        return fmt::format("broken_refs = [{}]", fmt::join(re.broken_refs, ", "));
    }
    const auto d = run_rules(re, Thresholds{}, LabelUniverse::default8());
    int fragmented = 0;
    bool named = false;
    for (const auto& f : d.findings) {
        if (f.category != Label::Fragmented) continue;
        ++fragmented;
        for (const auto& e : f.evidence) named = named || e.find(missing) != std::string::npos;
    }
    if (fragmented != 1) return fmt::format("{} Fragmented findings", fragmented);
    if (!named) return std::string("Fragmented evidence does not name the ref");
    return std::nullopt;
}

}  // namespace

int main() {
    for (const char* v : {"HERMES_LLM_BASE_URL", "HERMES_LLM_API_KEY", "HERMES_LLM_MODEL"}) unsetenv(v);

    const std::vector<Criterion> criteria = {
        {1, "golden reproduction, rule detectors", 1.0, golden_rules},
        {2, "golden reproduction, mocked agents", 2.0, golden_agents},
        {3, "ecosystem aggregation arithmetic", 1.0, ecosystem_aggregation},
        {4, "metrics oracle equivalence", 10.0, metrics_oracle},
        {5, "reducer laws", 30.0, reducer_laws},
        {6, "detector determinism and locality", 0.0, detector_laws},
        {7, "agent output contract", 0.0, output_contract},
        {8, "broken ref to Fragmented linkage", 0.0, broken_ref_linkage},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Failure failure;
        try {
            failure = c.check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!failure && c.budget_s > 0 && secs >= c.budget_s) {
            failure = fmt::format("took {:.3f}s, budget {:.0f}s", secs, c.budget_s);
        }
        if (failure) ++failed;
        std::cout << fmt::format("{} [{}] {} ({:.3f}s){}", failure ? "FAIL" : "PASS", c.id, c.name, secs,
                                 failure ? ": " + *failure : std::string())
                  << std::endl;
    }
    std::cout << fmt::format("{}/{} criteria passed", criteria.size() - failed, criteria.size()) << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
