#include "hermes/agent_detectors.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <httplib.h>

#include "hermes/error.hpp"
#include "text_util.hpp"

#ifndef HERMES_PROMPTS_DIR
#define HERMES_PROMPTS_DIR "prompts"
#endif

namespace hermes {

namespace {

std::size_t count_occurrences(std::string_view haystack, std::string_view needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string_view::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ConfigError, "cannot read prompt file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- output repairs -----------------------------------------------------------

std::string strip_code_fences(const std::string& text) {
    const auto open = text.find("```");
    if (open == std::string::npos) {
        return text;
    }
    auto body_start = text.find('\n', open);
    if (body_start == std::string::npos) {
        return text;
    }
    ++body_start;
    const auto close = text.find("```", body_start);
    return text.substr(body_start, close == std::string::npos ? std::string::npos
                                                               : close - body_start);
}

std::string extract_first_object(const std::string& text) {
    const auto start = text.find('{');
    if (start == std::string::npos) {
        return text;
    }
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}' && --depth == 0) {
            return text.substr(start, i - start + 1);
        }
    }
    // Unbalanced: keep the tail so the trailing-comma step can still try.
    return text.substr(start);
}

std::string remove_trailing_commas(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            out.push_back(c);
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == ',') {
            auto j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && (text[j] == '}' || text[j] == ']')) {
                continue;
            }
        }
        out.push_back(c);
    }
    return out;
}

std::optional<json> try_parse(const std::string& text) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        return std::nullopt;
    }
    return value;
}

// --- explanation parsing ------------------------------------------------------

std::string normalize_key(std::string_view key) {
    std::string out;
    for (char c : key) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

std::optional<std::string> salvage_endpoint_key(const std::string& key) {
    if (auto ep = parse_endpoint_key(text::trim(key))) {
        return ep->key();
    }
    // "GET /users" or "get  /users"
    static const std::regex kSpaced(R"(^\s*([A-Za-z]+)\s+(/\S*)\s*$)");
    std::smatch m;
    if (std::regex_match(key, m, kSpaced)) {
        if (auto ep = parse_endpoint_key(m[1].str() + ":" + m[2].str())) {
            return ep->key();
        }
    }
    return std::nullopt;
}

std::string strip_bullet(std::string_view line) {
    auto t = text::trim(line);
    static const std::regex kBullet(R"(^(?:[-*+]|•|\d+[.)])\s+)");
    return std::regex_replace(t, kBullet, "", std::regex_constants::format_first_only);
}

bool is_bullet(std::string_view line) {
    static const std::regex kBullet(R"(^\s*(?:[-*+]|•|\d+[.)])\s+\S)");
    return std::regex_search(line.begin(), line.end(), kBullet);
}

std::vector<std::string> lines_of(std::string_view s) {
    std::vector<std::string> out;
    std::stringstream ss{std::string(s)};
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> parse_evidence_text(std::string_view block) {
    std::vector<std::string> bullets;
    bool any_bullet = false;
    for (const auto& line : lines_of(block)) {
        if (is_bullet(line)) {
            any_bullet = true;
            bullets.push_back(strip_bullet(line));
        } else if (any_bullet && !text::is_blank(line) && !bullets.empty()) {
            bullets.back() += " " + text::trim(line);  // wrapped bullet
        }
    }
    if (!any_bullet) {
        bullets = text::sentences(block);
    }
    bullets.erase(std::remove_if(bullets.begin(), bullets.end(),
                                 [](const std::string& b) { return text::is_blank(b); }),
                  bullets.end());
    return bullets;
}

bool is_table_separator(const std::vector<std::string>& cells) {
    return std::all_of(cells.begin(), cells.end(), [](const std::string& c) {
        return !c.empty() && c.find_first_not_of("-: ") == std::string::npos;
    });
}

std::vector<std::string> split_cells(std::string_view row) {
    std::vector<std::string> cells;
    std::string current;
    for (char c : row) {
        if (c == '|') {
            cells.push_back(text::trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    cells.push_back(text::trim(current));
    // Outer pipes produce empty edge cells.
    if (!cells.empty() && cells.front().empty()) cells.erase(cells.begin());
    if (!cells.empty() && cells.back().empty()) cells.pop_back();
    return cells;
}

Action make_action(std::string title, std::string body, Label label) {
    title = text::trim(title);
    if (!is_action_title(title)) {
        title = fmt::format("[{}] - {}", label_tag(label), title);
    }
    return Action{std::move(title), text::trim(body)};
}

std::vector<Action> parse_actions_text(std::string_view block, Label label) {
    static const std::regex kTitleStart(R"(\[[A-Z_]+\] - )");
    std::vector<Action> actions;
    bool last_open = false;  // last action may take a body from following lines
    for (const auto& raw_line : lines_of(block)) {
        const auto line = text::trim(raw_line);
        if (line.empty()) {
            continue;
        }
        std::smatch m;
        const bool has_title = std::regex_search(line, m, kTitleStart);
        if (line.find('|') != std::string::npos) {
            auto cells = split_cells(line);
            if (cells.empty() || is_table_separator(cells)) {
                continue;
            }
            if (!has_title && normalize_key(cells.front()) == "action") {
                continue;  // table header
            }
            if (has_title) {
                auto title_cell = std::find_if(cells.begin(), cells.end(), [](const auto& c) {
                    return std::regex_search(c, kTitleStart);
                });
                std::string title = strip_bullet(*title_cell);
                std::vector<std::string> rest;
                for (auto it = cells.begin(); it != cells.end(); ++it) {
                    if (it != title_cell) rest.push_back(*it);
                }
                actions.push_back(make_action(title, text::join(rest, " "), label));
                last_open = rest.empty();
                continue;
            }
        }
        if (has_title) {
            const auto title = line.substr(static_cast<std::size_t>(m.position(0)));
            actions.push_back(make_action(title, "", label));
            last_open = true;
        } else if (last_open && !actions.empty()) {
            auto& body = actions.back().body;
            body += (body.empty() ? "" : " ") + strip_bullet(line);
        } else {
            actions.push_back(make_action(strip_bullet(line), "", label));
            last_open = false;
        }
    }
    return actions;
}

std::vector<Action> parse_actions_json(const json& node, Label label) {
    if (node.is_string()) {
        return parse_actions_text(node.get<std::string>(), label);
    }
    std::vector<Action> out;
    if (!node.is_array()) {
        return out;
    }
    for (const auto& item : node) {
        if (item.is_string()) {
            auto parsed = parse_actions_text(item.get<std::string>(), label);
            out.insert(out.end(), parsed.begin(), parsed.end());
        } else if (item.is_object()) {
            std::string title;
            std::string body;
            for (const auto& [k, v] : item.items()) {
                const auto nk = normalize_key(k);
                if (!v.is_string()) continue;
                if (nk == "action" || nk == "title" || nk == "actiontitle") {
                    title = v.get<std::string>();
                } else if (nk == "body" || nk == "description" || nk == "details" ||
                           nk == "detail") {
                    body = v.get<std::string>();
                }
            }
            if (!title.empty()) {
                out.push_back(make_action(title, body, label));
            }
        }
    }
    return out;
}

std::vector<std::string> parse_evidence_json(const json& node) {
    if (node.is_string()) {
        return parse_evidence_text(node.get<std::string>());
    }
    std::vector<std::string> out;
    if (node.is_array()) {
        for (const auto& item : node) {
            if (item.is_string() && !text::is_blank(item.get<std::string>())) {
                out.push_back(strip_bullet(item.get<std::string>()));
            }
        }
    }
    return out;
}

std::string section_text(const json& node) {
    if (node.is_string()) return node.get<std::string>();
    return node.dump();
}

AgentExplanation parse_explanation(const json& value, const std::string& key, Label label,
                                   std::vector<std::string>& warnings) {
    AgentExplanation ex;
    std::string evidence_raw;
    std::string actions_raw;
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        const auto e = s.find(kEvidenceHeader);
        const auto a = s.find(kActionsHeader);
        if (e == std::string::npos && a == std::string::npos) {
            throw Error(ErrorCode::SchemaMismatch,
                        fmt::format("explanation for {} has neither section header", key));
        }
        if (e != std::string::npos) {
            const auto start = e + kEvidenceHeader.size();
            const auto end = (a != std::string::npos && a > e) ? a : s.size();
            evidence_raw = s.substr(start, end - start);
        }
        if (a != std::string::npos) {
            const auto start = a + kActionsHeader.size();
            const auto end = (e != std::string::npos && e > a) ? e : s.size();
            actions_raw = s.substr(start, end - start);
        }
        ex.evidence = parse_evidence_text(evidence_raw);
        ex.suggestions = parse_actions_text(actions_raw, label);
    } else if (value.is_object()) {
        bool matched = false;
        for (const auto& [k, v] : value.items()) {
            const auto nk = normalize_key(k);
            if (nk.starts_with("justification") || nk == "evidence" ||
                nk == "justificationevidence") {
                ex.evidence = parse_evidence_json(v);
                evidence_raw = section_text(v);
                matched = true;
            } else if (nk.starts_with("suggested") || nk == "actions" || nk == "suggestions") {
                ex.suggestions = parse_actions_json(v, label);
                actions_raw = section_text(v);
                matched = true;
            } else if (nk == "confidence" && v.is_number()) {
                ex.confidence = std::clamp(v.get<double>(), 0.0, 1.0);
            } else if (nk == "explanation") {
                auto nested = parse_explanation(v, key, label, warnings);
                ex.evidence = std::move(nested.evidence);
                ex.suggestions = std::move(nested.suggestions);
                return ex;
            }
        }
        if (!matched) {
            throw Error(ErrorCode::SchemaMismatch,
                        fmt::format("explanation for {} has no recognizable sections", key));
        }
    } else {
        throw Error(ErrorCode::SchemaMismatch,
                    fmt::format("explanation for {} must be a string or an object", key));
    }

    if (!text::is_blank(evidence_raw) && text::trim(evidence_raw).size() < 120) {
        warnings.push_back(fmt::format("{}: evidence section is shorter than 120 characters", key));
    }
    if (!text::is_blank(actions_raw) && text::trim(actions_raw).size() < 120) {
        warnings.push_back(fmt::format("{}: actions section is shorter than 120 characters", key));
    }
    for (const auto& bullet : ex.evidence) {
        const char last = bullet.empty() ? ' ' : bullet.back();
        if (last != '.' && last != '!' && last != '?') {
            warnings.push_back(
                fmt::format("{}: evidence bullet is not a complete sentence: {}", key,
                            text::quote(text::truncate(bullet, 60))));
        }
    }
    return ex;
}

// --- transport ------------------------------------------------------------------

struct UrlParts {
    std::string origin;
    std::string path;
};

UrlParts split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw Error(ErrorCode::ConfigError, "backend URL needs a scheme: " + url);
    }
    const auto scheme = text::to_lower(url.substr(0, scheme_end));
    if (scheme != "http" && scheme != "https") {
        throw Error(ErrorCode::ConfigError, "unsupported backend URL scheme: " + url);
    }
    const auto path_start = url.find('/', scheme_end + 3);
    UrlParts parts;
    parts.origin = url.substr(0, path_start);
    parts.path = path_start == std::string::npos ? "" : url.substr(path_start);
    while (!parts.path.empty() && parts.path.back() == '/') parts.path.pop_back();
    return parts;
}

bool should_retry(int status) {
    return status == 429 || status >= 500;
}

}  // namespace

std::string examples_placeholder(Label label) {
    return "{" + label_slug(label) + "_examples}";
}

void PromptTemplate::validate() const {
    const auto examples = examples_placeholder(label);
    for (const std::string_view placeholder : {std::string_view(examples), kOpenApiPlaceholder}) {
        const auto n = count_occurrences(template_text, placeholder);
        if (n != 1) {
            throw Error(ErrorCode::MissingPlaceholder,
                        fmt::format("{} template must contain {} exactly once (found {})",
                                    label_key(label), placeholder, n));
        }
    }
}

std::map<Label, PromptTemplate> load_prompt_templates(const std::filesystem::path& dir,
                                                      std::span<const Label> labels) {
    std::map<Label, PromptTemplate> out;
    for (auto label : labels) {
        const auto slug = label_slug(label);
        PromptTemplate t;
        t.label = label;
        t.template_text = read_file(dir / (slug + ".txt"));
        const auto examples = dir / (slug + ".examples.txt");
        if (std::filesystem::exists(examples)) {
            t.few_shot_examples = read_file(examples);
            while (!t.few_shot_examples.empty() && t.few_shot_examples.back() == '\n') {
                t.few_shot_examples.pop_back();
            }
        }
        t.validate();
        out.emplace(label, std::move(t));
    }
    return out;
}

std::filesystem::path default_prompts_dir() {
    return HERMES_PROMPTS_DIR;
}

std::string render_prompt(const PromptTemplate& tmpl, const ReducedEndpoint& re) {
    tmpl.validate();
    const auto examples = examples_placeholder(tmpl.label);
    const std::string_view text = tmpl.template_text;
    std::string out;
    out.reserve(text.size() + re.reduced_json.size() + tmpl.few_shot_examples.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, examples.size()) == examples) {
            out += tmpl.few_shot_examples;
            i += examples.size();
        } else if (text.substr(i, kOpenApiPlaceholder.size()) == kOpenApiPlaceholder) {
            out += re.reduced_json;
            i += kOpenApiPlaceholder.size();
        } else {
            out.push_back(text[i++]);
        }
    }
    return out;
}

void ChatBackendConfig::validate() const {
    if (base_url.empty()) {
        throw Error(ErrorCode::ConfigError, "chat backend base URL is not set");
    }
    if (model_id.empty()) {
        throw Error(ErrorCode::ConfigError, "chat backend model id is not set");
    }
    if (!(temperature >= 0.0)) {
        throw Error(ErrorCode::ConfigError, "temperature must be >= 0");
    }
    if (max_concurrent_requests < 1) {
        throw Error(ErrorCode::ConfigError, "max_concurrent_requests must be >= 1");
    }
    if (max_retries < 0) {
        throw Error(ErrorCode::ConfigError, "max_retries must be >= 0");
    }
    if (max_output_tokens < 1) {
        throw Error(ErrorCode::ConfigError, "max_output_tokens must be >= 1");
    }
    if (request_timeout.count() <= 0) {
        throw Error(ErrorCode::ConfigError, "request timeout must be positive");
    }
    split_url(base_url);
}

HttpChatBackend::HttpChatBackend(ChatBackendConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    auto parts = split_url(cfg_.base_url);
    origin_ = std::move(parts.origin);
    path_ = parts.path + "/chat/completions";
}

std::string HttpChatBackend::complete(const std::string& prompt) {
    const json request = {
        {"model", cfg_.model_id},
        {"messages", json::array({json{{"role", "user"}, {"content", prompt}}})},
        {"temperature", cfg_.temperature},
        {"max_tokens", cfg_.max_output_tokens},
    };
    const auto payload = request.dump();

    httplib::Headers headers;
    if (cfg_.api_key && !cfg_.api_key->empty()) {
        headers.emplace("Authorization", "Bearer " + *cfg_.api_key);
    }

    const auto timeout = cfg_.request_timeout;
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);

    std::string last_failure;
    int last_status = 0;
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(cfg_.backoff_base * (1LL << (attempt - 1)));
        }
        httplib::Client client(origin_);
        client.set_connection_timeout(secs.count(), usecs.count());
        client.set_read_timeout(secs.count(), usecs.count());
        client.set_write_timeout(secs.count(), usecs.count());

        auto res = client.Post(path_, headers, payload, "application/json");
        if (!res) {
            last_status = 0;
            last_failure = httplib::to_string(res.error());
            continue;
        }
        const int status = res->status;
        if (status == 401 || status == 403) {
            throw Error(ErrorCode::AuthError,
                        fmt::format("backend rejected credentials (HTTP {})", status));
        }
        if (should_retry(status)) {
            last_status = status;
            last_failure = fmt::format("HTTP {}", status);
            continue;
        }
        if (status < 200 || status >= 300) {
            throw Error(ErrorCode::TransportError,
                        fmt::format("backend returned HTTP {}: {}", status,
                                    text::truncate(res->body, 200)));
        }
        const auto body = json::parse(res->body, nullptr, false);
        if (body.is_discarded()) {
            throw Error(ErrorCode::TransportError, "backend response is not JSON");
        }
        try {
            return body.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception&) {
            throw Error(ErrorCode::TransportError,
                        "backend response has no choices[0].message.content string");
        }
    }
    const int attempts = cfg_.max_retries + 1;
    if (last_status == 429) {
        throw Error(ErrorCode::BackendOverload,
                    fmt::format("backend still rate-limited after {} attempts", attempts));
    }
    throw Error(ErrorCode::TransportError,
                fmt::format("request failed after {} attempts: {}", attempts, last_failure));
}

std::string invoke_agent(const std::string& prompt, const ChatBackendConfig& cfg) {
    HttpChatBackend backend(cfg);
    return backend.complete(prompt);
}

AgentResult parse_agent_output(const std::string& raw, Label label) {
    AgentResult result;
    result.label = label;
    result.raw_response = raw;

    auto parsed = try_parse(raw);
    if (!parsed) {
        using Step = std::string (*)(const std::string&);
        const std::pair<const char*, Step> steps[] = {
            {"strip_code_fences", strip_code_fences},
            {"extract_first_object", extract_first_object},
            {"remove_trailing_commas", remove_trailing_commas},
        };
        std::string current = raw;
        for (const auto& [name, step] : steps) {
            auto next = step(current);
            if (next == current) {
                continue;
            }
            current = std::move(next);
            result.parse_repairs_applied.emplace_back(name);
            if ((parsed = try_parse(current))) {
                break;
            }
        }
    }
    if (!parsed) {
        throw Error(ErrorCode::UnparseableOutput,
                    fmt::format("no JSON object found in agent output: {}",
                                text::quote(text::truncate(text::trim(raw), 80))));
    }
    if (!parsed->is_object()) {
        throw Error(ErrorCode::SchemaMismatch, "agent output must be a JSON object");
    }
    for (const auto& [key, value] : parsed->items()) {
        const auto canonical = salvage_endpoint_key(key);
        if (!canonical) {
            throw Error(ErrorCode::SchemaMismatch,
                        fmt::format("agent output key {} is not METHOD:/path", text::quote(key)));
        }
        if (*canonical != key) {
            result.warnings.push_back(
                fmt::format("normalized endpoint key {} to {}", text::quote(key), *canonical));
        }
        auto explanation = parse_explanation(value, *canonical, label, result.warnings);
        result.detected_endpoints[*canonical] = std::move(explanation);
    }
    return result;
}

AgentRun orchestrate_with_audit(const ReducedEndpoint& re, std::span<const Label> labels,
                                const std::map<Label, PromptTemplate>& templates,
                                ChatBackend& backend, const ChatBackendConfig& cfg) {
    for (auto label : labels) {
        if (!templates.contains(label)) {
            throw Error(ErrorCode::ConfigError,
                        fmt::format("no prompt template for {}", label_key(label)));
        }
    }

    struct Slot {
        std::optional<AgentResult> result;
        std::string error;
    };
    std::vector<Slot> slots(labels.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < labels.size(); i = next++) {
            const Label label = labels[i];
            try {
                const auto prompt = render_prompt(templates.at(label), re);
                slots[i].result = parse_agent_output(backend.complete(prompt), label);
            } catch (const std::exception& e) {
                slots[i].error = e.what();
            }
        }
    };
    const auto workers = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(cfg.max_concurrent_requests, 1)), labels.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    AgentRun run;
    Diagnosis& d = run.diagnosis;
    d.endpoint = re.endpoint;
    d.api_title = re.api_title;
    d.model_id = cfg.model_id;
    d.warnings = re.warnings;
    const auto key = re.endpoint.key();

    std::vector<std::size_t> by_label(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) by_label[i] = i;
    std::stable_sort(by_label.begin(), by_label.end(),
                     [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    for (auto i : by_label) {
        const Label label = labels[i];
        auto& slot = slots[i];
        if (!slot.result) {
            d.category_errors[std::string(label_key(label))] = slot.error;
            continue;
        }
        for (const auto& w : slot.result->warnings) {
            d.warnings.push_back(fmt::format("{}: {}", label_key(label), w));
        }
        for (const auto& [ep_key, ex] : slot.result->detected_endpoints) {
            if (ep_key != key) {
                d.warnings.push_back(fmt::format("{}: dropped finding for unrelated endpoint {}",
                                                 label_key(label), ep_key));
                continue;
            }
            Finding f;
            f.category = label;
            f.endpoint = re.endpoint;
            f.evidence = ex.evidence;
            f.suggestions = ex.suggestions;
            f.detector = DetectorKind::Agent;
            f.confidence = ex.confidence.value_or(1.0);
            if (f.evidence.empty()) {
                f.evidence.push_back(fmt::format(
                    "The {} agent flagged this endpoint without stating any evidence.",
                    display_name(label)));
                d.warnings.push_back(
                    fmt::format("{}: agent reported no evidence bullets", label_key(label)));
            }
            if (f.suggestions.empty()) {
                d.warnings.push_back(
                    fmt::format("{}: agent reported no suggested actions", label_key(label)));
            }
            d.findings.push_back(std::move(f));
        }
        run.results.push_back(std::move(*slot.result));
    }
    if (!labels.empty() && run.results.empty()) {
        std::vector<std::string> reasons;
        for (const auto& [label, message] : d.category_errors) {
            reasons.push_back(label + ": " + message);
        }
        throw Error(ErrorCode::AllAgentsFailed, text::join(reasons, "; "));
    }
    return run;
}

Diagnosis orchestrate(const ReducedEndpoint& re, std::span<const Label> labels,
                      const std::map<Label, PromptTemplate>& templates, ChatBackend& backend,
                      const ChatBackendConfig& cfg) {
    return orchestrate_with_audit(re, labels, templates, backend, cfg).diagnosis;
}

}  // namespace hermes
