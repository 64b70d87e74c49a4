#pragma once

// Specialist LLM agents, one per reporting label, over an OpenAI-compatible
// chat-completion backend. The orchestrator feeds every agent the same
// reduced endpoint and folds their answers into a Diagnosis.

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermes/diagnosis.hpp"
#include "hermes/endpoint_reducer.hpp"
#include "hermes/smell_taxonomy.hpp"

namespace hermes {

inline constexpr std::string_view kOpenApiPlaceholder = "{openapi_json}";

/// `{<slug>_examples}`, e.g. `{lazy_examples}`.
std::string examples_placeholder(Label label);

struct PromptTemplate {
    Label label = Label::Lazy;
    std::string template_text;
    std::string few_shot_examples;

    /// Throws MissingPlaceholder unless both placeholders occur exactly once.
    void validate() const;
};

/// Reads `<slug>.txt` and `<slug>.examples.txt` from `dir` for each label.
/// A missing examples file leaves the block empty; a missing template file
/// is a ConfigError.
std::map<Label, PromptTemplate> load_prompt_templates(const std::filesystem::path& dir,
                                                      std::span<const Label> labels);

/// Directory the build was configured with; overridable at run time.
std::filesystem::path default_prompts_dir();

/// Substitutes the examples block and `re.reduced_json` in one left-to-right
/// pass, so placeholder-like text inside the substituted values is left alone.
std::string render_prompt(const PromptTemplate& tmpl, const ReducedEndpoint& re);

struct ChatBackendConfig {
    std::string base_url;  // e.g. http://localhost:11434/v1
    std::string model_id;
    std::optional<std::string> api_key;
    double temperature = 0.0;
    int max_output_tokens = 4096;
    std::chrono::milliseconds request_timeout{120'000};
    int max_retries = 2;
    int max_concurrent_requests = 4;
    /// First retry delay; doubles on each further attempt.
    std::chrono::milliseconds backoff_base{1000};

    /// Throws ConfigError.
    void validate() const;
};

class ChatBackend {
public:
    virtual ~ChatBackend() = default;
    /// Returns the assistant text for a single user message. Must be safe to
    /// call from several threads at once.
    virtual std::string complete(const std::string& prompt) = 0;
};

class HttpChatBackend final : public ChatBackend {
public:
    explicit HttpChatBackend(ChatBackendConfig cfg);
    std::string complete(const std::string& prompt) override;

private:
    ChatBackendConfig cfg_;
    std::string origin_;  // scheme://host[:port]
    std::string path_;    // path prefix + /chat/completions
};

/// One request through an HttpChatBackend built from `cfg`.
std::string invoke_agent(const std::string& prompt, const ChatBackendConfig& cfg);

struct AgentExplanation {
    std::vector<std::string> evidence;
    std::vector<Action> suggestions;
    std::optional<double> confidence;

    bool operator==(const AgentExplanation&) const = default;
};

struct AgentResult {
    Label label = Label::Lazy;
    /// Canonical `METHOD:/path` -> explanation.
    std::map<std::string, AgentExplanation> detected_endpoints;
    std::string raw_response;
    /// Names of the repair steps that changed the text, in order.
    std::vector<std::string> parse_repairs_applied;
    std::vector<std::string> warnings;
};

inline constexpr std::string_view kEvidenceHeader = "Justification and evidence of the smell:";
inline constexpr std::string_view kActionsHeader = "Suggested actions to address the smell:";

/// Strict parse first, then strip_code_fences, extract_first_object and
/// remove_trailing_commas in that order. Throws UnparseableOutput when no
/// step yields JSON and SchemaMismatch when the JSON has the wrong shape.
AgentResult parse_agent_output(const std::string& raw, Label label);

struct AgentRun {
    Diagnosis diagnosis;
    /// Successful agent results in label order; failed labels are absent.
    std::vector<AgentResult> results;
};

/// Runs one agent per label with at most `cfg.max_concurrent_requests` in
/// flight. A failing label becomes an entry in `category_errors`; when every
/// label fails, throws AllAgentsFailed.
AgentRun orchestrate_with_audit(const ReducedEndpoint& re, std::span<const Label> labels,
                                const std::map<Label, PromptTemplate>& templates,
                                ChatBackend& backend, const ChatBackendConfig& cfg);

Diagnosis orchestrate(const ReducedEndpoint& re, std::span<const Label> labels,
                      const std::map<Label, PromptTemplate>& templates, ChatBackend& backend,
                      const ChatBackendConfig& cfg);

}  // namespace hermes
