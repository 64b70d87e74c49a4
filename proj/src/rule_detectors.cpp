#include "hermes/rule_detectors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "hermes/error.hpp"
#include "text_util.hpp"

namespace hermes {

namespace {

constexpr int kMaxSchemaDepth = 8;
constexpr std::size_t kMaxPathDepth = 6;

const std::set<std::string> kStopwords = {
    "the",  "and",   "for",  "with", "this",  "that",  "from",  "are",  "was",  "will",
    "not",  "can",   "all",  "any",  "into",  "its",   "has",   "have", "been", "which",
    "when", "where", "what", "who",  "how",   "you",   "your",  "our",  "their", "them",
    "they", "but",   "per",  "via",  "each",  "such",  "also",  "then", "than", "only",
    "more", "other", "use",  "used", "using", "given", "based", "upon", "should", "must",
};

// Expected methods for verbs embedded in a path.
struct VerbGroup {
    std::vector<std::string_view> verbs;
    std::vector<HttpMethod> expected;
};

const std::vector<VerbGroup>& conflict_table() {
    static const std::vector<VerbGroup> table = {
        {{"create", "add", "new"}, {HttpMethod::Post}},
        {{"update", "set"}, {HttpMethod::Put, HttpMethod::Patch}},
        {{"delete", "remove"}, {HttpMethod::Delete}},
        {{"get", "fetch", "list", "find"}, {HttpMethod::Get}},
    };
    return table;
}

Finding make_finding(const ReducedEndpoint& re, Label category,
                     std::vector<std::string> evidence, Action action) {
    Finding f;
    f.category = category;
    f.endpoint = re.endpoint;
    f.evidence = std::move(evidence);
    f.suggestions.push_back(std::move(action));
    f.detector = DetectorKind::Rules;
    f.confidence = 1.0;
    return f;
}

Action action(Label category, std::string_view title, std::string body) {
    return Action{fmt::format("[{}] - {}", label_tag(category), title), std::move(body)};
}

std::optional<std::string> present(const std::optional<std::string>& s) {
    if (!s || text::is_blank(*s)) {
        return std::nullopt;
    }
    return text::trim(*s);
}

bool is_generic(std::string_view phrase, const Thresholds& t) {
    const auto folded = text::fold_phrase(phrase);
    return std::any_of(t.generic_phrases.begin(), t.generic_phrases.end(),
                       [&](const std::string& g) { return text::fold_phrase(g) == folded; });
}

std::set<std::string> content_words(std::string_view s) {
    std::set<std::string> out;
    for (auto w : text::words(s)) {
        if (w.size() < 3 || kStopwords.contains(w)) {
            continue;
        }
        if (w.size() > 3 && w.back() == 's') {
            w.pop_back();
        }
        out.insert(std::move(w));
    }
    return out;
}

std::string kind_name(const Schema& s) {
    return std::string(to_string(s.kind));
}

// Literal path segments, each with the identifier words it contains.
struct Segment {
    std::string text;
    std::vector<std::string> words;
};

std::vector<Segment> literal_segments(std::string_view path) {
    static const std::regex kTemplate(R"(\{[^}]*\})");
    std::vector<Segment> out;
    std::stringstream ss{std::string(path)};
    std::string seg;
    while (std::getline(ss, seg, '/')) {
        if (seg.empty()) {
            continue;
        }
        const std::string literal = std::regex_replace(seg, kTemplate, "");
        if (literal.empty()) {
            continue;
        }
        out.push_back(Segment{seg, text::split_identifier(literal)});
    }
    return out;
}

std::size_t path_depth(std::string_view path) {
    std::size_t depth = 0;
    std::stringstream ss{std::string(path)};
    std::string seg;
    while (std::getline(ss, seg, '/')) {
        if (!seg.empty()) ++depth;
    }
    return depth;
}

std::string method_list(const std::vector<HttpMethod>& methods) {
    std::vector<std::string> names;
    for (auto m : methods) {
        names.emplace_back(to_upper_string(m));
    }
    return text::join(names, " or ");
}

// --- input field walk -------------------------------------------------------

struct InputField {
    std::string label;  // "Query parameter `q`"
    std::string name;
    const Schema* schema;
    bool described;
    bool required;
    bool is_parameter;
};

void walk_body_schema(const ReducedEndpoint& re, const Schema& node, const std::string& prefix,
                      int depth, std::set<std::string>& active_refs,
                      std::map<std::string, InputField>& out) {
    if (depth > kMaxSchemaDepth) {
        return;
    }
    std::string entered_ref;
    if (node.kind == SchemaKind::Ref) {
        if (active_refs.contains(node.ref_target)) {
            return;
        }
        entered_ref = node.ref_target;
        active_refs.insert(entered_ref);
    }
    const Schema& s = follow_refs(re, node);
    if (s.kind != SchemaKind::Ref) {
        for (const auto& [name, prop] : s.properties) {
            const std::string path = prefix.empty() ? name : prefix + "." + name;
            const Schema& resolved = follow_refs(re, prop);
            const bool described = present(prop.description) || present(resolved.description);
            const bool required =
                std::find(s.required.begin(), s.required.end(), name) != s.required.end();
            out.emplace(path, InputField{fmt::format("Request body property `{}`", path), name,
                                         &resolved, described, required, false});
            walk_body_schema(re, prop, path, depth + 1, active_refs, out);
        }
        if (s.items) {
            walk_body_schema(re, *s.items, prefix + "[]", depth + 1, active_refs, out);
        }
        for (const auto& member : s.composed) {
            walk_body_schema(re, member, prefix, depth + 1, active_refs, out);
        }
    }
    if (!entered_ref.empty()) {
        active_refs.erase(entered_ref);
    }
}

bool is_ambiguous_name(std::string_view name) {
    if (name.size() <= 3) {
        return true;
    }
    for (const auto& token : text::split_identifier(name)) {
        if (token.size() < 2 ||
            !std::all_of(token.begin(), token.end(),
                         [](unsigned char c) { return std::isalpha(c) != 0; })) {
            continue;
        }
        if (token.find_first_of("aeiou") == std::string::npos) {
            return true;
        }
    }
    return false;
}

// --- response walk ----------------------------------------------------------

bool is_opaque(const Schema& s) {
    return (s.kind == SchemaKind::Object || s.kind == SchemaKind::Untyped) &&
           s.properties.empty() && s.composed.empty() && !s.items && s.enum_values.is_null() &&
           !s.format;
}

void find_opaque_properties(const ReducedEndpoint& re, const Schema& node,
                            const std::string& prefix, int depth,
                            std::set<std::string>& active_refs, std::vector<std::string>& out) {
    if (depth > kMaxSchemaDepth) {
        return;
    }
    std::string entered_ref;
    if (node.kind == SchemaKind::Ref) {
        if (active_refs.contains(node.ref_target)) {
            return;
        }
        entered_ref = node.ref_target;
        active_refs.insert(entered_ref);
    }
    const Schema& s = follow_refs(re, node);
    if (s.kind != SchemaKind::Ref) {
        for (const auto& [name, prop] : s.properties) {
            const std::string path = prefix.empty() ? name : prefix + "." + name;
            if (prop.kind != SchemaKind::Ref && is_opaque(prop)) {
                out.push_back(path);
            }
            find_opaque_properties(re, prop, path, depth + 1, active_refs, out);
        }
        if (s.items) {
            find_opaque_properties(re, *s.items, prefix + "[]", depth + 1, active_refs, out);
        }
        for (const auto& member : s.composed) {
            find_opaque_properties(re, member, prefix, depth + 1, active_refs, out);
        }
    }
    if (!entered_ref.empty()) {
        active_refs.erase(entered_ref);
    }
}

std::string schema_origin(const Schema& s) {
    if (s.kind == SchemaKind::Ref) {
        if (auto ptr = parse_component_pointer(s.ref_target)) {
            return fmt::format(" (`{}`)", ptr->name);
        }
    }
    return {};
}

// --- path and method --------------------------------------------------------

struct PathMethodAnalysis {
    std::vector<std::string> path_evidence;
    std::vector<std::string> method_evidence;
    std::string suggested_path;
    std::optional<HttpMethod> suggested_method;
    bool body_on_safe_method = false;
};

PathMethodAnalysis analyze_path_method(const ReducedEndpoint& re, const Thresholds& t) {
    PathMethodAnalysis a;
    const auto segments = literal_segments(re.endpoint.path);
    std::set<std::string> verbs_in_path;
    std::set<std::string> verb_segments;
    for (const auto& seg : segments) {
        std::vector<std::string> found;
        for (const auto& w : seg.words) {
            if (t.path_verb_list.contains(w) &&
                std::find(found.begin(), found.end(), w) == found.end()) {
                found.push_back(w);
            }
        }
        if (found.empty()) {
            continue;
        }
        verb_segments.insert(seg.text);
        verbs_in_path.insert(found.begin(), found.end());
        std::vector<std::string> quoted;
        for (const auto& v : found) {
            quoted.push_back(text::quote(v));
        }
        a.path_evidence.push_back(fmt::format(
            "The path segment {} embeds the {} {}, making the URI action-oriented rather than "
            "resource-oriented.",
            text::quote(seg.text), found.size() == 1 ? "verb" : "verbs", text::join_list(quoted)));
    }
    if (const auto depth = path_depth(re.endpoint.path); depth > kMaxPathDepth) {
        a.path_evidence.push_back(fmt::format(
            "The path has {} segments, which is deeper than the {} segments a resource hierarchy "
            "normally needs.",
            depth, kMaxPathDepth));
    }

    const HttpMethod method = re.endpoint.method;
    const auto method_name = to_upper_string(method);
    if ((method == HttpMethod::Get || method == HttpMethod::Delete) && re.request_body) {
        a.body_on_safe_method = true;
        a.method_evidence.push_back(fmt::format(
            "The {} operation declares a request body, which HTTP does not define semantics for "
            "on this method.",
            method_name));
    }
    for (const auto& group : conflict_table()) {
        std::vector<std::string> hits;
        for (auto v : group.verbs) {
            if (verbs_in_path.contains(std::string(v))) {
                hits.push_back(text::quote(v));
            }
        }
        if (hits.empty() ||
            std::find(group.expected.begin(), group.expected.end(), method) !=
                group.expected.end()) {
            continue;
        }
        if (!a.suggested_method) {
            a.suggested_method = group.expected.front();
        }
        a.method_evidence.push_back(fmt::format(
            "The path {} {} {} {}, but the operation uses {}.",
            hits.size() == 1 ? "verb" : "verbs", text::join_list(hits),
            hits.size() == 1 ? "implies" : "imply",
            method_list(group.expected), method_name));
    }

    // Drop verb-bearing segments for the suggested resource path.
    std::string suggested;
    std::stringstream ss{re.endpoint.path};
    std::string seg;
    while (std::getline(ss, seg, '/')) {
        if (!seg.empty() && !verb_segments.contains(seg)) {
            suggested += "/" + seg;
        }
    }
    a.suggested_path = suggested.empty() ? "/" : suggested;
    return a;
}

// --- excessive structure ----------------------------------------------------

std::optional<std::string> multiline_brace_block(std::string_view s) {
    for (size_t start = 0; start < s.size(); ++start) {
        if (s[start] != '{') {
            continue;
        }
        int depth = 0;
        for (size_t i = start; i < s.size(); ++i) {
            if (s[i] == '{') {
                ++depth;
            } else if (s[i] == '}' && --depth == 0) {
                auto block = s.substr(start, i - start + 1);
                if (block.find('\n') != std::string_view::npos) {
                    return std::string(block);
                }
                break;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> match_marker(const std::string& marker, const std::string& field) {
    static const std::regex kClass(R"(\bclass\s+[A-Z_a-z]\w*)");
    static const std::regex kJsonObject(R"(\{\s*"[^"\n]+"\s*:[^}]*\}?)");
    std::smatch m;
    if (marker == "multiline_brace_block") {
        return multiline_brace_block(field);
    }
    if (marker == "class_keyword") {
        if (std::regex_search(field, m, kClass)) return m.str();
        return std::nullopt;
    }
    if (marker == "inline_json_object") {
        if (std::regex_search(field, m, kJsonObject)) return m.str();
        return std::nullopt;
    }
    if (marker.rfind("regex:", 0) == 0) {
        const std::regex custom(marker.substr(6));
        if (std::regex_search(field, m, custom)) return m.str();
        return std::nullopt;
    }
    return std::nullopt;
}

std::string_view marker_description(const std::string& marker) {
    if (marker == "multiline_brace_block") return "a multi-line brace-delimited block";
    if (marker == "class_keyword") return "a class-like definition";
    if (marker == "inline_json_object") return "an inline JSON object literal";
    return "structured content matching a configured pattern";
}

bool known_marker(const std::string& marker) {
    return marker == "multiline_brace_block" || marker == "class_keyword" ||
           marker == "inline_json_object" || marker.rfind("regex:", 0) == 0;
}

// --- tangled ----------------------------------------------------------------

enum class Concern { Business, Security, Errors, Operations };

std::string_view concern_name(Concern c) {
    switch (c) {
        case Concern::Business: return "business logic";
        case Concern::Security: return "security";
        case Concern::Errors: return "error handling";
        case Concern::Operations: return "operations";
    }
    return "business logic";
}

bool starts_with(std::string_view w, std::string_view prefix) {
    return w.substr(0, prefix.size()) == prefix;
}

std::set<Concern> concerns_of(std::string_view sentence) {
    static const std::regex kStatus(R"([45](\d\d|xx))");
    std::set<Concern> out;
    for (const auto& w : text::words(sentence)) {
        if (starts_with(w, "token") || starts_with(w, "credential") ||
            starts_with(w, "permission") || starts_with(w, "role") || w == "auth" ||
            w == "authn" || w == "authz" || starts_with(w, "authenticat") ||
            starts_with(w, "authoriz") || starts_with(w, "oauth")) {
            out.insert(Concern::Security);
        }
        if (starts_with(w, "error") || starts_with(w, "fail") || starts_with(w, "exception") ||
            std::regex_match(w, kStatus)) {
            out.insert(Concern::Errors);
        }
        if (starts_with(w, "deploy") || starts_with(w, "environment") ||
            starts_with(w, "server") || starts_with(w, "config")) {
            out.insert(Concern::Operations);
        }
    }
    if (out.empty()) {
        out.insert(Concern::Business);
    }
    return out;
}

}  // namespace

// --- thresholds ---------------------------------------------------------------

void Thresholds::validate() const {
    auto positive = [](const char* name, int value) {
        if (value < 1) {
            throw Error(ErrorCode::ConfigError, fmt::format("{} must be >= 1, got {}", name, value));
        }
    };
    positive("lazy_min_summary_words", lazy_min_summary_words);
    positive("lazy_min_description_chars", lazy_min_description_chars);
    positive("bloated_min_description_chars", bloated_min_description_chars);
    positive("tangled_min_concern_buckets", tangled_min_concern_buckets);
    if (!(bloated_max_info_density > 0.0 && bloated_max_info_density <= 1.0)) {
        throw Error(ErrorCode::ConfigError,
                    fmt::format("bloated_max_info_density must be in (0, 1], got {}",
                                bloated_max_info_density));
    }
    for (const auto& marker : excessive_structured_markers) {
        if (!known_marker(marker)) {
            throw Error(ErrorCode::ConfigError, fmt::format("unknown marker '{}'", marker));
        }
        if (marker.rfind("regex:", 0) == 0) {
            try {
                std::regex check(marker.substr(6));
            } catch (const std::regex_error& e) {
                throw Error(ErrorCode::ConfigError,
                            fmt::format("invalid marker pattern '{}': {}", marker, e.what()));
            }
        }
    }
}

Thresholds thresholds_from_json(const json& node) {
    if (!node.is_object()) {
        throw Error(ErrorCode::ConfigError, "thresholds must be a JSON object");
    }
    Thresholds t;
    try {
        for (const auto& [key, value] : node.items()) {
            if (key == "lazy_min_summary_words") {
                t.lazy_min_summary_words = value.get<int>();
            } else if (key == "lazy_min_description_chars") {
                t.lazy_min_description_chars = value.get<int>();
            } else if (key == "bloated_min_description_chars") {
                t.bloated_min_description_chars = value.get<int>();
            } else if (key == "bloated_max_info_density") {
                t.bloated_max_info_density = value.get<double>();
            } else if (key == "tangled_min_concern_buckets") {
                t.tangled_min_concern_buckets = value.get<int>();
            } else if (key == "path_verb_list") {
                t.path_verb_list.clear();
                for (const auto& v : value) t.path_verb_list.insert(text::to_lower(v.get<std::string>()));
            } else if (key == "generic_phrases") {
                t.generic_phrases = value.get<std::set<std::string>>();
            } else if (key == "excessive_structured_markers") {
                t.excessive_structured_markers = value.get<std::vector<std::string>>();
            } else {
                throw Error(ErrorCode::ConfigError, fmt::format("unknown threshold '{}'", key));
            }
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, e.what());
    }
    t.validate();
    return t;
}

Thresholds load_thresholds(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + path.string());
    }
    json node;
    try {
        node = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ConfigError, path.string() + ": " + e.what());
    }
    return thresholds_from_json(node);
}

json to_json(const Thresholds& t) {
    return json{{"lazy_min_summary_words", t.lazy_min_summary_words},
                {"lazy_min_description_chars", t.lazy_min_description_chars},
                {"bloated_min_description_chars", t.bloated_min_description_chars},
                {"bloated_max_info_density", t.bloated_max_info_density},
                {"tangled_min_concern_buckets", t.tangled_min_concern_buckets},
                {"path_verb_list", t.path_verb_list},
                {"generic_phrases", t.generic_phrases},
                {"excessive_structured_markers", t.excessive_structured_markers}};
}

// --- detectors ----------------------------------------------------------------

std::vector<Finding> detect_lazy(const ReducedEndpoint& re, const Thresholds& t) {
    std::vector<std::string> evidence;
    const auto summary = present(re.summary);
    const auto description = present(re.description);

    if (!summary) {
        evidence.push_back("The operation has no summary, so its purpose is not stated.");
    } else if (is_generic(*summary, t)) {
        evidence.push_back(fmt::format(
            "The summary {} is a generic phrase that does not say what the operation does.",
            text::quote(*summary)));
    } else if (const auto n = text::word_count(*summary);
               n < static_cast<std::size_t>(t.lazy_min_summary_words)) {
        evidence.push_back(fmt::format(
            "The summary {} has only {} {}, too short to convey the operation's purpose.",
            text::quote(*summary), n, n == 1 ? "word" : "words"));
    }

    if (!description) {
        evidence.push_back(
            "The operation has no description, leaving its behavior, inputs and outputs "
            "undocumented.");
    } else if (summary && text::fold_phrase(*description) == text::fold_phrase(*summary)) {
        evidence.push_back("The description repeats the summary and adds no information.");
    } else if (description->size() < static_cast<std::size_t>(t.lazy_min_description_chars)) {
        evidence.push_back(fmt::format(
            "The description is only {} characters long, below the {}-character minimum "
            "needed to explain the operation.",
            description->size(), t.lazy_min_description_chars));
    }

    if (summary && description && text::word_count(*summary) >= 5 &&
        text::word_count(*description) >= 5) {
        const auto a = content_words(*summary);
        const auto b = content_words(*description);
        const bool overlap = std::any_of(a.begin(), a.end(),
                                         [&](const std::string& w) { return b.contains(w); });
        if (!overlap) {
            evidence.push_back(
                "The summary and description share no content words, which suggests they "
                "describe different behavior.");
        }
    }

    if (evidence.empty()) {
        return {};
    }
    return {make_finding(re, Label::Lazy, std::move(evidence),
                         action(Label::Lazy, "Improve documentation",
                                "Provide a complete description including endpoint purpose, "
                                "expected inputs, and outputs, with usage examples."))};
}

std::vector<Finding> detect_input(const ReducedEndpoint& re, const Thresholds&) {
    std::vector<InputField> fields;
    for (const auto& p : re.parameters) {
        if (!p.ref_target.empty()) {
            continue;  // unresolved; reported by the fragmented detector
        }
        const Schema& resolved = follow_refs(re, p.schema);
        const bool described = present(p.description) || present(resolved.description);
        std::string where(to_string(p.location));
        where[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(where[0])));
        fields.push_back(InputField{fmt::format("{} parameter `{}`", where, p.name), p.name,
                                    &resolved, described, p.required, true});
    }
    if (re.request_body) {
        std::map<std::string, InputField> body_fields;
        for (const auto& [media, schema] : re.request_body->content) {
            const Schema& root = follow_refs(re, schema);
            if (root.is_primitive() && !body_fields.contains("")) {
                const bool described =
                    present(re.request_body->description) || present(root.description);
                body_fields.emplace("", InputField{"The request body", "", &root, described,
                                                   re.request_body->required, false});
            }
            std::set<std::string> active;
            walk_body_schema(re, schema, "", 0, active, body_fields);
        }
        for (auto& [path, field] : body_fields) {
            fields.push_back(field);
        }
    }

    std::vector<std::string> evidence;
    for (const auto& f : fields) {
        if (f.described) {
            continue;
        }
        std::vector<std::string> reasons;
        if (f.schema->is_primitive()) {
            reasons.push_back(fmt::format("it is specified only by its type `{}`", kind_name(*f.schema)));
        }
        if (f.required) {
            reasons.push_back("it is required without any functional rationale");
        }
        if (f.is_parameter && is_ambiguous_name(f.name)) {
            reasons.push_back(fmt::format("its name `{}` is an unexplained abbreviation", f.name));
        }
        if (!reasons.empty()) {
            evidence.push_back(
                fmt::format("{} has no description; {}.", f.label, text::join_list(reasons)));
        }
        if (f.schema->kind == SchemaKind::String && !f.schema->has_constraints()) {
            evidence.push_back(fmt::format(
                "{} is a string with no format, pattern or enum describing accepted values.",
                f.label));
        }
    }
    if (evidence.empty()) {
        return {};
    }
    return {make_finding(re, Label::Input, std::move(evidence),
                         action(Label::Input, "Add validation",
                                "Specify formats (e.g., UUID, email), validation constraints, and "
                                "complete required field declarations."))};
}

std::vector<Finding> detect_response(const ReducedEndpoint& re, const Thresholds& t) {
    std::vector<std::string> evidence;

    for (const auto& [code, resp] : re.responses) {
        if (!resp.ref_target.empty()) {
            continue;
        }
        if (text::is_blank(resp.description)) {
            evidence.push_back(fmt::format("The {} response has an empty description.", code));
        } else if (is_generic(resp.description, t)) {
            evidence.push_back(fmt::format(
                "The {} response description {} is generic and does not explain what the "
                "payload means.",
                code, text::quote(text::trim(resp.description))));
        }
    }

    for (const auto& [code, resp] : re.responses) {
        for (const auto& [media, schema] : resp.content) {
            std::vector<std::string> opaque;
            std::set<std::string> active;
            find_opaque_properties(re, schema, "", 0, active, opaque);
            for (const auto& prop : opaque) {
                evidence.push_back(fmt::format(
                    "The `{}` property of the {} response schema{} is an object with no declared "
                    "properties, so its payload shape is undocumented.",
                    prop, code, schema_origin(schema)));
            }
        }
    }

    bool has_error = false;
    std::vector<std::string> codes;
    for (const auto& [code, resp] : re.responses) {
        codes.push_back(code);
        has_error = has_error || code == "default" || code[0] == '4' || code[0] == '5';
    }
    if (re.responses.empty()) {
        evidence.push_back("The operation documents no responses at all.");
    } else if (!has_error) {
        evidence.push_back(fmt::format(
            "Only {} {} documented; no 4xx, 5xx or default error response is described.",
            text::join_list(codes), codes.size() == 1 ? "is" : "are"));
    }

    bool creation = re.endpoint.method == HttpMethod::Post;
    for (const auto& seg : literal_segments(re.endpoint.path)) {
        for (const auto& w : seg.words) {
            creation = creation || w == "create" || w == "add" || w == "new";
        }
    }
    const bool creation_gate =
        creation && re.responses.contains("200") && !re.responses.contains("201");
    if (creation_gate) {
        evidence.push_back(
            "The operation creates a resource but documents HTTP 200 instead of 201 Created.");
    }

    if (evidence.empty()) {
        return {};
    }
    std::string body = creation_gate
                           ? "Use 201 Created for successful creation and define detailed success "
                             "and error response schemas."
                           : "Describe each response payload explicitly and document the error "
                             "responses consumers must handle.";
    return {make_finding(re, Label::Response, std::move(evidence),
                         action(Label::Response, "Improve responses", std::move(body)))};
}

std::vector<Finding> detect_security(const ReducedEndpoint& re, const Thresholds&) {
    std::set<std::string> schemes;
    for (const auto& req : re.security) {
        for (const auto& [name, scopes] : req) {
            schemes.insert(name);
        }
    }
    std::vector<std::string> evidence;
    if (schemes.empty()) {
        evidence.push_back(
            "No authentication or authorization requirements are documented for this "
            "operation.");
    }
    for (const auto& name : schemes) {
        auto it = re.security_schemes_used.find(name);
        if (it == re.security_schemes_used.end()) {
            evidence.push_back(fmt::format(
                "The security scheme `{}` is required but not defined in components.", name));
        } else if (!present(it->second.description)) {
            const auto& s = it->second;
            std::string kind = s.type;
            if (s.scheme) kind += " " + *s.scheme;
            evidence.push_back(fmt::format(
                "The security scheme `{}` ({}) has no description explaining how to obtain "
                "credentials or which permissions are required.",
                name, kind.empty() ? "untyped" : kind));
        }
    }
    if (evidence.empty()) {
        return {};
    }
    std::string body = schemes.empty()
                           ? "Add Bearer token requirements and document the corresponding "
                             "security scheme."
                           : "Document how clients obtain credentials and which scopes or "
                             "permissions the operation requires.";
    return {make_finding(re, Label::Security, std::move(evidence),
                         action(Label::Security, "Define authentication", std::move(body)))};
}

std::vector<Finding> detect_path_and_method(const ReducedEndpoint& re, const Thresholds& t,
                                            bool merged) {
    auto a = analyze_path_method(re, t);
    const auto method = std::string(to_upper_string(re.endpoint.method));
    const auto& path = re.endpoint.path;
    const std::string new_method =
        a.suggested_method ? std::string(to_upper_string(*a.suggested_method)) : method;
    const bool path_changes = a.suggested_path != path;
    const bool method_changes = new_method != method;

    std::vector<Finding> out;
    if (merged) {
        if (a.path_evidence.empty() && a.method_evidence.empty()) {
            return out;
        }
        std::string body;
        if (path_changes || method_changes) {
            body = fmt::format("Replace {} {} with {} {}", method, path, new_method,
                               a.suggested_path);
            body += path_changes ? " and adopt a resource-oriented path."
                                 : " so the method matches the operation's semantics.";
        }
        if (a.body_on_safe_method && !method_changes) {
            if (!body.empty()) body += " ";
            body += fmt::format("Move the {} request body into query parameters.", method);
        }
        std::vector<std::string> evidence = std::move(a.path_evidence);
        evidence.insert(evidence.end(), a.method_evidence.begin(), a.method_evidence.end());
        out.push_back(make_finding(re, Label::PathAndMethod, std::move(evidence),
                                   action(Label::PathAndMethod, "Fix REST design", body)));
        return out;
    }
    if (!a.path_evidence.empty()) {
        out.push_back(make_finding(
            re, Label::Path, std::move(a.path_evidence),
            action(Label::Path, "Use resource-oriented paths",
                   fmt::format("Replace {} with {} and express the action through the HTTP "
                               "method.",
                               path, a.suggested_path))));
    }
    if (!a.method_evidence.empty()) {
        std::string body;
        if (method_changes) {
            body = fmt::format("Use {} instead of {} so the method matches the operation's "
                               "semantics.",
                               new_method, method);
        }
        if (a.body_on_safe_method && !method_changes) {
            body = fmt::format("Move the {} request body into query parameters.", method);
        }
        out.push_back(make_finding(re, Label::Method, std::move(a.method_evidence),
                                   action(Label::Method, "Align HTTP method", body)));
    }
    return out;
}

std::vector<Finding> detect_bloated(const ReducedEndpoint& re, const Thresholds& t) {
    const auto description = present(re.description);
    if (!description ||
        description->size() < static_cast<std::size_t>(t.bloated_min_description_chars)) {
        return {};
    }
    const auto all = text::words(*description);
    if (all.empty()) {
        return {};
    }
    const std::set<std::string> distinct(all.begin(), all.end());
    const double density = static_cast<double>(distinct.size()) / static_cast<double>(all.size());
    if (density >= t.bloated_max_info_density) {
        return {};
    }
    std::vector<std::string> evidence{fmt::format(
        "The description is {} characters long but only {} of its {} words are distinct "
        "(density {:.2f}, below {:.2f}), so most of the text repeats itself.",
        description->size(), distinct.size(), all.size(), density, t.bloated_max_info_density)};
    return {make_finding(re, Label::Bloated, std::move(evidence),
                         action(Label::Bloated, "Condense description",
                                "Rewrite the description to state purpose, behavior and "
                                "constraints once, removing repeated text."))};
}

std::vector<Finding> detect_tangled(const ReducedEndpoint& re, const Thresholds& t) {
    const auto description = present(re.description);
    if (!description) {
        return {};
    }
    std::map<Concern, std::string> first_sentence;
    for (const auto& sentence : text::sentences(*description)) {
        for (auto c : concerns_of(sentence)) {
            first_sentence.emplace(c, sentence);
        }
    }
    if (first_sentence.size() < static_cast<std::size_t>(t.tangled_min_concern_buckets)) {
        return {};
    }
    std::vector<std::string> names;
    for (const auto& [c, s] : first_sentence) {
        names.emplace_back(concern_name(c));
    }
    std::vector<std::string> evidence{fmt::format(
        "The description mixes {} unrelated concerns in one text fragment: {}.",
        first_sentence.size(), text::join_list(names))};
    for (const auto& [c, s] : first_sentence) {
        if (c == Concern::Business) {
            continue;
        }
        evidence.push_back(fmt::format("The sentence {} addresses {}.",
                                       text::quote(text::truncate(s, 120)), concern_name(c)));
    }
    return {make_finding(re, Label::Tangled, std::move(evidence),
                         action(Label::Tangled, "Separate concerns",
                                "Keep the description focused on the operation's purpose and "
                                "move security requirements and error cases into the security "
                                "and responses sections."))};
}

std::vector<Finding> detect_fragmented(const ReducedEndpoint& re, const Thresholds&) {
    if (re.broken_refs.empty()) {
        return {};
    }
    std::vector<std::string> evidence;
    for (const auto& ref : re.broken_refs) {
        if (parse_component_pointer(ref)) {
            evidence.push_back(fmt::format(
                "The reference `{}` points to a component that is not defined in this document.",
                ref));
        } else {
            evidence.push_back(fmt::format(
                "The reference `{}` points outside this document's components and cannot be "
                "resolved locally.",
                ref));
        }
    }
    return {make_finding(re, Label::Fragmented, std::move(evidence),
                         action(Label::Fragmented, "Resolve references",
                                "Define every referenced schema and component under `components` "
                                "in the same document."))};
}

std::vector<Finding> detect_excessive_structured(const ReducedEndpoint& re, const Thresholds& t) {
    std::vector<std::string> evidence;
    const std::pair<const char*, const std::optional<std::string>*> fields[] = {
        {"summary", &re.summary}, {"description", &re.description}};
    for (const auto& [field_name, value] : fields) {
        if (!value->has_value()) {
            continue;
        }
        for (const auto& marker : t.excessive_structured_markers) {
            if (auto hit = match_marker(marker, **value)) {
                std::string snippet = text::truncate(*hit, 60);
                std::replace(snippet.begin(), snippet.end(), '\n', ' ');
                evidence.push_back(fmt::format(
                    "The {} embeds {} (`{}`), structure that belongs in a schema rather than in "
                    "prose.",
                    field_name, marker_description(marker), snippet));
            }
        }
    }
    if (evidence.empty()) {
        return {};
    }
    return {make_finding(re, Label::ExcessiveStructured, std::move(evidence),
                         action(Label::ExcessiveStructured, "Move structure into schemas",
                                "Express data shapes as schemas under `components` and keep the "
                                "summary and description in plain language."))};
}

Diagnosis run_rules(const ReducedEndpoint& re, const Thresholds& t,
                    const LabelUniverse& universe) {
    Diagnosis d;
    d.endpoint = re.endpoint;
    d.api_title = re.api_title;
    d.model_id = std::string(kRulesModelId);
    d.warnings = re.warnings;

    auto append = [&](std::vector<Finding> findings) {
        for (auto& f : findings) {
            if (universe.contains(f.category)) {
                d.findings.push_back(std::move(f));
            }
        }
    };
    append(detect_lazy(re, t));
    append(detect_bloated(re, t));
    append(detect_tangled(re, t));
    append(detect_fragmented(re, t));
    append(detect_security(re, t));
    append(detect_input(re, t));
    append(detect_response(re, t));
    append(detect_path_and_method(re, t, universe.merge_path_method));
    append(detect_excessive_structured(re, t));
    return d;
}

}  // namespace hermes
