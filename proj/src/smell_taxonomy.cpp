#include "hermes/smell_taxonomy.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "hermes/error.hpp"

namespace hermes {

namespace {

struct LabelNames {
    Label label;
    std::string_view key;
    std::string_view display;
    std::string_view tag;
};

constexpr LabelNames kNames[] = {
    {Label::Lazy, "Lazy", "Lazy", "LAZY"},
    {Label::Bloated, "Bloated", "Bloated", "BLOATED"},
    {Label::Tangled, "Tangled", "Tangled", "TANGLED"},
    {Label::Fragmented, "Fragmented", "Fragmented", "FRAGMENTED"},
    {Label::Security, "Security", "Security", "SECURITY"},
    {Label::Input, "Input", "Input", "INPUT"},
    {Label::Response, "Response", "Response", "RESPONSE"},
    {Label::Path, "Path", "Path", "PATH"},
    {Label::Method, "Method", "Method", "METHOD"},
    {Label::PathAndMethod, "Path_and_Method", "Path & Method", "PATH_AND_METHOD"},
    {Label::ExcessiveStructured, "Excessive_Structured", "Excessive Structured",
     "EXCESSIVE_STRUCTURED"},
};

const LabelNames& names(Label l) {
    return kNames[static_cast<std::size_t>(l)];
}

// Lowercase with every run of spaces, dashes and underscores folded to `_`,
// and `&` spelled `and`.
std::string normalize(std::string_view text) {
    std::string out;
    bool pending_sep = false;
    for (char raw : text) {
        const auto c = static_cast<unsigned char>(raw);
        if (std::isspace(c) || c == '_' || c == '-') {
            pending_sep = !out.empty();
            continue;
        }
        if (pending_sep) {
            out.push_back('_');
            pending_sep = false;
        }
        if (c == '&') {
            out += "and";
        } else {
            out.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    return out;
}

}  // namespace

SmellFamily family_of(SmellCategory c) noexcept {
    switch (c) {
        case SmellCategory::Lazy:
        case SmellCategory::Bloated:
        case SmellCategory::Tangled:
        case SmellCategory::Fragmented:
            return SmellFamily::Documentation;
        case SmellCategory::ExcessiveStructured:
            return SmellFamily::Extension;
        default:
            return SmellFamily::Rest;
    }
}

Label label_of(SmellCategory c) noexcept {
    switch (c) {
        case SmellCategory::Lazy: return Label::Lazy;
        case SmellCategory::Bloated: return Label::Bloated;
        case SmellCategory::Tangled: return Label::Tangled;
        case SmellCategory::Fragmented: return Label::Fragmented;
        case SmellCategory::Path: return Label::Path;
        case SmellCategory::Method: return Label::Method;
        case SmellCategory::Input: return Label::Input;
        case SmellCategory::Response: return Label::Response;
        case SmellCategory::Security: return Label::Security;
        case SmellCategory::ExcessiveStructured: return Label::ExcessiveStructured;
    }
    return Label::Lazy;
}

std::optional<SmellCategory> category_of(Label l) noexcept {
    switch (l) {
        case Label::Lazy: return SmellCategory::Lazy;
        case Label::Bloated: return SmellCategory::Bloated;
        case Label::Tangled: return SmellCategory::Tangled;
        case Label::Fragmented: return SmellCategory::Fragmented;
        case Label::Security: return SmellCategory::Security;
        case Label::Input: return SmellCategory::Input;
        case Label::Response: return SmellCategory::Response;
        case Label::Path: return SmellCategory::Path;
        case Label::Method: return SmellCategory::Method;
        case Label::PathAndMethod: return std::nullopt;
        case Label::ExcessiveStructured: return SmellCategory::ExcessiveStructured;
    }
    return std::nullopt;
}

SmellFamily family_of(Label l) noexcept {
    auto c = category_of(l);
    return c ? family_of(*c) : SmellFamily::Rest;
}

std::string_view label_key(Label l) noexcept { return names(l).key; }
std::string_view display_name(Label l) noexcept { return names(l).display; }
std::string_view label_tag(Label l) noexcept { return names(l).tag; }

std::string label_slug(Label l) {
    std::string out(names(l).tag);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view display_name(SmellCategory c) noexcept {
    return display_name(label_of(c));
}

std::optional<Label> label_from_key(std::string_view key) noexcept {
    for (const auto& entry : kNames) {
        if (entry.key == key) {
            return entry.label;
        }
    }
    return std::nullopt;
}

bool LabelUniverse::contains(Label l) const noexcept {
    return index_of(l).has_value();
}

std::optional<std::size_t> LabelUniverse::index_of(Label l) const noexcept {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels.begin());
}

LabelUniverse LabelUniverse::default8() {
    return {"default8",
            {Label::Response, Label::Lazy, Label::Input, Label::Security, Label::PathAndMethod,
             Label::Tangled, Label::Bloated, Label::Fragmented},
            true};
}

LabelUniverse LabelUniverse::full9() {
    return {"full9",
            {Label::Lazy, Label::Bloated, Label::Tangled, Label::Fragmented, Label::Path,
             Label::Method, Label::Input, Label::Response, Label::Security},
            false};
}

LabelUniverse LabelUniverse::full10() {
    LabelUniverse u = full9();
    u.name = "full10";
    u.labels.push_back(Label::ExcessiveStructured);
    return u;
}

LabelUniverse LabelUniverse::by_name(std::string_view name) {
    if (name == "default8") return default8();
    if (name == "full9") return full9();
    if (name == "full10") return full10();
    throw Error(ErrorCode::ConfigError,
                fmt::format("unknown label universe '{}' (expected default8, full9 or full10)",
                            name));
}

Label parse_label(std::string_view text, const LabelUniverse& universe) {
    const std::string norm = normalize(text);
    if (norm == "path_and_method") {
        if (!universe.merge_path_method) {
            throw Error(ErrorCode::AmbiguousMerged,
                        fmt::format("'{}' is a merged label but universe '{}' keeps Path and "
                                    "Method separate",
                                    text, universe.name));
        }
        return Label::PathAndMethod;
    }
    for (const auto& entry : kNames) {
        if (entry.label != Label::PathAndMethod && normalize(entry.key) == norm) {
            return entry.label;
        }
    }
    throw Error(ErrorCode::UnknownLabel, fmt::format("'{}'", text));
}

std::vector<Label> project_labels(std::span<const Label> labels, const LabelUniverse& universe) {
    std::vector<bool> present(universe.size(), false);
    for (Label l : labels) {
        if (universe.merge_path_method && (l == Label::Path || l == Label::Method)) {
            l = Label::PathAndMethod;
        } else if (!universe.merge_path_method && l == Label::PathAndMethod) {
            // A merged label cannot be attributed to either side.
            continue;
        }
        if (auto idx = universe.index_of(l)) {
            present[*idx] = true;
        }
    }
    std::vector<Label> out;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (present[i]) {
            out.push_back(universe.labels[i]);
        }
    }
    return out;
}

std::vector<Label> project_labels(std::span<const SmellCategory> categories,
                                  const LabelUniverse& universe) {
    std::vector<Label> labels;
    labels.reserve(categories.size());
    for (auto c : categories) {
        labels.push_back(label_of(c));
    }
    return project_labels(labels, universe);
}

}  // namespace hermes
