#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hermes {

/// The ten detectable categories.
enum class SmellCategory {
    Lazy,
    Bloated,
    Tangled,
    Fragmented,
    Path,
    Method,
    Input,
    Response,
    Security,
    ExcessiveStructured,
};

enum class SmellFamily { Documentation, Rest, Extension };

SmellFamily family_of(SmellCategory c) noexcept;

/// Reporting labels: the ten categories plus the merged Path_and_Method.
/// Enumerator order is the order findings appear in a diagnosis.
enum class Label {
    Lazy,
    Bloated,
    Tangled,
    Fragmented,
    Security,
    Input,
    Response,
    Path,
    Method,
    PathAndMethod,
    ExcessiveStructured,
};

Label label_of(SmellCategory c) noexcept;
std::optional<SmellCategory> category_of(Label l) noexcept;  // nullopt for PathAndMethod
SmellFamily family_of(Label l) noexcept;

/// `Lazy`, `Path_and_Method`: the form used in gold, prediction and findings files.
std::string_view label_key(Label l) noexcept;
/// `Lazy`, `Path & Method`: the form used in report prose.
std::string_view display_name(Label l) noexcept;
/// `LAZY`, `PATH_AND_METHOD`: the form used in suggestion titles.
std::string_view label_tag(Label l) noexcept;
/// `lazy`, `path_and_method`: prompt file stems and placeholder prefixes.
std::string label_slug(Label l);

std::string_view display_name(SmellCategory c) noexcept;

/// Exact inverse of label_key.
std::optional<Label> label_from_key(std::string_view key) noexcept;

struct LabelUniverse {
    std::string name;
    std::vector<Label> labels;  // fixed reporting order
    bool merge_path_method = false;

    bool contains(Label l) const noexcept;
    std::optional<std::size_t> index_of(Label l) const noexcept;
    std::size_t size() const noexcept { return labels.size(); }

    bool operator==(const LabelUniverse&) const = default;

    /// Response, Lazy, Input, Security, Path_and_Method, Tangled, Bloated, Fragmented.
    static LabelUniverse default8();
    /// The nine documentation and REST categories, Path and Method separate.
    static LabelUniverse full9();
    /// full9 plus Excessive_Structured.
    static LabelUniverse full10();
    /// Throws ConfigError for names other than default8, full9, full10.
    static LabelUniverse by_name(std::string_view name);
};

/// Case-insensitive; accepts key, display and tag spellings. The merged
/// aliases (`Path & Method`, `Path_and_Method`, ...) throw AmbiguousMerged
/// under a universe that keeps Path and Method apart.
Label parse_label(std::string_view text, const LabelUniverse& universe);

/// Merges Path/Method when the universe does, drops labels outside it and
/// orders the result by the universe.
std::vector<Label> project_labels(std::span<const Label> labels, const LabelUniverse& universe);
std::vector<Label> project_labels(std::span<const SmellCategory> categories,
                                  const LabelUniverse& universe);

}  // namespace hermes
