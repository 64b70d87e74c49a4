#include <gtest/gtest.h>

#include <algorithm>

#include "hermes/diagnosis.hpp"
#include "hermes/error.hpp"
#include "hermes/smell_taxonomy.hpp"

using namespace hermes;

namespace {

constexpr Label kAllLabels[] = {
    Label::Lazy,     Label::Bloated, Label::Tangled, Label::Fragmented,    Label::Security, Label::Input,
    Label::Response, Label::Path,    Label::Method,  Label::PathAndMethod, Label::ExcessiveStructured};

constexpr SmellCategory kAllCategories[] = {
    SmellCategory::Lazy,  SmellCategory::Bloated,  SmellCategory::Tangled,  SmellCategory::Fragmented,
    SmellCategory::Path,  SmellCategory::Method,   SmellCategory::Input,    SmellCategory::Response,
    SmellCategory::Security, SmellCategory::ExcessiveStructured};

std::vector<Label> subset(unsigned mask) {
    std::vector<Label> out;
    for (unsigned i = 0; i < std::size(kAllLabels); ++i) {
        if (mask & (1u << i)) out.push_back(kAllLabels[i]);
    }
    return out;
}

ErrorCode parse_error(std::string_view text, const LabelUniverse& u) {
    try {
        parse_label(text, u);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parse_label accepted " << text;
    return ErrorCode::IoError;
}

}  // namespace

TEST(SmellTaxonomy, Families) {
    for (auto c : {SmellCategory::Lazy, SmellCategory::Bloated, SmellCategory::Tangled, SmellCategory::Fragmented}) {
        EXPECT_EQ(family_of(c), SmellFamily::Documentation);
    }
    for (auto c : {SmellCategory::Path, SmellCategory::Method, SmellCategory::Input, SmellCategory::Response,
                   SmellCategory::Security}) {
        EXPECT_EQ(family_of(c), SmellFamily::Rest);
    }
    EXPECT_EQ(family_of(SmellCategory::ExcessiveStructured), SmellFamily::Extension);
    EXPECT_EQ(family_of(Label::PathAndMethod), SmellFamily::Rest);
}

TEST(SmellTaxonomy, BuiltInUniverses) {
    const auto d8 = LabelUniverse::default8();
    EXPECT_EQ(d8.labels, (std::vector<Label>{Label::Response, Label::Lazy, Label::Input, Label::Security,
                                             Label::PathAndMethod, Label::Tangled, Label::Bloated,
                                             Label::Fragmented}));
    EXPECT_TRUE(d8.merge_path_method);
    const auto f9 = LabelUniverse::full9();
    EXPECT_EQ(f9.size(), 9u);
    EXPECT_FALSE(f9.merge_path_method);
    EXPECT_TRUE(f9.contains(Label::Path));
    EXPECT_FALSE(f9.contains(Label::PathAndMethod));
    EXPECT_FALSE(f9.contains(Label::ExcessiveStructured));
    const auto f10 = LabelUniverse::full10();
    EXPECT_EQ(f10.size(), 10u);
    EXPECT_TRUE(f10.contains(Label::ExcessiveStructured));
    // Merging removes exactly one label.
    EXPECT_EQ(d8.size() + 1, f9.size());

    EXPECT_EQ(LabelUniverse::by_name("full9"), f9);
    try {
        LabelUniverse::by_name("full11");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    }
}

TEST(SmellTaxonomy, ParseLabelExamples) {
    const auto d8 = LabelUniverse::default8();
    const auto f9 = LabelUniverse::full9();
    EXPECT_EQ(parse_label("Lazy", d8), Label::Lazy);
    EXPECT_EQ(parse_label("lazy", d8), Label::Lazy);
    EXPECT_EQ(parse_label("LAZY", f9), Label::Lazy);
    EXPECT_EQ(parse_label("Path & Method", d8), Label::PathAndMethod);
    EXPECT_EQ(parse_label("Path_and_Method", d8), Label::PathAndMethod);
    EXPECT_EQ(parse_label("PATH_AND_METHOD", d8), Label::PathAndMethod);
    EXPECT_EQ(parse_label("Excessive_Structured", d8), Label::ExcessiveStructured);
    EXPECT_EQ(parse_error("Path & Method", f9), ErrorCode::AmbiguousMerged);
    EXPECT_EQ(parse_error("path_and_method", LabelUniverse::full10()), ErrorCode::AmbiguousMerged);
    EXPECT_EQ(parse_error("Sloppy", d8), ErrorCode::UnknownLabel);
    EXPECT_EQ(parse_error("", d8), ErrorCode::UnknownLabel);
}

TEST(SmellTaxonomy, EverySpellingRoundTrips) {
    const auto d8 = LabelUniverse::default8();
    const auto f10 = LabelUniverse::full10();
    for (auto l : kAllLabels) {
        const auto& u = l == Label::PathAndMethod ? d8 : f10;
        EXPECT_EQ(parse_label(label_key(l), u), l);
        EXPECT_EQ(parse_label(display_name(l), u), l);
        EXPECT_EQ(parse_label(label_tag(l), u), l);
        EXPECT_EQ(label_from_key(label_key(l)), l);
    }
    EXPECT_FALSE(label_from_key("lazy"));
    for (auto c : kAllCategories) {
        EXPECT_EQ(category_of(label_of(c)), c);
        EXPECT_EQ(parse_label(display_name(c), f10), label_of(c));
    }
    EXPECT_FALSE(category_of(Label::PathAndMethod));
}

TEST(SmellTaxonomy, SurfaceForms) {
    EXPECT_EQ(label_key(Label::PathAndMethod), "Path_and_Method");
    EXPECT_EQ(display_name(Label::PathAndMethod), "Path & Method");
    EXPECT_EQ(label_tag(Label::PathAndMethod), "PATH_AND_METHOD");
    EXPECT_EQ(label_slug(Label::PathAndMethod), "path_and_method");
    EXPECT_EQ(label_key(Label::ExcessiveStructured), "Excessive_Structured");
    EXPECT_EQ(label_slug(Label::ExcessiveStructured), "excessive_structured");
}

TEST(SmellTaxonomy, ProjectLabelsExamples) {
    const auto d8 = LabelUniverse::default8();
    const SmellCategory pml[] = {SmellCategory::Path, SmellCategory::Method, SmellCategory::Lazy};
    EXPECT_EQ(project_labels(std::span<const SmellCategory>(pml), d8),
              (std::vector<Label>{Label::Lazy, Label::PathAndMethod}));
    EXPECT_TRUE(project_labels(std::span<const Label>{}, d8).empty());
    const Label ex[] = {Label::ExcessiveStructured};
    EXPECT_TRUE(project_labels(ex, d8).empty());
    // A merged label splits back into nothing under an unmerged universe.
    const Label merged[] = {Label::PathAndMethod};
    EXPECT_TRUE(project_labels(merged, LabelUniverse::full9()).empty());
}

// Exhaustive over every subset of the eleven reporting labels.
TEST(SmellTaxonomyProperty, ProjectIsIdempotentAndMonotone) {
    for (const auto& u : {LabelUniverse::default8(), LabelUniverse::full9(), LabelUniverse::full10()}) {
        const unsigned n = 1u << std::size(kAllLabels);
        std::vector<std::vector<Label>> projected(n);
        for (unsigned mask = 0; mask < n; ++mask) {
            const auto a = subset(mask);
            projected[mask] = project_labels(a, u);
            ASSERT_EQ(project_labels(projected[mask], u), projected[mask]) << u.name << " mask " << mask;
            for (auto l : projected[mask]) ASSERT_TRUE(u.contains(l));
            ASSERT_TRUE(std::is_sorted(projected[mask].begin(), projected[mask].end(), [&](Label x, Label y) {
                return *u.index_of(x) < *u.index_of(y);
            }));
        }
        for (unsigned a = 0; a < n; ++a) {
            // Every superset obtained by adding one label.
            for (unsigned bit = 0; bit < std::size(kAllLabels); ++bit) {
                const unsigned b = a | (1u << bit);
                for (auto l : projected[a]) {
                    ASSERT_NE(std::find(projected[b].begin(), projected[b].end(), l), projected[b].end())
                        << u.name << " " << a << " -> " << b;
                }
            }
        }
    }
}

TEST(Diagnosis, ActionTitleGrammar) {
    EXPECT_TRUE(is_action_title("[LAZY] - Improve documentation"));
    EXPECT_TRUE(is_action_title("[PATH_AND_METHOD] - Fix REST design"));
    EXPECT_FALSE(is_action_title("[lazy] - Improve documentation"));
    EXPECT_FALSE(is_action_title("[LAZY] Improve documentation"));
    EXPECT_FALSE(is_action_title("[LAZY] - "));
}

TEST(Diagnosis, LabelsInFirstAppearanceOrder) {
    Diagnosis d;
    d.findings.push_back(Finding{Label::Security});
    d.findings.push_back(Finding{Label::Lazy});
    d.findings.push_back(Finding{Label::Security});
    EXPECT_EQ(d.labels(), (std::vector<Label>{Label::Security, Label::Lazy}));
    EXPECT_EQ(to_string(DetectorKind::Agent), "agent");
}
