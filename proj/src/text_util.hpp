#pragma once

// Small text helpers shared by the detectors and the agent output parser.

#include <string>
#include <string_view>
#include <vector>

namespace hermes::text {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool is_blank(std::string_view s);

/// Lowercased runs of ASCII letters and digits.
std::vector<std::string> words(std::string_view s);

/// Whitespace-separated tokens that contain at least one letter or digit.
std::size_t word_count(std::string_view s);

/// Splits an identifier on `-`, `_`, `.` and camelCase boundaries, lowercased.
/// `createNewOrder` -> create, new, order; `HTTPServer` -> http, server.
std::vector<std::string> split_identifier(std::string_view s);

/// Sentences end at `.`, `!` or `?` followed by whitespace, or at a newline.
std::vector<std::string> sentences(std::string_view s);

/// Lowercase, collapse whitespace, strip trailing punctuation.
std::string fold_phrase(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// `a`, `a and b`, `a, b and c`
std::string join_list(const std::vector<std::string>& parts);

std::string quote(std::string_view s);
std::string truncate(std::string_view s, std::size_t max_chars);

}  // namespace hermes::text
