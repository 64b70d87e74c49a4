#include "text_util.hpp"

#include <algorithm>
#include <cctype>

namespace hermes::text {

namespace {

bool is_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}
bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}
bool is_upper(char c) {
    return std::isupper(static_cast<unsigned char>(c)) != 0;
}
bool is_lower(char c) {
    return std::islower(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), is_space);
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (is_alnum(c)) {
            current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            out.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

std::size_t word_count(std::string_view s) {
    std::size_t count = 0;
    bool in_token = false;
    bool token_has_alnum = false;
    for (char c : s) {
        if (is_space(c)) {
            if (in_token && token_has_alnum) ++count;
            in_token = false;
            token_has_alnum = false;
        } else {
            in_token = true;
            token_has_alnum = token_has_alnum || is_alnum(c);
        }
    }
    if (in_token && token_has_alnum) ++count;
    return count;
}

std::vector<std::string> split_identifier(std::string_view s) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            out.push_back(to_lower(current));
            current.clear();
        }
    };
    for (size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (!std::isalpha(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (!current.empty() && is_upper(c)) {
            const char prev = current.back();
            const bool next_lower = i + 1 < s.size() && is_lower(s[i + 1]);
            // fooBar | HTTPServer
            if (is_lower(prev) || std::isdigit(static_cast<unsigned char>(prev)) ||
                (is_upper(prev) && next_lower)) {
                flush();
            }
        }
        current.push_back(c);
    }
    flush();
    return out;
}

std::vector<std::string> sentences(std::string_view s) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        auto t = trim(current);
        if (!t.empty()) {
            out.push_back(std::move(t));
        }
        current.clear();
    };
    for (size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '\n') {
            flush();
            continue;
        }
        current.push_back(c);
        if ((c == '.' || c == '!' || c == '?') && (i + 1 == s.size() || is_space(s[i + 1]))) {
            flush();
        }
    }
    flush();
    return out;
}

std::string fold_phrase(std::string_view s) {
    std::string out;
    bool space = false;
    for (char c : trim(s)) {
        if (is_space(c)) {
            space = true;
            continue;
        }
        if (space && !out.empty()) {
            out.push_back(' ');
        }
        space = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    while (!out.empty() && (out.back() == '.' || out.back() == '!' || out.back() == ',' ||
                            out.back() == ';' || out.back() == ':')) {
        out.pop_back();
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string join_list(const std::vector<std::string>& parts) {
    if (parts.size() <= 1) {
        return parts.empty() ? std::string() : parts.front();
    }
    std::vector<std::string> head(parts.begin(), parts.end() - 1);
    return join(head, ", ") + " and " + parts.back();
}

std::string quote(std::string_view s) {
    return "\"" + std::string(s) + "\"";
}

std::string truncate(std::string_view s, std::size_t max_chars) {
    if (s.size() <= max_chars) {
        return std::string(s);
    }
    // Do not cut inside a UTF-8 sequence.
    std::size_t cut = max_chars;
    while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) {
        --cut;
    }
    return std::string(s.substr(0, cut)) + "...";
}

}  // namespace hermes::text
