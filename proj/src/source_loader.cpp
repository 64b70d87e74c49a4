#include "hermes/source_loader.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <httplib.h>

#include "hermes/error.hpp"
#include "text_util.hpp"

namespace hermes {

namespace {

bool is_url(std::string_view s) {
    const auto lower = text::to_lower(s.substr(0, 8));
    return lower.starts_with("http://") || lower.starts_with("https://");
}

std::optional<SourceFormat> format_from_name(std::string_view name) {
    // Ignore any query string or fragment.
    name = name.substr(0, name.find_first_of("?#"));
    const auto dot = name.rfind('.');
    if (dot == std::string_view::npos) {
        return std::nullopt;
    }
    const auto ext = text::to_lower(name.substr(dot + 1));
    if (ext == "json") return SourceFormat::Json;
    if (ext == "yaml" || ext == "yml") return SourceFormat::Yaml;
    return std::nullopt;
}

struct Url {
    std::string origin;  // scheme://host[:port]
    std::string target;  // path?query
};

Url split(const std::string& url) {
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end + 3);
    Url u;
    u.origin = url.substr(0, path_start);
    u.target = path_start == std::string::npos ? "/" : url.substr(path_start);
    return u;
}

std::string resolve_location(const Url& base, const std::string& location) {
    if (is_url(location)) {
        return location;
    }
    if (location.starts_with("//")) {
        return base.origin.substr(0, base.origin.find("://") + 1) + location;
    }
    if (location.starts_with("/")) {
        return base.origin + location;
    }
    auto dir = base.target.substr(0, base.target.find('?'));
    dir = dir.substr(0, dir.rfind('/') + 1);
    return base.origin + dir + location;
}

LoadedSource fetch(const std::string& url, const FetchOptions& options) {
    std::string current = url;
    for (int hop = 0;; ++hop) {
        const auto u = split(current);
        httplib::Client client(u.origin);
        client.set_follow_location(false);
        client.set_connection_timeout(options.timeout);
        client.set_read_timeout(options.timeout);
        auto res = client.Get(u.target);
        if (!res) {
            throw Error(ErrorCode::IoError, fmt::format("cannot fetch {}: {}", current,
                                                        httplib::to_string(res.error())));
        }
        if (res->status >= 300 && res->status < 400 && res->has_header("Location")) {
            if (hop >= options.max_redirects) {
                throw Error(ErrorCode::IoError,
                            fmt::format("too many redirects fetching {} (limit {})", url,
                                        options.max_redirects));
            }
            current = resolve_location(u, res->get_header_value("Location"));
            continue;
        }
        if (res->status != 200) {
            throw Error(ErrorCode::IoError,
                        fmt::format("fetching {} returned HTTP {}", current, res->status));
        }
        return LoadedSource{res->body, url, format_from_name(u.target)};
    }
}

}  // namespace

LoadedSource read_source(const std::string& location, const FetchOptions& options) {
    if (is_url(location)) {
        return fetch(location, options);
    }
    std::ifstream in(location, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + location);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return LoadedSource{ss.str(), location, format_from_name(location)};
}

Document load_document(const std::string& location, const FetchOptions& options) {
    auto src = read_source(location, options);
    return parse_document(src.content, src.format, src.origin);
}

}  // namespace hermes
