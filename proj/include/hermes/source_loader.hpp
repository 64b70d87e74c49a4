#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "hermes/openapi_model.hpp"

namespace hermes {

struct FetchOptions {
    std::chrono::seconds timeout{30};
    int max_redirects = 5;
};

struct LoadedSource {
    std::string content;
    std::string origin;
    /// From the file extension; nullopt means sniff.
    std::optional<SourceFormat> format;
};

/// Reads a local path or fetches an http(s) URL. Throws IoError.
LoadedSource read_source(const std::string& location, const FetchOptions& options = {});

/// read_source followed by parse_document.
Document load_document(const std::string& location, const FetchOptions& options = {});

}  // namespace hermes
