#pragma once

#include <iosfwd>
#include <string>

#include "hermes/openapi_model.hpp"

namespace hermes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSmells = 1;
inline constexpr int kExitError = 2;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `<METHOD>_<path>` with `/` mapped to `_`, braces dropped and the path
/// lowercased.
std::string report_basename(const EndpointRef& ep);

}  // namespace hermes::cli
