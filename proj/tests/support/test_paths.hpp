#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace hermes::testkit {

inline std::filesystem::path data_dir() {
    return HERMES_TEST_DATA_DIR;
}

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("hermes-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace hermes::testkit
