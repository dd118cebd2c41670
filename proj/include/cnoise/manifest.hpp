#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cnoise {

inline constexpr std::string_view kToolName = "cnoise";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

struct FileDigest {
    std::string path;  // absolute
    std::string sha256;
};

/// Reproducibility record written next to every output of a CLI run.
struct RunManifest {
    std::vector<std::string> command;  // argv without the program name
    std::string subcommand;
    std::string working_directory;
    nlohmann::json config = nlohmann::json::object();
    std::vector<FileDigest> inputs;
    std::vector<FileDigest> outputs;
    nlohmann::json extra = nlohmann::json::object();
    std::string timestamp;  // UTC, ISO 8601

    void add_input(const std::filesystem::path& p);
    void add_output(const std::filesystem::path& p);

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

/// `<dir>/manifest.json` for directory outputs, `<file>.manifest.json` otherwise.
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

void write_manifest(const RunManifest& m, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

std::string utc_timestamp();

}  // namespace cnoise
