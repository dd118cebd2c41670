#include "cnoise/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>

#include "cnoise/error.hpp"
#include "cnoise/philox.hpp"
#include "cnoise/spectral.hpp"

namespace cnoise {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_failure, "cannot open " + path.string() + " for hashing");

    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        fail(ErrorCode::io_failure, "SHA-256 initialisation failed");
    }
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);

    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex.push_back(kHex[digest[i] >> 4]);
        hex.push_back(kHex[digest[i] & 0xf]);
    }
    return hex;
}

void RunManifest::add_input(const fs::path& p) { inputs.push_back({fs::absolute(p).string(), sha256_file(p)}); }

void RunManifest::add_output(const fs::path& p) { outputs.push_back({fs::absolute(p).string(), sha256_file(p)}); }

namespace {

json digests_to_json(const std::vector<FileDigest>& files) {
    json arr = json::array();
    for (const auto& f : files) arr.push_back({{"path", f.path}, {"sha256", f.sha256}});
    return arr;
}

std::vector<FileDigest> digests_from_json(const json& arr) {
    std::vector<FileDigest> out;
    for (const auto& f : arr) out.push_back({f.at("path").get<std::string>(), f.at("sha256").get<std::string>()});
    return out;
}

}  // namespace

json RunManifest::to_json() const {
    return json{
        {"tool", kToolName},
        {"version", kToolVersion},
        {"subcommand", subcommand},
        {"command", command},
        {"working_directory", working_directory},
        {"generator", kGeneratorName},
        {"radius_metric", kRadiusMetric},
        {"config", config},
        {"inputs", digests_to_json(inputs)},
        {"outputs", digests_to_json(outputs)},
        {"extra", extra},
        {"timestamp", timestamp},
    };
}

RunManifest RunManifest::from_json(const json& j) {
    try {
        RunManifest m;
        m.command = j.at("command").get<std::vector<std::string>>();
        m.subcommand = j.at("subcommand").get<std::string>();
        m.working_directory = j.value("working_directory", std::string{});
        m.config = j.value("config", json::object());
        m.inputs = digests_from_json(j.at("inputs"));
        m.outputs = digests_from_json(j.at("outputs"));
        m.extra = j.value("extra", json::object());
        m.timestamp = j.value("timestamp", std::string{});
        return m;
    } catch (const json::exception& e) {
        fail(ErrorCode::invalid_argument, std::string("malformed manifest: ") + e.what());
    }
}

fs::path manifest_path_for(const fs::path& output) {
    if (fs::is_directory(output)) return output / "manifest.json";
    return fs::path(output.string() + ".manifest.json");
}

void write_manifest(const RunManifest& m, const fs::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorCode::io_failure, "cannot write manifest " + path.string());
    out << m.to_json().dump(2) << '\n';
    if (!out) fail(ErrorCode::io_failure, "write to " + path.string() + " failed");
}

RunManifest read_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_failure, "cannot open manifest " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::invalid_argument, path.string() + " is not valid JSON");
    return RunManifest::from_json(j);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace cnoise
