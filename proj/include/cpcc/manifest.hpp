#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::manifest {

namespace fs = std::filesystem;

inline constexpr std::string_view kToolVersion = "0.1.0";

struct FileHash {
    std::string path;
    std::string sha256;

    bool operator==(const FileHash&) const = default;
};

/// Provenance record written next to every artifact.
struct RunManifest {
    std::string command;
    std::vector<std::string> argv;
    std::map<std::string, std::string> config;  // effective config after precedence
    std::uint64_t seed = 0;
    std::string version{kToolVersion};
    double wall_seconds = 0.0;
    std::size_t threads = 0;
    std::vector<FileHash> inputs;   // one entry per input path; directories hash to a digest of their files
    std::vector<FileHash> outputs;  // one entry per file in the artifact, paths relative to it
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const fs::path& path);

/// True for manifest files, which are excluded from artifact hashes.
bool is_manifest_file(const fs::path& path);

/// Files of a file or directory artifact, sorted, manifests excluded. Paths
/// are relative to a directory artifact or the bare file name otherwise.
std::vector<FileHash> hash_artifact(const fs::path& artifact);

/// Single digest over hash_artifact entries.
std::string digest(const fs::path& artifact);

/// dir/manifest.json for directories, <file>.manifest.json for files.
fs::path manifest_path(const fs::path& artifact);

/// Fills outputs from the artifact on disk, then writes the manifest. Extra
/// files are side outputs of a file artifact (rejection logs etc.) and are
/// listed by name next to it.
void write_manifest(const fs::path& artifact, RunManifest m, const std::vector<fs::path>& extra_files = {});
RunManifest read_manifest(const fs::path& artifact);

/// Problems found when re-hashing the artifact; empty when it verifies.
std::vector<std::string> verify(const fs::path& artifact);

} // namespace cpcc::manifest
