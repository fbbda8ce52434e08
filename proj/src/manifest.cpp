#include "cpcc/manifest.hpp"

#include "cpcc/error.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <memory>

namespace cpcc::manifest {

using nlohmann::json;

namespace {

struct DigestCtx {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx{EVP_MD_CTX_new(), &EVP_MD_CTX_free};

    DigestCtx() {
        require(ctx && EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) == 1, ErrorCode::io,
                "cannot initialize SHA-256");
    }

    void update(const void* data, std::size_t n) {
        require(EVP_DigestUpdate(ctx.get(), data, n) == 1, ErrorCode::io, "SHA-256 update failed");
    }

    std::string hex() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
        unsigned int len = 0;
        require(EVP_DigestFinal_ex(ctx.get(), md.data(), &len) == 1, ErrorCode::io, "SHA-256 final failed");
        static constexpr char kHex[] = "0123456789abcdef";
        std::string out;
        for (unsigned int i = 0; i < len; ++i) {
            out.push_back(kHex[md[i] >> 4]);
            out.push_back(kHex[md[i] & 0xf]);
        }
        return out;
    }
};

json hashes_json(const std::vector<FileHash>& v) {
    json a = json::array();
    for (const auto& h : v) a.push_back({{"path", h.path}, {"sha256", h.sha256}});
    return a;
}

std::vector<FileHash> hashes_from(const json& a) {
    std::vector<FileHash> out;
    for (const auto& e : a) out.push_back({e.at("path").get<std::string>(), e.at("sha256").get<std::string>()});
    return out;
}

} // namespace

std::string sha256_hex(std::string_view bytes) {
    DigestCtx d;
    d.update(bytes.data(), bytes.size());
    return d.hex();
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::io, "cannot read " + path.string());
    DigestCtx d;
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0) d.update(buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    require(in.eof(), ErrorCode::io, "read failed for " + path.string());
    return d.hex();
}

bool is_manifest_file(const fs::path& path) {
    const auto name = path.filename().string();
    static constexpr std::string_view kSuffix = ".manifest.json";
    return name == "manifest.json" ||
           (name.size() > kSuffix.size() && name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0);
}

std::vector<FileHash> hash_artifact(const fs::path& artifact) {
    require(fs::exists(artifact), ErrorCode::io, "no such file or directory: " + artifact.string());
    std::vector<FileHash> out;
    if (fs::is_regular_file(artifact)) {
        out.push_back({artifact.filename().string(), sha256_file(artifact)});
        return out;
    }
    for (const auto& entry : fs::recursive_directory_iterator(artifact)) {
        if (!entry.is_regular_file() || is_manifest_file(entry.path())) continue;
        out.push_back({fs::relative(entry.path(), artifact).generic_string(), sha256_file(entry.path())});
    }
    std::sort(out.begin(), out.end(), [](const FileHash& a, const FileHash& b) { return a.path < b.path; });
    return out;
}

std::string digest(const fs::path& artifact) {
    if (fs::is_regular_file(artifact)) return sha256_file(artifact);
    std::string listing;
    for (const auto& h : hash_artifact(artifact)) listing += h.path + '\t' + h.sha256 + '\n';
    return sha256_hex(listing);
}

fs::path manifest_path(const fs::path& artifact) {
    if (fs::is_directory(artifact)) return artifact / "manifest.json";
    auto p = artifact;
    p += ".manifest.json";
    return p;
}

void write_manifest(const fs::path& artifact, RunManifest m, const std::vector<fs::path>& extra_files) {
    m.outputs = hash_artifact(artifact);
    for (const auto& f : extra_files) {
        require(f.parent_path() == artifact.parent_path(), ErrorCode::config,
                "side output " + f.string() + " is not next to " + artifact.string());
        m.outputs.push_back({f.filename().string(), sha256_file(f)});
    }
    json j;
    j["command"] = m.command;
    j["argv"] = m.argv;
    j["config"] = m.config;
    j["seed"] = m.seed;
    j["version"] = m.version;
    j["wall_seconds"] = m.wall_seconds;
    j["threads"] = m.threads;
    j["inputs"] = hashes_json(m.inputs);
    j["outputs"] = hashes_json(m.outputs);
    const auto path = manifest_path(artifact);
    std::ofstream out(path, std::ios::trunc);
    require(out.good(), ErrorCode::io, "cannot write " + path.string());
    out << j.dump(1) << '\n';
    require(out.good(), ErrorCode::io, "write failed for " + path.string());
}

RunManifest read_manifest(const fs::path& artifact) {
    const auto path = manifest_path(artifact);
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "no manifest at " + path.string());
    try {
        const json j = json::parse(in);
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.argv = j.at("argv").get<std::vector<std::string>>();
        m.config = j.at("config").get<std::map<std::string, std::string>>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.version = j.at("version").get<std::string>();
        m.wall_seconds = j.at("wall_seconds").get<double>();
        m.threads = j.at("threads").get<std::size_t>();
        m.inputs = hashes_from(j.at("inputs"));
        m.outputs = hashes_from(j.at("outputs"));
        return m;
    } catch (const json::exception& e) {
        fail(ErrorCode::data, path.string() + ": " + e.what());
    }
}

std::vector<std::string> verify(const fs::path& artifact) {
    const auto m = read_manifest(artifact);
    std::vector<std::string> problems;
    if (fs::is_regular_file(artifact)) {
        for (const auto& h : m.outputs) {
            const auto p = artifact.parent_path() / h.path;
            if (!fs::is_regular_file(p)) {
                problems.push_back("missing file " + h.path);
            } else if (sha256_file(p) != h.sha256) {
                problems.push_back("hash mismatch for " + h.path);
            }
        }
        return problems;
    }
    const auto now = hash_artifact(artifact);
    std::map<std::string, std::string> expected;
    for (const auto& h : m.outputs) expected[h.path] = h.sha256;
    for (const auto& h : now) {
        const auto it = expected.find(h.path);
        if (it == expected.end()) {
            problems.push_back("unlisted file " + h.path);
        } else {
            if (it->second != h.sha256) problems.push_back("hash mismatch for " + h.path);
            expected.erase(it);
        }
    }
    for (const auto& [path, hash] : expected) problems.push_back("missing file " + path);
    return problems;
}

} // namespace cpcc::manifest
