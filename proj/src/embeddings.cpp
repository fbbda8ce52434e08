#include "cpcc/embeddings.hpp"
#include "cpcc/error.hpp"
#include "cpcc/rng.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace cpcc::proxies {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

bool normalize_in_place(std::span<double> v) {
    const double norm = std::sqrt(dot(v, v));
    if (!(norm > 0.0) || !std::isfinite(norm)) return false;
    for (double& x : v) x /= norm;
    return true;
}

} // namespace

std::vector<double> hash_embed(std::string_view keyword, std::size_t dim) {
    require(!keyword.empty(), ErrorCode::data, "hash_embed: empty keyword");
    require(dim >= 8, ErrorCode::config, "hash_embed: dimension must be at least 8");

    std::string padded;
    padded.reserve(keyword.size() + 2);
    padded.push_back(' ');
    padded.append(keyword);
    padded.push_back(' ');

    std::vector<double> v(dim, 0.0);
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
        const std::uint64_t h = fnv1a64(std::string_view(padded).substr(i, 3));
        const std::size_t bucket = static_cast<std::size_t>(h % dim);
        v[bucket] += (h >> 63) != 0 ? -1.0 : 1.0;
    }
    if (!normalize_in_place(v)) {
        // All trigram contributions cancelled; fall back to one hashed bucket.
        v.assign(dim, 0.0);
        v[fnv1a64(keyword) % dim] = 1.0;
    }
    return v;
}

EmbeddingMatrix hash_embed_all(std::span<const std::string> keywords, std::size_t dim) {
    EmbeddingMatrix e;
    e.rows = keywords.size();
    e.dim = dim;
    e.values.reserve(e.rows * dim);
    for (const auto& kw : keywords) {
        const auto v = hash_embed(kw, dim);
        e.values.insert(e.values.end(), v.begin(), v.end());
    }
    e.source = EmbeddingSource::fallback;
    e.fallback_rows = e.rows;
    return e;
}

EmbeddingMatrix load_embeddings(std::istream& in, std::span<const std::string> keywords) {
    std::unordered_map<std::string, std::vector<double>> records;
    std::size_t dim = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto obj = nlohmann::json::parse(line, nullptr, false);
        require(!obj.is_discarded() && obj.is_object() && obj.contains("keyword") && obj.contains("vector") &&
                    obj["keyword"].is_string() && obj["vector"].is_array(),
                ErrorCode::data, "embedding file line " + std::to_string(line_no) + ": malformed record");
        std::vector<double> v;
        v.reserve(obj["vector"].size());
        for (const auto& x : obj["vector"]) {
            require(x.is_number(), ErrorCode::data,
                    "embedding file line " + std::to_string(line_no) + ": non-numeric component");
            v.push_back(x.get<double>());
        }
        if (dim == 0) dim = v.size();
        require(v.size() == dim && dim > 0, ErrorCode::data,
                "embedding file line " + std::to_string(line_no) + ": dimension " + std::to_string(v.size()) +
                    " differs from " + std::to_string(dim));
        records[obj["keyword"].get<std::string>()] = std::move(v);
    }
    require(!records.empty(), ErrorCode::data, "embedding file is empty");

    EmbeddingMatrix e;
    e.rows = keywords.size();
    e.dim = dim;
    e.values.assign(e.rows * dim, 0.0);
    e.source = EmbeddingSource::exported;
    for (std::size_t i = 0; i < keywords.size(); ++i) {
        auto row = e.row(i);
        const auto it = records.find(keywords[i]);
        bool ok = false;
        if (it != records.end()) {
            std::copy(it->second.begin(), it->second.end(), row.begin());
            ok = normalize_in_place(row);
        }
        if (!ok) {
            const auto v = hash_embed(keywords[i], dim);
            std::copy(v.begin(), v.end(), row.begin());
            ++e.fallback_rows;
        }
    }
    return e;
}

EmbeddingMatrix load_embeddings(const std::filesystem::path& path, std::span<const std::string> keywords) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "cannot read embeddings file " + path.string());
    return load_embeddings(in, keywords);
}

void write_embeddings(std::ostream& out, const EmbeddingMatrix& e, std::span<const std::string> keywords) {
    for (std::size_t i = 0; i < e.rows; ++i) {
        const auto r = e.row(i);
        nlohmann::json obj{{"keyword", keywords[i]}, {"vector", std::vector<double>(r.begin(), r.end())}};
        out << obj.dump() << '\n';
    }
}

} // namespace cpcc::proxies
