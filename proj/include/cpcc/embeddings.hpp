#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::proxies {

inline constexpr std::size_t kDefaultEmbeddingDim = 384;

enum class EmbeddingSource { exported, fallback };

/// N x D row-major matrix of unit-norm keyword embeddings, rows aligned with
/// the panel keyword order.
struct EmbeddingMatrix {
    std::size_t rows = 0;
    std::size_t dim = 0;
    std::vector<double> values;
    EmbeddingSource source = EmbeddingSource::fallback;
    std::size_t fallback_rows = 0;  // rows produced by hash_embed

    std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
    std::span<double> row(std::size_t i) { return {values.data() + i * dim, dim}; }
};

/// Signed character-trigram feature hashing into `dim` buckets, then L2
/// normalization. Deterministic across runs and platforms.
std::vector<double> hash_embed(std::string_view keyword, std::size_t dim = kDefaultEmbeddingDim);

/// Fallback matrix for every keyword.
EmbeddingMatrix hash_embed_all(std::span<const std::string> keywords, std::size_t dim = kDefaultEmbeddingDim);

/// Reads line-delimited {keyword, vector} records and aligns them to
/// `keywords`. Missing keywords and zero vectors fall back to hash_embed;
/// every row is L2-renormalized.
EmbeddingMatrix load_embeddings(std::istream& in, std::span<const std::string> keywords);
EmbeddingMatrix load_embeddings(const std::filesystem::path& path, std::span<const std::string> keywords);

void write_embeddings(std::ostream& out, const EmbeddingMatrix& e, std::span<const std::string> keywords);

double dot(std::span<const double> a, std::span<const double> b);

} // namespace cpcc::proxies
