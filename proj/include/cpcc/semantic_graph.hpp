#pragma once

#include "cpcc/embeddings.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpcc::proxies {

inline constexpr std::size_t kDefaultGraphDegree = 10;

struct Edge {
    std::size_t target = 0;
    double weight = 0.0;

    bool operator==(const Edge&) const = default;
};

/// Fixed directed kNN graph over keywords. Every node has exactly k out-edges,
/// no self-loops, non-negative weights and row sums of one.
struct SemanticGraph {
    std::size_t nodes = 0;
    std::size_t k = 0;
    std::vector<std::vector<Edge>> edges;  // per source node, by descending similarity
    std::string similarity = "cosine";
    std::string tie_rule = "lower-id";
    std::string weighting = "clamped-cosine-row-normalized";

    double row_sum(std::size_t i) const;
};

/// Exact kNN under cosine similarity (rows are unit-norm, so a dot product).
/// Edge weight is max(cosine, 0) before row normalization; a row whose
/// weights are all zero becomes uniform 1/k.
SemanticGraph build_semantic_graph(const EmbeddingMatrix& e, std::size_t k = kDefaultGraphDegree);

/// Graph from explicit neighbor lists with uniform 1/k weights. Used for
/// comparison graphs (random, identity-like) in experiments and tests.
SemanticGraph graph_from_neighbors(std::vector<std::vector<std::size_t>> neighbors, std::string weighting);

/// Random k-regular graph without self-loops, seeded.
SemanticGraph random_graph(std::size_t nodes, std::size_t k, std::uint64_t seed);

/// Max |row_sum - 1| and structural checks; throws on violated invariants.
void validate_graph(const SemanticGraph& g, double tolerance);

void write_edge_list(std::ostream& out, const SemanticGraph& g);
SemanticGraph read_edge_list(std::istream& in, std::size_t nodes);
SemanticGraph read_edge_list(const std::filesystem::path& path, std::size_t nodes);

} // namespace cpcc::proxies
