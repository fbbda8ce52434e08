#include "cpcc/semantic_graph.hpp"
#include "cpcc/error.hpp"
#include "cpcc/parallel.hpp"
#include "cpcc/rng.hpp"
#include "cpcc/text_format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cpcc::proxies {

double SemanticGraph::row_sum(std::size_t i) const {
    double s = 0.0;
    for (const auto& e : edges[i]) s += e.weight;
    return s;
}

SemanticGraph build_semantic_graph(const EmbeddingMatrix& e, std::size_t k) {
    require(k > 0, ErrorCode::config, "graph degree k must be positive");
    require(k < e.rows, ErrorCode::config,
            "graph degree k=" + std::to_string(k) + " requires more than k keywords (have " +
                std::to_string(e.rows) + ")");

    SemanticGraph g;
    g.nodes = e.rows;
    g.k = k;
    g.edges.resize(e.rows);

    parallel_for(e.rows, [&](std::size_t i) {
        std::vector<std::pair<double, std::size_t>> sims;
        sims.reserve(e.rows - 1);
        for (std::size_t j = 0; j < e.rows; ++j) {
            if (j != i) sims.emplace_back(dot(e.row(i), e.row(j)), j);
        }
        // Highest similarity first; ties go to the lower keyword id.
        std::partial_sort(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(k), sims.end(),
                          [](const auto& a, const auto& b) {
                              return a.first != b.first ? a.first > b.first : a.second < b.second;
                          });
        auto& row = g.edges[i];
        double total = 0.0;
        for (std::size_t r = 0; r < k; ++r) {
            const double w = std::max(sims[r].first, 0.0);
            row.push_back({sims[r].second, w});
            total += w;
        }
        for (auto& edge : row) edge.weight = total > 0.0 ? edge.weight / total : 1.0 / static_cast<double>(k);
    });
    return g;
}

SemanticGraph graph_from_neighbors(std::vector<std::vector<std::size_t>> neighbors, std::string weighting) {
    SemanticGraph g;
    g.nodes = neighbors.size();
    g.k = neighbors.empty() ? 0 : neighbors.front().size();
    g.weighting = std::move(weighting);
    g.similarity = "given";
    g.edges.resize(g.nodes);
    for (std::size_t i = 0; i < g.nodes; ++i) {
        require(neighbors[i].size() == g.k && g.k > 0, ErrorCode::data, "neighbor lists must share one positive degree");
        for (auto j : neighbors[i]) g.edges[i].push_back({j, 1.0 / static_cast<double>(g.k)});
    }
    return g;
}

SemanticGraph random_graph(std::size_t nodes, std::size_t k, std::uint64_t seed) {
    require(k > 0 && k < nodes, ErrorCode::config, "random graph needs 0 < k < nodes");
    Rng rng = Rng::stream(seed, "random-graph");
    std::vector<std::vector<std::size_t>> neighbors(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        std::vector<std::size_t> pool;
        for (std::size_t j = 0; j < nodes; ++j) {
            if (j != i) pool.push_back(j);
        }
        for (std::size_t r = 0; r < k; ++r) {
            const std::size_t pick = r + static_cast<std::size_t>(rng.index(pool.size() - r));
            std::swap(pool[r], pool[pick]);
            neighbors[i].push_back(pool[r]);
        }
    }
    auto g = graph_from_neighbors(std::move(neighbors), "uniform");
    g.similarity = "random";
    return g;
}

void validate_graph(const SemanticGraph& g, double tolerance) {
    require(g.edges.size() == g.nodes, ErrorCode::data, "graph edge table size mismatch");
    for (std::size_t i = 0; i < g.nodes; ++i) {
        require(g.edges[i].size() == g.k, ErrorCode::data, "node " + std::to_string(i) + " out-degree differs from k");
        for (const auto& e : g.edges[i]) {
            require(e.target < g.nodes, ErrorCode::data, "edge target out of range");
            require(e.target != i, ErrorCode::data, "self-loop at node " + std::to_string(i));
            require(e.weight >= 0.0, ErrorCode::data, "negative edge weight");
        }
        require(std::abs(g.row_sum(i) - 1.0) <= tolerance, ErrorCode::data,
                "row " + std::to_string(i) + " sums to " + format_double(g.row_sum(i)));
    }
}

void write_edge_list(std::ostream& out, const SemanticGraph& g) {
    out << "src,dst,weight\n";
    for (std::size_t i = 0; i < g.nodes; ++i) {
        for (const auto& e : g.edges[i]) out << i << ',' << e.target << ',' << format_double(e.weight) << '\n';
    }
}

SemanticGraph read_edge_list(std::istream& in, std::size_t nodes) {
    SemanticGraph g;
    g.nodes = nodes;
    g.edges.resize(nodes);
    g.similarity = "file";
    std::string line;
    std::getline(in, line);
    require(line.rfind("src,dst,weight", 0) == 0, ErrorCode::data, "edge list: missing header src,dst,weight");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        require(fields.size() == 3, ErrorCode::data, "edge list line " + std::to_string(line_no) + ": expected 3 fields");
        const auto src = parse_size(fields[0]);
        const auto dst = parse_size(fields[1]);
        const auto w = parse_double(fields[2]);
        require(src && dst && w && *src < nodes && *dst < nodes, ErrorCode::data,
                "edge list line " + std::to_string(line_no) + ": bad edge");
        g.edges[*src].push_back({*dst, *w});
    }
    g.k = nodes > 0 ? g.edges[0].size() : 0;
    return g;
}

SemanticGraph read_edge_list(const std::filesystem::path& path, std::size_t nodes) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "cannot read graph file " + path.string());
    return read_edge_list(in, nodes);
}

} // namespace cpcc::proxies
