#pragma once

#include "cpcc/dtw.hpp"
#include "cpcc/embeddings.hpp"
#include "cpcc/geography.hpp"
#include "cpcc/panel.hpp"
#include "cpcc/semantic_graph.hpp"

#include <cstddef>
#include <vector>

namespace cpcc::proxies {

struct ProxyConfig {
    std::size_t k = kDefaultGraphDegree;
    std::size_t dtw_m = kDefaultDtwNeighbors;
    std::size_t dtw_band = kDefaultDtwBand;
    panel::WeekRange train;  // DTW uses these weeks only
};

/// The three competition-proxy families for one panel.
struct ProxySet {
    EmbeddingMatrix embeddings;
    SemanticGraph graph;
    DtwNeighborhood dtw;
    std::vector<GeoTag> geo;
    Gazetteer gazetteer;
};

ProxySet build_proxies(const panel::WeeklyPanel& panel, EmbeddingMatrix embeddings, Gazetteer gazetteer,
                       const ProxyConfig& cfg);

} // namespace cpcc::proxies
