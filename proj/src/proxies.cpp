#include "cpcc/proxies.hpp"
#include "cpcc/error.hpp"

namespace cpcc::proxies {

ProxySet build_proxies(const panel::WeeklyPanel& panel, EmbeddingMatrix embeddings, Gazetteer gazetteer,
                       const ProxyConfig& cfg) {
    require(embeddings.rows == panel.n_keywords(), ErrorCode::data,
            "embedding rows (" + std::to_string(embeddings.rows) + ") do not match panel keywords (" +
                std::to_string(panel.n_keywords()) + ")");
    ProxySet p;
    p.graph = build_semantic_graph(embeddings, cfg.k);
    p.dtw = build_dtw_neighborhoods(panel, cfg.train, cfg.dtw_m, cfg.dtw_band);
    p.geo = tag_all(panel.keywords, gazetteer);
    p.embeddings = std::move(embeddings);
    p.gazetteer = std::move(gazetteer);
    return p;
}

} // namespace cpcc::proxies
