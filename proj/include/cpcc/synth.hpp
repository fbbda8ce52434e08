#pragma once

#include "cpcc/calendar.hpp"
#include "cpcc/dtw.hpp"
#include "cpcc/embeddings.hpp"
#include "cpcc/geography.hpp"
#include "cpcc/ingest.hpp"
#include "cpcc/panel.hpp"
#include "cpcc/semantic_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cpcc::synth {

struct SynthConfig {
    std::size_t keywords = 200;
    std::size_t weeks = 127;
    std::size_t clusters = 8;
    std::size_t geo_groups = 6;  // continents used, at most 7
    double season_amplitude = 0.2;
    double geo_drift = 0.0;  // yearly log-CPC drift per geo group, spread evenly over [-d, d]
    double shock_persistence = 0.98;  // AR(1) coefficient of cluster shocks
    double shock_scale = 0.3;        // stationary std of cluster shocks
    double noise_scale = 0.25;       // stationary std of keyword noise
    double noise_persistence = 0.5;  // AR(1) coefficient of keyword noise
    double tail_dof = 4.0;           // Student-t degrees of freedom of the noise
    double cluster_level_spread = 0.6;  // std of log cluster base CPC
    double keyword_level_spread = 0.03;  // std of log keyword factor
    double base_cpc = 1.5;              // median cluster base CPC
    double embedding_noise = 0.3;       // isotropic noise norm around the centroid
    std::size_t embedding_dim = proxies::kDefaultEmbeddingDim;
    double missing_probability = 0.01;
    double zero_click_probability = 0.003;
    double volume_shape = 1.2;  // Pareto tail index of keyword volumes
    bool hot_cluster = true;    // cluster 0 gets a higher level and more volatile shocks
    double hot_level = 3.0;
    double hot_volatility = 2.0;  // multiplies shock and noise scales
    std::size_t hot_max_delay = 4;  // hot-cluster keywords follow the cluster shock 0..d weeks late
    std::optional<std::size_t> regime_shift_week;
    std::size_t regime_cluster = 1;
    double regime_factor = 1.5;
    IsoWeek start{2021, 1};
    std::uint64_t seed = 7;

    void validate() const;
};

/// Ground truth, aligned with the panel keyword order.
struct SynthTruth {
    std::vector<std::string> keywords;
    std::vector<std::size_t> cluster;
    std::vector<std::size_t> geo;
    std::vector<std::string> continent;
    std::vector<double> base;
    std::vector<std::size_t> delay;            // weeks keyword k trails its cluster shock
    std::size_t shock_offset = 0;              // shocks[c][t + shock_offset] is the shock at week t
    std::vector<std::vector<double>> shocks;   // per cluster, weeks + shock_offset entries
    std::vector<std::vector<double>> seasons;  // per geo group, per week
    std::vector<double> drift;                 // per geo group, log-CPC change per week
    std::vector<std::vector<double>> latent_cpc;  // per keyword, per week
};

struct SynthOutput {
    std::vector<ingest::RawEvent> events;
    panel::WeeklyPanel panel;
    proxies::EmbeddingMatrix embeddings;
    std::vector<proxies::GeoTag> geo;
    SynthTruth truth;
};

/// log cpc(k, t) = log base_k + drift_g(k) t + season_g(k)(t) + shock_c(k)(t - delay_k) + noise. Events
/// are generated first and the panel is aggregated from them.
SynthOutput generate(const SynthConfig& cfg);

struct RecoveryReport {
    double semantic_intra_fraction = 0.0;
    double dtw_intra_fraction = 0.0;
    double geo_accuracy = 0.0;
    double chance_intra_fraction = 0.0;  // expected fraction under random neighbors
};

RecoveryReport oracle_report(const SynthTruth& truth, const proxies::SemanticGraph& graph,
                             const proxies::DtwNeighborhood& neighborhoods, const std::vector<proxies::GeoTag>& tags);

void write_truth(std::ostream& out, const SynthTruth& truth);

} // namespace cpcc::synth
