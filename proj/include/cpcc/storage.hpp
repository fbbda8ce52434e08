#pragma once

#include "cpcc/features.hpp"
#include "cpcc/graph_forecaster.hpp"
#include "cpcc/panel.hpp"
#include "cpcc/proxies.hpp"
#include "cpcc/ridge.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cpcc::storage {

namespace fs = std::filesystem;

/// Extra key/value provenance stored next to an artifact (source paths etc.).
using Sources = std::map<std::string, std::string>;

/// Little-endian 32-bit reals.
void write_f32(const fs::path& path, std::span<const float> values);
std::vector<float> read_f32(const fs::path& path);

/// Panel directory: impressions.csv, clicks.csv, cost.csv, cpc.csv (rows =
/// keywords, columns = ISO weeks) and panel.json with keywords, weeks, masks
/// and per-cell device / search-type counts.
void write_panel(const fs::path& dir, const panel::WeeklyPanel& p);
panel::WeeklyPanel read_panel(const fs::path& dir);

/// Proxy directory: embeddings.jsonl, edges.csv, dtw.csv, geo.csv,
/// gazetteer.csv and proxies.json.
void write_proxies(const fs::path& dir, const proxies::ProxySet& set, const proxies::ProxyConfig& cfg,
                   std::span<const std::string> keywords);

struct StoredProxies {
    proxies::ProxySet set;
    proxies::ProxyConfig config;
};

StoredProxies read_proxies(const fs::path& dir, const panel::WeeklyPanel& p);

/// Feature directory: features.bin (N x T x F float32) and features.json.
void write_features(const fs::path& dir, const features::FeatureTensor& x, const features::FeatureConfig& cfg,
                    const Sources& sources);

struct StoredFeatures {
    features::FeatureTensor tensor;
    std::string description;
    Sources sources;
};

StoredFeatures read_features(const fs::path& dir);

/// Checkpoint directory: checkpoint.json plus params.bin (float32) for ridge
/// and dcrnn. Ridge blob layout: mean, scale, keyword scale (N or 0), then
/// per head weights followed by the intercept.
struct Checkpoint {
    std::string model;  // snaive | ridge | dcrnn
    std::string name;   // label used in forecasts and reports
    std::vector<std::size_t> horizons;
    std::size_t period = models::kDefaultPeriod;
    std::optional<models::RidgeModel> ridge;
    std::optional<models::GraphForecaster> dcrnn;
    std::string config_hash;
    panel::WeekRange train;
    Sources sources;
};

void write_checkpoint(const fs::path& dir, const Checkpoint& c);
Checkpoint read_checkpoint(const fs::path& dir);

/// Directory for an output file; throws E_IO when it cannot be created.
void ensure_dir(const fs::path& dir);
void ensure_parent(const fs::path& file);

} // namespace cpcc::storage
