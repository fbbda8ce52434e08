#pragma once

#include "cpcc/proxies.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::features {

/// Catalog order follows the enum order.
enum class Family { core, geo, sem_cpc, dtw_cpc, calendar, mix, noise };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
/// Comma-separated list such as "core,geo,sem_cpc"; "all" enables every family
/// except noise.
std::vector<Family> parse_families(std::string_view list);

enum class Aggregate { mean, median };

struct FeatureConfig {
    std::vector<Family> families{Family::core};
    proxies::GeoLevel geo_resolution = proxies::GeoLevel::continent;
    std::vector<std::size_t> own_lags{1, 2, 4, 8, 12};
    std::vector<std::size_t> neighbor_lags{1, 2, 4};
    Aggregate neighbor_aggregate = Aggregate::mean;
    /// End (exclusive) of the training weeks; scales the linear week index and
    /// fixes the device / search-type label sets. 0 means the whole panel.
    std::size_t train_end = 0;
    std::size_t noise_features = 32;
    std::uint64_t noise_seed = 0;

    bool has(Family f) const;
    /// Canonical one-line description; equal configs give equal strings.
    std::string describe() const;
    std::string hash() const;
};

struct FeatureDescriptor {
    std::string name;
    Family family = Family::core;
    std::size_t lag = 0;
    bool cpc_units = false;  // value is on the CPC scale of some keyword

    bool operator==(const FeatureDescriptor&) const = default;
};

/// N x T x F covariates. Row (k, t) only depends on data dated <= t and on
/// static attributes. A forecast issued after week t reads row t + 1, whose
/// lags all reach back to week t or earlier.
struct FeatureTensor {
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t f = 0;
    std::vector<double> values;
    std::vector<FeatureDescriptor> catalog;
    std::vector<std::size_t> origin_weeks;
    std::string config_hash;

    double at(std::size_t k, std::size_t week, std::size_t j) const { return values[(k * t + week) * f + j]; }
    std::span<const double> row(std::size_t k, std::size_t week) const { return {values.data() + (k * t + week) * f, f}; }
    std::span<double> row(std::size_t k, std::size_t week) { return {values.data() + (k * t + week) * f, f}; }
    std::optional<std::size_t> index_of(std::string_view name) const;
};

/// Feature row read by a forecast issued after week `origin`.
constexpr std::size_t feature_row(std::size_t origin) { return origin + 1; }

FeatureTensor build_features(const panel::WeeklyPanel& panel, const proxies::SemanticGraph& graph,
                             const proxies::DtwNeighborhood& dtw, std::span<const proxies::GeoTag> geo,
                             const proxies::Gazetteer& gazetteer, const FeatureConfig& cfg);

FeatureTensor build_features(const panel::WeeklyPanel& panel, const proxies::ProxySet& proxies,
                             const FeatureConfig& cfg);

using FeatureBuilder = std::function<FeatureTensor(const panel::WeeklyPanel&)>;

struct LeakageReport {
    bool pass = true;
    std::string feature;  // first offending feature, empty on pass
    std::size_t keyword = 0;
    std::size_t week = 0;
};

/// Perturbs every panel value dated after `origin`, rebuilds and compares all
/// rows at weeks <= origin bit for bit.
LeakageReport verify_leakage_free(const FeatureBuilder& builder, const panel::WeeklyPanel& panel,
                                  std::size_t origin, std::uint64_t seed = 1);

} // namespace cpcc::features
