#pragma once

#include "cpcc/eval.hpp"
#include "cpcc/features.hpp"
#include "cpcc/graph_forecaster.hpp"
#include "cpcc/proxies.hpp"
#include "cpcc/ridge.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::eval {

enum class ModelKind { snaive, ridge, dcrnn };

std::string_view model_name(ModelKind m);
std::optional<ModelKind> parse_model(std::string_view name);

struct ModelSpec {
    ModelKind kind = ModelKind::ridge;
    double lambda = models::kDefaultRidgeLambda;
    models::RidgeScaling ridge_scaling = models::RidgeScaling::keyword;
    models::DcrnnHyper hyper;
    std::size_t period = models::kDefaultPeriod;
};

/// Trains on the split's training weeks and forecasts every test origin.
models::ForecastSet train_and_forecast(const ModelSpec& spec, const features::FeatureTensor& x,
                                       const panel::WeeklyPanel& panel, const proxies::SemanticGraph& graph,
                                       const SplitSpec& split, std::span<const std::size_t> horizons);

struct AblationConfig {
    std::string name;
    features::FeatureConfig features;
};

struct AblationRow {
    std::string config;
    std::string families;
    std::size_t horizon = 0;
    double smape = panel::kUndefined;
    double rmse = panel::kUndefined;
    std::array<double, 4> quadrant_smape{panel::kUndefined, panel::kUndefined, panel::kUndefined, panel::kUndefined};
    bool failed = false;
    std::string error;
};

/// One model per config on a shared split and seed. Rows are ordered by
/// horizon, then overall sMAPE; failed configs come last in each horizon.
std::vector<AblationRow> run_ablation(std::span<const AblationConfig> grid, const ModelSpec& spec,
                                      const panel::WeeklyPanel& panel, const proxies::ProxySet& proxies,
                                      const SplitSpec& split, std::span<const std::size_t> horizons,
                                      const FrontierSegmentation* segmentation);

void write_ablation(std::ostream& out, std::span<const AblationRow> rows);

/// Flat key = value grid file. Keys other than config.<name> are returned in
/// `settings`; each config.<name> value is "family,family[@geo_resolution]".
struct AblationGrid {
    std::map<std::string, std::string> settings;
    std::vector<AblationConfig> configs;
};

AblationGrid parse_ablation_grid(std::istream& in);

} // namespace cpcc::eval
