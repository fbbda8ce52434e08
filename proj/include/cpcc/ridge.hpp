#pragma once

#include "cpcc/features.hpp"
#include "cpcc/forecast.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::models {

inline constexpr double kDefaultRidgeLambda = 1.0;

struct RidgeHead {
    std::size_t horizon = 0;
    std::vector<double> weights;  // on standardized features
    double intercept = 0.0;
    std::size_t rows = 0;
    double train_rmse = 0.0;
};

/// keyword: CPC-valued features and the target are divided by the keyword's
/// training mean CPC before the fit, and predictions multiplied back.
enum class RidgeScaling { none, keyword };

std::string_view scaling_name(RidgeScaling s);
std::optional<RidgeScaling> parse_scaling(std::string_view name);

/// Direct multi-horizon ridge regression on the feature tensor. Features are
/// standardized with training-row statistics; zero-variance columns keep a
/// weight of 0.
struct RidgeModel {
    double lambda = kDefaultRidgeLambda;
    RidgeScaling scaling = RidgeScaling::none;
    std::vector<double> keyword_scale;  // empty unless scaling == keyword
    std::vector<double> mean;
    std::vector<double> scale;
    std::vector<features::FeatureDescriptor> catalog;
    std::string feature_hash;
    panel::WeekRange train;
    std::vector<RidgeHead> heads;

    const RidgeHead& head(std::size_t horizon) const;
    /// Linear output for an already scaled row.
    double predict_raw(const RidgeHead& h, std::span<const double> row) const;
    /// Unclamped prediction in CPC units for keyword k.
    double predict_keyword(const RidgeHead& h, std::size_t k, std::span<const double> row) const;
    std::string config_hash() const;
};

/// Rows pair feature row feature_row(t) with the actual (non-imputed) CPC at
/// t + h, both inside `train`.
RidgeModel fit_ridge(const features::FeatureTensor& x, const panel::WeeklyPanel& panel, const ForecastTask& task,
                     double lambda, panel::WeekRange train, RidgeScaling scaling = RidgeScaling::none);

ForecastSet predict(const RidgeModel& model, const features::FeatureTensor& x,
                    std::span<const OriginRequest> requests);

} // namespace cpcc::models
