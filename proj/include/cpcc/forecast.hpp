#pragma once

#include "cpcc/panel.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cpcc::models {

struct ForecastTask {
    std::vector<std::size_t> horizons{1, 6, 12};
    std::size_t window = 12;  // encoder input length for the graph forecaster
};

/// Origins to forecast from for one horizon. Origin t means the forecast is
/// issued after week t and targets week t + horizon.
struct OriginRequest {
    std::size_t horizon = 1;
    std::vector<std::size_t> origins;
};

struct ForecastEntry {
    std::size_t keyword = 0;
    std::size_t origin = 0;
    std::size_t horizon = 0;
    double value = 0.0;

    bool operator==(const ForecastEntry&) const = default;
};

struct ForecastSet {
    std::string model;
    std::string config_hash;
    std::vector<ForecastEntry> entries;

    bool operator==(const ForecastSet&) const = default;
};

/// Training-range mean of actual CPC per keyword. Keywords without any
/// actual value in range get the pooled mean; a zero mean becomes 1.
std::vector<double> keyword_scales(const panel::WeeklyPanel& panel, panel::WeekRange train);

/// Negative raw outputs become 0; non-finite outputs are fatal.
double clamp_prediction(double raw);

inline constexpr std::size_t kDefaultPeriod = 52;

/// cpc(k, t + h - period) when that week lies inside the panel, otherwise the
/// last value cpc(k, t).
ForecastSet seasonal_naive(const panel::WeeklyPanel& panel, std::span<const OriginRequest> requests,
                           std::size_t period = kDefaultPeriod);

/// CSV columns model,config_hash,keyword,origin_week,horizon,prediction.
void write_forecasts(std::ostream& out, const ForecastSet& f, const panel::WeeklyPanel& panel);
void write_forecasts(const std::filesystem::path& path, const ForecastSet& f, const panel::WeeklyPanel& panel);
ForecastSet read_forecasts(std::istream& in, const panel::WeeklyPanel& panel);
ForecastSet read_forecasts(const std::filesystem::path& path, const panel::WeeklyPanel& panel);

} // namespace cpcc::models
