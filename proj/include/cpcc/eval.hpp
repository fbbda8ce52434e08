#pragma once

#include "cpcc/forecast.hpp"
#include "cpcc/panel.hpp"

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::eval {

inline constexpr double kDefaultTestFraction = 0.20;

struct SplitSpec {
    panel::WeekRange train;
    panel::WeekRange test;
    double fraction = kDefaultTestFraction;
};

/// The last ceil(fraction * T) weeks are the test period.
SplitSpec chronological_split(std::size_t weeks, double fraction = kDefaultTestFraction);

/// Test weeks w with w + h also a test week.
std::vector<std::size_t> test_origins(const SplitSpec& split, std::size_t horizon);
std::vector<models::OriginRequest> test_requests(const SplitSpec& split, std::span<const std::size_t> horizons);

/// 100 * mean(2 |p - a| / (|a| + |p|)); terms with |a| + |p| = 0 count as 0.
double smape(std::span<const double> actual, std::span<const double> predicted);
double rmse(std::span<const double> actual, std::span<const double> predicted);

/// Level / volatility quadrant, e.g. high/low = high mean CPC, low CV.
enum class Quadrant { low_low = 0, low_high = 1, high_low = 2, high_high = 3 };
inline constexpr std::array<Quadrant, 4> kQuadrants{Quadrant::low_low, Quadrant::low_high, Quadrant::high_low,
                                                    Quadrant::high_high};
std::string_view quadrant_name(Quadrant q);

struct FrontierSegmentation {
    std::vector<std::optional<Quadrant>> quadrant;  // per keyword; nullopt = excluded
    double mean_median = 0.0;
    double cv_median = 0.0;
    std::vector<std::size_t> excluded;
    std::array<std::size_t, 4> counts{};
};

/// Median splits on training-range mean CPC and CV; values equal to a median
/// go to the low side. Keywords with undefined CV are excluded.
FrontierSegmentation frontier_segment(const panel::PanelStats& stats);

void write_frontier(std::ostream& out, const FrontierSegmentation& seg, const panel::PanelStats& stats,
                    const panel::WeeklyPanel& panel);

struct Aggregate {
    double mean = panel::kUndefined;
    double std = panel::kUndefined;  // sample (n - 1)
    std::size_t n = 0;
};

/// Mean and sample std; values are summed in sorted order so the result does
/// not depend on input order.
Aggregate aggregate(std::vector<double> values);

struct KeywordScore {
    std::size_t keyword = 0;
    std::size_t pairs = 0;
    double smape = 0.0;
    double rmse = 0.0;
};

struct HorizonReport {
    std::string model;
    std::size_t horizon = 0;
    std::vector<KeywordScore> per_keyword;  // ascending keyword id
    Aggregate smape;
    Aggregate rmse;
    std::array<Aggregate, 4> quadrant_smape;
    std::array<Aggregate, 4> quadrant_rmse;
    std::size_t scored_pairs = 0;
    std::size_t keywords_without_pairs = 0;
};

struct EvalReport {
    std::string model;
    std::vector<HorizonReport> horizons;  // ascending horizon

    const HorizonReport& at(std::size_t horizon) const;
};

/// Scores every entry whose origin and target both lie in the test period
/// and whose target is an actual (non-imputed) CPC value.
EvalReport evaluate(const models::ForecastSet& forecasts, const panel::WeeklyPanel& panel, const SplitSpec& split,
                    const FrontierSegmentation* segmentation);

/// per_keyword.csv, summary.csv and long.csv in `dir`.
void write_reports(const std::filesystem::path& dir, std::span<const EvalReport> reports,
                   const panel::WeeklyPanel& panel);
void write_summary(std::ostream& out, std::span<const EvalReport> reports);

} // namespace cpcc::eval
