#pragma once

#include "cpcc/calendar.hpp"
#include "cpcc/ingest.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cpcc::panel {

/// Dense keyword x week grid, row-major by keyword.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    bool operator==(const Grid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using CountMap = std::map<std::string, std::int64_t>;

inline constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

/// Keyword x ISO-week panel. Weeks are contiguous and strictly increasing.
/// cpc is NaN where undefined; before imputation it is defined iff
/// clicks > 0 and then equals cost / clicks.
struct WeeklyPanel {
    std::vector<std::string> keywords;
    std::vector<IsoWeek> weeks;
    Grid<std::int64_t> impressions;
    Grid<std::int64_t> clicks;
    Grid<double> cost;
    Grid<double> cpc;
    Grid<std::uint8_t> observed;  // any event contributed
    Grid<std::uint8_t> imputed;   // cpc filled by impute_gaps
    std::vector<CountMap> device_counts;      // row-major N x T
    std::vector<CountMap> searchtype_counts;  // row-major N x T

    std::size_t n_keywords() const { return keywords.size(); }
    std::size_t n_weeks() const { return weeks.size(); }

    bool has_cpc(std::size_t k, std::size_t t) const { return !std::isnan(cpc(k, t)); }
    /// An actually observed CPC value (defined and not imputed).
    bool is_actual(std::size_t k, std::size_t t) const { return has_cpc(k, t) && imputed(k, t) == 0; }

    const CountMap& devices(std::size_t k, std::size_t t) const { return device_counts[k * n_weeks() + t]; }
    const CountMap& search_types(std::size_t k, std::size_t t) const { return searchtype_counts[k * n_weeks() + t]; }

    std::optional<std::size_t> week_index(IsoWeek w) const;

    /// Empty panel with all grids sized for the given keywords and weeks.
    static WeeklyPanel empty(std::vector<std::string> keywords, std::vector<IsoWeek> weeks);
};

/// Half-open range of week indices.
struct WeekRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end > begin ? end - begin : 0; }
};

/// Sums per (keyword, ISO week). Keywords are ordered lexicographically; cost
/// sums are reduced in ascending value order so the result does not depend on
/// event order.
WeeklyPanel aggregate_weekly(std::span<const ingest::RawEvent> events);

inline constexpr int kDefaultMinWeeks = 110;
inline constexpr int kDefaultWindow = 127;

/// Trims the panel to its trailing `window` weeks and keeps keywords observed
/// in at least `min_weeks` of them.
WeeklyPanel select_keywords(const WeeklyPanel& panel, int min_weeks = kDefaultMinWeeks,
                            int window = kDefaultWindow);

struct ImputeResult {
    WeeklyPanel panel;
    std::vector<std::string> dropped;  // keywords without any CPC value
    std::size_t filled = 0;
};

/// Fills CPC gaps: interior gaps of <= 2 weeks linearly, longer interior and
/// trailing gaps by carrying the last observation forward, leading gaps with
/// the first observation. Volumes are left untouched.
ImputeResult impute_gaps(const WeeklyPanel& panel);

struct KeywordStats {
    double mean = kUndefined;
    double std = kUndefined;  // sample (n - 1)
    double cv = kUndefined;
    std::size_t n = 0;
    bool cv_defined = false;
};

struct PanelStats {
    WeekRange range;
    std::vector<KeywordStats> per_keyword;
    double mean = kUndefined;
    double max = kUndefined;
    double p99 = kUndefined;
    double skewness = kUndefined;
    std::size_t pooled_n = 0;
};

inline constexpr std::size_t kMinCellsForCv = 4;

/// Statistics over actual (observed, non-imputed) CPC cells in `range`.
/// CV is flagged undefined for a zero mean or fewer than `min_cells_for_cv`
/// cells. Skewness is the moment coefficient m3 / m2^(3/2).
PanelStats compute_stats(const WeeklyPanel& panel, WeekRange range,
                         std::size_t min_cells_for_cv = kMinCellsForCv);

/// Quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

/// Panel restricted to (and reordered by) the given keyword indices.
WeeklyPanel subset(const WeeklyPanel& panel, std::span<const std::size_t> keyword_ids);

/// CPC series of keyword k over a range.
std::vector<double> cpc_series(const WeeklyPanel& panel, std::size_t k, WeekRange range);

} // namespace cpcc::panel
