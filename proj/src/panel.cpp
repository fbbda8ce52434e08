#include "cpcc/panel.hpp"
#include "cpcc/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cpcc::panel {

std::optional<std::size_t> WeeklyPanel::week_index(IsoWeek w) const {
    const auto it = std::lower_bound(weeks.begin(), weeks.end(), w);
    if (it == weeks.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - weeks.begin());
}

WeeklyPanel WeeklyPanel::empty(std::vector<std::string> keywords, std::vector<IsoWeek> weeks) {
    WeeklyPanel p;
    const std::size_t n = keywords.size();
    const std::size_t t = weeks.size();
    p.keywords = std::move(keywords);
    p.weeks = std::move(weeks);
    p.impressions = Grid<std::int64_t>(n, t);
    p.clicks = Grid<std::int64_t>(n, t);
    p.cost = Grid<double>(n, t);
    p.cpc = Grid<double>(n, t, kUndefined);
    p.observed = Grid<std::uint8_t>(n, t);
    p.imputed = Grid<std::uint8_t>(n, t);
    p.device_counts.assign(n * t, {});
    p.searchtype_counts.assign(n * t, {});
    return p;
}

WeeklyPanel aggregate_weekly(std::span<const ingest::RawEvent> events) {
    if (events.empty()) return WeeklyPanel::empty({}, {});

    std::vector<std::string> keywords;
    keywords.reserve(events.size());
    for (const auto& e : events) keywords.push_back(e.keyword);
    std::sort(keywords.begin(), keywords.end());
    keywords.erase(std::unique(keywords.begin(), keywords.end()), keywords.end());

    IsoWeek first = iso_week_of(events.front().date);
    IsoWeek last = first;
    for (const auto& e : events) {
        const IsoWeek w = iso_week_of(e.date);
        first = std::min(first, w);
        last = std::max(last, w);
    }
    std::vector<IsoWeek> weeks;
    for (IsoWeek w = first; w <= last; w = next_week(w)) weeks.push_back(w);

    std::unordered_map<std::string, std::size_t> kw_index;
    for (std::size_t i = 0; i < keywords.size(); ++i) kw_index.emplace(keywords[i], i);

    WeeklyPanel p = WeeklyPanel::empty(std::move(keywords), std::move(weeks));
    const std::size_t T = p.n_weeks();
    std::vector<std::vector<double>> cell_costs(p.n_keywords() * T);

    for (const auto& e : events) {
        const std::size_t k = kw_index.at(e.keyword);
        const std::size_t t = static_cast<std::size_t>(weeks_between(first, iso_week_of(e.date)));
        p.observed(k, t) = 1;
        p.impressions(k, t) += e.impressions;
        p.clicks(k, t) += e.clicks.value_or(0);
        if (e.cost) cell_costs[k * T + t].push_back(*e.cost);
        if (!e.device.empty()) ++p.device_counts[k * T + t][e.device];
        if (!e.search_type.empty()) ++p.searchtype_counts[k * T + t][e.search_type];
    }

    for (std::size_t k = 0; k < p.n_keywords(); ++k) {
        for (std::size_t t = 0; t < T; ++t) {
            auto& costs = cell_costs[k * T + t];
            std::sort(costs.begin(), costs.end());
            p.cost(k, t) = std::accumulate(costs.begin(), costs.end(), 0.0);
            if (p.clicks(k, t) > 0) {
                p.cpc(k, t) = p.cost(k, t) / static_cast<double>(p.clicks(k, t));
            }
        }
    }
    return p;
}

WeeklyPanel subset(const WeeklyPanel& panel, std::span<const std::size_t> keyword_ids) {
    std::vector<std::string> keywords;
    for (auto k : keyword_ids) keywords.push_back(panel.keywords.at(k));
    WeeklyPanel out = WeeklyPanel::empty(std::move(keywords), panel.weeks);
    const std::size_t T = panel.n_weeks();
    for (std::size_t i = 0; i < keyword_ids.size(); ++i) {
        const std::size_t k = keyword_ids[i];
        for (std::size_t t = 0; t < T; ++t) {
            out.impressions(i, t) = panel.impressions(k, t);
            out.clicks(i, t) = panel.clicks(k, t);
            out.cost(i, t) = panel.cost(k, t);
            out.cpc(i, t) = panel.cpc(k, t);
            out.observed(i, t) = panel.observed(k, t);
            out.imputed(i, t) = panel.imputed(k, t);
            out.device_counts[i * T + t] = panel.device_counts[k * T + t];
            out.searchtype_counts[i * T + t] = panel.searchtype_counts[k * T + t];
        }
    }
    return out;
}

WeeklyPanel select_keywords(const WeeklyPanel& panel, int min_weeks, int window) {
    require(window > 0, ErrorCode::config, "window must be positive");
    require(static_cast<std::size_t>(window) <= panel.n_weeks(), ErrorCode::config,
            "window of " + std::to_string(window) + " weeks exceeds panel length " +
                std::to_string(panel.n_weeks()));
    const std::size_t T = panel.n_weeks();
    const std::size_t start = T - static_cast<std::size_t>(window);

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < panel.n_keywords(); ++k) {
        int count = 0;
        for (std::size_t t = start; t < T; ++t) count += panel.observed(k, t) != 0;
        if (count >= min_weeks) keep.push_back(k);
    }

    WeeklyPanel kept = subset(panel, keep);
    if (start == 0) return kept;

    // Trim to the trailing window.
    std::vector<IsoWeek> weeks(panel.weeks.begin() + static_cast<std::ptrdiff_t>(start), panel.weeks.end());
    WeeklyPanel out = WeeklyPanel::empty(kept.keywords, std::move(weeks));
    const std::size_t W = out.n_weeks();
    for (std::size_t k = 0; k < out.n_keywords(); ++k) {
        for (std::size_t t = 0; t < W; ++t) {
            const std::size_t s = start + t;
            out.impressions(k, t) = kept.impressions(k, s);
            out.clicks(k, t) = kept.clicks(k, s);
            out.cost(k, t) = kept.cost(k, s);
            out.cpc(k, t) = kept.cpc(k, s);
            out.observed(k, t) = kept.observed(k, s);
            out.imputed(k, t) = kept.imputed(k, s);
            out.device_counts[k * W + t] = kept.device_counts[k * T + s];
            out.searchtype_counts[k * W + t] = kept.searchtype_counts[k * T + s];
        }
    }
    return out;
}

ImputeResult impute_gaps(const WeeklyPanel& panel) {
    ImputeResult result;
    const std::size_t T = panel.n_weeks();

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < panel.n_keywords(); ++k) {
        bool any = false;
        for (std::size_t t = 0; t < T && !any; ++t) any = panel.has_cpc(k, t);
        if (any) {
            keep.push_back(k);
        } else {
            result.dropped.push_back(panel.keywords[k]);
        }
    }
    result.panel = subset(panel, keep);
    WeeklyPanel& p = result.panel;

    for (std::size_t k = 0; k < p.n_keywords(); ++k) {
        auto cpc = p.cpc.row(k);
        auto mask = p.imputed.row(k);
        std::size_t t = 0;
        std::optional<std::size_t> prev;  // last defined index
        while (t < T) {
            if (!std::isnan(cpc[t])) {
                prev = t;
                ++t;
                continue;
            }
            std::size_t end = t;
            while (end < T && std::isnan(cpc[end])) ++end;
            const std::size_t len = end - t;
            for (std::size_t g = t; g < end; ++g) {
                double value = 0.0;
                if (!prev) {
                    value = cpc[end];  // leading gap: first observation
                } else if (end == T || len > 2) {
                    value = cpc[*prev];  // trailing or long gap: carry forward
                } else {
                    const double frac = static_cast<double>(g - *prev) / static_cast<double>(end - *prev);
                    value = cpc[*prev] + frac * (cpc[end] - cpc[*prev]);
                }
                cpc[g] = value;
                mask[g] = 1;
                ++result.filled;
            }
            t = end;
        }
    }
    return result;
}

double quantile(std::vector<double> values, double q) {
    require(!values.empty(), ErrorCode::data, "quantile of empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

PanelStats compute_stats(const WeeklyPanel& panel, WeekRange range, std::size_t min_cells_for_cv) {
    require(range.size() > 0, ErrorCode::config, "empty week range for statistics");
    require(range.end <= panel.n_weeks(), ErrorCode::config, "statistics range exceeds panel");

    PanelStats stats;
    stats.range = range;
    stats.per_keyword.resize(panel.n_keywords());
    std::vector<double> pooled;

    for (std::size_t k = 0; k < panel.n_keywords(); ++k) {
        std::vector<double> values;
        for (std::size_t t = range.begin; t < range.end; ++t) {
            if (panel.is_actual(k, t)) values.push_back(panel.cpc(k, t));
        }
        KeywordStats& s = stats.per_keyword[k];
        s.n = values.size();
        if (values.empty()) continue;
        s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
        if (s.n >= 2) {
            double ss = 0.0;
            for (double v : values) ss += (v - s.mean) * (v - s.mean);
            s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
        }
        if (s.mean != 0.0 && s.n >= 2) s.cv = s.std / s.mean;
        s.cv_defined = s.mean != 0.0 && s.n >= std::max<std::size_t>(min_cells_for_cv, 2);
        pooled.insert(pooled.end(), values.begin(), values.end());
    }

    stats.pooled_n = pooled.size();
    if (pooled.empty()) return stats;
    const double n = static_cast<double>(pooled.size());
    stats.mean = std::accumulate(pooled.begin(), pooled.end(), 0.0) / n;
    stats.max = *std::max_element(pooled.begin(), pooled.end());
    stats.p99 = quantile(pooled, 0.99);
    double m2 = 0.0, m3 = 0.0;
    for (double v : pooled) {
        const double d = v - stats.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    stats.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    return stats;
}

std::vector<double> cpc_series(const WeeklyPanel& panel, std::size_t k, WeekRange range) {
    const auto row = panel.cpc.row(k);
    return {row.begin() + static_cast<std::ptrdiff_t>(range.begin), row.begin() + static_cast<std::ptrdiff_t>(range.end)};
}

} // namespace cpcc::panel
