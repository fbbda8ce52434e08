#include "cpcc/dtw.hpp"
#include "cpcc/error.hpp"
#include "cpcc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cpcc::proxies {

double dtw_distance(std::span<const double> a, std::span<const double> b, std::size_t radius) {
    require(a.size() == b.size(), ErrorCode::data, "dtw_distance: series lengths differ");
    require(!a.empty(), ErrorCode::data, "dtw_distance: empty series");
    const std::size_t n = a.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<double> prev(n, inf), cur(n, inf);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(cur.begin(), cur.end(), inf);
        const std::size_t lo = i > radius ? i - radius : 0;
        const std::size_t hi = std::min(n - 1, i + radius);
        for (std::size_t j = lo; j <= hi; ++j) {
            const double d = a[i] - b[j];
            const double cost = d * d;
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = inf;
                if (i > 0) best = std::min(best, prev[j]);
                if (j > 0) best = std::min(best, cur[j - 1]);
                if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
            }
            cur[j] = i == 0 && j == 0 ? cost : cost + best;
        }
        std::swap(prev, cur);
    }
    const double total = prev[n - 1];
    require(std::isfinite(total), ErrorCode::numeric, "dtw_distance: no admissible warping path");
    return std::sqrt(total);
}

std::vector<double> z_normalize(std::span<const double> x) {
    std::vector<double> out(x.size(), 0.0);
    if (x.empty()) return out;
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / n);
    if (!(sd > 0.0)) return out;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mean) / sd;
    return out;
}

DtwNeighborhood build_dtw_neighborhoods(const panel::WeeklyPanel& panel, panel::WeekRange range, std::size_t m,
                                        std::size_t radius) {
    require(range.end <= panel.n_weeks(), ErrorCode::config, "DTW range exceeds panel");
    require(range.size() >= kMinDtwWeeks, ErrorCode::config,
            "DTW range must span at least " + std::to_string(kMinDtwWeeks) + " weeks");
    const std::size_t N = panel.n_keywords();
    require(m > 0 && m < N, ErrorCode::config,
            "DTW neighbor count m=" + std::to_string(m) + " must be in [1, N-1] with N=" + std::to_string(N));

    std::vector<std::vector<double>> series(N);
    for (std::size_t k = 0; k < N; ++k) {
        const auto raw = panel::cpc_series(panel, k, range);
        for (double v : raw) {
            require(!std::isnan(v), ErrorCode::data,
                    "keyword '" + panel.keywords[k] + "' has CPC gaps in the DTW range; impute first");
        }
        series[k] = z_normalize(raw);
    }

    // Upper triangle, one row per task; mirrored afterwards.
    std::vector<std::vector<double>> dist(N, std::vector<double>(N, 0.0));
    parallel_for(N, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < N; ++j) dist[i][j] = dtw_distance(series[i], series[j], radius);
    });
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < i; ++j) dist[i][j] = dist[j][i];
    }

    DtwNeighborhood nb;
    nb.radius = radius;
    nb.m = m;
    nb.range = range;
    nb.lists.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        std::vector<Neighbor> all;
        all.reserve(N - 1);
        for (std::size_t j = 0; j < N; ++j) {
            if (j != i) all.push_back({j, dist[i][j]});
        }
        std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m), all.end(),
                          [](const Neighbor& a, const Neighbor& b) {
                              return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
                          });
        all.resize(m);
        nb.lists[i] = std::move(all);
    }
    return nb;
}

} // namespace cpcc::proxies
