#pragma once

#include "cpcc/panel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cpcc::proxies {

inline constexpr std::size_t kDefaultDtwNeighbors = 10;
inline constexpr std::size_t kDefaultDtwBand = 8;
inline constexpr std::size_t kMinDtwWeeks = 8;

/// Banded dynamic time warping between equal-length series. Squared
/// pointwise cost, symmetric step pattern (match / insertion / deletion),
/// cells with |i - j| > radius excluded. Returns sqrt of the accumulated cost.
double dtw_distance(std::span<const double> a, std::span<const double> b, std::size_t radius);

/// (x - mean) / std with the population std; constant series map to zeros.
std::vector<double> z_normalize(std::span<const double> x);

struct Neighbor {
    std::size_t id = 0;
    double distance = 0.0;

    bool operator==(const Neighbor&) const = default;
};

/// Per-keyword behavioral neighbors sorted by ascending distance (ties by id).
struct DtwNeighborhood {
    std::size_t radius = kDefaultDtwBand;
    std::size_t m = kDefaultDtwNeighbors;
    panel::WeekRange range;
    std::vector<std::vector<Neighbor>> lists;
};

/// Uses only CPC values inside `range` (the training weeks), z-normalized per
/// keyword. The range must be gap-free (run impute_gaps first).
DtwNeighborhood build_dtw_neighborhoods(const panel::WeeklyPanel& panel, panel::WeekRange range,
                                        std::size_t m = kDefaultDtwNeighbors,
                                        std::size_t radius = kDefaultDtwBand);

} // namespace cpcc::proxies
