#include "cpcc/error.hpp"
#include "cpcc/forecast.hpp"

#include <cmath>

namespace cpcc::models {

ForecastSet seasonal_naive(const panel::WeeklyPanel& panel, std::span<const OriginRequest> requests,
                           std::size_t period) {
    require(period > 0, ErrorCode::config, "seasonal period must be positive");
    ForecastSet out;
    out.model = "snaive";
    out.config_hash = "period=" + std::to_string(period);
    for (const auto& req : requests) {
        require(req.horizon > 0, ErrorCode::config, "horizons must be positive");
        // Step back whole periods so the lookup never passes the origin.
        const std::size_t back = period * ((req.horizon + period - 1) / period);
        for (std::size_t t : req.origins) {
            require(t < panel.n_weeks(), ErrorCode::config,
                    "origin " + std::to_string(t) + " is outside the panel");
            for (std::size_t k = 0; k < panel.n_keywords(); ++k) {
                double v = panel::kUndefined;
                if (t + req.horizon >= back) v = panel.cpc(k, t + req.horizon - back);
                if (std::isnan(v)) v = panel.cpc(k, t);
                require(!std::isnan(v), ErrorCode::data,
                        "seasonal naive: CPC undefined for '" + panel.keywords[k] + "'; impute gaps first");
                out.entries.push_back({k, t, req.horizon, clamp_prediction(v)});
            }
        }
    }
    return out;
}

} // namespace cpcc::models
