#include "cpcc/ablation.hpp"
#include "cpcc/error.hpp"
#include "cpcc/text_format.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

namespace cpcc::eval {

std::string_view model_name(ModelKind m) {
    switch (m) {
        case ModelKind::snaive: return "snaive";
        case ModelKind::ridge: return "ridge";
        case ModelKind::dcrnn: return "dcrnn";
    }
    return "ridge";
}

std::optional<ModelKind> parse_model(std::string_view name) {
    for (auto m : {ModelKind::snaive, ModelKind::ridge, ModelKind::dcrnn}) {
        if (model_name(m) == name) return m;
    }
    return std::nullopt;
}

models::ForecastSet train_and_forecast(const ModelSpec& spec, const features::FeatureTensor& x,
                                       const panel::WeeklyPanel& panel, const proxies::SemanticGraph& graph,
                                       const SplitSpec& split, std::span<const std::size_t> horizons) {
    const auto requests = test_requests(split, horizons);
    models::ForecastTask task;
    task.horizons.assign(horizons.begin(), horizons.end());
    task.window = spec.hyper.window;
    switch (spec.kind) {
        case ModelKind::snaive: return models::seasonal_naive(panel, requests, spec.period);
        case ModelKind::ridge: {
            const auto m = models::fit_ridge(x, panel, task, spec.lambda, split.train, spec.ridge_scaling);
            return models::predict(m, x, requests);
        }
        case ModelKind::dcrnn: {
            const auto m = models::fit_graph_forecaster(x, panel, graph, task, spec.hyper, split.train);
            return models::predict(m, x, graph, requests);
        }
    }
    fail(ErrorCode::config, "unknown model");
}

std::vector<AblationRow> run_ablation(std::span<const AblationConfig> grid, const ModelSpec& spec,
                                      const panel::WeeklyPanel& panel, const proxies::ProxySet& proxies,
                                      const SplitSpec& split, std::span<const std::size_t> horizons,
                                      const FrontierSegmentation* segmentation) {
    std::vector<AblationRow> rows;
    for (const auto& cfg : grid) {
        const std::string families = cfg.features.describe();
        try {
            auto fc = cfg.features;
            fc.train_end = split.train.end;
            const auto x = features::build_features(panel, proxies, fc);
            const auto forecasts = train_and_forecast(spec, x, panel, proxies.graph, split, horizons);
            const auto report = evaluate(forecasts, panel, split, segmentation);
            for (auto h : horizons) {
                const auto& hr = report.at(h);
                AblationRow row;
                row.config = cfg.name;
                row.families = families;
                row.horizon = h;
                row.smape = hr.smape.mean;
                row.rmse = hr.rmse.mean;
                for (std::size_t q = 0; q < 4; ++q) row.quadrant_smape[q] = hr.quadrant_smape[q].mean;
                rows.push_back(std::move(row));
            }
        } catch (const Error& e) {
            for (auto h : horizons) {
                AblationRow row;
                row.config = cfg.name;
                row.families = families;
                row.horizon = h;
                row.failed = true;
                row.error = std::string(e.tag()) + ": " + e.what();
                rows.push_back(std::move(row));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const AblationRow& a, const AblationRow& b) {
        if (a.horizon != b.horizon) return a.horizon < b.horizon;
        if (a.failed != b.failed) return !a.failed;
        return a.smape < b.smape;
    });
    return rows;
}

void write_ablation(std::ostream& out, std::span<const AblationRow> rows) {
    out << "config,horizon,smape,rmse";
    for (auto q : kQuadrants) out << ",smape_" << quadrant_name(q);
    out << ",status,families\n";
    for (const auto& r : rows) {
        out << csv_field(r.config) << ',' << r.horizon << ',' << format_double(r.smape) << ','
            << format_double(r.rmse);
        for (double v : r.quadrant_smape) out << ',' << format_double(v);
        out << ',' << csv_field(r.failed ? "failed: " + r.error : "ok") << ',' << csv_field(r.families) << '\n';
    }
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

AblationGrid parse_ablation_grid(std::istream& in) {
    AblationGrid g;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#' || text.front() == ';') continue;
        const auto eq = text.find('=');
        require(eq != std::string::npos, ErrorCode::config,
                "grid line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(std::string_view(text).substr(0, eq));
        const auto value = trim(std::string_view(text).substr(eq + 1));
        if (key.rfind("config.", 0) == 0) {
            AblationConfig cfg;
            cfg.name = key.substr(7);
            require(!cfg.name.empty(), ErrorCode::config, "grid line " + std::to_string(line_no) + ": empty config name");
            std::string_view families = value;
            if (const auto at = value.find('@'); at != std::string::npos) {
                families = std::string_view(value).substr(0, at);
                const auto res = proxies::parse_geo_level(trim(std::string_view(value).substr(at + 1)));
                require(res.has_value(), ErrorCode::config,
                        "grid line " + std::to_string(line_no) + ": unknown geo resolution");
                cfg.features.geo_resolution = *res;
            }
            cfg.features.families = features::parse_families(families);
            g.configs.push_back(std::move(cfg));
        } else {
            g.settings[key] = value;
        }
    }
    require(!g.configs.empty(), ErrorCode::config, "grid file defines no config.<name> entries");
    return g;
}

} // namespace cpcc::eval
