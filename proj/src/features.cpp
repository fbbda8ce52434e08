#include "cpcc/features.hpp"
#include "cpcc/error.hpp"
#include "cpcc/parallel.hpp"
#include "cpcc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <set>
#include <sstream>

namespace cpcc::features {

namespace {

constexpr Family kAllFamilies[] = {Family::core,     Family::geo, Family::sem_cpc, Family::dtw_cpc,
                                   Family::calendar, Family::mix, Family::noise};

std::string join_lags(const std::vector<std::size_t>& lags) {
    std::string s;
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(lags[i]);
    }
    return s;
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::core: return "core";
        case Family::geo: return "geo";
        case Family::sem_cpc: return "sem_cpc";
        case Family::dtw_cpc: return "dtw_cpc";
        case Family::calendar: return "calendar";
        case Family::mix: return "mix";
        case Family::noise: return "noise";
    }
    return "core";
}

std::optional<Family> parse_family(std::string_view name) {
    for (auto f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::vector<Family> parse_families(std::string_view list) {
    std::set<Family> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = std::min(list.find(',', pos), list.size());
        auto item = list.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item == "all") {
            for (auto f : kAllFamilies) {
                if (f != Family::noise) out.insert(f);
            }
        } else if (!item.empty()) {
            const auto f = parse_family(item);
            require(f.has_value(), ErrorCode::config, "unknown feature family '" + std::string(item) + "'");
            out.insert(*f);
        }
        pos = comma + 1;
    }
    require(out.contains(Family::core), ErrorCode::config, "the core feature family must be enabled");
    return {out.begin(), out.end()};
}

bool FeatureConfig::has(Family f) const { return std::find(families.begin(), families.end(), f) != families.end(); }

std::string FeatureConfig::describe() const {
    std::ostringstream s;
    s << "families=";
    bool first = true;
    for (auto f : kAllFamilies) {
        if (!has(f)) continue;
        if (!first) s << ',';
        s << family_name(f);
        first = false;
    }
    s << ";geo_res=" << proxies::geo_level_name(geo_resolution) << ";own_lags=" << join_lags(own_lags)
      << ";neighbor_lags=" << join_lags(neighbor_lags)
      << ";aggregate=" << (neighbor_aggregate == Aggregate::mean ? "mean" : "median") << ";train_end=" << train_end;
    if (has(Family::noise)) s << ";noise=" << noise_features << '@' << noise_seed;
    return s.str();
}

std::string FeatureConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(describe())));
    return buf;
}

std::optional<std::size_t> FeatureTensor::index_of(std::string_view name) const {
    for (std::size_t j = 0; j < catalog.size(); ++j) {
        if (catalog[j].name == name) return j;
    }
    return std::nullopt;
}

namespace {

std::size_t lagged(std::size_t t, std::size_t lag) { return t >= lag ? t - lag : 0; }

double median_of(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<std::string> mix_labels(const std::vector<panel::CountMap>& maps, std::size_t n, std::size_t weeks,
                                    std::size_t end) {
    std::set<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < end; ++t) {
            for (const auto& [label, _] : maps[k * weeks + t]) labels.insert(label);
        }
    }
    return {labels.begin(), labels.end()};
}

struct Layout {
    std::vector<FeatureDescriptor> catalog;
    std::vector<std::string> geo_labels;
    std::vector<std::string> devices;
    std::vector<std::string> search_types;
};

Layout make_layout(const panel::WeeklyPanel& panel, const proxies::Gazetteer& gazetteer, const FeatureConfig& cfg,
                   std::size_t train_end) {
    Layout l;
    auto add = [&](std::string name, Family fam, std::size_t lag, bool cpc_units) {
        l.catalog.push_back({std::move(name), fam, lag, cpc_units});
    };
    for (auto fam : kAllFamilies) {
        if (!cfg.has(fam)) continue;
        switch (fam) {
            case Family::core:
                for (auto lag : cfg.own_lags) add("cpc_lag" + std::to_string(lag), fam, lag, true);
                add("log_clicks_lag1", fam, 1, false);
                add("log_impressions_lag1", fam, 1, false);
                add("imputed_share_4w", fam, 1, false);
                break;
            case Family::geo: {
                const std::string res(proxies::geo_level_name(cfg.geo_resolution));
                l.geo_labels = gazetteer.labels(cfg.geo_resolution);
                for (const auto& label : l.geo_labels) add("geo_" + res + "=" + label, fam, 0, false);
                add("geo_" + res + "=unknown", fam, 0, false);
                break;
            }
            case Family::sem_cpc:
            case Family::dtw_cpc: {
                const std::string agg = cfg.neighbor_aggregate == Aggregate::mean ? "mean" : "median";
                for (auto lag : cfg.neighbor_lags) {
                    add(std::string(family_name(fam)) + "_" + agg + "_lag" + std::to_string(lag), fam, lag, true);
                }
                break;
            }
            case Family::calendar:
                add("week_sin", fam, 0, false);
                add("week_cos", fam, 0, false);
                add("week_index", fam, 0, false);
                break;
            case Family::mix:
                l.devices = mix_labels(panel.device_counts, panel.n_keywords(), panel.n_weeks(), train_end);
                l.search_types = mix_labels(panel.searchtype_counts, panel.n_keywords(), panel.n_weeks(), train_end);
                for (const auto& d : l.devices) add("device_share=" + d + "_lag1", fam, 1, false);
                for (const auto& s : l.search_types) add("search_type_share=" + s + "_lag1", fam, 1, false);
                break;
            case Family::noise:
                for (std::size_t j = 0; j < cfg.noise_features; ++j) add("noise_" + std::to_string(j), fam, 0, false);
                break;
        }
    }
    return l;
}

void write_shares(const panel::CountMap& counts, const std::vector<std::string>& labels, double* out) {
    double total = 0.0;
    for (const auto& label : labels) {
        const auto it = counts.find(label);
        if (it != counts.end()) total += static_cast<double>(it->second);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto it = counts.find(labels[i]);
        out[i] = total > 0.0 && it != counts.end() ? static_cast<double>(it->second) / total : 0.0;
    }
}

} // namespace

FeatureTensor build_features(const panel::WeeklyPanel& panel, const proxies::SemanticGraph& graph,
                             const proxies::DtwNeighborhood& dtw, std::span<const proxies::GeoTag> geo,
                             const proxies::Gazetteer& gazetteer, const FeatureConfig& cfg) {
    const std::size_t n = panel.n_keywords();
    const std::size_t weeks = panel.n_weeks();
    require(cfg.has(Family::core), ErrorCode::config, "the core feature family must be enabled");
    require(!cfg.own_lags.empty(), ErrorCode::config, "own-lag set is empty");
    require(n > 0 && weeks > 0, ErrorCode::data, "cannot build features for an empty panel");
    if (cfg.has(Family::sem_cpc)) {
        require(graph.nodes == n && graph.edges.size() == n, ErrorCode::data,
                "semantic graph has " + std::to_string(graph.nodes) + " nodes, panel has " + std::to_string(n) +
                    " keywords");
    }
    if (cfg.has(Family::dtw_cpc)) {
        require(dtw.lists.size() == n, ErrorCode::data, "DTW neighborhoods are not aligned with the panel keywords");
    }
    if (cfg.has(Family::geo)) {
        require(geo.size() == n, ErrorCode::data, "geo tags are not aligned with the panel keywords");
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < weeks; ++t) {
            require(panel.has_cpc(k, t), ErrorCode::data,
                    "CPC undefined for '" + panel.keywords[k] + "' in week " + std::to_string(t) +
                        "; impute gaps before building features");
        }
    }

    const std::size_t train_end = cfg.train_end == 0 ? weeks : std::min(cfg.train_end, weeks);
    const Layout layout = make_layout(panel, gazetteer, cfg, train_end);

    FeatureTensor x;
    x.n = n;
    x.t = weeks;
    x.f = layout.catalog.size();
    x.catalog = layout.catalog;
    x.config_hash = cfg.hash();
    x.values.assign(n * weeks * x.f, 0.0);

    const std::size_t max_lag = *std::max_element(cfg.own_lags.begin(), cfg.own_lags.end());
    for (std::size_t t = max_lag > 0 ? max_lag - 1 : 0; feature_row(t) < weeks; ++t) x.origin_weeks.push_back(t);

    const auto& cpc = panel.cpc;
    const double index_scale = train_end > 1 ? 1.0 / static_cast<double>(train_end - 1) : 1.0;

    // Distractors: random walks shared by every keyword, independent of the panel.
    std::vector<std::vector<double>> noise;
    if (cfg.has(Family::noise)) {
        noise.assign(cfg.noise_features, std::vector<double>(weeks, 0.0));
        for (std::size_t j = 0; j < cfg.noise_features; ++j) {
            Rng rng = Rng::stream(cfg.noise_seed, "noise/" + std::to_string(j));
            double level = 0.0;
            for (std::size_t t = 0; t < weeks; ++t) {
                level += rng.normal();
                noise[j][t] = level;
            }
        }
    }

    parallel_for(n, [&](std::size_t k) {
        std::size_t geo_slot = layout.geo_labels.size();
        if (cfg.has(Family::geo)) {
            if (const auto& label = geo[k].at(cfg.geo_resolution)) {
                const auto it = std::lower_bound(layout.geo_labels.begin(), layout.geo_labels.end(), *label);
                if (it != layout.geo_labels.end() && *it == *label) {
                    geo_slot = static_cast<std::size_t>(it - layout.geo_labels.begin());
                }
            }
        }
        std::vector<double> scratch;

        for (std::size_t t = 0; t < weeks; ++t) {
            double* out = x.row(k, t).data();
            std::size_t j = 0;
            for (auto fam : kAllFamilies) {
                if (!cfg.has(fam)) continue;
                switch (fam) {
                    case Family::core: {
                        for (auto lag : cfg.own_lags) out[j++] = cpc(k, lagged(t, lag));
                        const std::size_t prev = lagged(t, 1);
                        out[j++] = std::log1p(static_cast<double>(panel.clicks(k, prev)));
                        out[j++] = std::log1p(static_cast<double>(panel.impressions(k, prev)));
                        std::size_t cells = 0, filled = 0;
                        for (std::size_t lag = 1; lag <= 4 && lag <= t; ++lag) {
                            ++cells;
                            filled += panel.imputed(k, t - lag) != 0 ? 1 : 0;
                        }
                        out[j++] = cells > 0 ? static_cast<double>(filled) / static_cast<double>(cells) : 0.0;
                        break;
                    }
                    case Family::geo:
                        for (std::size_t g = 0; g <= layout.geo_labels.size(); ++g) out[j++] = g == geo_slot ? 1.0 : 0.0;
                        break;
                    case Family::sem_cpc:
                        for (auto lag : cfg.neighbor_lags) {
                            const std::size_t w = lagged(t, lag);
                            if (cfg.neighbor_aggregate == Aggregate::mean) {
                                double s = 0.0;
                                for (const auto& e : graph.edges[k]) s += e.weight * cpc(e.target, w);
                                out[j++] = s;
                            } else {
                                scratch.clear();
                                for (const auto& e : graph.edges[k]) scratch.push_back(cpc(e.target, w));
                                out[j++] = median_of(scratch);
                            }
                        }
                        break;
                    case Family::dtw_cpc:
                        for (auto lag : cfg.neighbor_lags) {
                            const std::size_t w = lagged(t, lag);
                            scratch.clear();
                            for (const auto& nb : dtw.lists[k]) scratch.push_back(cpc(nb.id, w));
                            if (cfg.neighbor_aggregate == Aggregate::mean) {
                                double s = 0.0;
                                for (double v : scratch) s += v;
                                out[j++] = s / static_cast<double>(scratch.size());
                            } else {
                                out[j++] = median_of(scratch);
                            }
                        }
                        break;
                    case Family::calendar: {
                        const auto week = panel.weeks[t];
                        const double phase = 2.0 * std::numbers::pi * static_cast<double>(week.week - 1) /
                                             static_cast<double>(iso_weeks_in_year(week.year));
                        out[j++] = std::sin(phase);
                        out[j++] = std::cos(phase);
                        out[j++] = static_cast<double>(t) * index_scale;
                        break;
                    }
                    case Family::mix: {
                        const std::size_t prev = lagged(t, 1);
                        write_shares(panel.devices(k, prev), layout.devices, out + j);
                        j += layout.devices.size();
                        write_shares(panel.search_types(k, prev), layout.search_types, out + j);
                        j += layout.search_types.size();
                        break;
                    }
                    case Family::noise:
                        for (std::size_t i = 0; i < cfg.noise_features; ++i) out[j++] = noise[i][t];
                        break;
                }
            }
        }
    });

    for (double v : x.values) {
        require(std::isfinite(v), ErrorCode::numeric, "non-finite value in feature tensor");
    }
    return x;
}

FeatureTensor build_features(const panel::WeeklyPanel& panel, const proxies::ProxySet& p, const FeatureConfig& cfg) {
    return build_features(panel, p.graph, p.dtw, p.geo, p.gazetteer, cfg);
}

LeakageReport verify_leakage_free(const FeatureBuilder& builder, const panel::WeeklyPanel& panel, std::size_t origin,
                                  std::uint64_t seed) {
    require(origin < panel.n_weeks(), ErrorCode::config, "leakage check origin outside the panel");
    const FeatureTensor base = builder(panel);

    panel::WeeklyPanel perturbed = panel;
    Rng rng = Rng::stream(seed, "leakage-perturbation");
    for (std::size_t k = 0; k < panel.n_keywords(); ++k) {
        for (std::size_t t = origin + 1; t < panel.n_weeks(); ++t) {
            const double scale = std::exp(0.5 * rng.normal());
            if (perturbed.has_cpc(k, t)) perturbed.cpc(k, t) *= scale;
            perturbed.cost(k, t) *= scale;
            perturbed.clicks(k, t) += static_cast<std::int64_t>(rng.index(50));
            perturbed.impressions(k, t) += static_cast<std::int64_t>(rng.index(500));
            perturbed.imputed(k, t) = static_cast<std::uint8_t>(rng.index(2));
            for (auto* maps : {&perturbed.device_counts, &perturbed.searchtype_counts}) {
                for (auto& [_, count] : (*maps)[k * panel.n_weeks() + t]) {
                    count += static_cast<std::int64_t>(rng.index(20));
                }
            }
        }
    }
    const FeatureTensor after = builder(perturbed);

    LeakageReport report;
    if (after.f != base.f || after.n != base.n || after.t != base.t || after.catalog != base.catalog) {
        report.pass = false;
        report.feature = "<catalog changed>";
        return report;
    }
    for (std::size_t t = 0; t <= origin; ++t) {
        for (std::size_t k = 0; k < base.n; ++k) {
            const auto a = base.row(k, t);
            const auto b = after.row(k, t);
            for (std::size_t j = 0; j < base.f; ++j) {
                if (std::memcmp(&a[j], &b[j], sizeof(double)) != 0) {
                    report.pass = false;
                    report.feature = base.catalog[j].name;
                    report.keyword = k;
                    report.week = t;
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace cpcc::features
