#include "cpcc/error.hpp"
#include "cpcc/rng.hpp"
#include "cpcc/synth.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <set>

namespace cpcc::synth {

void SynthConfig::validate() const {
    require(clusters >= 1 && keywords >= 2 * clusters, ErrorCode::config, "synth needs keywords >= 2 * clusters");
    require(weeks >= 30, ErrorCode::config, "synth needs at least 30 weeks");
    require(geo_groups >= 1 && geo_groups <= 7, ErrorCode::config, "geo groups must be between 1 and 7");
    require(shock_persistence >= 0.0 && shock_persistence < 1.0 && noise_persistence >= 0.0 &&
                noise_persistence < 1.0,
            ErrorCode::config, "shock and noise persistence must lie in [0, 1)");
    require(season_amplitude >= 0.0 && geo_drift >= 0.0 && shock_scale >= 0.0 && noise_scale >= 0.0 && cluster_level_spread >= 0.0 &&
                keyword_level_spread >= 0.0 && embedding_noise >= 0.0,
            ErrorCode::config, "synth scales must be non-negative");
    require(base_cpc > 0.0 && tail_dof > 2.0 && volume_shape > 0.0, ErrorCode::config,
            "synth needs base_cpc > 0, tail_dof > 2 and volume_shape > 0");
    require(missing_probability >= 0.0 && missing_probability < 1.0 && zero_click_probability >= 0.0 &&
                zero_click_probability < 1.0,
            ErrorCode::config, "synth probabilities must lie in [0, 1)");
    require(embedding_dim >= 8, ErrorCode::config, "embedding dimension must be at least 8");
    require(hot_level > 0.0 && hot_volatility > 0.0 && regime_factor > 0.0, ErrorCode::config,
            "synth multipliers must be positive");
    if (regime_shift_week) {
        require(*regime_shift_week < weeks && regime_cluster < clusters, ErrorCode::config,
                "regime shift week or cluster out of range");
    }
}

namespace {

const std::vector<std::string> kFillers{
    "cheap", "deals", "hire", "best price", "one way", "suv", "airport pickup", "luxury", "weekly", "monthly",
    "compare", "near me", "van", "budget", "automatic", "online", "long term", "economy", "7 seater", "convertible",
    "last minute", "unlimited mileage", "no deposit", "downtown", "prices"};

const std::vector<std::string> kDomains{"drivenow.com", "carhire.co.uk", "rentacar.pt", "autoreserva.es",
                                        "wheelsdirect.com", "mietwagen-vergleich.de"};

const std::vector<std::string> kContinents{"europe", "north america", "asia", "oceania", "south america", "africa",
                                           "antarctica"};

std::vector<std::vector<std::string>> cities_by_group(std::size_t groups) {
    const auto& g = proxies::Gazetteer::builtin();
    std::vector<std::vector<std::string>> out(groups);
    for (const auto& city : g.labels(proxies::GeoLevel::city)) {
        const auto continent = g.continent_of(*g.country_of(city));
        for (std::size_t i = 0; i < groups; ++i) {
            if (continent && *continent == kContinents[i]) out[i].push_back(city);
        }
    }
    for (std::size_t i = 0; i < groups; ++i) {
        // Antarctica has no cities; its keywords name the continent itself.
        if (out[i].empty()) out[i].push_back(kContinents[i]);
    }
    return out;
}

std::vector<double> unit_gaussian(Rng& rng, std::size_t dim) {
    std::vector<double> v(dim);
    double norm = 0.0;
    for (double& x : v) {
        x = rng.normal();
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    return v;
}

} // namespace

SynthOutput generate(const SynthConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.keywords;
    const std::size_t weeks = cfg.weeks;
    const std::size_t groups = cfg.geo_groups;

    // Keywords: balanced cluster assignment, cluster c lives in geo group c mod G.
    struct Draft {
        std::string keyword;
        std::size_t cluster;
        std::size_t geo;
    };
    std::vector<Draft> drafts;
    {
        Rng rng = Rng::stream(cfg.seed, "synth/keywords");
        const auto cities = cities_by_group(groups);
        std::set<std::string> used;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t c = i % cfg.clusters;
            const std::size_t g = c % groups;
            std::string kw;
            for (int attempt = 0;; ++attempt) {
                const auto& city = cities[g][rng.index(cities[g].size())];
                kw = "car rental " + city + " " + kFillers[rng.index(kFillers.size())];
                if (attempt > 50) kw += " " + kFillers[rng.index(kFillers.size())];
                if (attempt > 200) kw += " " + std::to_string(i);
                if (used.insert(kw).second) break;
            }
            drafts.push_back({kw, c, g});
        }
        std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) { return a.keyword < b.keyword; });
    }

    SynthOutput out;
    SynthTruth& truth = out.truth;
    for (const auto& d : drafts) {
        truth.keywords.push_back(d.keyword);
        truth.cluster.push_back(d.cluster);
        truth.geo.push_back(d.geo);
        truth.continent.push_back(kContinents[d.geo]);
    }

    // Levels.
    std::vector<double> cluster_log_base(cfg.clusters);
    {
        Rng rng = Rng::stream(cfg.seed, "synth/levels");
        for (std::size_t c = 0; c < cfg.clusters; ++c) {
            cluster_log_base[c] = std::log(cfg.base_cpc) + cfg.cluster_level_spread * rng.normal();
        }
        if (cfg.hot_cluster) {
            // The hot cluster sits above every other cluster's level.
            const double top = *std::max_element(cluster_log_base.begin(), cluster_log_base.end());
            cluster_log_base[0] = std::max(cluster_log_base[0] + std::log(cfg.hot_level), top);
        }
        truth.base.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            truth.base[k] = std::exp(cluster_log_base[truth.cluster[k]] + cfg.keyword_level_spread * rng.normal());
        }
    }

    // Cluster shocks: AR(1) started from its stationary law; scale is the stationary std.
    truth.delay.assign(n, 0);
    truth.shock_offset = cfg.hot_cluster ? cfg.hot_max_delay : 0;
    const std::size_t span = weeks + truth.shock_offset;
    truth.shocks.assign(cfg.clusters, std::vector<double>(span, 0.0));
    {
        Rng rng = Rng::stream(cfg.seed, "synth/shocks");
        const double phi = cfg.shock_persistence;
        for (std::size_t c = 0; c < cfg.clusters; ++c) {
            const double scale = cfg.shock_scale * (cfg.hot_cluster && c == 0 ? cfg.hot_volatility : 1.0);
            const double innovation = scale * std::sqrt(1.0 - phi * phi);
            double s = scale * rng.normal();
            for (std::size_t t = 0; t < span; ++t) {
                if (t > 0) s = phi * s + innovation * rng.normal();
                truth.shocks[c][t] = s;
            }
        }
        if (cfg.hot_cluster) {
            for (std::size_t k = 0; k < n; ++k) {
                if (truth.cluster[k] == 0) truth.delay[k] = rng.index(cfg.hot_max_delay + 1);
            }
        }
    }

    // Seasons: one yearly sinusoid per geo group, phase-shifted across groups.
    truth.seasons.assign(groups, std::vector<double>(weeks, 0.0));
    for (std::size_t g = 0; g < groups; ++g) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(g) / static_cast<double>(groups);
        for (std::size_t t = 0; t < weeks; ++t) {
            truth.seasons[g][t] =
                cfg.season_amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / 52.0 + phase);
        }
    }

    // Drifts: evenly spaced over [-d, d], assigned to geo groups in seeded order.
    truth.drift.assign(groups, 0.0);
    {
        Rng rng = Rng::stream(cfg.seed, "synth/drift");
        std::vector<std::size_t> order(groups);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = groups; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
        for (std::size_t i = 0; i < groups; ++i) {
            const double u = groups > 1 ? 2.0 * static_cast<double>(i) / static_cast<double>(groups - 1) - 1.0 : 0.0;
            truth.drift[order[i]] = cfg.geo_drift * u / 52.0;
        }
    }

    // Latent CPC.
    truth.latent_cpc.assign(n, std::vector<double>(weeks, 0.0));
    {
        Rng rng = Rng::stream(cfg.seed, "synth/noise");
        const double t_scale = std::sqrt((cfg.tail_dof - 2.0) / cfg.tail_dof);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t c = truth.cluster[k];
            const double noise_scale = cfg.noise_scale * (cfg.hot_cluster && c == 0 ? cfg.hot_volatility : 1.0);
            const double rho = cfg.noise_persistence;
            double eps = 0.0;
            for (std::size_t t = 0; t < weeks; ++t) {
                const double draw = cfg.noise_scale > 0.0 ? noise_scale * t_scale * rng.student_t(cfg.tail_dof) : 0.0;
                eps = t == 0 ? draw : rho * eps + std::sqrt(1.0 - rho * rho) * draw;
                const double shock = truth.shocks[c][t + truth.shock_offset - truth.delay[k]];
                const std::size_t g = truth.geo[k];
                double log_cpc =
                    std::log(truth.base[k]) + truth.drift[g] * static_cast<double>(t) + truth.seasons[g][t] + shock;
                log_cpc += eps;
                if (cfg.regime_shift_week && c == cfg.regime_cluster && t >= *cfg.regime_shift_week) {
                    log_cpc += std::log(cfg.regime_factor);
                }
                truth.latent_cpc[k][t] = std::exp(log_cpc);
            }
        }
    }

    // Events.
    {
        Rng rng = Rng::stream(cfg.seed, "synth/events");
        std::vector<IsoWeek> week_list{cfg.start};
        for (std::size_t t = 1; t < weeks; ++t) week_list.push_back(next_week(week_list.back()));
        const std::vector<std::string> devices{"desktop", "mobile", "tablet"};
        const std::vector<std::string> search_types{"search", "partner"};
        for (std::size_t k = 0; k < n; ++k) {
            const double volume = std::min(20.0 * std::pow(1.0 - rng.uniform(), -1.0 / cfg.volume_shape), 20000.0);
            const double mobile_share = rng.uniform(0.4, 0.7);
            const std::string& domain = kDomains[rng.index(kDomains.size())];
            std::string slug = truth.keywords[k];
            std::replace(slug.begin(), slug.end(), ' ', '-');
            for (std::size_t t = 0; t < weeks; ++t) {
                if (rng.uniform() < cfg.missing_probability) continue;
                const bool zero_clicks = rng.uniform() < cfg.zero_click_probability;
                const auto clicks = zero_clicks ? std::int64_t{0}
                                                : std::max<std::int64_t>(1, std::llround(volume * std::exp(0.3 * rng.normal())));
                const std::size_t parts = 1 + rng.index(3);
                std::int64_t remaining = clicks;
                for (std::size_t e = 0; e < parts; ++e) {
                    ingest::RawEvent ev;
                    ev.keyword = truth.keywords[k];
                    ev.query = e % 2 == 0 ? truth.keywords[k] : "rent a car " + truth.keywords[k].substr(11);
                    ev.url = "https://www." + domain + "/" + slug;
                    const double u = rng.uniform();
                    ev.device = u < mobile_share ? devices[1] : (u < mobile_share + 0.3 ? devices[0] : devices[2]);
                    ev.search_type = search_types[rng.uniform() < 0.8 ? 0 : 1];
                    const std::int64_t share =
                        e + 1 == parts ? remaining : static_cast<std::int64_t>(std::floor(static_cast<double>(clicks) / static_cast<double>(parts)));
                    remaining -= share;
                    ev.clicks = share;
                    ev.cost = static_cast<double>(share) * truth.latent_cpc[k][t];
                    ev.impressions = share * (8 + static_cast<std::int64_t>(rng.index(25))) + static_cast<std::int64_t>(rng.index(5));
                    ev.date = monday_of(week_list[t]) + std::chrono::days(static_cast<int>(rng.index(7)));
                    out.events.push_back(std::move(ev));
                }
            }
        }
    }

    out.panel = panel::aggregate_weekly(out.events);
    require(out.panel.keywords == truth.keywords, ErrorCode::numeric, "synth panel keyword order differs from truth");

    // Embeddings: cluster centroid plus isotropic noise of the configured norm.
    {
        Rng rng = Rng::stream(cfg.seed, "synth/embeddings");
        std::vector<std::vector<double>> centroids;
        for (std::size_t c = 0; c < cfg.clusters; ++c) centroids.push_back(unit_gaussian(rng, cfg.embedding_dim));
        auto& e = out.embeddings;
        e.rows = n;
        e.dim = cfg.embedding_dim;
        e.source = proxies::EmbeddingSource::exported;
        e.values.assign(n * e.dim, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const auto noise = unit_gaussian(rng, e.dim);
            auto row = e.row(k);
            double norm = 0.0;
            for (std::size_t d = 0; d < e.dim; ++d) {
                row[d] = centroids[truth.cluster[k]][d] + cfg.embedding_noise * noise[d];
                norm += row[d] * row[d];
            }
            norm = std::sqrt(norm);
            for (double& x : row) x /= norm;
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        proxies::GeoTag tag;
        tag.continent = truth.continent[k];
        out.geo.push_back(tag);
    }
    return out;
}

RecoveryReport oracle_report(const SynthTruth& truth, const proxies::SemanticGraph& graph,
                             const proxies::DtwNeighborhood& neighborhoods, const std::vector<proxies::GeoTag>& tags) {
    const std::size_t n = truth.keywords.size();
    RecoveryReport r;
    std::size_t intra = 0, total = 0;
    for (std::size_t i = 0; i < graph.edges.size() && i < n; ++i) {
        for (const auto& e : graph.edges[i]) {
            intra += truth.cluster[i] == truth.cluster[e.target] ? 1 : 0;
            ++total;
        }
    }
    r.semantic_intra_fraction = total > 0 ? static_cast<double>(intra) / static_cast<double>(total) : 0.0;
    intra = total = 0;
    for (std::size_t i = 0; i < neighborhoods.lists.size() && i < n; ++i) {
        for (const auto& nb : neighborhoods.lists[i]) {
            intra += truth.cluster[i] == truth.cluster[nb.id] ? 1 : 0;
            ++total;
        }
    }
    r.dtw_intra_fraction = total > 0 ? static_cast<double>(intra) / static_cast<double>(total) : 0.0;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < n && k < tags.size(); ++k) {
        hits += tags[k].continent && *tags[k].continent == truth.continent[k] ? 1 : 0;
    }
    r.geo_accuracy = n > 0 ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;

    std::vector<std::size_t> sizes;
    for (auto c : truth.cluster) {
        if (c >= sizes.size()) sizes.resize(c + 1, 0);
        ++sizes[c];
    }
    double expected = 0.0;
    for (auto c : truth.cluster) expected += static_cast<double>(sizes[c] - 1) / static_cast<double>(n - 1);
    r.chance_intra_fraction = n > 1 ? expected / static_cast<double>(n) : 1.0;
    return r;
}

void write_truth(std::ostream& out, const SynthTruth& truth) {
    for (std::size_t k = 0; k < truth.keywords.size(); ++k) {
        nlohmann::json j{{"type", "keyword"},     {"keyword", truth.keywords[k]}, {"cluster", truth.cluster[k]},
                         {"geo", truth.geo[k]},    {"continent", truth.continent[k]}, {"base", truth.base[k]}, {"delay", truth.delay[k]},
                         {"latent_cpc", truth.latent_cpc[k]}};
        out << j.dump() << '\n';
    }
    for (std::size_t c = 0; c < truth.shocks.size(); ++c) {
        out << nlohmann::json{{"type", "cluster"}, {"id", c}, {"shock_offset", truth.shock_offset}, {"shock", truth.shocks[c]}}
                   .dump()
            << '\n';
    }
    for (std::size_t g = 0; g < truth.seasons.size(); ++g) {
        out << nlohmann::json{{"type", "geo"}, {"id", g}, {"continent", kContinents[g]}, {"drift", truth.drift[g]}, {"season", truth.seasons[g]}}
                   .dump()
            << '\n';
    }
}

} // namespace cpcc::synth
