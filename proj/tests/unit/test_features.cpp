#include "cpcc/features.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace cpcc;
using namespace cpcc::features;

namespace {

struct Fixture {
    panel::WeeklyPanel panel;
    proxies::ProxySet proxies;
};

Fixture make_fixture(std::uint64_t seed, std::size_t n = 6, std::size_t t = 30) {
    Fixture f;
    f.panel = test::random_panel(seed, n, t);
    Rng rng(seed + 99);
    const std::vector<std::string> devices{"desktop", "mobile", "tablet"};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t w = 0; w < t; ++w) {
            auto& d = f.panel.device_counts[k * t + w];
            for (const auto& name : devices) {
                if (rng.uniform() < 0.8) d[name] = static_cast<std::int64_t>(1 + rng.index(9));
            }
            f.panel.searchtype_counts[k * t + w]["paid"] = static_cast<std::int64_t>(1 + rng.index(5));
            if (rng.uniform() < 0.1) f.panel.imputed(k, w) = 1;
        }
    }
    f.proxies.gazetteer = proxies::Gazetteer::builtin();
    std::vector<std::string> words{"car rental lisbon", "car rental porto", "car rental tokyo",
                                   "car rental", "car rental portugal", "car rental lima"};
    for (std::size_t k = 0; k < n; ++k) {
        f.proxies.geo.push_back(proxies::tag_geography(words[k % words.size()], f.proxies.gazetteer));
    }
    f.proxies.embeddings = proxies::hash_embed_all(f.panel.keywords, 32);
    f.proxies.graph = proxies::build_semantic_graph(f.proxies.embeddings, 2);
    f.proxies.dtw = proxies::build_dtw_neighborhoods(f.panel, {0, t / 2}, 2, 2);
    return f;
}

FeatureConfig config_for(std::vector<Family> fams) {
    FeatureConfig cfg;
    cfg.families = std::move(fams);
    cfg.noise_features = 4;
    cfg.noise_seed = 3;
    cfg.train_end = 20;
    return cfg;
}

} // namespace

TEST(Features, CoreLagOne) {
    const auto f = make_fixture(1);
    auto cfg = config_for({Family::core});
    cfg.own_lags = {1};
    const auto x = build_features(f.panel, f.proxies, cfg);
    const auto j = *x.index_of("cpc_lag1");
    for (std::size_t k = 0; k < x.n; ++k) {
        for (std::size_t t = 1; t < x.t; ++t) EXPECT_EQ(x.at(k, t, j), f.panel.cpc(k, t - 1));
        EXPECT_EQ(x.at(k, 4, *x.index_of("log_clicks_lag1")), std::log1p(static_cast<double>(f.panel.clicks(k, 3))));
    }
    EXPECT_EQ(feature_row(10), 11u);
}

TEST(Features, CatalogOrderAndCounts) {
    const auto f = make_fixture(2);
    const auto x = build_features(f.panel, f.proxies,
                                  config_for({Family::core, Family::geo, Family::sem_cpc, Family::dtw_cpc,
                                              Family::calendar, Family::mix, Family::noise}));
    EXPECT_EQ(x.f, x.catalog.size());
    EXPECT_EQ(x.values.size(), x.n * x.t * x.f);
    std::vector<std::string> expected{"cpc_lag1", "cpc_lag2", "cpc_lag4", "cpc_lag8", "cpc_lag12",
                                      "log_clicks_lag1", "log_impressions_lag1", "imputed_share_4w"};
    for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_EQ(x.catalog[j].name, expected[j]);
    for (std::size_t j = 1; j < x.f; ++j) {
        EXPECT_LE(static_cast<int>(x.catalog[j - 1].family), static_cast<int>(x.catalog[j].family));
    }
    EXPECT_TRUE(x.index_of("sem_cpc_mean_lag4"));
    EXPECT_TRUE(x.index_of("dtw_cpc_mean_lag2"));
    EXPECT_TRUE(x.index_of("device_share=tablet_lag1"));
    EXPECT_TRUE(x.index_of("noise_3"));
    EXPECT_FALSE(x.index_of("noise_4"));
    for (double v : x.values) ASSERT_TRUE(std::isfinite(v));
    // Usable origins start once the longest own lag is available.
    EXPECT_EQ(x.origin_weeks.front(), 11u);
    EXPECT_EQ(feature_row(x.origin_weeks.back()), x.t - 1);
}

TEST(Features, SemanticMeanHandComputed) {
    auto f = make_fixture(3, 3, 20);
    f.proxies.graph = proxies::graph_from_neighbors({{1, 2}, {0, 2}, {0, 1}}, "uniform");
    auto cfg = config_for({Family::core, Family::sem_cpc});
    const auto x = build_features(f.panel, f.proxies, cfg);
    const auto j = *x.index_of("sem_cpc_mean_lag1");
    for (std::size_t t = 1; t < 20; ++t) {
        EXPECT_DOUBLE_EQ(x.at(0, t, j), 0.5 * f.panel.cpc(1, t - 1) + 0.5 * f.panel.cpc(2, t - 1));
    }
    cfg.neighbor_aggregate = Aggregate::median;
    const auto xm = build_features(f.panel, f.proxies, cfg);
    const auto jm = *xm.index_of("sem_cpc_median_lag2");
    EXPECT_DOUBLE_EQ(xm.at(2, 5, jm), 0.5 * (f.panel.cpc(0, 3) + f.panel.cpc(1, 3)));
}

TEST(Features, DtwMeanIsUniform) {
    const auto f = make_fixture(4);
    const auto x = build_features(f.panel, f.proxies, config_for({Family::core, Family::dtw_cpc}));
    const auto j = *x.index_of("dtw_cpc_mean_lag4");
    for (std::size_t k = 0; k < x.n; ++k) {
        double s = 0.0;
        for (const auto& nb : f.proxies.dtw.lists[k]) s += f.panel.cpc(nb.id, 10 - 4);
        EXPECT_DOUBLE_EQ(x.at(k, 10, j), s / 2.0);
    }
}

TEST(Features, GeoOneHotPartition) {
    const auto f = make_fixture(5);
    for (auto res : {proxies::GeoLevel::continent, proxies::GeoLevel::country, proxies::GeoLevel::city}) {
        auto cfg = config_for({Family::core, Family::geo});
        cfg.geo_resolution = res;
        const auto x = build_features(f.panel, f.proxies, cfg);
        std::size_t width = 0;
        for (const auto& d : x.catalog) width += d.family == Family::geo;
        EXPECT_EQ(width, f.proxies.gazetteer.labels(res).size() + 1);
        if (res == proxies::GeoLevel::continent) EXPECT_EQ(width, 8u);
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = 0; t < x.t; t += 7) {
                double sum = 0.0;
                for (std::size_t j = 0; j < x.f; ++j) {
                    if (x.catalog[j].family != Family::geo) continue;
                    const double v = x.at(k, t, j);
                    EXPECT_TRUE(v == 0.0 || v == 1.0);
                    sum += v;
                }
                EXPECT_EQ(sum, 1.0);
            }
        }
    }
    auto cfg = config_for({Family::core, Family::geo});
    const auto x = build_features(f.panel, f.proxies, cfg);
    EXPECT_EQ(x.at(0, 3, *x.index_of("geo_continent=europe")), 1.0);
    EXPECT_EQ(x.at(2, 3, *x.index_of("geo_continent=asia")), 1.0);
    EXPECT_EQ(x.at(3, 3, *x.index_of("geo_continent=unknown")), 1.0);
}

TEST(Features, CalendarAndMixShares) {
    const auto f = make_fixture(6);
    const auto x = build_features(f.panel, f.proxies, config_for({Family::core, Family::calendar, Family::mix}));
    const auto idx = *x.index_of("week_index");
    EXPECT_EQ(x.at(0, 0, idx), 0.0);
    EXPECT_DOUBLE_EQ(x.at(0, 19, idx), 1.0);
    const auto s = *x.index_of("week_sin"), c = *x.index_of("week_cos");
    for (std::size_t t = 0; t < x.t; ++t) EXPECT_NEAR(x.at(1, t, s) * x.at(1, t, s) + x.at(1, t, c) * x.at(1, t, c), 1.0, 1e-12);
    EXPECT_EQ(x.at(0, 0, s), 0.0);  // 2021-W01
    for (std::size_t k = 0; k < x.n; ++k) {
        const auto& counts = f.panel.devices(k, 8);
        double total = 0.0;
        for (const auto& [_, v] : counts) total += static_cast<double>(v);
        const auto it = counts.find("mobile");
        const double expected = total > 0 && it != counts.end() ? static_cast<double>(it->second) / total : 0.0;
        EXPECT_DOUBLE_EQ(x.at(k, 9, *x.index_of("device_share=mobile_lag1")), expected);
    }
}

TEST(Features, EqualWeightsReduceToPlainMean) {
    const auto f = make_fixture(7);
    auto p = f.proxies;
    std::vector<std::vector<std::size_t>> nbrs;
    for (const auto& row : p.graph.edges) nbrs.push_back({row[0].target, row[1].target});
    p.graph = proxies::graph_from_neighbors(nbrs, "uniform");
    p.dtw.lists.clear();
    for (const auto& row : nbrs) p.dtw.lists.push_back({{row[0], 0.0}, {row[1], 0.0}});
    const auto x = build_features(f.panel, p, config_for({Family::core, Family::sem_cpc, Family::dtw_cpc}));
    for (const char* lag : {"1", "2", "4"}) {
        const auto a = *x.index_of(std::string("sem_cpc_mean_lag") + lag);
        const auto b = *x.index_of(std::string("dtw_cpc_mean_lag") + lag);
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = 0; t < x.t; ++t) EXPECT_DOUBLE_EQ(x.at(k, t, a), x.at(k, t, b));
        }
    }
}

TEST(Features, PermutationEquivariance) {
    const auto f = make_fixture(8);
    const std::vector<std::size_t> perm{3, 0, 5, 1, 4, 2};
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    auto pp = panel::subset(f.panel, perm);
    proxies::ProxySet q;
    q.gazetteer = f.proxies.gazetteer;
    std::vector<std::vector<std::size_t>> nbrs;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        q.geo.push_back(f.proxies.geo[perm[i]]);
        std::vector<std::size_t> row;
        for (const auto& e : f.proxies.graph.edges[perm[i]]) row.push_back(inv[e.target]);
        nbrs.push_back(row);
        std::vector<proxies::Neighbor> d;
        for (const auto& nb : f.proxies.dtw.lists[perm[i]]) d.push_back({inv[nb.id], nb.distance});
        q.dtw.lists.push_back(d);
    }
    q.graph = proxies::graph_from_neighbors(nbrs, "uniform");
    auto p0 = f.proxies;
    std::vector<std::vector<std::size_t>> orig;
    for (const auto& row : p0.graph.edges) orig.push_back({row[0].target, row[1].target});
    p0.graph = proxies::graph_from_neighbors(orig, "uniform");

    const auto cfg = config_for({Family::core, Family::geo, Family::sem_cpc, Family::dtw_cpc, Family::calendar,
                                 Family::mix, Family::noise});
    const auto x = build_features(f.panel, p0, cfg);
    const auto y = build_features(pp, q, cfg);
    ASSERT_EQ(x.catalog, y.catalog);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t t = 0; t < x.t; ++t) {
            const auto a = x.row(perm[i], t), b = y.row(i, t);
            for (std::size_t j = 0; j < x.f; ++j) ASSERT_EQ(a[j], b[j]) << x.catalog[j].name;
        }
    }
}

TEST(Features, RejectsMisalignedInputs) {
    const auto f = make_fixture(9);
    auto p = f.proxies;
    p.geo.pop_back();
    EXPECT_THROW(build_features(f.panel, p, config_for({Family::core, Family::geo})), Error);
    EXPECT_THROW(build_features(f.panel, f.proxies, config_for({Family::geo})), Error);
    auto gappy = f.panel;
    gappy.cpc(0, 3) = panel::kUndefined;
    EXPECT_THROW(build_features(gappy, f.proxies, config_for({Family::core})), Error);
}

TEST(Features, ParseFamilies) {
    EXPECT_EQ(parse_families("core,geo"), (std::vector<Family>{Family::core, Family::geo}));
    const auto all = parse_families("all");
    EXPECT_EQ(all.size(), 6u);
    EXPECT_EQ(std::count(all.begin(), all.end(), Family::noise), 0);
    EXPECT_THROW(parse_families("core,weather"), Error);
    FeatureConfig a, b;
    b.families = {Family::core, Family::geo};
    EXPECT_NE(a.hash(), b.hash());
    EXPECT_EQ(a.hash(), FeatureConfig{}.hash());
}

namespace {

FeatureBuilder builder_for(const Fixture& f, FeatureConfig cfg) {
    return [&f, cfg](const panel::WeeklyPanel& p) {
        // Proxies are static inputs fixed on the training weeks.
        return build_features(p, f.proxies, cfg);
    };
}

// Row t of the result is row t + 1 of the input, so checking rows <= origin
// covers the row a forecast issued after `origin` reads.
FeatureBuilder shifted(FeatureBuilder b) {
    return [b](const panel::WeeklyPanel& p) {
        auto x = b(p);
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = 0; t + 1 < x.t; ++t) {
                const auto src = x.row(k, t + 1);
                std::copy(src.begin(), src.end(), x.row(k, t).begin());
            }
        }
        return x;
    };
}

} // namespace

TEST(Leakage, EveryFamilyPasses) {
    const auto f = make_fixture(10, 6, 40);
    const std::vector<std::vector<Family>> sets{
        {Family::core},
        {Family::core, Family::geo},
        {Family::core, Family::sem_cpc},
        {Family::core, Family::dtw_cpc},
        {Family::core, Family::calendar},
        {Family::core, Family::mix},
        {Family::core, Family::noise},
        {Family::core, Family::geo, Family::sem_cpc, Family::dtw_cpc, Family::calendar, Family::mix, Family::noise}};
    for (const auto& fams : sets) {
        for (auto agg : {Aggregate::mean, Aggregate::median}) {
            auto cfg = config_for(fams);
            cfg.neighbor_aggregate = agg;
            for (std::size_t origin : {0u, 5u, 20u, 38u}) {
                const auto plain = verify_leakage_free(builder_for(f, cfg), f.panel, origin, origin + 1);
                EXPECT_TRUE(plain.pass) << plain.feature << " origin " << origin;
                const auto next = verify_leakage_free(shifted(builder_for(f, cfg)), f.panel, origin, origin + 7);
                EXPECT_TRUE(next.pass) << next.feature << " origin " << origin;
            }
        }
    }
}

TEST(Leakage, SeededBugIsNamed) {
    const auto f = make_fixture(11, 6, 30);
    const auto cfg = config_for({Family::core, Family::sem_cpc});
    FeatureBuilder buggy = [&f, cfg](const panel::WeeklyPanel& p) {
        auto x = build_features(p, f.proxies, cfg);
        // Replace the lag-1 neighbor mean by the neighbor CPC in the target week t + 1.
        const auto j = *x.index_of("sem_cpc_mean_lag1");
        x.catalog[j].name = "sem_cpc_mean_target_week";
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = 0; t < x.t; ++t) {
                const std::size_t w = std::min(t + 1, x.t - 1);
                double s = 0.0;
                for (const auto& e : f.proxies.graph.edges[k]) s += e.weight * p.cpc(e.target, w);
                x.row(k, t)[j] = s;
            }
        }
        return x;
    };
    const auto r = verify_leakage_free(buggy, f.panel, 12);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.feature, "sem_cpc_mean_target_week");
    EXPECT_EQ(r.week, 12u);

    // Reading the current week is within the row contract but not within the
    // forecast-row contract.
    FeatureBuilder lag0 = [&f, cfg](const panel::WeeklyPanel& p) {
        auto x = build_features(p, f.proxies, cfg);
        const auto j = *x.index_of("cpc_lag1");
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = 0; t < x.t; ++t) x.row(k, t)[j] = p.cpc(k, t);
        }
        return x;
    };
    EXPECT_TRUE(verify_leakage_free(lag0, f.panel, 12).pass);
    const auto r0 = verify_leakage_free(shifted(lag0), f.panel, 12);
    EXPECT_FALSE(r0.pass);
    EXPECT_EQ(r0.feature, "cpc_lag1");
}
