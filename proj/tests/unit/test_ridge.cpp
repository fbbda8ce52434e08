#include "cpcc/forecast.hpp"
#include "cpcc/ridge.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace cpcc;
using namespace cpcc::models;

namespace {

// Tensor with an arbitrary feature matrix per (k, t); no CPC-unit columns.
features::FeatureTensor tensor(std::size_t n, std::size_t t, std::size_t f) {
    features::FeatureTensor x;
    x.n = n;
    x.t = t;
    x.f = f;
    x.values.assign(n * t * f, 0.0);
    for (std::size_t j = 0; j < f; ++j) x.catalog.push_back({"x" + std::to_string(j), features::Family::core, 1, false});
    for (std::size_t w = 0; w + 1 < t; ++w) x.origin_weeks.push_back(w);
    x.config_hash = "test";
    return x;
}

// Solves A x = b by Gauss-Jordan elimination with partial pivoting.
std::vector<double> gauss_jordan(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        }
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double m = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= m * a[c][j];
            b[r] -= m * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

const std::vector<OriginRequest> kOne{{1, {0}}};

} // namespace

TEST(Ridge, IdentityRegression) {
    Rng rng(1);
    std::vector<std::vector<double>> s(8, std::vector<double>(12));
    for (auto& row : s) {
        for (auto& v : row) v = rng.uniform(0.5, 4.0);
    }
    const auto p = test::panel_from_series(s);
    auto x = tensor(8, 12, 1);
    for (std::size_t k = 0; k < 8; ++k) {
        for (std::size_t t = 0; t + 1 < 12; ++t) x.row(k, t + 1)[0] = p.cpc(k, t + 1);
    }
    const auto m = fit_ridge(x, p, {{1}, 12}, 0.0, {0, 12});
    const auto& h = m.head(1);
    const double raw_w = h.weights[0] / m.scale[0];
    EXPECT_NEAR(raw_w, 1.0, 1e-10);
    EXPECT_NEAR(h.intercept - raw_w * m.mean[0], 0.0, 1e-10);
    EXPECT_NEAR(h.train_rmse, 0.0, 1e-10);
    EXPECT_EQ(h.rows, 8u * 11u);
}

TEST(Ridge, HugeLambdaPredictsTargetMean) {
    const auto p = test::random_panel(2, 6, 20);
    auto x = tensor(6, 20, 3);
    Rng rng(3);
    for (auto& v : x.values) v = rng.normal();
    const panel::WeekRange train{0, 15};
    const auto m = fit_ridge(x, p, {{2}, 12}, 1e12, train);
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t t = 0; t + 2 < 15; ++t) {
            sum += p.cpc(k, t + 2);
            ++n;
        }
    }
    EXPECT_EQ(m.head(2).rows, n);
    for (double w : m.head(2).weights) EXPECT_LT(std::abs(w), 1e-9);
    EXPECT_NEAR(m.predict_keyword(m.head(2), 0, x.row(0, 17)), sum / static_cast<double>(n), 1e-9);
}

TEST(Ridge, MatchesDenseInverseOracle) {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        // Five keywords, one usable origin each: a 5 x 3 system.
        std::vector<std::vector<double>> s(5, std::vector<double>(3));
        for (auto& row : s) {
            for (auto& v : row) v = rng.uniform(0.5, 5.0);
        }
        const auto p = test::panel_from_series(s);
        auto x = tensor(5, 3, 3);
        x.origin_weeks = {0};
        for (auto& v : x.values) v = rng.normal() * 3.0 + 1.0;
        const double lambda = 0.1;
        const auto m = fit_ridge(x, p, {{1}, 12}, lambda, {0, 2});

        std::vector<std::vector<double>> z(5, std::vector<double>(3));
        std::vector<double> mu(3, 0.0), sd(3, 0.0), y(5);
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 5; ++k) mu[j] += x.at(k, 1, j) / 5.0;
            for (std::size_t k = 0; k < 5; ++k) sd[j] += (x.at(k, 1, j) - mu[j]) * (x.at(k, 1, j) - mu[j]) / 5.0;
            sd[j] = std::sqrt(sd[j]);
        }
        double ymean = 0.0;
        for (std::size_t k = 0; k < 5; ++k) {
            y[k] = p.cpc(k, 1);
            ymean += y[k] / 5.0;
            for (std::size_t j = 0; j < 3; ++j) z[k][j] = (x.at(k, 1, j) - mu[j]) / sd[j];
        }
        std::vector<std::vector<double>> a(3, std::vector<double>(3, 0.0));
        std::vector<double> b(3, 0.0);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                for (std::size_t k = 0; k < 5; ++k) a[i][j] += z[k][i] * z[k][j];
            }
            a[i][i] += lambda;
            for (std::size_t k = 0; k < 5; ++k) b[i] += z[k][i] * (y[k] - ymean);
        }
        const auto w = gauss_jordan(a, b);
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(m.head(1).weights[j], w[j], 1e-8);
        EXPECT_NEAR(m.head(1).intercept, ymean, 1e-8);
        for (std::size_t k = 0; k < 5; ++k) {
            double pred = ymean;
            for (std::size_t j = 0; j < 3; ++j) pred += w[j] * z[k][j];
            EXPECT_NEAR(m.predict_keyword(m.head(1), k, x.row(k, 1)), pred, 1e-8);
        }
    }
}

TEST(Ridge, AffineInvariance) {
    const auto p = test::random_panel(5, 10, 30);
    auto x = tensor(10, 30, 4);
    Rng rng(6);
    for (auto& v : x.values) v = rng.normal();
    const panel::WeekRange train{0, 24};
    const ForecastTask task{{1, 6}, 12};
    const auto base = fit_ridge(x, p, task, 0.5, train);
    auto y = x;
    for (std::size_t i = 2; i < y.values.size(); i += 4) y.values[i] = -37.5 * y.values[i] + 1234.0;
    const auto moved = fit_ridge(y, p, task, 0.5, train);
    const std::vector<OriginRequest> req{{1, {24, 25, 26}}, {6, {24}}};
    const auto a = predict(base, x, req), b = predict(moved, y, req);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_NEAR(a.entries[i].value, b.entries[i].value, 1e-6);
}

TEST(Ridge, ConstantColumnsKeepZeroWeight) {
    const auto p = test::random_panel(7, 5, 20);
    auto x = tensor(5, 20, 2);
    Rng rng(8);
    for (std::size_t i = 0; i < x.values.size(); i += 2) {
        x.values[i] = rng.normal();
        x.values[i + 1] = 3.0;
    }
    const auto m = fit_ridge(x, p, {{1}, 12}, 1.0, {0, 15});
    EXPECT_EQ(m.head(1).weights[1], 0.0);
    EXPECT_EQ(m.scale[1], 1.0);
}

TEST(Ridge, SingularWithoutPenaltyIsFatal) {
    const auto p = test::random_panel(9, 5, 20);
    auto x = tensor(5, 20, 2);
    Rng rng(10);
    for (std::size_t i = 0; i < x.values.size(); i += 2) x.values[i] = x.values[i + 1] = rng.normal();
    try {
        fit_ridge(x, p, {{1}, 12}, 0.0, {0, 15});
        FAIL() << "expected a singular system";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::numeric);
        EXPECT_NE(std::string(e.what()).find("lambda"), std::string::npos);
    }
    EXPECT_NO_THROW(fit_ridge(x, p, {{1}, 12}, 0.1, {0, 15}));
}

TEST(Ridge, KeywordScalingUsesTrainingMeans) {
    const auto p = test::panel_from_series({{1, 2, 3, 100}, {4, 4, 4, 4}});
    const auto s = keyword_scales(p, {0, 3});
    EXPECT_DOUBLE_EQ(s[0], 2.0);
    EXPECT_DOUBLE_EQ(s[1], 4.0);
    const auto missing = test::panel_from_series({{1, 3, 5, 7}, {panel::kUndefined, panel::kUndefined, 9, 9}});
    EXPECT_DOUBLE_EQ(keyword_scales(missing, {0, 2})[1], 2.0);
}

TEST(Ridge, ScaledModelRecoversProportionalTargets) {
    // Every keyword follows cpc(t+1) = 0.5 cpc(t) + 0.5 level_k, levels far apart.
    std::vector<std::vector<double>> s(6, std::vector<double>(40));
    Rng rng(12);
    for (std::size_t k = 0; k < 6; ++k) {
        const double level = std::pow(10.0, static_cast<double>(k) / 2.0);
        s[k][0] = level * rng.uniform(0.5, 1.5);
        for (std::size_t t = 1; t < 40; ++t) s[k][t] = 0.5 * s[k][t - 1] + 0.5 * level * rng.uniform(0.9, 1.1);
    }
    const auto p = test::panel_from_series(s);
    features::FeatureConfig cfg;
    cfg.own_lags = {1};
    const auto x = features::build_features(p, {}, {}, {}, proxies::Gazetteer::builtin(), cfg);
    const auto none = fit_ridge(x, p, {{1}, 12}, 1e-6, {0, 30}, RidgeScaling::none);
    const auto scaled = fit_ridge(x, p, {{1}, 12}, 1e-6, {0, 30}, RidgeScaling::keyword);
    EXPECT_EQ(scaled.keyword_scale.size(), 6u);
    double err_none = 0.0, err_scaled = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t t = 30; t + 1 < 40; ++t) {
            const double a = p.cpc(k, t + 1);
            err_none += std::abs(none.predict_keyword(none.head(1), k, x.row(k, t + 1)) - a) / a;
            err_scaled += std::abs(scaled.predict_keyword(scaled.head(1), k, x.row(k, t + 1)) - a) / a;
        }
    }
    EXPECT_LT(err_scaled, err_none);
}

TEST(Predict, HandCheckableDotProduct) {
    RidgeModel m;
    m.catalog = {{"a", features::Family::core, 1, false}, {"b", features::Family::core, 1, false}};
    m.mean = {1.0, -2.0};
    m.scale = {2.0, 0.5};
    m.heads.push_back({3, {0.4, -0.1}, 1.25, 0, 0.0});
    auto x = tensor(1, 3, 2);
    x.catalog = m.catalog;
    x.row(0, 1)[0] = 5.0;
    x.row(0, 1)[1] = -1.0;
    const std::vector<OriginRequest> req{{3, {0}}};
    const auto f = predict(m, x, req);
    ASSERT_EQ(f.entries.size(), 1u);
    EXPECT_DOUBLE_EQ(f.entries[0].value, 1.25 + 0.4 * (5.0 - 1.0) / 2.0 - 0.1 * (-1.0 + 2.0) / 0.5);
    EXPECT_EQ(predict(m, x, req), f);
    const std::vector<OriginRequest> wrong{{6, {0}}};
    EXPECT_THROW(predict(m, x, wrong), Error);
    m.heads[0].intercept = -10.0;
    EXPECT_EQ(predict(m, x, req).entries[0].value, 0.0);
}

TEST(Predict, Clamp) {
    EXPECT_EQ(clamp_prediction(-0.3), 0.0);
    EXPECT_EQ(clamp_prediction(2.5), 2.5);
    EXPECT_THROW(clamp_prediction(std::nan("")), Error);
    EXPECT_THROW(clamp_prediction(INFINITY), Error);
}

TEST(SeasonalNaive, Examples) {
    std::vector<double> periodic(120), constant(120, 3.5);
    std::vector<double> cycle(52);
    for (std::size_t t = 0; t < 52; ++t) cycle[t] = 2.0 + std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / 52.0);
    for (std::size_t t = 0; t < 120; ++t) periodic[t] = cycle[t % 52];
    const auto p = test::panel_from_series({periodic, constant});
    const std::vector<OriginRequest> req{{6, {60, 80, 100}}, {1, {60}}, {12, {70}}};
    const auto f = seasonal_naive(p, req, 52);
    for (const auto& e : f.entries) {
        EXPECT_EQ(e.value, p.cpc(e.keyword, e.origin + e.horizon)) << e.origin;
        if (e.keyword == 1) {
            EXPECT_EQ(e.value, 3.5);
        }
    }
    const std::vector<OriginRequest> early{{6, {30}}};
    const auto fb = seasonal_naive(p, early, 52);
    EXPECT_EQ(fb.entries[0].value, p.cpc(0, 30));
    const std::vector<OriginRequest> outside{{1, {120}}};
    EXPECT_THROW(seasonal_naive(p, outside, 52), Error);
}

TEST(SeasonalNaive, NeverLooksPastOrigin) {
    const auto p = test::random_panel(13, 3, 40);
    for (std::size_t h = 1; h <= 12; ++h) {
        const std::vector<OriginRequest> req{{h, {20}}};
        for (const auto& e : seasonal_naive(p, req, 4).entries) {
            bool found = false;
            for (std::size_t w = 0; w <= 20; ++w) found = found || p.cpc(e.keyword, w) == e.value;
            EXPECT_TRUE(found) << h;
        }
    }
}

TEST(ForecastCsv, RoundTrip) {
    const auto p = test::random_panel(14, 4, 30);
    const std::vector<OriginRequest> req{{1, {20, 21}}, {6, {20}}};
    auto f = seasonal_naive(p, req, 52);
    f.entries[0].value = 0.1 + 0.2;
    std::ostringstream out;
    write_forecasts(out, f, p);
    std::istringstream in(out.str());
    EXPECT_EQ(read_forecasts(in, p), f);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "model,config_hash,keyword,origin_week,horizon,prediction");
}
