#include "cpcc/error.hpp"
#include "cpcc/rng.hpp"
#include "cpcc/ridge.hpp"
#include "cpcc/text_format.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cpcc::models {

std::string_view scaling_name(RidgeScaling s) { return s == RidgeScaling::keyword ? "keyword" : "none"; }

std::optional<RidgeScaling> parse_scaling(std::string_view name) {
    if (name == "none") return RidgeScaling::none;
    if (name == "keyword") return RidgeScaling::keyword;
    return std::nullopt;
}

namespace {

// Row of keyword k as the regression sees it.
void scaled_row(const RidgeModel& m, std::size_t k, std::span<const double> row, std::vector<double>& out) {
    out.assign(row.begin(), row.end());
    if (m.scaling != RidgeScaling::keyword) return;
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (m.catalog[j].cpc_units) out[j] /= m.keyword_scale[k];
    }
}

} // namespace

const RidgeHead& RidgeModel::head(std::size_t horizon) const {
    for (const auto& h : heads) {
        if (h.horizon == horizon) return h;
    }
    fail(ErrorCode::config, "ridge model was not trained for horizon " + std::to_string(horizon));
}

double RidgeModel::predict_raw(const RidgeHead& h, std::span<const double> row) const {
    double s = h.intercept;
    for (std::size_t j = 0; j < row.size(); ++j) s += h.weights[j] * ((row[j] - mean[j]) / scale[j]);
    return s;
}

double RidgeModel::predict_keyword(const RidgeHead& h, std::size_t k, std::span<const double> row) const {
    std::vector<double> buf;
    scaled_row(*this, k, row, buf);
    const double raw = predict_raw(h, buf);
    return scaling == RidgeScaling::keyword ? raw * keyword_scale[k] : raw;
}

std::string RidgeModel::config_hash() const {
    std::string desc = "ridge;lambda=" + format_double(lambda) + ";scaling=" + std::string(scaling_name(scaling)) +
                       ";features=" + feature_hash;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(desc)));
    return buf;
}

RidgeModel fit_ridge(const features::FeatureTensor& x, const panel::WeeklyPanel& panel, const ForecastTask& task,
                     double lambda, panel::WeekRange train, RidgeScaling scaling) {
    require(lambda >= 0.0 && std::isfinite(lambda), ErrorCode::config, "ridge lambda must be >= 0");
    require(!task.horizons.empty(), ErrorCode::config, "no horizons requested");
    require(x.n == panel.n_keywords() && x.t == panel.n_weeks(), ErrorCode::data,
            "feature tensor is not aligned with the panel");
    require(train.end <= x.t && train.size() > 0, ErrorCode::config, "training range outside the panel");
    require(!x.origin_weeks.empty(), ErrorCode::data, "feature tensor has no usable origins");

    const std::size_t f = x.f;
    RidgeModel m;
    m.lambda = lambda;
    m.catalog = x.catalog;
    m.feature_hash = x.config_hash;
    m.train = train;
    m.scaling = scaling;
    if (scaling == RidgeScaling::keyword) m.keyword_scale = keyword_scales(panel, train);
    std::vector<double> buf;
    auto row_of = [&](std::size_t k, std::size_t t) -> std::span<const double> {
        scaled_row(m, k, x.row(k, features::feature_row(t)), buf);
        return buf;
    };

    const std::size_t first_origin = std::max(x.origin_weeks.front(), train.begin);
    auto usable = [&](std::size_t t, std::size_t h) {
        return t >= first_origin && features::feature_row(t) < train.end && t + h < train.end;
    };

    // Standardization over every row any horizon trains on.
    const std::size_t min_h = *std::min_element(task.horizons.begin(), task.horizons.end());
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f));
    Eigen::VectorXd sumsq = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f));
    std::size_t count = 0;
    for (std::size_t k = 0; k < x.n; ++k) {
        for (std::size_t t = first_origin; usable(t, min_h); ++t) {
            const auto row = row_of(k, t);
            for (std::size_t j = 0; j < f; ++j) sum[static_cast<Eigen::Index>(j)] += row[j];
            ++count;
        }
    }
    require(count > 1, ErrorCode::data, "too few training rows for ridge regression");
    m.mean.resize(f);
    for (std::size_t j = 0; j < f; ++j) m.mean[j] = sum[static_cast<Eigen::Index>(j)] / static_cast<double>(count);
    for (std::size_t k = 0; k < x.n; ++k) {
        for (std::size_t t = first_origin; usable(t, min_h); ++t) {
            const auto row = row_of(k, t);
            for (std::size_t j = 0; j < f; ++j) {
                const double d = row[j] - m.mean[j];
                sumsq[static_cast<Eigen::Index>(j)] += d * d;
            }
        }
    }
    m.scale.resize(f);
    std::vector<bool> active(f);
    for (std::size_t j = 0; j < f; ++j) {
        const double sd = std::sqrt(sumsq[static_cast<Eigen::Index>(j)] / static_cast<double>(count));
        active[j] = sd > 1e-12 * std::max(1.0, std::abs(m.mean[j]));
        m.scale[j] = active[j] ? sd : 1.0;
    }
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < f; ++j) {
        if (active[j]) cols.push_back(j);
    }
    const auto p = static_cast<Eigen::Index>(cols.size());

    for (std::size_t h : task.horizons) {
        require(h > 0, ErrorCode::config, "horizons must be positive");
        std::vector<std::pair<std::size_t, std::size_t>> rows;  // (keyword, origin)
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = first_origin; usable(t, h); ++t) {
                if (panel.is_actual(k, t + h)) rows.emplace_back(k, t);
            }
        }
        require(rows.size() > 1, ErrorCode::data,
                "no training rows for horizon " + std::to_string(h) + "; the training range is too short");

        Eigen::MatrixXd z(static_cast<Eigen::Index>(rows.size()), p);
        Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto [k, t] = rows[r];
            const auto row = row_of(k, t);
            for (Eigen::Index c = 0; c < p; ++c) {
                const std::size_t j = cols[static_cast<std::size_t>(c)];
                z(static_cast<Eigen::Index>(r), c) = (row[j] - m.mean[j]) / m.scale[j];
            }
            y[static_cast<Eigen::Index>(r)] =
                scaling == RidgeScaling::keyword ? panel.cpc(k, t + h) / m.keyword_scale[k] : panel.cpc(k, t + h);
        }
        const double y_mean = y.mean();
        const Eigen::VectorXd yc = y.array() - y_mean;
        // Centering the design (the standardization mean comes from the union
        // of rows) keeps the intercept out of the penalty.
        const Eigen::RowVectorXd z_mean = z.colwise().mean();
        z.rowwise() -= z_mean;

        RidgeHead head;
        head.horizon = h;
        head.rows = rows.size();
        head.weights.assign(f, 0.0);
        Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
        if (p > 0) {
            Eigen::MatrixXd gram = z.transpose() * z;
            gram.diagonal().array() += lambda;
            const Eigen::LLT<Eigen::MatrixXd> llt(gram);
            const bool singular = llt.info() != Eigen::Success || llt.rcond() < 1e-12;
            if (singular) {
                fail(ErrorCode::numeric,
                     "ridge normal equations are singular for horizon " + std::to_string(h) +
                         (lambda == 0.0 ? "; set lambda > 0" : ""));
            }
            w = llt.solve(z.transpose() * yc);
        }
        double intercept = y_mean;
        for (Eigen::Index c = 0; c < p; ++c) {
            head.weights[cols[static_cast<std::size_t>(c)]] = w[c];
            intercept -= w[c] * z_mean[c];
        }
        head.intercept = intercept;
        for (double v : head.weights) require(std::isfinite(v), ErrorCode::numeric, "non-finite ridge weight");

        const Eigen::VectorXd resid = z * w - yc;
        head.train_rmse = std::sqrt(resid.squaredNorm() / static_cast<double>(rows.size()));
        m.heads.push_back(std::move(head));
    }
    return m;
}

ForecastSet predict(const RidgeModel& model, const features::FeatureTensor& x, std::span<const OriginRequest> requests) {
    require(x.catalog == model.catalog, ErrorCode::data, "feature catalog differs from the one the model was trained on");
    ForecastSet out;
    out.model = "ridge";
    out.config_hash = model.config_hash();
    for (const auto& req : requests) {
        const auto& head = model.head(req.horizon);
        for (std::size_t t : req.origins) {
            require(features::feature_row(t) < x.t, ErrorCode::config,
                    "origin " + std::to_string(t) + " has no feature row");
            for (std::size_t k = 0; k < x.n; ++k) {
                out.entries.push_back(
                    {k, t, req.horizon, clamp_prediction(model.predict_keyword(head, k, x.row(k, features::feature_row(t))))});
            }
        }
    }
    return out;
}

} // namespace cpcc::models
