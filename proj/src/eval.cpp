#include "cpcc/error.hpp"
#include "cpcc/eval.hpp"
#include "cpcc/text_format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

namespace cpcc::eval {

SplitSpec chronological_split(std::size_t weeks, double fraction) {
    require(fraction > 0.0 && fraction < 1.0, ErrorCode::config, "test fraction must lie in (0, 1)");
    // The epsilon keeps products like 0.2 * 10 from rounding up to 3.
    const auto test = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(weeks) - 1e-9));
    require(test >= 1 && test < weeks, ErrorCode::config,
            "panel of " + std::to_string(weeks) + " weeks is too short for a test split");
    SplitSpec s;
    s.fraction = fraction;
    s.train = {0, weeks - test};
    s.test = {weeks - test, weeks};
    return s;
}

std::vector<std::size_t> test_origins(const SplitSpec& split, std::size_t horizon) {
    std::vector<std::size_t> out;
    for (std::size_t w = split.test.begin; w + horizon < split.test.end; ++w) out.push_back(w);
    return out;
}

std::vector<models::OriginRequest> test_requests(const SplitSpec& split, std::span<const std::size_t> horizons) {
    std::vector<models::OriginRequest> out;
    for (auto h : horizons) out.push_back({h, test_origins(split, h)});
    return out;
}

double smape(std::span<const double> actual, std::span<const double> predicted) {
    require(!actual.empty(), ErrorCode::data, "sMAPE of an empty series");
    require(actual.size() == predicted.size(), ErrorCode::data, "sMAPE: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double denom = std::abs(actual[i]) + std::abs(predicted[i]);
        if (denom > 0.0) s += 2.0 * std::abs(predicted[i] - actual[i]) / denom;
    }
    return 100.0 * s / static_cast<double>(actual.size());
}

double rmse(std::span<const double> actual, std::span<const double> predicted) {
    require(!actual.empty(), ErrorCode::data, "RMSE of an empty series");
    require(actual.size() == predicted.size(), ErrorCode::data, "RMSE: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double d = predicted[i] - actual[i];
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(actual.size()));
}

std::string_view quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::low_low: return "low/low";
        case Quadrant::low_high: return "low/high";
        case Quadrant::high_low: return "high/low";
        case Quadrant::high_high: return "high/high";
    }
    return "low/low";
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

FrontierSegmentation frontier_segment(const panel::PanelStats& stats) {
    FrontierSegmentation seg;
    seg.quadrant.assign(stats.per_keyword.size(), std::nullopt);
    std::vector<double> means, cvs;
    for (std::size_t k = 0; k < stats.per_keyword.size(); ++k) {
        const auto& s = stats.per_keyword[k];
        if (s.cv_defined && std::isfinite(s.mean) && std::isfinite(s.cv)) {
            means.push_back(s.mean);
            cvs.push_back(s.cv);
        } else {
            seg.excluded.push_back(k);
        }
    }
    require(means.size() >= 4, ErrorCode::data,
            "frontier segmentation needs at least 4 keywords with defined statistics (have " +
                std::to_string(means.size()) + ")");
    seg.mean_median = median(means);
    seg.cv_median = median(cvs);
    for (std::size_t k = 0; k < stats.per_keyword.size(); ++k) {
        const auto& s = stats.per_keyword[k];
        if (!(s.cv_defined && std::isfinite(s.mean) && std::isfinite(s.cv))) continue;
        const bool high_level = s.mean > seg.mean_median;
        const bool high_cv = s.cv > seg.cv_median;
        const auto q = static_cast<Quadrant>((high_level ? 2 : 0) + (high_cv ? 1 : 0));
        seg.quadrant[k] = q;
        ++seg.counts[static_cast<std::size_t>(q)];
    }
    return seg;
}

void write_frontier(std::ostream& out, const FrontierSegmentation& seg, const panel::PanelStats& stats,
                    const panel::WeeklyPanel& panel) {
    out << "keyword,mean_cpc,cv,quadrant\n";
    for (std::size_t k = 0; k < seg.quadrant.size(); ++k) {
        const auto& s = stats.per_keyword[k];
        out << csv_field(panel.keywords[k]) << ',' << format_double(s.mean) << ','
            << format_double(s.cv_defined ? s.cv : panel::kUndefined) << ','
            << (seg.quadrant[k] ? quadrant_name(*seg.quadrant[k]) : std::string_view("excluded")) << '\n';
    }
}

Aggregate aggregate(std::vector<double> values) {
    Aggregate a;
    a.n = values.size();
    if (values.empty()) return a;
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += v;
    a.mean = s / static_cast<double>(values.size());
    if (values.size() >= 2) {
        std::vector<double> sq;
        sq.reserve(values.size());
        for (double v : values) sq.push_back((v - a.mean) * (v - a.mean));
        std::sort(sq.begin(), sq.end());
        double ss = 0.0;
        for (double v : sq) ss += v;
        a.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return a;
}

const HorizonReport& EvalReport::at(std::size_t horizon) const {
    for (const auto& h : horizons) {
        if (h.horizon == horizon) return h;
    }
    fail(ErrorCode::data, "report for model '" + model + "' has no horizon " + std::to_string(horizon));
}

EvalReport evaluate(const models::ForecastSet& forecasts, const panel::WeeklyPanel& panel, const SplitSpec& split,
                    const FrontierSegmentation* segmentation) {
    require(split.test.end <= panel.n_weeks(), ErrorCode::data, "split does not match the panel");
    if (segmentation) {
        require(segmentation->quadrant.size() == panel.n_keywords(), ErrorCode::data,
                "segmentation is not aligned with the panel");
    }
    // (horizon, keyword) -> (origin, prediction)
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, double>>> groups;
    std::set<std::size_t> horizons;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : forecasts.entries) {
        require(e.keyword < panel.n_keywords() && e.origin < panel.n_weeks() && e.horizon > 0, ErrorCode::data,
                "forecast entry outside the panel");
        require(seen.emplace(e.keyword, e.origin, e.horizon).second, ErrorCode::data,
                "duplicate forecast for '" + panel.keywords[e.keyword] + "' at origin " +
                    format_iso_week(panel.weeks[e.origin]) + ", horizon " + std::to_string(e.horizon));
        horizons.insert(e.horizon);
        const std::size_t target = e.origin + e.horizon;
        if (e.origin < split.test.begin || target >= split.test.end) continue;
        if (!panel.is_actual(e.keyword, target)) continue;
        groups[{e.horizon, e.keyword}].emplace_back(e.origin, e.value);
    }

    EvalReport report;
    report.model = forecasts.model;
    for (std::size_t h : horizons) {
        HorizonReport hr;
        hr.model = forecasts.model;
        hr.horizon = h;
        std::vector<double> sm, rm;
        std::array<std::vector<double>, 4> qsm, qrm;
        for (std::size_t k = 0; k < panel.n_keywords(); ++k) {
            const auto it = groups.find({h, k});
            if (it == groups.end()) {
                ++hr.keywords_without_pairs;
                continue;
            }
            auto pairs = it->second;
            std::sort(pairs.begin(), pairs.end());
            std::vector<double> actual, predicted;
            for (const auto& [origin, value] : pairs) {
                actual.push_back(panel.cpc(k, origin + h));
                predicted.push_back(value);
            }
            KeywordScore ks{k, pairs.size(), smape(actual, predicted), rmse(actual, predicted)};
            hr.scored_pairs += ks.pairs;
            sm.push_back(ks.smape);
            rm.push_back(ks.rmse);
            if (segmentation && segmentation->quadrant[k]) {
                const auto q = static_cast<std::size_t>(*segmentation->quadrant[k]);
                qsm[q].push_back(ks.smape);
                qrm[q].push_back(ks.rmse);
            }
            hr.per_keyword.push_back(ks);
        }
        hr.smape = aggregate(std::move(sm));
        hr.rmse = aggregate(std::move(rm));
        for (std::size_t q = 0; q < 4; ++q) {
            hr.quadrant_smape[q] = aggregate(std::move(qsm[q]));
            hr.quadrant_rmse[q] = aggregate(std::move(qrm[q]));
        }
        report.horizons.push_back(std::move(hr));
    }
    return report;
}

namespace {

void summary_row(std::ostream& out, const HorizonReport& h, std::string_view quadrant, std::string_view metric,
                 const Aggregate& a) {
    out << csv_field(h.model) << ',' << h.horizon << ',' << quadrant << ',' << metric << ',' << format_double(a.mean)
        << ',' << format_double(a.std) << ',' << a.n << '\n';
}

} // namespace

void write_summary(std::ostream& out, std::span<const EvalReport> reports) {
    out << "model,horizon,quadrant,metric,mean,std,n\n";
    for (const auto& r : reports) {
        for (const auto& h : r.horizons) {
            summary_row(out, h, "all", "smape", h.smape);
            summary_row(out, h, "all", "rmse", h.rmse);
            for (auto q : kQuadrants) {
                summary_row(out, h, quadrant_name(q), "smape", h.quadrant_smape[static_cast<std::size_t>(q)]);
                summary_row(out, h, quadrant_name(q), "rmse", h.quadrant_rmse[static_cast<std::size_t>(q)]);
            }
        }
    }
}

void write_reports(const std::filesystem::path& dir, std::span<const EvalReport> reports,
                   const panel::WeeklyPanel& panel) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name);
        require(f.good(), ErrorCode::io, "cannot write " + (dir / name).string());
        return f;
    };
    {
        auto f = open("per_keyword.csv");
        f << "model,horizon,keyword,pairs,smape,rmse\n";
        for (const auto& r : reports) {
            for (const auto& h : r.horizons) {
                for (const auto& k : h.per_keyword) {
                    f << csv_field(h.model) << ',' << h.horizon << ',' << csv_field(panel.keywords[k.keyword]) << ','
                      << k.pairs << ',' << format_double(k.smape) << ',' << format_double(k.rmse) << '\n';
                }
            }
        }
    }
    {
        auto f = open("summary.csv");
        write_summary(f, reports);
    }
    {
        auto f = open("long.csv");
        f << "model,horizon,keyword,metric,value\n";
        for (const auto& r : reports) {
            for (const auto& h : r.horizons) {
                for (const auto& k : h.per_keyword) {
                    const auto kw = csv_field(panel.keywords[k.keyword]);
                    f << csv_field(h.model) << ',' << h.horizon << ',' << kw << ",smape," << format_double(k.smape) << '\n';
                    f << csv_field(h.model) << ',' << h.horizon << ',' << kw << ",rmse," << format_double(k.rmse) << '\n';
                }
            }
        }
    }
}

} // namespace cpcc::eval
