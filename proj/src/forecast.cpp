#include "cpcc/error.hpp"
#include "cpcc/forecast.hpp"
#include "cpcc/text_format.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace cpcc::models {

std::vector<double> keyword_scales(const panel::WeeklyPanel& panel, panel::WeekRange train) {
    const std::size_t n = panel.n_keywords();
    std::vector<double> scale(n, 1.0);
    std::vector<bool> seen(n, false);
    double pooled = 0.0;
    std::size_t pooled_n = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        std::size_t c = 0;
        for (std::size_t t = train.begin; t < train.end && t < panel.n_weeks(); ++t) {
            if (panel.is_actual(k, t)) {
                s += panel.cpc(k, t);
                ++c;
            }
        }
        seen[k] = c > 0;
        if (c > 0 && s > 0.0) scale[k] = s / static_cast<double>(c);
        pooled += s;
        pooled_n += c;
    }
    if (pooled_n > 0 && pooled > 0.0) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!seen[k]) scale[k] = pooled / static_cast<double>(pooled_n);
        }
    }
    return scale;
}

double clamp_prediction(double raw) {
    require(std::isfinite(raw), ErrorCode::numeric, "non-finite prediction");
    return raw < 0.0 ? 0.0 : raw;
}

void write_forecasts(std::ostream& out, const ForecastSet& f, const panel::WeeklyPanel& panel) {
    out << "model,config_hash,keyword,origin_week,horizon,prediction\n";
    for (const auto& e : f.entries) {
        out << csv_field(f.model) << ',' << csv_field(f.config_hash) << ',' << csv_field(panel.keywords[e.keyword])
            << ',' << format_iso_week(panel.weeks[e.origin]) << ',' << e.horizon << ',' << format_double(e.value)
            << '\n';
    }
}

void write_forecasts(const std::filesystem::path& path, const ForecastSet& f, const panel::WeeklyPanel& panel) {
    std::ofstream out(path);
    require(out.good(), ErrorCode::io, "cannot write forecasts to " + path.string());
    write_forecasts(out, f, panel);
    require(out.good(), ErrorCode::io, "failed writing " + path.string());
}

ForecastSet read_forecasts(std::istream& in, const panel::WeeklyPanel& panel) {
    std::unordered_map<std::string, std::size_t> keyword_ids;
    for (std::size_t k = 0; k < panel.n_keywords(); ++k) keyword_ids.emplace(panel.keywords[k], k);

    ForecastSet f;
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::data, "forecast file is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    require(line == "model,config_hash,keyword,origin_week,horizon,prediction", ErrorCode::data,
            "forecast file: unexpected header");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto where = "forecast file line " + std::to_string(line_no) + ": ";
        const auto fields = split_csv_line(line);
        require(fields.size() == 6, ErrorCode::data, where + "expected 6 fields");
        if (f.entries.empty()) {
            f.model = fields[0];
            f.config_hash = fields[1];
        }
        require(fields[0] == f.model, ErrorCode::data, where + "mixes models in one file");
        const auto kw = keyword_ids.find(fields[2]);
        require(kw != keyword_ids.end(), ErrorCode::data, where + "keyword '" + fields[2] + "' not in the panel");
        const auto week = parse_iso_week(fields[3]);
        require(week.has_value(), ErrorCode::data, where + "bad origin week '" + fields[3] + "'");
        const auto origin = panel.week_index(*week);
        require(origin.has_value(), ErrorCode::data, where + "origin week " + fields[3] + " not in the panel");
        const auto horizon = parse_size(fields[4]);
        const auto value = parse_double(fields[5]);
        require(horizon && *horizon > 0 && value && std::isfinite(*value), ErrorCode::data,
                where + "bad horizon or prediction");
        f.entries.push_back({kw->second, *origin, *horizon, *value});
    }
    return f;
}

ForecastSet read_forecasts(const std::filesystem::path& path, const panel::WeeklyPanel& panel) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "cannot read forecasts " + path.string());
    return read_forecasts(in, panel);
}

} // namespace cpcc::models
