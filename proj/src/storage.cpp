#include "cpcc/storage.hpp"

#include "cpcc/embeddings.hpp"
#include "cpcc/error.hpp"
#include "cpcc/text_format.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

namespace cpcc::storage {

using nlohmann::json;

namespace {

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    ensure_parent(path);
    std::ofstream out(path, mode | std::ios::trunc);
    require(out.good(), ErrorCode::io, "cannot write " + path.string());
    return out;
}

std::ifstream open_in(const fs::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    require(in.good(), ErrorCode::io, "cannot read " + path.string());
    return in;
}

void write_json(const fs::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(1) << '\n';
    require(out.good(), ErrorCode::io, "write failed for " + path.string());
}

json read_json(const fs::path& path) {
    auto in = open_in(path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::data, path.string() + ": " + e.what());
    }
}

template <typename T>
T get(const json& j, const char* key, const fs::path& where) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(ErrorCode::data, where.string() + ": missing or invalid field '" + key + "'");
    }
}

std::uint32_t to_le(std::uint32_t v) {
    if constexpr (std::endian::native == std::endian::little) return v;
    return ((v & 0xffu) << 24) | ((v & 0xff00u) << 8) | ((v >> 8) & 0xff00u) | (v >> 24);
}

json catalog_json(const std::vector<features::FeatureDescriptor>& catalog) {
    json a = json::array();
    for (const auto& d : catalog) {
        a.push_back({{"name", d.name},
                     {"family", std::string(features::family_name(d.family))},
                     {"lag", d.lag},
                     {"cpc_units", d.cpc_units}});
    }
    return a;
}

std::vector<features::FeatureDescriptor> catalog_from(const json& a, const fs::path& where) {
    std::vector<features::FeatureDescriptor> out;
    for (const auto& e : a) {
        features::FeatureDescriptor d;
        d.name = get<std::string>(e, "name", where);
        const auto fam = features::parse_family(get<std::string>(e, "family", where));
        require(fam.has_value(), ErrorCode::data, where.string() + ": unknown feature family");
        d.family = *fam;
        d.lag = get<std::size_t>(e, "lag", where);
        d.cpc_units = get<bool>(e, "cpc_units", where);
        out.push_back(std::move(d));
    }
    return out;
}

json range_json(panel::WeekRange r) { return {{"begin", r.begin}, {"end", r.end}}; }

panel::WeekRange range_from(const json& j, const fs::path& where) {
    return {get<std::size_t>(j, "begin", where), get<std::size_t>(j, "end", where)};
}

// Wide CSV: keyword column then one column per ISO week.
template <typename Fn>
void write_wide(const fs::path& path, const panel::WeeklyPanel& p, Fn&& cell) {
    auto out = open_out(path);
    out << "keyword";
    for (const auto& w : p.weeks) out << ',' << format_iso_week(w);
    out << '\n';
    for (std::size_t k = 0; k < p.n_keywords(); ++k) {
        out << csv_field(p.keywords[k]);
        for (std::size_t t = 0; t < p.n_weeks(); ++t) out << ',' << cell(k, t);
        out << '\n';
    }
    require(out.good(), ErrorCode::io, "write failed for " + path.string());
}

template <typename Fn>
void read_wide(const fs::path& path, const panel::WeeklyPanel& p, Fn&& set) {
    auto in = open_in(path);
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::data, path.string() + ": empty file");
    const auto header = split_csv_line(line);
    require(header.size() == p.n_weeks() + 1, ErrorCode::data, path.string() + ": week columns differ from panel.json");
    for (std::size_t t = 0; t < p.n_weeks(); ++t) {
        require(header[t + 1] == format_iso_week(p.weeks[t]), ErrorCode::data,
                path.string() + ": week column " + header[t + 1] + " differs from panel.json");
    }
    std::size_t k = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        require(k < p.n_keywords() && fields.size() == p.n_weeks() + 1 && fields[0] == p.keywords[k], ErrorCode::data,
                path.string() + ": row " + std::to_string(k + 1) + " does not match panel.json");
        for (std::size_t t = 0; t < p.n_weeks(); ++t) set(k, t, fields[t + 1]);
        ++k;
    }
    require(k == p.n_keywords(), ErrorCode::data, path.string() + ": missing keyword rows");
}

double parse_real(const std::string& s, const fs::path& where) {
    if (s.empty()) return panel::kUndefined;
    const auto v = parse_double(s);
    require(v.has_value(), ErrorCode::data, where.string() + ": bad number '" + s + "'");
    return *v;
}

std::int64_t parse_count(const std::string& s, const fs::path& where) {
    const auto v = parse_integer<std::int64_t>(s);
    require(v.has_value(), ErrorCode::data, where.string() + ": bad count '" + s + "'");
    return *v;
}

std::string mask_string(const panel::Grid<std::uint8_t>& g, std::size_t k) {
    std::string s;
    for (auto v : g.row(k)) s.push_back(v ? '1' : '0');
    return s;
}

json counts_json(const std::vector<panel::CountMap>& cells, std::size_t weeks) {
    json a = json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].empty()) continue;
        a.push_back({i / weeks, i % weeks, cells[i]});
    }
    return a;
}

void counts_from(const json& a, std::vector<panel::CountMap>& cells, std::size_t weeks, const fs::path& where) {
    for (const auto& e : a) {
        require(e.is_array() && e.size() == 3, ErrorCode::data, where.string() + ": bad count record");
        const auto k = e[0].get<std::size_t>();
        const auto t = e[1].get<std::size_t>();
        require(t < weeks && k * weeks + t < cells.size(), ErrorCode::data, where.string() + ": count cell out of range");
        cells[k * weeks + t] = e[2].get<panel::CountMap>();
    }
}

} // namespace

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    require(!ec && fs::is_directory(dir), ErrorCode::io, "cannot create directory " + dir.string());
}

void ensure_parent(const fs::path& file) {
    if (file.has_parent_path()) ensure_dir(file.parent_path());
}

void write_f32(const fs::path& path, std::span<const float> values) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    std::vector<std::uint32_t> buf(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) buf[i] = to_le(std::bit_cast<std::uint32_t>(values[i]));
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 4));
    require(out.good(), ErrorCode::io, "write failed for " + path.string());
}

std::vector<float> read_f32(const fs::path& path) {
    auto in = open_in(path, std::ios::in | std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    require(bytes.size() % 4 == 0, ErrorCode::data, path.string() + ": size is not a multiple of 4 bytes");
    std::vector<float> out(bytes.size() / 4);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t v = 0;
        std::memcpy(&v, bytes.data() + 4 * i, 4);
        out[i] = std::bit_cast<float>(to_le(v));
    }
    return out;
}

void write_panel(const fs::path& dir, const panel::WeeklyPanel& p) {
    ensure_dir(dir);
    write_wide(dir / "impressions.csv", p, [&](auto k, auto t) { return std::to_string(p.impressions(k, t)); });
    write_wide(dir / "clicks.csv", p, [&](auto k, auto t) { return std::to_string(p.clicks(k, t)); });
    write_wide(dir / "cost.csv", p, [&](auto k, auto t) { return format_double(p.cost(k, t)); });
    write_wide(dir / "cpc.csv", p, [&](auto k, auto t) { return p.has_cpc(k, t) ? format_double(p.cpc(k, t)) : ""; });
    json j;
    j["keywords"] = p.keywords;
    json weeks = json::array();
    for (const auto& w : p.weeks) weeks.push_back(format_iso_week(w));
    j["weeks"] = weeks;
    j["first_week"] = p.weeks.empty() ? "" : format_iso_week(p.weeks.front());
    j["last_week"] = p.weeks.empty() ? "" : format_iso_week(p.weeks.back());
    json observed = json::array(), imputed = json::array();
    for (std::size_t k = 0; k < p.n_keywords(); ++k) {
        observed.push_back(mask_string(p.observed, k));
        imputed.push_back(mask_string(p.imputed, k));
    }
    j["observed"] = observed;
    j["imputed"] = imputed;
    j["device_counts"] = counts_json(p.device_counts, p.n_weeks());
    j["searchtype_counts"] = counts_json(p.searchtype_counts, p.n_weeks());
    write_json(dir / "panel.json", j);
}

panel::WeeklyPanel read_panel(const fs::path& dir) {
    const auto meta_path = dir / "panel.json";
    require(fs::exists(meta_path), ErrorCode::io, "no panel found in " + dir.string());
    const json j = read_json(meta_path);
    std::vector<IsoWeek> weeks;
    for (const auto& s : get<std::vector<std::string>>(j, "weeks", meta_path)) {
        const auto w = parse_iso_week(s);
        require(w.has_value(), ErrorCode::data, meta_path.string() + ": bad ISO week " + s);
        weeks.push_back(*w);
    }
    auto p = panel::WeeklyPanel::empty(get<std::vector<std::string>>(j, "keywords", meta_path), weeks);
    const auto observed = get<std::vector<std::string>>(j, "observed", meta_path);
    const auto imputed = get<std::vector<std::string>>(j, "imputed", meta_path);
    require(observed.size() == p.n_keywords() && imputed.size() == p.n_keywords(), ErrorCode::data,
            meta_path.string() + ": mask rows differ from keyword count");
    for (std::size_t k = 0; k < p.n_keywords(); ++k) {
        require(observed[k].size() == p.n_weeks() && imputed[k].size() == p.n_weeks(), ErrorCode::data,
                meta_path.string() + ": mask length differs from week count");
        for (std::size_t t = 0; t < p.n_weeks(); ++t) {
            p.observed(k, t) = observed[k][t] == '1';
            p.imputed(k, t) = imputed[k][t] == '1';
        }
    }
    counts_from(j.value("device_counts", json::array()), p.device_counts, p.n_weeks(), meta_path);
    counts_from(j.value("searchtype_counts", json::array()), p.searchtype_counts, p.n_weeks(), meta_path);
    read_wide(dir / "impressions.csv", p, [&](auto k, auto t, const std::string& s) {
        p.impressions(k, t) = parse_count(s, dir / "impressions.csv");
    });
    read_wide(dir / "clicks.csv", p,
              [&](auto k, auto t, const std::string& s) { p.clicks(k, t) = parse_count(s, dir / "clicks.csv"); });
    read_wide(dir / "cost.csv", p,
              [&](auto k, auto t, const std::string& s) { p.cost(k, t) = parse_real(s, dir / "cost.csv"); });
    read_wide(dir / "cpc.csv", p,
              [&](auto k, auto t, const std::string& s) { p.cpc(k, t) = parse_real(s, dir / "cpc.csv"); });
    return p;
}

void write_proxies(const fs::path& dir, const proxies::ProxySet& set, const proxies::ProxyConfig& cfg,
                   std::span<const std::string> keywords) {
    ensure_dir(dir);
    {
        auto out = open_out(dir / "embeddings.jsonl");
        proxies::write_embeddings(out, set.embeddings, keywords);
    }
    {
        auto out = open_out(dir / "edges.csv");
        proxies::write_edge_list(out, set.graph);
    }
    {
        auto out = open_out(dir / "dtw.csv");
        out << "src,rank,dst,distance\n";
        for (std::size_t i = 0; i < set.dtw.lists.size(); ++i) {
            for (std::size_t r = 0; r < set.dtw.lists[i].size(); ++r) {
                const auto& nb = set.dtw.lists[i][r];
                out << i << ',' << r << ',' << nb.id << ',' << format_double(nb.distance) << '\n';
            }
        }
    }
    {
        auto out = open_out(dir / "geo.csv");
        out << "keyword,continent,country,city\n";
        for (std::size_t k = 0; k < set.geo.size(); ++k) {
            const auto& g = set.geo[k];
            out << csv_field(keywords[k]) << ',' << csv_field(g.continent.value_or("")) << ','
                << csv_field(g.country.value_or("")) << ',' << csv_field(g.city.value_or("")) << '\n';
        }
    }
    {
        auto out = open_out(dir / "gazetteer.csv");
        set.gazetteer.write_csv(out);
    }
    json j;
    j["nodes"] = keywords.size();
    j["k"] = cfg.k;
    j["dtw_m"] = cfg.dtw_m;
    j["dtw_band"] = cfg.dtw_band;
    j["train"] = range_json(cfg.train);
    j["embedding_source"] = set.embeddings.source == proxies::EmbeddingSource::exported ? "exported" : "fallback";
    j["embedding_dim"] = set.embeddings.dim;
    j["fallback_rows"] = set.embeddings.fallback_rows;
    j["similarity"] = set.graph.similarity;
    j["tie_rule"] = set.graph.tie_rule;
    j["weighting"] = set.graph.weighting;
    write_json(dir / "proxies.json", j);
}

StoredProxies read_proxies(const fs::path& dir, const panel::WeeklyPanel& p) {
    const auto meta_path = dir / "proxies.json";
    require(fs::exists(meta_path), ErrorCode::io, "no proxies found in " + dir.string());
    const json j = read_json(meta_path);
    require(get<std::size_t>(j, "nodes", meta_path) == p.n_keywords(), ErrorCode::data,
            "proxies in " + dir.string() + " were built for a different panel");
    StoredProxies s;
    s.config.k = get<std::size_t>(j, "k", meta_path);
    s.config.dtw_m = get<std::size_t>(j, "dtw_m", meta_path);
    s.config.dtw_band = get<std::size_t>(j, "dtw_band", meta_path);
    s.config.train = range_from(j.at("train"), meta_path);

    s.set.embeddings = proxies::load_embeddings(dir / "embeddings.jsonl", p.keywords);
    s.set.embeddings.source = get<std::string>(j, "embedding_source", meta_path) == "exported"
                                  ? proxies::EmbeddingSource::exported
                                  : proxies::EmbeddingSource::fallback;
    s.set.embeddings.fallback_rows = get<std::size_t>(j, "fallback_rows", meta_path);
    s.set.graph = proxies::read_edge_list(dir / "edges.csv", p.n_keywords());
    s.set.graph.similarity = get<std::string>(j, "similarity", meta_path);
    s.set.graph.tie_rule = get<std::string>(j, "tie_rule", meta_path);
    s.set.graph.weighting = get<std::string>(j, "weighting", meta_path);

    s.set.dtw.m = s.config.dtw_m;
    s.set.dtw.radius = s.config.dtw_band;
    s.set.dtw.range = s.config.train;
    s.set.dtw.lists.assign(p.n_keywords(), {});
    {
        auto in = open_in(dir / "dtw.csv");
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto f = split_csv_line(line);
            require(f.size() == 4, ErrorCode::data, "dtw.csv: expected 4 columns");
            const auto src = parse_size(f[0]);
            const auto dst = parse_size(f[2]);
            const auto dist = parse_double(f[3]);
            require(src && dst && dist && *src < p.n_keywords() && *dst < p.n_keywords(), ErrorCode::data,
                    "dtw.csv: bad record '" + line + "'");
            s.set.dtw.lists[*src].push_back({*dst, *dist});
        }
    }
    {
        auto in = open_in(dir / "geo.csv");
        std::string line;
        std::getline(in, line);
        std::size_t k = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto f = split_csv_line(line);
            require(f.size() == 4 && k < p.n_keywords() && f[0] == p.keywords[k], ErrorCode::data,
                    "geo.csv: row " + std::to_string(k + 1) + " does not match the panel");
            proxies::GeoTag g;
            if (!f[1].empty()) g.continent = f[1];
            if (!f[2].empty()) g.country = f[2];
            if (!f[3].empty()) g.city = f[3];
            s.set.geo.push_back(std::move(g));
            ++k;
        }
        require(k == p.n_keywords(), ErrorCode::data, "geo.csv: missing keyword rows");
    }
    s.set.gazetteer = proxies::Gazetteer::load_dir(dir);
    return s;
}

void write_features(const fs::path& dir, const features::FeatureTensor& x, const features::FeatureConfig& cfg,
                    const Sources& sources) {
    ensure_dir(dir);
    std::vector<float> blob(x.values.size());
    for (std::size_t i = 0; i < blob.size(); ++i) blob[i] = static_cast<float>(x.values[i]);
    write_f32(dir / "features.bin", blob);
    json j;
    j["n"] = x.n;
    j["t"] = x.t;
    j["f"] = x.f;
    j["layout"] = "row-major keyword, week, feature; little-endian float32";
    j["catalog"] = catalog_json(x.catalog);
    j["origin_weeks"] = x.origin_weeks;
    j["config_hash"] = x.config_hash;
    j["config"] = cfg.describe();
    j["sources"] = sources;
    write_json(dir / "features.json", j);
}

StoredFeatures read_features(const fs::path& dir) {
    const auto meta_path = dir / "features.json";
    require(fs::exists(meta_path), ErrorCode::io, "no feature tensor found in " + dir.string());
    const json j = read_json(meta_path);
    StoredFeatures s;
    auto& x = s.tensor;
    x.n = get<std::size_t>(j, "n", meta_path);
    x.t = get<std::size_t>(j, "t", meta_path);
    x.f = get<std::size_t>(j, "f", meta_path);
    x.catalog = catalog_from(j.at("catalog"), meta_path);
    x.origin_weeks = get<std::vector<std::size_t>>(j, "origin_weeks", meta_path);
    x.config_hash = get<std::string>(j, "config_hash", meta_path);
    require(x.catalog.size() == x.f, ErrorCode::data, meta_path.string() + ": catalog length differs from f");
    const auto blob = read_f32(dir / "features.bin");
    require(blob.size() == x.n * x.t * x.f, ErrorCode::data, "features.bin size does not match n * t * f");
    x.values.assign(blob.begin(), blob.end());
    s.description = get<std::string>(j, "config", meta_path);
    s.sources = j.value("sources", Sources{});
    return s;
}

void write_checkpoint(const fs::path& dir, const Checkpoint& c) {
    ensure_dir(dir);
    json j;
    j["model"] = c.model;
    j["name"] = c.name.empty() ? c.model : c.name;
    j["horizons"] = c.horizons;
    j["config_hash"] = c.config_hash;
    j["train"] = range_json(c.train);
    j["sources"] = c.sources;
    if (c.model == "snaive") {
        j["architecture"] = "seasonal naive";
        j["period"] = c.period;
    } else if (c.model == "ridge") {
        require(c.ridge.has_value(), ErrorCode::config, "ridge checkpoint without a model");
        const auto& m = *c.ridge;
        j["architecture"] = "direct multi-horizon ridge regression";
        j["lambda"] = m.lambda;
        j["scaling"] = std::string(models::scaling_name(m.scaling));
        j["feature_hash"] = m.feature_hash;
        j["catalog"] = catalog_json(m.catalog);
        json heads = json::array();
        for (const auto& h : m.heads) heads.push_back({{"horizon", h.horizon}, {"rows", h.rows}, {"train_rmse", h.train_rmse}});
        j["heads"] = heads;
        j["keyword_scale_count"] = m.keyword_scale.size();
        std::vector<float> blob;
        for (double v : m.mean) blob.push_back(static_cast<float>(v));
        for (double v : m.scale) blob.push_back(static_cast<float>(v));
        for (double v : m.keyword_scale) blob.push_back(static_cast<float>(v));
        for (const auto& h : m.heads) {
            for (double v : h.weights) blob.push_back(static_cast<float>(v));
            blob.push_back(static_cast<float>(h.intercept));
        }
        write_f32(dir / "params.bin", blob);
    } else if (c.model == "dcrnn") {
        require(c.dcrnn.has_value(), ErrorCode::config, "dcrnn checkpoint without a model");
        const auto& m = *c.dcrnn;
        j["architecture"] = "diffusion-convolutional GRU encoder with direct horizon heads";
        j["hyper"] = {{"k", m.hyper.k},
                      {"hidden", m.hyper.hidden},
                      {"window", m.hyper.window},
                      {"learning_rate", m.hyper.learning_rate},
                      {"batch", m.hyper.batch},
                      {"max_epochs", m.hyper.max_epochs},
                      {"patience", m.hyper.patience},
                      {"validation_fraction", m.hyper.validation_fraction},
                      {"clip_norm", m.hyper.clip_norm},
                      {"seed", m.hyper.seed}};
        j["shape"] = {{"nodes", m.shape.nodes},   {"inputs", m.shape.inputs}, {"hidden", m.shape.hidden},
                      {"k", m.shape.k},           {"window", m.shape.window}, {"outputs", m.shape.outputs}};
        j["parameter_count"] = m.parameter_count();
        j["feature_hash"] = m.feature_hash;
        j["catalog"] = catalog_json(m.catalog);
        j["input_mean"] = m.input_mean;
        j["input_scale"] = m.input_scale;
        j["cpc_units"] = m.cpc_units;
        j["keyword_scale"] = m.keyword_scale;
        j["train_loss"] = m.train_loss;
        j["val_loss"] = m.val_loss;
        j["best_epoch"] = m.best_epoch;
        j["best_val"] = m.best_val;
        write_f32(dir / "params.bin", m.params);
    } else {
        fail(ErrorCode::config, "unknown model '" + c.model + "'");
    }
    write_json(dir / "checkpoint.json", j);
}

Checkpoint read_checkpoint(const fs::path& dir) {
    const auto meta_path = dir / "checkpoint.json";
    require(fs::exists(meta_path), ErrorCode::io, "no checkpoint found in " + dir.string());
    const json j = read_json(meta_path);
    Checkpoint c;
    c.model = get<std::string>(j, "model", meta_path);
    c.name = j.value("name", c.model);
    c.horizons = get<std::vector<std::size_t>>(j, "horizons", meta_path);
    c.config_hash = get<std::string>(j, "config_hash", meta_path);
    c.train = range_from(j.at("train"), meta_path);
    c.sources = j.value("sources", Sources{});
    if (c.model == "snaive") {
        c.period = get<std::size_t>(j, "period", meta_path);
    } else if (c.model == "ridge") {
        models::RidgeModel m;
        m.lambda = get<double>(j, "lambda", meta_path);
        const auto scaling = models::parse_scaling(get<std::string>(j, "scaling", meta_path));
        require(scaling.has_value(), ErrorCode::data, meta_path.string() + ": unknown ridge scaling");
        m.scaling = *scaling;
        m.feature_hash = get<std::string>(j, "feature_hash", meta_path);
        m.catalog = catalog_from(j.at("catalog"), meta_path);
        m.train = c.train;
        const std::size_t f = m.catalog.size();
        const std::size_t nk = get<std::size_t>(j, "keyword_scale_count", meta_path);
        const auto blob = read_f32(dir / "params.bin");
        const auto& heads = j.at("heads");
        require(blob.size() == 2 * f + nk + heads.size() * (f + 1), ErrorCode::data,
                "params.bin size does not match the ridge checkpoint");
        std::size_t pos = 0;
        auto take = [&](std::size_t count) {
            std::vector<double> v(blob.begin() + static_cast<std::ptrdiff_t>(pos),
                                  blob.begin() + static_cast<std::ptrdiff_t>(pos + count));
            pos += count;
            return v;
        };
        m.mean = take(f);
        m.scale = take(f);
        m.keyword_scale = take(nk);
        for (const auto& hj : heads) {
            models::RidgeHead h;
            h.horizon = get<std::size_t>(hj, "horizon", meta_path);
            h.rows = get<std::size_t>(hj, "rows", meta_path);
            h.train_rmse = get<double>(hj, "train_rmse", meta_path);
            h.weights = take(f);
            h.intercept = take(1).front();
            m.heads.push_back(std::move(h));
        }
        c.ridge = std::move(m);
    } else if (c.model == "dcrnn") {
        models::GraphForecaster m;
        const auto& hp = j.at("hyper");
        m.hyper.k = get<std::size_t>(hp, "k", meta_path);
        m.hyper.hidden = get<std::size_t>(hp, "hidden", meta_path);
        m.hyper.window = get<std::size_t>(hp, "window", meta_path);
        m.hyper.learning_rate = get<double>(hp, "learning_rate", meta_path);
        m.hyper.batch = get<std::size_t>(hp, "batch", meta_path);
        m.hyper.max_epochs = get<std::size_t>(hp, "max_epochs", meta_path);
        m.hyper.patience = get<std::size_t>(hp, "patience", meta_path);
        m.hyper.validation_fraction = get<double>(hp, "validation_fraction", meta_path);
        m.hyper.clip_norm = get<double>(hp, "clip_norm", meta_path);
        m.hyper.seed = get<std::uint64_t>(hp, "seed", meta_path);
        const auto& sh = j.at("shape");
        m.shape = {get<std::size_t>(sh, "nodes", meta_path),  get<std::size_t>(sh, "inputs", meta_path),
                   get<std::size_t>(sh, "hidden", meta_path), get<std::size_t>(sh, "k", meta_path),
                   get<std::size_t>(sh, "window", meta_path), get<std::size_t>(sh, "outputs", meta_path)};
        m.horizons = c.horizons;
        m.feature_hash = get<std::string>(j, "feature_hash", meta_path);
        m.catalog = catalog_from(j.at("catalog"), meta_path);
        m.input_mean = get<std::vector<double>>(j, "input_mean", meta_path);
        m.input_scale = get<std::vector<double>>(j, "input_scale", meta_path);
        m.cpc_units = get<std::vector<std::uint8_t>>(j, "cpc_units", meta_path);
        m.keyword_scale = get<std::vector<double>>(j, "keyword_scale", meta_path);
        m.train_loss = get<std::vector<double>>(j, "train_loss", meta_path);
        m.val_loss = get<std::vector<double>>(j, "val_loss", meta_path);
        m.best_epoch = get<std::size_t>(j, "best_epoch", meta_path);
        m.best_val = get<double>(j, "best_val", meta_path);
        m.train = c.train;
        m.params = read_f32(dir / "params.bin");
        require(m.params.size() == m.shape.count(), ErrorCode::data,
                "params.bin size does not match the dcrnn shape");
        require(m.input_mean.size() == m.shape.inputs && m.input_scale.size() == m.shape.inputs &&
                    m.cpc_units.size() == m.shape.inputs && m.keyword_scale.size() == m.shape.nodes,
                ErrorCode::data, meta_path.string() + ": scaler sizes do not match the shape");
        c.dcrnn = std::move(m);
    } else {
        fail(ErrorCode::data, meta_path.string() + ": unknown model '" + c.model + "'");
    }
    return c;
}

} // namespace cpcc::storage
