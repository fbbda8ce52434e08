#include "commands.hpp"

#include "cpcc/error.hpp"
#include "cpcc/parallel.hpp"
#include "cpcc/rng.hpp"
#include "cpcc/storage.hpp"
#include "cpcc/text_format.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cpcc::cli {

namespace {

fs::path absolute_path(const fs::path& p) { return fs::absolute(p).lexically_normal(); }

void say(const RunInfo& info, const std::string& line) {
    if (!info.quiet) std::cout << line << '\n';
}

manifest::FileHash input_hash(const fs::path& p) {
    require(fs::exists(p), ErrorCode::io, "no such file or directory: " + p.string());
    return {absolute_path(p).string(), manifest::digest(p)};
}

void finish(const fs::path& artifact, const RunInfo& info, std::vector<fs::path> inputs,
            const std::vector<fs::path>& extra = {}) {
    manifest::RunManifest m;
    m.command = info.command;
    m.argv = info.argv;
    m.config = info.config;
    m.seed = info.seed;
    m.threads = info.threads;
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - info.start).count();
    for (const auto& p : inputs) m.inputs.push_back(input_hash(p));
    manifest::write_manifest(artifact, std::move(m), extra);
}

fs::path sibling(const fs::path& file, const std::string& suffix) {
    auto p = file;
    p += suffix;
    return p;
}

std::ofstream open_file(const fs::path& path) {
    storage::ensure_parent(path);
    std::ofstream out(path, std::ios::trunc);
    require(out.good(), ErrorCode::io, "cannot write " + path.string());
    return out;
}

std::string source(const storage::Sources& s, const std::string& key, const fs::path& where) {
    const auto it = s.find(key);
    require(it != s.end(), ErrorCode::data, where.string() + " does not record its " + key);
    return it->second;
}

std::string hash16(const std::string& text) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
    return buf;
}

std::string fixed(double v, int digits) { return std::isnan(v) ? "-" : format_fixed(v, digits); }

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

std::string pad_right(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

panel::WeekRange train_range_of(const panel::WeeklyPanel& p, const std::string& train_end, double test_fraction) {
    if (train_end.empty()) return eval::chronological_split(p.n_weeks(), test_fraction).train;
    const auto w = parse_iso_week(train_end);
    require(w.has_value(), ErrorCode::config, "--train-end: bad ISO week '" + train_end + "'");
    const auto idx = p.week_index(*w);
    require(idx.has_value(), ErrorCode::config, "--train-end " + train_end + " is not a panel week");
    require(*idx + 1 < p.n_weeks(), ErrorCode::config, "--train-end leaves no test weeks");
    return {0, *idx + 1};
}

eval::SplitSpec split_after(panel::WeekRange train, std::size_t weeks) {
    eval::SplitSpec s;
    s.train = train;
    s.test = {train.end, weeks};
    s.fraction = static_cast<double>(weeks - train.end) / static_cast<double>(weeks);
    return s;
}

features::Aggregate parse_aggregate(const std::string& name) {
    if (name == "mean") return features::Aggregate::mean;
    if (name == "median") return features::Aggregate::median;
    fail(ErrorCode::config, "unknown neighbor aggregate '" + name + "' (mean or median)");
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::size_t> parse_horizons(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        const auto h = parse_size(trim(item));
        require(h.has_value() && *h > 0, ErrorCode::config, "bad horizon '" + item + "'");
        out.push_back(*h);
    }
    require(!out.empty(), ErrorCode::config, "no horizons given");
    return out;
}

void print_summary(const std::vector<eval::EvalReport>& reports) {
    std::cout << pad_right("model", 14) << pad("h", 4) << pad("sMAPE", 9) << pad("RMSE", 9) << pad("hh sMAPE", 10)
              << pad("keywords", 10) << '\n';
    for (const auto& r : reports) {
        for (const auto& h : r.horizons) {
            const auto& hh = h.quadrant_smape[static_cast<std::size_t>(eval::Quadrant::high_high)];
            std::cout << pad_right(h.model, 14) << pad(std::to_string(h.horizon), 4) << pad(fixed(h.smape.mean, 2), 9)
                      << pad(fixed(h.rmse.mean, 3), 9) << pad(fixed(hh.mean, 2), 10)
                      << pad(std::to_string(h.smape.n), 10) << '\n';
        }
    }
}

} // namespace

std::map<std::string, std::string> read_config_file(const fs::path& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "cannot read config file " + path.string());
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#' || text.front() == ';') continue;
        const auto eq = text.find('=');
        require(eq != std::string::npos, ErrorCode::config,
                path.string() + ":" + std::to_string(line_no) + ": expected key = value");
        auto key = trim(std::string_view(text).substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        auto value = trim(std::string_view(text).substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        require(!key.empty(), ErrorCode::config, path.string() + ":" + std::to_string(line_no) + ": empty key");
        out[key] = value;
    }
    return out;
}

void run_ingest(const IngestOptions& o, const RunInfo& info) {
    auto parsed = ingest::read_events(o.input);
    std::size_t unnamed = 0;
    const std::size_t read = parsed.events.size();
    auto events = ingest::normalize_events(std::move(parsed.events), &unnamed);
    events = ingest::filter_relevant(events);
    const std::size_t relevant = events.size();
    auto domains = ingest::filter_domains(events, o.max_missing, o.min_mentions);
    events = ingest::drop_exact_duplicates(std::move(domains.events));

    {
        auto out = open_file(o.output);
        ingest::write_events(out, events);
    }
    const auto rejections_path = sibling(o.output, ".rejections.jsonl");
    {
        auto out = open_file(rejections_path);
        ingest::write_rejections(out, parsed.rejections);
    }
    const auto domains_path = sibling(o.output, ".domains.csv");
    {
        auto out = open_file(domains_path);
        out << "domain,total_mentions,missing_dates,excluded\n";
        for (const auto& d : domains.stats) {
            out << csv_field(d.domain) << ',' << d.total_mentions << ',' << d.missing_dates << ','
                << (d.excluded ? "true" : "false") << '\n';
        }
    }
    finish(o.output, info, {o.input}, {rejections_path, domains_path});
    say(info, "ingest: " + std::to_string(read + parsed.rejections.size()) + " lines, " +
                  std::to_string(parsed.rejections.size()) + " rejected, " + std::to_string(unnamed) +
                  " without keyword, " + std::to_string(relevant) + " relevant, " +
                  std::to_string(domains.unparsable_urls) + " unparsable URLs, " + std::to_string(events.size()) +
                  " kept");
}

void run_aggregate(const AggregateOptions& o, const RunInfo& info) {
    auto parsed = ingest::read_events(o.events);
    require(parsed.rejections.empty(), ErrorCode::data,
            o.events.string() + ": line " + std::to_string(parsed.rejections.empty() ? 0 : parsed.rejections[0].line) +
                ": " + (parsed.rejections.empty() ? "" : parsed.rejections[0].reason));
    const auto raw = panel::aggregate_weekly(parsed.events);
    const auto selected = panel::select_keywords(raw, o.min_weeks, o.window);
    require(selected.n_keywords() > 0, ErrorCode::data, "no keyword has enough observed weeks");
    const auto imputed = panel::impute_gaps(selected);
    storage::write_panel(o.out, imputed.panel);
    finish(o.out, info, {o.events});
    say(info, "aggregate: " + std::to_string(raw.n_keywords()) + " keywords, " +
                  std::to_string(imputed.panel.n_keywords()) + " kept over " +
                  std::to_string(imputed.panel.n_weeks()) + " weeks, " + std::to_string(imputed.filled) +
                  " cells imputed");
}

void run_build_proxies(const ProxyOptions& o, const RunInfo& info) {
    const auto p = storage::read_panel(o.panel);
    proxies::ProxyConfig cfg;
    cfg.k = o.k;
    cfg.dtw_m = o.dtw_m;
    cfg.dtw_band = o.dtw_band;
    cfg.train = train_range_of(p, o.train_end, o.test_fraction);
    std::vector<fs::path> inputs{o.panel};
    proxies::EmbeddingMatrix emb;
    if (o.embeddings == "fallback") {
        emb = proxies::hash_embed_all(p.keywords);
    } else {
        emb = proxies::load_embeddings(fs::path(o.embeddings), p.keywords);
        inputs.emplace_back(o.embeddings);
    }
    proxies::Gazetteer gaz = proxies::Gazetteer::builtin();
    if (!o.gazetteer.empty()) {
        gaz = proxies::Gazetteer::load_dir(o.gazetteer);
        inputs.push_back(o.gazetteer);
    }
    const auto set = proxies::build_proxies(p, std::move(emb), std::move(gaz), cfg);
    storage::write_proxies(o.out, set, cfg, p.keywords);
    finish(o.out, info, inputs);
    std::size_t tagged = 0;
    for (const auto& g : set.geo) tagged += !g.empty();
    say(info, "build-proxies: " + std::to_string(p.n_keywords()) + " keywords, k=" + std::to_string(set.graph.k) +
                  ", embeddings " +
                  (set.embeddings.source == proxies::EmbeddingSource::exported ? "exported" : "fallback") + " (" +
                  std::to_string(set.embeddings.fallback_rows) + " fallback rows), " + std::to_string(tagged) +
                  " geo-tagged, training weeks " + std::to_string(cfg.train.size()));
}

void run_featurize(const FeaturizeOptions& o, const RunInfo& info) {
    const auto p = storage::read_panel(o.panel);
    const auto stored = storage::read_proxies(o.proxies, p);
    features::FeatureConfig cfg;
    cfg.families = features::parse_families(o.families);
    const auto level = proxies::parse_geo_level(o.geo_res);
    require(level.has_value(), ErrorCode::config, "--geo-res must be continent, country or city");
    cfg.geo_resolution = *level;
    cfg.neighbor_aggregate = parse_aggregate(o.aggregate);
    cfg.noise_features = o.noise_features;
    cfg.noise_seed = o.noise_seed;
    cfg.train_end = stored.config.train.end;
    const auto x = features::build_features(p, stored.set, cfg);
    storage::Sources sources{{"panel", absolute_path(o.panel).string()},
                             {"proxies", absolute_path(o.proxies).string()},
                             {"train_end", std::to_string(cfg.train_end)}};
    storage::write_features(o.out, x, cfg, sources);
    finish(o.out, info, {o.panel, o.proxies});
    say(info, "featurize: " + cfg.describe() + ", " + std::to_string(x.f) + " features");
}

void run_train(const TrainOptions& o, const RunInfo& info) {
    const auto feats = storage::read_features(o.features);
    const auto& x = feats.tensor;
    const fs::path panel_dir = o.panel.empty() ? fs::path(source(feats.sources, "panel", o.features)) : o.panel;
    const auto p = storage::read_panel(panel_dir);
    require(x.n == p.n_keywords() && x.t == p.n_weeks(), ErrorCode::data, "feature tensor is not aligned with the panel");
    const auto train_end = parse_size(source(feats.sources, "train_end", o.features));
    require(train_end.has_value() && *train_end <= p.n_weeks(), ErrorCode::data, "bad train_end in features.json");

    models::ForecastTask task;
    task.horizons = o.horizons;
    task.window = o.hyper.window;

    storage::Checkpoint c;
    c.model = o.model;
    c.name = o.name.empty() ? o.model : o.name;
    c.horizons = o.horizons;
    c.train = {0, *train_end};
    c.sources = {{"features", absolute_path(o.features).string()}, {"panel", absolute_path(panel_dir).string()}};
    std::vector<fs::path> inputs{o.features, panel_dir};
    std::string detail;

    if (o.model == "snaive") {
        c.period = o.period;
        c.config_hash = hash16("snaive;period=" + std::to_string(o.period));
    } else if (o.model == "ridge") {
        const auto scaling = models::parse_scaling(o.scaling);
        require(scaling.has_value(), ErrorCode::config, "--scaling must be none or keyword");
        auto m = models::fit_ridge(x, p, task, o.lambda, c.train, *scaling);
        c.config_hash = m.config_hash();
        for (const auto& h : m.heads) {
            detail += " h" + std::to_string(h.horizon) + " rows=" + std::to_string(h.rows) +
                      " rmse=" + fixed(h.train_rmse, 4);
        }
        c.ridge = std::move(m);
    } else if (o.model == "dcrnn") {
        const fs::path graph_path =
            o.graph.empty() ? fs::path(source(feats.sources, "proxies", o.features)) / "edges.csv" : o.graph;
        const auto g = proxies::read_edge_list(graph_path, p.n_keywords());
        auto hyper = o.hyper;
        hyper.seed = o.seed;
        auto m = models::fit_graph_forecaster(x, p, g, task, hyper, c.train);
        c.config_hash = m.config_hash();
        c.sources["graph"] = absolute_path(graph_path).string();
        inputs.push_back(graph_path);
        detail = " params=" + std::to_string(m.parameter_count()) + " epochs=" + std::to_string(m.train_loss.size()) +
                 " best_epoch=" + std::to_string(m.best_epoch) + " best_val=" + fixed(m.best_val, 4);
        c.dcrnn = std::move(m);
    } else {
        fail(ErrorCode::config, "--model must be snaive, ridge or dcrnn");
    }
    storage::write_checkpoint(o.out, c);
    finish(o.out, info, inputs);
    say(info, "train: " + c.name + " (" + c.model + ")" + detail);
}

void run_forecast(const ForecastOptions& o, const RunInfo& info) {
    const auto c = storage::read_checkpoint(o.model_dir);
    const fs::path panel_dir = o.panel.empty() ? fs::path(source(c.sources, "panel", o.model_dir)) : o.panel;
    const auto p = storage::read_panel(panel_dir);
    require(c.train.end <= p.n_weeks(), ErrorCode::data, "checkpoint training range exceeds the panel");
    std::vector<fs::path> inputs{o.model_dir, panel_dir};

    std::vector<models::OriginRequest> requests;
    if (o.origins == "test") {
        requests = eval::test_requests(split_after(c.train, p.n_weeks()), c.horizons);
    } else {
        std::vector<std::size_t> origins;
        std::stringstream s(o.origins);
        std::string item;
        while (std::getline(s, item, ',')) {
            const auto w = parse_iso_week(trim(item));
            require(w.has_value(), ErrorCode::config, "--origins: expected 'test' or ISO weeks, got '" + item + "'");
            const auto idx = p.week_index(*w);
            require(idx.has_value(), ErrorCode::config, "--origins: " + item + " is not a panel week");
            require(*idx + 1 >= c.train.end, ErrorCode::config,
                    "--origins: " + item + " lies inside the training range");
            origins.push_back(*idx);
        }
        for (auto h : c.horizons) requests.push_back({h, origins});
    }

    models::ForecastSet f;
    if (c.model == "snaive") {
        f = models::seasonal_naive(p, requests, c.period);
    } else {
        const fs::path feat_dir = o.features.empty() ? fs::path(source(c.sources, "features", o.model_dir)) : o.features;
        const auto feats = storage::read_features(feat_dir);
        inputs.push_back(feat_dir);
        if (c.model == "ridge") {
            require(feats.tensor.config_hash == c.ridge->feature_hash, ErrorCode::data,
                    "features in " + feat_dir.string() + " differ from the ones the model was trained on");
            f = models::predict(*c.ridge, feats.tensor, requests);
        } else {
            require(feats.tensor.config_hash == c.dcrnn->feature_hash, ErrorCode::data,
                    "features in " + feat_dir.string() + " differ from the ones the model was trained on");
            const fs::path graph_path = o.graph.empty() ? fs::path(source(c.sources, "graph", o.model_dir)) : o.graph;
            const auto g = proxies::read_edge_list(graph_path, p.n_keywords());
            inputs.push_back(graph_path);
            f = models::predict(*c.dcrnn, feats.tensor, g, requests);
        }
    }
    f.model = c.name;
    storage::ensure_parent(o.out);
    models::write_forecasts(o.out, f, p);
    finish(o.out, info, inputs);
    say(info, "forecast: " + c.name + ", " + std::to_string(f.entries.size()) + " predictions");
}

std::vector<eval::EvalReport> run_evaluate(const EvaluateOptions& o, const RunInfo& info) {
    require(!o.forecasts.empty(), ErrorCode::config, "no forecast files given");
    const auto p = storage::read_panel(o.panel);
    const auto split = eval::chronological_split(p.n_weeks(), o.test_fraction);
    const auto stats = panel::compute_stats(p, split.train);
    const auto seg = eval::frontier_segment(stats);
    std::vector<eval::EvalReport> reports;
    std::vector<fs::path> inputs{o.panel};
    for (const auto& path : o.forecasts) {
        reports.push_back(eval::evaluate(models::read_forecasts(path, p), p, split, &seg));
        inputs.push_back(path);
    }
    eval::write_reports(o.out, reports, p);
    finish(o.out, info, inputs);
    if (!info.quiet) print_summary(reports);
    return reports;
}

void run_frontier(const FrontierOptions& o, const RunInfo& info) {
    const auto p = storage::read_panel(o.panel);
    const auto split = eval::chronological_split(p.n_weeks(), o.test_fraction);
    const auto stats = panel::compute_stats(p, split.train);
    const auto seg = eval::frontier_segment(stats);
    {
        auto out = open_file(o.out);
        eval::write_frontier(out, seg, stats, p);
    }
    finish(o.out, info, {o.panel});
    say(info, "frontier: mean median " + fixed(seg.mean_median, 4) + ", cv median " + fixed(seg.cv_median, 4) +
                  ", quadrants low/low " + std::to_string(seg.counts[0]) + " low/high " + std::to_string(seg.counts[1]) +
                  " high/low " + std::to_string(seg.counts[2]) + " high/high " + std::to_string(seg.counts[3]) +
                  ", excluded " + std::to_string(seg.excluded.size()));
}

void run_ablate(const AblateOptions& o, const RunInfo& info) {
    std::ifstream in(o.grid);
    require(in.good(), ErrorCode::io, "cannot read grid file " + o.grid.string());
    auto grid = eval::parse_ablation_grid(in);
    auto setting = [&](const std::string& key, const std::string& fallback) {
        const auto it = grid.settings.find(key);
        return it == grid.settings.end() ? fallback : it->second;
    };
    auto resolve = [&](const std::string& path) {
        const fs::path pth(path);
        return pth.is_absolute() ? pth : o.grid.parent_path() / pth;
    };
    auto number = [&](const std::string& key, double fallback) {
        const auto it = grid.settings.find(key);
        if (it == grid.settings.end()) return fallback;
        const auto v = parse_double(it->second);
        require(v.has_value(), ErrorCode::config, "grid setting " + key + ": not a number");
        return *v;
    };
    auto count = [&](const std::string& key, std::size_t fallback) {
        const auto it = grid.settings.find(key);
        if (it == grid.settings.end()) return fallback;
        const auto v = parse_size(it->second);
        require(v.has_value(), ErrorCode::config, "grid setting " + key + ": not a non-negative integer");
        return *v;
    };
    for (const auto& [key, value] : grid.settings) {
        static const std::vector<std::string> known{"panel",      "proxies",     "model",    "horizons",
                                                    "lambda",     "scaling",     "period",   "test_fraction",
                                                    "seed",       "noise_features", "noise_seed", "aggregate",
                                                    "hidden",     "diffusion_k", "window",   "learning_rate",
                                                    "epochs",     "patience",    "batch"};
        require(std::find(known.begin(), known.end(), key) != known.end(), ErrorCode::config,
                "unknown grid setting '" + key + "'");
    }
    require(grid.settings.count("panel") && grid.settings.count("proxies"), ErrorCode::config,
            "grid file must set panel and proxies");
    const fs::path panel_dir = resolve(grid.settings.at("panel"));
    const fs::path proxy_dir = resolve(grid.settings.at("proxies"));
    const auto p = storage::read_panel(panel_dir);
    const auto stored = storage::read_proxies(proxy_dir, p);

    eval::ModelSpec spec;
    const auto kind = eval::parse_model(setting("model", "ridge"));
    require(kind.has_value(), ErrorCode::config, "grid setting model: snaive, ridge or dcrnn");
    spec.kind = *kind;
    spec.lambda = number("lambda", spec.lambda);
    const auto scaling = models::parse_scaling(setting("scaling", "keyword"));
    require(scaling.has_value(), ErrorCode::config, "grid setting scaling: none or keyword");
    spec.ridge_scaling = *scaling;
    spec.period = count("period", spec.period);
    spec.hyper.seed = count("seed", 0);
    spec.hyper.hidden = count("hidden", spec.hyper.hidden);
    spec.hyper.k = count("diffusion_k", spec.hyper.k);
    spec.hyper.window = count("window", spec.hyper.window);
    spec.hyper.learning_rate = number("learning_rate", spec.hyper.learning_rate);
    spec.hyper.max_epochs = count("epochs", spec.hyper.max_epochs);
    spec.hyper.patience = count("patience", spec.hyper.patience);
    spec.hyper.batch = count("batch", spec.hyper.batch);
    const auto aggregate = parse_aggregate(setting("aggregate", "mean"));
    for (auto& cfg : grid.configs) {
        cfg.features.noise_features = count("noise_features", cfg.features.noise_features);
        cfg.features.noise_seed = count("noise_seed", cfg.features.noise_seed);
        cfg.features.neighbor_aggregate = aggregate;
    }
    const auto horizons = parse_horizons(setting("horizons", "1,6,12"));
    const auto split = split_after(stored.config.train, p.n_weeks());
    const auto stats = panel::compute_stats(p, split.train);
    const auto seg = eval::frontier_segment(stats);

    const auto rows = eval::run_ablation(grid.configs, spec, p, stored.set, split, horizons, &seg);
    storage::ensure_dir(o.out);
    {
        auto out = open_file(o.out / "ablation.csv");
        eval::write_ablation(out, rows);
    }
    finish(o.out, info, {o.grid, panel_dir, proxy_dir});
    if (info.quiet) return;
    std::cout << pad_right("config", 16) << pad("h", 4) << pad("sMAPE", 9) << pad("hh sMAPE", 10) << "  families\n";
    for (const auto& r : rows) {
        std::cout << pad_right(r.config, 16) << pad(std::to_string(r.horizon), 4)
                  << pad(r.failed ? "failed" : fixed(r.smape, 2), 9)
                  << pad(r.failed ? "-" : fixed(r.quadrant_smape[static_cast<std::size_t>(eval::Quadrant::high_high)], 2), 10)
                  << "  " << (r.failed ? r.error : r.families) << '\n';
    }
}

synth::SynthOutput run_synth(const SynthOptions& o, const RunInfo& info) {
    auto cfg = o.cfg;
    const auto start = parse_iso_week(o.start);
    require(start.has_value(), ErrorCode::config, "--start: bad ISO week '" + o.start + "'");
    cfg.start = *start;
    cfg.regime_shift_week = o.regime_shift_week;
    auto gen = synth::generate(cfg);
    storage::ensure_dir(o.out);
    {
        auto out = open_file(o.out / "events.jsonl");
        ingest::write_events(out, gen.events);
    }
    {
        auto out = open_file(o.out / "embeddings.jsonl");
        proxies::write_embeddings(out, gen.embeddings, gen.panel.keywords);
    }
    {
        auto out = open_file(o.out / "keywords.txt");
        for (const auto& k : gen.panel.keywords) out << k << '\n';
    }
    {
        auto out = open_file(o.out / "truth.jsonl");
        synth::write_truth(out, gen.truth);
    }
    // The generator controls coverage, so only gap imputation is applied.
    const auto imputed = panel::impute_gaps(gen.panel);
    require(imputed.dropped.empty(), ErrorCode::data, "synthetic keyword without any CPC value");
    gen.panel = imputed.panel;
    storage::write_panel(o.out / "panel", gen.panel);
    finish(o.out / "panel", info, {});
    finish(o.out, info, {});
    say(info, "synth: " + std::to_string(gen.panel.n_keywords()) + " keywords, " +
                  std::to_string(gen.panel.n_weeks()) + " weeks, " + std::to_string(gen.events.size()) + " events");
    return gen;
}

void run_demo(const DemoOptions& o, const RunInfo& info) {
    require(!o.out.empty(), ErrorCode::config, "--out is required");
    const auto t0 = std::chrono::steady_clock::now();
    auto stage = [&](const std::string& name) {
        RunInfo r = info;
        r.command = info.command + "/" + name;
        r.quiet = true;
        r.start = std::chrono::steady_clock::now();
        return r;
    };

    SynthOptions so;
    so.cfg.seed = o.seed;
    so.cfg.keywords = o.keywords;
    so.cfg.weeks = o.weeks;
    so.out = o.out / "synth";
    const auto gen = run_synth(so, stage("synth"));
    const fs::path panel_dir = so.out / "panel";
    const auto& p = gen.panel;

    ProxyOptions po;
    po.panel = panel_dir;
    po.embeddings = (so.out / "embeddings.jsonl").string();
    po.out = o.out / "proxies";
    run_build_proxies(po, stage("build-proxies"));
    const auto stored = storage::read_proxies(po.out, p);
    const auto recovery = synth::oracle_report(gen.truth, stored.set.graph, stored.set.dtw, stored.set.geo);

    auto featurize = [&](const std::string& name, const std::string& families) {
        FeaturizeOptions fo;
        fo.panel = panel_dir;
        fo.proxies = po.out;
        fo.families = families;
        fo.noise_seed = o.seed;
        fo.out = o.out / "features" / name;
        run_featurize(fo, stage("featurize"));
        return fo.out;
    };
    const auto core = featurize("core", "core");
    const auto geo_nb = featurize("geo_nb", "core,geo,sem_cpc,dtw_cpc");

    struct Run {
        std::string name;
        std::string model;
        fs::path features;
    };
    std::vector<Run> runs{{"snaive", "snaive", core}, {"ridge_core", "ridge", core}, {"ridge_geo_nb", "ridge", geo_nb}};
    if (!o.skip_dcrnn) runs.push_back({"dcrnn", "dcrnn", core});

    EvaluateOptions eo;
    eo.panel = panel_dir;
    eo.out = o.out / "eval";
    for (const auto& r : runs) {
        TrainOptions to;
        to.model = r.model;
        to.name = r.name;
        to.features = r.features;
        to.horizons = o.horizons;
        to.seed = o.seed;
        to.hyper.learning_rate = o.dcrnn_lr;
        to.hyper.hidden = o.dcrnn_hidden;
        to.hyper.max_epochs = o.dcrnn_epochs;
        to.out = o.out / "models" / r.name;
        run_train(to, stage("train"));

        ForecastOptions fo;
        fo.model_dir = to.out;
        fo.out = o.out / "forecasts" / (r.name + ".csv");
        run_forecast(fo, stage("forecast"));
        eo.forecasts.push_back(fo.out);
    }
    const auto reports = run_evaluate(eo, stage("evaluate"));

    FrontierOptions fr;
    fr.panel = panel_dir;
    fr.out = o.out / "frontier.csv";
    run_frontier(fr, stage("frontier"));
    finish(o.out, info, {});

    if (info.quiet) return;
    const auto stats = panel::compute_stats(p, eval::chronological_split(p.n_weeks()).train);
    std::cout << "synthetic market: " << p.n_keywords() << " keywords x " << p.n_weeks() << " weeks, seed " << o.seed
              << ", CPC skewness " << fixed(stats.skewness, 2) << '\n';
    std::cout << "proxy recovery: semantic intra-cluster " << fixed(recovery.semantic_intra_fraction, 3) << ", dtw "
              << fixed(recovery.dtw_intra_fraction, 3) << ", chance " << fixed(recovery.chance_intra_fraction, 3)
              << ", geo accuracy " << fixed(recovery.geo_accuracy, 3) << '\n';
    print_summary(reports);
    std::cout << "summary: " << (eo.out / "summary.csv").string() << " ("
              << fixed(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1) << " s)\n";
}

} // namespace cpcc::cli
