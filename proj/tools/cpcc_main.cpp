#include "commands.hpp"

#include "cpcc/error.hpp"
#include "cpcc/parallel.hpp"
#include "cpcc/text_format.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>

namespace {

using namespace cpcc;
using namespace cpcc::cli;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Command {
    CLI::App* app = nullptr;
    std::function<void(const RunInfo&)> run;
    std::uint64_t* seed = nullptr;
    std::vector<const CLI::Option*> required;
};

// Required options are checked after the config file is applied, so a config
// file can supply them.
std::vector<const CLI::Option*> pending_required;

void req(CLI::Option* opt) {
    opt->description(opt->get_description() + " (required)");
    pending_required.push_back(opt);
}

void add(std::vector<Command>& commands, CLI::App* app, std::function<void(const RunInfo&)> run,
         std::uint64_t* seed = nullptr) {
    commands.push_back({app, std::move(run), seed, std::move(pending_required)});
    pending_required.clear();
}

struct Common {
    std::string config;
    std::size_t threads = 0;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Common& common) {
    auto* sub = app.add_subcommand(name, help);
    sub->option_defaults()->always_capture_default();
    sub->add_option("--config", common.config, "flat key = value file; flags on the command line take precedence");
    sub->add_option("--threads", common.threads, "worker threads (0 = all cores; falls back to CPCC_THREADS)");
    return sub;
}

// Applies config-file values to options not given on the command line.
void apply_config(CLI::App* sub, const std::string& path) {
    for (const auto& [key, value] : read_config_file(path)) {
        if (key == "config") throw UsageError("config file " + path + " may not set config");
        auto* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) throw UsageError("config file " + path + ": unknown key '" + key + "' for " + sub->get_name());
        if (opt->count() > 0) continue;
        opt->clear();
        opt->add_result(value);
        opt->run_callback();
    }
}

std::map<std::string, std::string> effective_config(CLI::App* sub) {
    std::map<std::string, std::string> out;
    for (const auto* opt : sub->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const auto& name = opt->get_lnames().front();
        if (name == "help" || name == "config") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
        } else {
            value = opt->get_default_str();
        }
        out[name] = value;
    }
    return out;
}

std::size_t resolve_threads(std::size_t flag, bool given) {
    if (given) return flag;
    if (const char* env = std::getenv("CPCC_THREADS"); env != nullptr && *env != '\0') {
        const auto v = parse_size(env);
        if (!v) throw UsageError(std::string("CPCC_THREADS must be a non-negative integer, got '") + env + "'");
        return *v;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Competition-aware CPC forecasting pipeline"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(manifest::kToolVersion));
    Common common;
    std::vector<Command> commands;

    {
        static IngestOptions o;
        auto* c = add_command(app, "ingest", "parse, normalize and filter raw ad events", common);
        req(c->add_option("--input", o.input, "line-delimited event records"));
        req(c->add_option("--output", o.output, "filtered events (line-delimited)"));
        c->add_option("--max-missing", o.max_missing, "max days without mentions before a domain is excluded");
        c->add_option("--min-mentions", o.min_mentions, "min mentions for a domain to be kept");
        add(commands, c, [](const RunInfo& i) { run_ingest(o, i); });
    }
    {
        static AggregateOptions o;
        auto* c = add_command(app, "aggregate", "build the weekly keyword panel", common);
        req(c->add_option("--events", o.events, "filtered events from ingest"));
        req(c->add_option("--out", o.out, "panel directory"));
        c->add_option("--min-weeks", o.min_weeks, "min observed weeks within the window");
        c->add_option("--window", o.window, "trailing window in weeks");
        add(commands, c, [](const RunInfo& i) { run_aggregate(o, i); });
    }
    {
        static ProxyOptions o;
        auto* c = add_command(app, "build-proxies", "semantic graph, DTW neighborhoods and geo tags", common);
        req(c->add_option("--panel", o.panel, "panel directory"));
        c->add_option("--embeddings", o.embeddings, "embedding file, or 'fallback' for the hashing embedder");
        c->add_option("--k", o.k, "semantic graph out-degree");
        c->add_option("--dtw-m", o.dtw_m, "DTW neighbors per keyword");
        c->add_option("--dtw-band", o.dtw_band, "Sakoe-Chiba band radius");
        c->add_option("--gazetteer", o.gazetteer, "directory of gazetteer CSV tables (default: built-in)");
        c->add_option("--train-end", o.train_end, "last training ISO week (default: chronological split)");
        c->add_option("--test-fraction", o.test_fraction, "test share of weeks when --train-end is not given");
        req(c->add_option("--out", o.out, "proxy directory"));
        add(commands, c, [](const RunInfo& i) { run_build_proxies(o, i); });
    }
    {
        static FeaturizeOptions o;
        auto* c = add_command(app, "featurize", "assemble the feature tensor", common);
        req(c->add_option("--panel", o.panel, "panel directory"));
        req(c->add_option("--proxies", o.proxies, "proxy directory"));
        c->add_option("--families", o.families, "comma list of core,geo,sem_cpc,dtw_cpc,calendar,mix,noise or all");
        c->add_option("--geo-res", o.geo_res, "continent, country or city");
        c->add_option("--aggregate", o.aggregate, "neighbor aggregate: mean or median");
        c->add_option("--noise-features", o.noise_features, "distractor walks in the noise family");
        c->add_option("--noise-seed", o.noise_seed, "seed of the noise family");
        req(c->add_option("--out", o.out, "feature directory"));
        add(commands, c, [](const RunInfo& i) { run_featurize(o, i); });
    }
    {
        static TrainOptions o;
        auto* c = add_command(app, "train", "fit a forecaster", common);
        c->add_option("--model", o.model, "snaive, ridge or dcrnn")->check(CLI::IsMember({"snaive", "ridge", "dcrnn"}));
        c->add_option("--name", o.name, "label for forecasts and reports (default: the model)");
        req(c->add_option("--features", o.features, "feature directory"));
        c->add_option("--panel", o.panel, "panel directory (default: the features' panel)");
        c->add_option("--graph", o.graph, "edge-list CSV for dcrnn (default: the proxies' graph)");
        c->add_option("--horizons", o.horizons, "forecast horizons in weeks")->delimiter(',');
        c->add_option("--seed", o.seed, "training seed");
        c->add_option("--lambda", o.lambda, "ridge penalty");
        c->add_option("--scaling", o.scaling, "ridge target scaling: none or keyword");
        c->add_option("--period", o.period, "seasonal-naive period in weeks");
        c->add_option("--hidden", o.hyper.hidden, "dcrnn recurrent width");
        c->add_option("--diffusion-k", o.hyper.k, "dcrnn diffusion order");
        c->add_option("--window", o.hyper.window, "dcrnn encoder weeks");
        c->add_option("--lr", o.hyper.learning_rate, "dcrnn learning rate");
        c->add_option("--batch", o.hyper.batch, "dcrnn origin windows per step");
        c->add_option("--epochs", o.hyper.max_epochs, "dcrnn max epochs");
        c->add_option("--patience", o.hyper.patience, "dcrnn early-stopping patience");
        c->add_option("--clip-norm", o.hyper.clip_norm, "dcrnn gradient clip norm");
        req(c->add_option("--out", o.out, "checkpoint directory"));
        add(commands, c, [](const RunInfo& i) { run_train(o, i); }, &o.seed);
    }
    {
        static ForecastOptions o;
        auto* c = add_command(app, "forecast", "predict from a checkpoint", common);
        req(c->add_option("--model-dir", o.model_dir, "checkpoint directory"));
        c->add_option("--origins", o.origins, "'test' or comma list of ISO weeks");
        c->add_option("--features", o.features, "feature directory (default: the training features)");
        c->add_option("--panel", o.panel, "panel directory (default: the training panel)");
        c->add_option("--graph", o.graph, "edge list for dcrnn (default: the training graph)");
        req(c->add_option("--out", o.out, "forecast CSV"));
        add(commands, c, [](const RunInfo& i) { run_forecast(o, i); });
    }
    {
        static EvaluateOptions o;
        auto* c = add_command(app, "evaluate", "score forecasts by horizon and frontier quadrant", common);
        req(c->add_option("--forecasts", o.forecasts, "forecast CSVs (repeat or comma list)")->delimiter(','));
        req(c->add_option("--panel", o.panel, "panel directory"));
        c->add_option("--test-fraction", o.test_fraction, "test share of weeks");
        req(c->add_option("--out", o.out, "report directory"));
        add(commands, c, [](const RunInfo& i) { run_evaluate(o, i); });
    }
    {
        static FrontierOptions o;
        auto* c = add_command(app, "frontier", "mean/volatility quadrant per keyword", common);
        req(c->add_option("--panel", o.panel, "panel directory"));
        c->add_option("--test-fraction", o.test_fraction, "test share of weeks");
        req(c->add_option("--out", o.out, "frontier CSV"));
        add(commands, c, [](const RunInfo& i) { run_frontier(o, i); });
    }
    {
        static AblateOptions o;
        auto* c = add_command(app, "ablate", "feature-family ablation grid", common);
        req(c->add_option("--grid", o.grid, "grid file: settings and config.<name> = families[@geo_res]"));
        req(c->add_option("--out", o.out, "report directory"));
        add(commands, c, [](const RunInfo& i) { run_ablate(o, i); });
    }
    {
        static SynthOptions o;
        auto& s = o.cfg;
        auto* c = add_command(app, "synth", "generate a synthetic keyword market", common);
        c->add_option("--seed", s.seed, "generator seed");
        req(c->add_option("--out", o.out, "output directory"));
        c->add_option("--keywords", s.keywords, "keywords");
        c->add_option("--weeks", s.weeks, "weeks");
        c->add_option("--clusters", s.clusters, "competition clusters");
        c->add_option("--geo-groups", s.geo_groups, "continents used (at most 7)");
        c->add_option("--start", o.start, "first ISO week");
        c->add_option("--season-amplitude", s.season_amplitude, "yearly log-CPC amplitude");
        c->add_option("--geo-drift", s.geo_drift, "yearly log-CPC drift spread across geo groups");
        c->add_option("--shock-persistence", s.shock_persistence, "AR(1) coefficient of cluster shocks");
        c->add_option("--shock-scale", s.shock_scale, "stationary std of cluster shocks");
        c->add_option("--noise-scale", s.noise_scale, "stationary std of keyword noise");
        c->add_option("--noise-persistence", s.noise_persistence, "AR(1) coefficient of keyword noise");
        c->add_option("--tail-dof", s.tail_dof, "Student-t degrees of freedom of the noise");
        c->add_option("--cluster-level-spread", s.cluster_level_spread, "std of log cluster base CPC");
        c->add_option("--keyword-level-spread", s.keyword_level_spread, "std of log keyword factor");
        c->add_option("--base-cpc", s.base_cpc, "median cluster base CPC");
        c->add_option("--embedding-noise", s.embedding_noise, "embedding noise norm around the centroid");
        c->add_option("--embedding-dim", s.embedding_dim, "embedding dimension");
        c->add_option("--missing-probability", s.missing_probability, "chance a keyword-week has no events");
        c->add_option("--zero-click-probability", s.zero_click_probability, "chance a keyword-week has no clicks");
        c->add_option("--volume-shape", s.volume_shape, "Pareto tail index of keyword volumes");
        c->add_option("--hot-cluster", s.hot_cluster, "give cluster 0 a high level and volatility");
        c->add_option("--hot-level", s.hot_level, "hot-cluster level multiplier");
        c->add_option("--hot-volatility", s.hot_volatility, "hot-cluster shock and noise multiplier");
        c->add_option("--hot-max-delay", s.hot_max_delay, "max weeks hot keywords trail their cluster shock");
        c->add_option("--regime-shift-week", o.regime_shift_week, "week index of a level shift (default: none)");
        c->add_option("--regime-cluster", s.regime_cluster, "cluster affected by the shift");
        c->add_option("--regime-factor", s.regime_factor, "level multiplier after the shift");
        add(commands, c, [](const RunInfo& i) { run_synth(o, i); }, &s.seed);
    }
    {
        static DemoOptions o;
        auto* c = add_command(app, "demo", "synth, proxies, features, models, evaluation and frontier end to end",
                              common);
        c->add_option("--seed", o.seed, "seed for every stage");
        req(c->add_option("--out", o.out, "output directory"));
        c->add_option("--keywords", o.keywords, "synthetic keywords");
        c->add_option("--weeks", o.weeks, "synthetic weeks");
        c->add_option("--horizons", o.horizons, "forecast horizons in weeks")->delimiter(',');
        c->add_flag("--skip-dcrnn", o.skip_dcrnn, "leave out the graph forecaster");
        c->add_option("--dcrnn-lr", o.dcrnn_lr, "graph forecaster learning rate");
        c->add_option("--dcrnn-hidden", o.dcrnn_hidden, "graph forecaster recurrent width");
        c->add_option("--dcrnn-epochs", o.dcrnn_epochs, "graph forecaster max epochs");
        add(commands, c, [](const RunInfo& i) { run_demo(o, i); }, &o.seed);
    }

    const Command* chosen = nullptr;
    try {
        app.parse(argc, argv);
        for (const auto& c : commands) {
            if (c.app->parsed()) chosen = &c;
        }
        if (!common.config.empty()) apply_config(chosen->app, common.config);
        for (const auto* opt : chosen->required) {
            if (opt->count() == 0) throw UsageError(chosen->app->get_name() + ": " + opt->get_name() + " is required");
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.tag() << ": " << e.what() << '\n';
        return 1;
    }

    try {
        RunInfo info;
        info.command = chosen->app->get_name();
        info.argv.assign(argv, argv + argc);
        info.config = effective_config(chosen->app);
        info.threads = resolve_threads(common.threads, chosen->app->get_option("--threads")->count() > 0);
        info.seed = chosen->seed ? *chosen->seed : 0;
        set_thread_count(info.threads);
        info.config["threads"] = std::to_string(info.threads);
        chosen->run(info);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.tag() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: E_IO: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: E_INTERNAL: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
