#pragma once

#include "cpcc/ablation.hpp"
#include "cpcc/manifest.hpp"
#include "cpcc/synth.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cpcc::cli {

namespace fs = std::filesystem;

/// Invocation details copied into every manifest a stage writes.
struct RunInfo {
    std::string command;
    std::vector<std::string> argv;
    std::map<std::string, std::string> config;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool quiet = false;
};

struct IngestOptions {
    fs::path input;
    fs::path output;
    std::int64_t max_missing = ingest::kDefaultMaxMissing;
    std::int64_t min_mentions = ingest::kDefaultMinMentions;
};

struct AggregateOptions {
    fs::path events;
    fs::path out;
    int min_weeks = panel::kDefaultMinWeeks;
    int window = panel::kDefaultWindow;
};

struct ProxyOptions {
    fs::path panel;
    std::string embeddings = "fallback";
    std::size_t k = proxies::kDefaultGraphDegree;
    std::size_t dtw_m = proxies::kDefaultDtwNeighbors;
    std::size_t dtw_band = proxies::kDefaultDtwBand;
    fs::path gazetteer;  // empty: built-in table
    std::string train_end;  // last training ISO week; empty: chronological split
    double test_fraction = eval::kDefaultTestFraction;
    fs::path out;
};

struct FeaturizeOptions {
    fs::path panel;
    fs::path proxies;
    std::string families = "core";
    std::string geo_res = "continent";
    std::string aggregate = "mean";
    std::size_t noise_features = 32;
    std::uint64_t noise_seed = 0;
    fs::path out;
};

struct TrainOptions {
    std::string model = "ridge";
    std::string name;  // defaults to the model
    fs::path features;
    fs::path panel;  // defaults to the panel the features came from
    fs::path graph;  // defaults to the proxies' edge list
    std::vector<std::size_t> horizons{1, 6, 12};
    std::uint64_t seed = 0;
    double lambda = models::kDefaultRidgeLambda;
    std::string scaling = "keyword";
    std::size_t period = models::kDefaultPeriod;
    models::DcrnnHyper hyper;
    fs::path out;
};

struct ForecastOptions {
    fs::path model_dir;
    std::string origins = "test";
    fs::path features;
    fs::path panel;
    fs::path graph;
    fs::path out;
};

struct EvaluateOptions {
    std::vector<fs::path> forecasts;
    fs::path panel;
    double test_fraction = eval::kDefaultTestFraction;
    fs::path out;
};

struct FrontierOptions {
    fs::path panel;
    double test_fraction = eval::kDefaultTestFraction;
    fs::path out;
};

struct AblateOptions {
    fs::path grid;
    fs::path out;
};

struct SynthOptions {
    synth::SynthConfig cfg;
    std::string start = "2021-W01";
    std::optional<std::size_t> regime_shift_week;
    fs::path out;
};

struct DemoOptions {
    std::uint64_t seed = 7;
    fs::path out;
    std::size_t keywords = 200;
    std::size_t weeks = 127;
    std::vector<std::size_t> horizons{1, 6, 12};
    bool skip_dcrnn = false;
    double dcrnn_lr = 3e-3;
    std::size_t dcrnn_hidden = 32;
    std::size_t dcrnn_epochs = 60;
};

void run_ingest(const IngestOptions& o, const RunInfo& info);
void run_aggregate(const AggregateOptions& o, const RunInfo& info);
void run_build_proxies(const ProxyOptions& o, const RunInfo& info);
void run_featurize(const FeaturizeOptions& o, const RunInfo& info);
void run_train(const TrainOptions& o, const RunInfo& info);
void run_forecast(const ForecastOptions& o, const RunInfo& info);
std::vector<eval::EvalReport> run_evaluate(const EvaluateOptions& o, const RunInfo& info);
void run_frontier(const FrontierOptions& o, const RunInfo& info);
void run_ablate(const AblateOptions& o, const RunInfo& info);
synth::SynthOutput run_synth(const SynthOptions& o, const RunInfo& info);
void run_demo(const DemoOptions& o, const RunInfo& info);

/// Flat key = value text; '#' and ';' start comments. Keys are returned with
/// '_' replaced by '-' so they match long flag names.
std::map<std::string, std::string> read_config_file(const fs::path& path);

} // namespace cpcc::cli
