#pragma once

#include "cpcc/diffusion.hpp"
#include "cpcc/features.hpp"
#include "cpcc/forecast.hpp"
#include "cpcc/semantic_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cpcc::models {

struct DcrnnHyper {
    std::size_t k = 2;        // diffusion order
    std::size_t hidden = 32;  // recurrent width
    std::size_t window = 12;  // encoder steps
    double learning_rate = 1e-3;
    std::size_t batch = 8;    // origin windows per step
    std::size_t max_epochs = 60;
    std::size_t patience = 10;
    double validation_fraction = 0.1;
    double clip_norm = 5.0;
    std::uint64_t seed = 0;
};

/// Sizes of the flat parameter vector. Layout: gate weights
/// ((2K+1)(F+H) x 2H), gate bias (2H), candidate weights ((2K+1)(F+H) x H),
/// candidate bias (H), output heads ((H+F) x Q), output bias (Q).
struct DcrnnShape {
    std::size_t nodes = 0;
    std::size_t inputs = 0;
    std::size_t hidden = 0;
    std::size_t k = 0;
    std::size_t window = 0;
    std::size_t outputs = 0;

    std::size_t supports() const { return 2 * k + 1; }
    std::size_t cell_rows() const { return supports() * (inputs + hidden); }
    std::size_t gate_w() const { return 0; }
    std::size_t gate_b() const { return gate_w() + cell_rows() * 2 * hidden; }
    std::size_t cand_w() const { return gate_b() + 2 * hidden; }
    std::size_t cand_b() const { return cand_w() + cell_rows() * hidden; }
    std::size_t out_w() const { return cand_b() + hidden; }
    std::size_t out_b() const { return out_w() + (hidden + inputs) * outputs; }
    std::size_t count() const { return out_b() + outputs; }
};

/// One origin window in model units: `inputs` stacks the window's steps
/// ((window * nodes) x inputs); targets and masks are nodes x outputs.
template <typename S>
struct WindowSample {
    Mat<S> inputs;
    Mat<S> targets;
    Mat<S> mask;
};

/// Diffusion-convolutional GRU encoder with direct per-horizon linear heads
/// reading [H_L, x_L]. Inputs are rescaled per keyword (CPC-valued features
/// and targets divided by the keyword's training mean CPC) and other
/// features standardized; predictions are mapped back to CPC units.
struct GraphForecaster {
    DcrnnHyper hyper;
    DcrnnShape shape;
    std::vector<std::size_t> horizons;
    std::vector<float> params;
    std::vector<double> input_mean;
    std::vector<double> input_scale;
    std::vector<std::uint8_t> cpc_units;
    std::vector<double> keyword_scale;
    std::vector<features::FeatureDescriptor> catalog;
    std::string feature_hash;
    panel::WeekRange train;

    std::vector<double> train_loss;  // per epoch, CPC-unit MAE
    std::vector<double> val_loss;
    std::size_t best_epoch = 0;
    double best_val = 0.0;

    std::size_t parameter_count() const { return shape.count(); }
    std::string config_hash() const;
};

GraphForecaster fit_graph_forecaster(const features::FeatureTensor& x, const panel::WeeklyPanel& panel,
                                     const proxies::SemanticGraph& graph, const ForecastTask& task,
                                     const DcrnnHyper& hyper, panel::WeekRange train);

ForecastSet predict(const GraphForecaster& model, const features::FeatureTensor& x,
                    const proxies::SemanticGraph& graph, std::span<const OriginRequest> requests);

/// Loss (CPC-unit MAE over unmasked targets) and optional gradient for a set
/// of windows, in double precision. Exposed for gradient verification.
double dcrnn_loss(const DcrnnShape& shape, const proxies::SemanticGraph& graph, std::span<const double> params,
                  std::span<const WindowSample<double>> samples, std::span<const double> keyword_scale,
                  std::vector<double>* gradient = nullptr);

/// Small random problem for gradient checks: random features, targets,
/// masks, a random weighted graph and random parameters.
struct MicroInstance {
    DcrnnShape shape;
    proxies::SemanticGraph graph;
    std::vector<WindowSample<double>> samples;
    std::vector<double> keyword_scale;
    std::vector<double> params;
};

MicroInstance make_micro_instance(std::uint64_t seed, std::size_t nodes = 6, std::size_t weeks = 20,
                                  std::size_t hidden = 4, std::size_t k = 2, std::size_t window = 4);

/// Largest relative error between analytic and central-difference gradients.
double gradient_check(const MicroInstance& m, double eps = 1e-4);

} // namespace cpcc::models
