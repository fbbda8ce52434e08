#include "cpcc/error.hpp"
#include "cpcc/graph_forecaster.hpp"
#include "cpcc/rng.hpp"
#include "cpcc/text_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace cpcc::models {

namespace {

template <typename S>
using ConstMap = Eigen::Map<const Mat<S>>;
template <typename S>
using RowMap = Eigen::Map<const Eigen::Matrix<S, 1, Eigen::Dynamic>>;

template <typename S>
struct BatchResult {
    double abs_sum = 0.0;  // sum of scaled absolute errors
    double count = 0.0;    // unmasked targets
};

/// Forward pass over a batch of windows; accumulates the gradient of
/// abs_sum / count into `grad` when non-null. `outputs` receives the raw
/// head outputs (stacked windows x outputs) when non-null.
template <typename S>
BatchResult<S> run_batch(const DcrnnShape& sh, const DiffusionSupports& sup, const S* params,
                         std::span<const WindowSample<S>* const> batch, std::span<const S> scale, S* grad,
                         Mat<S>* outputs) {
    using Index = Eigen::Index;
    const auto n = static_cast<Index>(sh.nodes);
    const auto b_count = static_cast<Index>(batch.size());
    const Index bn = n * b_count;
    const auto f = static_cast<Index>(sh.inputs);
    const auto h = static_cast<Index>(sh.hidden);
    const Index d = f + h;
    const auto md = static_cast<Index>(sh.cell_rows());
    const auto q = static_cast<Index>(sh.outputs);
    const std::size_t steps = sh.window;

    const ConstMap<S> wg(params + sh.gate_w(), md, 2 * h);
    const RowMap<S> bg(params + sh.gate_b(), 2 * h);
    const ConstMap<S> wc(params + sh.cand_w(), md, h);
    const RowMap<S> bc(params + sh.cand_b(), h);
    const ConstMap<S> wo(params + sh.out_w(), h + f, q);
    const RowMap<S> bo(params + sh.out_b(), q);

    std::vector<Mat<S>> hs(steps + 1), xs(steps), sz(steps), gates(steps), szr(steps), cand(steps);
    hs[0] = Mat<S>::Zero(bn, h);
    Mat<S> z(bn, d);
    for (std::size_t tau = 0; tau < steps; ++tau) {
        Mat<S>& x = xs[tau];
        x.resize(bn, f);
        for (Index b = 0; b < b_count; ++b) {
            x.middleRows(b * n, n) = batch[static_cast<std::size_t>(b)]->inputs.middleRows(static_cast<Index>(tau) * n, n);
        }
        const Mat<S>& hp = hs[tau];
        z.leftCols(f) = x;
        z.rightCols(h) = hp;
        sz[tau] = stack_supports(sup, z, sh.k);
        Mat<S> pg = sz[tau] * wg;
        pg.rowwise() += bg;
        gates[tau] = (S(1) + (-pg.array()).exp()).inverse().matrix();
        const auto r = gates[tau].leftCols(h);
        const auto u = gates[tau].rightCols(h);
        z.rightCols(h) = r.cwiseProduct(hp);
        szr[tau] = stack_supports(sup, z, sh.k);
        Mat<S> pc = szr[tau] * wc;
        pc.rowwise() += bc;
        cand[tau] = pc.array().tanh().matrix();
        hs[tau + 1] = u.cwiseProduct(hp) + (S(1) - u.array()).matrix().cwiseProduct(cand[tau]);
    }

    Mat<S> hx(bn, h + f);
    hx.leftCols(h) = hs[steps];
    hx.rightCols(f) = xs[steps - 1];
    Mat<S> o = hx * wo;
    o.rowwise() += bo;
    if (outputs) *outputs = o;

    BatchResult<S> res;
    Mat<S> d_o;
    if (grad) d_o = Mat<S>::Zero(bn, q);
    for (Index b = 0; b < b_count; ++b) {
        const auto& s = *batch[static_cast<std::size_t>(b)];
        if (s.targets.size() == 0) continue;
        for (Index i = 0; i < n; ++i) {
            for (Index c = 0; c < q; ++c) {
                if (s.mask(i, c) == S(0)) continue;
                const S diff = o(b * n + i, c) - s.targets(i, c);
                const S w = scale[static_cast<std::size_t>(i)];
                res.abs_sum += static_cast<double>(w * std::abs(diff));
                res.count += 1.0;
                if (grad) d_o(b * n + i, c) = w * (diff > S(0) ? S(1) : (diff < S(0) ? S(-1) : S(0)));
            }
        }
    }
    if (!grad || res.count == 0.0) return res;
    d_o /= static_cast<S>(res.count);

    Eigen::Map<Mat<S>> g_wg(grad + sh.gate_w(), md, 2 * h);
    Eigen::Map<Eigen::Matrix<S, 1, Eigen::Dynamic>> g_bg(grad + sh.gate_b(), 2 * h);
    Eigen::Map<Mat<S>> g_wc(grad + sh.cand_w(), md, h);
    Eigen::Map<Eigen::Matrix<S, 1, Eigen::Dynamic>> g_bc(grad + sh.cand_b(), h);
    Eigen::Map<Mat<S>> g_wo(grad + sh.out_w(), h + f, q);
    Eigen::Map<Eigen::Matrix<S, 1, Eigen::Dynamic>> g_bo(grad + sh.out_b(), q);

    g_wo.noalias() += hx.transpose() * d_o;
    g_bo += d_o.colwise().sum();
    Mat<S> dh = d_o * wo.topRows(h).transpose();

    Mat<S> dg(bn, 2 * h);
    for (std::size_t tau = steps; tau-- > 0;) {
        const Mat<S>& hp = hs[tau];
        const auto r = gates[tau].leftCols(h);
        const auto u = gates[tau].rightCols(h);
        const Mat<S>& c = cand[tau];

        const Mat<S> dc = dh.cwiseProduct((S(1) - u.array()).matrix());
        const Mat<S> du = dh.cwiseProduct(hp - c);
        Mat<S> dhp = dh.cwiseProduct(u);

        const Mat<S> dpc = dc.cwiseProduct((S(1) - c.array().square()).matrix());
        g_wc.noalias() += szr[tau].transpose() * dpc;
        g_bc += dpc.colwise().sum();
        const Mat<S> dzr = unstack_supports_adjoint(sup, Mat<S>(dpc * wc.transpose()), sh.k, d);
        const auto drh = dzr.rightCols(h);
        dg.leftCols(h) = drh.cwiseProduct(hp);
        dhp += drh.cwiseProduct(r);
        dg.rightCols(h) = du;

        const Mat<S> dpg = dg.cwiseProduct(gates[tau].cwiseProduct((S(1) - gates[tau].array()).matrix()));
        g_wg.noalias() += sz[tau].transpose() * dpg;
        g_bg += dpg.colwise().sum();
        const Mat<S> dz = unstack_supports_adjoint(sup, Mat<S>(dpg * wg.transpose()), sh.k, d);
        dhp += dz.rightCols(h);
        dh = std::move(dhp);
    }
    return res;
}

void check_graph(const proxies::SemanticGraph& graph, std::size_t nodes) {
    require(graph.nodes == nodes && graph.edges.size() == nodes, ErrorCode::data,
            "graph has " + std::to_string(graph.nodes) + " nodes, expected " + std::to_string(nodes));
    for (std::size_t i = 0; i < nodes; ++i) {
        require(std::abs(graph.row_sum(i) - 1.0) <= 1e-6, ErrorCode::data,
                "graph row " + std::to_string(i) + " sums to " + format_double(graph.row_sum(i)) +
                    "; the graph forecaster needs a row-normalized adjacency");
        for (const auto& e : graph.edges[i]) {
            require(e.target < nodes && e.weight >= 0.0, ErrorCode::data, "invalid graph edge");
        }
    }
}

/// Model-space preprocessing shared by training and prediction.
struct Scaler {
    const GraphForecaster& m;

    float input(std::size_t k, std::size_t j, double v) const {
        if (m.cpc_units[j]) return static_cast<float>(v / m.keyword_scale[k] - 1.0);
        return static_cast<float>((v - m.input_mean[j]) / m.input_scale[j]);
    }
    float target(std::size_t k, double y) const { return static_cast<float>(y / m.keyword_scale[k] - 1.0); }
    double output(std::size_t k, float o) const { return m.keyword_scale[k] * (1.0 + static_cast<double>(o)); }
};

WindowSample<float> make_window(const GraphForecaster& m, const features::FeatureTensor& x, std::size_t origin) {
    const std::size_t last = features::feature_row(origin);
    require(last + 1 >= m.shape.window && last < x.t, ErrorCode::config,
            "origin " + std::to_string(origin) + " lacks a full input window");
    const Scaler sc{m};
    WindowSample<float> s;
    s.inputs.resize(static_cast<Eigen::Index>(m.shape.window * x.n), static_cast<Eigen::Index>(x.f));
    for (std::size_t tau = 0; tau < m.shape.window; ++tau) {
        const std::size_t row = last + 1 - m.shape.window + tau;
        for (std::size_t k = 0; k < x.n; ++k) {
            const auto v = x.row(k, row);
            for (std::size_t j = 0; j < x.f; ++j) {
                s.inputs(static_cast<Eigen::Index>(tau * x.n + k), static_cast<Eigen::Index>(j)) = sc.input(k, j, v[j]);
            }
        }
    }
    return s;
}

struct Adam {
    std::vector<float> m1, m2;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    std::size_t step = 0;

    void update(std::vector<float>& params, const std::vector<float>& grad, double lr) {
        if (m1.empty()) {
            m1.assign(params.size(), 0.0f);
            m2.assign(params.size(), 0.0f);
        }
        ++step;
        const double c1 = 1.0 - std::pow(beta1, static_cast<double>(step));
        const double c2 = 1.0 - std::pow(beta2, static_cast<double>(step));
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double g = grad[i];
            m1[i] = static_cast<float>(beta1 * m1[i] + (1.0 - beta1) * g);
            m2[i] = static_cast<float>(beta2 * m2[i] + (1.0 - beta2) * g * g);
            const double mhat = m1[i] / c1;
            const double vhat = m2[i] / c2;
            params[i] = static_cast<float>(params[i] - lr * mhat / (std::sqrt(vhat) + eps));
        }
    }
};

template <typename S>
void init_params(const DcrnnShape& sh, Rng& rng, std::vector<S>& p, bool random_heads) {
    p.assign(sh.count(), S(0));
    auto xavier = [&](std::size_t offset, std::size_t rows, std::size_t cols) {
        const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
        for (std::size_t i = 0; i < rows * cols; ++i) p[offset + i] = static_cast<S>(rng.uniform(-limit, limit));
    };
    xavier(sh.gate_w(), sh.cell_rows(), 2 * sh.hidden);
    xavier(sh.cand_w(), sh.cell_rows(), sh.hidden);
    for (std::size_t i = 0; i < 2 * sh.hidden; ++i) p[sh.gate_b() + i] = S(1);
    if (random_heads) {
        xavier(sh.out_w(), sh.hidden + sh.inputs, sh.outputs);
        for (std::size_t i = 0; i < 2 * sh.hidden; ++i) p[sh.gate_b() + i] = static_cast<S>(0.5 * rng.normal());
        for (std::size_t i = 0; i < sh.hidden; ++i) p[sh.cand_b() + i] = static_cast<S>(0.5 * rng.normal());
        for (std::size_t i = 0; i < sh.outputs; ++i) p[sh.out_b() + i] = static_cast<S>(0.5 * rng.normal());
    }
}

} // namespace

std::string GraphForecaster::config_hash() const {
    std::string desc = "dcrnn;k=" + std::to_string(hyper.k) + ";hidden=" + std::to_string(hyper.hidden) +
                       ";window=" + std::to_string(hyper.window) + ";lr=" + format_double(hyper.learning_rate) +
                       ";batch=" + std::to_string(hyper.batch) + ";epochs=" + std::to_string(hyper.max_epochs) +
                       ";patience=" + std::to_string(hyper.patience) + ";seed=" + std::to_string(hyper.seed) +
                       ";features=" + feature_hash;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(desc)));
    return buf;
}

GraphForecaster fit_graph_forecaster(const features::FeatureTensor& x, const panel::WeeklyPanel& panel,
                                     const proxies::SemanticGraph& graph, const ForecastTask& task,
                                     const DcrnnHyper& hyper, panel::WeekRange train) {
    require(hyper.k >= 1 && hyper.hidden >= 1 && hyper.window >= 1 && hyper.batch >= 1, ErrorCode::config,
            "graph forecaster needs K, hidden, window and batch >= 1");
    require(hyper.learning_rate > 0.0, ErrorCode::config, "learning rate must be positive");
    require(!task.horizons.empty(), ErrorCode::config, "no horizons requested");
    require(x.n == panel.n_keywords() && x.t == panel.n_weeks(), ErrorCode::data,
            "feature tensor is not aligned with the panel");
    require(train.end <= x.t && train.size() > 0, ErrorCode::config, "training range outside the panel");
    check_graph(graph, x.n);

    GraphForecaster m;
    m.hyper = hyper;
    m.horizons = task.horizons;
    m.catalog = x.catalog;
    m.feature_hash = x.config_hash;
    m.train = train;
    m.shape = {x.n, x.f, hyper.hidden, hyper.k, hyper.window, task.horizons.size()};

    m.keyword_scale = keyword_scales(panel, train);

    // Standardization of non-CPC features over training rows.
    m.cpc_units.resize(x.f);
    m.input_mean.assign(x.f, 0.0);
    m.input_scale.assign(x.f, 1.0);
    for (std::size_t j = 0; j < x.f; ++j) {
        m.cpc_units[j] = x.catalog[j].cpc_units ? 1 : 0;
        if (m.cpc_units[j]) continue;
        double s = 0.0, s2 = 0.0;
        std::size_t c = 0;
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = train.begin; t < train.end; ++t) {
                s += x.at(k, t, j);
                ++c;
            }
        }
        const double mean = s / static_cast<double>(c);
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t t = train.begin; t < train.end; ++t) s2 += (x.at(k, t, j) - mean) * (x.at(k, t, j) - mean);
        }
        const double sd = std::sqrt(s2 / static_cast<double>(c));
        m.input_mean[j] = mean;
        m.input_scale[j] = sd > 1e-12 ? sd : 1.0;
    }

    // Origin windows with at least one target inside the training range.
    const std::size_t min_h = *std::min_element(task.horizons.begin(), task.horizons.end());
    std::size_t first = x.origin_weeks.empty() ? 0 : x.origin_weeks.front();
    first = std::max({first, train.begin, hyper.window >= 2 ? hyper.window - 2 : 0});
    std::vector<std::size_t> origins;
    for (std::size_t t = first; features::feature_row(t) < train.end && t + min_h < train.end; ++t) origins.push_back(t);
    require(origins.size() >= 2, ErrorCode::data, "training range too short for the graph forecaster window");

    const Scaler sc{m};
    std::vector<WindowSample<float>> samples;
    samples.reserve(origins.size());
    for (std::size_t t : origins) {
        auto s = make_window(m, x, t);
        s.targets = Mat<float>::Zero(static_cast<Eigen::Index>(x.n), static_cast<Eigen::Index>(m.horizons.size()));
        s.mask = s.targets;
        for (std::size_t q = 0; q < m.horizons.size(); ++q) {
            const std::size_t target = t + m.horizons[q];
            if (target >= train.end) continue;
            for (std::size_t k = 0; k < x.n; ++k) {
                if (!panel.is_actual(k, target)) continue;
                s.targets(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(q)) = sc.target(k, panel.cpc(k, target));
                s.mask(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(q)) = 1.0f;
            }
        }
        samples.push_back(std::move(s));
    }
    const auto n_val = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(hyper.validation_fraction * static_cast<double>(samples.size()) - 1e-9)));
    require(n_val < samples.size(), ErrorCode::data, "no training windows left after the validation tail");
    const std::size_t n_fit = samples.size() - n_val;

    const auto sup = DiffusionSupports::from_graph(graph);
    std::vector<float> scale_f(x.n);
    for (std::size_t k = 0; k < x.n; ++k) scale_f[k] = static_cast<float>(m.keyword_scale[k]);

    Rng init_rng = Rng::stream(hyper.seed, "dcrnn-init");
    init_params(m.shape, init_rng, m.params, false);
    Rng order_rng = Rng::stream(hyper.seed, "dcrnn-order");

    auto evaluate = [&](std::size_t begin, std::size_t end) {
        double sum = 0.0, count = 0.0;
        std::vector<const WindowSample<float>*> batch;
        for (std::size_t i = begin; i < end; i += hyper.batch) {
            batch.clear();
            for (std::size_t j = i; j < std::min(end, i + hyper.batch); ++j) batch.push_back(&samples[j]);
            const auto r = run_batch<float>(m.shape, sup, m.params.data(), batch, scale_f, nullptr, nullptr);
            sum += r.abs_sum;
            count += r.count;
        }
        return count > 0.0 ? sum / count : 0.0;
    };

    Adam adam;
    std::vector<float> grad(m.shape.count());
    std::vector<std::size_t> order(n_fit);
    std::vector<float> best = m.params;
    m.best_val = evaluate(n_fit, samples.size());
    m.best_epoch = 0;
    std::size_t stale = 0;
    for (std::size_t epoch = 1; epoch <= hyper.max_epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[order_rng.index(i)]);
        double epoch_sum = 0.0, epoch_count = 0.0;
        std::vector<const WindowSample<float>*> batch;
        for (std::size_t i = 0; i < n_fit; i += hyper.batch) {
            batch.clear();
            for (std::size_t j = i; j < std::min(n_fit, i + hyper.batch); ++j) batch.push_back(&samples[order[j]]);
            std::fill(grad.begin(), grad.end(), 0.0f);
            const auto r = run_batch<float>(m.shape, sup, m.params.data(), batch, scale_f, grad.data(), nullptr);
            epoch_sum += r.abs_sum;
            epoch_count += r.count;
            double norm = 0.0;
            for (float g : grad) norm += static_cast<double>(g) * g;
            norm = std::sqrt(norm);
            require(std::isfinite(norm), ErrorCode::numeric,
                    "graph forecaster diverged (non-finite gradient) in epoch " + std::to_string(epoch));
            if (hyper.clip_norm > 0.0 && norm > hyper.clip_norm) {
                const auto f = static_cast<float>(hyper.clip_norm / norm);
                for (float& g : grad) g *= f;
            }
            adam.update(m.params, grad, hyper.learning_rate);
        }
        const double train_mae = epoch_count > 0.0 ? epoch_sum / epoch_count : 0.0;
        const double val = evaluate(n_fit, samples.size());
        require(std::isfinite(train_mae) && std::isfinite(val), ErrorCode::numeric,
                "graph forecaster diverged (non-finite loss) in epoch " + std::to_string(epoch));
        m.train_loss.push_back(train_mae);
        m.val_loss.push_back(val);
        if (val < m.best_val) {
            m.best_val = val;
            m.best_epoch = epoch;
            best = m.params;
            stale = 0;
        } else if (++stale >= hyper.patience) {
            break;
        }
    }
    m.params = std::move(best);
    return m;
}

ForecastSet predict(const GraphForecaster& model, const features::FeatureTensor& x,
                    const proxies::SemanticGraph& graph, std::span<const OriginRequest> requests) {
    require(x.catalog == model.catalog, ErrorCode::data, "feature catalog differs from the one the model was trained on");
    require(x.n == model.shape.nodes, ErrorCode::data, "keyword count differs from the trained model");
    require(model.params.size() == model.shape.count(), ErrorCode::data, "parameter vector has the wrong size");
    check_graph(graph, x.n);
    const auto sup = DiffusionSupports::from_graph(graph);
    std::vector<float> scale_f(x.n);
    for (std::size_t k = 0; k < x.n; ++k) scale_f[k] = static_cast<float>(model.keyword_scale[k]);
    const Scaler sc{model};

    ForecastSet out;
    out.model = "dcrnn";
    out.config_hash = model.config_hash();
    for (const auto& req : requests) {
        const auto it = std::find(model.horizons.begin(), model.horizons.end(), req.horizon);
        require(it != model.horizons.end(), ErrorCode::config,
                "graph forecaster was not trained for horizon " + std::to_string(req.horizon));
        const auto q = static_cast<Eigen::Index>(it - model.horizons.begin());
        for (std::size_t t : req.origins) {
            const auto window = make_window(model, x, t);
            const WindowSample<float>* one[] = {&window};
            Mat<float> o;
            run_batch<float>(model.shape, sup, model.params.data(), one, scale_f, nullptr, &o);
            for (std::size_t k = 0; k < x.n; ++k) {
                out.entries.push_back(
                    {k, t, req.horizon, clamp_prediction(sc.output(k, o(static_cast<Eigen::Index>(k), q)))});
            }
        }
    }
    return out;
}

double dcrnn_loss(const DcrnnShape& shape, const proxies::SemanticGraph& graph, std::span<const double> params,
                  std::span<const WindowSample<double>> samples, std::span<const double> keyword_scale,
                  std::vector<double>* gradient) {
    require(params.size() == shape.count(), ErrorCode::data, "parameter vector has the wrong size");
    const auto sup = DiffusionSupports::from_graph(graph);
    std::vector<const WindowSample<double>*> batch;
    for (const auto& s : samples) batch.push_back(&s);
    if (gradient) gradient->assign(shape.count(), 0.0);
    const auto r = run_batch<double>(shape, sup, params.data(), batch, keyword_scale,
                                     gradient ? gradient->data() : nullptr, nullptr);
    return r.count > 0.0 ? r.abs_sum / r.count : 0.0;
}

MicroInstance make_micro_instance(std::uint64_t seed, std::size_t nodes, std::size_t weeks, std::size_t hidden,
                                  std::size_t k, std::size_t window) {
    require(nodes >= 3 && weeks > window + 2, ErrorCode::config, "micro instance too small");
    Rng rng = Rng::stream(seed, "micro-instance");
    MicroInstance m;
    const std::size_t inputs = 3;
    const std::vector<std::size_t> horizons{1, 2};
    m.shape = {nodes, inputs, hidden, k, window, horizons.size()};

    // Random weighted digraph with two out-edges per node.
    std::vector<std::vector<std::size_t>> nb(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        nb[i] = {(i + 1) % nodes, (i + 2 + rng.index(nodes - 2)) % nodes};
        if (nb[i][1] == i || nb[i][1] == nb[i][0]) nb[i][1] = (i + nodes - 1) % nodes;
    }
    m.graph = proxies::graph_from_neighbors(nb, "random");
    for (auto& row : m.graph.edges) {
        double total = 0.0;
        for (auto& e : row) total += (e.weight = rng.uniform(0.2, 1.0));
        for (auto& e : row) e.weight /= total;
    }

    Mat<double> series(static_cast<Eigen::Index>(nodes), static_cast<Eigen::Index>(weeks));
    for (Eigen::Index i = 0; i < series.rows(); ++i) {
        for (Eigen::Index t = 0; t < series.cols(); ++t) series(i, t) = rng.normal();
    }
    for (std::size_t origin = window - 1; origin + horizons.back() < weeks; ++origin) {
        WindowSample<double> s;
        s.inputs.resize(static_cast<Eigen::Index>(window * nodes), static_cast<Eigen::Index>(inputs));
        for (std::size_t tau = 0; tau < window; ++tau) {
            const std::size_t t = origin + 1 - window + tau;
            for (std::size_t i = 0; i < nodes; ++i) {
                const auto r = static_cast<Eigen::Index>(tau * nodes + i);
                s.inputs(r, 0) = series(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t));
                s.inputs(r, 1) = t > 0 ? series(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t - 1)) : 0.0;
                s.inputs(r, 2) = rng.normal();
            }
        }
        s.targets.resize(static_cast<Eigen::Index>(nodes), static_cast<Eigen::Index>(horizons.size()));
        s.mask.resize(s.targets.rows(), s.targets.cols());
        for (std::size_t i = 0; i < nodes; ++i) {
            for (std::size_t q = 0; q < horizons.size(); ++q) {
                const auto r = static_cast<Eigen::Index>(i);
                const auto c = static_cast<Eigen::Index>(q);
                s.targets(r, c) = series(r, static_cast<Eigen::Index>(origin + horizons[q])) + 0.3 * rng.normal();
                s.mask(r, c) = rng.uniform() < 0.85 ? 1.0 : 0.0;
            }
        }
        m.samples.push_back(std::move(s));
    }
    m.keyword_scale.resize(nodes);
    for (auto& s : m.keyword_scale) s = rng.uniform(0.5, 3.0);
    init_params(m.shape, rng, m.params, true);
    return m;
}

double gradient_check(const MicroInstance& m, double eps) {
    std::vector<double> analytic;
    dcrnn_loss(m.shape, m.graph, m.params, m.samples, m.keyword_scale, &analytic);
    std::vector<double> p = m.params;
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double saved = p[i];
        p[i] = saved + eps;
        const double up = dcrnn_loss(m.shape, m.graph, p, m.samples, m.keyword_scale);
        p[i] = saved - eps;
        const double down = dcrnn_loss(m.shape, m.graph, p, m.samples, m.keyword_scale);
        p[i] = saved;
        const double numeric = (up - down) / (2.0 * eps);
        const double denom = std::max({std::abs(analytic[i]), std::abs(numeric), 1e-7});
        worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
    }
    return worst;
}

} // namespace cpcc::models
