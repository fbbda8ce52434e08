#include "cpcc/diffusion.hpp"
#include "cpcc/error.hpp"

namespace cpcc::models {

SparseRows SparseRows::transposed() const {
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) rows[cols[e]].emplace_back(i, weights[e]);
    }
    SparseRows t;
    t.n = n;
    for (const auto& r : rows) {
        for (const auto& [c, w] : r) {
            t.cols.push_back(c);
            t.weights.push_back(w);
        }
        t.offsets.push_back(t.cols.size());
    }
    return t;
}

SparseRows SparseRows::row_normalized() const {
    SparseRows out;
    out.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        double total = 0.0;
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) total += weights[e];
        if (total > 0.0) {
            for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) {
                out.cols.push_back(cols[e]);
                out.weights.push_back(weights[e] / total);
            }
        } else {
            out.cols.push_back(i);
            out.weights.push_back(1.0);
        }
        out.offsets.push_back(out.cols.size());
    }
    return out;
}

Mat<double> SparseRows::dense() const {
    Mat<double> m = Mat<double>::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(cols[e])) += weights[e];
        }
    }
    return m;
}

DiffusionSupports DiffusionSupports::from_graph(const proxies::SemanticGraph& g) {
    DiffusionSupports s;
    s.forward.n = g.nodes;
    for (std::size_t i = 0; i < g.nodes; ++i) {
        for (const auto& e : g.edges[i]) {
            s.forward.cols.push_back(e.target);
            s.forward.weights.push_back(e.weight);
        }
        s.forward.offsets.push_back(s.forward.cols.size());
    }
    s.forward_t = s.forward.transposed();
    s.backward = s.forward_t.row_normalized();
    s.backward_t = s.backward.transposed();
    return s;
}

Mat<double> diffusion_conv(const proxies::SemanticGraph& g, const Mat<double>& hin, std::size_t k,
                           const std::vector<Mat<double>>& w, const std::vector<Mat<double>>& v) {
    require(k >= 1, ErrorCode::config, "diffusion order K must be at least 1");
    require(static_cast<std::size_t>(hin.rows()) == g.nodes, ErrorCode::data, "diffusion_conv: row count differs from graph nodes");
    require(w.size() == k + 1 && v.size() == k + 1, ErrorCode::data, "diffusion_conv: expected K+1 weight matrices per direction");
    const auto s = DiffusionSupports::from_graph(g);
    const auto out_cols = w[0].cols();
    Mat<double> out = Mat<double>::Zero(hin.rows(), out_cols);
    for (int dir = 0; dir < 2; ++dir) {
        const SparseRows& m = dir == 0 ? s.forward : s.backward;
        const auto& params = dir == 0 ? w : v;
        Mat<double> cur = hin, next;
        for (std::size_t p = 0; p <= k; ++p) {
            require(params[p].rows() == hin.cols() && params[p].cols() == out_cols, ErrorCode::data,
                    "diffusion_conv: weight shape mismatch");
            if (p > 0) {
                m.apply(cur, next);
                cur.swap(next);
            }
            out += cur * params[p];
        }
    }
    return out;
}

} // namespace cpcc::models
