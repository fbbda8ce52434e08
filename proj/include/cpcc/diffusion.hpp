#pragma once

#include "cpcc/semantic_graph.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace cpcc::models {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Row-compressed sparse square matrix used for graph propagation.
struct SparseRows {
    std::size_t n = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<std::size_t> cols;
    std::vector<double> weights;

    /// out = M * in, applied independently to each stacked block of n rows.
    template <typename S>
    void apply(const Mat<S>& in, Mat<S>& out) const {
        out.setZero(in.rows(), in.cols());
        const auto blocks = static_cast<std::size_t>(in.rows()) / n;
        for (std::size_t b = 0; b < blocks; ++b) {
            const auto base = static_cast<Eigen::Index>(b * n);
            for (std::size_t i = 0; i < n; ++i) {
                auto dst = out.row(base + static_cast<Eigen::Index>(i));
                for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) {
                    dst += static_cast<S>(weights[e]) * in.row(base + static_cast<Eigen::Index>(cols[e]));
                }
            }
        }
    }

    SparseRows transposed() const;
    /// Rows rescaled to sum to one; empty rows become a self-loop.
    SparseRows row_normalized() const;
    Mat<double> dense() const;
};

/// The forward adjacency A, the re-normalized transpose B = rownorm(A^T), and
/// the transposes of both (used by back-propagation).
struct DiffusionSupports {
    SparseRows forward;
    SparseRows forward_t;
    SparseRows backward;
    SparseRows backward_t;

    static DiffusionSupports from_graph(const proxies::SemanticGraph& g);
};

/// Sum over p = 0..K of W[p] applied to A^p Hin plus V[p] applied to B^p Hin.
/// W[p] and V[p] are (H_in x H_out). Reference form of the operation; the
/// recurrent cell uses the equivalent stacked layout with one identity term.
Mat<double> diffusion_conv(const proxies::SemanticGraph& g, const Mat<double>& hin, std::size_t k,
                           const std::vector<Mat<double>>& w, const std::vector<Mat<double>>& v);

/// Stacked propagation [Z, A Z, .., A^K Z, B Z, .., B^K Z] along columns.
template <typename S>
Mat<S> stack_supports(const DiffusionSupports& s, const Mat<S>& z, std::size_t k) {
    const auto d = z.cols();
    Mat<S> out(z.rows(), d * static_cast<Eigen::Index>(2 * k + 1));
    out.leftCols(d) = z;
    Mat<S> cur, next;
    for (int dir = 0; dir < 2; ++dir) {
        const SparseRows& m = dir == 0 ? s.forward : s.backward;
        cur = z;
        for (std::size_t p = 1; p <= k; ++p) {
            m.apply(cur, next);
            cur.swap(next);
            const auto slot = static_cast<Eigen::Index>(dir == 0 ? p : k + p);
            out.middleCols(slot * d, d) = cur;
        }
    }
    return out;
}

/// Adjoint of stack_supports: maps a gradient w.r.t. the stacked block back
/// to a gradient w.r.t. Z.
template <typename S>
Mat<S> unstack_supports_adjoint(const DiffusionSupports& s, const Mat<S>& grad, std::size_t k, Eigen::Index d) {
    Mat<S> dz = grad.leftCols(d);
    Mat<S> acc, tmp;
    for (int dir = 0; dir < 2; ++dir) {
        if (k == 0) break;
        const SparseRows& mt = dir == 0 ? s.forward_t : s.backward_t;
        auto block = [&](std::size_t p) {
            const auto slot = static_cast<Eigen::Index>(dir == 0 ? p : k + p);
            return grad.middleCols(slot * d, d);
        };
        // sum_p (M^T)^p G_p evaluated Horner-style.
        acc = block(k);
        for (std::size_t p = k - 1; p >= 1; --p) {
            mt.apply(acc, tmp);
            acc = block(p) + tmp;
        }
        mt.apply(acc, tmp);
        dz += tmp;
    }
    return dz;
}

} // namespace cpcc::models
