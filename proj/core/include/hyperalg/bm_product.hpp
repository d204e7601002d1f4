#pragma once

#include <string>
#include <vector>

#include "hyperalg/hypermatrix.hpp"

namespace hyperalg {

/// How the background hypermatrix is contracted in the general product.
/// `Literal` follows the displayed sum verbatim (background at (j1,...,jm));
/// `Reversed` contracts the background with its index tuple reversed
/// (background at (jm,...,j1)). For m = 2, Reversed is the convention under
/// which the background recurrence reproduces classical matrix powers.
enum class Convention { Literal, Reversed };

inline const char* convention_name(Convention c) {
    return c == Convention::Literal ? "literal" : "reversed";
}

namespace detail {

/// Validates operand shapes for an m-operand product and returns the result
/// dims and the contraction length k. Operand t (0-based, t < m-1) must equal
/// the result dims with axis t+1 replaced by k; the last operand is
/// k x n2 x ... x nm.
template <class S>
std::pair<std::vector<std::size_t>, std::size_t> product_shape(
    const std::vector<Hypermatrix<S>>& ops) {
    const std::size_t m = ops.size();
    if (m < 2) throw DimensionError("product arity must be at least 2");
    for (std::size_t t = 0; t < m; ++t)
        if (ops[t].order() != m)
            throw DimensionError("operand " + std::to_string(t) + " has order " +
                                 std::to_string(ops[t].order()) + ", expected " + std::to_string(m));

    const std::size_t k = ops[m - 1].dim(0);
    std::vector<std::size_t> result(m);
    result[0] = ops[0].dim(0);
    for (std::size_t a = 1; a < m; ++a) result[a] = ops[m - 1].dim(a);

    for (std::size_t t = 0; t < m; ++t) {
        std::vector<std::size_t> expect = result;
        if (t + 1 < m)
            expect[t + 1] = k;
        else
            expect[0] = k;
        for (std::size_t a = 0; a < m; ++a)
            if (ops[t].dim(a) != expect[a])
                throw DimensionError("operand " + std::to_string(t) + " axis " + std::to_string(a) +
                                     " has size " + std::to_string(ops[t].dim(a)) + ", expected " +
                                     std::to_string(expect[a]));
    }
    return {result, k};
}

template <class S>
void check_background(const Hypermatrix<S>& bg, std::size_t m, std::size_t k) {
    if (bg.order() != m || !bg.cubic() || bg.side() != k)
        throw DimensionError("background must be cubic of order " + std::to_string(m) +
                             " with side " + std::to_string(k));
}

inline bool next_index(std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
    for (std::size_t a = dims.size(); a-- > 0;) {
        if (++idx[a] < dims[a]) return true;
        idx[a] = 0;
    }
    return false;
}

}  // namespace detail

/// Bhattacharya-Mesner m-operand product. The number of operands equals the
/// order of every operand; for order 3,
///   b_{i1,i2,i3} = sum_j a1_{i1,j,i3} a2_{i1,i2,j} a3_{j,i2,i3}.
template <class S>
Hypermatrix<S> bm_product(const std::vector<Hypermatrix<S>>& ops) {
    auto [dims, k] = detail::product_shape(ops);
    const std::size_t m = ops.size();
    Hypermatrix<S> result(dims, ops[0].entries().front() - ops[0].entries().front());

    if (m == 3) {
        // Slice-batched order-3 kernel: for each j accumulate the rank-one
        // pattern col_j(A1[:,:,i3]) x row_j(A3[:,:,i3]) gated by A2[:,:,j].
        const auto& a1 = ops[0];
        const auto& a2 = ops[1];
        const auto& a3 = ops[2];
        const std::size_t n1 = dims[0], n2 = dims[1], n3 = dims[2];
        for (std::size_t i3 = 0; i3 < n3; ++i3)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i1 = 0; i1 < n1; ++i1) {
                    const S& left = a1(i1, j, i3);
                    if (scalar_is_zero(left)) continue;
                    for (std::size_t i2 = 0; i2 < n2; ++i2)
                        result(i1, i2, i3) += left * a2(i1, i2, j) * a3(j, i2, i3);
                }
        return result;
    }

    std::vector<std::size_t> idx(m, 0);
    std::vector<std::size_t> op_idx(m);
    do {
        S sum = result.at(idx);  // zero of the right backend
        for (std::size_t j = 0; j < k; ++j) {
            op_idx.assign(idx.begin(), idx.end());
            op_idx[1] = j;
            S term = ops[0].at(op_idx);
            bool zero = scalar_is_zero(term);
            for (std::size_t t = 1; t < m && !zero; ++t) {
                op_idx.assign(idx.begin(), idx.end());
                if (t + 1 < m)
                    op_idx[t + 1] = j;
                else
                    op_idx[0] = j;
                term = term * ops[t].at(op_idx);
                zero = scalar_is_zero(term);
            }
            if (!zero) sum += term;
        }
        result.at(idx) = sum;
    } while (detail::next_index(idx, dims));
    return result;
}

/// General BM product with a cubic background of side k. The background is
/// contracted against m independent summation indices; a Kronecker delta
/// background collapses the sum back to the plain BM product.
template <class S>
Hypermatrix<S> general_bm_product(const std::vector<Hypermatrix<S>>& ops,
                                  const Hypermatrix<S>& background,
                                  Convention convention = Convention::Literal) {
    auto [dims, k] = detail::product_shape(ops);
    const std::size_t m = ops.size();
    detail::check_background(background, m, k);

    Hypermatrix<S> result(dims, ops[0].entries().front() - ops[0].entries().front());

    // Collect the nonzero background entries once, with the convention baked
    // into the stored tuple: entry a of the tuple is the value of j_a in the
    // displayed sum. The background is typically sparse (and often zero) in
    // the power-sequence recurrence, so iterating its support dominates
    // iterating all k^m tuples.
    const std::vector<std::size_t> jdims(m, k);
    std::vector<std::pair<std::vector<std::size_t>, S>> support;
    {
        std::vector<std::size_t> js(m, 0);
        std::vector<std::size_t> bg_idx(m);
        do {
            for (std::size_t a = 0; a < m; ++a)
                bg_idx[a] = convention == Convention::Literal ? js[a] : js[m - 1 - a];
            const S& w = background.at(bg_idx);
            if (!scalar_is_zero(w)) support.emplace_back(js, w);
        } while (detail::next_index(js, jdims));
    }

    std::vector<std::size_t> idx(m, 0);
    std::vector<std::size_t> op_idx(m);
    do {
        S sum = result.at(idx);
        for (const auto& [js, w] : support) {
            // Operand t < m-1 carries j_{t+1} in slot t+1; the last operand
            // carries j_0 in slot 0 (0-based relabeling of the displayed sum).
            S term = w;
            bool zero = false;
            for (std::size_t t = 0; t < m && !zero; ++t) {
                op_idx.assign(idx.begin(), idx.end());
                if (t + 1 < m)
                    op_idx[t + 1] = js[t + 1];
                else
                    op_idx[0] = js[0];
                term = term * ops[t].at(op_idx);
                zero = scalar_is_zero(term);
            }
            if (!zero) sum += term;
        }
        result.at(idx) = sum;
    } while (detail::next_index(idx, dims));
    return result;
}

/// Reference implementation of the plain BM product: the full naive loop
/// nest, kept deliberately simple. Tests compare the production kernels
/// against it; the CLI bench command times the two paths.
template <class S>
Hypermatrix<S> naive_bm_product(const std::vector<Hypermatrix<S>>& ops) {
    auto [dims, k] = detail::product_shape(ops);
    const std::size_t m = ops.size();
    Hypermatrix<S> result(dims, ops[0].entries().front() - ops[0].entries().front());
    std::vector<std::size_t> idx(m, 0);
    std::vector<std::size_t> op_idx(m);
    do {
        S sum = result.at(idx);
        for (std::size_t j = 0; j < k; ++j) {
            S term = scalar_one_like(sum);
            for (std::size_t t = 0; t < m; ++t) {
                op_idx.assign(idx.begin(), idx.end());
                if (t + 1 < m)
                    op_idx[t + 1] = j;
                else
                    op_idx[0] = j;
                term = term * ops[t].at(op_idx);
            }
            sum += term;
        }
        result.at(idx) = sum;
    } while (detail::next_index(idx, dims));
    return result;
}

}  // namespace hyperalg
