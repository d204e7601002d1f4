#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hyperalg/bm_product.hpp"
#include "hyperalg/linalg.hpp"

namespace hyperalg {

/// Parenthesization of a ternary product: either the bare base hypermatrix
/// (a leaf) or a node with exactly three children. Degree = leaf count;
/// only odd degrees occur.
class TernaryTree {
public:
    using Ptr = std::shared_ptr<const TernaryTree>;

    static Ptr leaf() {
        static Ptr l(new TernaryTree());
        return l;
    }
    static Ptr node(Ptr a, Ptr b, Ptr c) { return Ptr(new TernaryTree(a, b, c)); }

    bool is_leaf() const { return !kids_[0]; }
    const std::array<Ptr, 3>& kids() const { return kids_; }
    std::size_t degree() const { return degree_; }

    /// Pre-order string, e.g. "A" or "(A A (A A A))". Canonical key.
    const std::string& repr() const { return repr_; }

private:
    TernaryTree() : degree_(1), repr_("A") {}
    TernaryTree(Ptr a, Ptr b, Ptr c)
        : kids_{a, b, c},
          degree_(a->degree() + b->degree() + c->degree()),
          repr_("(" + a->repr() + " " + b->repr() + " " + c->repr() + ")") {}

    std::array<Ptr, 3> kids_{};
    std::size_t degree_;
    std::string repr_;
};

/// Number of distinct parenthesized powers of a given odd degree: the
/// arity-3 Fuss-Catalan numbers. Computed by the ternary splitting
/// recurrence c_{2k+1} = sum c_i c_j c_{2k+1-i-j} with c_1 = 1.
inline Int fuss_catalan_count(std::size_t degree) {
    if (degree % 2 == 0) throw DimensionError("no even degree powers exist");
    std::vector<Int> c(degree + 1, Int(0));
    c[1] = 1;
    for (std::size_t d = 3; d <= degree; d += 2)
        for (std::size_t i = 1; i < d; i += 2)
            for (std::size_t j = 1; i + j < d; j += 2) c[d] += c[i] * c[j] * c[d - i - j];
    return c[degree];
}

/// Closed form C(3k, k) / (2k+1) for degree 2k+1.
inline Int fuss_catalan_closed_form(std::size_t degree) {
    if (degree % 2 == 0) throw DimensionError("no even degree powers exist");
    const std::size_t k = (degree - 1) / 2;
    Int binom = 1;
    for (std::size_t i = 1; i <= k; ++i) binom = binom * Int(3 * k - i + 1) / Int(i);
    return binom / Int(2 * k + 1);
}

/// All distinct ternary trees of the given odd degree, in canonical order:
/// lexicographic on the pre-order string.
inline std::vector<TernaryTree::Ptr> enumerate_trees(std::size_t degree) {
    if (degree % 2 == 0) throw DimensionError("no even degree powers exist");
    static std::map<std::size_t, std::vector<TernaryTree::Ptr>> cache;
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::vector<TernaryTree::Ptr> out;
    if (degree == 1) {
        out.push_back(TernaryTree::leaf());
    } else {
        for (std::size_t i = 1; i < degree; i += 2)
            for (std::size_t j = 1; i + j < degree; j += 2)
                for (const auto& a : enumerate_trees(i))
                    for (const auto& b : enumerate_trees(j))
                        for (const auto& c : enumerate_trees(degree - i - j))
                            out.push_back(TernaryTree::node(a, b, c));
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x->repr() < y->repr(); });
    }
    cache[degree] = out;
    return out;
}

/// Evaluates a parenthesized power of A, sharing repeated subtrees.
template <class S>
Hypermatrix<S> evaluate_tree(const TernaryTree::Ptr& tree, const Hypermatrix<S>& base,
                             std::map<std::string, Hypermatrix<S>>* memo = nullptr) {
    if (tree->is_leaf()) return base;
    if (memo) {
        auto it = memo->find(tree->repr());
        if (it != memo->end()) return it->second;
    }
    std::vector<Hypermatrix<S>> ops;
    ops.reserve(3);
    for (const auto& k : tree->kids()) ops.push_back(evaluate_tree(k, base, memo));
    Hypermatrix<S> result = bm_product(ops);
    if (memo) memo->emplace(tree->repr(), result);
    return result;
}

/// First-formulation powers: every distinct parenthesization of each odd
/// degree <= max_degree, evaluated via the BM product, in canonical order
/// (degree ascending, then pre-order string).
template <class S>
std::vector<std::pair<TernaryTree::Ptr, Hypermatrix<S>>> enumerate_powers_first(
    const Hypermatrix<S>& a, std::size_t max_degree) {
    if (a.order() != 3 || !a.cubic())
        throw DimensionError("powers require a cubic order-3 hypermatrix");
    std::vector<std::pair<TernaryTree::Ptr, Hypermatrix<S>>> out;
    std::map<std::string, Hypermatrix<S>> memo;
    for (std::size_t d = 1; d <= max_degree; d += 2)
        for (const auto& tree : enumerate_trees(d))
            out.emplace_back(tree, evaluate_tree(tree, a, &memo));
    return out;
}

/// Second-formulation power sequence:
///   A^[0] = delta, A^[1] = A, A^[k+2] = general_bm_product((A,A,A); A^[k]).
template <class S>
std::vector<Hypermatrix<S>> power_sequence_second(const Hypermatrix<S>& a, std::size_t count,
                                                  Convention convention = Convention::Literal) {
    if (a.order() != 3 || !a.cubic())
        throw DimensionError("powers require a cubic order-3 hypermatrix");
    if (count < 1) throw DimensionError("count must be at least 1");
    std::vector<Hypermatrix<S>> seq;
    seq.reserve(count);
    seq.push_back(delta<S>(3, a.side(), scalar_one_like(a.entries().front())));
    if (count >= 2) seq.push_back(a);
    const std::vector<Hypermatrix<S>> ops{a, a, a};
    for (std::size_t k = 2; k < count; ++k)
        seq.push_back(general_bm_product(ops, seq[k - 2], convention));
    return seq;
}

template <class S>
std::vector<S> flatten(const Hypermatrix<S>& a) {
    return a.entries();  // already row-major, last index fastest
}

/// Rank, over the scalar field, of the span of the row-major flattenings.
/// Fraction-free elimination for the exact backend.
template <class S>
std::size_t span_dimension(const std::vector<Hypermatrix<S>>& terms) {
    if (terms.empty()) return 0;
    std::vector<std::vector<S>> rows;
    rows.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.dims() != terms[0].dims())
            throw DimensionError("span terms must share dimensions");
        rows.push_back(flatten(t));
    }
    return rank_rows(rows);
}

enum class Formulation { First, Second };

inline const char* formulation_name(Formulation f) {
    return f == Formulation::First ? "first" : "second";
}

/// Cayley-Hamilton coefficients: the scalars expressing the first linearly
/// dependent term of the canonical power sequence over its predecessors,
/// term_r = sum_{k<r} alpha_k term_k.
template <class S>
struct CoefficientVector {
    Formulation formulation;
    Convention convention;
    std::size_t r = 0;  // index of the expressed (first dependent) term
    std::vector<S> alphas;

    bool operator==(const CoefficientVector& o) const {
        return formulation == o.formulation && convention == o.convention && r == o.r &&
               alphas == o.alphas;
    }
};

namespace detail {

template <class S, class TermGen>
CoefficientVector<S> first_dependence(Formulation formulation, Convention convention,
                                      std::size_t hard_cap, TermGen&& next_term) {
    EchelonTracker<S> tracker;
    for (std::size_t k = 0; k < hard_cap; ++k) {
        auto dep = tracker.append(next_term(k));
        if (dep) return CoefficientVector<S>{formulation, convention, dep->index, dep->coefficients};
    }
    throw Error("no linear dependence found within the dimension bound");
}

}  // namespace detail

/// Cayley-Hamilton coefficient extraction for a cubic order-3 hypermatrix.
/// Terms are generated in canonical order until the first dependence:
///  - first formulation: degree classes ascending, canonical tree order;
///  - second formulation: the background power sequence A^[0], A^[1], ...
template <class S>
CoefficientVector<S> ch_coefficients(const Hypermatrix<S>& a, Formulation formulation,
                                     Convention convention = Convention::Literal) {
    if (a.order() != 3 || !a.cubic())
        throw DimensionError("ch_coefficients requires a cubic order-3 hypermatrix");
    const std::size_t n3 = a.side() * a.side() * a.side();

    if (formulation == Formulation::Second) {
        std::vector<Hypermatrix<S>> seq;
        const std::vector<Hypermatrix<S>> ops{a, a, a};
        auto gen = [&](std::size_t k) {
            if (k == 0)
                seq.push_back(delta<S>(3, a.side(), scalar_one_like(a.entries().front())));
            else if (k == 1)
                seq.push_back(a);
            else
                seq.push_back(general_bm_product(ops, seq[k - 2], convention));
            return flatten(seq.back());
        };
        return detail::first_dependence<S>(formulation, convention, n3 + 2, gen);
    }

    // First formulation: materialize degree classes lazily; the cumulative
    // count passes n^3 + 1 within a bounded degree, forcing a dependence.
    std::vector<Hypermatrix<S>> pending;
    std::map<std::string, Hypermatrix<S>> memo;
    std::size_t next_degree = 1;
    std::size_t generated = 0;
    auto gen = [&](std::size_t) {
        while (pending.empty()) {
            for (const auto& tree : enumerate_trees(next_degree))
                pending.push_back(evaluate_tree(tree, a, &memo));
            std::reverse(pending.begin(), pending.end());
            next_degree += 2;
        }
        ++generated;
        Hypermatrix<S> t = std::move(pending.back());
        pending.pop_back();
        return flatten(t);
    };
    return detail::first_dependence<S>(formulation, convention, n3 + 2, gen);
}

/// Classical analogue: minimal linear dependence among I, M, M^2, ... for a
/// square matrix M (order-2 hypermatrix). For generic M the coefficients
/// are the characteristic polynomial's.
template <class S>
CoefficientVector<S> matrix_ch_coefficients(const Hypermatrix<S>& m) {
    if (m.order() != 2 || !m.cubic()) throw DimensionError("expected a square matrix");
    const std::size_t n = m.side();
    Hypermatrix<S> current = delta<S>(2, n, scalar_one_like(m.entries().front()));
    auto matmul = [&](const Hypermatrix<S>& x) {
        Hypermatrix<S> y(x.dims(), scalar_zero_like(x.entries().front()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (scalar_is_zero(x(i, k))) continue;
                for (std::size_t j = 0; j < n; ++j) y(i, j) += x(i, k) * m(k, j);
            }
        return y;
    };
    auto gen = [&](std::size_t k) {
        if (k > 0) current = matmul(current);
        return flatten(current);
    };
    return detail::first_dependence<S>(Formulation::Second, Convention::Literal, n * n + 2, gen);
}

}  // namespace hyperalg
