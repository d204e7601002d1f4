#pragma once

#include <array>
#include <map>
#include <string>

#include "hyperalg/power.hpp"

namespace hyperalg {

/// Which of the three degree-5 parenthesizations a two-tetrahedron gluing
/// count refers to: the nested cube sits in the first, second or third
/// operand slot. The variants glue at a blue (r,w1,b), red (r,g,w1) or
/// green (w1,g,b) face respectively.
enum class GluingVariant { FirstSlot, SecondSlot, ThirdSlot };

/// Vertex-colored directed tripartite 3-uniform weighted hypergraph in
/// bijection with an order-3 hypermatrix: the (R_i, G_j, B_k) hyperedge
/// carries weight a_{i,j,k}. Sparse storage; absent triple means weight 0.
template <class S>
class KoenigHypergraph {
public:
    using Edge = std::array<std::size_t, 3>;

    KoenigHypergraph(std::size_t reds, std::size_t greens, std::size_t blues)
        : reds_(reds), greens_(greens), blues_(blues) {}

    std::size_t reds() const { return reds_; }
    std::size_t greens() const { return greens_; }
    std::size_t blues() const { return blues_; }
    const std::map<Edge, S>& weights() const { return weights_; }

    void set_weight(std::size_t r, std::size_t g, std::size_t b, S w) {
        if (r >= reds_ || g >= greens_ || b >= blues_)
            throw DimensionError("hyperedge vertex index out of range");
        if (scalar_is_zero(w))
            weights_.erase(Edge{r, g, b});
        else
            weights_.insert_or_assign(Edge{r, g, b}, std::move(w));
    }

    S weight(std::size_t r, std::size_t g, std::size_t b) const {
        auto it = weights_.find(Edge{r, g, b});
        return it == weights_.end() ? S() - S() : it->second;
    }

    bool operator==(const KoenigHypergraph& o) const {
        return reds_ == o.reds_ && greens_ == o.greens_ && blues_ == o.blues_ &&
               weights_ == o.weights_;
    }

private:
    std::size_t reds_, greens_, blues_;
    std::map<Edge, S> weights_;
};

template <class S>
KoenigHypergraph<S> from_hypermatrix(const Hypermatrix<S>& a) {
    if (a.order() != 3) throw DimensionError("Koenig hypergraph requires an order-3 hypermatrix");
    KoenigHypergraph<S> h(a.dim(0), a.dim(1), a.dim(2));
    for (std::size_t i = 0; i < a.dim(0); ++i)
        for (std::size_t j = 0; j < a.dim(1); ++j)
            for (std::size_t k = 0; k < a.dim(2); ++k)
                if (!scalar_is_zero(a(i, j, k))) h.set_weight(i, j, k, a(i, j, k));
    return h;
}

template <class S>
Hypermatrix<S> to_hypermatrix(const KoenigHypergraph<S>& h, const S& exemplar = S()) {
    Hypermatrix<S> a({h.reds(), h.greens(), h.blues()}, scalar_zero_like(exemplar));
    for (const auto& [e, w] : h.weights()) a(e[0], e[1], e[2]) = w;
    return a;
}

/// Hypergraph composition by the vertex identification scheme: red vertices
/// of H1 and H2 identified, green of H2 and H3, blue of H1 and H3, and the
/// remaining t vertices of each (H1 green, H2 blue, H3 red) merged into
/// white vertices that are summed out:
///   weight(R_r, G_g, B_b) = sum_w a1_{r,w,b} a2_{r,g,w} a3_{w,g,b}.
/// Implemented directly on the sparse weight maps; deliberately does not
/// call the dense BM product kernel, so the two paths cross-check.
template <class S>
KoenigHypergraph<S> compose(const KoenigHypergraph<S>& h1, const KoenigHypergraph<S>& h2,
                            const KoenigHypergraph<S>& h3) {
    if (h1.reds() != h2.reds())
        throw DimensionError("red vertex counts of the first and second hypergraphs differ");
    if (h2.greens() != h3.greens())
        throw DimensionError("green vertex counts of the second and third hypergraphs differ");
    if (h1.blues() != h3.blues())
        throw DimensionError("blue vertex counts of the first and third hypergraphs differ");
    const std::size_t t = h1.greens();
    if (h2.blues() != t || h3.reds() != t)
        throw DimensionError("white vertex counts do not agree across the three hypergraphs");

    KoenigHypergraph<S> out(h1.reds(), h2.greens(), h1.blues());
    // Iterate the sparse edges of H1; (r, w, b) fixes the white vertex.
    std::map<typename KoenigHypergraph<S>::Edge, S> acc;
    for (const auto& [e1, w1] : h1.weights()) {
        const std::size_t r = e1[0], w = e1[1], b = e1[2];
        for (std::size_t g = 0; g < h2.greens(); ++g) {
            const S w2 = h2.weight(r, g, w);
            if (scalar_is_zero(w2)) continue;
            const S w3 = h3.weight(w, g, b);
            if (scalar_is_zero(w3)) continue;
            const S term = w1 * w2 * w3;
            auto [it, inserted] = acc.try_emplace({r, g, b}, term);
            if (!inserted) it->second += term;
        }
    }
    for (auto& [e, w] : acc) out.set_weight(e[0], e[1], e[2], w);
    return out;
}

namespace detail {

template <class S>
void require_binary_cubic(const Hypermatrix<S>& a) {
    if (a.order() != 3 || !a.cubic())
        throw DimensionError("counting requires a cubic order-3 hypermatrix");
    const S one = scalar_one_like(a.entries().front());
    for (const S& e : a.entries())
        if (!scalar_is_zero(e) && e != one)
            throw DimensionError("counting requires binary (0/1) entries");
}

inline Int to_count(const Rational& r) { return numerator(r); }
inline Int to_count(const Fp& f) { return Int(f.residue()); }

}  // namespace detail

/// Number of tetrahedra constructible from the hyperedges of H(A):
/// the sum of [Prod(A,A,A)]_{r,g,b} over strictly increasing triples.
template <class S>
Int count_tetrahedra(const Hypermatrix<S>& a) {
    detail::require_binary_cubic(a);
    const Hypermatrix<S> cube = bm_product(std::vector<Hypermatrix<S>>{a, a, a});
    const std::size_t n = a.side();
    Int total = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t g = r + 1; g < n; ++g)
            for (std::size_t b = g + 1; b < n; ++b) total += detail::to_count(cube(r, g, b));
    return total;
}

/// Number of two-tetrahedron complexes glued at the variant's face type,
/// i.e. the (r,g,b) entry of the corresponding degree-5 composition.
template <class S>
Int count_glued(const Hypermatrix<S>& a, GluingVariant variant, std::size_t r, std::size_t g,
                std::size_t b) {
    detail::require_binary_cubic(a);
    const std::size_t n = a.side();
    if (r >= n || g >= n || b >= n) throw DimensionError("entry index out of range");
    const Hypermatrix<S> cube = bm_product(std::vector<Hypermatrix<S>>{a, a, a});
    std::vector<Hypermatrix<S>> ops;
    switch (variant) {
        case GluingVariant::FirstSlot: ops = {cube, a, a}; break;
        case GluingVariant::SecondSlot: ops = {a, cube, a}; break;
        case GluingVariant::ThirdSlot: ops = {a, a, cube}; break;
    }
    return detail::to_count(bm_product(ops)(r, g, b));
}

/// k-tetrahedral complex count spanning (r,g,b): the entry of the canonical
/// second-formulation sequence term indexed k+1, so k = 1 is the plain cube
/// (a single interior vertex).
template <class S>
Int count_k_complexes(const Hypermatrix<S>& a, std::size_t k, std::size_t r, std::size_t g,
                      std::size_t b, Convention convention = Convention::Literal) {
    detail::require_binary_cubic(a);
    const std::size_t n = a.side();
    if (k < 1) throw DimensionError("k must be at least 1");
    if (r >= n || g >= n || b >= n) throw DimensionError("entry index out of range");
    if (k + 2 > n * n * n + 2) throw DimensionError("k exceeds the generated sequence bound");
    const auto seq = power_sequence_second(a, k + 2, convention);
    return detail::to_count(seq[k + 1](r, g, b));
}

}  // namespace hyperalg
