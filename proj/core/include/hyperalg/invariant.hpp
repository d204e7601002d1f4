#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "hyperalg/graph.hpp"

namespace hyperalg {

/// The permutation-invariant payload computed from a graph's inflation:
/// rank of the power span plus the Cayley-Hamilton coefficients, with
/// enough settings metadata to make cross-run comparison sound.
struct InvariantReport {
    std::string graph_id;
    InflationSemantics semantics = InflationSemantics::Walks;
    Formulation formulation = Formulation::Second;
    Convention convention = Convention::Literal;
    std::string backend;  // "exact" or "modp <p>"
    std::size_t r = 0;               // span dimension of the full canonical term set
    std::size_t dependent_term = 0;  // index of the first dependent term
    std::vector<std::string> alphas; // canonical scalar strings of the first dependence
    double elapsed_ms = 0.0;

    bool comparable_with(const InvariantReport& o) const {
        return semantics == o.semantics && formulation == o.formulation &&
               convention == o.convention && backend == o.backend;
    }
    bool same_invariant(const InvariantReport& o) const {
        if (!comparable_with(o)) throw Error("invariant reports computed under different settings");
        // Rank first (cheap), then the coefficient payload.
        return r == o.r && dependent_term == o.dependent_term && alphas == o.alphas;
    }
};

/// The canonical term set the invariant is computed over. For the second
/// formulation: sequence terms 0..n^3 (one past the span bound, so a
/// dependence always exists inside the set). For the first formulation:
/// whole degree classes ascending until the cumulative count passes n^3 + 1.
template <class S>
std::vector<Hypermatrix<S>> invariant_term_set(const Hypermatrix<S>& a, Formulation formulation,
                                               Convention convention) {
    const std::size_t n3 = a.side() * a.side() * a.side();
    if (formulation == Formulation::Second) return power_sequence_second(a, n3 + 2, convention);
    std::vector<Hypermatrix<S>> terms;
    std::map<std::string, Hypermatrix<S>> memo;
    for (std::size_t d = 1; terms.size() < n3 + 2; d += 2)
        for (const auto& tree : enumerate_trees(d)) terms.push_back(evaluate_tree(tree, a, &memo));
    return terms;
}

template <class S>
InvariantReport hypergraph_invariant(const Graph& g, std::string graph_id,
                                     InflationSemantics semantics = InflationSemantics::Walks,
                                     Formulation formulation = Formulation::Second,
                                     Convention convention = Convention::Literal,
                                     const S& one = ScalarTraits<S>::one()) {
    const auto start = std::chrono::steady_clock::now();
    const Hypermatrix<S> a = inflate<S>(g, semantics, one);
    const std::vector<Hypermatrix<S>> terms = invariant_term_set(a, formulation, convention);

    InvariantReport rep;
    rep.graph_id = std::move(graph_id);
    rep.semantics = semantics;
    rep.formulation = formulation;
    rep.convention = convention;
    if constexpr (std::is_same_v<S, Fp>) {
        rep.backend = "modp " + std::to_string(one.modulus());
    } else {
        rep.backend = "exact";
    }
    rep.r = span_dimension(terms);
    EchelonTracker<S> tracker;
    for (const auto& t : terms) {
        auto dep = tracker.append(flatten(t));
        if (dep) {
            rep.dependent_term = dep->index;
            rep.alphas.reserve(dep->coefficients.size());
            for (const S& alpha : dep->coefficients) rep.alphas.push_back(scalar_to_text(alpha));
            break;
        }
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

enum class Verdict { SameInvariant, DifferentInvariant, NotCospectral };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SameInvariant: return "same-invariant";
        case Verdict::DifferentInvariant: return "different-invariant";
        default: return "not-cospectral";
    }
}

struct DistinguishResult {
    Verdict verdict;
    InvariantReport report1;
    InvariantReport report2;
};

/// Full distinguishing pipeline: exact cospectrality gate, then invariant
/// comparison under identical settings on both graphs.
template <class S>
DistinguishResult distinguish(const Graph& g1, const Graph& g2,
                              InflationSemantics semantics = InflationSemantics::Walks,
                              Formulation formulation = Formulation::Second,
                              Convention convention = Convention::Literal,
                              const S& one = ScalarTraits<S>::one()) {
    DistinguishResult res;
    if (!cospectral(g1, g2)) {
        res.verdict = Verdict::NotCospectral;
        return res;
    }
    res.report1 = hypergraph_invariant<S>(g1, "G1", semantics, formulation, convention, one);
    res.report2 = hypergraph_invariant<S>(g2, "G2", semantics, formulation, convention, one);
    res.verdict = res.report1.same_invariant(res.report2) ? Verdict::SameInvariant
                                                          : Verdict::DifferentInvariant;
    return res;
}

}  // namespace hyperalg
