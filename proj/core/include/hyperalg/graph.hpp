#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/linalg.hpp"
#include "hyperalg/power.hpp"

namespace hyperalg {

enum class GraphFormat { EdgeList, Graph6 };
enum class InflationSemantics { Walks, Paths };

inline const char* semantics_name(InflationSemantics s) {
    return s == InflationSemantics::Walks ? "walks" : "paths";
}

/// Simple directed graph on 0-based vertices. Undirected inputs are stored
/// symmetrized (each undirected edge becomes two directed edges).
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n) {}

    std::size_t vertex_count() const { return n_; }
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    bool has_edge(std::size_t u, std::size_t v) const { return edges_.count({u, v}) > 0; }

    /// Returns false if the edge was already present (duplicate).
    bool add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_) throw DimensionError("vertex index out of range");
        return edges_.insert({u, v}).second;
    }

    std::vector<std::vector<Rational>> adjacency() const {
        std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_, Rational(0)));
        for (const auto& [u, v] : edges_) m[u][v] = 1;
        return m;
    }

    Graph relabeled(const std::vector<std::size_t>& sigma) const {
        if (sigma.size() != n_) throw DimensionError("permutation size mismatch");
        Graph g(n_);
        for (const auto& [u, v] : edges_) g.add_edge(sigma[u], sigma[v]);
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    std::size_t n_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Edge list: one `u v` pair per line, `#` comments and blank lines skipped.
/// `undirected` adds both directions. Duplicate edges are reported via
/// `warnings`, not treated as errors.
/// `min_vertices` forces trailing isolated vertices that no edge mentions.
inline Graph load_edgelist(const std::string& text, bool undirected = false,
                           std::vector<std::string>* warnings = nullptr,
                           std::size_t min_vertices = 0) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t max_v = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v)) throw ParseError("expected 'u v' edge pair", lineno, 1);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", lineno, 1);
        if (u < 0 || v < 0) throw ParseError("negative vertex index", lineno, 1);
        pairs.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        max_v = std::max({max_v, pairs.back().first, pairs.back().second});
    }
    Graph g(std::max(pairs.empty() ? std::size_t{1} : max_v + 1, min_vertices));
    for (const auto& [u, v] : pairs) {
        bool fresh = g.add_edge(u, v);
        if (undirected) fresh = g.add_edge(v, u) || fresh;
        if (!fresh && warnings)
            warnings->push_back("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    return g;
}

// graph6: the standard ASCII encoding of undirected simple graphs. The
// upper triangle is serialized column-major (pairs (i,j), i<j, j ascending)
// in big-endian 6-bit groups offset by 63.

inline Graph parse_graph6(const std::string& line) {
    std::size_t pos = 0;
    auto byte = [&](std::size_t at) -> std::size_t {
        if (at >= line.size()) throw ParseError("graph6 string truncated", 1, at + 1);
        const char c = line[at];
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1, at + 1);
        return static_cast<std::size_t>(c - 63);
    };
    std::size_t n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (byte(1) == 63)
            throw ParseError("graph6 sizes above 258047 are not supported", 1, 2);
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    const std::size_t nbits = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != pos + nbytes)
        throw ParseError("graph6 body length mismatch", 1, line.size() + 1);
    Graph g(n == 0 ? 1 : n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const std::size_t b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) {
                g.add_edge(i, j);
                g.add_edge(j, i);
            }
        }
    return g;
}

/// Canonical graph6 encoding of the symmetric part of a graph. The graph
/// must be symmetric and loop-free (graph6 encodes simple undirected graphs).
inline std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
        if (u == v) throw DimensionError("graph6 cannot encode self-loops");
        if (!g.has_edge(v, u)) throw DimensionError("graph6 requires a symmetric edge set");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>((n >> 12) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::size_t acc = 0, nb = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

inline Graph load_graph(const std::string& text, GraphFormat format, bool undirected = false,
                        std::vector<std::string>* warnings = nullptr,
                        std::size_t min_vertices = 0) {
    if (format == GraphFormat::Graph6) {
        std::string line = text;
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return parse_graph6(line);
    }
    return load_edgelist(text, undirected, warnings, min_vertices);
}

/// Exact characteristic polynomial of the adjacency matrix,
/// coefficients c_0..c_n of c_0 + ... + c_n x^n (monic).
inline std::vector<Rational> adjacency_char_poly(const Graph& g) {
    return char_poly(g.adjacency());
}

/// True iff the adjacency characteristic polynomials agree exactly.
inline bool cospectral(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    return adjacency_char_poly(g1) == adjacency_char_poly(g2);
}

/// Checks the shifted walk-count relation: with {alpha_k} the monic
/// degree-(n+1) relation from the shared characteristic polynomial
/// (alpha_{n+1} = 1, alpha_k = c_{k-1}),
///   sum_{0<k<=n+1} alpha_k A^{tau+k} = 0
/// must hold for both adjacency matrices. Non-cospectral pairs fail fast.
inline bool shifted_walk_relation(const Graph& g1, const Graph& g2, std::size_t tau) {
    if (!cospectral(g1, g2)) return false;
    const std::size_t n = g1.vertex_count();
    const std::vector<Rational> cp = adjacency_char_poly(g1);  // c_0..c_n, c_n = 1
    auto annihilates = [&](const Graph& g) {
        const auto m = g.adjacency();
        auto matmul = [&](const std::vector<std::vector<Rational>>& a) {
            std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    if (a[i][k] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * m[k][j];
                }
            return c;
        };
        // power = A^{tau+1} to start
        std::vector<std::vector<Rational>> power = m;
        for (std::size_t t = 0; t < tau; ++t) power = matmul(power);
        std::vector<std::vector<Rational>> acc(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const Rational alpha = k == n + 1 ? Rational(1) : cp[k - 1];
            if (alpha != 0)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) acc[i][j] += alpha * power[i][j];
            if (k <= n) power = matmul(power);
        }
        for (const auto& row : acc)
            for (const Rational& x : row)
                if (x != 0) return false;
        return true;
    };
    return annihilates(g1) && annihilates(g2);
}

/// Path adjacency hypermatrix inflation: a_{r,g,b} = 1 iff r->g and g->b
/// are edges; `paths` semantics additionally requires r, g, b pairwise
/// distinct.
template <class S = Rational>
Hypermatrix<S> inflate(const Graph& g, InflationSemantics semantics = InflationSemantics::Walks,
                       const S& one = ScalarTraits<S>::one()) {
    const std::size_t n = g.vertex_count();
    Hypermatrix<S> a({n, n, n}, one - one);
    for (const auto& [r, mid] : g.edges())
        for (std::size_t b = 0; b < n; ++b) {
            if (!g.has_edge(mid, b)) continue;
            if (semantics == InflationSemantics::Paths && (r == mid || mid == b || r == b)) continue;
            a(r, mid, b) = one;
        }
    return a;
}

}  // namespace hyperalg
