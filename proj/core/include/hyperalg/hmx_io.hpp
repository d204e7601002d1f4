#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperalg/hypermatrix.hpp"

namespace hyperalg {

/// Runtime-backend hypermatrix, as read from an HMX file.
using AnyHypermatrix = std::variant<Hypermatrix<Rational>, Hypermatrix<Fp>>;

// HMX v1 text format (ASCII, LF line endings, canonical):
//   hmx 1
//   order <d>
//   dims <n1> ... <nd>
//   backend exact | backend modp <p>
//   then one scalar per line, row-major, last index fastest.

template <class S>
std::string serialize_hmx(const Hypermatrix<S>& a) {
    std::ostringstream out;
    out << "hmx 1\norder " << a.order() << "\ndims";
    for (std::size_t d : a.dims()) out << ' ' << d;
    out << "\nbackend ";
    if constexpr (std::is_same_v<S, Fp>) {
        out << "modp " << (a.size() ? a.entries().front().modulus() : Fp::default_modulus());
    } else {
        out << ScalarTraits<S>::backend_name;
    }
    out << '\n';
    for (const S& e : a.entries()) out << scalar_to_text(e) << '\n';
    return out.str();
}

inline std::string serialize_hmx(const AnyHypermatrix& a) {
    return std::visit([](const auto& h) { return serialize_hmx(h); }, a);
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::uint64_t parse_u64(std::string_view tok, std::size_t line, std::size_t col) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("expected unsigned integer, got '" + std::string(tok) + "'", line, col);
    return v;
}

}  // namespace detail

inline AnyHypermatrix parse_hmx(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    auto need = [&](std::size_t i) -> std::string_view {
        if (i >= lines.size()) throw ParseError("unexpected end of input", lines.size() + 1, 1);
        return lines[i];
    };

    if (need(0) != "hmx 1") throw ParseError("expected header 'hmx 1'", 1, 1);

    auto order_toks = detail::split_ws(need(1));
    if (order_toks.size() != 2 || order_toks[0] != "order")
        throw ParseError("expected 'order <d>'", 2, 1);
    const std::size_t order = detail::parse_u64(order_toks[1], 2, 7);
    if (order == 0) throw ParseError("order must be positive", 2, 7);

    auto dim_toks = detail::split_ws(need(2));
    if (dim_toks.size() != order + 1 || dim_toks[0] != "dims")
        throw ParseError("expected 'dims' with exactly " + std::to_string(order) + " sizes", 3, 1);
    std::vector<std::size_t> dims;
    std::size_t total = 1;
    for (std::size_t i = 1; i < dim_toks.size(); ++i) {
        std::size_t d = detail::parse_u64(dim_toks[i], 3, 6);
        if (d == 0) throw ParseError("dimension must be positive", 3, 6);
        dims.push_back(d);
        total *= d;
    }

    auto backend_toks = detail::split_ws(need(3));
    if (backend_toks.empty() || backend_toks[0] != "backend")
        throw ParseError("expected 'backend exact' or 'backend modp <p>'", 4, 1);

    if (4 + total < lines.size()) {
        // Trailing garbage after the entry block (a final empty line is ok).
        for (std::size_t i = 4 + total; i < lines.size(); ++i)
            if (!lines[i].empty())
                throw ParseError("entry count exceeds product of dims", i + 1, 1);
    }
    if (lines.size() < 4 + total)
        throw ParseError("entry count " + std::to_string(lines.size() - 4) +
                             " does not match product of dims " + std::to_string(total),
                         lines.size() + 1, 1);

    if (backend_toks.size() == 2 && backend_toks[1] == "exact") {
        std::vector<Rational> entries;
        entries.reserve(total);
        for (std::size_t i = 0; i < total; ++i)
            entries.push_back(rational_from_text(lines[4 + i], 5 + i, 1));
        return Hypermatrix<Rational>(dims, std::move(entries));
    }
    if (backend_toks.size() == 3 && backend_toks[1] == "modp") {
        const std::uint64_t p = detail::parse_u64(backend_toks[2], 4, 14);
        std::vector<Fp> entries;
        entries.reserve(total);
        for (std::size_t i = 0; i < total; ++i) {
            std::string_view tok = lines[4 + i];
            std::uint64_t v = detail::parse_u64(tok, 5 + i, 1);
            if (v >= p) throw ParseError("residue not reduced mod " + std::to_string(p), 5 + i, 1);
            entries.push_back(Fp::from_residue(v, p));
        }
        return Hypermatrix<Fp>(dims, std::move(entries));
    }
    throw ParseError("unknown backend line", 4, 9);
}

}  // namespace hyperalg
