#pragma once

#include <optional>
#include <vector>

#include "hyperalg/scalar.hpp"

namespace hyperalg {

/// Fraction-free (Bareiss) elimination rank of an integer matrix.
/// Pivot choice is the first nonzero entry in column order, so the
/// computation is fully deterministic. Consumes its argument.
inline std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t c2 = c + 1; c2 < cols; ++c2)
                m[i][c2] = (m[r][c] * m[i][c2] - m[i][c] * m[r][c2]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// Bareiss determinant of a square integer matrix.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t c2 = c + 1; c2 < n; ++c2)
                m[i][c2] = (m[c][c] * m[i][c2] - m[i][c] * m[c][c2]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Scales each rational row to integers (by its denominators' LCM); row
/// scaling leaves the row space, hence the rank, unchanged.
inline std::vector<Int> integerize_row(const std::vector<Rational>& row) {
    Int l = 1;
    for (const Rational& x : row) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<Int> out;
    out.reserve(row.size());
    for (const Rational& x : row) out.push_back(numerator(x) * (l / denominator(x)));
    return out;
}

inline std::size_t rank_rows(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(integerize_row(r));
    return bareiss_rank(std::move(m));
}

/// Standard Gaussian elimination rank over the prime field.
inline std::size_t rank_rows(const std::vector<std::vector<Fp>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Fp>> m = rows;
    const std::size_t nrows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t pivot = r;
        while (pivot < nrows && scalar_is_zero(m[pivot][c])) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[r], m[pivot]);
        const Fp inv = m[r][c].inv();
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (scalar_is_zero(m[i][c])) continue;
            const Fp f = m[i][c] * inv;
            for (std::size_t c2 = c; c2 < cols; ++c2) m[i][c2] -= f * m[r][c2];
        }
        ++r;
    }
    return r;
}

/// Incremental row-space tracker over an exact field. Rows are appended one
/// at a time; the first row that fails to grow the rank yields the exact
/// coefficients expressing it over the previously appended rows.
template <class S>
class EchelonTracker {
public:
    struct Dependence {
        std::size_t index;           // position of the first dependent row
        std::vector<S> coefficients; // row[index] = sum coefficients[k] * row[k]
    };

    std::size_t rank() const { return basis_.size(); }
    std::size_t appended() const { return appended_; }

    /// Appends a row. Returns the dependence if the row is in the span of
    /// the previous ones, otherwise nullopt.
    std::optional<Dependence> append(std::vector<S> row) {
        const std::size_t my_index = appended_++;
        std::vector<S> combo(my_index + 1, row.empty() ? S() : scalar_zero_like(row[0]));
        if (!combo.empty()) combo[my_index] = scalar_one_like(row[0]);
        for (const BasisRow& b : basis_) {
            if (scalar_is_zero(row[b.pivot])) continue;
            const S f = row[b.pivot] / b.row[b.pivot];
            for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * b.row[c];
            for (std::size_t c = 0; c < b.combo.size(); ++c) combo[c] -= f * b.combo[c];
        }
        std::size_t pivot = 0;
        while (pivot < row.size() && scalar_is_zero(row[pivot])) ++pivot;
        if (pivot == row.size()) {
            // combo[my_index] is 1 and row = sum_{k<my_index} (-combo[k]) row_k.
            std::vector<S> alphas(combo.begin(), combo.begin() + my_index);
            for (S& a : alphas) a = scalar_zero_like(a) - a;
            return Dependence{my_index, std::move(alphas)};
        }
        basis_.push_back(BasisRow{pivot, std::move(row), std::move(combo)});
        return std::nullopt;
    }

private:
    struct BasisRow {
        std::size_t pivot;
        std::vector<S> row;
        std::vector<S> combo;  // expression of `row` in the appended rows
    };
    std::vector<BasisRow> basis_;
    std::size_t appended_ = 0;
};

/// Characteristic polynomial of a square rational matrix by the
/// Faddeev-LeVerrier recurrence. Returns coefficients c_0..c_n of
/// c_0 + c_1 x + ... + c_n x^n with c_n = 1. Exact.
inline std::vector<Rational> char_poly(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = 1;
    if (n == 0) return coeff;
    auto matmul = [&](const std::vector<std::vector<Rational>>& a,
                      const std::vector<std::vector<Rational>>& b) {
        std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };
    std::vector<std::vector<Rational>> mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += mk[i][i];
        const Rational ck = -trace / Rational(static_cast<long>(k));
        coeff[n - k] = ck;
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) mk[i][i] += ck;
        mk = matmul(m, mk);
    }
    return coeff;
}

}  // namespace hyperalg
