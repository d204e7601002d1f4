#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "hyperalg/error.hpp"
#include "hyperalg/scalar.hpp"

namespace hyperalg {

/// Dense order-d hypermatrix over scalar S, row-major with the last index
/// varying fastest. Immutable by convention after it leaves the builder.
template <class S>
class Hypermatrix {
public:
    using value_type = S;

    Hypermatrix(std::vector<std::size_t> dims, const S& fill = ScalarTraits<S>::zero())
        : dims_(std::move(dims)) {
        if (dims_.empty()) throw DimensionError("hypermatrix needs at least one dimension");
        std::size_t total = 1;
        for (std::size_t d : dims_) {
            if (d == 0) throw DimensionError("hypermatrix dimensions must be positive");
            total *= d;
        }
        entries_.assign(total, fill);
    }

    Hypermatrix(std::vector<std::size_t> dims, std::vector<S> entries)
        : dims_(std::move(dims)), entries_(std::move(entries)) {
        std::size_t total = 1;
        for (std::size_t d : dims_) total *= d;
        if (dims_.empty() || total != entries_.size())
            throw DimensionError("entry count does not match dimensions");
    }

    std::size_t order() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t axis) const { return dims_[axis]; }
    std::size_t size() const { return entries_.size(); }

    bool cubic() const {
        for (std::size_t d : dims_)
            if (d != dims_[0]) return false;
        return true;
    }
    /// Side length; only meaningful for cubic hypermatrices.
    std::size_t side() const { return dims_[0]; }

    std::size_t flat_index(std::span<const std::size_t> idx) const {
        std::size_t f = 0;
        for (std::size_t a = 0; a < dims_.size(); ++a) {
            if (idx[a] >= dims_[a]) throw DimensionError("index out of range");
            f = f * dims_[a] + idx[a];
        }
        return f;
    }

    const S& at(std::span<const std::size_t> idx) const { return entries_[flat_index(idx)]; }
    S& at(std::span<const std::size_t> idx) { return entries_[flat_index(idx)]; }

    const S& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t idx[] = {i, j, k};
        return at(idx);
    }
    S& operator()(std::size_t i, std::size_t j, std::size_t k) {
        const std::size_t idx[] = {i, j, k};
        return at(idx);
    }
    const S& operator()(std::size_t i, std::size_t j) const {
        const std::size_t idx[] = {i, j};
        return at(idx);
    }
    S& operator()(std::size_t i, std::size_t j) {
        const std::size_t idx[] = {i, j};
        return at(idx);
    }

    const std::vector<S>& entries() const { return entries_; }
    std::vector<S>& entries() { return entries_; }

    bool operator==(const Hypermatrix& o) const {
        return dims_ == o.dims_ && entries_ == o.entries_;
    }
    bool operator!=(const Hypermatrix& o) const { return !(*this == o); }

    /// Row-column slice of an order-3 hypermatrix at depth k: the matrix A[:,:,k].
    Hypermatrix slice_rc(std::size_t depth) const {
        if (order() != 3) throw DimensionError("row-column slice requires order 3");
        Hypermatrix m({dims_[0], dims_[1]});
        for (std::size_t i = 0; i < dims_[0]; ++i)
            for (std::size_t j = 0; j < dims_[1]; ++j) m(i, j) = (*this)(i, j, depth);
        return m;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<S> entries_;
};

/// Kronecker delta hypermatrix: 1 where all indices agree, 0 elsewhere.
/// Order 2 gives the identity matrix. `one` fixes the backend (and modulus).
template <class S>
Hypermatrix<S> delta(std::size_t order, std::size_t side, const S& one = ScalarTraits<S>::one()) {
    if (order < 2) throw DimensionError("delta requires order >= 2");
    if (side < 1) throw DimensionError("delta requires side >= 1");
    Hypermatrix<S> d(std::vector<std::size_t>(order, side), one - one);
    std::vector<std::size_t> idx(order);
    for (std::size_t i = 0; i < side; ++i) {
        std::fill(idx.begin(), idx.end(), i);
        d.at(idx) = one;
    }
    return d;
}

/// Simultaneous relabeling of all three axes of a cubic order-3 hypermatrix:
/// result b_{i,j,k} = a_{sigma(i),sigma(j),sigma(k)}.
template <class S>
Hypermatrix<S> permute_indices(const Hypermatrix<S>& a, const std::vector<std::size_t>& sigma) {
    if (a.order() != 3 || !a.cubic())
        throw DimensionError("permute_indices requires a cubic order-3 hypermatrix");
    const std::size_t n = a.side();
    if (sigma.size() != n) throw DimensionError("permutation size does not match side length");
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v >= n || seen[v]) throw DimensionError("permutation is not a bijection");
        seen[v] = true;
    }
    Hypermatrix<S> b(a.dims());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) b(i, j, k) = a(sigma[i], sigma[j], sigma[k]);
    return b;
}

/// Convenience builder for order-3 hypermatrices from row-column slices:
/// slices[k][i][j] = a_{i,j,k}, matching the way witnesses are written down.
template <class S = Rational>
Hypermatrix<S> from_slices(const std::vector<std::vector<std::vector<std::int64_t>>>& slices) {
    const std::size_t n = slices.size();
    Hypermatrix<S> a({n, n, n});
    for (std::size_t k = 0; k < n; ++k) {
        if (slices[k].size() != n) throw DimensionError("slice row count mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (slices[k][i].size() != n) throw DimensionError("slice column count mismatch");
            for (std::size_t j = 0; j < n; ++j)
                a(i, j, k) = ScalarTraits<S>::from_int(slices[k][i][j]);
        }
    }
    return a;
}

}  // namespace hyperalg
