#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqp/field.hpp"
#include "eqp/matrix.hpp"

namespace eqp {

template <class F>
using FMatrix = Matrix<typename F::value_type>;

template <class F>
using FVector = std::vector<typename F::value_type>;

// Reduced row echelon form; only the nonzero rows are kept.
template <class F>
struct Echelon {
    FMatrix<F> rref;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> row_reduce(const F& f, FMatrix<F> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && f.is_zero(m(p, c)))
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(p, r);
        auto inv = f.inv(m(r, c));
        auto* pr = m.row(r);
        for (std::size_t j = c; j < cols; ++j)
            pr[j] = f.mul(pr[j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m(i, c)))
                continue;
            auto factor = m(i, c);
            auto* pi = m.row(i);
            for (std::size_t j = c; j < cols; ++j)
                if (!f.is_zero(pr[j]))
                    f.sub_mul(pi[j], factor, pr[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return {std::move(m), std::move(pivots)};
}

// Rank by forward elimination only.
template <class F>
std::size_t rank(const F& f, FMatrix<F> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && f.is_zero(m(p, c)))
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(p, r);
        auto inv = f.inv(m(r, c));
        auto* pr = m.row(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (f.is_zero(m(i, c)))
                continue;
            auto factor = f.mul(m(i, c), inv);
            auto* pi = m.row(i);
            for (std::size_t j = c; j < cols; ++j)
                if (!f.is_zero(pr[j]))
                    f.sub_mul(pi[j], factor, pr[j]);
        }
        ++r;
    }
    return r;
}

// Fraction-free (Bareiss) rank over the rationals.
std::size_t bareiss_rank(Matrix<Integer> m);
std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<Integer>& m);

Matrix<PrimeField::value_type> reduce_mod(const PrimeField& f, const Matrix<Integer>& m);
Matrix<PrimeField::value_type> reduce_mod(const PrimeField& f, const Matrix<Rational>& m);
Matrix<Rational> to_rational(const Matrix<Integer>& m);

template <class F>
FMatrix<F> multiply(const F& f, const FMatrix<F>& a, const FMatrix<F>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    FMatrix<F> c(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k)))
                continue;
            auto aik = a(i, k);
            const auto* bk = b.row(k);
            auto* ci = c.row(i);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!f.is_zero(bk[j]))
                    ci[j] = f.add(ci[j], f.mul(aik, bk[j]));
        }
    return c;
}

template <class F>
FVector<F> apply(const F& f, const FMatrix<F>& a, const FVector<F>& x)
{
    if (a.cols() != x.size())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    FVector<F> y(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a(i, j)) && !f.is_zero(x[j]))
                y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
    return y;
}

// Linear subspace of F^n held as a canonical RREF basis.
template <class F>
class Subspace {
public:
    Subspace() = default;
    Subspace(const F& f, std::size_t ambient_dim) : field_(f), ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace span(const F& f, const FMatrix<F>& rows)
    {
        Subspace s(f, rows.cols());
        auto e = row_reduce(f, rows);
        s.basis_ = std::move(e.rref);
        s.pivots_ = std::move(e.pivots);
        return s;
    }

    static Subspace span(const F& f, std::size_t ambient_dim, const std::vector<FVector<F>>& vectors)
    {
        FMatrix<F> m(0, ambient_dim);
        for (auto& v : vectors)
            m.append_row(v);
        return span(f, m);
    }

    const F& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return pivots_.size(); }
    const FMatrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coordinates with respect to the RREF basis, if v lies in the span.
    std::optional<FVector<F>> coordinates(const FVector<F>& v) const
    {
        if (v.size() != ambient_dim_)
            throw std::invalid_argument("vector dimension mismatch");
        FVector<F> coords(dim(), field_.zero());
        FVector<F> rest = v;
        for (std::size_t r = 0; r < dim(); ++r) {
            auto c = rest[pivots_[r]];
            coords[r] = c;
            if (field_.is_zero(c))
                continue;
            const auto* br = basis_.row(r);
            for (std::size_t j = 0; j < ambient_dim_; ++j)
                if (!field_.is_zero(br[j]))
                    field_.sub_mul(rest[j], c, br[j]);
        }
        for (auto& x : rest)
            if (!field_.is_zero(x))
                return std::nullopt;
        return coords;
    }

    bool contains(const FVector<F>& v) const { return coordinates(v).has_value(); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }

private:
    F field_{};
    std::size_t ambient_dim_ = 0;
    FMatrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

// Right kernel {x : m x = 0}.
template <class F>
Subspace<F> kernel(const F& f, const FMatrix<F>& m)
{
    auto e = row_reduce(f, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    FMatrix<F> k(0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        FVector<F> v(n, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.rank(); ++r)
            v[e.pivots[r]] = f.neg(e.rref(r, free));
        k.append_row(v);
    }
    if (k.rows() == 0)
        return Subspace<F>(f, n);
    return Subspace<F>::span(f, k);
}

// Left kernel {y : y m = 0}.
template <class F>
Subspace<F> left_kernel(const F& f, const FMatrix<F>& m)
{
    return kernel(f, m.transpose());
}

// Column span.
template <class F>
Subspace<F> image(const F& f, const FMatrix<F>& m)
{
    return Subspace<F>::span(f, m.transpose());
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    const F& f = a.field();
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace<F>(f, n);
    FMatrix<F> stacked(a.dim() + b.dim(), n, f.zero());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            stacked(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            stacked(a.dim() + i, j) = f.neg(b.basis()(i, j));
    auto lk = left_kernel(f, stacked);
    FMatrix<F> rows(lk.dim(), n, f.zero());
    for (std::size_t r = 0; r < lk.dim(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            auto y = lk.basis()(r, i);
            if (f.is_zero(y))
                continue;
            for (std::size_t j = 0; j < n; ++j)
                rows(r, j) = f.add(rows(r, j), f.mul(y, a.basis()(i, j)));
        }
    if (rows.rows() == 0)
        return Subspace<F>(f, n);
    return Subspace<F>::span(f, rows);
}

template <class F>
bool contains(const Subspace<F>& s, const FVector<F>& v)
{
    return s.contains(v);
}

// Some solution x of m x = rhs, if any.
template <class F>
std::optional<FVector<F>> solve(const F& f, const FMatrix<F>& m, const FVector<F>& rhs)
{
    if (rhs.size() != m.rows())
        throw std::invalid_argument("right-hand side dimension mismatch");
    FMatrix<F> aug(m.rows(), m.cols() + 1, f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto e = row_reduce(f, aug);
    FVector<F> x(m.cols(), f.zero());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] == m.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.rref(r, m.cols());
    }
    return x;
}

template <class F>
FMatrix<F> inverse(const F& f, const FMatrix<F>& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("inverse of a non-square matrix");
    FMatrix<F> aug(n, 2 * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto e = row_reduce(f, aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        throw std::domain_error("matrix is singular");
    FMatrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.rref(i, n + j);
    return inv;
}

// Echelon basis grown one vector at a time; used for rank accumulation.
template <class F>
class IncrementalEchelon {
public:
    IncrementalEchelon(const F& f, std::size_t n) : f_(f), n_(n) {}

    // Returns true if v increased the rank.
    bool add(FVector<F> v)
    {
        if (!reduce(v))
            return false;
        std::size_t p = 0;
        while (f_.is_zero(v[p]))
            ++p;
        auto inv = f_.inv(v[p]);
        for (std::size_t j = p; j < n_; ++j)
            v[j] = f_.mul(v[j], inv);
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        auto pos = it - pivots_.begin();
        pivots_.insert(it, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    // Reduces v in place; returns whether anything is left.
    bool reduce(FVector<F>& v) const
    {
        if (v.size() != n_)
            throw std::invalid_argument("vector dimension mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto c = v[pivots_[r]];
            if (f_.is_zero(c))
                continue;
            const auto& row = rows_[r];
            for (std::size_t j = pivots_[r]; j < n_; ++j)
                if (!f_.is_zero(row[j]))
                    f_.sub_mul(v[j], c, row[j]);
        }
        for (auto& x : v)
            if (!f_.is_zero(x))
                return true;
        return false;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return n_; }
    const std::vector<FVector<F>>& rows() const { return rows_; }

private:
    F f_;
    std::size_t n_;
    std::vector<std::size_t> pivots_;
    std::vector<FVector<F>> rows_;
};

}  // namespace eqp
