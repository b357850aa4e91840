#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eqp/linalg.hpp"
#include "eqp/sparse.hpp"

namespace eqp {

// Half-spin module realized on even or odd exterior powers of E = <e_1..e_n>.
// Basis e_I in degree-then-lex order; I is stored as a bitmask with bit i-1
// standing for e_i.
struct SpinModule {
    int n = 0;
    bool even = true;
    std::vector<std::uint32_t> masks;
    std::vector<int> index;  // mask -> position, -1 if wrong parity
    std::vector<std::string> labels;

    std::size_t dim() const { return masks.size(); }
};

struct SpinSpace {
    int n = 0;
    SpinModule plus, minus;
    // W = E + F with basis e_1..e_n, f_1..f_n
    std::vector<std::string> w_labels;
};

const SpinSpace& spin_space(int n);

// All subsets of {1..n} in degree-then-lex order.
std::vector<std::uint32_t> subsets_degree_lex(int n);
std::string subset_label(std::uint32_t mask);

inline int below(std::uint32_t mask, int i) { return std::popcount(mask & ((1u << i) - 1u)); }

// w . s for w in W (length 2n) and s in Lambda E (length 2^n, indexed by mask).
template <class F>
FVector<F> clifford_action(const F& f, int n, const FVector<F>& w, const FVector<F>& s)
{
    const std::uint32_t full = 1u << n;
    if (w.size() != static_cast<std::size_t>(2 * n) || s.size() != full)
        throw std::invalid_argument("clifford_action dimension mismatch");
    FVector<F> out(full, f.zero());
    for (std::uint32_t m = 0; m < full; ++m) {
        if (f.is_zero(s[m]))
            continue;
        for (int i = 0; i < n; ++i) {
            const std::uint32_t bit = 1u << i;
            const bool odd = below(m, i) % 2;
            if (!f.is_zero(w[i]) && !(m & bit)) {
                auto c = f.mul(w[i], s[m]);
                out[m | bit] = odd ? f.sub(out[m | bit], c) : f.add(out[m | bit], c);
            }
            if (!f.is_zero(w[n + i]) && (m & bit)) {
                auto c = f.mul(w[n + i], s[m]);
                out[m ^ bit] = odd ? f.sub(out[m ^ bit], c) : f.add(out[m ^ bit], c);
            }
        }
    }
    return out;
}

template <class F>
FVector<F> clifford_basis_action(const F& f, int n, int k, const FVector<F>& s)
{
    FVector<F> w(2 * n, f.zero());
    w[k] = f.one();
    return clifford_action(f, n, w, s);
}

// beta(s, t): coefficient of e_1 ^ ... ^ e_n in s ^ rev(t).
template <class F>
typename F::value_type spinor_pairing(const F& f, int n, const FVector<F>& s, const FVector<F>& t)
{
    const std::uint32_t full = (1u << n) - 1u;
    auto total = f.zero();
    for (std::uint32_t I = 0; I <= full; ++I) {
        if (f.is_zero(s[I]))
            continue;
        std::uint32_t J = full ^ I;
        if (f.is_zero(t[J]))
            continue;
        int inv = 0;
        for (int j = 0; j < n; ++j)
            if (J & (1u << j))
                inv += std::popcount(I >> (j + 1));
        int k = std::popcount(J);
        inv += k * (k - 1) / 2;
        auto c = f.mul(s[I], t[J]);
        total = inv % 2 ? f.sub(total, c) : f.add(total, c);
    }
    return total;
}

// Components beta(x_J . s, t) for J running over increasing k-subsets of
// the basis e_1..e_n, f_1..f_n of W, x_J acting by iterated Clifford
// multiplication (last factor first).
template <class F>
FVector<F> gamma_pairing(const F& f, int n, int k, const FVector<F>& s, const FVector<F>& t)
{
    const int N = 2 * n;
    FVector<F> out;
    std::vector<int> J(k);
    for (int i = 0; i < k; ++i)
        J[i] = i;
    if (k > N)
        return out;
    while (true) {
        FVector<F> x = s;
        for (int i = k - 1; i >= 0; --i)
            x = clifford_basis_action(f, n, J[i], x);
        out.push_back(spinor_pairing(f, n, x, t));
        int i = k - 1;
        while (i >= 0 && J[i] == N - k + i)
            --i;
        if (i < 0)
            break;
        ++J[i];
        for (int j = i + 1; j < k; ++j)
            J[j] = J[j - 1] + 1;
    }
    return out;
}

// a(delta) as a vector of W, dualized by B(e_i, f_j) = delta_ij.
template <class F>
FVector<F> spinor_quadric_vector(const F& f, int n, const FVector<F>& delta)
{
    auto a = gamma_pairing(f, n, 1, delta, delta);
    FVector<F> v(2 * n);
    for (int i = 0; i < n; ++i) {
        v[i] = a[n + i];
        v[n + i] = a[i];
    }
    return v;
}

// Full-length spinor from coordinates on a half-spin basis.
template <class F>
FVector<F> embed_spinor(const F& f, const SpinModule& m, const FVector<F>& coords)
{
    FVector<F> s(std::size_t{1} << m.n, f.zero());
    for (std::size_t i = 0; i < m.dim(); ++i)
        s[m.masks[i]] = coords[i];
    return s;
}

template <class F>
FVector<F> restrict_spinor(const F& f, const SpinModule& m, const FVector<F>& s)
{
    FVector<F> c(m.dim(), f.zero());
    for (std::size_t i = 0; i < m.dim(); ++i)
        c[i] = s[m.masks[i]];
    return c;
}

// Pure spinor exp(sum_{i<j} A_ij e_i ^ e_j) = sum_I Pf(A_I) e_I, as
// coordinates on the even half-spin basis.
template <class F>
FVector<F> pure_spinor_from_skew(const F& f, const SpinModule& plus, const Matrix<typename F::value_type>& A)
{
    const int n = plus.n;
    std::vector<typename F::value_type> pf(std::size_t{1} << n, f.zero());
    pf[0] = f.one();
    // Pf(I) expanded along the smallest element of I
    for (std::size_t idx = 1; idx < plus.dim(); ++idx) {
        std::uint32_t I = plus.masks[idx];
        int i = std::countr_zero(I);
        std::uint32_t rest = I ^ (1u << i);
        auto total = f.zero();
        int pos = 0;
        for (int j = i + 1; j < n; ++j) {
            if (!(rest & (1u << j)))
                continue;
            auto c = f.mul(A(i, j), pf[rest ^ (1u << j)]);
            total = pos % 2 ? f.sub(total, c) : f.add(total, c);
            ++pos;
        }
        pf[I] = total;
    }
    FVector<F> out(plus.dim());
    for (std::size_t idx = 0; idx < plus.dim(); ++idx)
        out[idx] = pf[plus.masks[idx]];
    return out;
}

// so(W) basis w_a ^ w_b (a < b) in the natural representation:
// X.w = B(w_b, w) w_a - B(w_a, w) w_b.
std::vector<std::pair<int, int>> spin_lie_pairs(int n);
SparseMatrix<Rational> spin_lie_on_w(int n, int a, int b);
// Same element acting on a half-spin module by (w_a w_b - w_b w_a)/2.
SparseMatrix<Rational> spin_lie_on_spinors(const SpinModule& m, int a, int b);

// Kernel vector of psi_delta at n = 5 from the closed formula, with delta
// given on the even basis; the result is in W coordinates.
template <class F>
FVector<F> spin_kernel_vector(const F& f, const FVector<F>& delta_coords)
{
    const int n = 5;
    const auto& sp = spin_space(n);
    auto d = embed_spinor(f, sp.plus, delta_coords);
    auto two = [&](int i, int j) { return d[(1u << i) | (1u << j)]; };  // i < j, 0-based
    const std::uint32_t full = 31;
    std::vector<typename F::value_type> theta(n);
    for (int m = 0; m < n; ++m) {
        auto c = d[full ^ (1u << m)];
        theta[m] = m % 2 ? f.neg(c) : c;
    }
    FVector<F> v(2 * n, f.zero());
    for (int i = 0; i < n; ++i) {
        auto s = f.zero();
        for (int j = i + 1; j < n; ++j)
            s = f.add(s, f.mul(two(i, j), theta[j]));
        for (int j = 0; j < i; ++j)
            s = f.sub(s, f.mul(two(j, i), theta[j]));
        v[i] = s;
    }
    for (int m = 0; m < n; ++m) {
        int r[4], k = 0;
        for (int j = 0; j < n; ++j)
            if (j != m)
                r[k++] = j;
        auto pf = f.add(f.sub(f.mul(two(r[0], r[1]), two(r[2], r[3])), f.mul(two(r[0], r[2]), two(r[1], r[3]))),
                        f.mul(two(r[0], r[3]), two(r[1], r[2])));
        auto s = f.mul(d[0], theta[m]);
        v[n + m] = m % 2 ? f.add(s, pf) : f.sub(s, pf);
    }
    return v;
}

}  // namespace eqp
