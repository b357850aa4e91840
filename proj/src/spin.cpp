#include "eqp/spin.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace eqp {

std::vector<std::uint32_t> subsets_degree_lex(int n)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        out.push_back(m);
    auto key = [](std::uint32_t m) {
        std::vector<int> elems;
        for (int i = 0; m >> i; ++i)
            if (m & (1u << i))
                elems.push_back(i);
        return std::make_pair(static_cast<int>(elems.size()), elems);
    };
    std::sort(out.begin(), out.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    return out;
}

std::string subset_label(std::uint32_t mask)
{
    if (mask == 0)
        return "e_0";
    std::string s = "e_";
    bool wide = std::bit_width(mask) > 9;
    bool first = true;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) {
            if (wide && !first)
                s += '.';
            s += std::to_string(i + 1);
            first = false;
        }
    return s;
}

namespace {

SpinModule make_half(int n, bool even)
{
    SpinModule m;
    m.n = n;
    m.even = even;
    m.index.assign(std::size_t{1} << n, -1);
    for (auto mask : subsets_degree_lex(n))
        if ((std::popcount(mask) % 2 == 0) == even) {
            m.index[mask] = static_cast<int>(m.masks.size());
            m.masks.push_back(mask);
            m.labels.push_back(subset_label(mask));
        }
    return m;
}

}  // namespace

const SpinSpace& spin_space(int n)
{
    if (n < 2 || n > 16)
        throw std::invalid_argument("spin space needs 2 <= n <= 16");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SpinSpace>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto s = std::make_unique<SpinSpace>();
        s->n = n;
        s->plus = make_half(n, true);
        s->minus = make_half(n, false);
        for (int i = 1; i <= n; ++i)
            s->w_labels.push_back("e" + std::to_string(i));
        for (int i = 1; i <= n; ++i)
            s->w_labels.push_back("f" + std::to_string(i));
        slot = std::move(s);
    }
    return *slot;
}

std::vector<std::pair<int, int>> spin_lie_pairs(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 2 * n; ++a)
        for (int b = a + 1; b < 2 * n; ++b)
            out.emplace_back(a, b);
    return out;
}

namespace {

// B(w_a, w_b) with B(e_i, f_j) = delta_ij
int pairing(int n, int a, int b) { return (a < n) != (b < n) && a % n == b % n ? 1 : 0; }

}  // namespace

SparseMatrix<Rational> spin_lie_on_w(int n, int a, int b)
{
    SparseMatrix<Rational> m(2 * n, 2 * n);
    for (int w = 0; w < 2 * n; ++w) {
        if (int c = pairing(n, b, w))
            m.add(a, w, Rational(c));
        if (int c = pairing(n, a, w))
            m.add(b, w, Rational(-c));
    }
    return m;
}

SparseMatrix<Rational> spin_lie_on_spinors(const SpinModule& mod, int a, int b)
{
    RationalField q;
    const int n = mod.n;
    SparseMatrix<Rational> m(mod.dim(), mod.dim());
    for (std::size_t col = 0; col < mod.dim(); ++col) {
        FVector<RationalField> s(std::size_t{1} << n, Rational(0));
        s[mod.masks[col]] = 1;
        auto ab = clifford_basis_action(q, n, a, clifford_basis_action(q, n, b, s));
        auto ba = clifford_basis_action(q, n, b, clifford_basis_action(q, n, a, s));
        for (std::uint32_t mask = 0; mask < s.size(); ++mask) {
            Rational v = (ab[mask] - ba[mask]) / 2;
            if (sgn(v) == 0)
                continue;
            if (mod.index[mask] < 0)
                throw std::logic_error("spin Lie action changes parity");
            m.add(mod.index[mask], col, v);
        }
    }
    return m;
}

}  // namespace eqp
