#include <doctest.h>

#include <random>

#include "eqp/catalog.hpp"
#include "eqp/spin.hpp"

using namespace eqp;

namespace {

std::vector<std::uint32_t> random_vec(const PrimeField& f, std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> v(n);
    for (auto& x : v)
        x = rng() % f.modulus();
    return v;
}

}  // namespace

TEST_CASE("half-spin spaces")
{
    for (int n = 2; n <= 7; ++n) {
        const auto& s = spin_space(n);
        CHECK(s.plus.dim() == (std::size_t{1} << (n - 1)));
        CHECK(s.minus.dim() == (std::size_t{1} << (n - 1)));
        CHECK(s.w_labels.size() == static_cast<std::size_t>(2 * n));
    }
    auto order = spin_space(5).plus.masks;
    CHECK(order.front() == 0);
    CHECK(subset_label(order[1]) == "e_12");
    CHECK(subset_label(order.back()) == "e_2345");
}

TEST_CASE("Clifford relation w.w.s = q(w) s")
{
    PrimeField f;
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            auto w = random_vec(f, 2 * n, rng);
            auto s = random_vec(f, std::size_t{1} << n, rng);
            auto ww = clifford_action(f, n, w, clifford_action(f, n, w, s));
            std::uint32_t q = 0;
            for (int i = 0; i < n; ++i)
                q = f.add(q, f.mul(w[i], w[n + i]));
            for (std::size_t k = 0; k < s.size(); ++k)
                CHECK(ww[k] == f.mul(q, s[k]));
        }
}

TEST_CASE("pure spinors satisfy the quadrics")
{
    PrimeField f;
    std::mt19937_64 rng(4);
    for (int n = 3; n <= 6; ++n) {
        const auto& sp = spin_space(n);
        for (int t = 0; t < 5; ++t) {
            auto d = random_pure_spinor(f, n, rng);
            auto a = spinor_quadric_vector(f, n, embed_spinor(f, sp.plus, FVector<PrimeField>(d.begin(), d.end())));
            for (auto x : a)
                CHECK(x == 0);
        }
    }
    auto d = random_vec(f, 16, rng);
    auto a = spinor_quadric_vector(f, 5, embed_spinor(f, spin_space(5).plus, FVector<PrimeField>(d.begin(), d.end())));
    CHECK(std::any_of(a.begin(), a.end(), [](std::uint32_t x) { return x != 0; }));
}

TEST_CASE("spin pencil kernel vector")
{
    PrimeField f;
    std::mt19937_64 rng(8);
    auto p = build_spin_pencil(5);
    CHECK(p.certificate.valid);
    for (int t = 0; t < 20; ++t) {
        auto d = random_vec(f, 16, rng);
        auto M = p.evaluate_mod(f, d);
        auto k = spin_kernel_vector(f, FVector<PrimeField>(d.begin(), d.end()));
        for (auto x : apply(f, M, k))
            CHECK(x == 0);
        CHECK(spin_h_vector(f, d, false) == k);
    }
}
