#include <doctest.h>

#include <random>

#include "eqp/linalg.hpp"

using namespace eqp;

namespace {

Matrix<Integer> random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r)
{
    std::uniform_int_distribution<int> d(-5, 5);
    Matrix<Integer> a(rows, r), b(r, cols), m(rows, cols, Integer(0));
    for (auto& x : a.data())
        x = d(rng);
    for (auto& x : b.data())
        x = d(rng);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) += a(i, k) * b(k, j);
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic")
{
    CHECK(is_prime(default_prime));
    CHECK_FALSE(is_prime(default_prime - 2));
    CHECK(default_prime % 4 == 1);
    PrimeField f;
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; ++t) {
        std::uint32_t a = rng() % f.modulus(), b = rng() % f.modulus();
        CHECK(f.mul(a, b) == static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % f.modulus()));
        if (a)
            CHECK(f.mul(a, f.inv(a)) == 1);
    }
    auto i = f.sqrt_minus_one();
    CHECK(f.mul(i, i) == f.neg(1));
    CHECK(f.from_rational(Rational(1, 2)) == f.inv(2));
    CHECK(f.from_int(-1) == f.modulus() - 1);
}

TEST_CASE("exact and modular ranks agree")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 2 + rng() % 7, cols = 2 + rng() % 7, r = rng() % (std::min(rows, cols) + 1);
        auto m = random_low_rank(rng, rows, cols, r);
        auto exact = rank(m);
        CHECK(exact <= r);
        CHECK(bareiss_rank(m) == exact);
        CHECK(rank(to_rational(m)) == exact);
        for (std::uint32_t p : {default_prime, 1000003u, 998244353u}) {
            PrimeField f(p);
            CHECK(rank(f, reduce_mod(f, m)) == exact);
        }
    }
}

TEST_CASE("rank-nullity and kernel vectors")
{
    std::mt19937_64 rng(3);
    RationalField q;
    for (int t = 0; t < 20; ++t) {
        auto m = to_rational(random_low_rank(rng, 5, 7, rng() % 5));
        auto k = kernel(q, m);
        CHECK(rank(m) + k.dim() == m.cols());
        for (std::size_t i = 0; i < k.dim(); ++i) {
            auto y = apply(q, m, k.basis().row_vector(i));
            for (auto& x : y)
                CHECK(sgn(x) == 0);
        }
        CHECK(image(q, m).dim() == rank(m));
        CHECK(left_kernel(q, m).dim() + rank(m) == m.rows());
    }
}

TEST_CASE("subspaces have a canonical basis")
{
    RationalField q;
    Matrix<Rational> a(2, 4, Rational(0));
    a(0, 0) = 1, a(0, 1) = 2, a(1, 2) = 3, a(1, 3) = -1;
    Matrix<Rational> b(3, 4, Rational(0));
    for (std::size_t j = 0; j < 4; ++j) {
        b(0, j) = a(0, j) + a(1, j);
        b(1, j) = 2 * a(0, j) - 5 * a(1, j);
        b(2, j) = b(0, j) + b(1, j);
    }
    auto sa = Subspace<RationalField>::span(q, a), sb = Subspace<RationalField>::span(q, b);
    CHECK(sa == sb);
    CHECK(sa.contains(b.row_vector(2)));
    std::vector<Rational> e0{1, 0, 0, 0};
    CHECK_FALSE(sa.contains(e0));
    auto coords = sa.coordinates(b.row_vector(1));
    REQUIRE(coords);
    CHECK(coords->size() == 2);
}

TEST_CASE("intersection, solve and inverse")
{
    RationalField q;
    std::vector<std::vector<Rational>> xy{{1, 0, 0}, {0, 1, 0}}, yz{{0, 1, 0}, {0, 0, 1}};
    auto i = intersect(Subspace<RationalField>::span(q, 3, xy), Subspace<RationalField>::span(q, 3, yz));
    CHECK(i.dim() == 1);
    CHECK(i.contains({0, 5, 0}));

    Matrix<Rational> m(3, 3, Rational(0));
    m(0, 0) = 2, m(0, 1) = 1, m(1, 1) = 3, m(2, 0) = 1, m(2, 2) = 4;
    auto inv = inverse(q, m);
    auto id = multiply(q, m, inv);
    CHECK(id == Matrix<Rational>::identity(q, 3));
    auto x = solve(q, m, std::vector<Rational>{1, 2, 3});
    REQUIRE(x);
    CHECK(apply(q, m, *x) == std::vector<Rational>{1, 2, 3});
    Matrix<Rational> sing(2, 2, Rational(1));
    CHECK_FALSE(solve(q, sing, std::vector<Rational>{1, 2}));
    CHECK_THROWS_AS(inverse(q, sing), std::domain_error);
}

TEST_CASE("incremental echelon matches batch rank")
{
    PrimeField f(101);
    std::mt19937_64 rng(5);
    IncrementalEchelon<PrimeField> inc(f, 6);
    Matrix<std::uint32_t> all(0, 6);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::uint32_t> v(6);
        for (auto& x : v)
            x = rng() % 3 == 0 ? rng() % 101 : 0;
        all.append_row(v);
        inc.add(v);
        CHECK(inc.rank() == rank(f, all));
    }
}
