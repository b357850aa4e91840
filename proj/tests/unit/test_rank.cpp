#include <doctest.h>

#include "eqp/fixture.hpp"
#include "eqp/rank.hpp"

using namespace eqp;

namespace {

// x_i * E_{rows[i], cols[i]}
Pencil diagonal_pencil(std::size_t n)
{
    std::vector<SparseMatrix<Rational>> m(n, SparseMatrix<Rational>(n, n));
    for (std::size_t i = 0; i < n; ++i)
        m[i].set(i, i, 1);
    return Pencil::from_rational(m, n, n);
}

// the 3x3 skew-symmetric matrix of (x, y, z): rank 2 everywhere off zero
Pencil skew_pencil()
{
    std::vector<SparseMatrix<Rational>> m(3, SparseMatrix<Rational>(3, 3));
    m[0].set(0, 1, 1), m[0].set(1, 0, -1);
    m[1].set(0, 2, 1), m[1].set(2, 0, -1);
    m[2].set(1, 2, 1), m[2].set(2, 1, -1);
    return Pencil::from_rational(m, 3, 3);
}

}  // namespace

TEST_CASE("exhaustive verdicts")
{
    auto d = constant_rank_verdict(diagonal_pencil(2), VerdictMode::exhaustive(3));
    CHECK(d.verdict == Verdict::non_constant);
    CHECK(d.points == 4);  // points of P^1(F_3)
    CHECK(d.min_rank() == 1);
    CHECK(d.generic_rank == 2);

    auto s = constant_rank_verdict(skew_pencil(), VerdictMode::exhaustive(5));
    CHECK(s.verdict == Verdict::constant);
    CHECK(s.generic_rank == 2);

    auto k = constant_rank_verdict(build_koszul_pencil(1, 3), VerdictMode::exhaustive(5));
    CHECK(k.verdict == Verdict::constant);
    CHECK(k.generic_rank == 2);
}

TEST_CASE("sampled verdicts")
{
    auto d = constant_rank_verdict(diagonal_pencil(3), VerdictMode::sampled(default_prime, 50, 1));
    CHECK(d.verdict == Verdict::non_constant);
    CHECK(d.generic_rank == 3);
    auto sp = constant_rank_verdict(build_spin_pencil(5), VerdictMode::sampled(default_prime, 30, 1));
    CHECK(sp.verdict == Verdict::bounded);
    CHECK(sp.generic_rank == 9);
    CHECK(sp.min_rank() == 5);
}

TEST_CASE("transitivity needs a certified GL, Sp or Koszul pencil")
{
    auto gl = constant_rank_verdict(build_gl_pencil({2}, {2, 1}, 3), VerdictMode::transitivity());
    CHECK(gl.verdict == Verdict::constant);
    CHECK(gl.generic_rank == 5);
    CHECK(gl.method == Method::transitivity);
    CHECK_THROWS_AS(constant_rank_verdict(build_so_pencil({2}, {2, 1}, 3), VerdictMode::transitivity()),
                    UnsupportedMode);
    CHECK_THROWS_AS(constant_rank_verdict(build_spin_pencil(5), VerdictMode::transitivity()), UnsupportedMode);
    CHECK_THROWS_AS(constant_rank_verdict(load_fixture("gl_2_21").pencil, VerdictMode::transitivity()),
                    UnsupportedMode);
    CHECK_THROWS_AS(constant_rank_verdict(build_gl_pencil({2}, {2, 1}, 3, {false}), VerdictMode::transitivity()),
                    UnsupportedMode);
}

TEST_CASE("exhaustive budget")
{
    CHECK_THROWS_AS(constant_rank_verdict(diagonal_pencil(4), VerdictMode::exhaustive(5, 100)), BudgetExceeded);
}

TEST_CASE("reports are reproducible for a fixed seed")
{
    auto p = build_gl_pencil({2}, {2, 1}, 3);
    auto a = constant_rank_verdict(p, VerdictMode::sampled(default_prime, 40, 17));
    auto b = constant_rank_verdict(p, VerdictMode::sampled(default_prime, 40, 17));
    CHECK(a == b);
    CHECK(a.seed == 17);
    CHECK(a.trials == 40);
}

TEST_CASE("rank neutral directions")
{
    auto full = rnd(diagonal_pencil(1), default_prime, 100, 0);
    CHECK(full.verdict == RndVerdict::rank_critical_certified);
    CHECK(full.dim == 1);

    auto sk = rnd(skew_pencil(), default_prime, 100, 0);
    CHECK(sk.verdict == RndVerdict::rank_critical_certified);
    CHECK(sk.dim == 3);

    auto gl = rnd(build_gl_pencil({2}, {2, 1}, 3, {false}), default_prime, 400, 5);
    CHECK(gl.verdict == RndVerdict::strictly_larger);
    CHECK(gl.dim == 18);
    CHECK(gl.seed == 5);
}

TEST_CASE("predicted decompositions")
{
    auto d = predict_gl_decomposition({2}, {2, 1}, 3);
    CHECK(d.kernel_dim == 1);
    CHECK(d.image_dim == 5);
    CHECK(d.cokernel_dim == 3);
    auto s = predict_so_nonisotropic({2}, {2, 1}, 3);
    CHECK(s.kernel_dim == 1);
    CHECK(s.image_dim == 4);
}

TEST_CASE("special points")
{
    PrimeField f;
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto x = random_isotropic_point(f, 5, rng);
        std::uint32_t q = 0;
        for (auto e : x)
            q = f.add(q, f.mul(e, e));
        CHECK(q == 0);
        CHECK(std::any_of(x.begin(), x.end(), [](std::uint32_t e) { return e != 0; }));
    }
    auto p = build_so_pencil({2}, {2, 1}, 3);
    auto pts = structured_points(p, f, rng, 5);
    CHECK(std::any_of(pts.begin(), pts.end(), [](const ClassifiedPoint& c) { return c.second == PointClass::isotropic; }));
}

TEST_CASE("Koszul flattening")
{
    CHECK(koszul_flattening_rank({2}, {2, 1}, 3) == 18);
    auto p = build_gl_pencil({2}, {2, 1}, 3);
    CHECK(koszul_flattening_rank(p) == 18);
}
