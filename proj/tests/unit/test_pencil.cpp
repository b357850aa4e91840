#include <doctest.h>

#include <random>

#include "eqp/fixture.hpp"
#include "eqp/pencil.hpp"
#include "eqp/rank.hpp"

using namespace eqp;

namespace {

std::vector<Rational> random_rational(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> d(-6, 6);
    std::vector<Rational> x(n);
    for (auto& e : x)
        e = d(rng);
    return x;
}

// e_x ^ - : L^k -> L^{k+1}, written out from subsets
Matrix<Rational> wedge_matrix(int v, int k, const std::vector<Rational>& x)
{
    auto src = exterior_basis(v, k), dst = exterior_basis(v, k + 1);
    Matrix<Rational> m(dst.size(), src.size(), Rational(0));
    for (std::size_t c = 0; c < src.size(); ++c)
        for (int i = 0; i < v; ++i) {
            auto S = src[c];
            if (std::find(S.begin(), S.end(), i) != S.end())
                continue;
            int below = static_cast<int>(std::count_if(S.begin(), S.end(), [&](int s) { return s < i; }));
            S.push_back(i);
            std::sort(S.begin(), S.end());
            auto r = std::find(dst.begin(), dst.end(), S) - dst.begin();
            m(r, c) += (below % 2 ? -1 : 1) * x[i];
        }
    return m;
}

}  // namespace

TEST_CASE("GL pencil sizes follow the Weyl dimensions")
{
    for (int v = 2; v <= 4; ++v)
        for (auto& mu : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}})
            for (auto& [nu, box] : pieri_add(mu, v)) {
                auto p = build_gl_pencil(mu, nu, v);
                CHECK(p.nvars == static_cast<std::size_t>(v));
                CHECK(Integer(p.source_dim) == gl_dim(mu, v));
                CHECK(Integer(p.target_dim) == gl_dim(nu, v));
                CHECK(p.certificate.valid);
                CHECK_FALSE(p.is_zero());
            }
}

TEST_CASE("Koszul pencils match an independent wedge product")
{
    std::mt19937_64 rng(9);
    for (int v = 2; v <= 5; ++v)
        for (int k = 0; k < v; ++k) {
            auto p = build_koszul_pencil(k, v);
            CHECK(p.source_dim == exterior_basis(v, k).size());
            for (int t = 0; t < 3; ++t) {
                auto x = random_rational(rng, v);
                if (std::all_of(x.begin(), x.end(), [](const Rational& e) { return sgn(e) == 0; }))
                    continue;
                auto oracle = rank(wedge_matrix(v, k, x));
                CHECK(Integer(oracle) == binomial(v - 1, k));
                CHECK(rank(p.evaluate(x)) == oracle);
            }
        }
}

TEST_CASE("symplectic and orthogonal pencils")
{
    auto sp = build_sp_pencil({1, 1}, {1, 1, 1}, 6);
    CHECK(sp.source_dim == 14);
    CHECK(sp.target_dim == 14);
    CHECK(sp.certificate.valid);
    auto so = build_so_pencil({2}, {2, 1}, 3);
    CHECK(so.source_dim == 5);
    CHECK(so.target_dim == 5);
    CHECK(so.certificate.valid);
    CHECK(so.certificate.group == GroupSpec::so(3).str());
}

TEST_CASE("adjoint pencil")
{
    auto p = build_adjoint_pencil(6);
    CHECK(p.nvars == 20);
    CHECK(p.source_dim == 35);
    CHECK(p.target_dim == 20);
}

TEST_CASE("pencils rebuild from their spec")
{
    auto p = build_gl_pencil({2}, {2, 1}, 3);
    REQUIRE(p.spec);
    auto q = build_from_spec(*p.spec);
    CHECK(same_coefficients(p, q));
    Pencil stripped = p;
    stripped.certificate = {};
    CHECK(recertify(stripped));
    CHECK(stripped.certificate.valid);
    Pencil tampered = stripped;
    tampered.certificate = {};
    tampered.coeffs[0].set(0, 0, tampered.coeffs[0].get(0, 0) + 1);
    CHECK_FALSE(recertify(tampered));
    auto t = transposed(p);
    CHECK(t.source_dim == p.target_dim);
    CHECK_FALSE(t.certificate.valid);
    CHECK_FALSE(t.spec);
}

TEST_CASE("equivariance check rejects a broken pencil")
{
    auto p = build_gl_pencil({1}, {2}, 2, {false});
    auto X = lie_algebra_basis(GroupSpec::gl(2));
    std::vector<LieTriple> gens;
    auto src = schur_module({1}, 2), dst = schur_module({2}, 2);
    for (auto& x : X)
        gens.push_back({SparseMatrix<Rational>::from_dense(x), src->lie_matrix(x), dst->lie_matrix(x)});
    CHECK(check_equivariance(p, gens));
    p.coeffs[0].set(0, 0, p.coeffs[0].get(0, 0) + p.denominator);
    CHECK_FALSE(check_equivariance(p, gens));
}

TEST_CASE("theta operator rank formula")
{
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            ThetaOperator op(a, b, {2}, {1}, {1}, {1, 1});
            for (int r = 0; r <= std::min(a, b); ++r) {
                Matrix<Rational> X(a, b, Rational(0));
                for (int i = 0; i < r; ++i)
                    X(i, i) = 1;
                CHECK(Integer(rank(op.evaluate(X))) == theta_rank_formula(a, b, r));
                CHECK(op.evaluate(X) == theta_map(X, {2}, {1}, {1}, {1, 1}));
            }
        }
}

TEST_CASE("hyperplane bound criterion")
{
    auto h = hyperplane_bound_criterion({3, 2}, {3, 2, 1, 1}, 2);
    CHECK(h.certified);
    CHECK(h.kernel_bound == 40);
    CHECK_FALSE(hyperplane_bound_criterion({1}, {2, 1}, 1).certified);
}
