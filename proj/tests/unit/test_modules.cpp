#include <doctest.h>

#include <random>

#include "eqp/modules.hpp"

using namespace eqp;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix<Rational> X(n, n);
    for (auto& x : X.data())
        x = d(rng);
    return X;
}

}  // namespace

TEST_CASE("Schur modules have the Weyl dimension")
{
    for (auto& lam : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}, {3}, {1, 1, 1}, {2, 2}, {3, 1}})
        for (int v = lam.length(); v <= 4; ++v) {
            CAPTURE(lam.str());
            CAPTURE(v);
            CHECK(Integer(schur_module(lam, v)->dim()) == gl_dim(lam, v));
        }
}

TEST_CASE("symplectic and orthogonal modules have the traceless dimension")
{
    for (auto& lam : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}})
        for (int n = lam.length(); n <= 3; ++n)
            CHECK(Integer(symplectic_module(lam, 2 * n)->dim()) == symplectic_dim_or_zero(lam, 2 * n));
    for (auto& lam : std::vector<Partition>{{1}, {2}, {2, 1}, {3}})
        for (int m = 3; m <= 5; ++m)
            CHECK(Integer(orthogonal_module(lam, m)->dim()) == orthogonal_traceless_dim(lam, m));
}

TEST_CASE("modules are stable under the Lie algebra")
{
    std::mt19937_64 rng(11);
    auto check_stable = [&](const RealizedModule& mod, const GroupSpec& g) {
        auto basis = lie_algebra_basis(g);
        for (int t = 0; t < 3; ++t) {
            Matrix<Rational> X(g.natural_dim, g.natural_dim, Rational(0));
            for (auto& B : basis) {
                Rational c = static_cast<int>(rng() % 5) - 2;
                for (std::size_t i = 0; i < X.data().size(); ++i)
                    X.data()[i] += c * B.data()[i];
            }
            REQUIRE(in_lie_algebra(g, X));
            for (std::size_t i = 0; i < mod.dim(); ++i)
                CHECK(mod.contains(lie_action_tensor(X, mod.ambient(), mod.ambient_vector(i))));
        }
    };
    check_stable(*schur_module({2, 1}, 3), GroupSpec::gl(3));
    check_stable(*symplectic_module({1, 1}, 4), GroupSpec::sp(4));
    check_stable(*orthogonal_module({2, 1}, 3), GroupSpec::so(3));
    CHECK_FALSE(in_lie_algebra(GroupSpec::sp(4), random_matrix(rng, 4)));
}

TEST_CASE("form modules are killed by contractions")
{
    auto sp = symplectic_module({2, 1}, 4);
    auto so = orthogonal_module({2, 1}, 4);
    for (auto* mod : {sp.get(), so.get()}) {
        REQUIRE(mod->form());
        for (std::size_t i = 0; i < mod->dim(); ++i) {
            auto u = mod->ambient_vector(i);
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    CHECK(contract(*mod->form(), mod->ambient(), u, a, b).empty());
        }
        CHECK(mod->parent() != nullptr);
    }
}

TEST_CASE("coordinates round-trip")
{
    auto m = schur_module({2, 1}, 3);
    std::vector<Rational> c(m->dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = Rational(static_cast<long>(i) - 3) / 2;
    CHECK(m->coordinates(m->ambient_vector(c)) == c);
    TensorSpace W(3, 3);
    TensorVector e;
    add_to(e, W.encode({0, 0, 0}), 1);
    CHECK_FALSE(m->contains(e));
}
