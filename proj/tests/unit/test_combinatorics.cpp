#include <doctest.h>

#include <functional>
#include <map>

#include "eqp/combinatorics.hpp"

using namespace eqp;

namespace {

std::vector<Partition> partitions_of(int n, int max_part = -1)
{
    if (max_part < 0)
        max_part = n;
    if (n == 0)
        return {Partition{}};
    std::vector<Partition> out;
    for (int first = std::min(n, max_part); first >= 1; --first)
        for (auto& rest : partitions_of(n - first, first)) {
            std::vector<int> p{first};
            p.insert(p.end(), rest.parts().begin(), rest.parts().end());
            out.emplace_back(p);
        }
    return out;
}

Rational hook_content(const Partition& lam, int n)
{
    Rational r = 1;
    auto conj = lam.conjugate();
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int hook = (lam[i] - j - 1) + (conj[j] - i - 1) + 1;
            Rational f(n + j - i, hook);
            f.canonicalize();
            r *= f;
        }
    return r;
}

// skew tableaux of shape lam/mu with content nu whose reverse row reading word is a lattice word
std::int64_t lr_brute(const Partition& mu, const Partition& nu, const Partition& lam)
{
    if (!lam.contains(mu) || lam.size() != mu.size() + nu.size())
        return 0;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = mu[i]; j < lam[i]; ++j)
            cells.push_back({i, j});
    const int k = nu.length();
    std::map<std::pair<int, int>, int> fill;
    std::int64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            std::vector<int> content(k, 0);
            for (auto& [c, v] : fill)
                ++content[v];
            for (int i = 0; i < k; ++i)
                if (content[i] != nu[i])
                    return;
            std::vector<int> seen(k, 0);
            for (int i = 0; i < lam.length(); ++i)
                for (int j = lam[i] - 1; j >= mu[i]; --j) {
                    int v = fill[{i, j}];
                    ++seen[v];
                    if (v > 0 && seen[v] > seen[v - 1])
                        return;
                }
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 0; v < k; ++v) {
            if (j > mu[i] && fill[{i, j - 1}] > v)
                continue;
            if (i > 0 && j >= mu[i - 1] && j < lam[i - 1] && fill[{i - 1, j}] >= v)
                continue;
            fill[{i, j}] = v;
            rec(idx + 1);
        }
        fill.erase({i, j});
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("partition parsing and conjugation")
{
    CHECK(Partition::parse("2,1") == Partition{2, 1});
    CHECK(Partition::parse("(3, 2, 1)") == Partition{3, 2, 1});
    CHECK(Partition{2, 1, 0} == Partition{2, 1});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{2, 2, 1}.size() == 5);
    CHECK(Partition{2, 2, 1}.length() == 3);
}

TEST_CASE("gl_dim agrees with the hook-content formula")
{
    for (int size = 0; size <= 7; ++size)
        for (auto& lam : partitions_of(size))
            for (int n = 1; n <= 6; ++n) {
                CAPTURE(lam.str());
                CAPTURE(n);
                auto hc = hook_content(lam, n);
                CHECK(hc.get_den() == 1);
                CHECK(gl_dim(lam, n) == hc.get_num());
                if (lam.length() <= n)
                    CHECK(weyl_dim(GroupSpec::gl(n), lam) == gl_dim(lam, n));
            }
}

TEST_CASE("semistandard tableaux are counted by gl_dim")
{
    for (int size = 1; size <= 5; ++size)
        for (auto& lam : partitions_of(size))
            for (int n = 1; n <= 4; ++n)
                CHECK(Integer(semistandard_tableaux(lam, n).size()) == gl_dim(lam, n));
}

TEST_CASE("Littlewood-Richardson coefficients match brute-force tableau counts")
{
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (auto& mu : partitions_of(a))
                for (auto& nu : partitions_of(b))
                    for (auto& lam : partitions_of(a + b)) {
                        CAPTURE(mu.str());
                        CAPTURE(nu.str());
                        CAPTURE(lam.str());
                        auto c = lr_coefficient(mu, nu, lam);
                        CHECK(c == lr_brute(mu, nu, lam));
                        CHECK(c == lr_coefficient(nu, mu, lam));
                    }
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("Littlewood-Richardson rule is consistent with dimensions")
{
    for (auto& mu : partitions_of(3))
        for (auto& nu : partitions_of(2))
            for (int n = 1; n <= 5; ++n) {
                Integer sum = 0;
                for (auto& lam : partitions_of(5))
                    sum += lr_coefficient(mu, nu, lam) * gl_dim(lam, n);
                CHECK(sum == gl_dim(mu, n) * gl_dim(nu, n));
            }
}

TEST_CASE("Pieri additions and horizontal strips")
{
    auto adds = pieri_add({2, 1}, 3);
    REQUIRE(adds.size() == 3);
    for (auto& [nu, box] : adds) {
        BoxPosition b;
        CHECK(one_box_difference({2, 1}, nu, &b));
        CHECK(b == box);
    }
    CHECK(pieri_add({2, 1}, 2).size() == 2);
    CHECK_FALSE(one_box_difference({2}, {2, 2}));
    CHECK(horizontal_strips({2, 1}, 1).size() == 2);
    CHECK(horizontal_strips({2, 2}, 2).size() == 1);
    for (auto& mu : partitions_of(5))
        for (int n = 1; n <= 4; ++n) {
            Integer sum = 0;
            for (auto& a : all_horizontal_strips(mu))
                if (a.length() <= n)
                    sum += gl_dim(a, n);
            CHECK(sum == gl_dim(mu, n + 1));
        }
}

TEST_CASE("Weyl dimensions of classical groups")
{
    CHECK(weyl_dim(GroupSpec::sp(4), Partition{1}) == 4);
    CHECK(weyl_dim(GroupSpec::sp(4), Partition{1, 1}) == 5);
    CHECK(weyl_dim(GroupSpec::sp(4), Partition{2}) == 10);
    CHECK(weyl_dim(GroupSpec::sp(6), Partition{1, 1, 1}) == 14);
    CHECK(weyl_dim(GroupSpec::so(5), Partition{1}) == 5);
    CHECK(weyl_dim(GroupSpec::so(7), Partition{1, 1}) == 21);
    CHECK(weyl_dim(GroupSpec::so(8), Partition{2}) == 35);
    CHECK(weyl_dim(GroupSpec::spin(10), spin_fundamental_weight(5, 5)) == 16);
    CHECK(weyl_dim(GroupSpec::spin(10), spin_fundamental_weight(5, 1)) == 10);
    CHECK(weyl_dim(GroupSpec::spin(10), spin_fundamental_weight(5, 2)) == 45);
    for (int m = 5; m <= 9; ++m)
        for (auto& lam : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}, {3}})
            if (2 * lam.length() < m)
                CHECK(orthogonal_traceless_dim(lam, m) == weyl_dim(GroupSpec::so(m), lam));
    for (int n = 2; n <= 4; ++n)
        for (auto& lam : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}})
            if (lam.length() <= n)
                CHECK(symplectic_dim_or_zero(lam, 2 * n) == weyl_dim(GroupSpec::sp(2 * n), lam));
}

TEST_CASE("family sizes")
{
    for (int n = 2; n <= 6; ++n) {
        auto f = family_sizes(Family::GL_2_21, {n});
        CHECK(f.source == gl_dim({2}, n + 1));
        CHECK(f.target == gl_dim({2, 1}, n + 1));
    }
    for (int m = 3; m <= 7; ++m) {
        auto f = family_sizes(Family::SO_2_21, {m});
        CHECK(f.source == (m * m + m - 2) / 2);
        CHECK(f.target == (m * m * m - 4 * m) / 3);
    }
    CHECK(hook_rank_closed_form(3, 1) == 11);
}
