#include <doctest.h>

#include <set>

#include "eqp/catalog.hpp"

using namespace eqp;

TEST_CASE("catalog covers every topic exactly as listed")
{
    std::set<std::string> topics(catalog_topics().begin(), catalog_topics().end());
    CHECK(topics.size() == catalog_topics().size());
    std::set<std::string> covered, ids;
    for (auto& e : catalog()) {
        CHECK_MESSAGE(ids.insert(e.id).second, "duplicate id " << e.id);
        CHECK_FALSE(e.topics.empty());
        for (auto& t : e.topics) {
            CHECK_MESSAGE(topics.count(t), "unknown topic " << t << " in " << e.id);
            covered.insert(t);
        }
    }
    for (auto& t : topics)
        CHECK_MESSAGE(covered.count(t), "topic " << t << " has no entry");
    CHECK(std::is_sorted(catalog().begin(), catalog().end(),
                         [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; }));
}

TEST_CASE("glob filter")
{
    CHECK(glob_match("gl-*", "gl-2-21-n2"));
    CHECK_FALSE(glob_match("gl-*", "sp-11-111-6"));
    CHECK(glob_match("spin-10-fixture", "spin-10-fixture"));
    CatalogOptions opt;
    opt.threads = 2;
    auto r = run_catalog("gl-2-21-n*", opt);
    REQUIRE(r.size() == 4);
    CHECK(r[0].id == "gl-2-21-n2");
    CHECK(r[3].id == "gl-2-21-n5");
    for (auto& e : r)
        CHECK(e.status == Status::pass);
}

TEST_CASE("entries above the ambient limit are skipped")
{
    CatalogOptions opt;
    opt.max_ambient = 10;
    auto r = run_catalog("gl-22-221-n3", opt);
    REQUIRE(r.size() == 1);
    CHECK(r[0].status == Status::skipped);
}

TEST_CASE("printed-claim mismatches are reported apart from failures")
{
    CatalogEntry e{"x", "", {"t"}, 0, [](Checker& c) {
                       c.expect_eq("a", 1, 1);
                       c.printed_eq("b", 2, 3);
                   }};
    CHECK(run_entry(e, {}).status == Status::erratum);
    e.run = [](Checker& c) { c.expect_eq("a", 1, 2); };
    CHECK(run_entry(e, {}).status == Status::fail);
    e.run = [](Checker&) { throw std::runtime_error("boom"); };
    auto r = run_entry(e, {});
    CHECK(r.status == Status::error);
    CHECK(r.error == "boom");
}

TEST_CASE("trace-free kernel line of the SO pencil")
{
    auto S = orthogonal_module({2}, 3);
    auto line = so_kernel_line({Rational(1), Rational(2), Rational(-1)});
    CHECK(S->contains(line));
    auto p = build_so_pencil({2}, {2, 1}, 3);
    RationalField q;
    auto img = apply(q, p.evaluate({Rational(1), Rational(2), Rational(-1)}), S->coordinates(line));
    for (auto& x : img)
        CHECK(sgn(x) == 0);
}

TEST_CASE("rank representatives")
{
    for (int r = 0; r <= 3; ++r)
        CHECK(rank(rank_representative(3, 4, r)) == static_cast<std::size_t>(r));
}
