#include <doctest.h>

#include "eqp/fixture.hpp"
#include "eqp/serialize.hpp"

using namespace eqp;

TEST_CASE("pencil files round-trip")
{
    for (auto p : {build_gl_pencil({2}, {2, 1}, 3), build_sp_pencil({1, 1}, {1, 1, 1}, 6), build_spin_pencil(5),
                   build_so_pencil({2}, {2, 1}, 3), load_fixture("spin10_mdelta").pencil}) {
        auto text = write_pencil(p);
        auto q = read_pencil(text);
        CHECK(same_coefficients(p, q));
        CHECK(q.var_labels == p.var_labels);
        CHECK(q.kind == p.kind);
        CHECK(q.spec == p.spec);
        CHECK(write_pencil(q) == text);
        CHECK(text.find('\r') == std::string::npos);
    }
}

TEST_CASE("rational entries are decimal strings")
{
    std::vector<SparseMatrix<Rational>> m(1, SparseMatrix<Rational>(1, 2));
    m[0].set(0, 0, Rational(-3, 4));
    m[0].set(0, 1, Rational(1, 6));
    auto p = Pencil::from_rational(m, 1, 2);
    auto j = pencil_to_json(p);
    CHECK(j["entries"][0]["num"] == "-3");
    CHECK(j["entries"][0]["den"] == "4");
    CHECK(j["entries"][1]["den"] == "6");
    CHECK(same_coefficients(pencil_from_json(j), p));
}

TEST_CASE("build then verify reproduces the report")
{
    auto p = build_gl_pencil({2}, {2, 1}, 3);
    auto mode = VerdictMode::sampled(default_prime, 30, 4);
    auto a = constant_rank_verdict(p, mode);
    auto b = constant_rank_verdict(read_pencil(write_pencil(p)), mode);
    CHECK(a == b);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
    CHECK(report_from_json(report_to_json(a)) == a);
    auto t = constant_rank_verdict(p, VerdictMode::transitivity());
    t.predicted = predict_gl_decomposition({2}, {2, 1}, 3);
    CHECK(report_from_json(report_to_json(t)) == t);
}

TEST_CASE("malformed pencil files")
{
    try {
        read_pencil("{\n  \"nvars\": 1,\n  oops\n}", "f.json");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 3);
    }
    CHECK_THROWS_AS(read_pencil(R"({"nvars":1,"source_dim":1})"), ParseError);
    CHECK_THROWS_AS(read_pencil(R"({"nvars":1,"source_dim":1,"target_dim":1,"entries":[
        {"var":0,"row":0,"col":0,"num":"1","den":"0"}]})"),
                    ParseError);
    CHECK_THROWS_AS(read_pencil(R"({"nvars":1,"source_dim":2,"target_dim":1,"entries":[
        {"var":0,"row":0,"col":1,"num":"1","den":"1"},{"var":0,"row":0,"col":0,"num":"1","den":"1"}]})"),
                    ParseError);
    CHECK_THROWS_AS(read_pencil(R"({"nvars":1,"source_dim":1,"target_dim":1,"entries":[
        {"var":0,"row":0,"col":0,"num":"1.5","den":"1"}]})"),
                    ParseError);
    CHECK_THROWS_AS(read_pencil(R"({"nvars":1,"source_dim":1,"target_dim":1,"entries":[
        {"var":0,"row":0,"col":0,"num":1,"den":"1"}]})"),
                    ParseError);
}
