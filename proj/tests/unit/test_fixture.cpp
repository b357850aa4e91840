#include <doctest.h>

#include "eqp/fixture.hpp"
#include "eqp/rank.hpp"

using namespace eqp;

namespace {

void check_error(const std::string& text, std::size_t line, std::size_t column)
{
    try {
        parse_fixture(text, "t");
        FAIL("no error for: " << text);
    } catch (const ParseError& e) {
        CHECK_MESSAGE(e.line() == line, e.what());
        CHECK_MESSAGE(e.column() == column, e.what());
    }
}

}  // namespace

TEST_CASE("bundled fixtures")
{
    auto names = fixture_names();
    CHECK(names.size() == 3);
    auto gl = load_fixture("gl_2_21");
    CHECK(gl.orientation == Orientation::rows_source);
    CHECK(gl.display_rows == 6);
    CHECK(gl.display_cols == 8);
    CHECK(gl.pencil.target_dim == 8);
    CHECK(gl.pencil.source_dim == 6);
    CHECK(gl.pencil.nvars == 3);
    auto sp = load_fixture("sp6_psi");
    CHECK(sp.pencil.nvars == 6);
    CHECK(sp.pencil.source_dim == 14);
    auto spin = load_fixture("spin10_mdelta");
    CHECK(spin.pencil.nvars == 16);
    CHECK(spin.pencil.target_dim == 16);
    CHECK(spin.pencil.source_dim == 10);
    CHECK_THROWS_AS(load_fixture("missing"), std::invalid_argument);
}

TEST_CASE("fixture grammar")
{
    auto fx = parse_fixture("# c\nvars: x, y\nalias: t = -2*x + y\nrows: target\nx, 0\n-t, 3y - y\n");
    CHECK(fx.display_rows == 2);
    const auto& p = fx.pencil;
    auto m = p.evaluate({Rational(1), Rational(0)});
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == 2);
    auto n = p.evaluate({Rational(0), Rational(1)});
    CHECK(n(1, 0) == -1);
    CHECK(n(1, 1) == 2);
    auto src = parse_fixture("vars: x\nrows: source\nx, 0, 0\n");
    CHECK(src.pencil.target_dim == 3);
    CHECK(src.pencil.source_dim == 1);
    CHECK(transposed(src.pencil).target_dim == 1);
}

TEST_CASE("fixture parse errors carry line and column")
{
    check_error("vars: x\nx, y\n", 2, 4);
    check_error("vars: x\nx, x x\n", 2, 6);
    check_error("vars: x\nx, 1\n", 2, 4);
    check_error("x\n", 1, 1);
    check_error("vars: x\nx, 0\nx\n", 3, 1);
    check_error("vars: x, x\n", 1, 10);
    check_error("vars: x\nrows: sideways\n", 2, 7);
    check_error("vars: x\nx,\n", 2, 3);
}
