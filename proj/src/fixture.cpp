#include "eqp/fixture.hpp"

#include <cctype>
#include <map>

#include "eqp_fixtures.hpp"

namespace eqp {

std::string to_string(Orientation o) { return o == Orientation::rows_source ? "source" : "target"; }

namespace {

// A linear form in the fixture variables.
using Linear = std::map<std::size_t, Integer>;

struct Parser {
    explicit Parser(const std::string& s) : source(s) {}

    const std::string& source;
    std::size_t line = 0;

    std::vector<std::string> vars;
    std::map<std::string, std::size_t> var_index;
    std::map<std::string, Linear> aliases;

    [[noreturn]] void fail(std::size_t col, const std::string& what) const { throw ParseError(source, line, col, what); }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    // pos is an offset into text; base is the column of text[0].
    void skip(std::string_view text, std::size_t& pos) const
    {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    std::string ident(std::string_view text, std::size_t& pos, std::size_t base) const
    {
        skip(text, pos);
        if (pos >= text.size() || !ident_start(text[pos]))
            fail(base + pos, "expected a name");
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos]))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    // entry := [sign] term (sign term)* ; term := int | [int ['*']] name
    Linear linear(std::string_view text, std::size_t base) const
    {
        Linear out;
        std::size_t pos = 0;
        bool first = true;
        skip(text, pos);
        if (pos >= text.size())
            fail(base + pos, "empty entry");
        while (true) {
            skip(text, pos);
            if (pos >= text.size())
                break;
            int sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
                skip(text, pos);
            } else if (!first) {
                fail(base + pos, "expected '+' or '-'");
            }
            first = false;
            std::size_t term_col = base + pos;
            Integer coeff = 1;
            bool has_number = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                coeff = Integer(std::string(text.substr(start, pos - start)));
                has_number = true;
                skip(text, pos);
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip(text, pos);
                }
            }
            if (pos < text.size() && ident_start(text[pos])) {
                std::size_t name_col = base + pos;
                std::string name = ident(text, pos, base);
                coeff *= sign;
                if (auto it = var_index.find(name); it != var_index.end()) {
                    out[it->second] += coeff;
                } else if (auto a = aliases.find(name); a != aliases.end()) {
                    for (auto& [i, c] : a->second)
                        out[i] += coeff * c;
                } else {
                    fail(name_col, "unknown variable '" + name + "'");
                }
            } else if (!has_number) {
                fail(term_col, "expected a number or a variable");
            } else if (coeff != 0) {
                fail(term_col, "nonzero constant term");
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }
};

std::string_view trim(std::string_view s, std::size_t& offset)
{
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    offset += b;
    return s.substr(b, e - b);
}

bool header(std::string_view line, std::string_view key, std::string_view& rest, std::size_t& offset)
{
    if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ':')
        return false;
    offset += key.size() + 1;
    rest = line.substr(key.size() + 1);
    return true;
}

}  // namespace

Fixture parse_fixture(std::string_view text, const std::string& source)
{
    Parser ps(source);
    Fixture fx;
    fx.name = source;
    bool have_vars = false;
    bool have_rows = false;
    std::vector<std::vector<Linear>> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++ps.line;
        if (auto h = raw.find('#'); h != std::string_view::npos)
            raw = raw.substr(0, h);
        std::size_t col = 1;
        std::string_view body = trim(raw, col);
        if (body.empty())
            continue;
        std::string_view rest;
        std::size_t rcol = col;
        if (header(body, "vars", rest, rcol)) {
            if (have_vars)
                ps.fail(col, "duplicate vars header");
            std::size_t p = 0;
            while (true) {
                std::string name = ps.ident(rest, p, rcol);
                if (ps.var_index.count(name))
                    ps.fail(rcol + p - name.size(), "duplicate variable '" + name + "'");
                ps.var_index[name] = ps.vars.size();
                ps.vars.push_back(name);
                ps.skip(rest, p);
                if (p >= rest.size())
                    break;
                if (rest[p] != ',')
                    ps.fail(rcol + p, "expected ','");
                ++p;
            }
            have_vars = true;
        } else if (header(body, "alias", rest, rcol)) {
            if (!have_vars)
                ps.fail(col, "alias before vars header");
            std::size_t p = 0;
            std::string name = ps.ident(rest, p, rcol);
            if (ps.var_index.count(name) || ps.aliases.count(name))
                ps.fail(rcol + p - name.size(), "name '" + name + "' already defined");
            ps.skip(rest, p);
            if (p >= rest.size() || rest[p] != '=')
                ps.fail(rcol + p, "expected '='");
            ++p;
            ps.aliases[name] = ps.linear(rest.substr(p), rcol + p);
        } else if (header(body, "rows", rest, rcol)) {
            std::size_t c = rcol;
            auto v = trim(rest, c);
            if (v == "target")
                fx.orientation = Orientation::rows_target;
            else if (v == "source")
                fx.orientation = Orientation::rows_source;
            else
                ps.fail(c, "rows must be 'target' or 'source'");
            if (have_rows)
                ps.fail(col, "rows header after matrix rows");
        } else {
            if (!have_vars)
                ps.fail(col, "matrix row before vars header");
            have_rows = true;
            std::vector<Linear> row;
            std::size_t p = 0;
            while (true) {
                std::size_t comma = body.find(',', p);
                std::size_t stop = comma == std::string_view::npos ? body.size() : comma;
                row.push_back(ps.linear(body.substr(p, stop - p), col + p));
                if (comma == std::string_view::npos)
                    break;
                p = comma + 1;
            }
            if (!grid.empty() && row.size() != grid.front().size())
                ps.fail(col, "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(grid.front().size()));
            grid.push_back(std::move(row));
        }
    }
    ps.line = 0;
    if (!have_vars)
        ps.fail(0, "missing vars header");
    if (grid.empty())
        ps.fail(0, "no matrix rows");

    fx.display_rows = grid.size();
    fx.display_cols = grid.front().size();
    const bool flip = fx.orientation == Orientation::rows_source;
    const std::size_t target = flip ? fx.display_cols : fx.display_rows;
    const std::size_t src = flip ? fx.display_rows : fx.display_cols;
    std::vector<SparseMatrix<Rational>> mats(ps.vars.size(), SparseMatrix<Rational>(target, src));
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            for (auto& [i, v] : grid[r][c]) {
                if (flip)
                    mats[i].set(c, r, Rational(v));
                else
                    mats[i].set(r, c, Rational(v));
            }
    fx.pencil = Pencil::from_rational(mats, target, src);
    fx.pencil.var_labels = ps.vars;
    fx.pencil.kind = PencilKind::fixture;
    fx.pencil.source_label = source + ":source";
    fx.pencil.target_label = source + ":target";
    return fx;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (auto& [name, text] : embedded_fixtures)
        out.emplace_back(name);
    return out;
}

std::string_view fixture_text(const std::string& name)
{
    for (auto& [n, text] : embedded_fixtures)
        if (n == name)
            return text;
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

Fixture load_fixture(const std::string& name) { return parse_fixture(fixture_text(name), name); }

Pencil transposed(const Pencil& p)
{
    Pencil t = p;
    std::swap(t.source_dim, t.target_dim);
    std::swap(t.source_label, t.target_label);
    for (auto& m : t.coeffs)
        m = m.transpose();
    t.certificate = {};
    t.spec.reset();
    return t;
}

}  // namespace eqp
