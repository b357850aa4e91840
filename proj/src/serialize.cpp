#include "eqp/serialize.hpp"

#include <algorithm>
#include <tuple>

namespace eqp {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const std::string& source)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(source, 0, 0, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, 0, 0, std::string("field '") + key + "': " + e.what());
    }
}

Integer parse_integer(const std::string& s, const std::string& source)
{
    Integer z;
    std::string t = !s.empty() && s[0] == '+' ? s.substr(1) : s;
    if (t.empty() || z.set_str(t, 10) != 0)
        throw ParseError(source, 0, 0, "'" + s + "' is not a decimal integer");
    return z;
}

}  // namespace

Json spec_to_json(const BuildSpec& s)
{
    Json j;
    j["kind"] = to_string(s.kind);
    j["mu"] = s.mu.str();
    j["nu"] = s.nu.str();
    j["dim"] = s.dim;
    j["k"] = s.k;
    return j;
}

BuildSpec spec_from_json(const Json& j)
{
    BuildSpec s;
    s.kind = pencil_kind_from_string(j.at("kind").get<std::string>());
    s.mu = Partition::parse(j.at("mu").get<std::string>());
    s.nu = Partition::parse(j.at("nu").get<std::string>());
    s.dim = j.at("dim").get<int>();
    s.k = j.at("k").get<int>();
    return s;
}

Json pencil_to_json(const Pencil& p)
{
    p.validate();
    Json j;
    j["nvars"] = p.nvars;
    j["source_dim"] = p.source_dim;
    j["target_dim"] = p.target_dim;
    j["var_labels"] = p.var_labels;
    Json entries = Json::array();
    for (std::size_t v = 0; v < p.nvars; ++v)
        for (std::size_t r = 0; r < p.target_dim; ++r)
            for (auto& [c, x] : p.coeffs[v].row(r)) {
                Rational q(x, p.denominator);
                q.canonicalize();
                Json e;
                e["var"] = v;
                e["row"] = r;
                e["col"] = c;
                e["num"] = q.get_num().get_str();
                e["den"] = q.get_den().get_str();
                entries.push_back(std::move(e));
            }
    j["entries"] = std::move(entries);
    if (p.kind != PencilKind::generic) {
        Json s;
        s["kind"] = to_string(p.kind);
        s["natural_dim"] = p.natural_dim;
        s["source_label"] = p.source_label;
        s["target_label"] = p.target_label;
        if (p.spec)
            s["spec"] = spec_to_json(*p.spec);
        j["structure"] = std::move(s);
    }
    return j;
}

Pencil pencil_from_json(const Json& j, const std::string& source)
{
    const auto nvars = get_field<std::size_t>(j, "nvars", source);
    const auto source_dim = get_field<std::size_t>(j, "source_dim", source);
    const auto target_dim = get_field<std::size_t>(j, "target_dim", source);
    auto labels = j.contains("var_labels") ? get_field<std::vector<std::string>>(j, "var_labels", source)
                                           : std::vector<std::string>{};
    if (!labels.empty() && labels.size() != nvars)
        throw ParseError(source, 0, 0, "var_labels has " + std::to_string(labels.size()) + " names for " +
                                           std::to_string(nvars) + " variables");
    const Json& entries = j.contains("entries") ? j.at("entries") : Json::array();
    if (!entries.is_array())
        throw ParseError(source, 0, 0, "entries must be an array");
    std::vector<SparseMatrix<Rational>> mats(nvars, SparseMatrix<Rational>(target_dim, source_dim));
    std::tuple<std::size_t, std::size_t, std::size_t> last{};
    bool first = true;
    for (std::size_t n = 0; n < entries.size(); ++n) {
        const auto& e = entries[n];
        std::string where = source + " entry " + std::to_string(n);
        auto v = get_field<std::size_t>(e, "var", where);
        auto r = get_field<std::size_t>(e, "row", where);
        auto c = get_field<std::size_t>(e, "col", where);
        if (v >= nvars || r >= target_dim || c >= source_dim)
            throw ParseError(where, 0, 0, "index out of range");
        std::tuple key{v, r, c};
        if (!first && key <= last)
            throw ParseError(where, 0, 0, "entries not strictly sorted by (var,row,col)");
        first = false;
        last = key;
        Integer num = parse_integer(get_field<std::string>(e, "num", where), where);
        Integer den = parse_integer(get_field<std::string>(e, "den", where), where);
        if (den <= 0)
            throw ParseError(where, 0, 0, "denominator must be positive");
        Rational q(num, den);
        q.canonicalize();
        mats[v].set(r, c, q);
    }
    Pencil p = Pencil::from_rational(mats, target_dim, source_dim);
    p.var_labels = std::move(labels);
    if (j.contains("structure")) {
        const auto& s = j.at("structure");
        try {
            p.kind = pencil_kind_from_string(s.at("kind").get<std::string>());
            p.natural_dim = s.value("natural_dim", 0);
            p.source_label = s.value("source_label", "");
            p.target_label = s.value("target_label", "");
            if (s.contains("spec"))
                p.spec = spec_from_json(s.at("spec"));
        } catch (const std::exception& e) {
            throw ParseError(source, 0, 0, std::string("structure: ") + e.what());
        }
    }
    return p;
}

std::string write_pencil(const Pencil& p) { return pencil_to_json(p).dump(2) + "\n"; }

Pencil read_pencil(std::string_view text, const std::string& source)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offsets are the only position nlohmann reports
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source, line, col, "invalid JSON");
    }
    return pencil_from_json(j, source);
}

Json report_to_json(const RankReport& r)
{
    Json j;
    j["generic_rank"] = r.generic_rank;
    j["source_dim"] = r.source_dim;
    j["target_dim"] = r.target_dim;
    j["verdict"] = to_string(r.verdict);
    j["method"] = to_string(r.method);
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["points"] = r.points;
    j["certificate"] = r.certificate;
    Json strata = Json::array();
    for (auto& s : r.strata) {
        Json e;
        e["rank"] = s.rank;
        e["point_class"] = to_string(s.point_class);
        e["count"] = s.count;
        e["witness"] = s.witness;
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
    if (r.predicted) {
        Json d;
        d["kernel_dim"] = r.predicted->kernel_dim.get_str();
        d["image_dim"] = r.predicted->image_dim.get_str();
        d["cokernel_dim"] = r.predicted->cokernel_dim.get_str();
        Json terms = Json::array();
        for (auto& t : r.predicted->terms) {
            Json e;
            e["alpha"] = t.alpha.str();
            e["k"] = t.k;
            e["dim"] = t.dim.get_str();
            e["part"] = t.part;
            terms.push_back(std::move(e));
        }
        d["terms"] = std::move(terms);
        j["predicted"] = std::move(d);
    }
    return j;
}

RankReport report_from_json(const Json& j)
{
    const std::string src = "<report>";
    RankReport r;
    r.generic_rank = get_field<std::size_t>(j, "generic_rank", src);
    r.source_dim = get_field<std::size_t>(j, "source_dim", src);
    r.target_dim = get_field<std::size_t>(j, "target_dim", src);
    r.verdict = verdict_from_string(get_field<std::string>(j, "verdict", src));
    r.method = method_from_string(get_field<std::string>(j, "method", src));
    r.prime = get_field<std::uint32_t>(j, "prime", src);
    r.seed = get_field<std::uint64_t>(j, "seed", src);
    r.trials = get_field<std::size_t>(j, "trials", src);
    r.points = get_field<std::size_t>(j, "points", src);
    r.certificate = get_field<std::string>(j, "certificate", src);
    for (auto& e : j.at("strata"))
        r.strata.push_back({get_field<std::size_t>(e, "rank", src), get_field<std::vector<std::uint32_t>>(e, "witness", src),
                            point_class_from_string(get_field<std::string>(e, "point_class", src)),
                            get_field<std::size_t>(e, "count", src)});
    if (j.contains("predicted")) {
        const auto& d = j.at("predicted");
        PredictedDecomposition p;
        p.kernel_dim = parse_integer(get_field<std::string>(d, "kernel_dim", src), src);
        p.image_dim = parse_integer(get_field<std::string>(d, "image_dim", src), src);
        p.cokernel_dim = parse_integer(get_field<std::string>(d, "cokernel_dim", src), src);
        for (auto& e : d.at("terms"))
            p.terms.push_back({Partition::parse(get_field<std::string>(e, "alpha", src)), get_field<int>(e, "k", src),
                               parse_integer(get_field<std::string>(e, "dim", src), src),
                               get_field<std::string>(e, "part", src)});
        r.predicted = std::move(p);
    }
    return r;
}

}  // namespace eqp
