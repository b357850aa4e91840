#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eqp/catalog.hpp"
#include "eqp/fixture.hpp"
#include "eqp/serialize.hpp"

namespace {

using namespace eqp;

enum Exit { ok = 0, expectation = 1, usage = 2, parse = 3 };

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot write '" + out + "'");
    f << text;
}

Pencil load_pencil(const std::string& path)
{
    if (path.rfind("fixture:", 0) == 0)
        return load_fixture(path.substr(8)).pencil;
    return read_pencil(read_file(path), path);
}

struct BuildArgs {
    std::string group;
    std::string mu, nu;
    int n = 0, N = 0, m = 0, a = 0, k = -1;
    std::string out;
};

Pencil build(const BuildArgs& b)
{
    auto need = [&](int x, const char* flag) {
        if (x <= 0)
            throw ShapeError("build " + b.group + " needs " + flag);
        return x;
    };
    auto one_box = [&](int dim) {
        if (b.mu.empty() || b.nu.empty())
            throw ShapeError("build " + b.group + " needs --mu and --nu");
        auto mu = Partition::parse(b.mu), nu = Partition::parse(b.nu);
        if (!one_box_difference(mu, nu))
            throw ShapeError("(" + nu.str() + ") is not (" + mu.str() + ") plus one box");
        (void)dim;
        return std::pair{mu, nu};
    };
    if (b.group == "gl") {
        int n = need(b.n, "--n");
        auto [mu, nu] = one_box(n);
        if (nu.length() > n + 1)
            throw ShapeError("(" + nu.str() + ") has more than v = n+1 rows");
        return build_gl_pencil(mu, nu, n + 1);
    }
    if (b.group == "sp") {
        int N = need(b.N, "--N");
        if (N % 2)
            throw ShapeError("--N must be even");
        auto [mu, nu] = one_box(N);
        if (nu.length() > N / 2)
            throw ShapeError("(" + nu.str() + ") has more than N/2 rows");
        return build_sp_pencil(mu, nu, N);
    }
    if (b.group == "so") {
        int m = need(b.m, "--m");
        auto [mu, nu] = one_box(m);
        return build_so_pencil(mu, nu, m);
    }
    if (b.group == "spin")
        return build_spin_pencil(need(b.n, "--n"));
    if (b.group == "koszul") {
        int v = need(b.n, "--n");
        if (b.k < 0 || b.k >= v)
            throw ShapeError("koszul needs 0 <= --k < --n");
        return build_koszul_pencil(b.k, v);
    }
    if (b.group == "adjoint")
        return build_adjoint_pencil(need(b.a, "--a"));
    throw ShapeError("unknown group '" + b.group + "'");
}

std::string report_text(const RankReport& r)
{
    std::ostringstream o;
    o << "verdict " << to_string(r.verdict) << "\n";
    o << "generic_rank " << r.generic_rank << " (" << r.target_dim << "x" << r.source_dim << ")\n";
    o << "method " << to_string(r.method) << " prime " << r.prime << " seed " << r.seed << " trials " << r.trials
      << " points " << r.points << "\n";
    if (!r.certificate.empty())
        o << "certificate " << r.certificate << "\n";
    for (auto& s : r.strata)
        o << "stratum rank " << s.rank << " " << to_string(s.point_class) << " x" << s.count << "\n";
    if (r.predicted)
        o << "predicted kernel " << r.predicted->kernel_dim << " image " << r.predicted->image_dim << " cokernel "
          << r.predicted->cokernel_dim << "\n";
    return o.str();
}

Json result_json(const EntryResult& r)
{
    Json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["seconds"] = r.seconds;
    if (!r.error.empty())
        j["error"] = r.error;
    Json checks = Json::array();
    for (auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["expected"] = c.expected;
        e["measured"] = c.measured;
        e["ok"] = c.ok;
        if (c.erratum)
            e["printed"] = true;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant pencils of constant and bounded rank"};
    app.require_subcommand(1);

    std::uint32_t prime = default_prime;
    std::size_t trials = 200;
    std::uint64_t seed = 0, budget = 1000000;
    std::string format = "json";
    auto common = [&](CLI::App* c) {
        c->add_option("--prime", prime, "prime field for modular ranks")->capture_default_str();
        c->add_option("--trials", trials, "random points")->capture_default_str();
        c->add_option("--seed", seed, "random seed")->capture_default_str();
        c->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    };

    BuildArgs b;
    auto* cb = app.add_subcommand("build", "construct an equivariant pencil and write it as JSON");
    cb->add_option("group", b.group, "gl, sp, so, spin, koszul or adjoint")->required();
    cb->add_option("--mu", b.mu, "source partition, e.g. 2,1");
    cb->add_option("--nu", b.nu, "target partition");
    cb->add_option("--n", b.n, "gl: v = n+1; spin: n; koszul: v");
    cb->add_option("--N", b.N, "sp: dimension 2n of the symplectic space");
    cb->add_option("--m", b.m, "so: dimension m of the quadratic space");
    cb->add_option("--a", b.a, "adjoint: the pencil of Lambda^3 C^a");
    cb->add_option("--k", b.k, "koszul: exterior degree");
    cb->add_option("--out", b.out, "output file (default stdout)");

    std::string vfile, vmode = "sampled";
    long expect_rank = -1;
    std::string expect_verdict;
    auto* cv = app.add_subcommand("verify", "constant-rank verdict for a pencil file (or fixture:NAME)");
    cv->add_option("file", vfile)->required();
    cv->add_option("--mode", vmode)->check(CLI::IsMember({"sampled", "exhaustive", "transitivity"}))->capture_default_str();
    cv->add_option("--budget", budget, "maximum number of exhaustive points")->capture_default_str();
    cv->add_option("--expect-rank", expect_rank, "exit 1 unless the generic rank equals this");
    cv->add_option("--expect-verdict", expect_verdict, "exit 1 unless the verdict equals this");
    common(cv);

    std::string rfile;
    std::size_t max_samples = 400;
    auto* cr = app.add_subcommand("rnd", "rank neutral directions of a pencil file");
    cr->add_option("file", rfile)->required();
    cr->add_option("--max-samples", max_samples)->capture_default_str();
    common(cr);

    std::string filter;
    std::uint64_t max_ambient = 4096;
    unsigned threads = 0;
    bool verbose = false, list = false;
    auto* cc = app.add_subcommand("catalog", "run the catalog of examples");
    cc->add_option("--filter", filter, "glob on entry ids");
    cc->add_option("--max-ambient", max_ambient, "skip entries above this tensor dimension")->capture_default_str();
    cc->add_option("--threads", threads, "worker threads (0: all cores)");
    cc->add_flag("-v,--verbose", verbose, "print every check");
    cc->add_flag("--list", list, "list entries and exit");
    common(cc);
    format = "text";

    std::string fname, fout;
    bool transpose = false;
    auto* cf = app.add_subcommand("fixture", "convert a bundled printed matrix to a pencil file");
    cf->add_option("name", fname, "fixture name; 'list' prints the names")->required();
    cf->add_option("--out", fout);
    cf->add_flag("--transpose", transpose, "swap the roles of rows and columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Exit::ok : Exit::usage;
    }
    if (cv->parsed() && !cv->count("--format"))
        format = "json";
    if (cr->parsed() && !cr->count("--format"))
        format = "json";

    try {
        if (cb->parsed()) {
            emit(write_pencil(build(b)), b.out);
            return Exit::ok;
        }
        if (cv->parsed()) {
            Pencil p = load_pencil(vfile);
            VerdictMode mode = vmode == "exhaustive"     ? VerdictMode::exhaustive(prime, budget)
                               : vmode == "transitivity" ? VerdictMode::transitivity(prime)
                                                         : VerdictMode::sampled(prime, trials, seed);
            if (vmode == "transitivity" && !p.certificate.valid && !recertify(p))
                throw UnsupportedMode("the file does not rebuild to a certified equivariant pencil");
            auto r = constant_rank_verdict(p, mode);
            std::cout << (format == "json" ? report_to_json(r).dump(2) + "\n" : report_text(r));
            bool good = true;
            if (expect_rank >= 0 && r.generic_rank != static_cast<std::size_t>(expect_rank))
                good = false;
            if (!expect_verdict.empty() && to_string(r.verdict) != expect_verdict)
                good = false;
            return good ? Exit::ok : Exit::expectation;
        }
        if (cr->parsed()) {
            auto r = rnd(load_pencil(rfile), prime, max_samples, seed);
            if (format == "json") {
                Json j;
                j["verdict"] = to_string(r.verdict);
                j["dim"] = r.dim;
                j["pencil_span"] = r.pencil_span;
                j["generic_rank"] = r.generic_rank;
                j["samples"] = r.samples;
                j["history"] = r.history;
                j["prime"] = r.prime;
                j["seed"] = r.seed;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "verdict " << to_string(r.verdict) << "\ndim " << r.dim << " (pencil span " << r.pencil_span
                          << ")\nsamples " << r.samples << " prime " << r.prime << " seed " << r.seed << "\n";
            }
            return Exit::ok;
        }
        if (cc->parsed()) {
            if (list) {
                for (auto& e : catalog())
                    if (filter.empty() || glob_match(filter, e.id))
                        std::cout << std::left << std::setw(24) << e.id << " " << e.claim << "\n";
                return Exit::ok;
            }
            CatalogOptions opt;
            opt.prime = prime;
            opt.seed = seed;
            opt.trials = trials;
            opt.max_ambient = max_ambient;
            opt.threads = threads;
            auto results = run_catalog(filter, opt);
            if (results.empty()) {
                std::cerr << "no catalog entry matches '" << filter << "'\n";
                return Exit::usage;
            }
            bool good = true;
            Json all = Json::array();
            for (auto& r : results) {
                good = good && (r.status == Status::pass || r.status == Status::skipped);
                if (format == "json") {
                    all.push_back(result_json(r));
                    continue;
                }
                std::cout << std::left << std::setw(8) << to_string(r.status) << std::setw(24) << r.id << std::right
                          << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s";
                if (!r.error.empty())
                    std::cout << "  " << r.error;
                std::cout << "\n";
                for (auto& c : r.checks) {
                    if (!verbose && c.ok)
                        continue;
                    std::cout << "    " << (c.ok ? "ok  " : c.erratum ? "MISPRINT? " : "FAIL ") << c.name
                              << ": expected " << c.expected << ", measured " << c.measured << "\n";
                }
            }
            if (format == "json") {
                Json j;
                j["prime"] = prime;
                j["seed"] = seed;
                j["trials"] = trials;
                j["results"] = std::move(all);
                std::cout << j.dump(2) << "\n";
            }
            return good ? Exit::ok : Exit::expectation;
        }
        if (cf->parsed()) {
            if (fname == "list") {
                for (auto& n : fixture_names())
                    std::cout << n << "\n";
                return Exit::ok;
            }
            auto fx = load_fixture(fname);
            emit(write_pencil(transpose ? transposed(fx.pencil) : fx.pencil), fout);
            return Exit::ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::parse;
    } catch (const UnsupportedMode& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return Exit::usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::expectation;
    }
    return Exit::usage;
}
