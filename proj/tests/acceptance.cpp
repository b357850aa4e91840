#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "eqp/catalog.hpp"

using namespace eqp;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool good, const std::string& what)
    {
        ok = ok && good;
        if (!good)
            lines.push_back(what);
    }
};

void run_entries(Outcome& out, const std::vector<std::string>& ids, const CatalogOptions& opt)
{
    for (auto& id : ids) {
        auto it = std::find_if(catalog().begin(), catalog().end(), [&](const CatalogEntry& e) { return e.id == id; });
        if (it == catalog().end()) {
            out.check(false, id + ": no such catalog entry");
            continue;
        }
        auto r = run_entry(*it, opt);
        out.check(r.status == Status::pass, id + ": " + to_string(r.status) + (r.error.empty() ? "" : " " + r.error));
        for (auto& c : r.checks)
            if (!c.ok)
                out.lines.push_back("  " + std::string(c.erratum ? "printed claim " : "") + c.name + ": expected " +
                                    c.expected + ", measured " + c.measured);
    }
}

double timed(const std::function<void()>& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
    const char* title;
    std::function<void(Outcome&, const CatalogOptions&)> run;
};

std::vector<Criterion> criteria()
{
    return {
        {"GL (2)->(2,1): sizes and constant rank (n^2+3n)/2 for n = 2..5, certified",
         [](Outcome& o, const CatalogOptions& opt) {
             double s = timed([&] { run_entries(o, {"gl-2-21-n2", "gl-2-21-n3", "gl-2-21-n4", "gl-2-21-n5"}, opt); });
             o.check(s < 10, "runtime " + std::to_string(s) + "s above 10s");
         }},
        {"GL (2,2)->(2,2,1), n = 3: 20x20 of constant rank 14, decomposition (6,14,6)",
         [](Outcome& o, const CatalogOptions& opt) { run_entries(o, {"gl-22-221-n3"}, opt); }},
        {"GL hook family: rank 11 at (a,b,n) = (1,1,3); rank formula for n <= 5, b <= 2",
         [](Outcome& o, const CatalogOptions& opt) { run_entries(o, {"gl-hook-a1-b1-n3", "gl-hook-formula"}, opt); }},
        {"rank criticality: Koszul and spin certified, (2)->(2,1) strictly larger with dim 18",
         [](Outcome& o, const CatalogOptions& opt) {
             run_entries(o, {"koszul-rnd", "spin-10-rnd", "gl-2-21-rnd"}, opt);
             auto p = build_gl_pencil({2}, {2, 1}, 3, {false});
             auto a = rnd(p, opt.prime, 400, opt.seed), b = rnd(p, opt.prime, 400, opt.seed);
             o.check(a.dim == b.dim && a.history == b.history && a.verdict == b.verdict, "rnd not deterministic");
             o.check(a.seed == opt.seed && a.prime == opt.prime, "rnd does not record seed and prime");
         }},
        {"Theta_X: closed-form rank for all r, a, b <= 4; rank depends only on rank X",
         [](Outcome& o, const CatalogOptions& opt) {
             double s = timed([&] { run_entries(o, {"theta-formula", "theta-rank-only"}, opt); });
             o.check(s < 30, "runtime " + std::to_string(s) + "s above 30s");
         }},
        {"Sp6 (1,1)->(1,1,1): constant rank 9, printed matrix rank 9, expanded Koszul rank 10",
         [](Outcome& o, const CatalogOptions& opt) {
             run_entries(o, {"sp-11-111-6", "sp-11-111-6-fixture", "sp-11-111-6-expanded"}, opt);
         }},
        {"SO (2)->(2,1): m = 3 constant rank 4 incl. isotropic points, kernel line, sizes for m = 3,4,5",
         [](Outcome& o, const CatalogOptions& opt) {
             run_entries(o, {"so-2-21-m3", "so-2-21-m4", "so-2-21-m5", "so-2-21-kernel-line"}, opt);
         }},
        {"SO (3,1,1)->(3,2,1): corank C(m-1,3)+C(m-1,2) at m = 5,6",
         [](Outcome& o, const CatalogOptions& opt) { run_entries(o, {"so-311-321-m5", "so-311-321-m6"}, opt); }},
        {"Spin(10): rank 9 / kernel 1, rank 5 at e_0, kernel vector and a(delta), pure spinors",
         [](Outcome& o, const CatalogOptions& opt) { run_entries(o, {"spin-10-psi", "spin-10-kernel"}, opt); }},
        {"L3 C^7 rank 34, L3 C^8 rank <= 55, hyperplane criterion (true, 40)",
         [](Outcome& o, const CatalogOptions& opt) {
             run_entries(o, {"adjoint-wedge3-7", "adjoint-wedge3-8", "wedge2-hyperplane"}, opt);
         }},
        {"Koszul flattening of (2)->(2,1), v = 3: rank 18, border rank >= 9",
         [](Outcome& o, const CatalogOptions& opt) { run_entries(o, {"gl-2-21-flattening"}, opt); }},
        {"dimension bookkeeping: 14, 19404, 20790, 66, 352, 364, C(2n,n-4)",
         [](Outcome& o, const CatalogOptions& opt) {
             run_entries(o, {"spin-dims", "wedge2-lagrangian-p5"}, opt);
             auto sp14 = weyl_dim(GroupSpec::sp(6), Partition{1, 1});
             o.check(sp14 == 14, "Sp6 (1,1): " + sp14.get_str());
         }},
    };
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int only = 0;
    bool verbose = false;
    CatalogOptions opt;
    opt.max_ambient = UINT64_MAX;
    app.add_option("--criterion", only, "run a single criterion (1-12)");
    app.add_option("--seed", opt.seed)->capture_default_str();
    app.add_flag("-v,--verbose", verbose);
    CLI11_PARSE(app, argc, argv);

    auto all = criteria();
    if (only < 0 || only > static_cast<int>(all.size())) {
        std::cerr << "criterion must be in 1.." << all.size() << "\n";
        return 2;
    }
    bool good = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only)
            continue;
        Outcome o;
        double s = 0;
        try {
            s = timed([&] { all[i].run(o, opt); });
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        good = good && o.ok;
        std::printf("%s criterion %zu: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1, all[i].title, s);
        if (!o.ok || verbose)
            for (auto& l : o.lines)
                std::printf("    %s\n", l.c_str());
    }
    return good ? 0 : 1;
}
