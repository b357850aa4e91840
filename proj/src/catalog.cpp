#include "eqp/catalog.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <random>
#include <thread>

namespace eqp {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::erratum: return "ERRATUM";
    case Status::skipped: return "SKIP";
    case Status::error: return "ERROR";
    }
    return "ERROR";
}

bool Checker::expect(const std::string& name, const std::string& expected, const std::string& measured, bool ok)
{
    checks_.push_back({name, expected, measured, ok, false});
    return ok;
}

void Checker::note(const std::string& name, const std::string& measured)
{
    checks_.push_back({name, "(reported)", measured, true, false});
}

bool glob_match(const std::string& pattern, const std::string& text)
{
    return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

TensorVector so_kernel_line(const std::vector<Rational>& v)
{
    const int m = static_cast<int>(v.size());
    TensorSpace W2(m, 2);
    Rational q = 0;
    for (auto& x : v)
        q += x * x;
    TensorVector t;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            add_to(t, W2.encode({i, j}), v[i] * v[j]);
    for (int i = 0; i < m; ++i)
        add_to(t, W2.encode({i, i}), -q / m);
    return t;
}

std::vector<std::uint32_t> spin_h_vector(const PrimeField& f, const std::vector<std::uint32_t>& delta, bool printed)
{
    const int n = 5;
    const auto& sp = spin_space(n);
    auto d = embed_spinor(f, sp.plus, FVector<PrimeField>(delta.begin(), delta.end()));
    auto two = [&](int i, int j) { return d[(1u << i) | (1u << j)]; };
    std::vector<std::uint32_t> theta(n);
    for (int m = 0; m < n; ++m) {
        auto c = d[31u ^ (1u << m)];
        theta[m] = m % 2 ? f.neg(c) : c;
    }
    std::vector<std::uint32_t> h(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            h[i] = f.add(h[i], f.mul(two(i, j), theta[j]));
        for (int j = 0; j < i; ++j)
            h[i] = f.sub(h[i], f.mul(two(j, i), theta[j]));
    }
    for (int i = 0; i < n; ++i) {
        int r[4], k = 0;
        for (int j = 0; j < n; ++j)
            if (j != i)
                r[k++] = j;
        auto pf = f.add(f.sub(f.mul(two(r[0], r[1]), two(r[2], r[3])), f.mul(two(r[0], r[2]), two(r[1], r[3]))),
                        f.mul(two(r[0], r[3]), two(r[1], r[2])));
        auto s = f.mul(d[0], theta[i]);
        bool plus = printed || i % 2;
        h[n + i] = plus ? f.add(s, pf) : f.sub(s, pf);
    }
    return h;
}

Matrix<Rational> rank_representative(int a, int b, int r)
{
    Matrix<Rational> X(a, b);
    for (int i = 0; i < r; ++i)
        X(i, i) = 1;
    return X;
}

namespace {

std::string s(std::size_t x) { return std::to_string(x); }

BuildOptions no_cert()
{
    BuildOptions o;
    o.certify = false;
    return o;
}

bool box_in_first_row(const Partition& mu, const Partition& nu)
{
    BoxPosition b;
    one_box_difference(mu, nu, &b);
    return b.row == 1;
}

std::size_t kernel_dim(const Pencil& p, std::size_t rank) { return p.source_dim - rank; }

bool is_zero_vector(const std::vector<std::uint32_t>& v)
{
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::uint32_t> mat_vec(const PrimeField& f, const Matrix<std::uint32_t>& M, const std::vector<std::uint32_t>& x)
{
    return apply(f, M, x);
}

// ranks at random points, as (min, max)
std::pair<std::size_t, std::size_t> rank_range(const Pencil& p, const PrimeField& f, std::size_t count, std::mt19937_64& rng)
{
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::size_t t = 0; t < count; ++t) {
        auto r = rank_at(p, f, random_point(f, p.nvars, rng));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

std::size_t stratum_ranks(const RankReport& r, std::size_t* lo)
{
    std::size_t hi = 0;
    *lo = SIZE_MAX;
    for (auto& s : r.strata) {
        hi = std::max(hi, s.rank);
        *lo = std::min(*lo, s.rank);
    }
    return hi;
}

std::string strata_str(const RankReport& r)
{
    std::string out;
    for (auto& s : r.strata) {
        if (!out.empty())
            out += " ";
        out += s.rank == SIZE_MAX ? "?" : std::to_string(s.rank);
        out += "@" + to_string(s.point_class) + "x" + std::to_string(s.count);
    }
    return out;
}

void check_transitivity(Checker& c, const Pencil& p, std::size_t rank)
{
    auto r = constant_rank_verdict(p, VerdictMode::transitivity(c.options().prime));
    c.expect("transitivity verdict", "constant " + s(rank), to_string(r.verdict) + " " + s(r.generic_rank),
             r.verdict == Verdict::constant && r.generic_rank == rank);
}

void check_exhaustive(Checker& c, const Pencil& p, std::uint32_t q, std::size_t rank)
{
    auto r = constant_rank_verdict(p, VerdictMode::exhaustive(q));
    c.expect("exhaustive over F_" + std::to_string(q) + " (" + s(r.points) + " points)", "constant " + s(rank),
             to_string(r.verdict) + " " + strata_str(r), r.verdict == Verdict::constant && r.generic_rank == rank);
}

// ---- GL ----

void gl_2_21(Checker& c, int n)
{
    const int v = n + 1;
    auto p = build_gl_pencil({2}, {2, 1}, v);
    auto fs = family_sizes(Family::GL_2_21, {n});
    c.expect_eq("source dim (n+2)(n+1)/2", Integer((n + 2) * (n + 1) / 2), Integer(p.source_dim));
    c.expect_eq("target dim n(n+1)(n+2)/3", Integer(n * (n + 1) * (n + 2) / 3), Integer(p.target_dim));
    c.expect_eq("family source", fs.source, Integer(p.source_dim));
    c.expect_eq("family target", fs.target, Integer(p.target_dim));
    const std::size_t r = (n * n + 3 * n) / 2;
    c.expect_eq("family rank (n^2+3n)/2", fs.rank, Integer(r));
    c.expect_eq("certificate", GroupSpec::gl(v).str(), p.certificate.valid ? p.certificate.group : std::string("none"));
    check_transitivity(c, p, r);
    if (n <= 3)
        check_exhaustive(c, p, 3, r);
    if (n == 2)
        check_exhaustive(c, p, 5, r);
    auto d = predict_gl_decomposition({2}, {2, 1}, v);
    c.expect_eq("predicted image", Integer(r), d.image_dim);
    c.expect_eq("predicted kernel", Integer(1), d.kernel_dim);
}

void gl_2_21_rnd(Checker& c)
{
    auto p = build_gl_pencil({2}, {2, 1}, 3);
    auto r = rnd(p, c.options().prime, 400, c.options().seed);
    Integer extra = gl_dim(Partition({2, 0, -1}), 3);
    c.expect_eq("weight (2,0,-1) module dim", Integer(15), extra);
    c.expect_eq("rnd verdict", std::string("strictly-larger"), to_string(r.verdict));
    c.expect_eq("dim RND = 3 + 15", Integer(3) + extra, Integer(r.dim));
    c.expect_eq("pencil span", std::size_t{3}, r.pencil_span);
    c.note("samples / seed", s(r.samples) + " / " + std::to_string(r.seed));
}

void gl_2_21_flattening(Checker& c)
{
    const int v = 3;
    auto f = koszul_flattening_rank({2}, {2, 1}, v);
    c.expect_eq("flattening rank", std::size_t{18}, f);
    c.expect_eq("flattening source dim v*dim S_2", std::size_t{18}, std::size_t{3 * 6});
    c.expect_eq("border rank bound ceil(rank/(v-1))", std::size_t{9}, (f + v - 2) / (v - 1));
}

void gl_2_21_fixture(Checker& c)
{
    auto fx = load_fixture("gl_2_21");
    c.expect_eq("display rows", std::size_t{6}, fx.display_rows);
    c.expect_eq("display cols", std::size_t{8}, fx.display_cols);
    c.expect_eq("orientation", std::string("source"), to_string(fx.orientation));
    c.expect_eq("pencil target x source", std::string("8x6"), s(fx.pencil.target_dim) + "x" + s(fx.pencil.source_dim));
    auto ex = constant_rank_verdict(fx.pencil, VerdictMode::exhaustive(5));
    c.printed_eq("printed matrix constant rank 5 over F_5", std::string("constant 5"),
                 to_string(ex.verdict) + " " + s(ex.generic_rank));
    auto tr = constant_rank_verdict(transposed(fx.pencil), VerdictMode::exhaustive(5));
    c.printed_eq("other orientation constant rank 5 over F_5", std::string("constant 5"),
                 to_string(tr.verdict) + " " + s(tr.generic_rank));
    auto built = constant_rank_verdict(build_gl_pencil({2}, {2, 1}, 3, no_cert()), VerdictMode::exhaustive(5));
    auto hist = [](const RankReport& r) {
        std::map<std::size_t, std::size_t> h;
        for (auto& s : r.strata)
            h[s.rank] += s.count;
        std::string out;
        for (auto& [k, v] : h)
            out += std::to_string(k) + ":" + std::to_string(v) + " ";
        return out;
    };
    c.expect_eq("rank stratification equals constructed pencil over F_5", hist(built), hist(ex));
    std::vector<Rational> one(3, Rational(1));
    c.expect_eq("exact rank at (1,1,1)", std::size_t{5}, rank(fx.pencil.evaluate(one)));
}

void gl_22_221(Checker& c)
{
    auto p = build_gl_pencil({2, 2}, {2, 2, 1}, 4);
    auto fs = family_sizes(Family::GL_22_221, {3});
    c.expect_eq("source", fs.source, Integer(p.source_dim));
    c.expect_eq("target", fs.target, Integer(p.target_dim));
    c.expect_eq("size", std::string("20x20"), s(p.target_dim) + "x" + s(p.source_dim));
    check_transitivity(c, p, 14);
    auto d = predict_gl_decomposition({2, 2}, {2, 2, 1}, 4);
    c.expect_eq("predicted (kernel,image,cokernel)", std::string("(6,14,6)"),
                "(" + d.kernel_dim.get_str() + "," + d.image_dim.get_str() + "," + d.cokernel_dim.get_str() + ")");
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    auto [lo, hi] = rank_range(p, f, 100, rng);
    c.expect("rank at 100 random points", "14", s(lo) + ".." + s(hi), lo == 14 && hi == 14);
    c.expect_eq("kernel at random points", d.kernel_dim, Integer(kernel_dim(p, lo)));
}

void gl_hook_a1b1(Checker& c)
{
    auto p = build_gl_pencil({2, 1}, {2, 1, 1}, 4);
    auto fs = family_sizes(Family::GL_hook, {3, 1, 1});
    c.expect_eq("size", std::string("15x20"), s(p.target_dim) + "x" + s(p.source_dim));
    c.expect_eq("family source", fs.source, Integer(p.source_dim));
    c.expect_eq("family target", fs.target, Integer(p.target_dim));
    check_transitivity(c, p, 11);
    c.expect_eq("family rank", Integer(11), fs.rank);
}

void gl_hook_formula(Checker& c)
{
    for (int n = 2; n <= 5; ++n)
        for (int b = 1; b <= 2; ++b) {
            if (b + 2 > n + 1)
                continue;
            std::vector<int> m{2}, v{2};
            m.insert(m.end(), b, 1);
            v.insert(v.end(), b + 1, 1);
            auto p = build_gl_pencil(Partition(m), Partition(v), n + 1, no_cert());
            auto g = generic_rank(p, c.options().prime, 5, c.options().seed);
            std::string tag = "n=" + std::to_string(n) + " b=" + std::to_string(b);
            c.expect_eq(tag + " strip-count rank", hook_rank_closed_form(n, b), Integer(g));
            c.expect_eq(tag + " predicted image", predict_gl_decomposition(Partition(m), Partition(v), n + 1).image_dim,
                        Integer(g));
            c.printed_eq(tag + " printed formula", hook_rank_printed_formula(n, b), Rational(Integer(g)));
        }
}

void gl_injectivity(Checker& c)
{
    struct Case {
        Partition mu, nu;
        int v;
    };
    for (auto& k : std::vector<Case>{{{1}, {2}, 3}, {{2}, {3}, 3}, {{2, 1}, {3, 1}, 3}, {{1}, {1, 1}, 3},
                                     {{2}, {2, 1}, 3}, {{1, 1}, {1, 1, 1}, 3}}) {
        auto p = build_gl_pencil(k.mu, k.nu, k.v, no_cert());
        auto r = constant_rank_verdict(p, VerdictMode::exhaustive(7));
        std::size_t lo, hi = stratum_ranks(r, &lo);
        bool first = box_in_first_row(k.mu, k.nu);
        auto d = predict_gl_decomposition(k.mu, k.nu, k.v);
        std::string tag = "(" + k.mu.str() + ")->(" + k.nu.str() + ") v=" + std::to_string(k.v);
        c.expect_eq(tag + " predicted kernel zero", first, d.kernel_dim == 0);
        if (first)
            c.expect(tag + " injective at every F_7 point", s(p.source_dim), s(lo), lo == p.source_dim);
        else
            c.expect(tag + " kernel at every F_7 point", "< " + s(p.source_dim), s(hi), hi < p.source_dim);
    }
}

void gl_mudecomp(Checker& c)
{
    for (auto& mu : std::vector<Partition>{{2}, {2, 1}, {2, 2}, {2, 1, 1}, {2, 2, 1}, {3, 2, 1}})
        for (int n = 2; n <= 5; ++n) {
            Integer sum = 0;
            for (auto& a : all_horizontal_strips(mu))
                if (a.length() <= n)
                    sum += gl_dim(a, n);
            c.expect_eq("(" + mu.str() + ") n=" + std::to_string(n), gl_dim(mu, n + 1), sum);
        }
}

void gl_kerimcoker(Checker& c)
{
    PrimeField f(c.options().prime);
    for (int v = 3; v <= 4; ++v)
        for (int size = 1; size <= 3; ++size)
            for (auto& mu : std::vector<Partition>{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}}) {
                if (mu.size() != size || mu.length() > v)
                    continue;
                for (auto& [nu, box] : pieri_add(mu, v)) {
                    auto p = build_gl_pencil(mu, nu, v, no_cert());
                    auto d = predict_gl_decomposition(mu, nu, v);
                    auto g = generic_rank(p, c.options().prime, 3, c.options().seed);
                    std::string tag = "(" + mu.str() + ")->(" + nu.str() + ") v=" + std::to_string(v);
                    c.expect(tag, "k/i/c " + d.kernel_dim.get_str() + "/" + d.image_dim.get_str() + "/" +
                                      d.cokernel_dim.get_str(),
                             s(p.source_dim - g) + "/" + s(g) + "/" + s(p.target_dim - g),
                             d.image_dim == g && d.kernel_dim == p.source_dim - g && d.cokernel_dim == p.target_dim - g);
                }
            }
}

// ---- Koszul ----

void koszul_constant(Checker& c)
{
    for (int v = 2; v <= 6; ++v)
        for (int k = 0; k < v && k <= 2; ++k) {
            auto p = build_koszul_pencil(k, v);
            auto expect = binomial(v - 1, k).get_ui();
            std::string tag = "k=" + std::to_string(k) + " v=" + std::to_string(v);
            auto r = constant_rank_verdict(p, VerdictMode::transitivity(c.options().prime));
            c.expect(tag + " transitivity", "constant " + s(expect), to_string(r.verdict) + " " + s(r.generic_rank),
                     r.verdict == Verdict::constant && r.generic_rank == expect);
            if (v <= 4) {
                auto e = constant_rank_verdict(p, VerdictMode::exhaustive(3));
                c.expect(tag + " exhaustive F_3", "constant " + s(expect), to_string(e.verdict) + " " + s(e.generic_rank),
                         e.verdict == Verdict::constant && e.generic_rank == expect);
            }
        }
}

void koszul_rnd(Checker& c)
{
    for (int v = 2; v <= 5; ++v)
        for (int k = 0; k <= 2 && k < v; ++k) {
            auto r = rnd(build_koszul_pencil(k, v, no_cert()), c.options().prime, 400, c.options().seed);
            c.expect("k=" + std::to_string(k) + " v=" + std::to_string(v), "rank-critical-certified",
                     to_string(r.verdict) + " dim " + s(r.dim) + " (L " + s(r.pencil_span) + ")",
                     r.verdict == RndVerdict::rank_critical_certified);
        }
}

// ---- adjoint / exterior ----

void adjoint_7(Checker& c)
{
    auto p = build_adjoint_pencil(7);
    c.expect_eq("variables", std::size_t{35}, p.nvars);
    c.expect_eq("size", std::string("35x48"), s(p.target_dim) + "x" + s(p.source_dim));
    auto g = generic_rank(p, c.options().prime, 20, c.options().seed);
    c.expect_eq("generic rank over 20 random points", std::size_t{34}, g);
    c.expect_eq("stabilizer dimension 48 - rank", std::size_t{14}, p.source_dim - g);
}

void adjoint_8(Checker& c)
{
    auto p = build_adjoint_pencil(8);
    c.expect_eq("size", std::string("56x63"), s(p.target_dim) + "x" + s(p.source_dim));
    auto g = generic_rank(p, c.options().prime, 20, c.options().seed);
    c.expect("generic rank not surjective", "<= 55", s(g), g <= 55);
    c.note("measured generic rank", s(g));
}

void hyperplane(Checker& c)
{
    auto h = hyperplane_bound_criterion({3, 2}, {3, 2, 1, 1}, 2);
    c.expect_eq("certified", true, h.certified);
    c.expect_eq("kernel bound", Integer(40), h.kernel_bound);
    c.expect_eq("s_(3,2)(5)", Integer(175), gl_dim({3, 2}, 5));
    c.expect_eq("s_(3,2,1,1)(5)", Integer(175), gl_dim({3, 2, 1, 1}, 5));
    c.expect_eq("s_(3,2)(4)", Integer(60), gl_dim({3, 2}, 4));
    c.expect_eq("s_(3,2,1,1)(4)", Integer(20), gl_dim({3, 2, 1, 1}, 4));
    for (int p = 1; p <= 3; ++p)
        c.expect_eq("(1)->(2,1) p=" + std::to_string(p) + " not certified", false,
                    hyperplane_bound_criterion({1}, {2, 1}, p).certified);
}

void wedge_lagrangian(Checker& c)
{
    const int p = 5, a = 2 * p;
    Partition lam(std::vector<int>(p, 2));
    std::vector<int> m(p, 2);
    m.push_back(1);
    m.push_back(1);
    Partition mu(m);
    auto src = weyl_dim(GroupSpec::gl(a), lam);
    auto dst = weyl_dim(GroupSpec::gl(a), mu);
    c.expect_eq("dim S_(2^5) C^10", Integer(19404), src);
    c.expect_eq("dim S_(2^5,1,1) C^10", Integer(20790), dst);
    c.expect_eq("closed form C(a,p)C(a+1,p)/(p+1)", binomial(a, p) * binomial(a + 1, p) / (p + 1), src);
    c.expect_eq("closed form 3 C(a,p)C(a+1,p+3)/(a-p+1)", 3 * binomial(a, p) * binomial(a + 1, p + 3) / (a - p + 1), dst);
    auto K = weyl_dim(GroupSpec::sp(a), lam);
    Integer fk = 24;
    auto fact = [](int n) {
        Integer r = 1;
        for (int i = 2; i <= n; ++i)
            r *= i;
        return r;
    };
    fk = fk * fact(2 * p + 1) * fact(2 * p + 3) / (fact(p) * fact(p + 1) * fact(p + 3) * fact(p + 4));
    c.expect_eq("dim K from Weyl formula for Sp(10)", fk, K);
    c.expect_eq("rank bound 19404 - dim K", Integer(14685), src - K);
}

// ---- theta ----

void theta_formula(Checker& c)
{
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            ThetaOperator op(a, b, {2}, {1}, {1}, {1, 1});
            for (int r = 0; r <= std::min(a, b); ++r) {
                auto m = op.evaluate(rank_representative(a, b, r));
                c.expect_eq("a=" + std::to_string(a) + " b=" + std::to_string(b) + " r=" + std::to_string(r),
                            theta_rank_formula(a, b, r), Integer(rank(m)));
            }
        }
    c.expect_eq("2x2 identity", std::size_t{2}, rank(theta_map(rank_representative(2, 2, 2), {2}, {1}, {1}, {1, 1})));
}

void theta_rank_only(Checker& c)
{
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            ThetaOperator op(a, b, {2}, {1}, {1}, {1, 1});
            for (int r = 0; r <= std::min(a, b); ++r) {
                std::set<std::size_t> ranks;
                for (int t = 0; t < 20; ++t) {
                    Matrix<std::uint32_t> X;
                    do {
                        Matrix<std::uint32_t> L(a, r), R(r, b);
                        for (auto& e : L.data())
                            e = static_cast<std::uint32_t>(rng() % f.modulus());
                        for (auto& e : R.data())
                            e = static_cast<std::uint32_t>(rng() % f.modulus());
                        X = r ? multiply(f, L, R) : Matrix<std::uint32_t>(a, b, 0);
                    } while (rank(f, X) != static_cast<std::size_t>(r));
                    ranks.insert(rank(f, op.evaluate_mod(f, X)));
                }
                std::string got;
                for (auto x : ranks)
                    got += s(x) + " ";
                c.expect("a=" + std::to_string(a) + " b=" + std::to_string(b) + " r=" + std::to_string(r),
                         theta_rank_formula(a, b, r).get_str(), got,
                         ranks.size() == 1 && Integer(*ranks.begin()) == theta_rank_formula(a, b, r));
            }
        }
}

// ---- symplectic ----

void sp_branching(Checker& c)
{
    for (int n = 2; n <= 4; ++n)
        for (auto& lam : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}, {3, 1}, {2, 2}}) {
            if (lam.length() >= n)
                continue;
            Integer sum = 0;
            for (int z1 = 0; z1 <= lam.size(); ++z1)
                for (int z2 = 0; z2 <= z1 && z1 + z2 <= lam.size(); ++z2) {
                    Partition zeta({z1, z2});
                    Integer dz = gl_dim(zeta, 2);
                    std::vector<Partition> etas;
                    std::function<void(std::vector<int>, int, int)> gen = [&](std::vector<int> cur, int rem, int row) {
                        if (rem == 0) {
                            etas.emplace_back(cur);
                            return;
                        }
                        if (row >= lam.length())
                            return;
                        int cap = std::min(lam[row], row ? cur[row - 1] : lam[row]);
                        for (int x = std::min(cap, rem); x >= 1; --x) {
                            auto nxt = cur;
                            nxt.push_back(x);
                            gen(nxt, rem - x, row + 1);
                        }
                    };
                    gen({}, lam.size() - zeta.size(), 0);
                    for (auto& eta : etas) {
                        auto lr = lr_coefficient(zeta, eta, lam);
                        if (lr)
                            sum += lr * dz * symplectic_dim_or_zero(eta, 2 * n - 2);
                    }
                }
            c.expect_eq("(" + lam.str() + ") 2n=" + std::to_string(2 * n), symplectic_dim_or_zero(lam, 2 * n), sum);
        }
}

void sp6(Checker& c)
{
    auto p = build_sp_pencil({1, 1}, {1, 1, 1}, 6);
    c.expect_eq("size", std::string("14x14"), s(p.target_dim) + "x" + s(p.source_dim));
    c.expect_eq("variables", std::size_t{6}, p.nvars);
    c.expect_eq("Weyl dim Sp6 (1,1)", Integer(14), weyl_dim(GroupSpec::sp(6), Partition{1, 1}));
    c.expect_eq("Weyl dim Sp6 (1,1,1)", Integer(14), weyl_dim(GroupSpec::sp(6), Partition{1, 1, 1}));
    check_transitivity(c, p, 9);
    check_exhaustive(c, p, 3, 9);
}

void sp6_fixture(Checker& c)
{
    auto fx = load_fixture("sp6_psi");
    c.expect_eq("size", std::string("14x14"), s(fx.pencil.target_dim) + "x" + s(fx.pencil.source_dim));
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    auto [lo, hi] = rank_range(fx.pencil, f, c.options().trials, rng);
    c.printed_eq("rank at " + s(c.options().trials) + " random points", std::string("9..9"), s(lo) + ".." + s(hi));
    std::size_t clo = SIZE_MAX, chi = 0;
    for (std::size_t i = 0; i < fx.pencil.nvars; ++i) {
        std::vector<std::uint32_t> x(fx.pencil.nvars, 0);
        x[i] = 1;
        auto r = rank_at(fx.pencil, f, x);
        clo = std::min(clo, r);
        chi = std::max(chi, r);
    }
    c.printed_eq("rank at the 6 coordinate points", std::string("9..9"), s(clo) + ".." + s(chi));
}

void sp6_expanded(Checker& c)
{
    auto k = build_koszul_pencil(2, 6);
    check_transitivity(c, k, 10);
    auto p = build_sp_pencil({1, 1}, {1, 1, 1}, 6);
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    std::size_t bad = 0;
    for (int t = 0; t < 100; ++t) {
        auto x = random_point(f, 6, rng);
        if (rank_at(k, f, x) != rank_at(p, f, x) + 1)
            ++bad;
    }
    c.expect_eq("rank(expanded) = rank(psi) + 1 at 100 random points (failures)", std::size_t{0}, bad);
}

void sp_injectivity(Checker& c)
{
    struct Case {
        Partition mu, nu;
        int two_n;
    };
    for (auto& k : std::vector<Case>{{{1}, {2}, 4}, {{1}, {1, 1}, 4}, {{2}, {3}, 4}, {{2}, {2, 1}, 4}, {{1, 1}, {2, 1}, 4},
                                     {{1, 1}, {1, 1, 1}, 6}}) {
        auto p = build_sp_pencil(k.mu, k.nu, k.two_n, no_cert());
        auto r = constant_rank_verdict(p, VerdictMode::exhaustive(7));
        std::size_t lo, hi = stratum_ranks(r, &lo);
        std::string tag = "(" + k.mu.str() + ")->(" + k.nu.str() + ") 2n=" + std::to_string(k.two_n);
        c.expect(tag + " never surjective", "< " + s(p.target_dim), s(hi), hi < p.target_dim);
        if (box_in_first_row(k.mu, k.nu))
            c.expect(tag + " injective at every F_7 point", s(p.source_dim), s(lo), lo == p.source_dim);
        else
            c.expect(tag + " kernel at every F_7 point", "< " + s(p.source_dim), s(hi), hi < p.source_dim);
    }
}

// ---- orthogonal ----

void so_branching(Checker& c)
{
    for (int m = 4; m <= 8; ++m)
        for (auto& mu : std::vector<Partition>{{1}, {2}, {2, 1}, {3, 1, 1}, {3, 2, 1}}) {
            auto top = orthogonal_traceless_dim(mu, m);
            if (top == 0 || 2 * mu.length() > m - 1)
                continue;
            Integer sum = 0;
            for (auto& a : all_horizontal_strips(mu))
                sum += orthogonal_traceless_dim(a, m - 1);
            c.expect_eq("(" + mu.str() + ") m=" + std::to_string(m), top, sum);
            c.expect_eq("(" + mu.str() + ") m=" + std::to_string(m) + " Weyl", weyl_dim(GroupSpec::so(m), mu), top);
        }
}

void so_2_21(Checker& c, int m)
{
    auto p = build_so_pencil({2}, {2, 1}, m);
    auto fs = family_sizes(Family::SO_2_21, {m});
    c.expect_eq("source (m^2+m-2)/2", Integer((m * m + m - 2) / 2), Integer(p.source_dim));
    c.expect_eq("target (m^3-4m)/3", Integer((m * m * m - 4 * m) / 3), Integer(p.target_dim));
    c.expect_eq("family sizes", fs.source.get_str() + "x" + fs.target.get_str(), s(p.source_dim) + "x" + s(p.target_dim));
    const std::size_t r = (m * m + m - 4) / 2;
    c.expect_eq("family rank", fs.rank, Integer(r));
    auto d = predict_so_nonisotropic({2}, {2, 1}, m);
    c.expect_eq("predicted kernel at non-isotropic points", Integer(1), d.kernel_dim);
    if (m == 3) {
        auto e = constant_rank_verdict(p, VerdictMode::exhaustive(13));
        std::size_t iso = 0;
        for (auto& st : e.strata)
            if (st.point_class == PointClass::isotropic)
                iso += st.count;
        c.expect("exhaustive over F_13", "constant 4", to_string(e.verdict) + " " + strata_str(e),
                 e.verdict == Verdict::constant && e.generic_rank == 4);
        c.expect("isotropic points covered", "> 0", s(iso), iso > 0);
    }
    auto smp = constant_rank_verdict(p, VerdictMode::sampled(m == 3 ? 13 : c.options().prime, c.options().trials,
                                                            c.options().seed));
    std::size_t lo, hi = stratum_ranks(smp, &lo);
    c.expect("sampled incl. isotropic points", s(r), s(lo) + ".." + s(hi) + " " + strata_str(smp), lo == r && hi == r);
}

void so_line(Checker& c)
{
    const int m = 3;
    auto p = build_so_pencil({2}, {2, 1}, m);
    auto S = orthogonal_module({2}, m);
    std::mt19937_64 rng(c.options().seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    std::size_t ok = 0, nonzero = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> v(m);
        for (auto& x : v)
            x = dist(rng);
        if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; }))
            v[0] = 1;
        auto coords = S->try_coordinates(so_kernel_line(v));
        if (!coords)
            continue;
        if (std::any_of(coords->begin(), coords->end(), [](const Rational& x) { return sgn(x) != 0; }))
            ++nonzero;
        auto A = p.evaluate(v);
        RationalField q;
        auto img = apply(q, A, *coords);
        if (std::all_of(img.begin(), img.end(), [](const Rational& x) { return sgn(x) == 0; }))
            ++ok;
    }
    c.expect_eq("v^2 - q(v) qhat annihilated (of 100)", std::size_t{100}, ok);
    c.expect_eq("the line is nonzero (of 100)", std::size_t{100}, nonzero);
}

void so_311_321(Checker& c, int m)
{
    auto p = build_so_pencil({3, 1, 1}, {3, 2, 1}, m);
    auto fs = family_sizes(Family::SO_311_321, {m});
    Integer corank = binomial(m - 1, 3) + binomial(m - 1, 2);
    c.expect_eq("family corank", corank, fs.rank);
    auto d = predict_so_nonisotropic({3, 1, 1}, {3, 2, 1}, m);
    c.expect_eq("predicted kernel", corank, d.kernel_dim);
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    std::set<std::size_t> iso, non;
    for (int t = 0; t < 50; ++t) {
        iso.insert(kernel_dim(p, rank_at(p, f, random_isotropic_point(f, m, rng))));
        std::vector<std::uint32_t> x;
        do {
            x = random_point(f, m, rng);
            std::uint32_t q = 0;
            for (auto e : x)
                q = f.add(q, f.mul(e, e));
            if (q)
                break;
        } while (true);
        non.insert(kernel_dim(p, rank_at(p, f, x)));
    }
    auto show = [](const std::set<std::size_t>& v) {
        std::string out;
        for (auto x : v)
            out += std::to_string(x) + " ";
        return out;
    };
    c.expect("corank at 50 isotropic points", corank.get_str(), show(iso), iso.size() == 1 && Integer(*iso.begin()) == corank);
    c.expect("corank at 50 non-isotropic points", corank.get_str(), show(non),
             non.size() == 1 && Integer(*non.begin()) == corank);
}

// ---- spin ----

void spin_psi(Checker& c)
{
    auto p = build_spin_pencil(5);
    c.expect_eq("variables", std::size_t{16}, p.nvars);
    c.expect_eq("size", std::string("16x10"), s(p.target_dim) + "x" + s(p.source_dim));
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    auto [lo, hi] = rank_range(p, f, 200, rng);
    c.expect("rank at 200 random delta", "9", s(lo) + ".." + s(hi), lo == 9 && hi == 9);
    c.expect_eq("kernel dimension", std::size_t{1}, p.source_dim - hi);
    std::vector<std::uint32_t> e0(16, 0);
    e0[0] = 1;
    c.expect_eq("rank at delta = e_0", std::size_t{5}, rank_at(p, f, e0));
    auto r = constant_rank_verdict(p, VerdictMode::sampled(c.options().prime, c.options().trials, c.options().seed));
    std::size_t slo, shi = stratum_ranks(r, &slo);
    c.expect("sampled verdict", "bounded, generic 9, pure spinors 5",
             to_string(r.verdict) + " " + strata_str(r),
             r.verdict == Verdict::bounded && shi == 9 && slo == 5);
}

void spin_kernel(Checker& c)
{
    auto p = build_spin_pencil(5, no_cert());
    const auto& sp = spin_space(5);
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    std::size_t kill_formula = 0, kill_a = 0, prop = 0, pure = 0;
    for (int t = 0; t < 100; ++t) {
        auto x = random_point(f, 16, rng);
        FVector<PrimeField> d(x.begin(), x.end());
        auto M = p.evaluate_mod(f, x);
        auto k = spin_kernel_vector(f, d);
        auto a = spinor_quadric_vector(f, 5, embed_spinor(f, sp.plus, d));
        kill_formula += !is_zero_vector(k) && is_zero_vector(mat_vec(f, M, k));
        kill_a += !is_zero_vector(a) && is_zero_vector(mat_vec(f, M, a));
        bool pr = true;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j)
                pr = pr && f.mul(k[i], a[j]) == f.mul(k[j], a[i]);
        prop += pr;
        auto ps = random_pure_spinor(f, 5, rng);
        pure += is_zero_vector(spinor_quadric_vector(f, 5, embed_spinor(f, sp.plus, FVector<PrimeField>(ps.begin(), ps.end()))));
    }
    c.expect_eq("closed-form kernel vector nonzero and annihilated (of 100)", std::size_t{100}, kill_formula);
    c.expect_eq("a(delta) nonzero and annihilated (of 100)", std::size_t{100}, kill_a);
    c.expect_eq("kernel vector proportional to a(delta) (of 100)", std::size_t{100}, prop);
    c.expect_eq("a vanishes on pure spinors (of 100)", std::size_t{100}, pure);
    FVector<PrimeField> e0(16, 0);
    e0[0] = 1;
    c.expect_eq("formula degenerates at e_0", true, is_zero_vector(spin_kernel_vector(f, e0)));
    c.expect_eq("kernel dimension at e_0", std::size_t{5}, 10 - rank_at(p, f, std::vector<std::uint32_t>(e0.begin(), e0.end())));
}

void spin_rnd(Checker& c)
{
    auto r = rnd(build_spin_pencil(5, no_cert()), c.options().prime, 400, c.options().seed);
    c.expect("rnd verdict", "rank-critical-certified", to_string(r.verdict) + " dim " + s(r.dim),
             r.verdict == RndVerdict::rank_critical_certified);
    c.expect_eq("dim RND = 16", std::size_t{16}, r.dim);
    c.note("samples / seed", s(r.samples) + " / " + std::to_string(r.seed));
}

void spin_fixture(Checker& c)
{
    auto fx = load_fixture("spin10_mdelta");
    c.expect_eq("size", std::string("16x10"), s(fx.pencil.target_dim) + "x" + s(fx.pencil.source_dim));
    PrimeField f(c.options().prime);
    std::mt19937_64 rng(c.options().seed);
    std::size_t lo = SIZE_MAX, hi = 0, printed_ok = 0, alt_ok = 0;
    for (std::size_t t = 0; t < c.options().trials; ++t) {
        auto x = random_point(f, 16, rng);
        auto M = fx.pencil.evaluate_mod(f, x);
        auto r = rank(f, M);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        printed_ok += is_zero_vector(mat_vec(f, M, spin_h_vector(f, x, true)));
        alt_ok += is_zero_vector(mat_vec(f, M, spin_h_vector(f, x, false)));
    }
    c.printed_eq("rank at random delta", std::string("9..9"), s(lo) + ".." + s(hi));
    std::vector<std::uint32_t> e0(16, 0);
    e0[0] = 1;
    c.printed_eq("rank at delta = e_0", std::size_t{5}, rank_at(fx.pencil, f, e0));
    c.printed_eq("M_delta h = 0 with printed h (of " + s(c.options().trials) + ")", c.options().trials, printed_ok);
    c.expect_eq("M_delta h = 0 with alternating Pfaffian sign (of " + s(c.options().trials) + ")",
                c.options().trials, alt_ok);
    auto built = build_spin_pencil(5, no_cert());
    c.expect_eq("printed matrix equals the Clifford construction entrywise", true, same_coefficients(built, fx.pencil));
}

void spin_dims(Checker& c)
{
    auto D = [](int n, std::initializer_list<int> ks) {
        HighestWeight w = spin_fundamental_weight(n, *ks.begin());
        for (auto it = ks.begin() + 1; it != ks.end(); ++it)
            w = w + spin_fundamental_weight(n, *it);
        return weyl_dim(GroupSpec::spin(2 * n), w);
    };
    c.expect_eq("n=5 half-spin", Integer(16), D(5, {5}));
    c.expect_eq("n=6 half-spin (variables)", Integer(32), D(6, {6}));
    c.expect_eq("n=6 realized half-spin", std::size_t{32}, spin_space(6).plus.dim());
    c.expect_eq("n=6 omega1+omega5", Integer(352), D(6, {1, 5}));
    c.expect_eq("n=6 omega2 = L2 W", Integer(66), D(6, {2}));
    c.expect_eq("n=6 L2 W binomial", binomial(12, 2), D(6, {2}));
    c.expect_eq("n=7 omega3 = L3 W", Integer(364), D(7, {3}));
    c.expect_eq("n=7 syzygies omega2+omega7 plus half-spin", Integer(4992), D(7, {2, 7}) + D(7, {6}));
    c.expect_eq("n=7 half-spin (variables)", Integer(64), D(7, {7}));
    for (int n = 5; n <= 9; ++n)
        c.expect_eq("a_n = C(2n,n-4) at n=" + std::to_string(n), binomial(2 * n, n - 4), D(n, {n - 4}));
    c.expect_eq("b_5 = half-spin", Integer(16), D(5, {4}));
}

void spin_n6(Checker& c)
{
    auto p = build_spin_pencil(6, no_cert());
    c.expect_eq("size", std::string("32x12"), s(p.target_dim) + "x" + s(p.source_dim));
    auto g = generic_rank(p, c.options().prime, 20, c.options().seed);
    c.note("generic rank of delta -> Hom(W, Delta-) at n=6", s(g) + " of " + s(p.source_dim));
}

std::vector<CatalogEntry> make_catalog()
{
    std::vector<CatalogEntry> e;
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t amb = static_cast<std::uint64_t>(n + 1) * (n + 1) * (n + 1);
        e.push_back({"gl-2-21-n" + std::to_string(n), "(2)->(2,1): constant rank (n^2+3n)/2",
                     {"gl-2-21-family", "gl-constant-rank"}, amb, [n](Checker& c) { gl_2_21(c, n); }});
    }
    e.push_back({"gl-2-21-rnd", "(2)->(2,1), n=2: RND(L) = L + S_(2,0,-1)V, not rank-critical",
                 {"rnd-definition", "gl-2-21-not-rank-critical"}, 27, gl_2_21_rnd});
    e.push_back({"gl-2-21-flattening", "Koszul flattening gives border rank >= 9", {"gl-2-21-flattening"}, 27,
                 gl_2_21_flattening});
    e.push_back({"gl-2-21-fixture", "printed 6x8 matrix has constant rank 5", {"gl-2-21-printed-matrix"}, 27,
                 gl_2_21_fixture});
    e.push_back({"gl-22-221-n3", "(2,2)->(2,2,1), n=3: 20x20 of constant rank 14",
                 {"gl-22-221-family", "gl-kerimcoker"}, 1024, gl_22_221});
    e.push_back({"gl-hook-a1-b1-n3", "(2,1)->(2,1,1), n=3: 15x20 of rank 11", {"gl-hook-family"}, 256, gl_hook_a1b1});
    e.push_back({"gl-hook-formula", "hook family rank formula, n <= 5, b <= 2", {"gl-hook-family"}, 6 * 6 * 6 * 6 * 6,
                 gl_hook_formula});
    e.push_back({"gl-injectivity", "injective exactly when the box is in the first row",
                 {"gl-injectivity", "gl-kerimcoker"}, 27, gl_injectivity});
    e.push_back({"gl-mudecomp", "restriction to GL(H) deletes horizontal strips", {"gl-mudecomp"}, 0, gl_mudecomp});
    e.push_back({"gl-kerimcoker", "kernel, image and cokernel dimensions of phi_v", {"gl-kerimcoker"}, 256, gl_kerimcoker});
    e.push_back({"koszul-constant-rank", "Lk V -> Lk+1 V has constant rank C(v-1,k)",
                 {"koszul-pencils", "sp6-expanded-koszul"}, 216, koszul_constant});
    e.push_back({"koszul-rnd", "Koszul pencils are rank-critical", {"koszul-rank-critical", "rnd-definition"}, 125,
                 koszul_rnd});
    e.push_back({"adjoint-wedge3-7", "L3 C^7: 48x35 of generic rank 34", {"adjoint-wedge3-7"}, 343, adjoint_7});
    e.push_back({"adjoint-wedge3-8", "L3 C^8: never surjective", {"adjoint-wedge3-8"}, 512, adjoint_8});
    e.push_back({"wedge2-hyperplane", "hyperplane criterion: 40-dimensional kernel", {"hyperplane-criterion"}, 0,
                 hyperplane});
    e.push_back({"wedge2-lagrangian-p5", "19404x20790 with kernel of dimension dim K", {"wedge2-dimensions"}, 0,
                 wedge_lagrangian});
    e.push_back({"theta-formula", "rank of Theta_X for S2A(x)B -> A(x)L2B", {"theta-eagon-northcott"}, 64,
                 theta_formula});
    e.push_back({"theta-rank-only", "rank of Theta_X only depends on rank X", {"theta-rank-only"}, 64, theta_rank_only});
    e.push_back({"sp-branching", "restriction Sp(2n) -> Sp(2n-2) x Sp(2)", {"sp-branching"}, 0, sp_branching});
    e.push_back({"sp-injectivity", "never surjective; injective only for first-row boxes",
                 {"sp-never-surjective"}, 1296, sp_injectivity});
    e.push_back({"sp-11-111-6", "Sp6: 14x14 of constant rank 9", {"sp6-constant-rank"}, 216, sp6});
    e.push_back({"sp-11-111-6-fixture", "printed Sp6 matrix has constant rank 9", {"sp6-printed-matrix"}, 0,
                 sp6_fixture});
    e.push_back({"sp-11-111-6-expanded", "expanded Koszul map has constant rank 10 = rank psi + 1",
                 {"sp6-expanded-koszul"}, 216, sp6_expanded});
    e.push_back({"so-branching", "restriction SO(m) -> SO(m-1) deletes horizontal strips",
                 {"so-branching", "so-kernel-formula"}, 0, so_branching});
    for (int m = 3; m <= 5; ++m)
        e.push_back({"so-2-21-m" + std::to_string(m), "(2)->(2,1): constant rank (m^2+m-4)/2",
                     {"so-2-21-family", "so-never-surjective"}, static_cast<std::uint64_t>(m * m * m),
                     [m](Checker& c) { so_2_21(c, m); }});
    e.push_back({"so-2-21-kernel-line", "kernel of phi_v is the line of v^2 - q(v) qhat", {"so-2-21-kernel-line"}, 27,
                 so_line});
    for (int m = 5; m <= 6; ++m)
        e.push_back({"so-311-321-m" + std::to_string(m), "(3,1,1)->(3,2,1): constant corank C(m-1,3)+C(m-1,2)",
                     {"so-311-321-corank", "so-kernel-formula"}, static_cast<std::uint64_t>(m) * m * m * m * m,
                     [m](Checker& c) { so_311_321(c, m); }});
    e.push_back({"spin-10-psi", "Delta+ -> Hom(W, Delta-) at n=5: kernel one-dimensional",
                 {"spin-psi", "spin-kernel-one-dimensional"}, 32, spin_psi});
    e.push_back({"spin-10-kernel", "kernel generated by a(delta); psi_delta(a(delta)) = 0",
                 {"spin-kernel-formula", "spin-a-delta"}, 32, spin_kernel});
    e.push_back({"spin-10-rnd", "psi(Delta+) is rank-critical", {"spin-rank-critical"}, 32, spin_rnd});
    e.push_back({"spin-10-fixture", "printed M_delta: rank 9, image orthogonal to h",
                 {"spin-printed-matrix", "spin-h-vector"}, 32, spin_fixture});
    e.push_back({"spin-dims", "Weyl dimension bookkeeping for larger spinor varieties", {"spin-dimensions"}, 0,
                 spin_dims});
    e.push_back({"spin-12-measure", "measurement of Delta+ -> Hom(W, Delta-) at n=6", {"spin-open-n6"}, 64, spin_n6});
    std::sort(e.begin(), e.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const std::vector<std::string>& catalog_topics()
{
    static const std::vector<std::string> topics = {
        "rnd-definition",         "koszul-pencils",          "koszul-rank-critical",  "gl-mudecomp",
        "gl-kerimcoker",          "gl-injectivity",          "gl-constant-rank",      "gl-2-21-family",
        "gl-2-21-not-rank-critical", "gl-2-21-printed-matrix", "gl-2-21-flattening",  "gl-22-221-family",
        "gl-hook-family",         "adjoint-wedge3-7",        "adjoint-wedge3-8",      "hyperplane-criterion",
        "wedge2-dimensions",      "theta-rank-only",         "theta-eagon-northcott", "sp-branching",
        "sp-never-surjective",    "sp6-constant-rank",       "sp6-printed-matrix",    "sp6-expanded-koszul",
        "so-branching",           "so-kernel-formula",       "so-never-surjective",   "so-2-21-family",
        "so-2-21-kernel-line",    "so-311-321-corank",       "spin-psi",              "spin-kernel-one-dimensional",
        "spin-kernel-formula",    "spin-a-delta",            "spin-rank-critical",    "spin-printed-matrix",
        "spin-h-vector",          "spin-dimensions",         "spin-open-n6",
    };
    return topics;
}

EntryResult run_entry(const CatalogEntry& e, const CatalogOptions& opt)
{
    EntryResult r;
    r.id = e.id;
    if (e.ambient > opt.max_ambient) {
        r.status = Status::skipped;
        r.error = "ambient dimension " + std::to_string(e.ambient) + " above " + std::to_string(opt.max_ambient);
        return r;
    }
    auto t0 = std::chrono::steady_clock::now();
    Checker c(opt);
    try {
        e.run(c);
        bool hard = false, soft = false;
        for (auto& ch : c.checks()) {
            if (ch.ok)
                continue;
            (ch.erratum ? soft : hard) = true;
        }
        r.status = hard ? Status::fail : soft ? Status::erratum : Status::pass;
    } catch (const std::exception& ex) {
        r.status = Status::error;
        r.error = ex.what();
    }
    r.checks = c.checks();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<EntryResult> run_catalog(const std::string& filter, const CatalogOptions& opt)
{
    std::vector<const CatalogEntry*> todo;
    for (auto& e : catalog())
        if (filter.empty() || glob_match(filter, e.id))
            todo.push_back(&e);
    std::vector<EntryResult> out(todo.size());
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, todo.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();)
            out[i] = run_entry(*todo[i], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return out;
}

}  // namespace eqp
