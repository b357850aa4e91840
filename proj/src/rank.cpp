#include "eqp/rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqp {

std::string to_string(PointClass c)
{
    switch (c) {
    case PointClass::generic: return "generic";
    case PointClass::coordinate: return "coordinate";
    case PointClass::isotropic: return "isotropic";
    case PointClass::non_isotropic: return "non-isotropic";
    case PointClass::pure_spinor: return "pure-spinor";
    }
    return "generic";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::constant: return "constant";
    case Verdict::bounded: return "bounded";
    case Verdict::non_constant: return "non-constant";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::sampled: return "sampled";
    case Method::transitivity: return "transitivity-certificate";
    }
    return "sampled";
}

std::string to_string(RndVerdict v)
{
    switch (v) {
    case RndVerdict::rank_critical_certified: return "rank-critical-certified";
    case RndVerdict::strictly_larger: return "strictly-larger";
    case RndVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

template <class E>
E enum_from_string(const std::string& s, std::initializer_list<E> values, const char* what)
{
    for (E v : values)
        if (to_string(v) == s)
            return v;
    throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

PointClass point_class_from_string(const std::string& s)
{
    return enum_from_string(s,
                            {PointClass::generic, PointClass::coordinate, PointClass::isotropic,
                             PointClass::non_isotropic, PointClass::pure_spinor},
                            "point class");
}

Verdict verdict_from_string(const std::string& s)
{
    return enum_from_string(s, {Verdict::constant, Verdict::bounded, Verdict::non_constant, Verdict::inconclusive},
                            "verdict");
}

Method method_from_string(const std::string& s)
{
    if (s == "transitivity")
        return Method::transitivity;
    return enum_from_string(s, {Method::exhaustive, Method::sampled, Method::transitivity}, "method");
}

std::size_t RankReport::min_rank() const
{
    std::size_t m = generic_rank;
    for (auto& s : strata)
        m = std::min(m, s.rank);
    return m;
}

VerdictMode VerdictMode::exhaustive(std::uint32_t prime, std::uint64_t budget)
{
    VerdictMode m;
    m.method = Method::exhaustive;
    m.prime = prime;
    m.trials = 0;
    m.budget = budget;
    return m;
}

VerdictMode VerdictMode::sampled(std::uint32_t prime, std::size_t trials, std::uint64_t seed)
{
    VerdictMode m;
    m.method = Method::sampled;
    m.prime = prime;
    m.trials = trials;
    m.seed = seed;
    return m;
}

VerdictMode VerdictMode::transitivity(std::uint32_t prime)
{
    VerdictMode m;
    m.method = Method::transitivity;
    m.prime = prime;
    m.trials = 0;
    return m;
}

PrimeField pencil_field(const Pencil& p, std::uint32_t prime)
{
    PrimeField f(prime);
    if (p.denominator % prime == 0)
        throw std::domain_error("prime " + std::to_string(prime) + " divides the pencil denominator");
    return f;
}

std::size_t rank_at(const Pencil& p, const PrimeField& f, const std::vector<std::uint32_t>& x)
{
    return rank(f, p.evaluate_mod(f, x));
}

std::vector<std::uint32_t> random_point(const PrimeField& f, std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> x(n);
    do {
        for (auto& e : x)
            e = static_cast<std::uint32_t>(rng() % f.modulus());
    } while (std::all_of(x.begin(), x.end(), [](std::uint32_t e) { return e == 0; }));
    return x;
}

std::size_t generic_rank(const Pencil& p, std::uint32_t prime, std::size_t trials, std::uint64_t seed)
{
    PrimeField f = pencil_field(p, prime);
    std::mt19937_64 rng(seed);
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t)
        best = std::max(best, rank_at(p, f, random_point(f, p.nvars, rng)));
    return best;
}

std::vector<std::uint32_t> random_isotropic_point(const PrimeField& f, int m, std::mt19937_64& rng)
{
    if (m < 2)
        throw std::invalid_argument("isotropic points need m >= 2");
    const auto i = f.sqrt_minus_one();
    std::vector<std::uint32_t> x(m, 0);
    std::uint32_t s = 0;
    for (int k = 2; k < m; ++k) {
        x[k] = static_cast<std::uint32_t>(rng() % f.modulus());
        s = f.add(s, f.mul(x[k], x[k]));
    }
    std::uint32_t a = 0;
    while (a == 0)
        a = static_cast<std::uint32_t>(rng() % f.modulus());
    // x1^2 + x2^2 = (x1 + i x2)(x1 - i x2) = a b = -s
    std::uint32_t b = f.mul(f.neg(s), f.inv(a));
    const auto half = f.inv(2);
    x[0] = f.mul(f.add(a, b), half);
    x[1] = f.mul(f.sub(a, b), f.mul(half, f.inv(i)));
    return x;
}

std::vector<std::uint32_t> random_pure_spinor(const PrimeField& f, int n, std::mt19937_64& rng)
{
    const auto& sp = spin_space(n);
    Matrix<std::uint32_t> A(n, n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            A(i, j) = static_cast<std::uint32_t>(rng() % f.modulus());
            A(j, i) = f.neg(A(i, j));
        }
    return pure_spinor_from_skew(f, sp.plus, A);
}

namespace {

bool is_coordinate(const std::vector<std::uint32_t>& x)
{
    return std::count_if(x.begin(), x.end(), [](std::uint32_t e) { return e != 0; }) == 1;
}

PointClass classify(const Pencil& p, const PrimeField& f, const std::vector<std::uint32_t>& x)
{
    if (p.kind == PencilKind::spin && p.natural_dim <= 5) {
        // a(delta) = 0 cuts out the pure spinors for n <= 5
        const auto& sp = spin_space(p.natural_dim);
        auto a = spinor_quadric_vector(f, p.natural_dim, embed_spinor(f, sp.plus, x));
        if (std::all_of(a.begin(), a.end(), [](std::uint32_t e) { return e == 0; }))
            return PointClass::pure_spinor;
        return PointClass::generic;
    }
    if (p.kind == PencilKind::spin)
        return is_coordinate(x) ? PointClass::pure_spinor : PointClass::generic;
    if (is_coordinate(x))
        return PointClass::coordinate;
    if (p.kind == PencilKind::so) {
        std::uint32_t q = 0;
        for (auto e : x)
            q = f.add(q, f.mul(e, e));
        return q == 0 ? PointClass::isotropic : PointClass::non_isotropic;
    }
    return PointClass::generic;
}

struct StrataBuilder {
    std::vector<Stratum> strata;
    std::size_t points = 0;

    void record(std::size_t rank, const std::vector<std::uint32_t>& x, PointClass c)
    {
        ++points;
        for (auto& s : strata)
            if (s.rank == rank && s.point_class == c) {
                ++s.count;
                return;
            }
        strata.push_back({rank, x, c, 1});
    }

    std::size_t max_rank() const
    {
        std::size_t m = 0;
        for (auto& s : strata)
            m = std::max(m, s.rank);
        return m;
    }

    bool single_rank() const
    {
        for (auto& s : strata)
            if (s.rank != strata.front().rank)
                return false;
        return true;
    }
};

}  // namespace

std::vector<ClassifiedPoint> structured_points(const Pencil& p, const PrimeField& f, std::mt19937_64& rng,
                                               std::size_t random_count)
{
    std::vector<ClassifiedPoint> out;
    for (std::size_t i = 0; i < p.nvars; ++i) {
        std::vector<std::uint32_t> x(p.nvars, 0);
        x[i] = 1;
        out.emplace_back(std::move(x), p.kind == PencilKind::spin ? PointClass::pure_spinor : PointClass::coordinate);
    }
    if (p.kind == PencilKind::so) {
        const int m = p.natural_dim;
        for (std::size_t t = 0; t < random_count; ++t) {
            std::vector<std::uint32_t> x;
            do {
                x = random_point(f, m, rng);
            } while (classify(p, f, x) != PointClass::non_isotropic);
            out.emplace_back(std::move(x), PointClass::non_isotropic);
        }
        if (f.modulus() % 4 == 1)
            for (std::size_t t = 0; t < random_count; ++t)
                out.emplace_back(random_isotropic_point(f, m, rng), PointClass::isotropic);
    }
    if (p.kind == PencilKind::spin)
        for (std::size_t t = 0; t < random_count; ++t)
            out.emplace_back(random_pure_spinor(f, p.natural_dim, rng), PointClass::pure_spinor);
    return out;
}

RankReport constant_rank_verdict(const Pencil& p, const VerdictMode& mode)
{
    PrimeField f = pencil_field(p, mode.prime);
    RankReport r;
    r.source_dim = p.source_dim;
    r.target_dim = p.target_dim;
    r.method = mode.method;
    r.prime = mode.prime;
    r.seed = mode.seed;
    r.trials = mode.trials;
    const std::size_t full = std::min(p.source_dim, p.target_dim);
    StrataBuilder sb;

    switch (mode.method) {
    case Method::transitivity: {
        if (!p.certificate.valid)
            throw UnsupportedMode("transitivity needs a valid equivariance certificate");
        if (p.kind != PencilKind::gl && p.kind != PencilKind::sp && p.kind != PencilKind::koszul)
            throw UnsupportedMode("the group of a " + to_string(p.kind) +
                                  " pencil does not act transitively on the projective base");
        std::vector<std::uint32_t> x(p.nvars, 0);
        x[0] = 1;
        sb.record(rank_at(p, f, x), x, PointClass::coordinate);
        r.certificate = p.certificate.group;
        r.verdict = Verdict::constant;
        break;
    }
    case Method::exhaustive: {
        const std::uint32_t q = f.modulus();
        Integer count = 0;
        for (std::size_t i = 0; i < p.nvars; ++i) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), q, i);
            count += t;
        }
        if (count > Integer(static_cast<unsigned long>(mode.budget)))
            throw BudgetExceeded("exhaustive enumeration needs " + count.get_str() + " points, budget " +
                                 std::to_string(mode.budget));
        // first nonzero coordinate normalized to 1
        for (std::size_t lead = 0; lead < p.nvars; ++lead) {
            std::vector<std::uint32_t> x(p.nvars, 0);
            x[lead] = 1;
            while (true) {
                sb.record(rank_at(p, f, x), x, classify(p, f, x));
                bool carry = true;
                for (std::size_t k = p.nvars; carry && k > lead + 1;) {
                    --k;
                    if (++x[k] < q)
                        carry = false;
                    else
                        x[k] = 0;
                }
                if (carry)
                    break;
            }
        }
        r.verdict = sb.single_rank() ? Verdict::constant
                    : sb.max_rank() < full ? Verdict::bounded
                                           : Verdict::non_constant;
        break;
    }
    case Method::sampled: {
        std::mt19937_64 rng(mode.seed);
        for (std::size_t t = 0; t < mode.trials; ++t) {
            auto x = random_point(f, p.nvars, rng);
            sb.record(rank_at(p, f, x), x, classify(p, f, x));
        }
        for (auto& [x, c] : structured_points(p, f, rng, std::max<std::size_t>(1, mode.trials / 4)))
            sb.record(rank_at(p, f, x), x, c);
        r.verdict = sb.max_rank() < full ? Verdict::bounded
                    : !sb.single_rank()  ? Verdict::non_constant
                                         : Verdict::inconclusive;
        break;
    }
    }
    r.strata = std::move(sb.strata);
    r.points = sb.points;
    r.generic_rank = 0;
    for (auto& s : r.strata)
        r.generic_rank = std::max(r.generic_rank, s.rank);
    return r;
}

namespace {

bool in_partition(const Partition& p, BoxPosition b) { return p[b.row - 1] >= b.col; }

template <class DimFn>
PredictedDecomposition predict(const Partition& mu, const Partition& nu, DimFn dim)
{
    BoxPosition b;
    if (!mu.nonnegative() || !one_box_difference(mu, nu, &b))
        throw std::invalid_argument("(" + mu.str() + ") -> (" + nu.str() + ") is not a one-box pair");
    PredictedDecomposition d;
    for (int k = 0; k <= mu.size(); ++k)
        for (auto& alpha : horizontal_strips(mu, k)) {
            Integer n = dim(alpha);
            if (n == 0)
                continue;
            bool c_in = b.row == 1 || in_partition(alpha, BoxPosition{b.row - 1, b.col});
            if (c_in) {
                d.image_dim += n;
                d.terms.push_back({alpha, k + 1, n, "image"});
            } else {
                d.kernel_dim += n;
                d.terms.push_back({alpha, k, n, "kernel"});
            }
        }
    for (int k = 0; k <= nu.size(); ++k)
        for (auto& beta : horizontal_strips(nu, k)) {
            if (!in_partition(beta, b))
                continue;
            Integer n = dim(beta);
            if (n == 0)
                continue;
            d.cokernel_dim += n;
            d.terms.push_back({beta, k, n, "cokernel"});
        }
    return d;
}

}  // namespace

PredictedDecomposition predict_gl_decomposition(const Partition& mu, const Partition& nu, int v)
{
    if (v < 2 || nu.length() > v)
        throw std::invalid_argument("shapes do not fit in dimension " + std::to_string(v));
    return predict(mu, nu, [&](const Partition& a) { return a.length() > v - 1 ? Integer(0) : gl_dim(a, v - 1); });
}

PredictedDecomposition predict_so_nonisotropic(const Partition& mu, const Partition& nu, int m)
{
    if (m < 3 || orthogonal_traceless_dim(nu, m) == 0 || orthogonal_traceless_dim(mu, m) == 0)
        throw std::invalid_argument("shapes outside the orthogonal range for m=" + std::to_string(m));
    return predict(mu, nu, [&](const Partition& a) { return orthogonal_traceless_dim(a, m - 1); });
}

RndResult rnd(const Pencil& p, std::uint32_t prime, std::size_t max_samples, std::uint64_t seed)
{
    PrimeField f = pencil_field(p, prime);
    const std::size_t b = p.source_dim, c = p.target_dim, N = b * c;
    if (N > (1u << 16))
        throw std::length_error("Hom space too large for rank neutral directions");
    RndResult res;
    res.prime = prime;
    res.seed = seed;
    std::mt19937_64 rng(seed);

    std::vector<std::vector<std::uint32_t>> span;
    IncrementalEchelon<PrimeField> L(f, N);
    for (auto& m : p.coeffs) {
        std::vector<std::uint32_t> flat(N, 0);
        for (std::size_t r = 0; r < c; ++r)
            for (auto& [col, v] : m.row(r))
                flat[r * b + col] = f.from_integer(v);
        if (L.add(flat))
            span.push_back(std::move(flat));
    }
    res.pencil_span = L.rank();
    res.generic_rank = generic_rank(p, prime, 2 * p.nvars + 10, seed ^ 0x9e3779b97f4a7c15ull);

    IncrementalEchelon<PrimeField> cons(f, N);
    std::size_t target = p.nvars + 2;
    std::size_t degenerate = 0;
    while (true) {
        while (res.samples < target) {
            auto x = random_point(f, p.nvars, rng);
            auto A = p.evaluate_mod(f, x);
            if (rank(f, A) < res.generic_rank) {
                if (++degenerate > 100 + 10 * target)
                    throw std::runtime_error("all rnd samples are degenerate");
                continue;
            }
            ++res.samples;
            auto K = kernel(f, A);
            auto Y = left_kernel(f, A);
            for (std::size_t i = 0; i < Y.dim(); ++i)
                for (std::size_t j = 0; j < K.dim(); ++j) {
                    std::vector<std::uint32_t> g(N, 0);
                    for (std::size_t r = 0; r < c; ++r) {
                        auto y = Y.basis()(i, r);
                        if (y == 0)
                            continue;
                        for (std::size_t s = 0; s < b; ++s)
                            g[r * b + s] = f.mul(y, K.basis()(j, s));
                    }
                    cons.add(std::move(g));
                }
        }
        res.dim = N - cons.rank();
        res.history.push_back(res.dim);
        if (res.dim < res.pencil_span)
            throw std::logic_error("rank neutral constraints cut into the pencil span");
        if (res.dim == res.pencil_span) {
            res.verdict = RndVerdict::rank_critical_certified;
            break;
        }
        if (res.history.size() >= 2 && res.history[res.history.size() - 2] == res.dim) {
            res.verdict = RndVerdict::strictly_larger;
            break;
        }
        if (target >= max_samples) {
            res.verdict = RndVerdict::inconclusive;
            break;
        }
        target = std::min(2 * target, max_samples);
    }
    // L must satisfy every constraint
    for (auto& row : cons.rows())
        for (auto& a : span) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < N; ++k)
                if (row[k] && a[k])
                    s = f.add(s, f.mul(row[k], a[k]));
            if (s != 0)
                throw std::logic_error("pencil violates its own rank neutral constraints");
        }
    Matrix<std::uint32_t> rows(0, N);
    for (auto& row : cons.rows())
        rows.append_row(row);
    res.basis = cons.rank() ? kernel(f, rows).basis() : Matrix<std::uint32_t>::identity(f, N);
    return res;
}

Matrix<Integer> koszul_flattening(const Pencil& p)
{
    const std::size_t v = p.nvars, b = p.source_dim, c = p.target_dim;
    auto pair_index = [v](std::size_t i, std::size_t j) {
        // i < j, lex order of pairs
        return i * (2 * v - i - 1) / 2 + (j - i - 1);
    };
    Matrix<Integer> m(v * (v - 1) / 2 * c, v * b);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
            if (i == j)
                continue;
            std::size_t pr = i < j ? pair_index(i, j) : pair_index(j, i);
            int sign = i < j ? 1 : -1;
            for (std::size_t t = 0; t < c; ++t)
                for (auto& [s, val] : p.coeffs[i].row(t))
                    m(pr * c + t, j * b + s) = val * sign;
        }
    return m;
}

std::size_t koszul_flattening_rank(const Pencil& p)
{
    if (p.nvars < 2)
        return 0;
    return rank(koszul_flattening(p));
}

std::size_t koszul_flattening_rank(const Partition& mu, const Partition& nu, int v)
{
    BuildOptions opt;
    opt.certify = false;
    return koszul_flattening_rank(build_gl_pencil(mu, nu, v, opt));
}

Integer theta_rank_formula(int a, int b, int r)
{
    if (a < 0 || b < 0 || r < 0 || r > std::min(a, b))
        throw std::invalid_argument("theta rank formula needs 0 <= r <= min(a, b)");
    return Integer(a) * b * r - Integer(a) * binomial(r + 1, 2) - Integer(b) * binomial(r, 2) +
           2 * binomial(r + 1, 3);
}

}  // namespace eqp
