#include "eqp/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace eqp {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing: " + str());
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '(' || text[i] == ')'))
            ++i;
        if (i >= text.size())
            break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Partition(std::move(parts));
}

std::vector<int> Partition::trimmed() const
{
    std::vector<int> t = parts_;
    while (!t.empty() && t.back() == 0)
        t.pop_back();
    return t;
}

int Partition::length() const { return static_cast<int>(trimmed().size()); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::nonnegative() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 0; });
}

int Partition::column_length(int col) const
{
    int n = 0;
    for (int p : parts_)
        if (p >= col)
            ++n;
    return n;
}

Partition Partition::conjugate() const
{
    if (!nonnegative())
        throw std::invalid_argument("conjugate of a weight with negative entries");
    std::vector<int> c;
    int first = parts_.empty() ? 0 : parts_.front();
    for (int j = 1; j <= first; ++j)
        c.push_back(column_length(j));
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const
{
    std::size_t n = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if ((*this)[i] < other[i])
            return false;
    return true;
}

std::string Partition::str() const
{
    std::string s = "(";
    auto t = trimmed();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(t[i]);
    }
    return s + ")";
}

bool operator==(const Partition& a, const Partition& b) { return a.trimmed() == b.trimmed(); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    return a.trimmed() <=> b.trimmed();
}

GroupSpec GroupSpec::sp(int two_n)
{
    if (two_n <= 0 || two_n % 2)
        throw std::invalid_argument("Sp requires an even natural dimension");
    return {GroupFamily::Sp, two_n};
}

GroupSpec GroupSpec::so(int m)
{
    if (m <= 0)
        throw std::invalid_argument("SO requires a positive natural dimension");
    return {GroupFamily::SO, m};
}

GroupSpec GroupSpec::spin(int two_n)
{
    if (two_n <= 0 || two_n % 2)
        throw std::invalid_argument("Spin requires an even natural dimension");
    return {GroupFamily::Spin, two_n};
}

int GroupSpec::rank() const
{
    switch (family) {
    case GroupFamily::GL: return natural_dim;
    case GroupFamily::Sp:
    case GroupFamily::Spin: return natural_dim / 2;
    case GroupFamily::SO: return natural_dim / 2;
    }
    return 0;
}

std::string to_string(GroupFamily f)
{
    switch (f) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::SO: return "SO";
    case GroupFamily::Spin: return "Spin";
    }
    return "?";
}

std::string GroupSpec::str() const { return to_string(family) + "(" + std::to_string(natural_dim) + ")"; }

HighestWeight HighestWeight::from(const Partition& p, int rank)
{
    if (p.length() > rank)
        throw std::invalid_argument("weight " + p.str() + " has more than " + std::to_string(rank) + " rows");
    HighestWeight w;
    w.coords.assign(rank, 0);
    for (int i = 0; i < rank; ++i)
        w.coords[i] = p[i];
    return w;
}

HighestWeight spin_fundamental_weight(int n, int k)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("fundamental weight index out of range");
    HighestWeight w;
    w.doubled = true;
    w.coords.assign(n, 0);
    if (k <= n - 2) {
        for (int i = 0; i < k; ++i)
            w.coords[i] = 2;
    } else {
        for (int i = 0; i < n; ++i)
            w.coords[i] = 1;
        if (k == n - 1)
            w.coords[n - 1] = -1;
    }
    return w;
}

HighestWeight operator+(const HighestWeight& a, const HighestWeight& b)
{
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("weights of different rank");
    HighestWeight r;
    r.doubled = a.doubled || b.doubled;
    r.coords.resize(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        r.coords[i] = (r.doubled && !a.doubled ? 2 : 1) * a.coords[i] + (r.doubled && !b.doubled ? 2 : 1) * b.coords[i];
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<std::pair<Partition, BoxPosition>> pieri_add(const Partition& mu, int max_rows)
{
    std::vector<std::pair<Partition, BoxPosition>> out;
    std::vector<int> p(mu.parts().begin(), mu.parts().begin() + mu.length());
    int len = static_cast<int>(p.size());
    for (int k = 1; k <= len; ++k) {
        if (k == 1 || p[k - 2] > p[k - 1]) {
            auto q = p;
            ++q[k - 1];
            out.emplace_back(Partition(q), BoxPosition{k, p[k - 1] + 1});
        }
    }
    if (len + 1 <= max_rows) {
        auto q = p;
        q.push_back(1);
        out.emplace_back(Partition(q), BoxPosition{len + 1, 1});
    }
    return out;
}

std::vector<Partition> horizontal_strips(const Partition& mu, int k)
{
    std::vector<Partition> out;
    int len = mu.length();
    int target = mu.size() - k;
    if (k < 0 || target < 0)
        return out;
    std::vector<int> alpha(len, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == len) {
            if (remaining == 0)
                out.emplace_back(alpha);
            return;
        }
        int hi = mu[i], lo = mu[i + 1];
        int tail_max = 0;
        for (int j = i + 1; j < len; ++j)
            tail_max += mu[j];
        for (int a = std::min(hi, remaining); a >= lo; --a) {
            if (remaining - a > tail_max)
                break;
            alpha[i] = a;
            rec(i + 1, remaining - a);
        }
    };
    rec(0, target);
    return out;
}

std::vector<Partition> all_horizontal_strips(const Partition& mu)
{
    std::vector<Partition> out;
    for (int k = 0; k <= mu.size(); ++k)
        for (auto& a : horizontal_strips(mu, k))
            out.push_back(std::move(a));
    return out;
}

bool one_box_difference(const Partition& mu, const Partition& nu, BoxPosition* box)
{
    if (!mu.nonnegative() || !nu.nonnegative() || nu.size() != mu.size() + 1 || !nu.contains(mu))
        return false;
    std::size_t n = std::max(mu.parts().size(), nu.parts().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (nu[i] != mu[i]) {
            if (box)
                *box = BoxPosition{static_cast<int>(i) + 1, nu[i]};
            return true;
        }
    }
    return false;
}

std::int64_t lr_coefficient(const Partition& zeta, const Partition& eta, const Partition& lam)
{
    if (!lam.contains(zeta) || zeta.size() + eta.size() != lam.size())
        return 0;
    int rows = lam.length();
    int colors = eta.length();
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = lam[r] - 1; c >= zeta[r]; --c)
            cells.emplace_back(r, c);
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r)
        fill[r].assign(lam[r], 0);
    std::vector<int> count(colors + 1, 0);
    std::int64_t total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int hi = colors;
        if (c + 1 < lam[r])
            hi = std::min(hi, fill[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= zeta[r - 1])
            lo = fill[r - 1][c] + 1;
        for (int x = lo; x <= hi; ++x) {
            if (count[x] >= eta[x - 1])
                continue;
            if (x > 1 && count[x] + 1 > count[x - 1])
                continue;
            fill[r][c] = x;
            ++count[x];
            rec(idx + 1);
            --count[x];
        }
        fill[r][c] = 0;
    };
    rec(0);
    return total;
}

Integer gl_dim(const Partition& lam, int n)
{
    std::vector<int> p = lam.parts();
    int shift = 0;
    for (int x : p)
        shift = std::min(shift, x);
    if (shift < 0) {
        if (static_cast<int>(p.size()) > n)
            return 0;
        p.resize(n, 0);
        for (int& x : p)
            x -= shift;
    }
    Partition shape(p);
    if (shape.length() > n)
        return 0;
    Partition conj = shape.conjugate();
    Integer num = 1, den = 1;
    for (int i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            num *= n + j - i;
            den *= (shape[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    return num / den;
}

namespace {

enum class RootSystem { A, B, C, D };

Integer weyl_product(RootSystem type, const std::vector<int>& l, const std::vector<int>& r)
{
    int n = static_cast<int>(l.size());
    Integer num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= l[i] - l[j];
            den *= r[i] - r[j];
            if (type != RootSystem::A) {
                num *= l[i] + l[j];
                den *= r[i] + r[j];
            }
        }
        if (type == RootSystem::B || type == RootSystem::C) {
            num *= l[i];
            den *= r[i];
        }
    }
    if (num % den != 0)
        throw std::logic_error("Weyl dimension is not an integer");
    return num / den;
}

}  // namespace

Integer weyl_dim(const GroupSpec& group, const Partition& weight)
{
    int rank = group.rank();
    if (group.family != GroupFamily::GL && !weight.nonnegative())
        throw std::invalid_argument("non-dominant weight " + weight.str() + " for " + group.str());
    return weyl_dim(group, HighestWeight::from(weight, rank));
}

Integer weyl_dim(const GroupSpec& group, const HighestWeight& weight)
{
    int n = group.rank();
    if (static_cast<int>(weight.coords.size()) != n)
        throw std::invalid_argument("weight has wrong number of coordinates for " + group.str());
    std::vector<int> l2(n);
    for (int i = 0; i < n; ++i)
        l2[i] = weight.doubled ? weight.coords[i] : 2 * weight.coords[i];
    bool half = n > 0 && (l2[0] % 2 != 0);
    for (int x : l2)
        if ((x % 2 != 0) != half)
            throw std::invalid_argument("weight mixes integer and half-integer coordinates");
    bool half_allowed = group.family == GroupFamily::Spin ||
                        (group.family == GroupFamily::SO && weight.doubled);
    if (half && !half_allowed)
        throw std::invalid_argument("half-integer weight for " + group.str());
    RootSystem type = RootSystem::A;
    std::vector<int> rho2(n);
    switch (group.family) {
    case GroupFamily::GL:
        for (int i = 0; i < n; ++i)
            rho2[i] = 2 * (n - 1 - i);
        break;
    case GroupFamily::Sp:
        type = RootSystem::C;
        for (int i = 0; i < n; ++i)
            rho2[i] = 2 * (n - i);
        break;
    case GroupFamily::SO:
    case GroupFamily::Spin:
        if (group.natural_dim % 2) {
            type = RootSystem::B;
            for (int i = 0; i < n; ++i)
                rho2[i] = 2 * (n - i) - 1;
        } else {
            type = RootSystem::D;
            for (int i = 0; i < n; ++i)
                rho2[i] = 2 * (n - 1 - i);
        }
        break;
    }
    bool type_d = type == RootSystem::D;
    for (int i = 0; i + 1 < n; ++i) {
        bool ok = (type_d && i + 2 == n) ? l2[i] >= std::abs(l2[i + 1]) : l2[i] >= l2[i + 1];
        if (!ok)
            throw std::invalid_argument("non-dominant weight for " + group.str());
    }
    if ((type == RootSystem::B || type == RootSystem::C) && n > 0 && l2[n - 1] < 0)
        throw std::invalid_argument("non-dominant weight for " + group.str());
    std::vector<int> sum(n);
    for (int i = 0; i < n; ++i)
        sum[i] = l2[i] + rho2[i];
    if (type == RootSystem::D && n == 1)
        return 1;
    return weyl_product(type, sum, rho2);
}

Integer orthogonal_traceless_dim(const Partition& lam, int m)
{
    if (!lam.nonnegative())
        throw std::invalid_argument("orthogonal module needs a partition");
    if (lam.empty())
        return 1;
    Partition cols = lam.conjugate();
    int c1 = cols[0], c2 = cols[1];
    if (c1 + c2 > m)
        return 0;
    std::vector<int> c = cols.parts();
    if (2 * c1 > m)
        c[0] = m - c1;
    std::sort(c.begin(), c.end(), std::greater<>());
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    Partition assoc = Partition(c).conjugate();
    GroupSpec g = GroupSpec::so(m);
    Integer d = weyl_dim(g, assoc);
    if (m % 2 == 0 && assoc.length() == m / 2 && m > 0)
        d *= 2;
    return d;
}

Integer symplectic_dim_or_zero(const Partition& lam, int two_n)
{
    if (lam.length() > two_n / 2)
        return 0;
    return weyl_dim(GroupSpec::sp(two_n), lam);
}

std::vector<std::vector<int>> semistandard_tableaux(const Partition& lam, int n)
{
    std::vector<std::vector<int>> out;
    if (!lam.nonnegative() || lam.length() > n)
        return out;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam[r]; ++c)
            cells.emplace_back(r, c);
    std::vector<int> offset(lam.length() + 1, 0);
    for (int r = 0; r < lam.length(); ++r)
        offset[r + 1] = offset[r] + lam[r];
    std::vector<int> fill(cells.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            out.push_back(fill);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 0;
        if (c > 0)
            lo = fill[idx - 1];
        if (r > 0)
            lo = std::max(lo, fill[offset[r - 1] + c] + 1);
        int hi = n - 1 - (lam.column_length(c + 1) - 1 - r);
        for (int x = lo; x <= hi; ++x) {
            fill[idx] = x;
            rec(idx + 1);
        }
    };
    rec(0);
    return out;
}

Rational hook_rank_printed_formula(int n, int b)
{
    Rational r = binomial(n, b + 2);
    r += Rational(binomial(n, b) * (n - b) * (n - 1), b + 2);
    r.canonicalize();
    return r;
}

Integer hook_rank_closed_form(int n, int b) { return binomial(n, b + 1) + (b + 1) * binomial(n + 1, b + 2); }

namespace {

// Image dimension of the one-box GL map by the strip count: strips of mu
// that still contain the box directly above the added box.
Integer strip_image_dim(const Partition& mu, const BoxPosition& added, int h)
{
    Integer total = 0;
    for (auto& alpha : all_horizontal_strips(mu)) {
        bool has_c = added.row == 1 || alpha[added.row - 2] >= added.col;
        if (has_c)
            total += gl_dim(alpha, h);
    }
    return total;
}

Partition hook_shape(int a, int b)
{
    std::vector<int> p(a, 2);
    p.insert(p.end(), b, 1);
    return Partition(p);
}

}  // namespace

FamilySizes family_sizes(Family family, const FamilyParams& params)
{
    FamilySizes out;
    const int n = params.n;
    switch (family) {
    case Family::GL_2_21:
        if (n < 1)
            throw std::invalid_argument("GL_2_21 needs n >= 1");
        out.source = Integer((n + 2) * (n + 1) / 2);
        out.target = Integer(n * (n + 1) * (n + 2) / 3);
        out.rank = Integer((n * n + 3 * n) / 2);
        return out;
    case Family::GL_22_221: {
        if (n < 2)
            throw std::invalid_argument("GL_22_221 needs n >= 2");
        Integer N = n;
        out.source = N * (N + 1) * (N + 1) * (N + 2) / 12;
        out.target = (N + 2) * (N + 1) * (N + 1) * N * (N - 1) / 24;
        out.rank = N * (N * N - 1) * (N + 4) / 12;
        return out;
    }
    case Family::GL_hook: {
        int a = params.a, b = params.b;
        if (a < 1 || b < 0 || a + b + 1 > n + 1)
            throw std::invalid_argument("GL_hook parameters out of range");
        Partition mu = hook_shape(a, b), nu = hook_shape(a, b + 1);
        out.source = gl_dim(mu, n + 1);
        out.target = gl_dim(nu, n + 1);
        out.rank = a == 1 ? hook_rank_closed_form(n, b) : strip_image_dim(mu, BoxPosition{a + b + 1, 1}, n);
        return out;
    }
    case Family::SO_2_21: {
        if (n < 3)
            throw std::invalid_argument("SO_2_21 needs m >= 3");
        Integer m = n;
        out.source = (m * m + m - 2) / 2;
        out.target = (m * m * m - 4 * m) / 3;
        out.rank = (m * m + m - 4) / 2;
        return out;
    }
    case Family::SO_311_321:
        if (n < 5)
            throw std::invalid_argument("SO_311_321 needs m >= 5");
        out.source = orthogonal_traceless_dim(Partition{3, 1, 1}, n);
        out.target = orthogonal_traceless_dim(Partition{3, 2, 1}, n);
        out.rank = binomial(n - 1, 3) + binomial(n - 1, 2);
        out.is_corank = true;
        return out;
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace eqp
