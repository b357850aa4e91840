#include "eqp/pencil.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eqp {

std::string to_string(PencilKind k)
{
    switch (k) {
    case PencilKind::generic: return "generic";
    case PencilKind::gl: return "gl";
    case PencilKind::sp: return "sp";
    case PencilKind::so: return "so";
    case PencilKind::spin: return "spin";
    case PencilKind::koszul: return "koszul";
    case PencilKind::adjoint: return "adjoint";
    case PencilKind::fixture: return "fixture";
    }
    return "generic";
}

PencilKind pencil_kind_from_string(const std::string& s)
{
    for (auto k : {PencilKind::generic, PencilKind::gl, PencilKind::sp, PencilKind::so, PencilKind::spin,
                   PencilKind::koszul, PencilKind::adjoint, PencilKind::fixture})
        if (to_string(k) == s)
            return k;
    throw std::invalid_argument("unknown pencil structure '" + s + "'");
}

Pencil Pencil::from_rational(const std::vector<SparseMatrix<Rational>>& mats, std::size_t target_dim,
                             std::size_t source_dim)
{
    Pencil p;
    p.nvars = mats.size();
    p.target_dim = target_dim;
    p.source_dim = source_dim;
    Integer L = 1;
    for (auto& m : mats) {
        if (m.rows() != target_dim || m.cols() != source_dim)
            throw std::invalid_argument("coefficient matrix has wrong shape");
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (auto& [c, v] : m.row(r))
                mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den_mpz_t());
    }
    p.denominator = L;
    for (auto& m : mats) {
        SparseMatrix<Integer> im(target_dim, source_dim);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (auto& [c, v] : m.row(r))
                im.set(r, c, Integer(v.get_num() * (L / v.get_den())));
        p.coeffs.push_back(std::move(im));
    }
    return p;
}

SparseMatrix<Rational> Pencil::matrix(std::size_t i) const
{
    const auto& m = coeffs.at(i);
    SparseMatrix<Rational> out(target_dim, source_dim);
    for (std::size_t r = 0; r < target_dim; ++r)
        for (auto& [c, v] : m.row(r)) {
            Rational x(v, denominator);
            x.canonicalize();
            out.set(r, c, x);
        }
    return out;
}

Matrix<Rational> Pencil::evaluate(const std::vector<Rational>& x) const
{
    if (x.size() != nvars)
        throw std::invalid_argument("evaluation point has wrong length");
    Matrix<Rational> out(target_dim, source_dim);
    for (std::size_t i = 0; i < nvars; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t r = 0; r < target_dim; ++r)
            for (auto& [c, v] : coeffs[i].row(r))
                out(r, c) += x[i] * v;
    }
    Rational inv(Integer(1), denominator);
    for (auto& e : out.data())
        e *= inv;
    return out;
}

Matrix<Integer> Pencil::evaluate_integer(const std::vector<Integer>& x) const
{
    if (x.size() != nvars)
        throw std::invalid_argument("evaluation point has wrong length");
    Matrix<Integer> out(target_dim, source_dim);
    for (std::size_t i = 0; i < nvars; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t r = 0; r < target_dim; ++r)
            for (auto& [c, v] : coeffs[i].row(r))
                out(r, c) += x[i] * v;
    }
    return out;
}

Matrix<std::uint32_t> Pencil::evaluate_mod(const PrimeField& f, const std::vector<std::uint32_t>& x) const
{
    if (x.size() != nvars)
        throw std::invalid_argument("evaluation point has wrong length");
    Matrix<std::uint32_t> out(target_dim, source_dim, 0);
    for (std::size_t i = 0; i < nvars; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t r = 0; r < target_dim; ++r)
            for (auto& [c, v] : coeffs[i].row(r))
                out(r, c) = f.add(out(r, c), f.mul(x[i], f.from_integer(v)));
    }
    return out;
}

bool Pencil::is_zero() const
{
    for (auto& m : coeffs)
        if (!m.is_zero())
            return false;
    return true;
}

void Pencil::validate() const
{
    if (coeffs.size() != nvars)
        throw std::invalid_argument("pencil has " + std::to_string(coeffs.size()) + " matrices for " +
                                    std::to_string(nvars) + " variables");
    if (!var_labels.empty() && var_labels.size() != nvars)
        throw std::invalid_argument("pencil variable labels do not match nvars");
    if (sgn(denominator) <= 0)
        throw std::invalid_argument("pencil denominator must be positive");
    for (auto& m : coeffs)
        if (m.rows() != target_dim || m.cols() != source_dim)
            throw std::invalid_argument("coefficient matrix has wrong shape");
}

bool same_coefficients(const Pencil& a, const Pencil& b)
{
    return a.nvars == b.nvars && a.source_dim == b.source_dim && a.target_dim == b.target_dim &&
           a.denominator == b.denominator && a.coeffs == b.coeffs;
}

bool check_equivariance(const Pencil& p, const std::vector<LieTriple>& generators)
{
    std::vector<SparseMatrix<Rational>> A;
    for (auto& m : p.coeffs) {
        SparseMatrix<Rational> r(p.target_dim, p.source_dim);
        for (std::size_t i = 0; i < p.target_dim; ++i)
            for (auto& [j, v] : m.row(i))
                r.set(i, j, Rational(v));
        A.push_back(std::move(r));
    }
    for (auto& g : generators) {
        auto var_t = g.var.transpose();
        for (std::size_t i = 0; i < p.nvars; ++i) {
            auto lhs = g.target * A[i] - A[i] * g.source;
            SparseMatrix<Rational> rhs(p.target_dim, p.source_dim);
            for (auto& [j, c] : var_t.row(i))
                rhs = rhs + A[j].scaled(c);
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

namespace {

std::string schur_label(const char* prefix, const Partition& lam, int v)
{
    return std::string(prefix) + "(" + lam.str() + ")C^" + std::to_string(v);
}

std::vector<std::string> natural_labels(int v, const char* letter = "e")
{
    std::vector<std::string> out;
    for (int i = 1; i <= v; ++i)
        out.push_back(letter + std::to_string(i));
    return out;
}

std::string subset_name(const std::vector<int>& I, int v)
{
    std::string s = "e_";
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k && v > 9)
            s += '.';
        s += std::to_string(I[k] + 1);
    }
    return I.empty() ? "e_0" : s;
}

SparseMatrix<Rational> sparse_of(const Matrix<Rational>& X) { return SparseMatrix<Rational>::from_dense(X); }

void require_one_box(const Partition& mu, const Partition& nu, BoxPosition* box)
{
    if (!mu.nonnegative() || !nu.nonnegative())
        throw std::invalid_argument("pencil shapes must be partitions");
    if (!one_box_difference(mu, nu, box))
        throw std::invalid_argument("(" + mu.str() + ") -> (" + nu.str() + ") is not a one-box pair");
}

void certify(Pencil& p, const std::string& group, const std::vector<LieTriple>& gens)
{
    if (!check_equivariance(p, gens))
        throw std::logic_error("equivariance certificate failed for " + p.source_label + " -> " + p.target_label);
    p.certificate = {true, group, gens.size()};
}

Pencil form_pencil(const ModulePtr& src, const ModulePtr& dst, PencilKind kind, int N, const BuildOptions& opt)
{
    auto gl = gl_multiplication_matrices(*src->parent(), *dst->parent());
    auto proj = dst->projection();
    auto inc = src->inclusion();
    std::vector<SparseMatrix<Rational>> mats;
    for (auto& m : gl)
        mats.push_back(proj * m * inc);
    Pencil p = Pencil::from_rational(mats, dst->dim(), src->dim());
    const char* prefix = kind == PencilKind::sp ? "Sp" : "SO";
    p.source_label = schur_label(prefix, src->weight(), N);
    p.target_label = schur_label(prefix, dst->weight(), N);
    p.var_labels = natural_labels(N);
    p.kind = kind;
    p.natural_dim = N;
    p.spec = BuildSpec{kind, src->weight(), dst->weight(), N, 0};
    if (p.is_zero())
        throw std::logic_error("projected pencil vanishes");
    if (opt.certify) {
        std::vector<LieTriple> gens;
        GroupSpec g = kind == PencilKind::sp ? GroupSpec::sp(N) : GroupSpec::so(N);
        for (auto& X : lie_algebra_basis(g))
            gens.push_back({sparse_of(X), src->lie_matrix(X), dst->lie_matrix(X)});
        certify(p, g.str(), gens);
    }
    return p;
}

}  // namespace

std::vector<SparseMatrix<Rational>> gl_multiplication_matrices(const RealizedModule& src, const RealizedModule& dst)
{
    BoxPosition box;
    require_one_box(src.weight(), dst.weight(), &box);
    const int v = src.ambient().base_dim();
    if (dst.ambient().base_dim() != v || src.parent() || dst.parent())
        throw std::invalid_argument("multiplication needs GL modules over the same space");
    const auto& sym = dst.symmetrizer();
    const int slot = sym.slot(box);
    const auto& S = src.ambient();
    const auto& T = dst.ambient();
    const int d1 = T.degree();
    std::vector<SparseMatrix<Rational>> out(v, SparseMatrix<Rational>(dst.dim(), src.dim()));
    Word q(d1);
    for (auto& B : dst.blocks())
        for (std::size_t r = 0; r < B.dim(); ++r) {
            Word p = T.decode(B.columns[B.pivots[r]]);
            std::vector<std::map<WordIndex, long>> f(v);
            for (auto& t : sym.terms()) {
                for (int k = 0; k < d1; ++k)
                    q[k] = p[t.perm[k]];
                f[q[slot]][S.encode(remove_position(q, slot))] += t.sign;
            }
            for (int i = 0; i < v; ++i) {
                if (f[i].empty() || B.key[i] == 0)
                    continue;
                auto c = B.key;
                --c[i];
                const ModuleBlock* sb = src.block(c);
                if (!sb)
                    continue;
                std::vector<std::pair<long, long>> terms;
                for (auto& [z, cnt] : f[i]) {
                    if (cnt == 0)
                        continue;
                    long j = sb->find(z);
                    if (j < 0)
                        throw std::logic_error("multiplication leaves the weight block");
                    terms.emplace_back(j, cnt);
                }
                for (std::size_t s = 0; s < sb->dim(); ++s) {
                    Rational val = 0;
                    for (auto& [j, cnt] : terms)
                        if (sgn(sb->basis(s, j)) != 0)
                            val += sb->basis(s, j) * cnt;
                    if (sgn(val) != 0)
                        out[i].set(B.offset + r, sb->offset + s, val);
                }
            }
        }
    return out;
}

Pencil build_gl_pencil(const Partition& mu, const Partition& nu, int v, const BuildOptions& opt)
{
    require_one_box(mu, nu, nullptr);
    auto src = schur_module(mu, v);
    auto dst = schur_module(nu, v);
    Pencil p = Pencil::from_rational(gl_multiplication_matrices(*src, *dst), dst->dim(), src->dim());
    p.source_label = schur_label("S", mu, v);
    p.target_label = schur_label("S", nu, v);
    p.var_labels = natural_labels(v);
    p.kind = PencilKind::gl;
    p.natural_dim = v;
    p.spec = BuildSpec{PencilKind::gl, mu, nu, v, 0};
    if (p.is_zero())
        throw std::logic_error("GL pencil vanishes");
    if (opt.certify) {
        std::vector<LieTriple> gens;
        for (auto& X : lie_algebra_basis(GroupSpec::gl(v)))
            gens.push_back({sparse_of(X), src->lie_matrix(X), dst->lie_matrix(X)});
        certify(p, GroupSpec::gl(v).str(), gens);
    }
    return p;
}

Pencil build_sp_pencil(const Partition& mu, const Partition& nu, int two_n, const BuildOptions& opt)
{
    require_one_box(mu, nu, nullptr);
    return form_pencil(symplectic_module(mu, two_n), symplectic_module(nu, two_n), PencilKind::sp, two_n, opt);
}

Pencil build_so_pencil(const Partition& mu, const Partition& nu, int m, const BuildOptions& opt)
{
    require_one_box(mu, nu, nullptr);
    return form_pencil(orthogonal_module(mu, m), orthogonal_module(nu, m), PencilKind::so, m, opt);
}

std::vector<std::vector<int>> exterior_basis(int v, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > v)
        return out;
    std::vector<int> I(k);
    for (int i = 0; i < k; ++i)
        I[i] = i;
    while (true) {
        out.push_back(I);
        int i = k - 1;
        while (i >= 0 && I[i] == v - k + i)
            --i;
        if (i < 0)
            break;
        ++I[i];
        for (int j = i + 1; j < k; ++j)
            I[j] = I[j - 1] + 1;
    }
    return out;
}

SparseMatrix<Rational> exterior_lie_matrix(const Matrix<Rational>& X, int k)
{
    const int v = static_cast<int>(X.rows());
    auto basis = exterior_basis(v, k);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = i;
    SparseMatrix<Rational> m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& I = basis[col];
        for (int t = 0; t < k; ++t)
            for (int a = 0; a < v; ++a) {
                if (sgn(X(a, I[t])) == 0)
                    continue;
                auto J = I;
                J[t] = a;
                int sign = 1;
                bool dup = false;
                for (int x = 0; x < k && !dup; ++x)
                    for (int y = x + 1; y < k; ++y) {
                        if (J[x] == J[y]) {
                            dup = true;
                            break;
                        }
                        if (J[x] > J[y])
                            sign = -sign;
                    }
                if (dup)
                    continue;
                std::sort(J.begin(), J.end());
                m.add(index[J], col, X(a, I[t]) * sign);
            }
    }
    return m;
}

Pencil build_koszul_pencil(int k, int v, const BuildOptions& opt)
{
    if (v < 1 || k < 0 || k >= v)
        throw std::invalid_argument("Koszul pencil needs 0 <= k < v");
    auto src = exterior_basis(v, k);
    auto dst = exterior_basis(v, k + 1);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i)
        index[dst[i]] = i;
    std::vector<SparseMatrix<Rational>> mats(v, SparseMatrix<Rational>(dst.size(), src.size()));
    for (int i = 0; i < v; ++i)
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& I = src[col];
            if (std::find(I.begin(), I.end(), i) != I.end())
                continue;
            int before = static_cast<int>(std::count_if(I.begin(), I.end(), [&](int j) { return j < i; }));
            auto J = I;
            J.insert(std::lower_bound(J.begin(), J.end(), i), i);
            mats[i].set(index[J], col, Rational(before % 2 ? -1 : 1));
        }
    Pencil p = Pencil::from_rational(mats, dst.size(), src.size());
    p.source_label = "L" + std::to_string(k) + "C^" + std::to_string(v);
    p.target_label = "L" + std::to_string(k + 1) + "C^" + std::to_string(v);
    p.var_labels = natural_labels(v);
    p.kind = PencilKind::koszul;
    p.natural_dim = v;
    p.spec = BuildSpec{PencilKind::koszul, {}, {}, v, k};
    if (opt.certify) {
        std::vector<LieTriple> gens;
        for (auto& X : lie_algebra_basis(GroupSpec::gl(v)))
            gens.push_back({sparse_of(X), exterior_lie_matrix(X, k), exterior_lie_matrix(X, k + 1)});
        certify(p, GroupSpec::gl(v).str(), gens);
    }
    return p;
}

Pencil build_spin_pencil(int n, const BuildOptions& opt)
{
    const auto& sp = spin_space(n);
    RationalField q;
    std::vector<SparseMatrix<Rational>> mats;
    for (std::size_t I = 0; I < sp.plus.dim(); ++I) {
        SparseMatrix<Rational> m(sp.minus.dim(), 2 * n);
        FVector<RationalField> s(std::size_t{1} << n, Rational(0));
        s[sp.plus.masks[I]] = 1;
        for (int w = 0; w < 2 * n; ++w) {
            auto img = clifford_basis_action(q, n, w, s);
            for (std::uint32_t mask = 0; mask < img.size(); ++mask)
                if (sgn(img[mask]) != 0)
                    m.set(sp.minus.index[mask], w, img[mask]);
        }
        mats.push_back(std::move(m));
    }
    Pencil p = Pencil::from_rational(mats, sp.minus.dim(), 2 * n);
    p.source_label = "W(" + std::to_string(2 * n) + ")";
    p.target_label = "Delta-(" + std::to_string(n) + ")";
    p.var_labels = sp.plus.labels;
    p.kind = PencilKind::spin;
    p.natural_dim = n;
    p.spec = BuildSpec{PencilKind::spin, {}, {}, n, 0};
    if (opt.certify) {
        std::vector<LieTriple> gens;
        for (auto [a, b] : spin_lie_pairs(n))
            gens.push_back({spin_lie_on_spinors(sp.plus, a, b), spin_lie_on_w(n, a, b),
                            spin_lie_on_spinors(sp.minus, a, b)});
        certify(p, GroupSpec::spin(2 * n).str(), gens);
    }
    return p;
}

namespace {

std::vector<Matrix<Rational>> sl_basis(int a)
{
    std::vector<Matrix<Rational>> out;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (i != j) {
                Matrix<Rational> X(a, a);
                X(i, j) = 1;
                out.push_back(std::move(X));
            }
    for (int k = 0; k + 1 < a; ++k) {
        Matrix<Rational> X(a, a);
        X(k, k) = 1;
        X(k + 1, k + 1) = -1;
        out.push_back(std::move(X));
    }
    return out;
}

std::vector<Rational> sl_coordinates(const Matrix<Rational>& X)
{
    const int a = static_cast<int>(X.rows());
    std::vector<Rational> c;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (i != j)
                c.push_back(X(i, j));
    Rational run = 0;
    for (int k = 0; k + 1 < a; ++k) {
        run += X(k, k);
        c.push_back(run);
    }
    return c;
}

Matrix<Rational> commutator(const Matrix<Rational>& A, const Matrix<Rational>& B)
{
    RationalField q;
    auto ab = multiply(q, A, B);
    auto ba = multiply(q, B, A);
    for (std::size_t i = 0; i < ab.data().size(); ++i)
        ab.data()[i] -= ba.data()[i];
    return ab;
}

}  // namespace

Pencil build_adjoint_pencil(int a, const BuildOptions& opt)
{
    if (a < 3)
        throw std::invalid_argument("adjoint pencil needs a >= 3");
    auto L3 = exterior_basis(a, 3);
    auto sl = sl_basis(a);
    std::vector<SparseMatrix<Rational>> actions;
    for (auto& X : sl)
        actions.push_back(exterior_lie_matrix(X, 3));
    std::vector<SparseMatrix<Rational>> mats(L3.size(), SparseMatrix<Rational>(L3.size(), sl.size()));
    for (std::size_t col = 0; col < sl.size(); ++col) {
        const auto& M = actions[col];
        for (std::size_t r = 0; r < L3.size(); ++r)
            for (auto& [I, v] : M.row(r))
                mats[I].set(r, col, v);
    }
    Pencil p = Pencil::from_rational(mats, L3.size(), sl.size());
    p.source_label = "sl(" + std::to_string(a) + ")";
    p.target_label = "L3C^" + std::to_string(a);
    for (auto& I : L3)
        p.var_labels.push_back(subset_name(I, a));
    p.kind = PencilKind::adjoint;
    p.natural_dim = a;
    p.spec = BuildSpec{PencilKind::adjoint, {}, {}, a, 0};
    if (opt.certify) {
        std::vector<LieTriple> gens;
        for (auto& Y : lie_algebra_basis(GroupSpec::gl(a))) {
            SparseMatrix<Rational> ad(sl.size(), sl.size());
            for (std::size_t col = 0; col < sl.size(); ++col) {
                auto c = sl_coordinates(commutator(Y, sl[col]));
                for (std::size_t r = 0; r < c.size(); ++r)
                    ad.set(r, col, c[r]);
            }
            auto rho = exterior_lie_matrix(Y, 3);
            gens.push_back({rho, ad, rho});
        }
        certify(p, GroupSpec::gl(a).str(), gens);
    }
    return p;
}

Pencil build_from_spec(const BuildSpec& spec, const BuildOptions& opt)
{
    switch (spec.kind) {
    case PencilKind::gl: return build_gl_pencil(spec.mu, spec.nu, spec.dim, opt);
    case PencilKind::sp: return build_sp_pencil(spec.mu, spec.nu, spec.dim, opt);
    case PencilKind::so: return build_so_pencil(spec.mu, spec.nu, spec.dim, opt);
    case PencilKind::spin: return build_spin_pencil(spec.dim, opt);
    case PencilKind::koszul: return build_koszul_pencil(spec.k, spec.dim, opt);
    case PencilKind::adjoint: return build_adjoint_pencil(spec.dim, opt);
    default: break;
    }
    throw std::invalid_argument("no builder for " + to_string(spec.kind) + " pencils");
}

bool recertify(Pencil& p)
{
    if (p.certificate.valid)
        return true;
    if (!p.spec)
        return false;
    Pencil ref = build_from_spec(*p.spec);
    if (!same_coefficients(p, ref) || !ref.certificate.valid)
        return false;
    p.certificate = ref.certificate;
    return true;
}

ThetaOperator::ThetaOperator(int a, int b, const Partition& lam, const Partition& lam_p, const Partition& mu,
                             const Partition& mu_p)
    : a_(a), b_(b)
{
    BoxPosition removed;
    require_one_box(lam_p, lam, &removed);
    require_one_box(mu, mu_p, nullptr);
    if (a < 1 || b < 1)
        throw std::invalid_argument("theta map needs positive dimensions");
    auto fits = [](const Partition& p, int v) { return p.length() <= v; };
    src_lam_ = fits(lam, a) ? gl_dim(lam, a).get_ui() : 0;
    dst_lam_ = fits(lam_p, a) ? gl_dim(lam_p, a).get_ui() : 0;
    src_mu_ = fits(mu, b) ? gl_dim(mu, b).get_ui() : 0;
    dst_mu_ = fits(mu_p, b) ? gl_dim(mu_p, b).get_ui() : 0;
    if (source_dim() == 0 || target_dim() == 0)
        return;

    auto SB = schur_module(mu, b);
    auto SB2 = schur_module(mu_p, b);
    multiply_ = gl_multiplication_matrices(*SB, *SB2);

    auto SA = schur_module(lam, a);
    auto SA2 = schur_module(lam_p, a);
    const int slot = SA->symmetrizer().slot(removed);
    const auto& sym = SA2->symmetrizer();
    const auto& T = SA2->ambient();
    const auto& S = SA->ambient();
    const int d = T.degree();
    contract_.assign(a, SparseMatrix<Rational>(SA2->dim(), SA->dim()));
    Word q(d);
    for (auto& B : SA2->blocks())
        for (std::size_t r = 0; r < B.dim(); ++r) {
            Word p = T.decode(B.columns[B.pivots[r]]);
            std::vector<std::map<WordIndex, long>> f(a);
            for (auto& t : sym.terms()) {
                for (int k = 0; k < d; ++k)
                    q[k] = p[t.perm[k]];
                for (int i = 0; i < a; ++i)
                    f[i][S.encode(insert_letter(q, slot, i))] += t.sign;
            }
            for (int i = 0; i < a; ++i) {
                auto c = B.key;
                ++c[i];
                const ModuleBlock* sb = SA->block(c);
                if (!sb)
                    continue;
                std::vector<std::pair<long, long>> terms;
                for (auto& [w, cnt] : f[i])
                    if (cnt != 0)
                        terms.emplace_back(sb->find(w), cnt);
                for (std::size_t s = 0; s < sb->dim(); ++s) {
                    Rational val = 0;
                    for (auto& [j, cnt] : terms)
                        val += sb->basis(s, j) * cnt;
                    if (sgn(val) != 0)
                        contract_[i].set(B.offset + r, sb->offset + s, val);
                }
            }
        }
}

Matrix<Rational> ThetaOperator::evaluate(const Matrix<Rational>& X) const
{
    if (static_cast<int>(X.rows()) != a_ || static_cast<int>(X.cols()) != b_)
        throw std::invalid_argument("theta map argument has wrong shape");
    Matrix<Rational> out(target_dim(), source_dim());
    if (out.rows() == 0 || out.cols() == 0)
        return out;
    for (int i = 0; i < a_; ++i)
        for (int j = 0; j < b_; ++j) {
            if (sgn(X(i, j)) == 0)
                continue;
            const auto& D = contract_[i];
            const auto& P = multiply_[j];
            for (std::size_t t1 = 0; t1 < D.rows(); ++t1)
                for (auto& [s1, v1] : D.row(t1)) {
                    Rational xv = X(i, j) * v1;
                    for (std::size_t t2 = 0; t2 < P.rows(); ++t2)
                        for (auto& [s2, v2] : P.row(t2))
                            out(t1 * dst_mu_ + t2, s1 * src_mu_ + s2) += xv * v2;
                }
        }
    return out;
}

Matrix<std::uint32_t> ThetaOperator::evaluate_mod(const PrimeField& f, const Matrix<std::uint32_t>& X) const
{
    if (static_cast<int>(X.rows()) != a_ || static_cast<int>(X.cols()) != b_)
        throw std::invalid_argument("theta map argument has wrong shape");
    Matrix<std::uint32_t> out(target_dim(), source_dim(), 0);
    if (out.rows() == 0 || out.cols() == 0)
        return out;
    for (int i = 0; i < a_; ++i)
        for (int j = 0; j < b_; ++j) {
            if (X(i, j) == 0)
                continue;
            const auto& D = contract_[i];
            const auto& P = multiply_[j];
            for (std::size_t t1 = 0; t1 < D.rows(); ++t1)
                for (auto& [s1, v1] : D.row(t1)) {
                    auto xv = f.mul(X(i, j), f.from_rational(v1));
                    for (std::size_t t2 = 0; t2 < P.rows(); ++t2)
                        for (auto& [s2, v2] : P.row(t2)) {
                            auto& e = out(t1 * dst_mu_ + t2, s1 * src_mu_ + s2);
                            e = f.add(e, f.mul(xv, f.from_rational(v2)));
                        }
                }
        }
    return out;
}

Matrix<Rational> theta_map(const Matrix<Rational>& X, const Partition& lam, const Partition& lam_p, const Partition& mu,
                           const Partition& mu_p)
{
    ThetaOperator op(static_cast<int>(X.rows()), static_cast<int>(X.cols()), lam, lam_p, mu, mu_p);
    return op.evaluate(X);
}

HyperplaneBound hyperplane_bound_criterion(const Partition& lam, const Partition& mu, int p)
{
    if (p < 1)
        throw std::invalid_argument("hyperplane criterion needs p >= 1");
    if (!lam.nonnegative() || !mu.nonnegative() || !mu.contains(lam) || mu.size() != lam.size() + 2)
        throw std::invalid_argument("mu must be lam plus two boxes");
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] - lam[i] > 1)
            throw std::invalid_argument("the two added boxes lie in one row");
    HyperplaneBound h;
    h.even_difference = gl_dim(lam, 2 * p) - gl_dim(mu, 2 * p);
    h.odd_difference = gl_dim(lam, 2 * p + 1) - gl_dim(mu, 2 * p + 1);
    h.certified = h.even_difference > h.odd_difference && h.even_difference > 0;
    h.kernel_bound = h.certified ? h.even_difference : Integer(0);
    return h;
}

}  // namespace eqp
