#include "eqp/modules.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace eqp {

BilinearFormSpec BilinearFormSpec::symplectic(int two_n)
{
    if (two_n <= 0 || two_n % 2)
        throw std::invalid_argument("symplectic form needs even dimension");
    BilinearFormSpec f;
    f.kind = FormKind::symplectic;
    f.dim = two_n;
    f.matrix = Matrix<int>(two_n, two_n, 0);
    for (int i = 0; i < two_n; i += 2) {
        f.matrix(i, i + 1) = 1;
        f.matrix(i + 1, i) = -1;
    }
    return f;
}

BilinearFormSpec BilinearFormSpec::orthogonal(int m)
{
    if (m <= 0)
        throw std::invalid_argument("orthogonal form needs positive dimension");
    BilinearFormSpec f;
    f.kind = FormKind::orthogonal;
    f.dim = m;
    f.matrix = Matrix<int>(m, m, 0);
    for (int i = 0; i < m; ++i)
        f.matrix(i, i) = 1;
    return f;
}

int BilinearFormSpec::dual(int a, int b) const { return matrix(a, b); }

long ModuleBlock::find(std::uint64_t column) const
{
    auto it = std::lower_bound(columns.begin(), columns.end(), column);
    if (it == columns.end() || *it != column)
        return -1;
    return it - columns.begin();
}

namespace {

std::string word_label(const Word& w, int v)
{
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k && v > 9)
            s += '.';
        s += std::to_string(w[k] + 1);
    }
    return s;
}

std::vector<WordIndex> words_with_content(const TensorSpace& space, const std::vector<int>& content)
{
    Word w;
    for (int a = 0; a < static_cast<int>(content.size()); ++a)
        w.insert(w.end(), content[a], a);
    std::vector<WordIndex> out;
    do {
        out.push_back(space.encode(w));
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GradeKey RealizedModule::grade_of_content(const std::vector<int>& content) const
{
    if (!form_)
        return content;
    GradeKey g;
    if (form_->kind == FormKind::symplectic) {
        for (std::size_t i = 0; i + 1 < content.size(); i += 2)
            g.push_back(content[i] - content[i + 1]);
    } else {
        for (int c : content)
            g.push_back(c % 2);
    }
    return g;
}

GradeKey RealizedModule::grade(WordIndex w) const { return grade_of_content(ambient_.content(w)); }

const ModuleBlock* RealizedModule::block(const GradeKey& key) const
{
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), key,
                               [](const ModuleBlock& b, const GradeKey& k) { return b.key < k; });
    if (it == blocks_.end() || it->key != key)
        return nullptr;
    return &*it;
}

std::pair<const ModuleBlock*, std::size_t> RealizedModule::locate(std::size_t row) const
{
    if (row >= dim_)
        throw std::out_of_range("basis index out of range");
    const ModuleBlock& b = blocks_[block_of_row_[row]];
    return {&b, row - b.offset};
}

void RealizedModule::finalize()
{
    std::sort(blocks_.begin(), blocks_.end(), [](const ModuleBlock& a, const ModuleBlock& b) { return a.key < b.key; });
    dim_ = 0;
    block_of_row_.clear();
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        blocks_[i].offset = dim_;
        dim_ += blocks_[i].dim();
        block_of_row_.insert(block_of_row_.end(), blocks_[i].dim(), i);
    }
}

TensorVector RealizedModule::ambient_vector(std::size_t i) const
{
    auto [b, r] = locate(i);
    TensorVector out;
    if (!parent_) {
        for (std::size_t j = 0; j < b->columns.size(); ++j)
            if (sgn(b->basis(r, j)) != 0)
                out.emplace(b->columns[j], b->basis(r, j));
        return out;
    }
    for (std::size_t j = 0; j < b->columns.size(); ++j)
        if (sgn(b->basis(r, j)) != 0)
            axpy(out, b->basis(r, j), parent_->ambient_vector(b->columns[j]));
    return out;
}

TensorVector RealizedModule::ambient_vector(const std::vector<Rational>& coords) const
{
    if (coords.size() != dim_)
        throw std::invalid_argument("coordinate vector has wrong length");
    TensorVector out;
    for (std::size_t i = 0; i < dim_; ++i)
        if (sgn(coords[i]) != 0)
            axpy(out, coords[i], ambient_vector(i));
    return out;
}

std::optional<std::vector<Rational>> RealizedModule::try_coordinates(const TensorVector& v) const
{
    if (parent_) {
        auto p = parent_->try_coordinates(v);
        if (!p)
            return std::nullopt;
        return try_coordinates_from_parent(*p);
    }
    std::map<std::size_t, std::vector<Rational>> local;
    for (auto& [w, c] : v) {
        if (sgn(c) == 0)
            continue;
        const ModuleBlock* b = block(ambient_.content(w));
        if (!b)
            return std::nullopt;
        std::size_t bi = static_cast<std::size_t>(b - blocks_.data());
        auto& vec = local[bi];
        if (vec.empty())
            vec.resize(b->columns.size());
        long j = b->find(w);
        if (j < 0)
            return std::nullopt;
        vec[j] = c;
    }
    std::vector<Rational> coords(dim_);
    for (auto& [bi, vec] : local) {
        const ModuleBlock& b = blocks_[bi];
        for (std::size_t r = 0; r < b.dim(); ++r) {
            Rational c = vec[b.pivots[r]];
            coords[b.offset + r] = c;
            if (sgn(c) == 0)
                continue;
            for (std::size_t j = 0; j < b.columns.size(); ++j)
                if (sgn(b.basis(r, j)) != 0)
                    vec[j] -= c * b.basis(r, j);
        }
        for (auto& x : vec)
            if (sgn(x) != 0)
                return std::nullopt;
    }
    return coords;
}

std::vector<Rational> RealizedModule::coordinates(const TensorVector& v) const
{
    auto c = try_coordinates(v);
    if (!c)
        throw std::logic_error("vector is not in " + group_.str() + " module " + weight_.str());
    return *c;
}

std::optional<std::vector<Rational>> RealizedModule::try_coordinates_from_parent(const std::vector<Rational>& p) const
{
    if (!parent_)
        throw std::logic_error("module has no parent");
    if (p.size() != parent_->dim())
        throw std::invalid_argument("parent coordinate vector has wrong length");
    std::vector<bool> covered(p.size(), false);
    std::vector<Rational> coords(dim_);
    for (auto& b : blocks_) {
        std::vector<Rational> vec(b.columns.size());
        for (std::size_t j = 0; j < b.columns.size(); ++j) {
            vec[j] = p[b.columns[j]];
            covered[b.columns[j]] = true;
        }
        for (std::size_t r = 0; r < b.dim(); ++r) {
            Rational c = vec[b.pivots[r]];
            coords[b.offset + r] = c;
            if (sgn(c) == 0)
                continue;
            for (std::size_t j = 0; j < b.columns.size(); ++j)
                if (sgn(b.basis(r, j)) != 0)
                    vec[j] -= c * b.basis(r, j);
        }
        for (auto& x : vec)
            if (sgn(x) != 0)
                return std::nullopt;
    }
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!covered[j] && sgn(p[j]) != 0)
            return std::nullopt;
    return coords;
}

SparseMatrix<Rational> RealizedModule::inclusion() const
{
    if (!parent_)
        throw std::logic_error("module has no parent");
    SparseMatrix<Rational> m(parent_->dim(), dim_);
    for (auto& b : blocks_)
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t j = 0; j < b.columns.size(); ++j)
                if (sgn(b.basis(r, j)) != 0)
                    m.set(b.columns[j], b.offset + r, b.basis(r, j));
    return m;
}

SparseMatrix<Rational> RealizedModule::projection() const
{
    if (!parent_)
        throw std::logic_error("module has no parent");
    SparseMatrix<Rational> m(dim_, parent_->dim());
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto& b = blocks_[bi];
        const auto& P = projectors_[bi];
        for (std::size_t l = 0; l < b.columns.size(); ++l)
            for (std::size_t i = 0; i < b.dim(); ++i)
                if (sgn(P(l, i)) != 0)
                    m.set(b.offset + i, b.columns[l], P(l, i));
    }
    return m;
}

namespace {

std::vector<Rational> sparse_apply(const SparseMatrix<Rational>& m, const std::vector<Rational>& x)
{
    std::vector<Rational> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& [j, v] : m.row(i))
            if (sgn(x[j]) != 0)
                y[i] += v * x[j];
    return y;
}

}  // namespace

SparseMatrix<Rational> RealizedModule::lie_matrix(const Matrix<Rational>& X) const
{
    SparseMatrix<Rational> m(dim_, dim_);
    if (!parent_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            auto image = lie_action_tensor(X, ambient_, ambient_vector(i));
            auto c = try_coordinates(image);
            if (!c)
                throw std::logic_error("module " + weight_.str() + " is not stable under the Lie algebra element");
            for (std::size_t r = 0; r < dim_; ++r)
                if (sgn((*c)[r]) != 0)
                    m.set(r, i, (*c)[r]);
        }
        return m;
    }
    auto pm = parent_->lie_matrix(X);
    auto inc = inclusion();
    for (std::size_t i = 0; i < dim_; ++i) {
        std::vector<Rational> u(parent_->dim());
        for (std::size_t r = 0; r < parent_->dim(); ++r)
            u[r] = inc.get(r, i);
        auto c = try_coordinates_from_parent(sparse_apply(pm, u));
        if (!c)
            throw std::logic_error("module " + weight_.str() + " is not stable under the Lie algebra element");
        for (std::size_t r = 0; r < dim_; ++r)
            if (sgn((*c)[r]) != 0)
                m.set(r, i, (*c)[r]);
    }
    return m;
}

Subspace<RationalField> RealizedModule::subspace() const
{
    if (ambient_.size() > (1u << 16))
        throw std::length_error("ambient space too large for a dense subspace");
    RationalField q;
    Matrix<Rational> rows(dim_, ambient_.size());
    for (std::size_t i = 0; i < dim_; ++i)
        for (auto& [w, c] : ambient_vector(i))
            rows(i, w) = c;
    return Subspace<RationalField>::span(q, rows);
}

std::shared_ptr<const RealizedModule> RealizedModule::make_schur(const Partition& lam, int v)
{
    if (!lam.nonnegative())
        throw std::invalid_argument("Schur module needs a partition, got " + lam.str());
    if (lam.length() > v)
        throw std::invalid_argument("partition " + lam.str() + " has more than " + std::to_string(v) + " rows");
    auto mod = std::shared_ptr<RealizedModule>(new RealizedModule());
    mod->group_ = GroupSpec::gl(v);
    mod->weight_ = lam;
    mod->ambient_ = TensorSpace(v, lam.size());
    mod->symmetrizer_ = std::make_shared<YoungSymmetrizer>(lam);
    const auto& sym = *mod->symmetrizer_;
    const auto& space = mod->ambient_;

    std::map<std::vector<int>, std::vector<Word>> by_content;
    for (auto& t : semistandard_tableaux(lam, v)) {
        Word w(lam.size());
        std::vector<int> content(v, 0);
        std::size_t idx = 0;
        for (int r = 0; r < lam.length(); ++r)
            for (int c = 0; c < lam[r]; ++c) {
                w[sym.slot(BoxPosition{r + 1, c + 1})] = t[idx];
                ++content[t[idx]];
                ++idx;
            }
        by_content[content].push_back(std::move(w));
    }
    RationalField q;
    for (auto& [content, words] : by_content) {
        ModuleBlock b;
        b.key = content;
        b.columns = words_with_content(space, content);
        Matrix<Rational> m(words.size(), b.columns.size());
        for (std::size_t i = 0; i < words.size(); ++i)
            for (auto& [wi, c] : sym.apply_word(space, words[i]))
                m(i, b.find(wi)) = c;
        auto e = row_reduce(q, m);
        if (e.rank() != words.size())
            throw std::logic_error("symmetrized tableau words are dependent for " + lam.str());
        b.basis = std::move(e.rref);
        b.pivots = std::move(e.pivots);
        mod->blocks_.push_back(std::move(b));
    }
    mod->finalize();
    for (auto& b : mod->blocks_)
        for (auto p : b.pivots)
            mod->labels_.push_back(word_label(space.decode(b.columns[p]), v));
    if (Integer(static_cast<unsigned long>(mod->dim_)) != gl_dim(lam, v))
        throw std::logic_error("Schur module dimension disagrees with the hook-content formula");
    return mod;
}

std::shared_ptr<const RealizedModule> RealizedModule::make_form_module(const Partition& lam, const BilinearFormSpec& form)
{
    const int N = form.dim;
    Integer expected;
    GroupSpec group;
    if (form.kind == FormKind::symplectic) {
        if (lam.length() > N / 2)
            throw std::invalid_argument("symplectic weight " + lam.str() + " has too many rows");
        group = GroupSpec::sp(N);
        expected = symplectic_dim_or_zero(lam, N);
    } else {
        group = GroupSpec::so(N);
        expected = orthogonal_traceless_dim(lam, N);
        if (expected == 0)
            throw std::invalid_argument("orthogonal module " + lam.str() + " vanishes for m=" + std::to_string(N));
    }
    auto parent = schur_module(lam, N);
    auto mod = std::shared_ptr<RealizedModule>(new RealizedModule());
    mod->group_ = group;
    mod->weight_ = lam;
    mod->ambient_ = parent->ambient();
    mod->parent_ = parent;
    mod->form_ = form;
    mod->symmetrizer_ = std::make_shared<YoungSymmetrizer>(parent->symmetrizer());
    const auto& space = mod->ambient_;
    const int d = space.degree();

    std::map<GradeKey, std::vector<std::size_t>> classes;
    for (auto& b : parent->blocks()) {
        auto g = mod->grade_of_content(b.key);
        for (std::size_t r = 0; r < b.dim(); ++r)
            classes[g].push_back(b.offset + r);
    }

    RationalField q;
    PrimeField fp;
    TensorSpace lower(N, std::max(d - 2, 0));
    for (auto& [g, cols] : classes) {
        const std::size_t k = cols.size();
        // contraction outputs: (pair, lower word) -> entries (local col, value)
        std::map<std::pair<int, WordIndex>, std::vector<std::pair<std::size_t, Rational>>> rows;
        for (std::size_t j = 0; j < k; ++j) {
            auto [pb, pr] = parent->locate(cols[j]);
            std::map<std::pair<int, WordIndex>, Rational> out;
            for (std::size_t t = 0; t < pb->columns.size(); ++t) {
                const Rational& c = pb->basis(pr, t);
                if (sgn(c) == 0)
                    continue;
                Word w = space.decode(pb->columns[t]);
                int pair = 0;
                for (int a = 0; a < d; ++a)
                    for (int bslot = a + 1; bslot < d; ++bslot, ++pair) {
                        int f = form(w[a], w[bslot]);
                        if (f == 0)
                            continue;
                        Word z;
                        for (int s = 0; s < d; ++s)
                            if (s != a && s != bslot)
                                z.push_back(w[s]);
                        out[{pair, lower.encode(z)}] += c * f;
                    }
            }
            for (auto& [key, val] : out)
                if (sgn(val) != 0)
                    rows[key].emplace_back(j, val);
        }
        IncrementalEchelon<PrimeField> sel(fp, k);
        Matrix<Rational> chosen(0, k);
        for (auto& [key, entries] : rows) {
            if (sel.rank() == k)
                break;
            std::vector<std::uint32_t> dense(k, 0);
            for (auto& [j, val] : entries)
                dense[j] = fp.from_rational(val);
            if (sel.add(dense)) {
                std::vector<Rational> r(k);
                for (auto& [j, val] : entries)
                    r[j] = val;
                chosen.append_row(r);
            }
        }
        Subspace<RationalField> ker = chosen.rows() ? kernel(q, chosen) : Subspace<RationalField>::span(q, Matrix<Rational>::identity(q, k));
        for (std::size_t r = 0; r < ker.dim(); ++r)
            for (auto& [key, entries] : rows) {
                Rational s = 0;
                for (auto& [j, val] : entries)
                    s += val * ker.basis()(r, j);
                if (sgn(s) != 0)
                    throw std::logic_error("contraction kernel selection is not exact");
            }
        if (ker.dim() == 0)
            continue;
        ModuleBlock b;
        b.key = g;
        b.columns.assign(cols.begin(), cols.end());
        b.basis = ker.basis();
        b.pivots = ker.pivots();
        mod->blocks_.push_back(std::move(b));
    }
    mod->finalize();
    for (auto& b : mod->blocks_)
        for (auto p : b.pivots)
            mod->labels_.push_back(parent->labels()[b.columns[p]]);
    if (Integer(static_cast<unsigned long>(mod->dim_)) != expected)
        throw std::logic_error("contraction kernel of " + lam.str() + " has dimension " + std::to_string(mod->dim_) +
                               ", expected " + expected.get_str());
    mod->build_trace_projection();
    return mod;
}

void RealizedModule::build_trace_projection()
{
    const auto& parent = *parent_;
    const auto& sym = parent.symmetrizer();
    const auto& space = ambient_;
    const int d = space.degree();
    const BilinearFormSpec& form = *form_;
    RationalField q;
    PrimeField fp;
    TensorSpace lower(form.dim, std::max(d - 2, 0));
    projectors_.clear();
    for (auto& b : blocks_) {
        const std::size_t k = b.columns.size();
        const std::size_t needed = k - b.dim();
        Matrix<Rational> full(0, k);
        for (std::size_t r = 0; r < b.dim(); ++r)
            full.append_row(b.basis.row_vector(r));
        if (needed > 0) {
            // candidates c_T(form^ inserted at slots (a,b) next to e_z), read at parent pivots
            std::map<std::tuple<int, int, WordIndex>, std::map<std::size_t, Rational>> cand;
            for (std::size_t l = 0; l < k; ++l) {
                auto [pb, pr] = parent.locate(b.columns[l]);
                Word p = space.decode(pb->columns[pb->pivots[pr]]);
                Word qw(d);
                for (auto& t : sym.terms()) {
                    for (int s = 0; s < d; ++s)
                        qw[s] = p[t.perm[s]];
                    for (int a = 0; a < d; ++a)
                        for (int c = a + 1; c < d; ++c) {
                            int f = form.dual(qw[a], qw[c]);
                            if (f == 0)
                                continue;
                            Word z;
                            for (int s = 0; s < d; ++s)
                                if (s != a && s != c)
                                    z.push_back(qw[s]);
                            cand[{a, c, lower.encode(z)}][l] += Rational(t.sign * f);
                        }
                }
            }
            IncrementalEchelon<PrimeField> sel(fp, k);
            for (std::size_t r = 0; r < b.dim(); ++r) {
                std::vector<std::uint32_t> dense(k);
                for (std::size_t j = 0; j < k; ++j)
                    dense[j] = fp.from_rational(b.basis(r, j));
                sel.add(dense);
            }
            for (auto& [key, entries] : cand) {
                if (sel.rank() == k)
                    break;
                std::vector<std::uint32_t> dense(k, 0);
                for (auto& [j, val] : entries)
                    dense[j] = fp.from_rational(val);
                if (sel.add(dense)) {
                    std::vector<Rational> row(k);
                    for (auto& [j, val] : entries)
                        row[j] = val;
                    full.append_row(row);
                }
            }
        }
        if (full.rows() != k)
            throw std::logic_error("trace part does not complement the module " + weight_.str());
        projectors_.push_back(inverse(q, full));
    }
}

namespace {

std::mutex cache_mutex;
std::map<std::tuple<int, int, Partition>, ModulePtr> cache;

ModulePtr cached(int family, int dim, const Partition& lam, const std::function<ModulePtr()>& make)
{
    auto key = std::make_tuple(family, dim, lam);
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto mod = make();
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, mod);
    return it->second;
}

}  // namespace

ModulePtr schur_module(const Partition& lam, int v)
{
    return cached(0, v, lam, [&] { return RealizedModule::make_schur(lam, v); });
}

ModulePtr symplectic_module(const Partition& lam, int two_n)
{
    return cached(1, two_n, lam, [&] { return RealizedModule::make_form_module(lam, BilinearFormSpec::symplectic(two_n)); });
}

ModulePtr orthogonal_module(const Partition& lam, int m)
{
    return cached(2, m, lam, [&] { return RealizedModule::make_form_module(lam, BilinearFormSpec::orthogonal(m)); });
}

TensorVector lie_action_tensor(const Matrix<Rational>& X, const TensorSpace& space, const TensorVector& u)
{
    const int v = space.base_dim();
    if (static_cast<int>(X.rows()) != v || static_cast<int>(X.cols()) != v)
        throw std::invalid_argument("Lie algebra element has wrong size");
    TensorVector out;
    for (auto& [wi, c] : u) {
        Word w = space.decode(wi);
        for (int k = 0; k < space.degree(); ++k) {
            int a = w[k];
            for (int b = 0; b < v; ++b) {
                if (sgn(X(b, a)) == 0)
                    continue;
                Word w2 = w;
                w2[k] = b;
                add_to(out, space.encode(w2), c * X(b, a));
            }
        }
    }
    return out;
}

bool in_lie_algebra(const GroupSpec& group, const Matrix<Rational>& X)
{
    const int n = group.natural_dim;
    if (static_cast<int>(X.rows()) != n || static_cast<int>(X.cols()) != n)
        return false;
    switch (group.family) {
    case GroupFamily::GL: return true;
    case GroupFamily::SO:
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (X(i, j) + X(j, i) != 0)
                    return false;
        return true;
    case GroupFamily::Sp: {
        auto J = BilinearFormSpec::symplectic(n);
        // X^T J + J X = 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int k = 0; k < n; ++k)
                    s += X(k, i) * J(k, j) + J(i, k) * X(k, j);
                if (sgn(s) != 0)
                    return false;
            }
        return true;
    }
    case GroupFamily::Spin: return false;
    }
    return false;
}

std::vector<Matrix<Rational>> lie_algebra_basis(const GroupSpec& group)
{
    const int n = group.natural_dim;
    std::vector<Matrix<Rational>> out;
    switch (group.family) {
    case GroupFamily::GL:
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Matrix<Rational> X(n, n);
                X(a, b) = 1;
                out.push_back(std::move(X));
            }
        break;
    case GroupFamily::SO:
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Matrix<Rational> X(n, n);
                X(a, b) = 1;
                X(b, a) = -1;
                out.push_back(std::move(X));
            }
        break;
    case GroupFamily::Sp: {
        auto J = BilinearFormSpec::symplectic(n);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                // X = -J S with S = E_ab + E_ba
                Matrix<Rational> X(n, n);
                for (int i = 0; i < n; ++i) {
                    X(i, b) -= J(i, a);
                    X(i, a) -= J(i, b);
                }
                out.push_back(std::move(X));
            }
        break;
    }
    case GroupFamily::Spin: throw std::invalid_argument("spin Lie algebra is realized in the spin module");
    }
    return out;
}

std::vector<Rational> lie_action(const GroupSpec& group, const Matrix<Rational>& X, const RealizedModule& mod,
                                 const std::vector<Rational>& u)
{
    if (!in_lie_algebra(group, X))
        throw std::invalid_argument("element is not in the Lie algebra of " + group.str());
    auto image = lie_action_tensor(X, mod.ambient(), mod.ambient_vector(u));
    auto c = mod.try_coordinates(image);
    if (!c)
        throw std::logic_error("Lie algebra action leaves the module");
    return *c;
}

TensorVector contract(const BilinearFormSpec& form, const TensorSpace& space, const TensorVector& u, int a, int b)
{
    const int d = space.degree();
    if (a < 0 || b <= a || b >= d)
        throw std::invalid_argument("bad contraction slots");
    TensorSpace lower(space.base_dim(), d - 2);
    TensorVector out;
    for (auto& [wi, c] : u) {
        Word w = space.decode(wi);
        int f = form(w[a], w[b]);
        if (f == 0)
            continue;
        Word z;
        for (int s = 0; s < d; ++s)
            if (s != a && s != b)
                z.push_back(w[s]);
        add_to(out, lower.encode(z), c * f);
    }
    return out;
}

}  // namespace eqp
