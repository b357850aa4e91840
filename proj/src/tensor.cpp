#include "eqp/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqp {

TensorSpace::TensorSpace(int base_dim, int degree) : v_(base_dim), d_(degree)
{
    if (base_dim <= 0 || degree < 0)
        throw std::invalid_argument("bad tensor space dimensions");
    power_.assign(d_, 1);
    size_ = 1;
    for (int i = d_ - 1; i >= 0; --i) {
        power_[i] = size_;
        if (size_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(v_))
            throw std::overflow_error("tensor space too large to index");
        size_ *= static_cast<std::uint64_t>(v_);
    }
}

WordIndex TensorSpace::encode(const Word& w) const
{
    WordIndex i = 0;
    for (int k = 0; k < d_; ++k)
        i = i * static_cast<WordIndex>(v_) + static_cast<WordIndex>(w[k]);
    return i;
}

Word TensorSpace::decode(WordIndex i) const
{
    Word w(d_);
    for (int k = d_ - 1; k >= 0; --k) {
        w[k] = static_cast<int>(i % static_cast<WordIndex>(v_));
        i /= static_cast<WordIndex>(v_);
    }
    return w;
}

std::vector<int> TensorSpace::content(WordIndex i) const
{
    std::vector<int> c(v_, 0);
    for (int k = 0; k < d_; ++k) {
        ++c[i % static_cast<WordIndex>(v_)];
        i /= static_cast<WordIndex>(v_);
    }
    return c;
}

void add_to(TensorVector& v, WordIndex w, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = v.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            v.erase(it);
    }
}

void axpy(TensorVector& y, const Rational& a, const TensorVector& x)
{
    if (sgn(a) == 0)
        return;
    for (auto& [w, c] : x)
        add_to(y, w, a * c);
}

Word insert_letter(const Word& w, int pos, int letter)
{
    Word out;
    out.reserve(w.size() + 1);
    out.insert(out.end(), w.begin(), w.begin() + pos);
    out.push_back(letter);
    out.insert(out.end(), w.begin() + pos, w.end());
    return out;
}

Word remove_position(const Word& w, int pos)
{
    Word out;
    out.reserve(w.size());
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (k != pos)
            out.push_back(w[k]);
    return out;
}

namespace {

int permutation_sign(const std::vector<int>& p)
{
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

// All permutations of {0..d-1} preserving each of the given blocks.
std::vector<std::vector<int>> block_permutations(int d, const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> id(d);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out{id};
    for (auto& block : blocks) {
        if (block.size() < 2)
            continue;
        std::vector<std::vector<int>> next;
        std::vector<int> images = block;
        std::sort(images.begin(), images.end());
        do {
            for (auto& p : out) {
                auto q = p;
                for (std::size_t t = 0; t < block.size(); ++t)
                    q[block[t]] = images[t];
                next.push_back(std::move(q));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        out = std::move(next);
    }
    return out;
}

}  // namespace

YoungSymmetrizer::YoungSymmetrizer(const Partition& shape) : shape_(shape), degree_(shape.size())
{
    if (!shape.nonnegative())
        throw std::invalid_argument("Young symmetrizer needs a partition");
    int rows = shape.length();
    int cols = shape[0];
    std::vector<std::vector<int>> row_blocks(rows), col_blocks(cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int s = slot(BoxPosition{r + 1, c + 1});
            row_blocks[r].push_back(s);
            col_blocks[c].push_back(s);
        }
    auto row_group = block_permutations(degree_, row_blocks);
    auto col_group = block_permutations(degree_, col_blocks);
    terms_.reserve(row_group.size() * col_group.size());
    for (auto& sigma : col_group) {
        int s = permutation_sign(sigma);
        for (auto& tau : row_group) {
            std::vector<int> pi(degree_);
            for (int k = 0; k < degree_; ++k)
                pi[k] = sigma[tau[k]];
            terms_.push_back({std::move(pi), s});
        }
    }
}

int YoungSymmetrizer::slot(BoxPosition b) const
{
    if (b.row < 1 || b.col < 1 || shape_[b.row - 1] < b.col)
        throw std::out_of_range("box outside the diagram");
    int s = 0;
    for (int c = 1; c < b.col; ++c)
        s += shape_.column_length(c);
    return s + b.row - 1;
}

TensorVector YoungSymmetrizer::apply_word(const TensorSpace& space, const Word& w) const
{
    TensorVector out;
    Word u(degree_);
    for (auto& t : terms_) {
        for (int j = 0; j < degree_; ++j)
            u[t.perm[j]] = w[j];
        add_to(out, space.encode(u), Rational(t.sign));
    }
    return out;
}

TensorVector YoungSymmetrizer::apply(const TensorSpace& space, const TensorVector& x) const
{
    TensorVector out;
    for (auto& [wi, c] : x)
        axpy(out, c, apply_word(space, space.decode(wi)));
    return out;
}

Rational YoungSymmetrizer::value_at(const Word& p, const std::function<Rational(const Word&)>& x) const
{
    Rational total = 0;
    Word q(degree_);
    for (auto& t : terms_) {
        for (int k = 0; k < degree_; ++k)
            q[k] = p[t.perm[k]];
        Rational v = x(q);
        if (sgn(v) == 0)
            continue;
        if (t.sign > 0)
            total += v;
        else
            total -= v;
    }
    return total;
}

}  // namespace eqp
