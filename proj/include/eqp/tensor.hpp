#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "eqp/combinatorics.hpp"

namespace eqp {

using WordIndex = std::uint64_t;
using Word = std::vector<int>;

// V^{(x)d} with basis words in {0..v-1}^d, indexed lexicographically
// (first letter most significant).
class TensorSpace {
public:
    TensorSpace() = default;
    TensorSpace(int base_dim, int degree);

    int base_dim() const { return v_; }
    int degree() const { return d_; }
    std::uint64_t size() const { return size_; }

    WordIndex encode(const Word& w) const;
    Word decode(WordIndex i) const;
    int letter(WordIndex i, int pos) const { return static_cast<int>((i / power_[pos]) % v_); }
    std::vector<int> content(WordIndex i) const;

    friend bool operator==(const TensorSpace& a, const TensorSpace& b) { return a.v_ == b.v_ && a.d_ == b.d_; }

private:
    int v_ = 0;
    int d_ = 0;
    std::uint64_t size_ = 1;
    std::vector<std::uint64_t> power_;
};

using TensorVector = std::map<WordIndex, Rational>;

void add_to(TensorVector& v, WordIndex w, const Rational& c);
void axpy(TensorVector& y, const Rational& a, const TensorVector& x);

// Word with letter inserted before position pos (pos == w.size() appends).
Word insert_letter(const Word& w, int pos, int letter);
Word remove_position(const Word& w, int pos);

// Young symmetrizer c_T = (column antisymmetrizer)(row symmetrizer) for
// the column-standard filling T of a shape: box (r,c) holds slot
// lambda'_1 + ... + lambda'_c + r (0-based).
class YoungSymmetrizer {
public:
    explicit YoungSymmetrizer(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int degree() const { return degree_; }
    // 0-based tensor slot of a 1-based box
    int slot(BoxPosition b) const;

    struct Term {
        std::vector<int> perm;  // perm[k] = pi(k), pi = sigma o tau
        int sign;
    };
    const std::vector<Term>& terms() const { return terms_; }

    TensorVector apply(const TensorSpace& space, const TensorVector& x) const;
    TensorVector apply_word(const TensorSpace& space, const Word& w) const;

    // (c_T x)[p] for x given by a lookup on words.
    Rational value_at(const Word& p, const std::function<Rational(const Word&)>& x) const;

private:
    Partition shape_;
    int degree_ = 0;
    std::vector<Term> terms_;
};

}  // namespace eqp
