#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqp {

using Integer = mpz_class;
using Rational = mpq_class;

// Weakly decreasing integer sequence. Trailing zeros are ignored by
// comparison; a negative tail is allowed for GL weights.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // "2,1,1" or "2 1 1" or "" (empty partition)
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    // number of nonzero parts
    int length() const;
    int size() const;
    bool empty() const { return length() == 0; }
    bool nonnegative() const;

    Partition conjugate() const;
    int column_length(int col) const;  // col is 1-based
    bool contains(const Partition& other) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b);
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> trimmed() const;
    std::vector<int> parts_;
};

struct BoxPosition {
    int row = 1;
    int col = 1;
    friend auto operator<=>(const BoxPosition&, const BoxPosition&) = default;
};

enum class GroupFamily { GL, Sp, SO, Spin };

struct GroupSpec {
    GroupFamily family = GroupFamily::GL;
    int natural_dim = 1;

    static GroupSpec gl(int v) { return {GroupFamily::GL, v}; }
    static GroupSpec sp(int two_n);
    static GroupSpec so(int m);
    static GroupSpec spin(int two_n);

    int rank() const;
    std::string str() const;
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string to_string(GroupFamily f);

// Highest weight in epsilon coordinates; when doubled is set the stored
// coordinates are twice the actual (half-integer) ones.
struct HighestWeight {
    std::vector<int> coords;
    bool doubled = false;

    static HighestWeight from(const Partition& p, int rank);
};

// D_n fundamental weight omega_k, k in 1..n; omega_{n-1} and omega_n are
// the half-spin weights.
HighestWeight spin_fundamental_weight(int n, int k);
HighestWeight operator+(const HighestWeight& a, const HighestWeight& b);

Integer binomial(long n, long k);

std::vector<std::pair<Partition, BoxPosition>> pieri_add(const Partition& mu, int max_rows);
std::vector<Partition> horizontal_strips(const Partition& mu, int k);
std::vector<Partition> all_horizontal_strips(const Partition& mu);

// Unique box of nu/mu if nu is mu plus one box.
bool one_box_difference(const Partition& mu, const Partition& nu, BoxPosition* box = nullptr);

std::int64_t lr_coefficient(const Partition& zeta, const Partition& eta, const Partition& lam);

Integer gl_dim(const Partition& lam, int n);
Integer weyl_dim(const GroupSpec& group, const Partition& weight);
Integer weyl_dim(const GroupSpec& group, const HighestWeight& weight);

// Dimension of the O(m)-module cut out of S_lam(C^m) by all trace
// contractions; zero unless the first two columns have total length <= m.
Integer orthogonal_traceless_dim(const Partition& lam, int m);

// Dimension of the Sp(2n)-module with highest weight lam, zero when
// lam has more than n rows.
Integer symplectic_dim_or_zero(const Partition& lam, int two_n);

// Semistandard tableaux of shape lam with entries 0..n-1, each listed
// row by row.
std::vector<std::vector<int>> semistandard_tableaux(const Partition& lam, int n);

enum class Family { GL_2_21, GL_22_221, GL_hook, SO_2_21, SO_311_321 };

struct FamilyParams {
    int n = 0;  // n for GL families (v = n+1), m for SO families
    int a = 1;
    int b = 1;
};

struct FamilySizes {
    Integer source;
    Integer target;
    Integer rank;  // corank when is_corank is set
    bool is_corank = false;
};

FamilySizes family_sizes(Family family, const FamilyParams& params);

// Rank of the hook family as printed in closed form (n = dim H, a = 1).
Rational hook_rank_printed_formula(int n, int b);

// Rank of the hook family (2,1^b) -> (2,1^(b+1)) with v = n+1 from the
// strip count of the image.
Integer hook_rank_closed_form(int n, int b);

}  // namespace eqp
