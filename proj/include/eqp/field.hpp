#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace eqp {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

inline constexpr std::uint32_t default_prime = 2147483629u;

struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0)
            throw std::domain_error("division by zero");
        return 1 / a;
    }
    // a -= b * c
    void sub_mul(value_type& a, const value_type& b, const value_type& c) const { a -= b * c; }
    value_type from_int(long long x) const { return Rational(static_cast<long>(x)); }
    std::string name() const { return "QQ"; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// F_p for an odd prime p < 2^31, Barrett reduction on 64-bit products.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t p = default_prime);

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const { return a ? p_ - a : 0; }
    value_type mul(value_type a, value_type b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
    void sub_mul(value_type& a, value_type b, value_type c) const { a = sub(a, mul(b, c)); }
    value_type reduce(std::uint64_t x) const
    {
        auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_)
            r -= p_;
        return static_cast<value_type>(r);
    }
    value_type pow(value_type a, std::uint64_t e) const;
    value_type inv(value_type a) const;
    value_type from_int(long long x) const;
    value_type from_integer(const Integer& x) const;
    // Throws std::domain_error when p divides the denominator.
    value_type from_rational(const Rational& x) const;
    // Symmetric lift into (-p/2, p/2].
    long long lift(value_type a) const { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }
    // Square root of -1; requires p = 1 mod 4.
    value_type sqrt_minus_one() const;

    std::string name() const { return "F_" + std::to_string(p_); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
    std::uint64_t barrett_;
};

}  // namespace eqp
