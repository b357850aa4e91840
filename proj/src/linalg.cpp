#include "eqp/linalg.hpp"

#include <string>

namespace eqp {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0)
            return n == d;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1)
                r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p)
{
    if (p < 3 || p >= (1ull << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be an odd prime below 2^31, got " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
    barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p_);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const
{
    value_type r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    if (a == 0)
        throw std::domain_error("division by zero in " + name());
    return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::from_int(long long x) const
{
    long long r = x % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_integer(const Integer& x) const
{
    Integer r = x % p_;
    if (r < 0)
        r += p_;
    return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::from_rational(const Rational& x) const
{
    value_type den = from_integer(x.get_den());
    if (den == 0)
        throw std::domain_error("denominator divisible by " + std::to_string(p_));
    return mul(from_integer(x.get_num()), inv(den));
}

PrimeField::value_type PrimeField::sqrt_minus_one() const
{
    if (p_ % 4 != 1)
        throw std::domain_error("-1 is not a square in " + name());
    for (value_type g = 2; g < p_; ++g) {
        value_type r = pow(g, (p_ - 1) / 4);
        if (mul(r, r) == p_ - 1)
            return r;
    }
    throw std::logic_error("no square root of -1 found");
}

std::size_t bareiss_rank(Matrix<Integer> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const Matrix<Integer>& m) { return bareiss_rank(m); }

std::size_t rank(const Matrix<Rational>& m)
{
    Matrix<Integer> z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return bareiss_rank(std::move(z));
}

Matrix<PrimeField::value_type> reduce_mod(const PrimeField& f, const Matrix<Integer>& m)
{
    Matrix<PrimeField::value_type> r(m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = f.from_integer(m(i, j));
    return r;
}

Matrix<PrimeField::value_type> reduce_mod(const PrimeField& f, const Matrix<Rational>& m)
{
    Matrix<PrimeField::value_type> r(m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = f.from_rational(m(i, j));
    return r;
}

Matrix<Rational> to_rational(const Matrix<Integer>& m)
{
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

}  // namespace eqp
