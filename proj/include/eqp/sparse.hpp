#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "eqp/matrix.hpp"

namespace eqp {

// Row-wise sparse matrix for exact ring elements (Integer, Rational).
template <class T>
class SparseMatrix {
public:
    using Row = std::map<std::size_t, T>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const Row& row(std::size_t i) const { return rows_[i]; }

    void add(std::size_t i, std::size_t j, const T& value)
    {
        if (i >= rows_.size() || j >= cols_)
            throw std::out_of_range("sparse entry out of range");
        if (value == 0)
            return;
        auto [it, inserted] = rows_[i].try_emplace(j, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0)
                rows_[i].erase(it);
        }
    }

    void set(std::size_t i, std::size_t j, const T& value)
    {
        if (value == 0)
            rows_[i].erase(j);
        else
            rows_[i][j] = value;
    }

    T get(std::size_t i, std::size_t j) const
    {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? T(0) : it->second;
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (auto& r : rows_)
            n += r.size();
        return n;
    }

    bool is_zero() const
    {
        for (auto& r : rows_)
            if (!r.empty())
                return false;
        return true;
    }

    Matrix<T> dense() const
    {
        Matrix<T> m(rows(), cols_, T(0));
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto& [j, v] : rows_[i])
                m(i, j) = v;
        return m;
    }

    static SparseMatrix from_dense(const Matrix<T>& m)
    {
        SparseMatrix s(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0)
                    s.rows_[i].emplace(j, m(i, j));
        return s;
    }

    SparseMatrix transpose() const
    {
        SparseMatrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto& [j, v] : rows_[i])
                t.rows_[j].emplace(i, v);
        return t;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.cols() != b.rows())
            throw std::invalid_argument("sparse product dimension mismatch");
        SparseMatrix c(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (auto& [k, av] : a.rows_[i])
                for (auto& [j, bv] : b.rows_[k])
                    c.add(i, j, av * bv);
        return c;
    }

    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw std::invalid_argument("sparse difference dimension mismatch");
        SparseMatrix c = a;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (auto& [j, v] : b.rows_[i])
                c.add(i, j, -v);
        return c;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw std::invalid_argument("sparse sum dimension mismatch");
        SparseMatrix c = a;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (auto& [j, v] : b.rows_[i])
                c.add(i, j, v);
        return c;
    }

    SparseMatrix scaled(const T& s) const
    {
        SparseMatrix c(rows(), cols_);
        if (s == 0)
            return c;
        for (std::size_t i = 0; i < rows(); ++i)
            for (auto& [j, v] : rows_[i])
                c.rows_[i].emplace(j, v * s);
        return c;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

}  // namespace eqp
