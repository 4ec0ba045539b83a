#pragma once

#include <oddsym/bigint.hpp>
#include <oddsym/qpoly.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oddsym {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool square() const { return m_rows == m_cols; }

    T &operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    Matrix transposed() const
    {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const
    {
        if (!square())
            return false;
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = i + 1; j < m_cols; ++j)
                if (!((*this)(i, j) == (*this)(j, i)))
                    return false;
        return true;
    }

    // Entrywise image under f.
    template <class U, class F>
    Matrix<U> map(F &&f) const
    {
        Matrix<U> r(m_rows, m_cols);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j)
                r(i, j) = f((*this)(i, j));
        return r;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows)
            throw std::invalid_argument("matrix dimensions do not match");
        Matrix r(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i)
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const T &x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.m_cols; ++j)
                    r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

private:
    std::size_t m_rows = 0, m_cols = 0;
    std::vector<T> m_data;
};

using IntMat = Matrix<Int>;
using PolyMat = Matrix<QPoly>;
using RatMat = Matrix<mpq_class>;

// Fraction-free (Bareiss) determinants.
Int det(const IntMat &m);
QPoly det(const PolyMat &m);

// Naive cofactor expansion, for cross-checking small matrices.
Int det_cofactor(const IntMat &m);
QPoly det_cofactor(const PolyMat &m);

// Rank over Q.
std::size_t rank(const IntMat &m);

// Exact inverse of an integer matrix with determinant +-1. Throws
// std::domain_error otherwise.
IntMat unimodular_inverse(const IntMat &m);

// Basis of {x : m x = 0} over Q, each vector scaled to a primitive integer
// vector with a positive entry in its free coordinate.
std::vector<std::vector<Int>> kernel(const IntMat &m);

// Solve m x = b over Q for square invertible m.
std::vector<mpq_class> solve(const IntMat &m, const std::vector<Int> &b);

IntMat specialize(const PolyMat &m, const Int &q);

} // namespace oddsym
