#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense integer matrix, row-major. All exact arithmetic.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix &other) const
    {
        if (cols_ != other.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix out(rows_, other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int &v = (*this)(r, k);
                if (v == 0) continue;
                for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += v * other(k, c);
            }
        return out;
    }

    bool operator==(const Matrix &other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }
    bool operator!=(const Matrix &other) const { return !(*this == other); }

    bool is_symmetric() const
    {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const Matrix &m);

// Non-negative representative of a mod m (m > 0).
inline Int mod_floor(const Int &a, const Int &m)
{
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace topo
