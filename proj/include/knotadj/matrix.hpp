#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "laurent.hpp"

namespace knotadj {

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw input_error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Copy with rows/cols {at, at+1, ...} removed (count of them).
    Matrix without(std::size_t at, std::size_t count) const {
        if (!is_square() || at + count > rows_) throw input_error("matrix without: range out of bounds");
        const std::size_t n = rows_ - count;
        Matrix r(n, n);
        auto src = [&](std::size_t i) { return i < at ? i : i + count; };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) = (*this)(src(i), src(j));
        return r;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

   private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;

/// Fraction-free (Bareiss) determinant over an integral domain with exact division.
template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw input_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == T(0)) ++r;
            if (r == n) return T(0);
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(num, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T(-d) : d;
}

/// Block-diagonal sum a (+) b.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

/// det(a + x*b) as a polynomial in x; a and b must be square of equal size.
inline LaurentPoly pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        throw input_error("pencil_determinant: shape mismatch");
    LaurentMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            LaurentPoly e(a(i, j));
            e.add_term(1, b(i, j));
            m(i, j) = std::move(e);
        }
    return determinant(std::move(m));
}

}  // namespace knotadj
