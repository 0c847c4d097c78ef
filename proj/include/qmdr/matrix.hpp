#pragma once

#include <stdexcept>
#include <vector>

namespace qmdr {

/// Dense square-or-rectangular matrix over an exact field T.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = r.data_[k] + o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const { return *this + (-o); }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }
    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }
    bool is_symmetric() const { return square() && *this == transpose(); }
    bool is_antisymmetric() const { return square() && *this == -transpose(); }

    T trace() const {
        T t(0);
        for (size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    /// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
    Matrix inverse() const {
        if (!square()) throw std::invalid_argument("inverse of a non-square matrix");
        size_t n = rows_;
        Matrix a = *this, inv = identity(n);
        for (size_t col = 0; col < n; ++col) {
            size_t pivot = col;
            while (pivot < n && a(pivot, col) == T(0)) ++pivot;
            if (pivot == n) throw std::domain_error("singular matrix");
            if (pivot != col) {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            T d = a(col, col);
            for (size_t j = 0; j < n; ++j) {
                a(col, j) = a(col, j) / d;
                inv(col, j) = inv(col, j) / d;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col) continue;
                T f = a(i, col);
                if (f == T(0)) continue;
                for (size_t j = 0; j < n; ++j) {
                    a(i, j) = a(i, j) - f * a(col, j);
                    inv(i, j) = inv(i, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

    /// Leading principal minor of size k (determinant of the top-left k x k block).
    T leading_minor(size_t k) const {
        Matrix sub(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
        return sub.determinant();
    }

    T determinant() const {
        if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
        size_t n = rows_;
        Matrix a = *this;
        T det(1);
        for (size_t col = 0; col < n; ++col) {
            size_t pivot = col;
            while (pivot < n && a(pivot, col) == T(0)) ++pivot;
            if (pivot == n) return T(0);
            if (pivot != col) {
                a.swap_rows(pivot, col);
                det = -det;
            }
            det = det * a(col, col);
            for (size_t i = col + 1; i < n; ++i) {
                T f = a(i, col) / a(col, col);
                if (f == T(0)) continue;
                for (size_t j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
            }
        }
        return det;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
        Matrix<decltype(f(std::declval<T>()))> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    void swap_rows(size_t a, size_t b) {
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    size_t rows_, cols_;
    std::vector<T> data_;
};

}  // namespace qmdr
