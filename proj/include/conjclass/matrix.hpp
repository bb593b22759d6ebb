#pragma once

/**
 * Small dense matrices over an exact field (Rational, Gaussian or
 * QuadraticNumber) and the handful of elimination routines the classifier
 * needs: determinant, rank, inverse, reduced row echelon form, kernel.
 *
 * Sizes are tiny (n <= 4), so everything is plain Gaussian elimination with
 * exact pivots; the first nonzero entry in a column is always the pivot,
 * which keeps back-substitution results deterministic.
 */

#include "conjclass/error.hpp"
#include "conjclass/gaussian.hpp"
#include "conjclass/quadratic.hpp"
#include "conjclass/rational.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conjclass {

enum class Field { Real, Complex };

constexpr const char* to_string(Field f) { return f == Field::Real ? "R" : "C"; }

template <class T>
concept ExactScalar = requires(const T a, const T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { T::zero() } -> std::convertible_to<T>;
    { T::one() } -> std::convertible_to<T>;
};

template <ExactScalar T>
using Vector = std::vector<T>;

template <ExactScalar T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T::zero()) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T::one();
        return m;
    }
    static Matrix diagonal(const Vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const { return is_square() && *this == identity(rows_); }

    Vector<T> column(std::size_t c) const {
        Vector<T> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix conj() const {
        Matrix m = *this;
        for (auto& x : m.data_) x = x.conj();
        return m;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] + rhs.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] - rhs.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.data_) x = s * x;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) = p(i, j) + aik * b(k, j);
            }
        return p;
    }
    friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
        if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
        Vector<T> out(a.rows_, T::zero());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) out[i] = out[i] + a(i, k) * v[k];
        return out;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shape");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <ExactScalar T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

template <ExactScalar T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
    return a;
}

template <ExactScalar T>
Vector<T> scaled(const T& s, Vector<T> v) {
    for (auto& x : v) x = s * x;
    return v;
}

template <ExactScalar T>
bool is_zero_vector(const Vector<T>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Reduced row echelon form; `pivots` lists the pivot column of each nonzero row.
template <ExactScalar T>
struct EchelonForm {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;
};

template <ExactScalar T>
EchelonForm<T> row_reduce(Matrix<T> m) {
    EchelonForm<T> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
        const T inv = T::one() / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

/// Exact determinant; the 0x0 determinant is 1.
template <ExactScalar T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T::one();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    T det = T::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return T::zero();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
            det = -det;
        }
        det = det * m(col, col);
        const T inv = T::one() / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const T factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
        }
    }
    return det;
}

/// Rank by exact elimination; the 0x0 rank is 0.
template <ExactScalar T>
std::size_t rank(const Matrix<T>& m) {
    return row_reduce(m).pivots.size();
}

template <ExactScalar T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = T::one();
    }
    EchelonForm<T> e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is not invertible");
    Matrix<T> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

/// Basis of the null space, one vector per free column (free variable = 1, others 0).
template <ExactScalar T>
std::vector<Vector<T>> kernel_basis(const Matrix<T>& m) {
    const EchelonForm<T> e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<T> v(m.cols(), T::zero());
        v[free] = T::one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <ExactScalar T>
Matrix<T> power(const Matrix<T>& m, unsigned k) {
    Matrix<T> result = Matrix<T>::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) result = result * m;
    return result;
}

/// Complex n x n -> real 2n x 2n; entry u + iv becomes [[u, -v], [v, u]].
Matrix<Rational> realify(const Matrix<Gaussian>& m);
Vector<Rational> realify(const Vector<Gaussian>& v);

/// Rational matrix viewed over Q(i) / over Q(sqrt D).
Matrix<Gaussian> to_gaussian(const Matrix<Rational>& m);
Vector<Gaussian> to_gaussian(const Vector<Rational>& v);
Matrix<QuadraticNumber> to_quadratic(const Matrix<Rational>& m);

/// Rational part of a Gaussian matrix; throws unless every entry is real.
Matrix<Rational> real_part_checked(const Matrix<Gaussian>& m);

std::string to_string(const Matrix<Rational>& m);
std::string to_string(const Matrix<Gaussian>& m);
std::string to_string(const Matrix<QuadraticNumber>& m);

}  // namespace conjclass
