#pragma once

// Dense matrices over any scalar domain. The semantic carrier of the library
// is the square matrix; rectangular shapes exist for internal elimination
// work (kernel stacking, augmented solves).

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "commgraph/approx.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/scalar_traits.hpp"

namespace commgraph {

template <class K>
using Vector = std::vector<K>;

template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw input_error("Matrix: empty shape");
    }

    Matrix(std::initializer_list<std::initializer_list<K>> init) {
        rows_ = init.size();
        if (rows_ == 0) throw input_error("Matrix: empty initializer");
        cols_ = init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw input_error("Matrix: ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols, const K& like) {
        return Matrix(rows, cols, scalar_traits<K>::zero(like));
    }

    static Matrix identity(std::size_t n, const K& like) {
        Matrix m = zero(n, n, like);
        const K one = scalar_traits<K>::one(like);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    static Matrix scalar(std::size_t n, const K& c) {
        Matrix m = zero(n, n, c);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    static Matrix diagonal(const Vector<K>& d) {
        if (d.empty()) throw input_error("Matrix: empty diagonal");
        Matrix m = zero(d.size(), d.size(), d[0]);
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    // Rank-one outer product x * y^T.
    static Matrix outer(const Vector<K>& x, const Vector<K>& y) {
        if (x.empty() || y.empty()) throw input_error("Matrix: empty outer factors");
        Matrix m(x.size(), y.size(), scalar_traits<K>::zero(x[0]));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    std::size_t order() const {
        if (!is_square()) throw input_error("Matrix: order of a non-square matrix");
        return rows_;
    }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const K& exemplar() const { return data_[0]; }
    K zero_entry() const { return scalar_traits<K>::zero(exemplar()); }
    K one_entry() const { return scalar_traits<K>::one(exemplar()); }

    Matrix transpose() const {
        Matrix t(cols_, rows_, data_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    K trace() const {
        std::size_t n = order();
        K t = zero_entry();
        for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw input_error("Matrix: product shape mismatch");
        Matrix r = zero(a.rows_, b.cols_, a.data_[0]);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if constexpr (scalar_traits<K>::exact) {
                    if (scalar_traits<K>::is_zero(aik)) continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const K& c, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vector<K> apply(const Vector<K>& v) const {
        if (v.size() != cols_) throw input_error("Matrix: vector length mismatch");
        Vector<K> r(rows_, zero_entry());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Vector<K> row(std::size_t i) const {
        Vector<K> r(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
        return r;
    }

    Vector<K> col(std::size_t j) const {
        Vector<K> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!scalar_traits<K>::is_zero(x)) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += scalar_traits<K>::to_string((*this)(i, j));
            }
            s += "]\n";
        }
        return s;
    }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("Matrix: shape mismatch");
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<K> data_;
};

// True iff A = cI for some scalar c (the central elements of the full ring).
template <class K>
bool is_central(const Matrix<K>& A) {
    const std::size_t n = A.order();
    const K& c = A(0, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (!(A(i, j) == c)) return false;
            } else if (!scalar_traits<K>::is_zero(A(i, j))) {
                return false;
            }
        }
    return true;
}

namespace detail {
template <class K>
void require_compatible_pair(const Matrix<K>& A, const Matrix<K>& B) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
        throw input_error("matrix pair: orders differ");
    if constexpr (std::is_same_v<K, Fp>) {
        if (A.exemplar().modulus() != B.exemplar().modulus())
            throw input_error("matrix pair: moduli differ");
    }
}
} // namespace detail

// Exact commutation test: AB == BA.
template <ExactScalar K>
bool commutes(const Matrix<K>& A, const Matrix<K>& B) {
    detail::require_compatible_pair(A, B);
    return A * B == B * A;
}

inline double frobenius_norm(const Matrix<double>& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

// Tolerance commutation test on the Frobenius norm of AB - BA.
inline bool commutes(const Matrix<double>& A, const Matrix<double>& B, const Tolerance& tol) {
    detail::require_compatible_pair(A, B);
    const double resid = frobenius_norm(A * B - B * A);
    return resid <= tol.abs_eps + tol.rel_eps * frobenius_norm(A) * frobenius_norm(B);
}

inline bool is_central(const Matrix<double>& A, const Tolerance& tol) {
    const std::size_t n = A.order();
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += A(i, i);
    c /= static_cast<double>(n);
    Matrix<double> D = A - Matrix<double>::scalar(n, c);
    return frobenius_norm(D) <= tol.abs_eps + tol.rel_eps * frobenius_norm(A);
}

} // namespace commgraph
