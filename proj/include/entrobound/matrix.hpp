#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "entrobound/errors.hpp"

namespace entrobound {

// Dense matrix over an exact GMP scalar (mpz_class or mpq_class).
// Row-major, sized at construction.
template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Mat col_block(std::size_t j0, std::size_t ncols) const {
        Mat r(rows_, ncols);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < ncols; ++j) r(i, j) = (*this)(i, j0 + j);
        return r;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using ZMat = Mat<mpz_class>;
using QMat = Mat<mpq_class>;

inline QMat to_rational(const ZMat& a) {
    QMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = mpq_class(a(i, j));
    return r;
}

// Exact determinant by fraction-free Gaussian elimination over the rationals.
template <typename T>
T determinant(const Mat<T>& a) {
    if (!a.square()) throw NonSquare("determinant: matrix not square");
    const std::size_t n = a.rows();
    QMat m = [&] {
        if constexpr (std::is_same_v<T, mpz_class>) return to_rational(a);
        else return a;
    }();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return T(0);
        if (piv != col) {
            m.swap_rows(piv, col);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            mpq_class f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    if constexpr (std::is_same_v<T, mpz_class>) {
        mpq_class d = det;
        d.canonicalize();
        if (d.get_den() != 1) throw Error("determinant: non-integer result on integer input");
        return d.get_num();
    } else {
        return det;
    }
}

// Solves A x = b exactly; throws DependentInput when A is singular.
inline std::vector<mpq_class> solve(const QMat& a, const std::vector<mpq_class>& b) {
    if (!a.square()) throw NonSquare("solve: matrix not square");
    const std::size_t n = a.rows();
    QMat m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw DependentInput("solve: singular matrix");
        if (piv != col) m.swap_rows(piv, col);
        mpq_class inv = 1 / m(col, col);
        for (std::size_t j = col; j <= n; ++j) m(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            mpq_class f = m(i, col);
            for (std::size_t j = col; j <= n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n);
    return x;
}

// Column-wise solve: returns X with A X = B.
inline QMat solve(const QMat& a, const QMat& b) {
    QMat x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<mpq_class> col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        auto sol = solve(a, col);
        for (std::size_t i = 0; i < sol.size(); ++i) x(i, j) = sol[i];
    }
    return x;
}

inline std::size_t rank(QMat m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) m.swap_rows(piv, r);
        mpq_class inv = 1 / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            mpq_class f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Basis of the rational null space {x : M x = 0}, cleared to primitive
// integer columns.
inline ZMat rational_nullspace(QMat m) {
    const std::size_t nc = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) m.swap_rows(piv, r);
        mpq_class inv = 1 / m(r, col);
        for (std::size_t j = col; j < nc; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            mpq_class f = m(i, col);
            for (std::size_t j = col; j < nc; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    ZMat basis(nc, nc - r);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<mpq_class> v(nc, mpq_class(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -m(i, free_col);
        mpz_class lcm = 1;
        for (const auto& q : v) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
        mpz_class content = 0;
        std::vector<mpz_class> iv(nc);
        for (std::size_t i = 0; i < nc; ++i) {
            iv[i] = mpq_class(v[i] * lcm).get_num();
            content = gcd(content, iv[i]);
        }
        if (content == 0) content = 1;
        for (std::size_t i = 0; i < nc; ++i) basis(i, out) = iv[i] / content;
        ++out;
    }
    return basis;
}

} // namespace entrobound
