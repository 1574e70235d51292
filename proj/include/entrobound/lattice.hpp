#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "entrobound/errors.hpp"
#include "entrobound/matrix.hpp"

namespace entrobound {

namespace detail {

// Unimodular column transform on columns (a, b) of m putting
// gcd(m(row,a), m(row,b)) into column a and 0 into column b at that row.
// The same transform is applied to the accumulator t when given.
inline void gcd_col_op(ZMat& m, std::size_t row, std::size_t a, std::size_t b, ZMat* t) {
    const mpz_class x = m(row, a), y = m(row, b);
    if (y == 0) return;
    if (x == 0) {
        m.swap_cols(a, b);
        if (t) t->swap_cols(a, b);
        return;
    }
    mpz_class g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    const mpz_class xg = x / g, yg = y / g;
    auto transform = [&](ZMat& mm) {
        for (std::size_t i = 0; i < mm.rows(); ++i) {
            const mpz_class ca = mm(i, a), cb = mm(i, b);
            mm(i, a) = s * ca + u * cb;
            mm(i, b) = xg * cb - yg * ca;
        }
    };
    transform(m);
    if (t) transform(*t);
}

} // namespace detail

// Basis of the integer kernel {x in Z^d : C x = 0}. The result is a
// saturated primitive basis (columns), since it arises from unimodular
// column operations on the identity.
inline ZMat integer_kernel(const ZMat& c) {
    const std::size_t d = c.cols();
    ZMat m = c;
    ZMat t = ZMat::identity(d);
    std::size_t lead = 0;
    for (std::size_t row = 0; row < m.rows() && lead < d; ++row) {
        for (std::size_t j = lead + 1; j < d; ++j) detail::gcd_col_op(m, row, lead, j, &t);
        if (m(row, lead) != 0) ++lead;
    }
    return t.col_block(lead, d - lead);
}

// Column-style Hermite echelon form with the deterministic pivot rule:
// pivots on the smallest row index, positive leading entry, entries left of
// a pivot reduced into [0, pivot). Columns must be independent.
inline ZMat hnf_columns(ZMat m) {
    const std::size_t cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t row = 0; row < m.rows() && lead < cols; ++row) {
        for (std::size_t j = lead + 1; j < cols; ++j) detail::gcd_col_op(m, row, lead, j, nullptr);
        if (m(row, lead) == 0) continue;
        if (m(row, lead) < 0)
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, lead) = -m(i, lead);
        for (std::size_t j = 0; j < lead; ++j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m(row, j).get_mpz_t(), m(row, lead).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, lead);
        }
        ++lead;
    }
    if (lead < cols) throw DependentInput("hnf_columns: columns are dependent");
    return m;
}

// Saturation of the rational span of the given integer columns:
// a primitive basis (in Hermite echelon form) of
// { v in Z^d : m v in span(columns) for some m > 0 }.
inline ZMat saturate(const ZMat& basis) {
    const std::size_t d = basis.rows();
    QMat bt(basis.cols(), d); // transpose, rationalized
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) bt(j, i) = mpq_class(basis(i, j));
    if (rank(bt) != basis.cols()) throw DependentInput("saturate: input vectors are dependent");
    // constraints: rows spanning the orthogonal complement of the span
    const ZMat ortho = rational_nullspace(bt); // d x (d - r), columns
    ZMat constraints(ortho.cols(), d);
    for (std::size_t i = 0; i < ortho.rows(); ++i)
        for (std::size_t j = 0; j < ortho.cols(); ++j) constraints(j, i) = ortho(i, j);
    return hnf_columns(integer_kernel(constraints));
}

// Smith elimination of x (full column rank, columns spanning a saturated
// sublattice): returns a unimodular d x d matrix whose first x.cols()
// columns span the same sublattice as x.
inline ZMat unimodular_completion(const ZMat& x) {
    const std::size_t d = x.rows(), b = x.cols();
    ZMat m = x;
    ZMat uinv = ZMat::identity(d); // tracks the inverse of the row operations
    auto row_op_pair = [&](std::size_t i, std::size_t j, std::size_t col) {
        // rows (i, j) <- P * rows with P = [[s, u], [-y/g, x/g]]
        const mpz_class a = m(i, col), c = m(j, col);
        if (c == 0) return;
        if (a == 0) {
            m.swap_rows(i, j);
            uinv.swap_cols(i, j);
            return;
        }
        mpz_class g, s, u;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        const mpz_class ag = a / g, cg = c / g;
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const mpz_class ri = m(i, k), rj = m(j, k);
            m(i, k) = s * ri + u * rj;
            m(j, k) = ag * rj - cg * ri;
        }
        // uinv <- uinv * P^{-1}, P^{-1} = [[x/g, -u], [y/g, s]]
        for (std::size_t k = 0; k < d; ++k) {
            const mpz_class ci = uinv(k, i), cj = uinv(k, j);
            uinv(k, i) = ag * ci + cg * cj;
            uinv(k, j) = s * cj - u * ci;
        }
    };
    for (std::size_t col = 0; col < b; ++col) {
        for (std::size_t i = col + 1; i < d; ++i) row_op_pair(col, i, col);
        // clear the row to the right with column ops (no tracking needed)
        for (std::size_t j = col + 1; j < b; ++j) {
            if (m(col, j) == 0) continue;
            detail::gcd_col_op(m, col, col, j, nullptr);
            // re-zero below: column ops may refill the column
            for (std::size_t i = col + 1; i < d; ++i) row_op_pair(col, i, col);
        }
        if (m(col, col) != 1 && m(col, col) != -1)
            throw Error("unimodular_completion: input sublattice not saturated");
        if (m(col, col) == -1) {
            for (std::size_t k = 0; k < m.cols(); ++k) m(col, k) = -m(col, k);
            for (std::size_t k = 0; k < d; ++k) uinv(k, col) = -uinv(k, col);
        }
    }
    return uinv;
}

// X with B X = W, exact; every column of W must lie in the rational span
// of the columns of B (with B of full column rank).
inline QMat express_in_basis(const ZMat& b, const ZMat& w) {
    QMat bq = to_rational(b), wq = to_rational(w);
    // pick an invertible square row subsystem
    const std::size_t a = b.cols();
    QMat sq(a, a), rhs(a, wq.cols());
    std::size_t got = 0;
    for (std::size_t i = 0; i < b.rows() && got < a; ++i) {
        QMat trial(got + 1, a);
        for (std::size_t r = 0; r < got; ++r)
            for (std::size_t j = 0; j < a; ++j) trial(r, j) = sq(r, j);
        for (std::size_t j = 0; j < a; ++j) trial(got, j) = bq(i, j);
        if (rank(trial) != got + 1) continue;
        for (std::size_t j = 0; j < a; ++j) sq(got, j) = bq(i, j);
        for (std::size_t j = 0; j < wq.cols(); ++j) rhs(got, j) = wq(i, j);
        ++got;
    }
    if (got != a) throw DependentInput("express_in_basis: basis columns dependent");
    QMat x = solve(sq, rhs);
    // verify on all rows
    QMat check = bq * x;
    for (std::size_t i = 0; i < wq.rows(); ++i)
        for (std::size_t j = 0; j < wq.cols(); ++j)
            if (check(i, j) != wq(i, j))
                throw Error("express_in_basis: vector outside the span");
    return x;
}

inline ZMat to_integer_exact(const QMat& q, const char* what) {
    ZMat z(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            if (q(i, j).get_den() != 1) throw Error(std::string(what) + ": non-integer entry");
            z(i, j) = q(i, j).get_num();
        }
    return z;
}

} // namespace entrobound
