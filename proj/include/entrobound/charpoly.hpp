#pragma once

#include <gmpxx.h>

#include <vector>

#include "entrobound/errors.hpp"
#include "entrobound/intpoly.hpp"
#include "entrobound/matrix.hpp"

namespace entrobound {

// Exact characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
// recurrence; the divisions by k are exact in rational arithmetic.
// Coefficients returned leading first (monic, degree n).
inline std::vector<mpq_class> char_poly_rational(const QMat& a) {
    if (!a.square()) throw NonSquare("char_poly: matrix not square");
    const std::size_t n = a.rows();
    std::vector<mpq_class> c(n + 1);
    c[0] = 1;
    QMat m = QMat::identity(n); // M_0
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A M_{k-1} + c_{k-1} I
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[k - 1];
        }
        m = a * m;
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        c[k] = -tr / mpq_class(static_cast<unsigned long>(k));
    }
    return c;
}

// Clears a rational coefficient vector to a primitive integer polynomial
// (content normalized, leading coefficient positive).
inline IntPolynomial clear_to_integer(const std::vector<mpq_class>& cs) {
    mpz_class lcm = 1;
    for (const auto& q : cs) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
    std::vector<mpz_class> iv(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) iv[i] = mpq_class(cs[i] * lcm).get_num();
    return IntPolynomial(std::move(iv)).primitive_part();
}

inline IntPolynomial char_poly(const ZMat& a) {
    auto cs = char_poly_rational(to_rational(a));
    std::vector<mpz_class> iv(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].get_den() != 1) throw Error("char_poly: non-integer coefficient");
        iv[i] = cs[i].get_num();
    }
    return IntPolynomial(std::move(iv));
}

} // namespace entrobound
