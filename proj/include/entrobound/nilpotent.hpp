#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "entrobound/charpoly.hpp"
#include "entrobound/errors.hpp"
#include "entrobound/lattice.hpp"
#include "entrobound/matrix.hpp"

namespace entrobound {

// Nilpotent Lie algebra given by rational structure constants over a
// distinguished basis e_1..e_d; the integer span of the basis is the
// distinguished lattice.
class NilpotentAlgebra {
  public:
    explicit NilpotentAlgebra(std::size_t dim)
        : dim_(dim), table_(dim * dim, std::vector<mpq_class>(dim, mpq_class(0))),
          given_(dim * dim, false) {}

    std::size_t dim() const { return dim_; }

    // c_{ij}^k, 0-based indices
    const mpq_class& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[i * dim_ + j][k];
    }

    // Sets [e_i, e_j] = sum_k coeffs[k] e_k exactly as given (no mirroring).
    void set_bracket_raw(std::size_t i, std::size_t j, std::vector<mpq_class> coeffs) {
        table_[i * dim_ + j] = std::move(coeffs);
        given_[i * dim_ + j] = true;
    }

    void set_bracket_entry(std::size_t i, std::size_t j, std::size_t k, const mpq_class& v) {
        table_[i * dim_ + j][k] = v;
        given_[i * dim_ + j] = true;
    }

    // Fills c_{ji}^k = -c_{ij}^k wherever the (j,i) bracket was not given
    // explicitly; explicitly given entries are left for validation to judge.
    void complete_antisymmetric() {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!given_[i * dim_ + j] || given_[j * dim_ + i]) continue;
                if (i == j) continue;
                for (std::size_t k = 0; k < dim_; ++k) table_[j * dim_ + i][k] = -c(i, j, k);
                given_[j * dim_ + i] = true;
            }
    }

    // [e_i, v] for a rational coordinate vector v
    std::vector<mpq_class> bracket_basis(std::size_t i, const std::vector<mpq_class>& v) const {
        std::vector<mpq_class> r(dim_, mpq_class(0));
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            for (std::size_t k = 0; k < dim_; ++k) r[k] += v[j] * c(i, j, k);
        }
        return r;
    }

    std::vector<mpq_class> bracket(const std::vector<mpq_class>& x,
                                   const std::vector<mpq_class>& y) const {
        std::vector<mpq_class> r(dim_, mpq_class(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < dim_; ++k) r[k] += x[i] * y[j] * c(i, j, k);
            }
        }
        return r;
    }

  private:
    std::size_t dim_;
    std::vector<std::vector<mpq_class>> table_; // (i*d+j) -> coefficients over e_k
    std::vector<bool> given_;
};

// Rational endomorphism of the algebra, columns = images of basis vectors.
struct AlgebraEndomorphism {
    QMat matrix;

    std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const {
        return matrix.apply(v);
    }
};

// Saturated lattice bases of the descending central series, adapted: the
// basis of G_{i+1} forms the leading columns of the basis of G_i.
struct CentralSeries {
    std::vector<ZMat> bases;         // bases[i] spans lattice(G_i); last is d x 0
    std::vector<std::size_t> degrees; // d_i = dim G_i - dim G_{i+1}
};

struct LinearizationBlocks {
    std::vector<ZMat> blocks; // A_0 .. A_k
    ZMat direct_sum;          // block diagonal, d x d
};

namespace detail {

// Rational spanning sets of the descending central series subspaces,
// G_0 = full, G_{i+1} = span of [e_j, v] over v in a basis of G_i.
// Each subspace is returned as a full-column-rank rational matrix.
inline std::vector<QMat> rational_series(const NilpotentAlgebra& alg) {
    const std::size_t d = alg.dim();
    std::vector<QMat> series;
    series.push_back(QMat::identity(d));
    while (true) {
        const QMat& cur = series.back();
        if (cur.cols() == 0) break;
        std::vector<std::vector<mpq_class>> gens;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t v = 0; v < cur.cols(); ++v) {
                std::vector<mpq_class> vec(d);
                for (std::size_t r = 0; r < d; ++r) vec[r] = cur(r, v);
                auto br = alg.bracket_basis(i, vec);
                bool nonzero = false;
                for (const auto& q : br) nonzero |= (q != 0);
                if (nonzero) gens.push_back(std::move(br));
            }
        // reduce to an independent subset
        QMat all(gens.size(), d);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < d; ++j) all(i, j) = gens[i][j];
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            QMat trial(keep.size() + 1, d);
            for (std::size_t r = 0; r < keep.size(); ++r)
                for (std::size_t j = 0; j < d; ++j) trial(r, j) = all(keep[r], j);
            for (std::size_t j = 0; j < d; ++j) trial(keep.size(), j) = all(i, j);
            if (rank(trial) == keep.size() + 1) keep.push_back(i);
        }
        QMat next(d, keep.size());
        for (std::size_t col = 0; col < keep.size(); ++col)
            for (std::size_t r = 0; r < d; ++r) next(r, col) = gens[keep[col]][r];
        const std::size_t prev_dim = series.size() > 1 ? series[series.size() - 1].cols() : d;
        if (next.cols() >= prev_dim && next.cols() > 0)
            throw NotNilpotent("central series stabilized above zero");
        series.push_back(std::move(next));
        if (series.size() > d + 2) throw NotNilpotent("central series did not terminate");
    }
    return series;
}

inline ZMat clear_columns_to_integer(const QMat& q) {
    ZMat z(q.rows(), q.cols());
    for (std::size_t j = 0; j < q.cols(); ++j) {
        mpz_class lcm = 1;
        for (std::size_t i = 0; i < q.rows(); ++i)
            lcm = lcm / gcd(lcm, q(i, j).get_den()) * q(i, j).get_den();
        for (std::size_t i = 0; i < q.rows(); ++i)
            z(i, j) = mpq_class(q(i, j) * lcm).get_num();
    }
    return z;
}

} // namespace detail

// Checks antisymmetry and the Jacobi identity exactly and returns the
// nilpotency class, the smallest k with G_k = 0.
inline std::size_t validate_algebra(const NilpotentAlgebra& alg) {
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (alg.c(i, j, k) != -alg.c(j, i, k))
                    throw NotAntisymmetric("c[" + std::to_string(i + 1) + "][" +
                                           std::to_string(j + 1) + "] violates antisymmetry");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                std::vector<mpq_class> ei(d, mpq_class(0)), ej(d, mpq_class(0)),
                    ek(d, mpq_class(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                auto s1 = alg.bracket(ei, alg.bracket(ej, ek));
                auto s2 = alg.bracket(ej, alg.bracket(ek, ei));
                auto s3 = alg.bracket(ek, alg.bracket(ei, ej));
                for (std::size_t m = 0; m < d; ++m)
                    if (s1[m] + s2[m] + s3[m] != 0)
                        throw JacobiFails("Jacobi fails on basis triple (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "," + std::to_string(k + 1) + ")");
            }
    return detail::rational_series(alg).size() - 1;
}

inline CentralSeries lower_central_series(const NilpotentAlgebra& alg) {
    validate_algebra(alg);
    const auto rat = detail::rational_series(alg);
    CentralSeries out;
    out.bases.resize(rat.size());
    const std::size_t d = alg.dim();
    out.bases.back() = ZMat(d, 0);
    for (std::size_t idx = rat.size() - 1; idx-- > 0;) {
        if (rat[idx].cols() == 0) {
            out.bases[idx] = ZMat(d, 0);
            continue;
        }
        ZMat sat = saturate(detail::clear_columns_to_integer(rat[idx]));
        const ZMat& deeper = out.bases[idx + 1];
        if (deeper.cols() == 0) {
            out.bases[idx] = sat;
            continue;
        }
        // adapt: put the deeper basis in front, complete inside this lattice
        QMat xq = express_in_basis(sat, deeper);
        ZMat x = to_integer_exact(xq, "lower_central_series: saturation");
        ZMat completion = unimodular_completion(x);
        ZMat adapted(d, sat.cols());
        for (std::size_t j = 0; j < deeper.cols(); ++j)
            for (std::size_t i = 0; i < d; ++i) adapted(i, j) = deeper(i, j);
        const ZMat rest = sat * completion.col_block(deeper.cols(), sat.cols() - deeper.cols());
        for (std::size_t j = 0; j < rest.cols(); ++j)
            for (std::size_t i = 0; i < d; ++i) adapted(i, deeper.cols() + j) = rest(i, j);
        out.bases[idx] = std::move(adapted);
    }
    for (std::size_t i = 0; i + 1 < out.bases.size(); ++i)
        out.degrees.push_back(out.bases[i].cols() - out.bases[i + 1].cols());
    return out;
}

// D[x,y] = [Dx, Dy] for all basis pairs, checked exactly.
inline bool bracket_compatible(const NilpotentAlgebra& alg, const AlgebraEndomorphism& endo) {
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<mpq_class> ei(d, mpq_class(0)), ej(d, mpq_class(0));
            ei[i] = 1;
            ej[j] = 1;
            auto lhs = endo.apply(alg.bracket(ei, ej));
            auto rhs = alg.bracket(endo.apply(ei), endo.apply(ej));
            if (lhs != rhs) return false;
        }
    return true;
}

// Integer matrices induced on the central-series quotients, in the adapted
// lattice bases, plus their direct sum A_0 + ... + A_k (block diagonal).
inline LinearizationBlocks induced_blocks(const NilpotentAlgebra& alg,
                                          const AlgebraEndomorphism& endo) {
    if (!endo.matrix.square() || endo.matrix.rows() != alg.dim())
        throw BracketIncompatible("endomorphism dimension mismatch");
    if (!bracket_compatible(alg, endo))
        throw BracketIncompatible("endomorphism is not bracket compatible");
    const CentralSeries series = lower_central_series(alg);
    const std::size_t d = alg.dim();
    const std::size_t k = series.degrees.size();

    // adapted global basis: the leading dim(G_i) columns span G_i
    const QMat p = to_rational(series.bases[0]);
    const QMat n = solve(p, endo.matrix * p);

    LinearizationBlocks out;
    out.blocks.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t size = series.degrees[i];
        // the quotient complement of G_{i+1} in G_i sits at columns
        // [dim G_{i+1}, dim G_i) of the adapted basis
        const std::size_t qstart = series.bases[i + 1].cols();
        ZMat block(size, size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) {
                const mpq_class& v = n(qstart + r, qstart + c);
                if (v.get_den() != 1)
                    throw LatticeNotPreserved("non-integer entry in quotient " +
                                              std::to_string(i) + " block");
                block(r, c) = v.get_num();
            }
        out.blocks[i] = std::move(block);
    }

    out.direct_sum = ZMat(d, d);
    std::size_t off = 0;
    for (const auto& b : out.blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out.direct_sum(off + r, off + c) = b(r, c);
        off += b.rows();
    }
    return out;
}

// sigma(A_[f]) = sigma(D): exact characteristic-polynomial comparison.
inline bool spectral_consistency(const NilpotentAlgebra& alg, const AlgebraEndomorphism& endo,
                                 const LinearizationBlocks& blocks) {
    (void)alg;
    const IntPolynomial lhs = clear_to_integer(char_poly_rational(endo.matrix));
    const IntPolynomial rhs = char_poly(blocks.direct_sum).primitive_part();
    return lhs == rhs;
}

} // namespace entrobound
