#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "entrobound/charpoly.hpp"
#include "entrobound/errors.hpp"
#include "entrobound/intpoly.hpp"
#include "entrobound/mahler.hpp"
#include "entrobound/matrix.hpp"
#include "entrobound/roots.hpp"

namespace entrobound {

struct EigenvalueEntry {
    double modulus;
    double radius;     // certified modulus error; 0 for exact entries
    unsigned multiplicity;
    bool exact; // modulus known exactly (zero or cyclotomic root)
};

struct AbsoluteBound {
    std::string name;
    double value;
    std::string note;
};

struct BoundReport {
    std::size_t dimension = 0;
    IntPolynomial charpoly;
    mpz_class det;
    std::vector<EigenvalueEntry> eigenvalues;
    double sp_exterior = 1.0;  // prod of eigenvalue moduli exceeding 1
    double entropy_bound = 0.0; // log sp_exterior, nats
    bool quasi_unipotent = false;
    bool hyperbolic = false;
    bool expanding = false;
    bool unimodular = false;
    bool reciprocal_charpoly = false;
    bool cyclotomic_charpoly = false;
    bool unit_circle_ambiguity = false; // some disk straddles |z| = 1 after escalation
    std::vector<AbsoluteBound> absolute_bounds;
};

// k-th exterior power: entries are k x k minors of A, rows and columns
// indexed by sorted k-subsets in lexicographic order. Brute-force oracle
// for the eigenvalue-product formula.
inline ZMat exterior_power_matrix(const ZMat& a, std::size_t k) {
    if (!a.square()) throw NonSquare("exterior_power_matrix: matrix not square");
    const std::size_t d = a.rows();
    if (k > d) throw BadPower("exterior_power_matrix: k exceeds dimension");
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur(k);
    auto gen = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
        if (pos == k) {
            subsets.push_back(cur);
            return;
        }
        for (std::size_t v = next; v < d; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    gen(gen, 0, 0);
    ZMat out(subsets.size(), subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            ZMat minor(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) minor(r, c) = a(subsets[i][r], subsets[j][c]);
            out(i, j) = k == 0 ? mpz_class(1) : determinant(minor);
        }
    return out;
}

// Spectral radius via the characteristic polynomial; numeric, for oracles.
inline double spectral_radius(const ZMat& a) {
    const IntPolynomial p = char_poly(a);
    auto [zeros, q] = strip_x_power(p);
    (void)zeros;
    double r = 0.0;
    auto [cyclo, rest] = strip_cyclotomic(q);
    if (cyclo > 0) r = 1.0;
    if (rest.degree() > 0)
        for (const auto& root : roots(rest, 1e-10).roots)
            r = std::max(r, std::abs(root.value));
    return r;
}

namespace detail {

struct SpectralAnalysis {
    std::vector<EigenvalueEntry> eigenvalues;
    double sp = 1.0;
    bool any_outside = false;
    bool ambiguity = false; // a disk meets the unit circle after escalation
    std::size_t cyclo_degree = 0;
    std::size_t zero_mult = 0;
    std::size_t inside_or_on = 0;
};

// Root analysis of a monic integer polynomial with exact cyclotomic
// stripping; ambiguity about the unit circle is escalated, then reported.
inline SpectralAnalysis analyze_spectrum(const IntPolynomial& p, double tol = 1e-10) {
    SpectralAnalysis out;
    auto [zero_mult, q0] = strip_x_power(p);
    out.zero_mult = zero_mult;
    if (zero_mult > 0)
        out.eigenvalues.push_back({0.0, 0.0, static_cast<unsigned>(zero_mult), true});
    auto [cyclo, q] = strip_cyclotomic(q0);
    out.cyclo_degree = cyclo;
    if (cyclo > 0)
        out.eigenvalues.push_back({1.0, 0.0, static_cast<unsigned>(cyclo), true});
    if (q.degree() == 0) return out;

    double t = tol;
    RootSet rs;
    for (int attempt = 0; attempt <= 4; ++attempt, t *= 0.5) {
        rs = roots(q, t);
        bool straddle = false;
        for (const auto& r : rs.roots) {
            const double mod = std::abs(r.value);
            if (mod - r.radius <= 1.0 && 1.0 <= mod + r.radius) straddle = true;
        }
        if (!straddle) break;
    }
    double log_sp = 0.0;
    for (const auto& r : rs.roots) {
        const double mod = std::abs(r.value);
        out.eigenvalues.push_back({mod, r.radius, r.multiplicity, false});
        if (mod - r.radius > 1.0) {
            out.any_outside = true;
            log_sp += r.multiplicity * std::log(mod);
        } else if (mod + r.radius >= 1.0) {
            out.ambiguity = true;
            log_sp += r.multiplicity * std::log(std::max(1.0, mod));
        } else {
            ++out.inside_or_on;
        }
    }
    out.sp = std::exp(log_sp);
    if (!out.any_outside && !out.ambiguity) out.sp = 1.0;
    return out;
}

} // namespace detail

// sp of the full exterior power: product of eigenvalue moduli exceeding 1,
// or 1 when none does.
inline double full_exterior_spectral_radius(const ZMat& a) {
    return detail::analyze_spectrum(char_poly(a)).sp;
}

// Entropy report for an integer matrix: the lower bound
// log sp, classification flags, and the applicable absolute bounds.
inline BoundReport entropy_lower_bound(const ZMat& a, double tol = 1e-10) {
    if (!a.square()) throw NonSquare("entropy_lower_bound: matrix not square");
    BoundReport rep;
    rep.dimension = a.rows();
    rep.charpoly = char_poly(a);
    rep.det = determinant(a);
    const auto an = detail::analyze_spectrum(rep.charpoly, tol);
    rep.eigenvalues = an.eigenvalues;
    rep.sp_exterior = an.sp;
    rep.entropy_bound = std::log(an.sp);
    rep.unit_circle_ambiguity = an.ambiguity;
    rep.quasi_unipotent = (an.sp == 1.0);
    rep.hyperbolic = (an.cyclo_degree == 0 && !an.ambiguity);
    rep.expanding = (an.zero_mult == 0 && an.cyclo_degree == 0 && !an.ambiguity &&
                     an.inside_or_on == 0 && an.any_outside);
    rep.unimodular = (abs(rep.det) == 1);
    rep.reciprocal_charpoly =
        rep.charpoly.constant_term() != 0 && is_reciprocal(rep.charpoly);
    rep.cyclotomic_charpoly = is_cyclotomic_product(rep.charpoly);

    // absolute bounds of the Mahler-measure estimates
    if (an.sp > 1.0) {
        double tau_min = 2.0;
        for (std::size_t dd = 2; dd <= rep.dimension; ++dd)
            tau_min = std::min(tau_min, voutier_bound(static_cast<long>(dd)));
        if (rep.dimension >= 2) {
            if (tau_min < 1.0)
                rep.absolute_bounds.push_back(
                    {"voutier", 0.0, "clamped to 0: min tau over possible factor degrees is "
                                     "below 1 (vacuous at this dimension)"});
            else
                rep.absolute_bounds.push_back(
                    {"voutier", std::log(tau_min), "min tau over factor degrees 2.." +
                                                       std::to_string(rep.dimension)});
        } else {
            rep.absolute_bounds.push_back(
                {"voutier", 0.0, "no factor of degree >= 2 possible"});
        }
        if (!rep.reciprocal_charpoly)
            rep.absolute_bounds.push_back(
                {"smyth", std::log(smyth_constant(1e-12)), "non-reciprocal characteristic polynomial"});
    }
    if (rep.expanding) {
        rep.absolute_bounds.push_back({"expanding", std::log(2.0), "all eigenvalues outside the unit circle"});
        rep.absolute_bounds.push_back(
            {"degree", std::log(std::abs(rep.det.get_d())), "|det A| = covering degree of the expanding map"});
    }
    return rep;
}

} // namespace entrobound
