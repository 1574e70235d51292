#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "entrobound/errors.hpp"
#include "entrobound/intpoly.hpp"

namespace entrobound {

struct CertifiedRoot {
    std::complex<double> value;
    double radius;         // disk certified to contain a true root
    unsigned multiplicity; // from the exact squarefree decomposition
    bool exact_unit_modulus; // root of a cyclotomic factor, |value| = 1 exactly
};

struct RootSet {
    std::vector<CertifiedRoot> roots;
    bool converged = true;

    std::size_t total_multiplicity() const {
        std::size_t n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

namespace detail {

inline std::vector<std::complex<double>> to_doubles(const IntPolynomial& p) {
    std::vector<std::complex<double>> cs(p.coeffs().size());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = p.coeffs()[i].get_d();
    return cs;
}

inline std::complex<double> horner(const std::vector<std::complex<double>>& cs,
                                   std::complex<double> x) {
    std::complex<double> r = 0;
    for (const auto& c : cs) r = r * x + c;
    return r;
}

// Ehrlich-Aberth simultaneous iteration on a squarefree polynomial.
// Returns approximations plus residual-based inclusion radii
// r_i = d |p(z_i)| / (|a_0| prod_{j != i} |z_i - z_j|).
inline void aberth(const IntPolynomial& p, std::vector<std::complex<double>>& z,
                   std::vector<double>& radii) {
    const auto cs = to_doubles(p);
    const std::size_t d = p.degree();
    std::vector<std::complex<double>> dcs(d);
    for (std::size_t i = 0; i < d; ++i) dcs[i] = cs[i] * double(d - i);

    if (z.size() != d) {
        // initial points on the Cauchy bound circle, deterministic phase shift
        double maxq = 0.0;
        const double lead = std::abs(cs[0]);
        for (std::size_t i = 1; i <= d; ++i) maxq = std::max(maxq, std::abs(cs[i]) / lead);
        const double R = 1.0 + maxq;
        z.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            const double theta = 2.0 * std::numbers::pi * double(i) / double(d) + 0.4;
            z[i] = std::polar(R, theta);
        }
    }

    const int max_iter = 400;
    for (int it = 0; it < max_iter; ++it) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const std::complex<double> pv = horner(cs, z[i]);
            const std::complex<double> dv = horner(dcs, z[i]);
            std::complex<double> newton = (dv != 0.0) ? pv / dv : std::complex<double>(1e-300, 0);
            std::complex<double> sum = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const std::complex<double> denom = 1.0 - newton * sum;
            const std::complex<double> step = (denom != 0.0) ? newton / denom : newton;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-15) break;
    }

    radii.resize(d);
    const double lead = std::abs(cs[0]);
    for (std::size_t i = 0; i < d; ++i) {
        double prod = lead;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) prod *= std::abs(z[i] - z[j]);
        radii[i] = (prod > 0) ? double(d) * std::abs(horner(cs, z[i])) / prod : 1.0;
        // floating-point safety margin on the inclusion bound
        radii[i] = radii[i] * 2.0 + 1e-14 * (1.0 + std::abs(z[i]))
                 + 1e-12 * double(d) * (1.0 + std::abs(z[i]));
    }
}

} // namespace detail

// Certified complex roots with multiplicity. The multiplicity structure is
// exact (Yun decomposition); each squarefree factor is solved by
// Ehrlich-Aberth iteration with residual inclusion radii.
inline RootSet roots(const IntPolynomial& p, double tol) {
    if (p.is_zero()) throw Error("roots: zero polynomial");
    RootSet out;
    auto [zero_mult, q] = strip_x_power(p);
    if (zero_mult > 0)
        out.roots.push_back({{0.0, 0.0}, 0.0, static_cast<unsigned>(zero_mult), false});
    if (q.degree() == 0) return out;

    for (const auto& [factor, mult] : squarefree_decomposition(q)) {
        std::vector<std::complex<double>> z;
        std::vector<double> radii;
        detail::aberth(factor, z, radii);
        double worst = 0.0;
        for (double r : radii) worst = std::max(worst, r);
        if (worst > tol) out.converged = false;
        for (std::size_t i = 0; i < z.size(); ++i)
            out.roots.push_back({z[i], radii[i], mult, false});
    }
    return out;
}

} // namespace entrobound
