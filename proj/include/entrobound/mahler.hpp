#pragma once

#include <cmath>
#include <complex>

#include "entrobound/errors.hpp"
#include "entrobound/intpoly.hpp"
#include "entrobound/roots.hpp"

namespace entrobound {

// Mahler measure M(p) = |a_0| prod max(1, |root|), roots with multiplicity.
// The maximal cyclotomic-product factor and any power of x are removed
// exactly first; their roots contribute factor 1. A root whose certified
// disk still straddles the unit circle contributes max(1, |root|) with its
// radius added to the uncertainty budget; the tolerance is re-tightened up
// to 4 times before giving up.
inline double mahler_measure(const IntPolynomial& p, double tol = 1e-10) {
    if (p.is_zero()) throw Error("mahler_measure: zero polynomial");
    const double lead = std::abs(p.leading().get_d());
    auto [stripped, q] = strip_cyclotomic(p);
    (void)stripped;
    if (q.degree() == 0) return lead * std::abs(mpq_class(q.leading(), p.leading()).get_d());

    double t = tol;
    for (int attempt = 0; attempt <= 4; ++attempt, t *= 0.5) {
        const RootSet rs = roots(q, t);
        double log_measure = std::log(lead);
        double rel_uncert = 0.0;
        for (const auto& r : rs.roots) {
            const double mod = std::abs(r.value);
            if (mod + r.radius <= 1.0) continue; // certified inside, contributes 1
            log_measure += r.multiplicity * std::log(std::max(1.0, mod));
            rel_uncert += r.multiplicity * r.radius / std::max(1.0, mod - r.radius);
        }
        if (rs.converged && rel_uncert <= std::max(tol, 1e-12)) return std::exp(log_measure);
    }
    throw NoConvergence("mahler_measure: root radii too large after escalation");
}

// Voutier's degree-dependent lower bound tau(d) for the Mahler measure of a
// non-cyclotomic irreducible polynomial of degree d, exactly as stated
// (note tau(2) < 1; consumers apply their own conservatism).
inline double voutier_bound(long d) {
    if (d < 2) throw DegreeTooSmall("voutier_bound: requires d >= 2");
    const double q = std::log(std::log(double(d))) / std::log(double(d));
    return 1.0 + 0.25 * q * q * q;
}

// Smyth's constant: the real root of t^3 - t - 1, by bisection on [1, 2].
inline double smyth_constant(double tol = 1e-12) {
    auto f = [](double t) { return t * t * t - t - 1.0; };
    double lo = 1.0, hi = 2.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace entrobound
