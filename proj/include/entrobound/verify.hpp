#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entrobound/charpoly.hpp"
#include "entrobound/intpoly.hpp"
#include "entrobound/mahler.hpp"
#include "entrobound/matrix.hpp"
#include "entrobound/roots.hpp"
#include "entrobound/spectral.hpp"

namespace entrobound {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace verify_detail {

inline ZMat random_matrix(std::mt19937_64& rng, std::size_t d, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ZMat a(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = dist(rng);
    return a;
}

// random product of elementary integer shears (unimodular)
inline ZMat random_unimodular(std::mt19937_64& rng, std::size_t d, int n_shears = 6) {
    ZMat u = ZMat::identity(d);
    std::uniform_int_distribution<int> pick(0, int(d) - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < n_shears; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        ZMat e = ZMat::identity(d);
        e(i, j) = coef(rng);
        u = u * e;
    }
    return u;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_deg, int bound) {
    std::uniform_int_distribution<std::size_t> degd(1, max_deg);
    std::uniform_int_distribution<int> cd(-bound, bound);
    const std::size_t deg = degd(rng);
    std::vector<mpz_class> cs(deg + 1);
    for (auto& c : cs) c = cd(rng);
    if (cs[0] == 0) cs[0] = 1;
    return IntPolynomial(std::move(cs));
}

} // namespace verify_detail

// Smyth and Voutier constants against their defining equations and
// independently computed reference digits.
inline SuiteResult suite_constants() {
    SuiteResult r{"constants"};
    const double tau0 = smyth_constant(1e-9);
    if (std::fabs(tau0 - 1.324717957) > 2e-9) {
        r.passed = false;
        r.detail = "smyth constant off: " + std::to_string(tau0);
        return r;
    }
    const double resid = tau0 * tau0 * tau0 - tau0 - 1.0;
    if (std::fabs(resid) > 4e-9) {
        r.passed = false;
        r.detail = "smyth residual too large";
        return r;
    }
    // cross-oracle: the same root from the simultaneous root finder
    const IntPolynomial p{1, 0, -1, -1}; // x^3 - x - 1
    double real_root = 0;
    for (const auto& root : roots(p, 1e-12).roots)
        if (std::fabs(root.value.imag()) < 1e-8) real_root = root.value.real();
    if (std::fabs(real_root - tau0) > 2e-9) {
        r.passed = false;
        r.detail = "root-finder disagrees with bisection";
        return r;
    }
    if (std::fabs(voutier_bound(3) - 1.0001568386) > 1e-6 || voutier_bound(2) >= 1.0 ||
        std::fabs(voutier_bound(16) - 1.0125) > 1e-3) {
        r.passed = false;
        r.detail = "voutier spot values off";
        return r;
    }
    r.detail = "tau0 = " + std::to_string(tau0);
    return r;
}

// Eigenvalue-product sp against the explicit exterior-power minor matrices.
inline SuiteResult suite_exterior_oracle(std::size_t samples = 200, std::uint64_t seed = 17) {
    SuiteResult r{"exterior_oracle"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const ZMat a = verify_detail::random_matrix(rng, dims(rng), -3, 3);
        const double sp = full_exterior_spectral_radius(a);
        double oracle = 1.0; // k = 0 term
        for (std::size_t k = 1; k <= a.rows(); ++k)
            oracle = std::max(oracle, spectral_radius(exterior_power_matrix(a, k)));
        worst = std::max(worst, std::fabs(sp - oracle));
        if (std::fabs(sp - oracle) > 1e-6) {
            r.passed = false;
            r.detail = "discrepancy " + std::to_string(std::fabs(sp - oracle));
            return r;
        }
    }
    r.detail = "max discrepancy " + std::to_string(worst) + " over " +
               std::to_string(samples) + " matrices";
    return r;
}

inline SuiteResult suite_mahler_multiplicativity(std::size_t pairs = 50,
                                                 std::uint64_t seed = 23) {
    SuiteResult r{"mahler_multiplicativity"};
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (std::size_t s = 0; s < pairs; ++s) {
        const IntPolynomial p = verify_detail::random_poly(rng, 5, 9);
        const IntPolynomial q = verify_detail::random_poly(rng, 5, 9);
        const double lhs = mahler_measure(p * q);
        const double rhs = mahler_measure(p) * mahler_measure(q);
        const double rel = std::fabs(lhs - rhs) / std::max(1.0, rhs);
        worst = std::max(worst, rel);
        if (rel > 1e-6) {
            r.passed = false;
            r.detail = "relative error " + std::to_string(rel) + " on (" + p.str() + ") * (" +
                       q.str() + ")";
            return r;
        }
    }
    r.detail = "max relative error " + std::to_string(worst);
    return r;
}

inline SuiteResult suite_iterate_scaling(std::size_t samples = 100, std::uint64_t seed = 31) {
    SuiteResult r{"iterate_scaling"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const ZMat a = verify_detail::random_matrix(rng, dims(rng), -3, 3);
        const double b1 = entropy_lower_bound(a).entropy_bound;
        const double b2 = entropy_lower_bound(a * a).entropy_bound;
        worst = std::max(worst, std::fabs(b2 - 2.0 * b1));
        if (std::fabs(b2 - 2.0 * b1) > 1e-8) {
            r.passed = false;
            r.detail = "bound(A^2) != 2 bound(A), error " + std::to_string(worst);
            return r;
        }
    }
    r.detail = "max error " + std::to_string(worst);
    return r;
}

inline std::vector<SuiteResult> run_all_suites() {
    return {suite_constants(), suite_exterior_oracle(), suite_mahler_multiplicativity(),
            suite_iterate_scaling()};
}

} // namespace entrobound
