#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "entrobound/errors.hpp"
#include "entrobound/matrix.hpp"
#include "entrobound/spectral.hpp"

namespace entrobound {

// x -> (A x + b) mod 1 on R^d / Z^d.
struct AffineTorusMap {
    ZMat matrix;
    std::vector<double> translation; // entries in [0, 1)

    std::size_t dim() const { return matrix.rows(); }
};

// Columns of L generate a finite-index sublattice of Z^d; the cover degree
// is |det L|.
struct CoverSpec {
    ZMat lattice;
};

struct EpsilonDiagnostics {
    double epsilon = 0;
    double delta = 0;
    std::vector<std::size_t> counts; // N(eps, n) for n = 0..
    std::size_t window_end = 0;      // slope fitted over n in [0, window_end]
    double slope = 0;
    bool flat = false; // no growth at all; slope pinned to 0
};

struct EntropyEstimate {
    double estimate = 0; // max slope over epsilon
    std::vector<EpsilonDiagnostics> per_epsilon;
};

struct SimParams {
    std::size_t n_max = 14;
    std::vector<double> epsilons = {0.2, 0.1, 0.05};
    double delta_divisor = 8.0; // delta = epsilon / delta_divisor
    std::size_t candidate_cap = 2'000'000;
};

inline double torus_dist(double a, double b) {
    double w = std::fabs(a - b);
    return std::min(w, 1.0 - w);
}

inline std::vector<std::vector<double>> orbit(const AffineTorusMap& map,
                                              const std::vector<double>& x, std::size_t n) {
    const std::size_t d = map.dim();
    std::vector<std::vector<double>> out;
    out.reserve(n + 1);
    std::vector<double> cur = x;
    out.push_back(cur);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<double> next(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            double acc = map.translation.empty() ? 0.0 : map.translation[i];
            for (std::size_t j = 0; j < d; ++j) acc += map.matrix(i, j).get_d() * cur[j];
            acc -= std::floor(acc);
            next[i] = acc;
        }
        cur = std::move(next);
        out.push_back(cur);
    }
    return out;
}

namespace detail {

// Flat candidate orbits: orbits[c * (n+1) * d + step * d + coord].
inline std::vector<double> grid_orbits(const AffineTorusMap& map, std::size_t n, double delta,
                                       std::size_t cap, std::size_t& n_candidates) {
    const std::size_t d = map.dim();
    const std::size_t per_dim = static_cast<std::size_t>(std::floor(1.0 / delta + 1e-9));
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= per_dim;
    if (total > cap)
        throw BudgetExceeded("separated_count: " + std::to_string(total) +
                             " grid candidates exceed cap " + std::to_string(cap));
    n_candidates = total;
    std::vector<double> a(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i * d + j] = map.matrix(i, j).get_d();

    std::vector<double> orbits(total * (n + 1) * d);
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> cur(d), next(d);
    for (std::size_t c = 0; c < total; ++c) {
        for (std::size_t i = 0; i < d; ++i) cur[i] = idx[i] * delta;
        double* base = &orbits[c * (n + 1) * d];
        for (std::size_t i = 0; i < d; ++i) base[i] = cur[i];
        for (std::size_t step = 1; step <= n; ++step) {
            for (std::size_t i = 0; i < d; ++i) {
                double acc = map.translation.empty() ? 0.0 : map.translation[i];
                for (std::size_t j = 0; j < d; ++j) acc += a[i * d + j] * cur[j];
                next[i] = acc - std::floor(acc);
            }
            for (std::size_t i = 0; i < d; ++i) {
                base[step * d + i] = next[i];
                cur[i] = next[i];
            }
        }
        // lexicographic advance
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] < per_dim) break;
            idx[i] = 0;
        }
    }
    return orbits;
}

inline bool separated(const double* oa, const double* ob, std::size_t n, std::size_t d,
                      double eps) {
    // grid points land exactly on multiples of eps; absorb float rounding
    // so borderline pairs count as separated
    const double thresh = eps * (1.0 - 1e-9);
    for (std::size_t step = 0; step <= n; ++step) {
        double m = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            m = std::max(m, torus_dist(oa[step * d + i], ob[step * d + i]));
        if (m >= thresh) return true;
    }
    return false;
}

} // namespace detail

// Cardinality of a greedily built maximal (eps, n)-separated subset of the
// delta-grid, scanned in lexicographic order; a lower bound for the true
// maximum.
inline std::size_t separated_count(const AffineTorusMap& map, std::size_t n, double eps,
                                   double delta, std::size_t cap = 2'000'000) {
    if (delta > eps / 4.0 + 1e-15)
        throw GridTooCoarse("separated_count: delta must be <= eps/4");
    const std::size_t d = map.dim();
    std::size_t total = 0;
    const std::vector<double> orbits = detail::grid_orbits(map, n, delta, cap, total);
    const std::size_t stride = (n + 1) * d;
    std::vector<const double*> accepted;
    for (std::size_t c = 0; c < total; ++c) {
        const double* cand = &orbits[c * stride];
        bool ok = true;
        for (const double* acc : accepted) {
            if (!detail::separated(cand, acc, n, d, eps)) {
                ok = false;
                break;
            }
        }
        if (ok) accepted.push_back(cand);
    }
    return accepted.size();
}

// Growth-rate estimate: for each epsilon, fit the slope of log N(eps, n)
// over the pre-saturation window (saturation: growth factor <= 1.05),
// report the max slope over epsilon.
inline EntropyEstimate entropy_estimate(const AffineTorusMap& map, const SimParams& params) {
    if (map.dim() < 1 || map.dim() > 3)
        throw Error("entropy_estimate: dimension must be 1, 2 or 3");
    if (params.n_max > 20) throw Error("entropy_estimate: n_max capped at 20");
    EntropyEstimate out;
    for (double eps : params.epsilons) {
        EpsilonDiagnostics diag;
        diag.epsilon = eps;
        diag.delta = eps / params.delta_divisor;
        const std::size_t per_dim =
            static_cast<std::size_t>(std::floor(1.0 / diag.delta + 1e-9));
        std::size_t grid_total = 1;
        for (std::size_t i = 0; i < map.dim(); ++i) grid_total *= per_dim;
        std::size_t saturated_streak = 0;
        for (std::size_t n = 0; n <= params.n_max; ++n) {
            const std::size_t count =
                separated_count(map, n, eps, diag.delta, params.candidate_cap);
            diag.counts.push_back(count);
            if (count >= grid_total) break; // the whole grid is used up
            if (n >= 1) {
                const double ratio = double(count) / double(diag.counts[n - 1]);
                saturated_streak = (ratio <= 1.05) ? saturated_streak + 1 : 0;
                if (saturated_streak >= 2) break; // saturated; window is closed
            }
        }
        // window: points strictly before the first saturated step
        std::size_t window_end = diag.counts.size() - 1;
        for (std::size_t n = 1; n < diag.counts.size(); ++n) {
            if (double(diag.counts[n]) <= 1.05 * double(diag.counts[n - 1]) ||
                diag.counts[n] >= grid_total) {
                window_end = n - 1;
                break;
            }
        }
        diag.window_end = window_end;
        const std::size_t points = window_end + 1;
        if (points < 3) {
            // distinguish genuine flatness (zero growth rate) from a
            // window squeezed shut by early saturation
            const std::size_t probe = std::min<std::size_t>(2, diag.counts.size() - 1);
            if (double(diag.counts[probe]) <= 1.1025 * double(diag.counts[0])) {
                diag.flat = true;
                diag.slope = 0.0;
            } else {
                throw InsufficientWindow("entropy_estimate: fewer than 3 pre-saturation points "
                                         "at eps = " + std::to_string(eps));
            }
        } else {
            // least-squares slope of log N against n
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (std::size_t n = 0; n <= window_end; ++n) {
                const double y = std::log(double(diag.counts[n]));
                sx += n;
                sy += y;
                sxx += double(n) * double(n);
                sxy += double(n) * y;
            }
            const double m = double(points);
            diag.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        }
        out.per_epsilon.push_back(std::move(diag));
    }
    for (const auto& d : out.per_epsilon) out.estimate = std::max(out.estimate, d.slope);
    return out;
}

// Induced affine map on R^d / L Z^d in the L-basis: matrix L^-1 A L,
// translation L^-1 b mod 1.
inline AffineTorusMap lift_to_cover(const AffineTorusMap& map, const CoverSpec& cover) {
    const ZMat& l = cover.lattice;
    const mpz_class det = determinant(l);
    if (det == 0) throw NotLiftable("lift_to_cover: cover lattice is singular");
    const QMat lq = to_rational(l);
    const QMat conj = solve(lq, to_rational(map.matrix) * lq);
    AffineTorusMap lifted;
    lifted.matrix = ZMat(conj.rows(), conj.cols());
    for (std::size_t i = 0; i < conj.rows(); ++i)
        for (std::size_t j = 0; j < conj.cols(); ++j) {
            if (conj(i, j).get_den() != 1)
                throw NotLiftable("lift_to_cover: L^-1 A L has non-integer entry at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            lifted.matrix(i, j) = conj(i, j).get_num();
        }
    // translation in the L-basis: solve L t = b numerically (d <= 3)
    const std::size_t d = map.dim();
    QMat binv = solve(lq, QMat::identity(d));
    lifted.translation.assign(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < d; ++j)
            acc += binv(i, j).get_d() * (map.translation.empty() ? 0.0 : map.translation[j]);
        lifted.translation[i] = acc - std::floor(acc);
    }
    return lifted;
}

struct EqualityReport {
    EntropyEstimate estimate;
    BoundReport bound;
    double difference = 0; // |estimate - entropy_bound|
};

// Simulated growth rate against the spectral lower bound; for affine maps
// the two should agree within estimator noise.
inline EqualityReport equality_report(const AffineTorusMap& map, const SimParams& params) {
    EqualityReport rep;
    rep.estimate = entropy_estimate(map, params);
    rep.bound = entropy_lower_bound(map.matrix);
    rep.difference = std::fabs(rep.estimate.estimate - rep.bound.entropy_bound);
    return rep;
}

} // namespace entrobound
