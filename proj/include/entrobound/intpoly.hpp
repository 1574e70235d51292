#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entrobound/errors.hpp"

namespace entrobound {

// Integer polynomial, coefficients stored leading term first:
// coeffs[0] x^d + coeffs[1] x^{d-1} + ... + coeffs[d].
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<mpz_class> cs) : coeffs_(cs) { normalize(); }
    explicit IntPolynomial(std::vector<mpz_class> cs) : coeffs_(std::move(cs)) { normalize(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(mpz_class c) { return IntPolynomial({std::move(c)}); }
    // x^n
    static IntPolynomial monomial(std::size_t n, mpz_class lead = 1) {
        std::vector<mpz_class> cs(n + 1, mpz_class(0));
        cs[0] = std::move(lead);
        return IntPolynomial(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const { return coeffs_.front(); }
    const mpz_class& constant_term() const { return coeffs_.back(); }
    // coefficient of x^k
    mpz_class coeff_of(std::size_t k) const {
        if (is_zero() || k > degree()) return 0;
        return coeffs_[degree() - k];
    }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    IntPolynomial operator-() const {
        auto cs = coeffs_;
        for (auto& c : cs) c = -c;
        return IntPolynomial(std::move(cs));
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        std::vector<mpz_class> cs(n, mpz_class(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            cs[n - coeffs_.size() + i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            cs[n - o.coeffs_.size() + i] += o.coeffs_[i];
        return IntPolynomial(std::move(cs));
    }

    IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<mpz_class> cs(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                cs[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPolynomial(std::move(cs));
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class r = 0;
        for (const auto& c : coeffs_) r = r * x + c;
        return r;
    }

    IntPolynomial derivative() const {
        if (degree() == 0) return zero();
        std::vector<mpz_class> cs(coeffs_.size() - 1);
        const std::size_t d = degree();
        for (std::size_t i = 0; i < cs.size(); ++i)
            cs[i] = coeffs_[i] * mpz_class(static_cast<unsigned long>(d - i));
        return IntPolynomial(std::move(cs));
    }

    // x^d p(1/x)
    IntPolynomial reversed() const {
        auto cs = coeffs_;
        std::reverse(cs.begin(), cs.end());
        return IntPolynomial(std::move(cs));
    }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& c : coeffs_) g = gcd(g, c);
        return g;
    }

    IntPolynomial primitive_part() const {
        if (is_zero()) return zero();
        mpz_class c = content();
        if (leading() < 0) c = -c;
        auto cs = coeffs_;
        for (auto& v : cs) v /= c;
        return IntPolynomial(std::move(cs));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        const std::size_t d = degree();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            mpz_class c = coeffs_[i];
            if (!s.empty()) {
                s += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            }
            const std::size_t p = d - i;
            if (c != 1 || p == 0) s += c.get_str();
            if (p > 0) s += (c != 1 ? "*x" : "x");
            if (p > 1) s += "^" + std::to_string(p);
        }
        return s;
    }

  private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    }

    std::vector<mpz_class> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

// Exact division; throws InexactDivision when the remainder is nonzero.
inline IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw InexactDivision("poly_divexact: division by zero");
    if (a.is_zero()) return IntPolynomial::zero();
    if (a.degree() < b.degree()) throw InexactDivision("poly_divexact: degree too small");
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1, mpz_class(0));
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (rem[i] == 0) continue;
        if (rem[i] % bc[0] != 0) throw InexactDivision("poly_divexact: inexact at x^" +
                                                       std::to_string(a.degree() - i));
        quot[i] = rem[i] / bc[0];
        for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= quot[i] * bc[j];
    }
    for (std::size_t i = quot.size(); i < rem.size(); ++i)
        if (rem[i] != 0) throw InexactDivision("poly_divexact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

// Pseudo-remainder prem(a, b): lc(b)^(deg a - deg b + 1) a mod b.
inline IntPolynomial poly_pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const auto& bc = b.coeffs();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = a.degree() - b.degree();
        std::vector<mpz_class> cs(a.coeffs().size(), mpz_class(0));
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) cs[i] = a.coeffs()[i] * bc[0];
        for (std::size_t j = 0; j < bc.size(); ++j) cs[j] -= a.leading() * bc[j];
        // the leading term cancels; re-normalization drops it
        (void)shift;
        a = IntPolynomial(std::move(cs));
    }
    return a;
}

// Primitive-PRS gcd; result is primitive with positive leading coefficient.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = poly_pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    return poly_divexact(p.primitive_part(), poly_gcd(p, p.derivative()));
}

// Yun's squarefree decomposition of the primitive part:
// p = content * prod factors[i].first ^ factors[i].second.
inline std::vector<std::pair<IntPolynomial, unsigned>>
squarefree_decomposition(const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, unsigned>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    IntPolynomial f = p.primitive_part();
    IntPolynomial g = poly_gcd(f, f.derivative());
    IntPolynomial w = poly_divexact(f, g);
    unsigned mult = 1;
    while (w.degree() > 0) {
        IntPolynomial y = poly_gcd(w, g);
        IntPolynomial factor = poly_divexact(w, y);
        if (factor.degree() > 0) out.emplace_back(factor, mult);
        g = poly_divexact(g, y);
        w = std::move(y);
        ++mult;
    }
    return out;
}

inline bool is_reciprocal(const IntPolynomial& p) {
    if (p.is_zero() || p.constant_term() == 0)
        throw ZeroConstantTerm("is_reciprocal: zero constant term");
    const IntPolynomial r = p.reversed();
    return r == p || r == -p;
}

// nth cyclotomic polynomial, by exact division of x^n - 1 (memoized).
inline const IntPolynomial& cyclotomic(unsigned n) {
    static std::map<unsigned, IntPolynomial> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPolynomial num = IntPolynomial::monomial(n) - IntPolynomial::constant(1);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divexact(num, cyclotomic(d));
    return cache.emplace(n, std::move(num)).first->second;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Splits p = x^k * q with q(0) != 0; returns {k, q}.
inline std::pair<std::size_t, IntPolynomial> strip_x_power(const IntPolynomial& p) {
    if (p.is_zero()) return {0, p};
    auto cs = p.coeffs();
    std::size_t k = 0;
    while (cs.size() > 1 && cs.back() == 0) {
        cs.pop_back();
        ++k;
    }
    return {k, IntPolynomial(std::move(cs))};
}

// Splits off the maximal product of cyclotomic polynomials and power of x:
// returns {cyclotomic degree incl. the x^k part, non-cyclotomic remainder}.
// Every root dropped has modulus exactly 1 (or is 0, for the x^k part).
inline std::pair<std::size_t, IntPolynomial> strip_cyclotomic(const IntPolynomial& p) {
    auto [k, q] = strip_x_power(p);
    std::size_t stripped = k;
    // phi(n) >= sqrt(n/2), so phi(n) <= D forces n <= 2 D^2
    const unsigned long n_cap = 2 * q.degree() * q.degree() + 1;
    for (unsigned long n = 1; n <= n_cap && q.degree() > 0; ++n) {
        if (euler_phi(n) > q.degree()) continue;
        const IntPolynomial& phi = cyclotomic(n);
        while (q.degree() >= phi.degree()) {
            IntPolynomial g = poly_gcd(q, phi);
            if (g.degree() != phi.degree()) break;
            q = poly_divexact(q, phi);
            stripped += phi.degree();
        }
    }
    return {stripped, q};
}

// Exact Kronecker-style test: p is (up to sign) a product of cyclotomic
// polynomials and a power of x.
inline bool is_cyclotomic_product(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    if (p.leading() != 1 && p.leading() != -1) return false;
    auto [stripped, rest] = strip_cyclotomic(p);
    (void)stripped;
    return rest.degree() == 0;
}

} // namespace entrobound
