#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_r).
 *
 * Elements are residues of rational polynomials modulo the r-th cyclotomic
 * polynomial Phi_r, stored as exactly phi(r) coefficients in the power basis
 * 1, x, ..., x^(phi(r)-1). Working modulo Phi_r rather than x^r - 1 keeps the
 * ring a field, so every nonzero element (in particular every 1 - zeta^b with
 * zeta^b != 1) is invertible.
 *
 * Which primitive root x stands for is not fixed by the residue; embed() uses
 * exp(2*pi*i/r), the convention shared by the floating-point oracles.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qsing/errors.hpp"
#include "qsing/rational.hpp"

namespace qsing {

/// Integer polynomial, coefficients from the constant term upward.
using IntPoly = std::vector<BigInt>;

namespace detail {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Exact quotient of a by a monic divisor; throws if the division leaves a remainder.
inline IntPoly exact_divide_monic(IntPoly a, const IntPoly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    if (a.size() < m.size()) throw DomainError("exact_divide_monic: dividend degree too small");
    IntPoly q(a.size() - dm, 0);
    for (std::size_t i = a.size(); i-- > dm;) {
        const BigInt c = a[i];
        if (c.is_zero()) continue;
        q[i - dm] = c;
        for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
    }
    trim(a);
    if (!a.empty()) throw DomainError("exact_divide_monic: nonzero remainder");
    return q;
}

/// Reduces a in place modulo a monic integer polynomial m. Works for any
/// coefficient ring T with T -= BigInt * T available.
template <typename T>
void reduce_monic(std::vector<T>& a, const IntPoly& m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        if (a[i] == T(0)) continue;
        const T c = a[i];
        for (std::size_t j = 0; j < dm; ++j) {
            if (!m[j].is_zero()) a[i - dm + j] -= T(m[j]) * c;
        }
        a[i] = T(0);
    }
    if (a.size() > dm) a.resize(dm);
}

struct QPolyDivision {
    std::vector<Rational> quotient;
    std::vector<Rational> remainder;
};

inline QPolyDivision divmod(std::vector<Rational> a, const std::vector<Rational>& b) {
    const std::size_t db = b.size() - 1;
    QPolyDivision out;
    trim(a);
    if (a.size() < b.size()) {
        out.remainder = std::move(a);
        return out;
    }
    out.quotient.assign(a.size() - db, Rational(0));
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i].is_zero()) continue;
        const Rational c = a[i] / b.back();
        out.quotient[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    out.remainder = std::move(a);
    return out;
}

inline std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

inline std::vector<Rational> sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace detail

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// The r-th cyclotomic polynomial Phi_r, as the exact quotient of x^r - 1 by
/// the product of Phi_d over proper divisors d of r. Results are cached for
/// the life of the process; the returned reference stays valid.
inline const IntPoly& cyclotomic_polynomial(unsigned r) {
    if (r == 0) throw DomainError("cyclotomic_polynomial: order must be positive");
    static std::mutex mutex;
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(r); it != cache.end()) return it->second;
    }
    IntPoly p(r + 1, 0);
    p[0] = -1;
    p[r] = 1;
    for (unsigned d : detail::divisors(r)) {
        if (d == r) continue;
        p = detail::exact_divide_monic(std::move(p), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(r, std::move(p)).first->second;
}

class CyclotomicElement {
public:
    /// Reduces an arbitrary-length coefficient vector (a polynomial in x) into Q(zeta_r).
    CyclotomicElement(unsigned order, std::vector<Rational> poly_coeffs) : order_(order) {
        if (order == 0) throw DomainError("cyclotomic field order must be positive");
        const IntPoly& phi = cyclotomic_polynomial(order);
        const std::size_t deg = phi.size() - 1;
        detail::reduce_monic(poly_coeffs, phi);
        poly_coeffs.resize(deg, Rational(0));
        coeffs_ = std::move(poly_coeffs);
    }

    static CyclotomicElement zero(unsigned order) { return {order, {}}; }
    static CyclotomicElement from_rational(unsigned order, Rational q) {
        return {order, std::vector<Rational>{std::move(q)}};
    }
    static CyclotomicElement one(unsigned order) { return from_rational(order, Rational(1)); }

    /// zeta_r^e, with e taken modulo r.
    static CyclotomicElement root_power(unsigned order, long long e) {
        if (order == 0) throw DomainError("cyclotomic field order must be positive");
        const long long r = order;
        const auto k = static_cast<std::size_t>(((e % r) + r) % r);
        std::vector<Rational> poly(k + 1, Rational(0));
        poly[k] = 1;
        return {order, std::move(poly)};
    }

    /// Maps an element of the group ring Z[x]/(x^r - 1) into the field and
    /// divides by `denominator`. The map x -> zeta_r is a ring homomorphism,
    /// so arithmetic done upstairs with integers lands on the same element.
    static CyclotomicElement from_group_ring(unsigned order, IntPoly coeffs, const BigInt& denominator) {
        const IntPoly& phi = cyclotomic_polynomial(order);
        detail::reduce_monic(coeffs, phi);
        std::vector<Rational> q;
        q.reserve(coeffs.size());
        for (auto& c : coeffs) q.emplace_back(std::move(c), denominator);
        return {order, std::move(q)};
    }

    unsigned order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    /// Value at zeta_r = exp(2*pi*i/r) in double precision.
    std::complex<double> embed() const {
        std::complex<double> acc = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
            acc += coeffs_[k].to_double() * std::polar(1.0, angle);
        }
        return acc;
    }

    CyclotomicElement& operator+=(const CyclotomicElement& o) {
        check_same_field(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CyclotomicElement& operator-=(const CyclotomicElement& o) {
        check_same_field(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CyclotomicElement operator-() const {
        CyclotomicElement r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }

    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
        a.check_same_field(b);
        return {a.order_, detail::mul(a.coeffs_, b.coeffs_)};
    }
    CyclotomicElement& operator*=(const CyclotomicElement& o) { return *this = *this * o; }

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeffs_[k].to_string() + ")";
            if (k > 0) out += "*z^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_same_field(const CyclotomicElement& o) const {
        if (order_ != o.order_)
            throw DomainError("incompatible cyclotomic fields: Q(zeta_" + std::to_string(order_) + ") vs Q(zeta_" +
                              std::to_string(o.order_) + ")");
    }

    unsigned order_;
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse via the extended Euclidean algorithm on (a, Phi_r) over Q.
inline CyclotomicElement inverse(const CyclotomicElement& a) {
    if (a.is_zero()) throw DomainError("division by zero in cyclotomic field");
    const IntPoly& phi = cyclotomic_polynomial(a.order());
    std::vector<Rational> r0(phi.begin(), phi.end());
    std::vector<Rational> r1 = a.coeffs();
    detail::trim(r1);
    std::vector<Rational> s0;
    std::vector<Rational> s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = detail::divmod(r0, r1);
        std::vector<Rational> s2 = detail::sub(s0, detail::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_r is irreducible, so the gcd r0 is a nonzero constant.
    const Rational c = r0.front();
    for (auto& coeff : s0) coeff /= c;
    return {a.order(), std::move(s0)};
}

inline CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) { return a * inverse(b); }

inline Rational to_rational(const CyclotomicElement& a) {
    if (!a.is_rational()) throw DomainError("cyclotomic element not rational: " + a.to_string());
    return a.coeffs().front();
}

}  // namespace qsing
