#pragma once

/**
 * @file dedekind.hpp
 * @brief Exact Dedekind sums of cyclic quotient singularities.
 *
 *   sigma_i(1/r(b_1..b_m)) = (1/r) * sum_{eps} eps^i / prod_t (1 - eps^{b_t})
 *
 * where eps runs over the r-th roots of unity with eps^{b_t} != 1 for every t.
 * Writing eps = zeta_r^j, the root j is excluded exactly when j*b_t = 0 mod r
 * for some t; j = 0 is therefore always excluded, and a weight divisible by r
 * empties the sum.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qsing/cyclotomic.hpp"
#include "qsing/errors.hpp"
#include "qsing/rational.hpp"

namespace qsing {

/// sigma_index(1/order(weights)). Weights and index are stored reduced mod order.
class DedekindInput {
public:
    DedekindInput(unsigned order, const std::vector<long long>& weights, long long index) : order_(order) {
        if (order == 0) throw DomainError("Dedekind sum: order must be positive");
        if (weights.empty()) throw DomainError("Dedekind sum: at least one weight is required");
        weights_.reserve(weights.size());
        for (long long b : weights) weights_.push_back(reduce(b));
        index_ = reduce(index);
    }

    unsigned order() const noexcept { return order_; }
    const std::vector<unsigned>& weights() const noexcept { return weights_; }
    unsigned index() const noexcept { return index_; }

    /// True when zeta^j contributes, i.e. no weight satisfies j*b = 0 mod r.
    bool admissible_root(unsigned j) const noexcept {
        for (unsigned b : weights_)
            if ((static_cast<std::uint64_t>(j) * b) % order_ == 0) return false;
        return true;
    }

    /// "sigma_i(1/r(b1,...,bm))" in reduced form.
    std::string to_string() const {
        std::string out = "sigma_" + std::to_string(index_) + "(1/" + std::to_string(order_) + "(";
        for (std::size_t t = 0; t < weights_.size(); ++t) {
            if (t) out += ",";
            out += std::to_string(weights_[t]);
        }
        return out + "))";
    }

private:
    unsigned reduce(long long v) const {
        const long long r = order_;
        return static_cast<unsigned>(((v % r) + r) % r);
    }

    unsigned order_;
    std::vector<unsigned> weights_;
    unsigned index_ = 0;
};

/**
 * Exact Dedekind sum.
 *
 * All r terms are accumulated at once in the group ring Z[x]/(x^r - 1) and
 * mapped into Q(zeta_r) at the end. The element
 *
 *   H(x) = -sum_{k=0}^{r-1} k x^k
 *
 * satisfies H(w) = r / (1 - w) for every r-th root of unity w != 1, so
 * P(x) = x^i * prod_t H(x^{b_t}) evaluates at zeta^j to r^m times the j-th
 * summand. Substituting x -> x^j is an endomorphism of the group ring, so
 * sum_j P(x^j) is computed by re-indexing exponents, with integers only.
 */
inline Rational dedekind_sum(const DedekindInput& in) {
    const unsigned r = in.order();
    const auto m = in.weights().size();

    IntPoly product(r, 0);
    product[in.index()] = 1;
    for (unsigned b : in.weights()) {
        IntPoly h(r, 0);  // H(x^b)
        for (unsigned k = 1; k < r; ++k) h[(static_cast<std::uint64_t>(k) * b) % r] -= k;
        IntPoly next(r, 0);
        for (unsigned u = 0; u < r; ++u) {
            if (product[u].is_zero()) continue;
            for (unsigned v = 0; v < r; ++v) {
                if (!h[v].is_zero()) next[(u + v) % r] += product[u] * h[v];
            }
        }
        product = std::move(next);
    }

    IntPoly total(r, 0);
    bool any = false;
    for (unsigned j = 1; j < r; ++j) {
        if (!in.admissible_root(j)) continue;
        any = true;
        for (unsigned e = 0; e < r; ++e) {
            if (!product[e].is_zero()) total[(static_cast<std::uint64_t>(e) * j) % r] += product[e];
        }
    }
    if (!any) return Rational(0);

    BigInt scale = r;
    for (std::size_t t = 0; t < m; ++t) scale *= r;
    const auto element = CyclotomicElement::from_group_ring(r, std::move(total), scale);
    if (!element.is_rational())
        throw DomainError("internal error: Dedekind sum " + in.to_string() + " is not rational");
    return to_rational(element);
}

/// The same sum evaluated term by term in Q(zeta_r), inverting each
/// denominator with the extended Euclidean algorithm. Much slower; kept as an
/// independent exact route.
inline Rational dedekind_sum_termwise(const DedekindInput& in) {
    const unsigned r = in.order();
    auto total = CyclotomicElement::zero(r);
    for (unsigned j = 1; j < r; ++j) {
        if (!in.admissible_root(j)) continue;
        auto denom = CyclotomicElement::one(r);
        for (unsigned b : in.weights())
            denom *= CyclotomicElement::one(r) - CyclotomicElement::root_power(r, static_cast<long long>(j) * b);
        total += CyclotomicElement::root_power(r, static_cast<long long>(in.index()) * j) * inverse(denom);
    }
    return to_rational(total) / Rational(static_cast<long long>(r));
}

inline constexpr unsigned kFloatOracleMaxOrder = 10000;

/// Double-precision evaluation at zeta = exp(2*pi*i/r). Independent of the
/// exact path; refuses orders above kFloatOracleMaxOrder and results whose
/// imaginary residue is not negligible.
inline double dedekind_sum_float_oracle(const DedekindInput& in) {
    const unsigned r = in.order();
    if (r > kFloatOracleMaxOrder)
        throw DomainError("float oracle refuses order " + std::to_string(r) + " (limit " +
                          std::to_string(kFloatOracleMaxOrder) + ")");
    auto root = [r](std::uint64_t e) {
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e % r) / r);
    };
    std::complex<double> sum = 0;
    for (unsigned j = 1; j < r; ++j) {
        if (!in.admissible_root(j)) continue;
        std::complex<double> denom = 1;
        for (unsigned b : in.weights()) denom *= 1.0 - root(static_cast<std::uint64_t>(j) * b);
        sum += root(static_cast<std::uint64_t>(in.index()) * j) / denom;
    }
    sum /= static_cast<double>(r);
    if (std::abs(sum.imag()) > 1e-9 * std::max(1.0, std::abs(sum.real())))
        throw DomainError("float oracle: imaginary residue " + std::to_string(sum.imag()) + " for " + in.to_string());
    return sum.real();
}

}  // namespace qsing
