#pragma once

/**
 * @file invariants.hpp
 * @brief Orbifold Euler numbers, curvature-energy ledgers and the
 *        Riemann-Roch / Milnor identities for limit orbifolds.
 *
 * Curvature energies are carried in units of 8*pi^2, so that
 * (1/8pi^2) * integral |Rm|^2 over a compact Einstein 4-orbifold is its
 * (orbifold) Euler number and every quantity here stays rational.
 */

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsing/errors.hpp"
#include "qsing/rational.hpp"
#include "qsing/singularity.hpp"

namespace qsing {

/// Which line bundle's correction terms feed the energy identity:
/// K^-1 for positive scalar curvature, K^2 for negative.
enum class Bundle { anticanonical, canonical_square };

inline const char* to_string(Bundle b) { return b == Bundle::anticanonical ? "anticanonical" : "canonical-square"; }

struct OrbifoldConfig {
    std::optional<int> degree;  ///< Del Pezzo degree K^2, 1..4
    std::vector<SingularityType> singularities;
    std::optional<long long> euler_topological;  ///< chi(M_infinity)
    std::optional<long long> picard_rank;
};

/// Minimum curvature energy of a Ricci-flat Kahler ALE bubble (6 pi^2), in units of 8 pi^2.
inline Rational ale_energy_quantum() { return Rational(3, 4); }

inline Rational mu(const SingularityType& s, Bundle bundle) {
    return bundle == Bundle::anticanonical ? mu_anticanonical(s) : mu_canonical_square(s);
}

/// chi_orb = chi - sum_p (1 - 1/n_p).
inline Rational chi_orb_from_chi(const Rational& chi, std::span<const SingularityType> sings) {
    Rational out = chi;
    for (const auto& s : sings) out -= orbifold_defect(s);
    return out;
}

/// 12 * sum_p mu_p(bundle): the total curvature energy of the ALE bubbles.
inline Rational bubble_energy_from_mu(std::span<const SingularityType> sings, Bundle bundle = Bundle::anticanonical) {
    Rational sum;
    for (const auto& s : sings) sum += mu(s, bundle);
    return Rational(12) * sum;
}

struct EnergyLedger {
    Rational total_bubble_energy_units;
    Rational chi_orb;
    Rational chi_limit;  ///< lim chi(M_j) = chi_orb + total_bubble_energy_units
};

inline EnergyLedger energy_ledger(const OrbifoldConfig& config, Bundle bundle = Bundle::anticanonical) {
    if (!config.euler_topological) throw DomainError("chi_limit requires the topological Euler number of the limit");
    EnergyLedger ledger;
    ledger.total_bubble_energy_units = bubble_energy_from_mu(config.singularities, bundle);
    ledger.chi_orb = chi_orb_from_chi(Rational(*config.euler_topological), config.singularities);
    ledger.chi_limit = ledger.chi_orb + ledger.total_bubble_energy_units;
    return ledger;
}

/// Euler number of the smooth fibres, recovered from the limit orbifold.
inline Rational chi_limit(const OrbifoldConfig& config, Bundle bundle = Bundle::anticanonical) {
    return energy_ledger(config, bundle).chi_limit;
}

/**
 * Genus of a non-singular curve of degree `degree` in the weighted projective
 * plane P(a0, a1, a2):
 *
 *   g = 1/2 ( d^2/(a0 a1 a2) - d * sum_{i<j} gcd(ai,aj)/(ai aj)
 *             + sum_i gcd(ai,d)/ai - 1 )
 *
 * Returned as a rational; it is an integer only for honestly non-singular curves.
 */
inline Rational genus_weighted_plane_curve(const std::array<long long, 3>& weights, long long degree) {
    for (long long a : weights)
        if (a <= 0) throw DomainError("weighted projective plane weights must be positive");
    if (degree <= 0) throw DomainError("curve degree must be positive");
    const Rational d(degree);
    Rational g = d * d / Rational(weights[0] * weights[1] * weights[2]);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            g -= d * Rational(std::gcd(weights[i], weights[j]), weights[i] * weights[j]);
    for (long long a : weights) g += Rational(std::gcd(a, degree), a);
    g -= 1;
    return g / Rational(2);
}

/// Euler number of a double cover branched along a curve: 2 chi(base) - chi(branch).
inline long long euler_double_cover(long long chi_base, long long chi_branch) { return 2 * chi_base - chi_branch; }

/**
 * Both Riemann-Roch / Milnor identities for a degree-d limit orbifold:
 *
 *   sum (1 - 1/n_p) + sum nu_p = 12 sum mu_p(K^-1)
 *   rho + 12 sum mu_p(K^-1) - sum (1 - 1/n_p) = 10 - d
 *
 * When the Picard rank is unknown it is solved for from the second identity.
 */
struct HrrMilnorCheck {
    Rational sum_defect;     ///< sum (1 - 1/n_p)
    Rational sum_milnor;     ///< sum nu_p
    Rational twelve_sum_mu;  ///< 12 sum mu_p(K^-1)
    bool first_identity_holds = false;

    Rational picard_rhs;  ///< 10 - d
    std::optional<long long> picard_given;
    std::optional<Rational> picard_lhs;  ///< rho + 12 sum mu - sum defect, when rho is given
    std::optional<bool> second_identity_holds;

    Rational derived_picard_rank;  ///< 10 - d - 12 sum mu + sum defect
    bool derived_rank_is_positive_integer = false;
};

inline HrrMilnorCheck hrr_milnor_check(const OrbifoldConfig& config) {
    if (!config.degree) throw DomainError("the Riemann-Roch/Milnor identities need the Del Pezzo degree");
    HrrMilnorCheck out;
    Rational sum_mu;
    for (const auto& s : config.singularities) {
        out.sum_defect += orbifold_defect(s);
        out.sum_milnor += milnor_number(s);
        sum_mu += mu_anticanonical(s);
    }
    out.twelve_sum_mu = Rational(12) * sum_mu;
    out.first_identity_holds = out.sum_defect + out.sum_milnor == out.twelve_sum_mu;

    out.picard_rhs = Rational(10 - *config.degree);
    out.derived_picard_rank = out.picard_rhs - out.twelve_sum_mu + out.sum_defect;
    out.derived_rank_is_positive_integer = out.derived_picard_rank.is_integer() && out.derived_picard_rank.sign() > 0;
    if (config.picard_rank) {
        out.picard_given = config.picard_rank;
        out.picard_lhs = Rational(*config.picard_rank) + out.twelve_sum_mu - out.sum_defect;
        out.second_identity_holds = *out.picard_lhs == out.picard_rhs;
    }
    return out;
}

struct BubbleBounds {
    BigInt min_count = 0;
    BigInt max_count = 0;
    std::optional<BigInt> exact_fit;  ///< total / quantum, when that is an integer
    std::optional<std::string> violation;
};

/// Range of ALE bubble counts compatible with a total energy when each bubble
/// carries at least `quantum`.
inline BubbleBounds bubble_count_bounds(const Rational& total, const Rational& quantum = ale_energy_quantum()) {
    if (quantum.sign() <= 0) throw DomainError("bubble energy quantum must be positive");
    if (total.sign() < 0) throw DomainError("total bubble energy must be non-negative");
    BubbleBounds out;
    if (total.is_zero()) {
        out.exact_fit = BigInt(0);
        return out;
    }
    if (total < quantum) {
        out.violation = "energy below one quantum";
        return out;
    }
    const Rational ratio = total / quantum;
    out.min_count = 1;
    out.max_count = ratio.floor();
    if (ratio.is_integer()) out.exact_fit = ratio.num();
    return out;
}

}  // namespace qsing
