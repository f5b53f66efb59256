#include <gtest/gtest.h>

#include <random>

#include "qsing/invariants.hpp"

using qsing::Bundle;
using qsing::OrbifoldConfig;
using qsing::Rational;
using S = qsing::SingularityType;

namespace {

const auto kDoubleCover = qsing::parse_singularity_list("2x 1/4(1,1)");
const auto kNineFoldQuotient = qsing::parse_singularity_list("A8, 2x 1/9(1,2)");

}  // namespace

TEST(Invariants, ChiOrbFromChi) {
    EXPECT_EQ(qsing::chi_orb_from_chi(10, kDoubleCover), Rational(17, 2));
    EXPECT_EQ(qsing::chi_orb_from_chi(3, kNineFoldQuotient), Rational(1, 3));
    EXPECT_EQ(qsing::chi_orb_from_chi(7, {}), Rational(7));
}

TEST(Invariants, BubbleEnergyFromMu) {
    EXPECT_EQ(qsing::bubble_energy_from_mu(kDoubleCover), Rational(3, 2));
    // 2 * 8/9 + (9 - 1/9)
    EXPECT_EQ(qsing::bubble_energy_from_mu(kNineFoldQuotient), Rational(32, 3));
    EXPECT_EQ(qsing::bubble_energy_from_mu({}), Rational(0));
    EXPECT_EQ(qsing::bubble_energy_from_mu(qsing::parse_singularity_list("A2, E8"), Bundle::canonical_square),
              Rational(8, 3) + Rational(9) - Rational(1, 120));
    EXPECT_THROW(qsing::bubble_energy_from_mu(kDoubleCover, Bundle::canonical_square), qsing::DomainError);
}

TEST(Invariants, ChiLimit) {
    EXPECT_EQ(qsing::chi_limit({2, kDoubleCover, 10, std::nullopt}), Rational(10));
    EXPECT_EQ(qsing::chi_limit({1, kNineFoldQuotient, 3, std::nullopt}), Rational(11));
    EXPECT_EQ(qsing::chi_limit({std::nullopt, {}, 5, std::nullopt}), Rational(5));
    EXPECT_THROW(qsing::chi_limit({1, kNineFoldQuotient, std::nullopt, std::nullopt}), qsing::DomainError);

    const auto ledger = qsing::energy_ledger({2, kDoubleCover, 10, std::nullopt});
    EXPECT_EQ(ledger.chi_orb + ledger.total_bubble_energy_units, ledger.chi_limit);
}

TEST(Invariants, NegativeCurvatureBranch) {
    // Canonical-square correction terms feed the same ledger.
    const OrbifoldConfig cfg{std::nullopt, qsing::parse_singularity_list("A1, E6"), 20, std::nullopt};
    const Rational expected = Rational(20) - Rational(1, 2) - Rational(23, 24) + Rational(3, 2) + Rational(7) -
                              Rational(1, 24);
    EXPECT_EQ(qsing::chi_limit(cfg, Bundle::canonical_square), expected);
}

TEST(Invariants, GenusWeightedPlaneCurve) {
    EXPECT_EQ(qsing::genus_weighted_plane_curve({1, 1, 4}, 8), Rational(3));
    EXPECT_EQ(qsing::genus_weighted_plane_curve({1, 1, 1}, 3), Rational(1));
    EXPECT_EQ(qsing::genus_weighted_plane_curve({1, 1, 1}, 4), Rational(3));
    for (long long d = 1; d <= 10; ++d)
        EXPECT_EQ(qsing::genus_weighted_plane_curve({1, 1, 1}, d), Rational((d - 1) * (d - 2), 2)) << "d = " << d;
    EXPECT_THROW(qsing::genus_weighted_plane_curve({0, 1, 1}, 3), qsing::DomainError);
    EXPECT_THROW(qsing::genus_weighted_plane_curve({1, 1, 1}, 0), qsing::DomainError);
}

TEST(Invariants, DoubleCover) {
    EXPECT_EQ(qsing::euler_double_cover(3, -4), 10);
    EXPECT_EQ(qsing::euler_double_cover(5, 0), 10);
    const Rational g = qsing::genus_weighted_plane_curve({1, 1, 4}, 8);
    const Rational chi_curve = Rational(2) - Rational(2) * g;
    ASSERT_TRUE(chi_curve.is_integer());
    EXPECT_EQ(qsing::euler_double_cover(3, static_cast<long long>(chi_curve.num())), 10);
}

TEST(Invariants, HrrMilnorCheck) {
    const auto h = qsing::hrr_milnor_check({1, kNineFoldQuotient, std::nullopt, std::nullopt});
    EXPECT_TRUE(h.first_identity_holds);
    EXPECT_EQ(h.derived_picard_rank, Rational(1));
    EXPECT_TRUE(h.derived_rank_is_positive_integer);
    EXPECT_FALSE(h.picard_given.has_value());

    const auto given = qsing::hrr_milnor_check({1, kNineFoldQuotient, std::nullopt, 1});
    EXPECT_EQ(given.picard_lhs, Rational(9));
    EXPECT_EQ(given.second_identity_holds, true);
    const auto wrong = qsing::hrr_milnor_check({1, kNineFoldQuotient, std::nullopt, 2});
    EXPECT_EQ(wrong.second_identity_holds, false);

    for (int d = 1; d <= 4; ++d) {
        const auto smooth = qsing::hrr_milnor_check({d, {}, std::nullopt, std::nullopt});
        EXPECT_EQ(smooth.derived_picard_rank, Rational(10 - d));
        EXPECT_TRUE(smooth.first_identity_holds);
    }
    EXPECT_THROW(qsing::hrr_milnor_check({std::nullopt, {}, std::nullopt, std::nullopt}), qsing::DomainError);
    EXPECT_THROW(qsing::hrr_milnor_check({1, {S::E(6)}, std::nullopt, std::nullopt}), qsing::DomainError);
}

TEST(Invariants, FirstIdentityPerPointOnASeries) {
    for (long long k = 1; k <= 8; ++k) {
        const auto h = qsing::hrr_milnor_check({1, {S::A(static_cast<unsigned>(k))}, std::nullopt, std::nullopt});
        EXPECT_EQ(h.sum_defect + h.sum_milnor, Rational(k + 1) - Rational(1, k + 1));
        EXPECT_TRUE(h.first_identity_holds);
    }
}

TEST(Invariants, BubbleCountBounds) {
    const auto two = qsing::bubble_count_bounds(Rational(3, 2));
    EXPECT_EQ(two.min_count, 1);
    EXPECT_EQ(two.max_count, 2);
    ASSERT_TRUE(two.exact_fit.has_value());
    EXPECT_EQ(*two.exact_fit, 2);

    const auto none = qsing::bubble_count_bounds(Rational(0));
    EXPECT_EQ(none.min_count, 0);
    EXPECT_EQ(none.max_count, 0);

    const auto many = qsing::bubble_count_bounds(Rational(32, 3), Rational(3, 4));
    EXPECT_EQ(many.min_count, 1);
    EXPECT_EQ(many.max_count, 14);
    EXPECT_FALSE(many.exact_fit.has_value());

    const auto below = qsing::bubble_count_bounds(Rational(1, 2));
    ASSERT_TRUE(below.violation.has_value());
    EXPECT_EQ(*below.violation, "energy below one quantum");

    EXPECT_THROW(qsing::bubble_count_bounds(Rational(1), Rational(0)), qsing::DomainError);
    EXPECT_THROW(qsing::bubble_count_bounds(Rational(-1)), qsing::DomainError);
}

TEST(InvariantsProperty, ChiOrbDecreasesAndFirstIdentityHolds) {
    const std::vector<S> pool{S::A(1), S::A(2), S::A(5), S::A(8), S::D(4),
                              S::cyclic(4, 1, 1), S::cyclic(8, 1, 3), S::cyclic(9, 1, 2)};
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<S> sings;
        Rational previous = qsing::chi_orb_from_chi(12, sings);
        for (int i = 0; i < 6; ++i) {
            sings.push_back(pool[pick(rng)]);
            const Rational next = qsing::chi_orb_from_chi(12, sings);
            EXPECT_LT(next, previous);
            previous = next;
        }
        EXPECT_TRUE(qsing::hrr_milnor_check({1 + trial % 4, sings, std::nullopt, std::nullopt}).first_identity_holds);
    }
}
