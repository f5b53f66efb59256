#pragma once

/**
 * @file enumerator.hpp
 * @brief Admissible singularity configurations of degenerating Kahler-Einstein
 *        Del Pezzo surfaces.
 *
 * A degree-d limit M_inf has 0 < 12 * sum mu_p(K^-1) < 12 - d. The enumerator
 * searches all multisets of the singularity types known to occur in degree d
 * under that budget. Optionally, named exclusion rules (classification results
 * for the limit spaces, and positivity of the Picard rank) are layered on top.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qsing/errors.hpp"
#include "qsing/invariants.hpp"
#include "qsing/rational.hpp"
#include "qsing/singularity.hpp"

namespace qsing {

enum class Mode { inequality_only, with_exclusions };

inline const char* to_string(Mode m) { return m == Mode::inequality_only ? "inequality-only" : "with-exclusions"; }

inline Mode parse_mode(std::string_view s) {
    if (s == "inequality-only") return Mode::inequality_only;
    if (s == "with-exclusions") return Mode::with_exclusions;
    throw ParseError("unknown mode (expected inequality-only or with-exclusions)", std::string(s), 0);
}

struct DegreeRules {
    int degree;
    std::vector<SingularityType> allowed_types;  ///< catalog order
    Rational budget;                             ///< strict upper bound on 12 * sum mu
};

/// Singularity types that can occur in a degree-d limit, and the budget 12 - d.
inline DegreeRules degree_rules(int degree) {
    DegreeRules rules{degree, {}, Rational(12 - degree)};
    using S = SingularityType;
    switch (degree) {
        case 4: rules.allowed_types = {S::A(1)}; break;
        case 3: rules.allowed_types = {S::A(1), S::A(2)}; break;
        case 2: rules.allowed_types = {S::A(1), S::A(2), S::A(3), S::A(4), S::cyclic(4, 1, 1)}; break;
        case 1:
            for (unsigned k = 1; k <= 8; ++k) rules.allowed_types.push_back(S::A(k));
            rules.allowed_types.push_back(S::D(4));
            rules.allowed_types.push_back(S::cyclic(4, 1, 1));
            rules.allowed_types.push_back(S::cyclic(8, 1, 3));
            rules.allowed_types.push_back(S::cyclic(9, 1, 2));
            break;
        default: throw DomainError("Del Pezzo degree must be in 1..4, got " + std::to_string(degree));
    }
    return rules;
}

/// Input handed to every exclusion rule.
struct RuleContext {
    int degree;
    std::span<const SingularityType> singularities;  ///< sorted, catalog order
    const HrrMilnorCheck& hrr;
};

struct ExclusionRule {
    std::string name;
    std::string description;
    std::function<bool(const RuleContext&)> admits;
};

namespace detail {

inline bool all_canonical(std::span<const SingularityType> sings) {
    return std::all_of(sings.begin(), sings.end(), [](const auto& s) { return s.is_ade(); });
}

inline bool only_types(std::span<const SingularityType> sings, const std::vector<SingularityType>& allowed) {
    return std::all_of(sings.begin(), sings.end(),
                       [&](const auto& s) { return std::find(allowed.begin(), allowed.end(), s) != allowed.end(); });
}

inline bool exactly(std::span<const SingularityType> sings, std::vector<SingularityType> expected) {
    std::sort(expected.begin(), expected.end());
    return std::equal(sings.begin(), sings.end(), expected.begin(), expected.end());
}

}  // namespace detail

/**
 * The rules applied in with-exclusions mode, in evaluation order.
 *
 *  - allowed-types: every point is of a type known to occur in degree d.
 *  - d2-canonical-no-A4: a degree-2 limit with only canonical singularities has no A4 point.
 *  - canonical-classification: canonical-only limits are
 *      d=4: exactly 2 or 4 A1;  d=3: only A1, or exactly 3 A2;
 *      d=2: only A1/A2, or exactly 2 A3;  d=1: only A_k (k<=7), or exactly 2 D4.
 *  - picard-rank-positive: the Picard rank forced by the Riemann-Roch/Milnor identity is >= 1.
 */
inline std::vector<ExclusionRule> default_exclusion_rules() {
    using S = SingularityType;
    std::vector<ExclusionRule> rules;
    rules.push_back({"allowed-types", "every singularity is of a type that occurs in degree-d limits",
                     [](const RuleContext& c) { return detail::only_types(c.singularities, degree_rules(c.degree).allowed_types); }});
    rules.push_back({"d2-canonical-no-A4", "a degree-2 limit with only canonical singularities has no A4 point",
                     [](const RuleContext& c) {
                         if (c.degree != 2 || !detail::all_canonical(c.singularities)) return true;
                         return std::find(c.singularities.begin(), c.singularities.end(), S::A(4)) ==
                                c.singularities.end();
                     }});
    rules.push_back({"canonical-classification", "canonical-only limits match the known per-degree classification",
                     [](const RuleContext& c) {
                         const auto& s = c.singularities;
                         if (s.empty() || !detail::all_canonical(s)) return true;
                         switch (c.degree) {
                             case 4:
                                 return detail::exactly(s, {S::A(1), S::A(1)}) ||
                                        detail::exactly(s, {S::A(1), S::A(1), S::A(1), S::A(1)});
                             case 3:
                                 return detail::only_types(s, {S::A(1)}) ||
                                        detail::exactly(s, {S::A(2), S::A(2), S::A(2)});
                             case 2:
                                 return detail::only_types(s, {S::A(1), S::A(2)}) ||
                                        detail::exactly(s, {S::A(3), S::A(3)});
                             case 1: {
                                 std::vector<SingularityType> low;
                                 for (unsigned k = 1; k <= 7; ++k) low.push_back(S::A(k));
                                 return detail::only_types(s, low) || detail::exactly(s, {S::D(4), S::D(4)});
                             }
                             default: return true;
                         }
                     }});
    rules.push_back({"picard-rank-positive", "the Picard rank 10 - d - 12 sum mu + sum (1 - 1/n_p) is a positive integer",
                     [](const RuleContext& c) { return c.hrr.derived_rank_is_positive_integer; }});
    return rules;
}

/// Keeps the default rules whose names are not listed; throws on an unknown name.
inline std::vector<ExclusionRule> exclusion_rules_without(const std::vector<std::string>& disabled) {
    auto rules = default_exclusion_rules();
    for (const auto& name : disabled) {
        const auto it = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.name == name; });
        if (it == rules.end()) throw ParseError("unknown exclusion rule", name, 0);
        rules.erase(it);
    }
    return rules;
}

enum class Verdict { smooth, admissible, budget_violating, excluded, not_analyzable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::smooth: return "smooth";
        case Verdict::admissible: return "admissible";
        case Verdict::budget_violating: return "budget-violating";
        case Verdict::excluded: return "excluded";
        case Verdict::not_analyzable: return "not-analyzable";
    }
    return "?";
}

struct RuleVerdict {
    std::string name;
    bool admits;
};

/// Everything known about one configuration, every quantity exact.
struct ConstraintReport {
    int degree = 0;
    Mode mode = Mode::inequality_only;
    std::vector<SingularityType> singularities;
    Verdict verdict = Verdict::not_analyzable;
    std::optional<std::string> reason;  ///< why the configuration could not be analyzed

    Rational twelve_sum_mu;
    Rational budget;
    bool budget_ok = false;  ///< 0 < 12 sum mu < 12 - d

    Rational chi_orb_from_ledger;  ///< 12 - d - 12 sum mu
    std::optional<long long> euler_topological;
    std::optional<Rational> chi_orb_if_chi_known;
    std::optional<Rational> chi_limit;
    std::optional<bool> ledger_closes;  ///< chi_limit == 12 - d

    HrrMilnorCheck hrr;
    BubbleBounds bubbles;
    std::vector<RuleVerdict> rules;
};

/// Full analysis of a single configuration.
inline ConstraintReport check_config(const OrbifoldConfig& config, Mode mode,
                                     const std::vector<ExclusionRule>& rules = default_exclusion_rules()) {
    if (!config.degree) throw DomainError("check_config needs the Del Pezzo degree");
    const DegreeRules dr = degree_rules(*config.degree);

    ConstraintReport rep;
    rep.degree = dr.degree;
    rep.mode = mode;
    rep.singularities = config.singularities;
    std::sort(rep.singularities.begin(), rep.singularities.end());
    rep.budget = dr.budget;
    rep.euler_topological = config.euler_topological;

    OrbifoldConfig sorted = config;
    sorted.singularities = rep.singularities;
    try {
        rep.hrr = hrr_milnor_check(sorted);
    } catch (const DomainError& e) {
        rep.reason = std::string("type not admissible for this analysis: ") + e.what();
        rep.verdict = Verdict::not_analyzable;
        return rep;
    }
    rep.twelve_sum_mu = rep.hrr.twelve_sum_mu;
    rep.budget_ok = rep.twelve_sum_mu.sign() > 0 && rep.twelve_sum_mu < rep.budget;
    rep.chi_orb_from_ledger = rep.budget - rep.twelve_sum_mu;
    if (config.euler_topological) {
        const auto ledger = energy_ledger(sorted);
        rep.chi_orb_if_chi_known = ledger.chi_orb;
        rep.chi_limit = ledger.chi_limit;
        rep.ledger_closes = ledger.chi_limit == Rational(12 - dr.degree);
    }
    rep.bubbles = bubble_count_bounds(rep.twelve_sum_mu);

    bool rules_pass = true;
    if (mode == Mode::with_exclusions) {
        const RuleContext ctx{dr.degree, rep.singularities, rep.hrr};
        for (const auto& rule : rules) {
            const bool ok = rule.admits(ctx);
            rep.rules.push_back({rule.name, ok});
            rules_pass = rules_pass && ok;
        }
    }

    if (rep.singularities.empty())
        rep.verdict = Verdict::smooth;
    else if (!rep.budget_ok)
        rep.verdict = Verdict::budget_violating;
    else if (!rules_pass)
        rep.verdict = Verdict::excluded;
    else
        rep.verdict = Verdict::admissible;
    return rep;
}

/// Whether A_k and A_l together fit under the degree-d budget.
inline bool check_pair_rule(unsigned k, unsigned l, int degree = 1) {
    const Rational budget = degree_rules(degree).budget;
    return Rational(12) * (mu_anticanonical(SingularityType::A(k)) + mu_anticanonical(SingularityType::A(l))) < budget;
}

struct EnumerationResult {
    int degree = 0;
    Mode mode = Mode::inequality_only;
    std::vector<std::string> active_rules;
    std::vector<SingularityType> allowed_types;
    ConstraintReport smooth_case;
    std::vector<ConstraintReport> configurations;  ///< admissible degenerate configurations
    std::size_t excluded_count = 0;                ///< budget-feasible but rejected by a rule
    std::vector<unsigned> max_multiplicity;        ///< parallel to allowed_types
};

namespace detail {

/// Largest m with m * weight < budget.
inline unsigned strict_cap(const Rational& budget, const Rational& weight) {
    const Rational ratio = budget / weight;
    BigInt m = ratio.floor();
    if (ratio.is_integer()) m -= 1;
    return static_cast<unsigned>(m);
}

struct SearchSpace {
    std::vector<SingularityType> types;
    std::vector<Rational> weights;  ///< 12 mu per type
    Rational budget;
};

/// Depth-first search over multiplicity vectors, highest multiplicity first.
inline void search(const SearchSpace& space, std::size_t idx, Rational used, std::vector<unsigned>& mult,
                   std::vector<std::vector<unsigned>>& out) {
    if (idx == space.types.size()) {
        out.push_back(mult);
        return;
    }
    const Rational& w = space.weights[idx];
    const unsigned cap = strict_cap(space.budget - used, w);
    for (unsigned m = cap + 1; m-- > 0;) {
        mult[idx] = m;
        search(space, idx + 1, used + Rational(static_cast<long long>(m)) * w, mult, out);
    }
    mult[idx] = 0;
}

inline std::vector<SingularityType> expand(const std::vector<SingularityType>& types, const std::vector<unsigned>& mult) {
    std::vector<SingularityType> out;
    for (std::size_t t = 0; t < types.size(); ++t) out.insert(out.end(), mult[t], types[t]);
    return out;
}

}  // namespace detail

/**
 * Exhaustive search of degree-d configurations with 12 sum mu < 12 - d.
 *
 * With `threads` > 1 the search is split by the multiplicity of the first
 * type; partial results are merged and sorted, so the output does not depend
 * on scheduling.
 */
inline EnumerationResult enumerate(int degree, Mode mode,
                                   const std::vector<ExclusionRule>& rules = default_exclusion_rules(),
                                   unsigned threads = 1) {
    const DegreeRules dr = degree_rules(degree);
    EnumerationResult result;
    result.degree = degree;
    result.mode = mode;
    result.allowed_types = dr.allowed_types;
    if (mode == Mode::with_exclusions)
        for (const auto& r : rules) result.active_rules.push_back(r.name);

    detail::SearchSpace space{dr.allowed_types, {}, dr.budget};
    for (const auto& t : space.types) space.weights.push_back(Rational(12) * mu_anticanonical(t));

    // Branch on the first type's multiplicity.
    const unsigned first_cap = detail::strict_cap(space.budget, space.weights.front());
    auto run_branch = [&space](unsigned m0) {
        std::vector<std::vector<unsigned>> found;
        std::vector<unsigned> mult(space.types.size(), 0);
        mult[0] = m0;
        detail::search(space, 1, Rational(static_cast<long long>(m0)) * space.weights[0], mult, found);
        return found;
    };
    std::vector<std::vector<unsigned>> vectors;
    if (threads <= 1) {
        for (unsigned m0 = first_cap + 1; m0-- > 0;) {
            auto part = run_branch(m0);
            vectors.insert(vectors.end(), part.begin(), part.end());
        }
    } else {
        std::vector<std::future<std::vector<std::vector<unsigned>>>> parts;
        for (unsigned m0 = 0; m0 <= first_cap; ++m0) parts.push_back(std::async(std::launch::async, run_branch, m0));
        for (auto& f : parts) {
            auto part = f.get();
            vectors.insert(vectors.end(), part.begin(), part.end());
        }
    }
    // Canonical order: multiplicity vectors lexicographically descending.
    std::sort(vectors.begin(), vectors.end(), std::greater<>());

    result.max_multiplicity.assign(space.types.size(), 0);
    for (const auto& mult : vectors) {
        OrbifoldConfig cfg;
        cfg.degree = degree;
        cfg.singularities = detail::expand(space.types, mult);
        auto rep = check_config(cfg, mode, rules);
        if (cfg.singularities.empty()) {
            result.smooth_case = std::move(rep);
            continue;
        }
        if (rep.verdict == Verdict::excluded) {
            ++result.excluded_count;
            continue;
        }
        if (rep.verdict != Verdict::admissible)
            throw DomainError("internal error: search emitted a non-admissible configuration");
        for (std::size_t t = 0; t < mult.size(); ++t)
            result.max_multiplicity[t] = std::max(result.max_multiplicity[t], mult[t]);
        result.configurations.push_back(std::move(rep));
    }
    return result;
}

/// Max multiplicity of one type in an enumeration result (0 if the type is not allowed).
inline unsigned max_multiplicity(const EnumerationResult& r, const SingularityType& type) {
    for (std::size_t t = 0; t < r.allowed_types.size(); ++t)
        if (r.allowed_types[t] == type) return r.max_multiplicity[t];
    return 0;
}

}  // namespace qsing
