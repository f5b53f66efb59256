#pragma once

// Text and JSON renderings of reports. Rationals are always exact: "p/q" in
// text and {"num": p, "den": q} in JSON; integers that do not fit in 64 bits
// are emitted as decimal strings.

#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "qsing/enumerator.hpp"
#include "qsing/invariants.hpp"
#include "qsing/rational.hpp"
#include "qsing/singularity.hpp"

namespace qsing {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(v.str());
}

inline Json to_json(const Rational& q) {
    Json j;
    j["num"] = to_json(q.num());
    j["den"] = to_json(q.den());
    return j;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>)
        return to_json(*v);
    else
        return Json(*v);
}

inline Json singularity_list_json(const std::vector<SingularityType>& sings) {
    Json arr = Json::array();
    for (const auto& s : sings) arr.push_back(s.to_string());
    return arr;
}

inline Json to_json(const BubbleBounds& b) {
    Json j;
    j["min"] = to_json(b.min_count);
    j["max"] = to_json(b.max_count);
    j["exact_fit"] = optional_json(b.exact_fit);
    if (b.violation) j["violation"] = *b.violation;
    return j;
}

inline Json to_json(const HrrMilnorCheck& h) {
    Json j;
    j["sum_orbifold_defect"] = to_json(h.sum_defect);
    j["sum_milnor"] = to_json(h.sum_milnor);
    j["twelve_sum_mu"] = to_json(h.twelve_sum_mu);
    j["first_identity_holds"] = h.first_identity_holds;
    j["picard_rhs"] = to_json(h.picard_rhs);
    j["picard_given"] = optional_json(h.picard_given);
    j["picard_lhs"] = optional_json(h.picard_lhs);
    j["second_identity_holds"] = optional_json(h.second_identity_holds);
    j["derived_picard_rank"] = to_json(h.derived_picard_rank);
    j["derived_rank_is_positive_integer"] = h.derived_rank_is_positive_integer;
    return j;
}

inline Json to_json(const ConstraintReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["mode"] = to_string(r.mode);
    j["singularities"] = singularity_list_json(r.singularities);
    j["verdict"] = to_string(r.verdict);
    if (r.verdict == Verdict::not_analyzable) {
        j["reason"] = r.reason.value_or("");
        return j;
    }
    j["twelve_sum_mu"] = to_json(r.twelve_sum_mu);
    j["budget"] = to_json(r.budget);
    j["budget_ok"] = r.budget_ok;
    j["chi_orb_from_ledger"] = to_json(r.chi_orb_from_ledger);
    j["euler_topological"] = optional_json(r.euler_topological);
    j["chi_orb_if_chi_known"] = optional_json(r.chi_orb_if_chi_known);
    j["chi_limit"] = optional_json(r.chi_limit);
    j["ledger_closes"] = optional_json(r.ledger_closes);
    j["hrr_milnor"] = to_json(r.hrr);
    j["derived_picard_rank"] = to_json(r.hrr.derived_picard_rank);
    j["bubble_bounds"] = to_json(r.bubbles);
    Json verdicts;
    verdicts["budget"] = r.budget_ok;
    for (const auto& rv : r.rules) verdicts[rv.name] = rv.admits;
    j["verdicts"] = verdicts;
    return j;
}

/// Compact per-configuration entry used inside enumeration output.
inline Json enumeration_entry_json(const ConstraintReport& r) {
    Json j;
    j["singularities"] = singularity_list_json(r.singularities);
    j["twelve_sum_mu"] = to_json(r.twelve_sum_mu);
    j["chi_orb_if_chi_known"] = optional_json(r.chi_orb_if_chi_known);
    j["derived_picard_rank"] = to_json(r.hrr.derived_picard_rank);
    j["bubble_bounds"] = to_json(r.bubbles);
    Json verdicts;
    verdicts["budget"] = r.budget_ok;
    verdicts["hrr_milnor_first_identity"] = r.hrr.first_identity_holds;
    verdicts["picard_rank_positive_integer"] = r.hrr.derived_rank_is_positive_integer;
    for (const auto& rv : r.rules) verdicts[rv.name] = rv.admits;
    j["verdicts"] = verdicts;
    return j;
}

inline Json to_json(const EnumerationResult& r) {
    Json j;
    j["degree"] = r.degree;
    j["mode"] = to_string(r.mode);
    j["budget"] = to_json(Rational(12 - r.degree));
    j["active_rules"] = r.active_rules;
    j["allowed_types"] = singularity_list_json(r.allowed_types);
    j["smooth_case"] = enumeration_entry_json(r.smooth_case);
    Json configs = Json::array();
    for (const auto& c : r.configurations) configs.push_back(enumeration_entry_json(c));
    j["configurations"] = configs;
    j["configuration_count"] = r.configurations.size();
    j["excluded_count"] = r.excluded_count;
    Json maxm;
    for (std::size_t t = 0; t < r.allowed_types.size(); ++t) maxm[r.allowed_types[t].to_string()] = r.max_multiplicity[t];
    j["max_multiplicity"] = maxm;
    return j;
}

// ---------------------------------------------------------------------------
// Text

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string bubbles_text(const BubbleBounds& b) {
    if (b.violation) return "violation: " + *b.violation;
    std::string out = "min " + b.min_count.str() + ", max " + b.max_count.str();
    out += ", exact fit " + (b.exact_fit ? b.exact_fit->str() : std::string("none"));
    return out;
}

inline std::string to_text(const ConstraintReport& r) {
    std::ostringstream os;
    os << "degree: " << r.degree << "\n";
    os << "mode: " << to_string(r.mode) << "\n";
    os << "singularities: " << (r.singularities.empty() ? "(none)" : format_singularity_list(r.singularities)) << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    if (r.verdict == Verdict::not_analyzable) {
        os << "reason: " << r.reason.value_or("") << "\n";
        return os.str();
    }
    os << "12*sum(mu): " << r.twelve_sum_mu << "\n";
    os << "budget: 0 < 12*sum(mu) < " << r.budget << ": " << (r.budget_ok ? "satisfied" : "violated") << "\n";
    os << "chi_orb (from ledger): " << r.chi_orb_from_ledger << "\n";
    if (r.chi_orb_if_chi_known) {
        os << "chi (topological): " << *r.euler_topological << "\n";
        os << "chi_orb (from chi): " << *r.chi_orb_if_chi_known << "\n";
        os << "chi_limit: " << *r.chi_limit << " (expected " << 12 - r.degree << "): "
           << (*r.ledger_closes ? "closes" : "does not close") << "\n";
    }
    const auto& h = r.hrr;
    os << "sum(1-1/n_p): " << h.sum_defect << "\n";
    os << "sum(milnor): " << h.sum_milnor << "\n";
    os << "identity sum(1-1/n_p) + sum(milnor) = 12*sum(mu): " << (h.first_identity_holds ? "holds" : "fails") << "\n";
    if (h.picard_given) {
        os << "picard rank (given): " << *h.picard_given << "\n";
        os << "identity rho + 12*sum(mu) - sum(1-1/n_p) = " << h.picard_rhs << ": " << *h.picard_lhs << ", "
           << (*h.second_identity_holds ? "holds" : "fails") << "\n";
    }
    os << "picard rank (derived): " << h.derived_picard_rank
       << " (positive integer: " << yes_no(h.derived_rank_is_positive_integer) << ")\n";
    os << "bubbles: " << bubbles_text(r.bubbles) << "\n";
    for (const auto& rv : r.rules) os << "rule " << rv.name << ": " << (rv.admits ? "pass" : "FAIL") << "\n";
    return os.str();
}

inline std::string to_text(const EnumerationResult& r) {
    std::ostringstream os;
    os << "degree " << r.degree << ", mode " << to_string(r.mode) << ", budget 12*sum(mu) < " << 12 - r.degree << "\n";
    if (!r.active_rules.empty()) {
        os << "rules:";
        for (const auto& n : r.active_rules) os << " " << n;
        os << "\n";
    }
    os << "configurations: " << r.configurations.size() << " (excluded by rules: " << r.excluded_count << ")\n";
    for (const auto& c : r.configurations) {
        os << "  " << format_singularity_list(c.singularities) << " | 12*sum(mu) = " << c.twelve_sum_mu
           << " | rho = " << c.hrr.derived_picard_rank << " | bubbles " << bubbles_text(c.bubbles) << "\n";
    }
    os << "max multiplicity:";
    for (std::size_t t = 0; t < r.allowed_types.size(); ++t)
        os << " " << r.allowed_types[t].to_string() << "=" << r.max_multiplicity[t];
    os << "\n";
    return os.str();
}

}  // namespace qsing
