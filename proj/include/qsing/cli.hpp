#pragma once

// Command-line front end. run() is the whole program minus main(), so the
// test suites can drive every subcommand in-process.
//
// Exit status: 0 success (including configurations that fail their checks;
// the verdict is in the report), 1 domain error, 2 usage error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsing/dedekind.hpp"
#include "qsing/enumerator.hpp"
#include "qsing/errors.hpp"
#include "qsing/invariants.hpp"
#include "qsing/rational.hpp"
#include "qsing/report.hpp"
#include "qsing/singularity.hpp"

namespace qsing::cli {

enum class Format { text, json };

/// One line of verify-examples: a published value and what the library computes.
struct ReferenceCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass() const { return expected == actual; }
};

/// Every published value the library reproduces, recomputed from scratch.
inline std::vector<ReferenceCheck> reference_checks() {
    using S = SingularityType;
    std::vector<ReferenceCheck> out;
    auto add = [&out](std::string name, std::string expected, auto compute) {
        std::string actual;
        try {
            actual = compute();
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        out.push_back({std::move(name), std::move(expected), std::move(actual)});
    };
    auto sigma = [](unsigned r, long long b1, long long b2, long long i) {
        return dedekind_sum(DedekindInput(r, {b1, b2}, i)).to_string();
    };
    auto twelve_mu = [](const S& s) { return (Rational(12) * mu_anticanonical(s)).to_string(); };

    add("sigma_2(1/4(1,1))", "1/16", [&] { return sigma(4, 1, 1, 2); });
    add("sigma_0(1/4(1,1))", "1/16", [&] { return sigma(4, 1, 1, 0); });
    add("sigma_4(1/8(1,3))", "5/32", [&] { return sigma(8, 1, 3, 4); });
    add("sigma_0(1/8(1,3))", "5/32", [&] { return sigma(8, 1, 3, 0); });
    add("sigma_6(1/9(1,2))", "2/27", [&] { return sigma(9, 1, 2, 6); });
    add("sigma_0(1/9(1,2))", "2/27", [&] { return sigma(9, 1, 2, 0); });

    const char* a_series[] = {"3/2", "8/3", "15/4", "24/5", "35/6", "48/7", "63/8", "80/9"};
    for (unsigned k = 1; k <= 8; ++k) {
        add("12mu(K^-1) A" + std::to_string(k), a_series[k - 1], [&] { return twelve_mu(S::A(k)); });
        add("12mu(K^-1) 1/" + std::to_string(k + 1) + "(1," + std::to_string(k) + ")", a_series[k - 1],
            [&] { return twelve_mu(S::cyclic(k + 1, 1, k)); });
    }
    add("12mu(K^-1) D4", "39/8", [&] { return twelve_mu(S::D(4)); });
    add("12mu(K^-1) 1/4(1,1)", "3/4", [&] { return twelve_mu(S::cyclic(4, 1, 1)); });
    add("12mu(K^-1) 1/8(1,3)", "15/8", [&] { return twelve_mu(S::cyclic(8, 1, 3)); });
    add("12mu(K^-1) 1/9(1,2)", "8/9", [&] { return twelve_mu(S::cyclic(9, 1, 2)); });

    add("genus of degree-8 curve in P(1,1,4)", "3",
        [] { return genus_weighted_plane_curve({1, 1, 4}, 8).to_string(); });
    add("chi of double cover of P(1,1,4)", "10", [] {
        const Rational chi_curve = Rational(2) - Rational(2) * genus_weighted_plane_curve({1, 1, 4}, 8);
        if (!chi_curve.is_integer()) throw DomainError("branch curve Euler number is not an integer");
        return std::to_string(euler_double_cover(3, static_cast<long long>(chi_curve.num())));
    });
    const auto ex1 = parse_singularity_list("2x 1/4(1,1)");
    const auto ex2 = parse_singularity_list("A8, 2x 1/9(1,2)");
    add("chi_orb of degree-2 double cover", "17/2", [&] { return chi_orb_from_chi(Rational(10), ex1).to_string(); });
    add("chi_orb of P^2/(Z/9)", "1/3", [&] { return chi_orb_from_chi(Rational(3), ex2).to_string(); });
    add("chi_limit degree 2", "10", [&] { return chi_limit({2, ex1, 10, std::nullopt}).to_string(); });
    add("chi_limit degree 1", "11", [&] { return chi_limit({1, ex2, 3, std::nullopt}).to_string(); });
    add("bubble energy two 1/4(1,1)", "3/2", [&] { return bubble_energy_from_mu(ex1).to_string(); });
    add("exact-fit bubble count", "2", [&] {
        const auto b = bubble_count_bounds(bubble_energy_from_mu(ex1));
        return b.exact_fit ? b.exact_fit->str() : std::string("none");
    });

    auto maxm = [](int d, Mode mode, const S& s) {
        return std::to_string(max_multiplicity(enumerate(d, mode), s));
    };
    add("degree 3 max A1", "5", [&] { return maxm(3, Mode::inequality_only, S::A(1)); });
    add("degree 2 max A1", "6", [&] { return maxm(2, Mode::inequality_only, S::A(1)); });
    add("degree 2 max A2", "3", [&] { return maxm(2, Mode::inequality_only, S::A(2)); });
    add("degree 2 max A3", "2", [&] { return maxm(2, Mode::inequality_only, S::A(3)); });
    add("degree 2 max A4 (with exclusions)", "1", [&] { return maxm(2, Mode::with_exclusions, S::A(4)); });
    const auto d1 = enumerate(1, Mode::inequality_only);
    const char* d1_expected[] = {"7", "4", "2", "2", "1", "1", "1", "1"};
    for (unsigned k = 1; k <= 8; ++k)
        add("degree 1 max A" + std::to_string(k), d1_expected[k - 1],
            [&] { return std::to_string(max_multiplicity(d1, S::A(k))); });
    add("degree 1 max 1/8(1,3)", "5", [&] { return std::to_string(max_multiplicity(d1, S::cyclic(8, 1, 3))); });
    add("degree 1 max D4", "2", [&] { return std::to_string(max_multiplicity(d1, S::D(4))); });
    add("degree 1 two D4 + 1/4(1,1)", "admissible", [] {
        return std::string(to_string(check_config({1, parse_singularity_list("D4,D4,1/4(1,1)"), {}, {}},
                                                  Mode::inequality_only).verdict));
    });
    add("Picard rank of P^2/(Z/9)", "1",
        [&] { return hrr_milnor_check({1, ex2, std::nullopt, std::nullopt}).derived_picard_rank.to_string(); });
    return out;
}

namespace detail {

inline std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string item(qsing::detail::trim(std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError(std::string("expected a comma-separated list of integers for ") + what, item, start);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline void emit(std::ostream& out, Format fmt, const std::string& text, const Json& json) {
    if (fmt == Format::json)
        out << json.dump(2) << "\n";
    else
        out << text;
}

}  // namespace detail

/// Runs the program on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of surface quotient singularities and Del Pezzo degenerations", "qsing"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::string out_path;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");

    // dedekind
    auto* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind sum sigma_i(1/r(b1,...,bm))");
    unsigned ded_r = 0;
    std::string ded_weights;
    long long ded_index = 0;
    bool ded_oracle = false;
    dedekind_cmd->add_option("--r", ded_r, "Order r")->required();
    dedekind_cmd->add_option("--weights", ded_weights, "Comma-separated weights b1,...,bm")->required();
    dedekind_cmd->add_option("--index", ded_index, "Index i (taken mod r)");
    dedekind_cmd->add_flag("--oracle", ded_oracle, "Also print the double-precision evaluation");

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "Correction term mu, group order and Milnor number of one type");
    std::string mu_sing;
    std::string mu_bundle = "anticanonical";
    mu_cmd->add_option("--sing", mu_sing, "Singularity type, e.g. A3, D4, 1/8(1,3)")->required();
    mu_cmd->add_option("--bundle", mu_bundle, "anticanonical or canonical-square")
        ->check(CLI::IsMember({"anticanonical", "canonical-square"}));

    // chi-orb
    auto* chi_cmd = app.add_subcommand("chi-orb", "Orbifold Euler number from the topological one");
    std::string chi_value;
    std::string chi_sings;
    chi_cmd->add_option("--chi", chi_value, "Topological Euler number")->required();
    chi_cmd->add_option("--sings", chi_sings, "Singularity list, e.g. \"2x 1/4(1,1)\"")->required();

    // genus
    auto* genus_cmd = app.add_subcommand("genus", "Genus of a curve in a weighted projective plane");
    std::string genus_weights;
    long long genus_degree = 0;
    genus_cmd->add_option("--weights", genus_weights, "a0,a1,a2")->required();
    genus_cmd->add_option("--degree", genus_degree, "Curve degree")->required();

    // double-cover
    auto* cover_cmd = app.add_subcommand("double-cover", "Euler number of a branched double cover");
    long long cover_base = 0;
    long long cover_branch = 0;
    long long cover_genus = 0;
    cover_cmd->add_option("--chi-base", cover_base, "Euler number of the base")->required();
    auto* branch_opt = cover_cmd->add_option("--chi-branch", cover_branch, "Euler number of the branch curve");
    auto* genus_opt = cover_cmd->add_option("--branch-genus", cover_genus, "Genus of a smooth branch curve");
    branch_opt->excludes(genus_opt);

    // check
    auto* check_cmd = app.add_subcommand("check", "Analyze one limit configuration");
    int check_degree = 0;
    std::string check_sings;
    std::string check_mode = "inequality-only";
    std::vector<std::string> check_disabled;
    long long check_chi = 0;
    long long check_picard = 0;
    check_cmd->add_option("--degree", check_degree, "Del Pezzo degree 1..4")->required();
    check_cmd->add_option("--sings", check_sings, "Singularity list")->required();
    check_cmd->add_option("--mode", check_mode, "inequality-only or with-exclusions");
    check_cmd->add_option("--disable-rule", check_disabled, "Exclusion rule to switch off (repeatable)");
    auto* check_chi_opt = check_cmd->add_option("--chi", check_chi, "Topological Euler number of the limit");
    auto* check_picard_opt = check_cmd->add_option("--picard", check_picard, "Picard rank of the limit");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "All admissible configurations in a degree");
    int enum_degree = 0;
    std::string enum_mode = "inequality-only";
    std::vector<std::string> enum_disabled;
    unsigned enum_threads = 1;
    enum_cmd->add_option("--degree", enum_degree, "Del Pezzo degree 1..4")->required();
    enum_cmd->add_option("--mode", enum_mode, "inequality-only or with-exclusions");
    enum_cmd->add_option("--disable-rule", enum_disabled, "Exclusion rule to switch off (repeatable)");
    enum_cmd->add_option("--threads", enum_threads, "Worker threads for the search");

    // bubbles
    auto* bubbles_cmd = app.add_subcommand("bubbles", "Bubble-count range for a total curvature energy");
    std::string bub_total;
    std::string bub_quantum = "3/4";
    bubbles_cmd->add_option("--total", bub_total, "Total energy in units of 8 pi^2")->required();
    bubbles_cmd->add_option("--quantum", bub_quantum, "Minimum energy per bubble in units of 8 pi^2");

    auto* verify_cmd = app.add_subcommand("verify-examples", "Recompute every published reference value");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    const Format fmt = format_name == "json" ? Format::json : Format::text;
    std::ostringstream buffer;
    int status = 0;
    try {
        if (dedekind_cmd->parsed()) {
            const auto weights = detail::parse_int_list(ded_weights, "--weights");
            const DedekindInput in(ded_r, weights, ded_index);
            const Rational value = dedekind_sum(in);
            Json j;
            j["input"] = {{"r", ded_r}, {"weights", weights}, {"index", ded_index}};
            j["expression"] = in.to_string();
            j["value"] = to_json(value);
            std::string text = in.to_string() + " = " + value.to_string() + "\n";
            if (ded_oracle) {
                const double approx = dedekind_sum_float_oracle(in);
                const double diff = std::abs(approx - value.to_double());
                std::ostringstream os;
                os << std::setprecision(17) << "float oracle: " << approx << "\n"
                   << std::setprecision(3) << "abs difference: " << diff << "\n";
                text += os.str();
                j["oracle"] = {{"float", approx}, {"abs_difference", diff}};
            }
            detail::emit(buffer, fmt, text, j);
        } else if (mu_cmd->parsed()) {
            const auto s = SingularityType::parse(mu_sing);
            const Bundle bundle = mu_bundle == "anticanonical" ? Bundle::anticanonical : Bundle::canonical_square;
            const Rational m = mu(s, bundle);
            Json j;
            j["type"] = s.to_string();
            j["bundle"] = to_string(bundle);
            j["group_order"] = group_order(s);
            j["mu"] = to_json(m);
            j["twelve_mu"] = to_json(Rational(12) * m);
            std::ostringstream os;
            os << "type: " << s.to_string() << "\n"
               << "bundle: " << to_string(bundle) << "\n"
               << "group order: " << group_order(s) << "\n"
               << "mu: " << m << "\n"
               << "12*mu: " << Rational(12) * m << "\n";
            if (bundle == Bundle::anticanonical) {
                const Rational nu = milnor_number(s);
                j["milnor"] = to_json(nu);
                os << "milnor: " << nu << "\n";
            }
            detail::emit(buffer, fmt, os.str(), j);
        } else if (chi_cmd->parsed()) {
            const Rational chi = Rational::parse(chi_value);
            const auto sings = parse_singularity_list(chi_sings);
            const Rational value = chi_orb_from_chi(chi, sings);
            Json j;
            j["chi"] = to_json(chi);
            j["singularities"] = singularity_list_json(sings);
            j["chi_orb"] = to_json(value);
            detail::emit(buffer, fmt, value.to_string() + "\n", j);
        } else if (genus_cmd->parsed()) {
            const auto w = detail::parse_int_list(genus_weights, "--weights");
            if (w.size() != 3) throw ParseError("expected exactly three weights", genus_weights, 0);
            const Rational g = genus_weighted_plane_curve({w[0], w[1], w[2]}, genus_degree);
            Json j;
            j["weights"] = w;
            j["degree"] = genus_degree;
            j["genus"] = to_json(g);
            detail::emit(buffer, fmt, g.to_string() + "\n", j);
        } else if (cover_cmd->parsed()) {
            long long branch = cover_branch;
            if (genus_opt->count() > 0) branch = 2 - 2 * cover_genus;
            else if (branch_opt->count() == 0) branch = 0;
            const long long value = euler_double_cover(cover_base, branch);
            Json j;
            j["chi_base"] = cover_base;
            j["chi_branch"] = branch;
            j["chi"] = value;
            detail::emit(buffer, fmt, std::to_string(value) + "\n", j);
        } else if (check_cmd->parsed()) {
            OrbifoldConfig cfg;
            cfg.degree = check_degree;
            cfg.singularities = parse_singularity_list(check_sings);
            if (check_chi_opt->count() > 0) cfg.euler_topological = check_chi;
            if (check_picard_opt->count() > 0) cfg.picard_rank = check_picard;
            const Mode mode = parse_mode(check_mode);
            const auto report = check_config(cfg, mode, exclusion_rules_without(check_disabled));
            detail::emit(buffer, fmt, to_text(report), to_json(report));
        } else if (enum_cmd->parsed()) {
            const Mode mode = parse_mode(enum_mode);
            const auto result = enumerate(enum_degree, mode, exclusion_rules_without(enum_disabled), enum_threads);
            detail::emit(buffer, fmt, to_text(result), to_json(result));
        } else if (bubbles_cmd->parsed()) {
            const Rational total = Rational::parse(bub_total);
            const Rational quantum = Rational::parse(bub_quantum);
            const auto b = bubble_count_bounds(total, quantum);
            Json j;
            j["total"] = to_json(total);
            j["quantum"] = to_json(quantum);
            j["bubble_bounds"] = to_json(b);
            detail::emit(buffer, fmt, bubbles_text(b) + "\n", j);
        } else if (verify_cmd->parsed()) {
            const auto checks = reference_checks();
            std::ostringstream os;
            Json arr = Json::array();
            std::size_t failed = 0;
            for (const auto& c : checks) {
                os << (c.pass() ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.actual
                   << "\n";
                arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass()}});
                if (!c.pass()) ++failed;
            }
            os << checks.size() - failed << "/" << checks.size() << " reference values reproduced\n";
            Json j;
            j["checks"] = arr;
            j["failed"] = failed;
            detail::emit(buffer, fmt, os.str(), j);
            if (failed > 0) status = 1;
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return 1;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return status;
}

}  // namespace qsing::cli
