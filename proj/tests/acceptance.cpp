// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Details of failures go to stderr.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsing/qsing.hpp"

using namespace qsing;
using S = SingularityType;

namespace {

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            std::cerr << "  [" << name_ << "] " << what << "\n";
        }
    }
    template <typename A, typename B>
    void expect_eq(const A& actual, const B& expected, const std::string& what) {
        std::ostringstream os;
        os << what << ": expected " << expected << ", got " << actual;
        expect(actual == expected, os.str());
    }

    bool report(const std::string& detail) const {
        std::cout << (failures_ == 0 ? "PASS " : "FAIL ") << name_ << " (" << checks_ - failures_ << "/" << checks_
                  << " checks" << (detail.empty() ? "" : "; " + detail) << ")\n";
        return failures_ == 0;
    }

private:
    std::string name_;
    int checks_ = 0;
    int failures_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    return os.str();
}

Rational sigma(unsigned r, std::vector<long long> b, long long i) { return dedekind_sum(DedekindInput(r, b, i)); }

// The defining sum evaluated directly in long double, with the index and
// weights used exactly as given (no reduction mod r).
long double sigma_by_definition(unsigned r, const std::vector<long long>& b, long long i) {
    std::complex<long double> acc = 0;
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (unsigned j = 0; j < r; ++j) {
        std::complex<long double> den = 1;
        bool admissible = true;
        for (long long bt : b) {
            if ((static_cast<long long>(j) * bt) % r == 0) {
                admissible = false;
                break;
            }
            den *= std::complex<long double>(1) -
                   std::polar(1.0L, two_pi * std::fmod(static_cast<long double>(j) * bt, r) / r);
        }
        if (!admissible) continue;
        acc += std::polar(1.0L, two_pi * std::fmod(static_cast<long double>(j) * i, r) / r) / den;
    }
    return acc.real() / r;
}

bool criterion_dedekind() {
    Criterion c("1 Dedekind regression");
    const auto t0 = std::chrono::steady_clock::now();
    c.expect_eq(sigma(4, {1, 1}, 2), Rational(1, 16), "sigma_2(1/4(1,1))");
    c.expect_eq(sigma(4, {1, 1}, 0), Rational(1, 16), "sigma_0(1/4(1,1))");
    c.expect_eq(sigma(8, {1, 3}, 4), Rational(5, 32), "sigma_4(1/8(1,3))");
    c.expect_eq(sigma(8, {1, 3}, 0), Rational(5, 32), "sigma_0(1/8(1,3))");
    c.expect_eq(sigma(9, {1, 2}, 6), Rational(2, 27), "sigma_6(1/9(1,2))");
    c.expect_eq(sigma(9, {1, 2}, 0), Rational(2, 27), "sigma_0(1/9(1,2))");
    const double elapsed = seconds_since(t0);
    c.expect(elapsed < 1.0, "runtime " + fmt_seconds(elapsed) + " exceeds 1 s");
    return c.report(fmt_seconds(elapsed));
}

bool criterion_mu_catalog() {
    Criterion c("2 mu catalog");
    for (long long k = 1; k <= 8; ++k) {
        const Rational expected = Rational(k + 1) - Rational(1, k + 1);
        const std::string name = "A" + std::to_string(k);
        c.expect_eq(Rational(12) * mu_anticanonical(S::A(static_cast<unsigned>(k))), expected, "12mu " + name);
        // Second path: the general Dedekind rule on the cyclic model 1/(k+1)(1,k).
        c.expect_eq(Rational(12) * mu_anticanonical(S::cyclic(static_cast<unsigned>(k + 1), 1, k)), expected,
                    "12mu 1/" + std::to_string(k + 1) + "(1," + std::to_string(k) + ")");
        c.expect_eq(Rational(12) * sigma(static_cast<unsigned>(k + 1), {1, k}, 0), expected,
                    "12 sigma_0 for " + name);
    }
    c.expect_eq(Rational(12) * mu_anticanonical(S::D(4)), Rational(39, 8), "12mu D4");
    c.expect_eq(Rational(12) * mu_anticanonical(S::cyclic(4, 1, 1)), Rational(3, 4), "12mu 1/4(1,1)");
    c.expect_eq(Rational(12) * mu_anticanonical(S::cyclic(8, 1, 3)), Rational(15, 8), "12mu 1/8(1,3)");
    c.expect_eq(Rational(12) * mu_anticanonical(S::cyclic(9, 1, 2)), Rational(8, 9), "12mu 1/9(1,2)");
    return c.report("");
}

bool criterion_examples() {
    Criterion c("3 Example replay");
    const Rational g = genus_weighted_plane_curve({1, 1, 4}, 8);
    c.expect_eq(g, Rational(3), "genus((1,1,4), 8)");
    const Rational chi_branch = Rational(2) - Rational(2) * g;
    c.expect(chi_branch.is_integer(), "branch Euler number integral");
    const long long chi_cover = euler_double_cover(3, static_cast<long long>(chi_branch.num()));
    c.expect_eq(chi_cover, 10LL, "chi of the double cover");
    const auto ex1 = parse_singularity_list("2x 1/4(1,1)");
    const auto ex2 = parse_singularity_list("A8, 2x 1/9(1,2)");
    c.expect_eq(chi_orb_from_chi(Rational(chi_cover), ex1), Rational(17, 2), "chi_orb of the double cover");
    c.expect_eq(chi_orb_from_chi(Rational(3), ex2), Rational(1, 3), "chi_orb of the Z/9 quotient");
    c.expect_eq(chi_limit({2, ex1, chi_cover, std::nullopt}), Rational(10), "chi_limit d=2");
    c.expect_eq(chi_limit({1, ex2, 3, std::nullopt}), Rational(11), "chi_limit d=1");
    return c.report("");
}

bool criterion_bounds() {
    Criterion c("4 Degree bounds");
    auto expect_max = [&c](const EnumerationResult& r, const S& s, unsigned expected) {
        c.expect_eq(max_multiplicity(r, s), expected,
                    "d=" + std::to_string(r.degree) + " " + to_string(r.mode) + " max " + s.to_string());
    };
    expect_max(enumerate(3, Mode::inequality_only), S::A(1), 5);
    const auto d2 = enumerate(2, Mode::inequality_only);
    expect_max(d2, S::A(1), 6);
    expect_max(d2, S::A(2), 3);
    expect_max(d2, S::A(3), 2);
    expect_max(d2, S::A(4), 2);
    expect_max(enumerate(2, Mode::with_exclusions), S::A(4), 1);

    const auto t0 = std::chrono::steady_clock::now();
    const auto d1 = enumerate(1, Mode::inequality_only);
    const double elapsed = seconds_since(t0);
    c.expect(elapsed < 10.0, "d=1 enumeration took " + fmt_seconds(elapsed));
    const unsigned a_max[] = {7, 4, 2, 2, 1, 1, 1, 1};
    for (unsigned k = 1; k <= 8; ++k) expect_max(d1, S::A(k), a_max[k - 1]);
    expect_max(d1, S::cyclic(8, 1, 3), 5);
    expect_max(d1, S::D(4), 2);

    // Pair rule: A_k + A_l occurs iff k + l <= 9.
    for (unsigned k = 1; k <= 8; ++k)
        for (unsigned l = k; l <= 8; ++l) {
            std::vector<S> pair{S::A(k), S::A(l)};
            bool found = false;
            for (const auto& cfg : d1.configurations) found = found || cfg.singularities == pair;
            c.expect_eq(found, k + l <= 9, "A" + std::to_string(k) + " + A" + std::to_string(l) + " enumerated");
            c.expect_eq(check_pair_rule(k, l), k + l <= 9, "pair rule A" + std::to_string(k) + ",A" + std::to_string(l));
        }

    // Two D4: the only companions are a single 1/4(1,1) or a single 1/9(1,2).
    std::set<std::string> companions;
    for (const auto& cfg : d1.configurations) {
        if (std::count(cfg.singularities.begin(), cfg.singularities.end(), S::D(4)) != 2) continue;
        std::vector<S> rest;
        for (const auto& s : cfg.singularities)
            if (s != S::D(4)) rest.push_back(s);
        companions.insert(rest.empty() ? "(none)" : format_singularity_list(rest));
    }
    c.expect(companions == std::set<std::string>{"(none)", "1/4(1,1)", "1/9(1,2)"}, "two-D4 companions");
    c.expect_eq(to_string(check_config({1, parse_singularity_list("2x D4, 1/4(1,1)"), {}, {}}, Mode::inequality_only)
                              .verdict),
                std::string("admissible"), "2 D4 + 1/4(1,1)");
    return c.report("d=1 enumeration " + fmt_seconds(elapsed) + ", " + std::to_string(d1.configurations.size()) +
                    " configurations");
}

bool criterion_hrr_milnor() {
    Criterion c("5 HRR-Milnor identities");
    std::size_t total = 0;
    for (int d = 1; d <= 4; ++d) {
        for (const Mode mode : {Mode::inequality_only, Mode::with_exclusions}) {
            const auto r = enumerate(d, mode);
            for (const auto& cfg : r.configurations) {
                ++total;
                c.expect(cfg.hrr.first_identity_holds,
                         "first identity fails for d=" + std::to_string(d) + " " + format_singularity_list(cfg.singularities));
            }
        }
        c.expect_eq(hrr_milnor_check({d, {}, std::nullopt, std::nullopt}).derived_picard_rank, Rational(10 - d),
                    "smooth rho d=" + std::to_string(d));
    }
    const auto ex2 = parse_singularity_list("A8, 2x 1/9(1,2)");
    c.expect_eq(hrr_milnor_check({1, ex2, std::nullopt, std::nullopt}).derived_picard_rank, Rational(1),
                "rho of the Z/9 quotient");
    const auto given = hrr_milnor_check({1, ex2, std::nullopt, 1});
    c.expect(given.second_identity_holds.value_or(false), "second identity with rho = 1");
    return c.report(std::to_string(total) + " enumerated configurations");
}

bool criterion_bubbles() {
    Criterion c("6 Bubble ledger");
    const Rational total = bubble_energy_from_mu(parse_singularity_list("2x 1/4(1,1)"));
    c.expect_eq(total, Rational(3, 2), "bubble energy");
    const auto b = bubble_count_bounds(total, Rational(3, 4));
    c.expect(b.exact_fit.has_value() && *b.exact_fit == 2, "exact fit 2");
    c.expect(b.min_count <= 2 && 2 <= b.max_count, "2 within [min, max]");
    return c.report("");
}

bool criterion_properties() {
    Criterion c("7 Property suites");
    std::mt19937_64 rng(20240229);

    // Periodicity: sigma_i == sigma_{i+r}, and weights are only seen mod r.
    int periodicity = 0;
    for (; periodicity < 500; ++periodicity) {
        const unsigned r = std::uniform_int_distribution<unsigned>(2, 40)(rng);
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        std::vector<long long> b(m), shifted(m);
        for (std::size_t t = 0; t < m; ++t) {
            b[t] = std::uniform_int_distribution<long long>(1, r - 1)(rng);
            shifted[t] = b[t] + static_cast<long long>(r) * std::uniform_int_distribution<long long>(1, 3)(rng);
        }
        const long long i = std::uniform_int_distribution<long long>(0, r - 1)(rng);
        const Rational base = sigma(r, b, i);
        c.expect(base == sigma(r, b, i + r) && base == sigma(r, shifted, i - 2 * static_cast<long long>(r)),
                 "exact periodicity r=" + std::to_string(r));
        const long double direct = sigma_by_definition(r, shifted, i + r);
        c.expect(std::abs(direct - static_cast<long double>(base.to_double())) < 1e-9L,
                 "definition at shifted index r=" + std::to_string(r));
    }

    // Exact vs float oracle for r <= 200.
    int oracle_cases = 0;
    for (; oracle_cases < 500; ++oracle_cases) {
        const unsigned r = std::uniform_int_distribution<unsigned>(2, 200)(rng);
        std::vector<long long> b(2);
        for (auto& x : b) x = std::uniform_int_distribution<long long>(1, r - 1)(rng);
        const DedekindInput in(r, b, std::uniform_int_distribution<long long>(0, r - 1)(rng));
        const double exact = dedekind_sum(in).to_double();
        const double approx = dedekind_sum_float_oracle(in);
        c.expect(std::abs(exact - approx) <= 1e-9 * std::max(1.0, std::abs(exact)), "float oracle " + in.to_string());
    }

    // Field laws and inverses.
    int field_cases = 0;
    for (const unsigned r : {3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 16u}) {
        auto random_element = [&] {
            std::vector<Rational> coeffs(euler_phi(r));
            for (auto& x : coeffs)
                x = Rational(std::uniform_int_distribution<long long>(-9, 9)(rng),
                             std::uniform_int_distribution<long long>(1, 6)(rng));
            return CyclotomicElement(r, coeffs);
        };
        for (int t = 0; t < 20; ++t, ++field_cases) {
            const auto a = random_element(), b = random_element(), e = random_element();
            c.expect(a + b == b + a && a * b == b * a, "commutativity r=" + std::to_string(r));
            c.expect((a * b) * e == a * (b * e), "associativity r=" + std::to_string(r));
            c.expect(a * (b + e) == a * b + a * e, "distributivity r=" + std::to_string(r));
            c.expect(std::abs(oracle::embed(a * b) - oracle::embed(a) * oracle::embed(b)) < 1e-6,
                     "embedding is multiplicative r=" + std::to_string(r));
            if (!a.is_zero()) c.expect(a * inverse(a) == CyclotomicElement::one(r), "inverse r=" + std::to_string(r));
        }
        c.expect(CyclotomicElement::root_power(r, 1) * inverse(CyclotomicElement::root_power(r, 1)) ==
                     CyclotomicElement::one(r),
                 "zeta inverse");
    }

    // DFS vs brute force.
    for (int d = 1; d <= 4; ++d) {
        const auto r = enumerate(d, Mode::inequality_only);
        std::set<std::vector<unsigned>> found;
        for (const auto& cfg : r.configurations) {
            std::vector<unsigned> m(r.allowed_types.size(), 0);
            for (const auto& s : cfg.singularities)
                ++m[static_cast<std::size_t>(std::find(r.allowed_types.begin(), r.allowed_types.end(), s) -
                                             r.allowed_types.begin())];
            found.insert(m);
        }
        c.expect(found.size() == r.configurations.size() && found == oracle::brute_force_configurations(d),
                 "DFS vs brute force d=" + std::to_string(d));
    }

    // Byte-identical output, repeated and parallel.
    for (int d = 1; d <= 4; ++d) {
        const std::string first = to_json(enumerate(d, Mode::with_exclusions)).dump();
        c.expect(first == to_json(enumerate(d, Mode::with_exclusions)).dump(), "repeat d=" + std::to_string(d));
        c.expect(first == to_json(enumerate(d, Mode::with_exclusions, default_exclusion_rules(), 4)).dump(),
                 "parallel d=" + std::to_string(d));
    }
    return c.report(std::to_string(periodicity) + " periodicity, " + std::to_string(oracle_cases) + " oracle, " +
                    std::to_string(field_cases) + " field cases");
}

}  // namespace

int main() {
    const std::vector<std::function<bool()>> criteria{criterion_dedekind, criterion_mu_catalog, criterion_examples,
                                                      criterion_bounds,   criterion_hrr_milnor,  criterion_bubbles,
                                                      criterion_properties};
    int failed = 0;
    for (const auto& run : criteria) {
        try {
            if (!run()) ++failed;
        } catch (const std::exception& e) {
            std::cout << "FAIL (exception: " << e.what() << ")\n";
            ++failed;
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
