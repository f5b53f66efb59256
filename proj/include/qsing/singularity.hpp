#pragma once

/**
 * @file singularity.hpp
 * @brief Surface quotient singularity types and their tabulated invariants.
 *
 * Notation follows the usual conventions: "A3", "D4", "E8" for du Val
 * singularities and "1/r(b1,b2)" for the cyclic quotient of C^2 by
 * (z1, z2) -> (zeta^b1 z1, zeta^b2 z2).
 *
 * Correction terms mu are the local contributions to orbifold
 * Hirzebruch-Riemann-Roch for the anticanonical bundle K^-1 and for K^2.
 * Only values with a closed form are produced; anything else raises a
 * DomainError rather than guessing.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qsing/dedekind.hpp"
#include "qsing/errors.hpp"
#include "qsing/rational.hpp"

namespace qsing {

enum class AdeFamily { A, D, E };

/// 1/r(b1,b2); weights reduced mod r and sorted ascending.
struct CyclicQuotient {
    unsigned order;
    unsigned b1;
    unsigned b2;
    friend auto operator<=>(const CyclicQuotient&, const CyclicQuotient&) = default;
};

struct Ade {
    AdeFamily family;
    unsigned index;
    friend auto operator<=>(const Ade&, const Ade&) = default;
};

class SingularityType {
public:
    static SingularityType cyclic(unsigned r, long long b1, long long b2) {
        if (r < 2) throw DomainError("cyclic quotient order must be at least 2, got " + std::to_string(r));
        const auto reduce = [r](long long b) {
            const long long rr = r;
            return static_cast<unsigned>(((b % rr) + rr) % rr);
        };
        unsigned w1 = reduce(b1);
        unsigned w2 = reduce(b2);
        if (std::gcd(w1, r) != 1 || std::gcd(w2, r) != 1)
            throw DomainError("1/" + std::to_string(r) + "(" + std::to_string(b1) + "," + std::to_string(b2) +
                              ") is not an isolated quotient singularity: weights must be coprime to the order");
        if (w1 > w2) std::swap(w1, w2);
        return SingularityType(CyclicQuotient{r, w1, w2});
    }

    static SingularityType ade(AdeFamily family, unsigned k) {
        switch (family) {
            case AdeFamily::A:
                if (k < 1) throw DomainError("A_k requires k >= 1");
                break;
            case AdeFamily::D:
                if (k < 4) throw DomainError("D_k requires k >= 4");
                break;
            case AdeFamily::E:
                if (k < 6 || k > 8) throw DomainError("E_k requires k in {6,7,8}");
                break;
        }
        return SingularityType(Ade{family, k});
    }

    static SingularityType A(unsigned k) { return ade(AdeFamily::A, k); }
    static SingularityType D(unsigned k) { return ade(AdeFamily::D, k); }
    static SingularityType E(unsigned k) { return ade(AdeFamily::E, k); }

    /// Parses one type token: "A3", "D4", "E7", "1/8(1,3)". Whitespace is ignored.
    static SingularityType parse(std::string_view text);

    bool is_cyclic() const noexcept { return std::holds_alternative<CyclicQuotient>(v_); }
    bool is_ade() const noexcept { return std::holds_alternative<Ade>(v_); }
    const CyclicQuotient& as_cyclic() const { return std::get<CyclicQuotient>(v_); }
    const Ade& as_ade() const { return std::get<Ade>(v_); }

    std::string to_string() const {
        if (is_cyclic()) {
            const auto& c = as_cyclic();
            return "1/" + std::to_string(c.order) + "(" + std::to_string(c.b1) + "," + std::to_string(c.b2) + ")";
        }
        const auto& a = as_ade();
        const char letter = a.family == AdeFamily::A ? 'A' : a.family == AdeFamily::D ? 'D' : 'E';
        return std::string(1, letter) + std::to_string(a.index);
    }

    /// Catalog order: A by index, then D, then E, then cyclic quotients by (r, b1, b2).
    friend auto operator<=>(const SingularityType& a, const SingularityType& b) {
        if (a.v_.index() != b.v_.index()) return b.v_.index() <=> a.v_.index();
        if (a.is_ade()) return a.as_ade() <=> b.as_ade();
        return a.as_cyclic() <=> b.as_cyclic();
    }
    friend bool operator==(const SingularityType&, const SingularityType&) = default;

private:
    explicit SingularityType(std::variant<CyclicQuotient, Ade> v) : v_(v) {}

    // Index 0 is cyclic so that reversing the variant index puts ADE types first.
    std::variant<CyclicQuotient, Ade> v_;
};

/// Order n_p of the local fundamental group.
inline unsigned group_order(const SingularityType& s) {
    if (s.is_cyclic()) return s.as_cyclic().order;
    const auto& a = s.as_ade();
    switch (a.family) {
        case AdeFamily::A: return a.index + 1;
        case AdeFamily::D: return 4 * (a.index - 2);  // binary dihedral
        case AdeFamily::E: return a.index == 6 ? 24 : a.index == 7 ? 48 : 120;
    }
    return 0;
}

/// Index i with mu(K^-1) = sigma_i: the eigensheaf of K^-1 at 1/r(b1,b2) is
/// of type k = -(b1 + b2), and sigma is periodic in i with period r.
inline unsigned anticanonical_eigensheaf_index(const CyclicQuotient& c) {
    const long long r = c.order;
    const long long k = -static_cast<long long>(c.b1 + c.b2);
    return static_cast<unsigned>((r + ((k % r) + r) % r) % r);
}

/// mu_p(K^-1).
inline Rational mu_anticanonical(const SingularityType& s) {
    if (s.is_cyclic()) {
        const auto& c = s.as_cyclic();
        return dedekind_sum(DedekindInput(c.order, {c.b1, c.b2}, anticanonical_eigensheaf_index(c)));
    }
    const auto& a = s.as_ade();
    if (a.family == AdeFamily::A) {
        const long long n = a.index + 1;
        return (Rational(n) - Rational(1, n)) / Rational(12);
    }
    if (a.family == AdeFamily::D && a.index == 4) return Rational(39, 96);
    throw DomainError("anticanonical mu not tabulated in source for " + s.to_string());
}

/// mu_p(K^2), du Val types only.
inline Rational mu_canonical_square(const SingularityType& s) {
    if (s.is_cyclic()) throw DomainError("K^2 correction not given in source for non-canonical type " + s.to_string());
    const auto& a = s.as_ade();
    const long long n = a.index;
    Rational twelve_mu;
    switch (a.family) {
        case AdeFamily::A: twelve_mu = Rational(n + 1) - Rational(1, n + 1); break;
        case AdeFamily::D: twelve_mu = Rational(n + 1) - Rational(1, 4 * (n - 2)); break;
        case AdeFamily::E:
            twelve_mu = n == 6 ? Rational(7) - Rational(1, 24)
                      : n == 7 ? Rational(8) - Rational(1, 48)
                               : Rational(9) - Rational(1, 120);
            break;
    }
    return twelve_mu / Rational(12);
}

/// Milnor number from the per-point relation nu_p = 12 mu_p(K^-1) - (1 - 1/n_p).
inline Rational milnor_number(const SingularityType& s) {
    const long long n = group_order(s);
    return Rational(12) * mu_anticanonical(s) - (Rational(1) - Rational(1, n));
}

/// 1 - 1/n_p, the local defect between topological and orbifold Euler numbers.
inline Rational orbifold_defect(const SingularityType& s) {
    return Rational(1) - Rational(1, static_cast<long long>(group_order(s)));
}

struct SingularityAttributes {
    unsigned group_order;
    Rational milnor;
    Rational mu_anticanonical;
    std::optional<Rational> mu_canonical_square;
};

inline SingularityAttributes attributes(const SingularityType& s) {
    SingularityAttributes out{group_order(s), milnor_number(s), mu_anticanonical(s), std::nullopt};
    if (s.is_ade()) out.mu_canonical_square = mu_canonical_square(s);
    return out;
}

// ---------------------------------------------------------------------------
// Text notation

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

/// Copies `text` without whitespace, remembering each kept byte's original offset.
inline std::string squeeze(std::string_view text, std::size_t base, std::vector<std::size_t>& offsets) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (is_space(text[i])) continue;
        out.push_back(text[i]);
        offsets.push_back(base + i);
    }
    return out;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline long long parse_count(std::string_view s, const std::string& token, std::size_t offset) {
    if (!all_digits(s) || s.size() > 9) throw ParseError("expected a non-negative integer", token, offset);
    return std::stoll(std::string(s));
}

inline long long parse_signed(std::string_view s, const std::string& token, std::size_t offset) {
    if (!s.empty() && s.front() == '-') return -parse_count(s.substr(1), token, offset);
    return parse_count(s, token, offset);
}

/// Parses a whitespace-free type token. `offset` is the token's position in
/// the caller's input, used for error messages.
inline SingularityType parse_type_token(const std::string& tok, std::size_t offset) {
    if (tok.empty()) throw ParseError("empty singularity type", tok, offset);
    const char head = tok.front();
    try {
        if (head == 'A' || head == 'D' || head == 'E') {
            const auto k = parse_count(std::string_view(tok).substr(1), tok, offset);
            const AdeFamily f = head == 'A' ? AdeFamily::A : head == 'D' ? AdeFamily::D : AdeFamily::E;
            return SingularityType::ade(f, static_cast<unsigned>(k));
        }
        // 1/r(b1,b2)
        const auto open = tok.find('(');
        const auto comma = tok.find(',');
        if (tok.size() < 8 || tok.compare(0, 2, "1/") != 0 || open == std::string::npos ||
            comma == std::string::npos || comma < open || tok.back() != ')')
            throw ParseError("unrecognized singularity type", tok, offset);
        const std::string_view sv(tok);
        const auto r = parse_count(sv.substr(2, open - 2), tok, offset);
        const auto b1 = parse_signed(sv.substr(open + 1, comma - open - 1), tok, offset);
        const auto b2 = parse_signed(sv.substr(comma + 1, tok.size() - comma - 2), tok, offset);
        return SingularityType::cyclic(static_cast<unsigned>(r), b1, b2);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid singularity type (") + e.what() + ")", tok, offset);
    }
}

}  // namespace detail

inline SingularityType SingularityType::parse(std::string_view text) {
    std::vector<std::size_t> offsets;
    const std::string tok = detail::squeeze(text, 0, offsets);
    return detail::parse_type_token(tok, offsets.empty() ? 0 : offsets.front());
}

/**
 * Parses a comma-separated singularity list such as "A8, 2x 1/9(1,2)".
 *
 * Each item is "[Nx ]TYPE"; commas inside parentheses belong to the type.
 * Whitespace is insignificant. An empty or all-blank string is the empty list.
 * The result is sorted in catalog order.
 */
inline std::vector<SingularityType> parse_singularity_list(std::string_view text) {
    std::vector<SingularityType> out;
    std::size_t start = 0;
    int depth = 0;
    const auto flush = [&](std::size_t end) {
        std::vector<std::size_t> offsets;
        const std::string item = detail::squeeze(text.substr(start, end - start), start, offsets);
        if (item.empty()) {
            bool whole_blank = true;
            for (char c : text)
                if (!detail::is_space(c)) whole_blank = false;
            if (whole_blank) return;
            throw ParseError("empty list item", std::string(text.substr(start, end - start)), start);
        }
        long long count = 1;
        std::size_t type_begin = 0;
        if (const auto x = item.find('x'); x != std::string::npos && x > 0 && detail::all_digits(item.substr(0, x))) {
            count = detail::parse_count(item.substr(0, x), item, offsets.front());
            if (count < 1) throw ParseError("multiplicity must be positive", item, offsets.front());
            type_begin = x + 1;
        }
        if (type_begin >= item.size()) throw ParseError("missing singularity type", item, offsets.front());
        const auto type = detail::parse_type_token(item.substr(type_begin), offsets[type_begin]);
        out.insert(out.end(), static_cast<std::size_t>(count), type);
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (--depth < 0) throw ParseError("unbalanced ')'", std::string(1, c), i);
        } else if (c == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '('", std::string(text.substr(start)), start);
    flush(text.size());
    std::sort(out.begin(), out.end());
    return out;
}

/// Inverse of parse_singularity_list: "2x A1, 1/4(1,1)". Input need not be sorted.
inline std::string format_singularity_list(std::vector<SingularityType> sings) {
    std::sort(sings.begin(), sings.end());
    std::string out;
    for (std::size_t i = 0; i < sings.size();) {
        std::size_t j = i;
        while (j < sings.size() && sings[j] == sings[i]) ++j;
        if (!out.empty()) out += ", ";
        if (j - i > 1) out += std::to_string(j - i) + "x ";
        out += sings[i].to_string();
        i = j;
    }
    return out;
}

}  // namespace qsing
