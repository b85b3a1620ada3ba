#pragma once

// Normalized representations by the binary quadratic forms that parameterize
// the clique formulas: q = x^2+4y^2, 4q = c^2+27d^2, p^t = x^2+27y^2 and
// q = u^2+2v^2. Searches are exhaustive over the second coordinate.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paley/error.hpp"
#include "paley/ff_core.hpp"
#include "paley/integer.hpp"

namespace paley::qf {

enum class Form {
    X2_4Y2,    // a^2 + 4 b^2 = target
    C2_27D2,   // a^2 + 27 b^2 = 4q (target holds 4q)
    X2_27Y2,   // a^2 + 27 b^2 = target
    U2_2V2,    // a^2 + 2 b^2 = target
};

inline std::string_view to_string(Form f) {
    switch (f) {
        case Form::X2_4Y2: return "x^2+4y^2";
        case Form::C2_27D2: return "4q=c^2+27d^2";
        case Form::X2_27Y2: return "x^2+27y^2";
        case Form::U2_2V2: return "u^2+2v^2";
    }
    return "?";
}

inline std::int64_t coefficient(Form f) {
    switch (f) {
        case Form::X2_4Y2: return 4;
        case Form::C2_27D2:
        case Form::X2_27Y2: return 27;
        case Form::U2_2V2: return 2;
    }
    return 0;
}

struct QFRep {
    Form form;
    BigInt a;
    BigInt b;
    BigInt target;
    std::vector<std::string> norm_tags;

    bool satisfies_equation() const { return a * a + coefficient(form) * b * b == target; }
};

enum class X2Mode {
    CoprimeOnly,    // a > 0, p does not divide a when p = 1 mod 4
    ENormalized,    // additionally a = 1 mod 4
};

namespace detail {

/// All (a, b) with a >= 0, b >= 0 and a^2 + D b^2 = target, ordered by b.
inline std::vector<std::pair<BigInt, BigInt>> solutions(const BigInt& target, std::int64_t D) {
    std::vector<std::pair<BigInt, BigInt>> out;
    for (BigInt b = 0; D * b * b <= target; ++b) {
        if (auto a = exact_sqrt(target - D * b * b)) out.emplace_back(*a, b);
    }
    return out;
}

inline bool divides(std::uint64_t p, const BigInt& a) { return a % p == 0; }

}  // namespace detail

/// q = a^2 + 4 b^2 with p | a excluded when p = 1 mod 4. Smallest b wins.
inline QFRep rep_x2_4y2(const BigInt& q, std::uint64_t p, X2Mode mode) {
    require(mod_floor(q, BigInt(4)) == 1, ErrorKind::NoRepresentation,
            "x^2+4y^2 representation needs q = 1 (mod 4), got q=" + q.str());
    const bool coprime = p % 4 == 1;
    for (auto& [a, b] : detail::solutions(q, 4)) {
        if (coprime && detail::divides(p, a)) continue;
        QFRep rep{Form::X2_4Y2, a, b, q, {}};
        if (coprime) rep.norm_tags.push_back("p∤a");
        if (mode == X2Mode::ENormalized) {
            if (mod_floor(rep.a, BigInt(4)) != 1) rep.a = -rep.a;
            rep.norm_tags.push_back("a≡1 mod 4");
        }
        return rep;
    }
    fail(ErrorKind::NoRepresentation, "no admissible representation " + q.str() + " = x^2+4y^2");
}

/// Every admissible (a, b) for the x^2+4y^2 problem, with sign conventions applied.
inline std::vector<QFRep> all_reps_x2_4y2(const BigInt& q, std::uint64_t p, X2Mode mode) {
    std::vector<QFRep> out;
    const bool coprime = p % 4 == 1;
    for (auto& [a, b] : detail::solutions(q, 4)) {
        if (coprime && detail::divides(p, a)) continue;
        QFRep rep{Form::X2_4Y2, a, b, q, {}};
        if (mode == X2Mode::ENormalized && mod_floor(rep.a, BigInt(4)) != 1) rep.a = -rep.a;
        out.push_back(rep);
    }
    return out;
}

/// 4q = c^2 + 27 d^2 with c = 1 mod 3 and p not dividing c when p = 1 mod 3;
/// c = -2(-p)^(r/2), d = 0 when p = 2 mod 3 (r must be even).
inline QFRep rep_4q_c2_27d2(const BigInt& q, std::uint64_t p) {
    require(is_prime(p), ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    unsigned r = 0;
    BigInt rest = q;
    while (rest > 1 && rest % p == 0) {
        rest /= p;
        ++r;
    }
    require(rest == 1 && r >= 1, ErrorKind::BadArgument, q.str() + " is not a power of " + std::to_string(p));

    if (p % 3 == 2) {
        require(r % 2 == 0, ErrorKind::OddExtensionForInertPrime,
                "p=" + std::to_string(p) + " = 2 (mod 3) needs an even exponent r, got r=" + std::to_string(r));
        BigInt c = -2 * ipow(BigInt(-static_cast<std::int64_t>(p)), r / 2);
        auto d = exact_sqrt((4 * q - c * c) / 27);
        require(d.has_value() && 4 * q == c * c + 27 * *d * *d, ErrorKind::InvariantViolation, "inert-prime c does not fit 4q");
        return QFRep{Form::C2_27D2, c, *d, 4 * q, {"c=-2(-p)^(r/2)"}};
    }
    require(p % 3 == 1, ErrorKind::NoRepresentation,
            "4q=c^2+27d^2 needs 3 | q-1, got q=" + q.str());
    for (auto& [a, b] : detail::solutions(4 * q, 27)) {
        if (detail::divides(p, a) || a % 3 == 0) continue;
        BigInt c = mod_floor(a, BigInt(3)) == 1 ? a : BigInt(-a);
        return QFRep{Form::C2_27D2, c, b, 4 * q, {"c≡1 mod 3", "p∤c"}};
    }
    fail(ErrorKind::NoRepresentation, "no admissible representation 4*" + q.str() + " = c^2+27d^2");
}

/// N = a^2 + 27 b^2 with gcd(a, p) = 1 and a = 1 mod 3. Failure is meaningful
/// (used as the minimality probe for tower exponents).
inline QFRep rep_x2_27y2(const BigInt& N, std::uint64_t p) {
    for (auto& [a, b] : detail::solutions(N, 27)) {
        if (detail::divides(p, a) || a % 3 == 0) continue;
        BigInt x = mod_floor(a, BigInt(3)) == 1 ? a : BigInt(-a);
        return QFRep{Form::X2_27Y2, x, b, N, {"gcd(a,p)=1", "a≡1 mod 3"}};
    }
    fail(ErrorKind::NoRepresentation, N.str() + " has no coprime representation x^2+27y^2");
}

/// q = u^2 + 2 v^2 with u = 3 mod 4, p not dividing u when p = 1, 3 mod 8.
inline QFRep rep_u2_2v2(const BigInt& q, std::uint64_t p) {
    require(mod_floor(q, BigInt(8)) == 1, ErrorKind::NoRepresentation,
            "u^2+2v^2 representation needs q = 1 (mod 8), got q=" + q.str());
    const bool coprime = p % 8 == 1 || p % 8 == 3;
    for (auto& [a, b] : detail::solutions(q, 2)) {
        if (coprime && detail::divides(p, a)) continue;
        BigInt u = mod_floor(a, BigInt(4)) == 3 ? a : BigInt(-a);
        QFRep rep{Form::U2_2V2, u, b, q, {"u≡3 mod 4"}};
        if (coprime) rep.norm_tags.push_back("p∤u");
        return rep;
    }
    fail(ErrorKind::NoRepresentation, "no admissible representation " + q.str() + " = u^2+2v^2");
}

/// (p = x^2+27y^2 solvable, 2 is a cubic residue mod p); the two agree for p = 1 mod 3.
inline std::pair<bool, bool> gauss_euler_equivalence(std::uint64_t p) {
    require(is_prime(p) && p % 3 == 1, ErrorKind::HypothesisViolated,
            "Gauss's criterion needs a prime p = 1 (mod 3), got " + std::to_string(p));
    bool representable = true;
    try {
        rep_x2_27y2(BigInt(p), p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoRepresentation) throw;
        representable = false;
    }
    return {representable, ff::cubic_residue(2, p)};
}

}  // namespace paley::qf
