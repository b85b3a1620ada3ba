#pragma once

// Closed formulas for K3 and K4 of G_R(k), k = 2, 3, 4, over a local ring with
// residue field F_q and |m| = q^beta. Everything is exact integer arithmetic
// except the 3F2 contribution to the K4 brackets for k = 3, 4, which is
// rounded under a 1e-6 contract and then re-verified by exact division.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>

#include "paley/error.hpp"
#include "paley/ff_core.hpp"
#include "paley/integer.hpp"
#include "paley/local_rings.hpp"
#include "paley/quadforms.hpp"

namespace paley::formulas {

inline constexpr double kIntegralityTolerance = 1e-6;

using Value = std::variant<BigInt, double, std::string>;
using Intermediates = std::map<std::string, Value>;

struct FormulaRequest {
    BigInt q;
    unsigned beta = 0;
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t k = 0;
    int ell = 0;
};

struct FormulaResult {
    ExactCount value;
    Intermediates intermediates;
};

struct CliqueReport {
    FormulaRequest request;
    std::string ring;
    std::optional<ExactCount> formula_value;
    std::optional<ExactCount> oracle_value;
    std::optional<bool> match;
    Intermediates intermediates;

    void set_oracle(const ExactCount& v) {
        oracle_value = v;
        if (formula_value) match = *formula_value == v;
    }
};

/// count * m^ell.
inline ExactCount scale_blowup(const ExactCount& count, const BigInt& m, int ell) {
    return count * ipow(m, static_cast<std::uint64_t>(ell));
}

namespace detail {

inline void require_prime_power(const BigInt& q, std::uint64_t p, unsigned r) {
    require(is_prime(p) && r >= 1 && q == ipow(BigInt(p), r), ErrorKind::BadArgument,
            "q=" + q.str() + " is not " + std::to_string(p) + "^" + std::to_string(r));
}

inline void require_k3_hypothesis(const BigInt& q) {
    const bool even = q % 2 == 0;
    const bool ok = even ? (q - 1) % 3 == 0 : (q - 1) % 6 == 0;
    require(ok, ErrorKind::HypothesisViolated,
            "k=3 formulas need 3 | q-1 (q even) or 6 | q-1 (q odd), got q=" + q.str());
}

inline void require_mod(const BigInt& q, int modulus, const std::string& what) {
    require(mod_floor(q, BigInt(modulus)) == 1, ErrorKind::HypothesisViolated,
            what + " needs q = 1 (mod " + std::to_string(modulus) + "), got q=" + q.str());
}

/// Rounds a real contribution after checking it is integral within tolerance.
inline BigInt integral_part(ff::Complex v, const std::string& context, double& residual) {
    require(std::abs(v.imag()) < kIntegralityTolerance, ErrorKind::NonIntegralBracket,
            context + ": imaginary part " + std::to_string(v.imag()) + " exceeds tolerance");
    const double rounded = std::round(v.real());
    residual = std::abs(v.real() - rounded);
    require(residual < kIntegralityTolerance, ErrorKind::NonIntegralBracket,
            context + ": bracket residual " + std::to_string(residual) + " exceeds tolerance");
    return BigInt(static_cast<long long>(rounded));
}

}  // namespace detail

/// K3(G_R(2)) = q^(3beta+1)(q-1)(q-5)/48 for q = 1 mod 4.
inline FormulaResult k3_k2(const BigInt& q, unsigned beta) {
    detail::require_mod(q, 4, "K3 formula for k=2");
    const BigInt num = ipow(q, 3 * beta + 1) * (q - 1) * (q - 5);
    return {exact_div(num, 48, "K3 k=2"), {}};
}

/// K3(G_R(3)) = q^(3beta+1)(q-1)(q+c-8)/162.
inline FormulaResult k3_k3(const BigInt& q, unsigned beta, std::uint64_t p, unsigned r) {
    detail::require_prime_power(q, p, r);
    detail::require_k3_hypothesis(q);
    const auto rep = qf::rep_4q_c2_27d2(q, p);
    const BigInt num = ipow(q, 3 * beta + 1) * (q - 1) * (q + rep.a - 8);
    return {exact_div(num, 162, "K3 k=3"), {{"c", rep.a}, {"d", rep.b}}};
}

/// K3(G_R(4)) = q^(3beta+1)(q-1)(q-6e-11)/(2^7 3) for q = 1 mod 8.
inline FormulaResult k3_k4(const BigInt& q, unsigned beta, std::uint64_t p, unsigned r) {
    detail::require_prime_power(q, p, r);
    detail::require_mod(q, 8, "K3 formula for k=4");
    const auto rep = qf::rep_x2_4y2(q, p, qf::X2Mode::ENormalized);
    const BigInt num = ipow(q, 3 * beta + 1) * (q - 1) * (q - 6 * rep.a - 11);
    return {exact_div(num, 384, "K3 k=4"), {{"e", rep.a}, {"f", rep.b}}};
}

/// K4(G_R(2)) = q^(4beta+1)(q-1)((q-9)^2-16y^2)/(2^9 3) for q = 1 mod 4.
inline FormulaResult k4_k2(const BigInt& q, unsigned beta, std::uint64_t p, unsigned r) {
    detail::require_prime_power(q, p, r);
    detail::require_mod(q, 4, "K4 formula for k=2");
    const auto rep = qf::rep_x2_4y2(q, p, qf::X2Mode::CoprimeOnly);
    const BigInt num = ipow(q, 4 * beta + 1) * (q - 1) * ((q - 9) * (q - 9) - 16 * rep.b * rep.b);
    return {exact_div(num, 1536, "K4 k=2"), {{"x", rep.a}, {"y", rep.b}}};
}

inline void record_hyp(Intermediates& out, const std::string& name, ff::Complex v) {
    out[name + "_re"] = v.real();
    out[name + "_im"] = v.imag();
}

/// K4(G_R(3)) = q^(4beta+1)(q-1)/(2^3 3^7) [q^2+5q(c-11)+10c^2-85c+316 + 12q^2 3F2(chi3,chi3,chi3bar; eps,eps)].
inline FormulaResult k4_k3(std::uint64_t q, unsigned beta, std::uint64_t p, unsigned r,
                           ff::BinomConvention conv = ff::kCalibratedConvention) {
    const BigInt Q = q;
    detail::require_prime_power(Q, p, r);
    detail::require_k3_hypothesis(Q);
    const auto rep = qf::rep_4q_c2_27d2(Q, p);
    const BigInt& c = rep.a;

    const auto F = ff::build_field(p, r);
    const ff::HypergeometricEvaluator hyp(F);
    const auto h = hyp.hyp3f2(3, {1, 1, 2, 0, 0}, conv);
    const double qd = static_cast<double>(q);
    double residual = 0;
    const BigInt hyp_part = detail::integral_part(12.0 * qd * qd * h, "K4 k=3 bracket", residual);
    const BigInt bracket = Q * Q + 5 * Q * (c - 11) + 10 * c * c - 85 * c + 316 + hyp_part;
    const BigInt num = ipow(Q, 4 * beta + 1) * (Q - 1) * bracket;

    FormulaResult out{exact_div(num, 8 * 2187, "K4 k=3"), {{"c", c}, {"d", rep.b}}};
    record_hyp(out.intermediates, "hyp3f2_chi3_chi3_chi3bar", h);
    out.intermediates["bracket"] = bracket;
    out.intermediates["bracket_residual"] = residual;
    out.intermediates["binom_convention"] = std::string(ff::to_string(conv));
    return out;
}

/// K4(G_R(4)) = q^(4beta+1)(q-1)/(2^15 3) [q^2-2q(15x+101)+304x^2+(930-40u)x+801+120u^2
///              + 12q^2 3F2(chi4,chi4,chi4bar; eps,eps) + 30q^2 3F2(chi4,phi,phi; eps,eps)],
/// with x the e-normalized solution of q = x^2+4y^2 and u from q = u^2+2v^2.
inline FormulaResult k4_k4(std::uint64_t q, unsigned beta, std::uint64_t p, unsigned r,
                           ff::BinomConvention conv = ff::kCalibratedConvention) {
    const BigInt Q = q;
    detail::require_prime_power(Q, p, r);
    detail::require_mod(Q, 8, "K4 formula for k=4");
    const auto erep = qf::rep_x2_4y2(Q, p, qf::X2Mode::ENormalized);
    const auto urep = qf::rep_u2_2v2(Q, p);
    const BigInt& x = erep.a;
    const BigInt& u = urep.a;

    const auto F = ff::build_field(p, r);
    const ff::HypergeometricEvaluator hyp(F);
    const auto h1 = hyp.hyp3f2(4, {1, 1, 3, 0, 0}, conv);
    const auto h2 = hyp.hyp3f2(4, {1, 2, 2, 0, 0}, conv);
    const double qd = static_cast<double>(q);
    double residual = 0;
    const BigInt hyp_part = detail::integral_part(12.0 * qd * qd * h1 + 30.0 * qd * qd * h2, "K4 k=4 bracket", residual);
    const BigInt bracket = Q * Q - 2 * Q * (15 * x + 101) + 304 * x * x + (930 - 40 * u) * x + 801 + 120 * u * u + hyp_part;
    const BigInt num = ipow(Q, 4 * beta + 1) * (Q - 1) * bracket;

    FormulaResult out{exact_div(num, BigInt(32768) * 3, "K4 k=4"),
                      {{"x", x}, {"y", erep.b}, {"u", u}, {"v", urep.b}}};
    record_hyp(out.intermediates, "hyp3f2_chi4_chi4_chi4bar", h1);
    record_hyp(out.intermediates, "hyp3f2_chi4_phi_phi", h2);
    out.intermediates["bracket"] = bracket;
    out.intermediates["bracket_residual"] = residual;
    out.intermediates["binom_convention"] = std::string(ff::to_string(conv));
    return out;
}

/// K3(G_{Z/p^alpha}(2)) = p^(3alpha-2)(p-1)(p-5)/48.
inline ExactCount k3_zpalpha(std::uint64_t p, unsigned alpha) {
    require(is_prime(p) && p % 4 == 1, ErrorKind::HypothesisViolated,
            "Z/p^alpha K3 formula needs a prime p = 1 (mod 4), got " + std::to_string(p));
    require(alpha >= 1, ErrorKind::BadArgument, "alpha must be at least 1");
    const BigInt P = p;
    return exact_div(ipow(P, 3 * alpha - 2) * (P - 1) * (P - 5), 48, "K3 Z/p^alpha");
}

/// K4(G_{Z/p^alpha}(2)) = p^(4alpha-3)(p-1)((p-9)^2-16y^2)/(2^9 3).
inline ExactCount k4_zpalpha(std::uint64_t p, unsigned alpha) {
    require(is_prime(p) && p % 4 == 1, ErrorKind::HypothesisViolated,
            "Z/p^alpha K4 formula needs a prime p = 1 (mod 4), got " + std::to_string(p));
    require(alpha >= 1, ErrorKind::BadArgument, "alpha must be at least 1");
    const BigInt P = p;
    const auto rep = qf::rep_x2_4y2(P, p, qf::X2Mode::CoprimeOnly);
    return exact_div(ipow(P, 4 * alpha - 3) * (P - 1) * ((P - 9) * (P - 9) - 16 * rep.b * rep.b), 1536, "K4 Z/p^alpha");
}

struct JacobiIdentityReport {
    std::uint64_t p = 0;
    unsigned alpha = 0;
    ff::Complex jacobi;
    ff::Complex lhs;      // J^2 + conj(J)^2
    BigInt rhs;           // 2 p^(2alpha-2) (p - 8 y^2)
    BigInt y;
    double residual = 0;  // |lhs - rhs|
    bool agrees = false;
};

/// J(psi,phi)^2 + conj(J(psi,phi))^2 against 2 p^(2alpha-2)(p-8y^2).
inline JacobiIdentityReport jacobi_identity_check(std::uint64_t p, unsigned alpha) {
    require(is_prime(p) && p % 4 == 1, ErrorKind::HypothesisViolated,
            "the Jacobi identity needs a prime p = 1 (mod 4), got " + std::to_string(p));
    JacobiIdentityReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.jacobi = ff::dirichlet_jacobi(p, alpha, 4, 2);
    rep.lhs = rep.jacobi * rep.jacobi + std::conj(rep.jacobi) * std::conj(rep.jacobi);
    rep.y = qf::rep_x2_4y2(BigInt(p), p, qf::X2Mode::CoprimeOnly).b;
    rep.rhs = 2 * ipow(BigInt(p), 2 * alpha - 2) * (BigInt(p) - 8 * rep.y * rep.y);
    const double rhs_d = static_cast<double>(rep.rhs);
    rep.residual = std::abs(rep.lhs - ff::Complex(rhs_d, 0.0));
    rep.agrees = rep.residual < kIntegralityTolerance && BigInt(static_cast<long long>(std::llround(rep.lhs.real()))) == rep.rhs;
    return rep;
}

/// Dispatches (k, ell) to the matching closed formula for the ring's (q, beta).
inline CliqueReport formula_report(const LocalRing& R, std::uint64_t k, int ell,
                                   ff::BinomConvention conv = ff::kCalibratedConvention) {
    CliqueReport report;
    report.ring = R.descriptor().str();
    report.request = {BigInt(R.q()), R.beta(), R.p(), R.r(), k, ell};
    require(std::gcd(k, R.size()) == 1, ErrorKind::NotCoprime,
            "k=" + std::to_string(k) + " is not coprime to |R|=" + std::to_string(R.size()));
    const BigInt q = R.q();
    const unsigned beta = R.beta();
    FormulaResult res;
    if (ell == 3 && k == 2) res = k3_k2(q, beta);
    else if (ell == 3 && k == 3) res = k3_k3(q, beta, R.p(), R.r());
    else if (ell == 3 && k == 4) res = k3_k4(q, beta, R.p(), R.r());
    else if (ell == 4 && k == 2) res = k4_k2(q, beta, R.p(), R.r());
    else if (ell == 4 && k == 3) res = k4_k3(R.q(), beta, R.p(), R.r(), conv);
    else if (ell == 4 && k == 4) res = k4_k4(R.q(), beta, R.p(), R.r(), conv);
    else
        fail(ErrorKind::HypothesisViolated,
             "closed formulas cover k in {2,3,4} and ell in {3,4}, got k=" + std::to_string(k) + ", ell=" + std::to_string(ell));
    report.formula_value = res.value;
    report.intermediates = std::move(res.intermediates);
    report.intermediates["q"] = BigInt(R.q());
    report.intermediates["beta"] = BigInt(beta);
    report.intermediates["m"] = BigInt(R.m());
    return report;
}

}  // namespace paley::formulas
