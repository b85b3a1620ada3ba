#pragma once

// Finite-field arithmetic through discrete-log tables, multiplicative
// characters and the character sums built from them (Gauss, Jacobi, binomial
// symbols, 3F2), plus Dirichlet characters modulo odd prime powers.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "paley/error.hpp"
#include "paley/integer.hpp"

namespace paley::ff {

using Element = std::uint32_t;
using Complex = std::complex<double>;

inline constexpr std::uint64_t kFieldExistenceCap = 1ULL << 31;
inline constexpr std::uint64_t kFieldTableCap = 1'000'000;

namespace detail {

// Polynomials over F_p, coefficients low -> high.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_rem(Poly a, const Poly& f, std::int64_t p) {
    trim(a);
    Poly g = f;
    trim(g);
    const std::size_t dg = g.size() - 1;
    const std::int64_t lead_inv = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(g.back()), p - 2, p));
    while (a.size() >= g.size()) {
        const std::int64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            a[shift + i] = mod_floor(a[shift + i] - factor * g[i], p);
        }
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(prod), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::int64_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    while (exp) {
        if (exp & 1U) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1U;
    }
    return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_floor(a[i] - b[i], p);
    trim(a);
    return a;
}

/// Exhaustive search for a monic factor of degree 1..deg/2.
inline bool irreducible_by_factor_search(const Poly& f, std::int64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = upow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::int64_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

/// Rabin's test: x^(p^r) = x mod f and gcd(x^(p^(r/d)) - x, f) = 1 for primes d | r.
inline bool irreducible_by_rabin(const Poly& f, std::int64_t p) {
    const unsigned r = static_cast<unsigned>(f.size() - 1);
    const Poly x{0, 1};
    auto frobenius_power = [&](unsigned times) {
        Poly acc = x;
        for (unsigned i = 0; i < times; ++i) acc = poly_powmod(acc, static_cast<std::uint64_t>(p), f, p);
        return acc;
    };
    if (!poly_sub(frobenius_power(r), x, p).empty()) return false;
    for (auto d : prime_factors(r)) {
        Poly h = poly_sub(frobenius_power(r / static_cast<unsigned>(d)), x, p);
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

inline bool is_irreducible(const Poly& f, std::int64_t p) {
    if (f.size() <= 2) return true;
    if (f.size() - 1 <= 4) return irreducible_by_factor_search(f, p);
    return irreducible_by_rabin(f, p);
}

}  // namespace detail

/// Character index j modulo q-1: chi_j(g^a) = exp(2 pi i j a / (q-1)), chi_j(0) = 0.
struct CharIndex {
    std::int64_t value = 0;
};

/// F_{p^r} with exp/log tables. Elements are encoded as integers 0..q-1 whose
/// base-p digits are the coefficients of the polynomial representative.
class FieldTable {
public:
    static FieldTable build(std::uint64_t p, unsigned r, std::optional<std::vector<std::int64_t>> modulus = {}) {
        require(is_prime(p), ErrorKind::NonPrime, std::to_string(p) + " is not prime");
        require(r >= 1, ErrorKind::BadArgument, "extension degree must be at least 1");
        unsigned __int128 q128 = 1;
        for (unsigned i = 0; i < r; ++i) {
            q128 *= p;
            require(q128 <= kFieldExistenceCap, ErrorKind::SizeCap, "field size exceeds 2^31");
        }
        const auto q = static_cast<std::uint64_t>(q128);
        require(q <= kFieldTableCap, ErrorKind::SizeCap,
                "field size " + std::to_string(q) + " exceeds the table cap " + std::to_string(kFieldTableCap));

        const auto ps = static_cast<std::int64_t>(p);
        detail::Poly f;
        if (modulus) {
            f = *modulus;
            require(f.size() == r + 1, ErrorKind::BadArgument, "modulus must have r+1 coefficients (low to high)");
            for (auto& c : f) c = mod_floor(c, ps);
            require(f.back() == 1, ErrorKind::BadArgument, "modulus must be monic");
            require(detail::is_irreducible(f, ps), ErrorKind::ReducibleModulus, "modulus is reducible mod p");
        } else {
            f = smallest_irreducible(ps, r);
        }
        return FieldTable(p, r, q, std::move(f));
    }

    /// Lexicographically smallest monic irreducible of degree r over F_p.
    static detail::Poly smallest_irreducible(std::int64_t p, unsigned r) {
        const std::uint64_t count = upow(static_cast<std::uint64_t>(p), r);
        for (std::uint64_t code = 0; code < count; ++code) {
            detail::Poly f(r + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < r; ++i) {
                f[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
                c /= static_cast<std::uint64_t>(p);
            }
            f[r] = 1;
            if (detail::is_irreducible(f, p)) return f;
        }
        fail(ErrorKind::InvariantViolation, "no irreducible polynomial found");
    }

    std::uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint64_t q() const { return q_; }
    /// Order of the multiplicative group.
    std::uint64_t n() const { return q_ - 1; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    Element generator() const { return exp_[n() > 1 ? 1 : 0]; }

    Element exp(std::uint64_t a) const { return exp_[a % n()]; }
    /// Discrete log of a nonzero element.
    std::uint64_t log(Element x) const { return static_cast<std::uint64_t>(log_[x]); }
    const std::vector<Element>& exp_table() const { return exp_; }

    Element add(Element a, Element b) const {
        if (r_ == 1) return static_cast<Element>((a + b) % p_);
        Element out = 0, place = 1;
        for (unsigned i = 0; i < r_; ++i) {
            out += static_cast<Element>(((a % p_) + (b % p_)) % p_) * place;
            a /= static_cast<Element>(p_);
            b /= static_cast<Element>(p_);
            place *= static_cast<Element>(p_);
        }
        return out;
    }
    Element neg(Element a) const {
        if (r_ == 1) return static_cast<Element>((p_ - a) % p_);
        Element out = 0, place = 1;
        for (unsigned i = 0; i < r_; ++i) {
            out += static_cast<Element>((p_ - a % p_) % p_) * place;
            a /= static_cast<Element>(p_);
            place *= static_cast<Element>(p_);
        }
        return out;
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log(a) + log(b)) % n()];
    }
    Element pow(Element a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint64_t>(static_cast<unsigned __int128>(log(a)) * e % n())];
    }
    Element inv(Element a) const {
        require(a != 0, ErrorKind::BadArgument, "zero has no inverse");
        return exp_[(n() - log(a)) % n()];
    }
    /// Absolute trace to F_p.
    std::uint64_t trace(Element x) const { return trace_[x]; }
    /// log(-1): 0 in characteristic 2, (q-1)/2 otherwise.
    std::uint64_t log_minus_one() const { return p_ == 2 ? 0 : n() / 2; }

    std::uint64_t normalize(CharIndex j) const { return static_cast<std::uint64_t>(mod_floor(j.value, static_cast<std::int64_t>(n()))); }
    std::uint64_t character_order(CharIndex j) const { return n() / std::gcd(normalize(j), n()); }

private:
    FieldTable(std::uint64_t p, unsigned r, std::uint64_t q, detail::Poly f)
        : p_(p), r_(r), q_(q), modulus_(std::move(f)) {
        const auto ps = static_cast<std::int64_t>(p_);
        const std::uint64_t order = q_ - 1;
        const auto factors = prime_factors(order);

        auto to_poly = [&](Element e) {
            detail::Poly a(r_, 0);
            for (unsigned i = 0; i < r_; ++i) {
                a[i] = e % p_;
                e /= static_cast<Element>(p_);
            }
            detail::trim(a);
            return a;
        };
        auto from_poly = [&](const detail::Poly& a) {
            Element e = 0, place = 1;
            for (unsigned i = 0; i < r_; ++i) {
                if (i < a.size()) e += static_cast<Element>(a[i]) * place;
                place *= static_cast<Element>(p_);
            }
            return e;
        };

        // Smallest encoding of multiplicative order q-1.
        Element gen = 0;
        for (Element cand = 1; cand < q_; ++cand) {
            const auto poly = to_poly(cand);
            bool primitive = true;
            for (auto fct : factors) {
                if (detail::poly_powmod(poly, order / fct, modulus_, ps) == detail::Poly{1}) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = cand;
                break;
            }
        }
        require(gen != 0, ErrorKind::InvariantViolation, "no generator found");

        exp_.resize(order);
        log_.assign(q_, -1);
        const auto gpoly = to_poly(gen);
        detail::Poly acc{1};
        for (std::uint64_t a = 0; a < order; ++a) {
            const Element e = from_poly(acc);
            require(log_[e] == -1, ErrorKind::InvariantViolation, "exp table is not a bijection");
            exp_[a] = e;
            log_[e] = static_cast<std::int64_t>(a);
            acc = r_ == 1 ? detail::Poly{acc.empty() ? 0 : acc[0] * gpoly[0] % ps} : detail::poly_mulmod(acc, gpoly, modulus_, ps);
            detail::trim(acc);
        }
        require(acc == detail::Poly{1}, ErrorKind::InvariantViolation, "generator order mismatch");

        trace_.assign(q_, 0);
        for (Element x = 1; x < q_; ++x) {
            Element sum = 0;
            std::uint64_t frob = 1;  // p^i mod (q-1)
            for (unsigned i = 0; i < r_; ++i) {
                sum = add(sum, exp_[log(x) * frob % order]);
                frob = frob * p_ % order;
            }
            require(sum < p_, ErrorKind::InvariantViolation, "trace left the prime field");
            trace_[x] = sum;
        }
    }

    std::uint64_t p_;
    unsigned r_;
    std::uint64_t q_;
    std::vector<std::int64_t> modulus_;
    std::vector<Element> exp_;
    std::vector<std::int64_t> log_;
    std::vector<std::uint64_t> trace_;
};

inline FieldTable build_field(std::uint64_t p, unsigned r, std::optional<std::vector<std::int64_t>> modulus = {}) {
    return FieldTable::build(p, r, std::move(modulus));
}

/// exp(2 pi i k / n) for k = 0..n-1.
inline std::vector<Complex> roots_of_unity(std::uint64_t n) {
    std::vector<Complex> roots(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n);
        roots[k] = Complex(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
    }
    return roots;
}

/// Smallest positive index of a character of exact order k.
inline CharIndex character_of_order(const FieldTable& F, std::uint64_t k) {
    require(k >= 1 && F.n() % k == 0, ErrorKind::OrderUnavailable,
            "no character of order " + std::to_string(k) + " on F_" + std::to_string(F.q()) + " (needs k | q-1)");
    return CharIndex{static_cast<std::int64_t>(F.n() / k)};
}

/// chi_j(-1) as +-1.
inline int character_at_minus_one(const FieldTable& F, CharIndex j) {
    if (F.p() == 2) return 1;
    return (F.normalize(j) % 2 == 0) ? 1 : -1;
}

/// J(chi_j1, chi_j2) = sum_a chi_j1(a) chi_j2(1-a), by direct summation.
inline Complex jacobi_sum(const FieldTable& F, CharIndex j1, CharIndex j2) {
    const auto n = F.n();
    const auto roots = roots_of_unity(n);
    const auto a1 = F.normalize(j1), a2 = F.normalize(j2);
    Complex sum = 0;
    // a = 0 and a = 1 contribute nothing since chi(0) = 0.
    for (Element a = 2; a < F.q(); ++a) {
        const Element b = F.sub(1, a);
        if (b == 0) continue;
        sum += roots[(a1 * F.log(a) + a2 * F.log(b)) % n];
    }
    return sum;
}

/// g(chi_j) = sum_{x != 0} chi_j(x) zeta_p^{Tr x}.
inline Complex gauss_sum(const FieldTable& F, CharIndex j) {
    const auto n = F.n();
    const auto roots = roots_of_unity(n);
    const auto additive = roots_of_unity(F.p());
    const auto a = F.normalize(j);
    Complex sum = 0;
    for (Element x = 1; x < F.q(); ++x) sum += roots[a * F.log(x) % n] * additive[F.trace(x)];
    return sum;
}

enum class BinomConvention {
    /// (top over bot) = top(-1)/q * J(bot, conj(top))
    PaperLiteral,
    /// (top over bot) = bot(-1)/q * J(top, conj(bot))
    Greene,
};

/// Frozen by oracle calibration on K4(Gamma(3,13)) and K4(Gamma(4,17)); both
/// conventions reproduce the oracle there, the literal one is kept.
inline constexpr BinomConvention kCalibratedConvention = BinomConvention::PaperLiteral;

inline std::string_view to_string(BinomConvention c) {
    return c == BinomConvention::PaperLiteral ? "paper-literal" : "greene";
}

inline Complex binom_symbol(const FieldTable& F, CharIndex top, CharIndex bot,
                            BinomConvention conv = kCalibratedConvention) {
    const double q = static_cast<double>(F.q());
    if (conv == BinomConvention::PaperLiteral)
        return static_cast<double>(character_at_minus_one(F, top)) / q * jacobi_sum(F, bot, CharIndex{-top.value});
    return static_cast<double>(character_at_minus_one(F, bot)) / q * jacobi_sum(F, top, CharIndex{-bot.value});
}

/// Exponents (t1,t2,t3; t4,t5) of chi_k in a 3F2 with argument 1.
using Hyp3F2Exponents = std::array<std::int64_t, 5>;

/// Reusable evaluator for Jacobi sums, binomial symbols and 3F2 values on one
/// field. All Gauss sums are precomputed once, O(q^2); each 3F2 is then O(q).
class HypergeometricEvaluator {
public:
    static constexpr std::uint64_t kMaxField = 20'000;

    explicit HypergeometricEvaluator(const FieldTable& F) : F_(F), roots_(roots_of_unity(F.n())) {
        require(F.q() <= kMaxField, ErrorKind::SizeCap,
                "3F2 evaluation is capped at q <= " + std::to_string(kMaxField));
        const auto n = F.n();
        const auto additive = roots_of_unity(F.p());
        // Sequence psi(g^a); gauss[j] = sum_a zeta_n^{j a} psi(g^a).
        std::vector<Complex> psi(n);
        for (std::uint64_t a = 0; a < n; ++a) psi[a] = additive[F.trace(F.exp(a))];
        gauss_.resize(n);
        for (std::uint64_t j = 0; j < n; ++j) {
            Complex s = 0;
            std::uint64_t idx = 0;
            for (std::uint64_t a = 0; a < n; ++a) {
                s += roots_[idx] * psi[a];
                idx += j;
                if (idx >= n) idx -= n;
            }
            gauss_[j] = s;
        }
        one_minus_log_.assign(F.q(), -1);
        for (Element a = 0; a < F.q(); ++a) {
            const Element b = F.sub(1, a);
            if (b != 0) one_minus_log_[a] = static_cast<std::int64_t>(F.log(b));
        }
    }

    const FieldTable& field() const { return F_; }
    Complex gauss(CharIndex j) const { return gauss_[F_.normalize(j)]; }

    Complex jacobi_direct(CharIndex j1, CharIndex j2) const {
        const auto n = F_.n();
        const auto a1 = F_.normalize(j1), a2 = F_.normalize(j2);
        Complex sum = 0;
        for (Element a = 1; a < F_.q(); ++a) {
            if (one_minus_log_[a] < 0) continue;
            sum += roots_[(a1 * F_.log(a) + a2 * static_cast<std::uint64_t>(one_minus_log_[a])) % n];
        }
        return sum;
    }

    /// J = g(chi1) g(chi2) / g(chi1 chi2) when chi1 chi2 is nontrivial, else direct summation.
    Complex jacobi(CharIndex j1, CharIndex j2) const {
        const auto n = F_.n();
        const auto a1 = F_.normalize(j1), a2 = F_.normalize(j2);
        const auto prod = (a1 + a2) % n;
        if (prod == 0) return jacobi_direct(j1, j2);
        return gauss_[a1] * gauss_[a2] / gauss_[prod];
    }

    Complex binom(CharIndex top, CharIndex bot, BinomConvention conv = kCalibratedConvention) const {
        const double q = static_cast<double>(F_.q());
        if (conv == BinomConvention::PaperLiteral)
            return static_cast<double>(character_at_minus_one(F_, top)) / q * jacobi(bot, CharIndex{-top.value});
        return static_cast<double>(character_at_minus_one(F_, bot)) / q * jacobi(top, CharIndex{-bot.value});
    }

    /// (q/(q-1)) sum_chi (A0 chi / chi)(A1 chi / B1 chi)(A2 chi / B2 chi), A_i = chi_k^{t_i}.
    Complex hyp3f2(std::uint64_t k, const Hyp3F2Exponents& t, BinomConvention conv = kCalibratedConvention) const {
        const auto base = character_of_order(F_, k).value;
        const auto n = static_cast<std::int64_t>(F_.n());
        Complex sum = 0;
        for (std::int64_t j = 0; j < n; ++j) {
            auto ch = [&](std::int64_t exponent) { return CharIndex{base * exponent + j}; };
            sum += binom(ch(t[0]), CharIndex{j}, conv) * binom(ch(t[1]), ch(t[3]), conv) * binom(ch(t[2]), ch(t[4]), conv);
        }
        const double q = static_cast<double>(F_.q());
        return q / (q - 1.0) * sum;
    }

private:
    const FieldTable& F_;
    std::vector<Complex> roots_;
    std::vector<Complex> gauss_;
    std::vector<std::int64_t> one_minus_log_;
};

inline Complex hyp3f2(const FieldTable& F, std::uint64_t k, const Hyp3F2Exponents& t,
                      BinomConvention conv = kCalibratedConvention) {
    require(k >= 1 && F.n() % k == 0, ErrorKind::OrderUnavailable,
            "3F2 needs k | q-1, got k=" + std::to_string(k) + ", q=" + std::to_string(F.q()));
    return HypergeometricEvaluator(F).hyp3f2(k, t, conv);
}

/// Euler's criterion: a^((p-1)/gcd(3,p-1)) = 1 (mod p).
inline bool cubic_residue(std::int64_t a, std::uint64_t p) {
    require(is_prime(p), ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    const auto ar = static_cast<std::uint64_t>(mod_floor(a, static_cast<std::int64_t>(p)));
    require(ar != 0, ErrorKind::NotCoprime, std::to_string(a) + " is divisible by " + std::to_string(p));
    const std::uint64_t d = std::gcd<std::uint64_t>(3, p - 1);
    return powmod(ar, (p - 1) / d, p) == 1;
}

/// Units of Z/p^alpha as powers of the smallest generator.
class DirichletTable {
public:
    static constexpr std::uint64_t kCap = 10'000'000;

    DirichletTable(std::uint64_t p, unsigned alpha) : p_(p), alpha_(alpha) {
        require(is_prime(p) && p != 2, ErrorKind::NonPrime, "Dirichlet tables need an odd prime, got " + std::to_string(p));
        require(alpha >= 1, ErrorKind::BadArgument, "alpha must be at least 1");
        unsigned __int128 mod = 1;
        for (unsigned i = 0; i < alpha; ++i) {
            mod *= p;
            require(mod <= kCap, ErrorKind::SizeCap, "p^alpha exceeds the Dirichlet table cap");
        }
        modulus_ = static_cast<std::uint64_t>(mod);
        order_ = modulus_ / p * (p - 1);
        for (std::uint64_t g = 2; g < modulus_; ++g) {
            if (g % p == 0) continue;
            if (multiplicative_order(g, modulus_, order_) == order_) {
                generator_ = g;
                break;
            }
        }
        require(generator_ != 0, ErrorKind::InvariantViolation, "unit group has no generator");
        log_.assign(modulus_, -1);
        std::uint64_t x = 1;
        for (std::uint64_t a = 0; a < order_; ++a) {
            log_[x] = static_cast<std::int64_t>(a);
            x = mulmod(x, generator_, modulus_);
        }
        require(x == 1, ErrorKind::InvariantViolation, "generator order mismatch");
    }

    std::uint64_t p() const { return p_; }
    unsigned alpha() const { return alpha_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t group_order() const { return order_; }
    std::uint64_t generator() const { return generator_; }
    /// -1 for non-units.
    std::int64_t log(std::uint64_t a) const { return log_[a % modulus_]; }

private:
    std::uint64_t p_;
    unsigned alpha_;
    std::uint64_t modulus_ = 0;
    std::uint64_t order_ = 0;
    std::uint64_t generator_ = 0;
    std::vector<std::int64_t> log_;
};

/// J(psi, phi) = sum_{a mod p^alpha} psi(a) phi(1-a), with psi of order ord1 and
/// phi of order ord2 taken as the smallest-index characters of those orders.
inline Complex dirichlet_jacobi(std::uint64_t p, unsigned alpha, std::uint64_t ord1 = 4, std::uint64_t ord2 = 2) {
    require(is_prime(p) && p != 2, ErrorKind::NonPrime, "need an odd prime, got " + std::to_string(p));
    require(ord1 >= 1 && ord2 >= 1 && (p - 1) % ord1 == 0 && (p - 1) % ord2 == 0, ErrorKind::OrderUnavailable,
            "no Dirichlet character of order " + std::to_string(ord1) + " and " + std::to_string(ord2) +
                " modulo " + std::to_string(p) + "^" + std::to_string(alpha) + " (needs the orders to divide p-1)");
    const DirichletTable table(p, alpha);
    const auto N = table.group_order();
    const auto roots = roots_of_unity(N);
    const auto j1 = N / ord1, j2 = N / ord2;
    const auto mod = table.modulus();
    Complex sum = 0;
    for (std::uint64_t a = 0; a < mod; ++a) {
        const auto la = table.log(a);
        const auto lb = table.log((mod + 1 - a) % mod);
        if (la < 0 || lb < 0) continue;
        sum += roots[(j1 * static_cast<std::uint64_t>(la) + j2 * static_cast<std::uint64_t>(lb)) % N];
    }
    return sum;
}

}  // namespace paley::ff
