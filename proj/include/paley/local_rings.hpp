#pragma once

// Finite commutative local rings (R, m) covered by the clique formulas:
// F_q, Z/p^alpha, Galois rings GR(p^alpha, r) and F_q[t]/(t^n). Elements are
// encoded densely as 0..|R|-1 and all arithmetic is computed on the fly.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "paley/error.hpp"
#include "paley/ff_core.hpp"
#include "paley/integer.hpp"

namespace paley {

using RingElement = std::uint32_t;

inline constexpr std::uint64_t kRingSizeCap = 1'000'000;

enum class RingKind { Field, IntegersMod, GaloisRing, TruncatedPoly };

struct RingDescriptor {
    RingKind kind = RingKind::Field;
    std::uint64_t p = 2;
    unsigned r = 1;      // residue-field degree
    unsigned alpha = 1;  // characteristic exponent (zpk, gr)
    unsigned n = 1;      // truncation length (fqt)

    /// Parses `fq:p,r`, `zpk:p,alpha`, `gr:p,alpha,r` or `fqt:p,r,n`.
    static RingDescriptor parse(std::string_view text) {
        const auto colon = text.find(':');
        require(colon != std::string_view::npos, ErrorKind::BadDescriptor,
                "ring descriptor '" + std::string(text) + "' lacks a ':'");
        const std::string_view kind = text.substr(0, colon);
        std::vector<std::uint64_t> args;
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            require(ec == std::errc{} && ptr == tok.data() + tok.size() && !tok.empty(), ErrorKind::BadDescriptor,
                    "bad integer '" + std::string(tok) + "' in ring descriptor '" + std::string(text) + "'");
            args.push_back(v);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        auto expect = [&](std::size_t count) {
            require(args.size() == count, ErrorKind::BadDescriptor,
                    "ring descriptor '" + std::string(text) + "' expects " + std::to_string(count) + " parameters");
        };
        RingDescriptor d;
        if (kind == "fq") {
            expect(2);
            d = {RingKind::Field, args[0], static_cast<unsigned>(args[1]), 1, 1};
        } else if (kind == "zpk") {
            expect(2);
            d = {RingKind::IntegersMod, args[0], 1, static_cast<unsigned>(args[1]), 1};
        } else if (kind == "gr") {
            expect(3);
            d = {RingKind::GaloisRing, args[0], static_cast<unsigned>(args[2]), static_cast<unsigned>(args[1]), 1};
        } else if (kind == "fqt") {
            expect(3);
            d = {RingKind::TruncatedPoly, args[0], static_cast<unsigned>(args[1]), 1, static_cast<unsigned>(args[2])};
        } else {
            fail(ErrorKind::BadDescriptor, "unknown ring kind '" + std::string(kind) + "'");
        }
        require(is_prime(d.p), ErrorKind::BadDescriptor, std::to_string(d.p) + " is not prime");
        require(d.r >= 1 && d.alpha >= 1 && d.n >= 1, ErrorKind::BadDescriptor, "ring parameters must be positive");
        return d;
    }

    std::string str() const {
        const auto P = std::to_string(p);
        switch (kind) {
            case RingKind::Field: return "fq:" + P + "," + std::to_string(r);
            case RingKind::IntegersMod: return "zpk:" + P + "," + std::to_string(alpha);
            case RingKind::GaloisRing: return "gr:" + P + "," + std::to_string(alpha) + "," + std::to_string(r);
            case RingKind::TruncatedPoly: return "fqt:" + P + "," + std::to_string(r) + "," + std::to_string(n);
        }
        return "?";
    }
};

class LocalRing {
public:
    static LocalRing build(const RingDescriptor& d) { return LocalRing(d); }
    static LocalRing build(std::string_view descriptor) { return LocalRing(RingDescriptor::parse(descriptor)); }

    const RingDescriptor& descriptor() const { return desc_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t p() const { return desc_.p; }
    unsigned r() const { return desc_.r; }
    /// Residue-field size.
    std::uint64_t q() const { return residue_->q(); }
    /// |m| = q^beta.
    std::uint64_t m() const { return m_; }
    unsigned beta() const { return beta_; }
    const ff::FieldTable& residue_field() const { return *residue_; }
    std::shared_ptr<const ff::FieldTable> residue_field_ptr() const { return residue_; }

    RingElement zero() const { return 0; }
    RingElement one() const { return 1; }

    RingElement add(RingElement a, RingElement b) const {
        switch (desc_.kind) {
            case RingKind::Field: return residue_->add(a, b);
            case RingKind::IntegersMod: return static_cast<RingElement>((std::uint64_t{a} + b) % size_);
            case RingKind::GaloisRing: return digitwise(a, b, [&](std::uint64_t x, std::uint64_t y) { return (x + y) % coeff_mod_; });
            case RingKind::TruncatedPoly:
                return digitwise(a, b, [&](std::uint64_t x, std::uint64_t y) {
                    return std::uint64_t{residue_->add(static_cast<ff::Element>(x), static_cast<ff::Element>(y))};
                });
        }
        return 0;
    }

    RingElement neg(RingElement a) const {
        switch (desc_.kind) {
            case RingKind::Field: return residue_->neg(a);
            case RingKind::IntegersMod: return static_cast<RingElement>((size_ - a) % size_);
            case RingKind::GaloisRing: return digitwise(a, 0, [&](std::uint64_t x, std::uint64_t) { return (coeff_mod_ - x) % coeff_mod_; });
            case RingKind::TruncatedPoly:
                return digitwise(a, 0, [&](std::uint64_t x, std::uint64_t) {
                    return std::uint64_t{residue_->neg(static_cast<ff::Element>(x))};
                });
        }
        return 0;
    }

    RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

    RingElement mul(RingElement a, RingElement b) const {
        switch (desc_.kind) {
            case RingKind::Field: return residue_->mul(a, b);
            case RingKind::IntegersMod: return static_cast<RingElement>(std::uint64_t{a} * b % size_);
            case RingKind::GaloisRing: return galois_mul(a, b);
            case RingKind::TruncatedPoly: return truncated_mul(a, b);
        }
        return 0;
    }

    RingElement pow(RingElement a, std::uint64_t e) const {
        RingElement result = one();
        while (e) {
            if (e & 1U) result = mul(result, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    /// Image in the residue field, in FieldTable encoding.
    ff::Element residue(RingElement a) const {
        switch (desc_.kind) {
            case RingKind::Field: return a;
            case RingKind::IntegersMod: return static_cast<ff::Element>(a % desc_.p);
            case RingKind::GaloisRing: {
                ff::Element out = 0, place = 1;
                for (unsigned i = 0; i < desc_.r; ++i) {
                    out += static_cast<ff::Element>((a % coeff_mod_) % desc_.p) * place;
                    a = static_cast<RingElement>(a / coeff_mod_);
                    place *= static_cast<ff::Element>(desc_.p);
                }
                return out;
            }
            case RingKind::TruncatedPoly: return static_cast<ff::Element>(a % residue_->q());
        }
        return 0;
    }

    bool is_unit(RingElement a) const { return residue(a) != 0; }

private:
    explicit LocalRing(const RingDescriptor& d) : desc_(d) {
        unsigned __int128 size = 1;
        auto grow = [&](std::uint64_t factor, unsigned times) {
            for (unsigned i = 0; i < times; ++i) {
                size *= factor;
                require(size <= kRingSizeCap, ErrorKind::SizeCap,
                        "ring " + d.str() + " exceeds the size cap " + std::to_string(kRingSizeCap));
            }
        };
        switch (d.kind) {
            case RingKind::Field:
                grow(d.p, d.r);
                beta_ = 0;
                break;
            case RingKind::IntegersMod:
                require(d.r == 1, ErrorKind::BadDescriptor, "Z/p^alpha has residue degree 1");
                grow(d.p, d.alpha);
                beta_ = d.alpha - 1;
                break;
            case RingKind::GaloisRing:
                grow(d.p, d.alpha * d.r);
                beta_ = d.alpha - 1;
                coeff_mod_ = upow(d.p, d.alpha);
                break;
            case RingKind::TruncatedPoly:
                grow(d.p, d.r * d.n);
                beta_ = d.n - 1;
                break;
        }
        size_ = static_cast<std::uint64_t>(size);
        residue_ = std::make_shared<const ff::FieldTable>(ff::build_field(d.p, d.r));
        m_ = upow(residue_->q(), beta_);
        if (d.kind == RingKind::GaloisRing) {
            // Basic irreducible: the residue modulus read in Z/p^alpha.
            lifted_modulus_.assign(residue_->modulus().begin(), residue_->modulus().end());
        }
        verify();
    }

    template <class Op>
    RingElement digitwise(RingElement a, RingElement b, Op op) const {
        const std::uint64_t base = desc_.kind == RingKind::GaloisRing ? coeff_mod_ : residue_->q();
        const unsigned digits = desc_.kind == RingKind::GaloisRing ? desc_.r : desc_.n;
        std::uint64_t out = 0, place = 1;
        std::uint64_t x = a, y = b;
        for (unsigned i = 0; i < digits; ++i) {
            out += op(x % base, y % base) * place;
            x /= base;
            y /= base;
            place *= base;
        }
        return static_cast<RingElement>(out);
    }

    RingElement galois_mul(RingElement a, RingElement b) const {
        const unsigned r = desc_.r;
        const std::uint64_t M = coeff_mod_;
        std::vector<std::uint64_t> x(r), y(r), prod(2 * r - 1, 0);
        for (unsigned i = 0; i < r; ++i) {
            x[i] = a % M;
            a = static_cast<RingElement>(a / M);
            y[i] = b % M;
            b = static_cast<RingElement>(b / M);
        }
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % M;
        // Reduce by the monic lift f: x^r = -(f_0 + ... + f_{r-1} x^{r-1}).
        for (unsigned deg = 2 * r - 2; deg >= r; --deg) {
            const std::uint64_t c = prod[deg];
            if (c != 0) {
                prod[deg] = 0;
                for (unsigned i = 0; i < r; ++i) {
                    const std::uint64_t fi = static_cast<std::uint64_t>(lifted_modulus_[i]) % M;
                    prod[deg - r + i] = (prod[deg - r + i] + M - c * fi % M) % M;
                }
            }
        }
        std::uint64_t out = 0, place = 1;
        for (unsigned i = 0; i < r; ++i) {
            out += prod[i] * place;
            place *= M;
        }
        return static_cast<RingElement>(out);
    }

    RingElement truncated_mul(RingElement a, RingElement b) const {
        const unsigned n = desc_.n;
        const std::uint64_t Q = residue_->q();
        std::vector<ff::Element> x(n), y(n), prod(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            x[i] = static_cast<ff::Element>(a % Q);
            a = static_cast<RingElement>(a / Q);
            y[i] = static_cast<ff::Element>(b % Q);
            b = static_cast<RingElement>(b / Q);
        }
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; i + j < n; ++j) prod[i + j] = residue_->add(prod[i + j], residue_->mul(x[i], y[j]));
        std::uint64_t out = 0, place = 1;
        for (unsigned i = 0; i < n; ++i) {
            out += prod[i] * place;
            place *= Q;
        }
        return static_cast<RingElement>(out);
    }

public:
    /// Maximal-ideal and residue-map invariants; build() already runs this.
    void verify() const {
        std::vector<RingElement> ideal;
        for (std::uint64_t a = 0; a < size_; ++a)
            if (!is_unit(static_cast<RingElement>(a))) ideal.push_back(static_cast<RingElement>(a));
        require(ideal.size() == m_, ErrorKind::InvariantViolation,
                desc_.str() + ": non-units count " + std::to_string(ideal.size()) + " != m=" + std::to_string(m_));
        auto in_ideal = [&](RingElement x) { return !is_unit(x); };
        auto check_pair = [&](RingElement a, RingElement x, RingElement b) {
            require(in_ideal(add(a, b)), ErrorKind::InvariantViolation, desc_.str() + ": ideal not closed under +");
            require(in_ideal(mul(a, x)), ErrorKind::InvariantViolation, desc_.str() + ": ideal not closed under R*");
            require(residue(mul(x, b)) == residue_->mul(residue(x), residue(b)) &&
                        residue(add(x, b)) == residue_->add(residue(x), residue(b)),
                    ErrorKind::InvariantViolation, desc_.str() + ": residue map is not a homomorphism");
        };
        if (size_ <= 10'000) {
            for (auto a : ideal)
                for (auto b : ideal)
                    require(in_ideal(add(a, b)), ErrorKind::InvariantViolation, desc_.str() + ": ideal not closed under +");
            for (auto a : ideal)
                for (std::uint64_t x = 0; x < size_; ++x)
                    require(in_ideal(mul(a, static_cast<RingElement>(x))), ErrorKind::InvariantViolation,
                            desc_.str() + ": ideal not closed under R*");
        }
        std::mt19937_64 rng(0x5eedULL + size_);
        std::uniform_int_distribution<std::uint64_t> any(0, size_ - 1);
        std::uniform_int_distribution<std::size_t> in(0, ideal.size() - 1);
        for (int i = 0; i < 2000; ++i) {
            check_pair(ideal[in(rng)], static_cast<RingElement>(any(rng)), ideal[in(rng)]);
            // Homomorphism on arbitrary pairs.
            const auto x = static_cast<RingElement>(any(rng)), y = static_cast<RingElement>(any(rng));
            require(residue(mul(x, y)) == residue_->mul(residue(x), residue(y)) &&
                        residue(add(x, y)) == residue_->add(residue(x), residue(y)),
                    ErrorKind::InvariantViolation, desc_.str() + ": residue map is not a homomorphism");
        }
    }

private:
    RingDescriptor desc_;
    std::uint64_t size_ = 0;
    std::uint64_t m_ = 1;
    unsigned beta_ = 0;
    std::uint64_t coeff_mod_ = 0;
    std::vector<std::int64_t> lifted_modulus_;
    std::shared_ptr<const ff::FieldTable> residue_;
};

inline LocalRing build_ring(std::string_view descriptor) { return LocalRing::build(descriptor); }

/// q even, or gcd(k, q-1) | (q-1)/2.
inline bool undirected_criterion(std::uint64_t q, std::uint64_t k) {
    if (q % 2 == 0) return true;
    return ((q - 1) / 2) % std::gcd(k, q - 1) == 0;
}

struct ConnectionSet {
    std::uint64_t k = 1;
    std::vector<RingElement> elements;  // sorted
    bool symmetric = false;

    bool contains(RingElement x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

/// U_R(k) = {x^k : x a unit}, by enumeration.
inline ConnectionSet kth_power_set(const LocalRing& R, std::uint64_t k) {
    require(k >= 1, ErrorKind::BadArgument, "k must be positive");
    require(std::gcd(k, R.size()) == 1, ErrorKind::NotCoprime,
            "k=" + std::to_string(k) + " is not coprime to |R|=" + std::to_string(R.size()) +
                " (the case (k,|R|) != 1 is not covered)");
    std::vector<char> mark(R.size(), 0);
    for (std::uint64_t x = 0; x < R.size(); ++x) {
        const auto e = static_cast<RingElement>(x);
        if (R.is_unit(e)) mark[R.pow(e, k)] = 1;
    }
    ConnectionSet S;
    S.k = k;
    for (std::uint64_t x = 0; x < R.size(); ++x)
        if (mark[x]) S.elements.push_back(static_cast<RingElement>(x));
    const std::uint64_t kp = std::gcd(k, R.q() - 1);
    require(S.elements.size() == R.m() * (R.q() - 1) / kp, ErrorKind::InvariantViolation,
            "|U_R(k)| != m(q-1)/gcd(k,q-1) for " + R.descriptor().str());
    S.symmetric = mark[R.neg(R.one())] != 0;
    return S;
}

/// Cosets of m, indexed by residue-field element.
inline std::vector<std::vector<RingElement>> ideal_cosets(const LocalRing& R) {
    std::vector<std::vector<RingElement>> classes(R.q());
    for (std::uint64_t x = 0; x < R.size(); ++x) classes[R.residue(static_cast<RingElement>(x))].push_back(static_cast<RingElement>(x));
    return classes;
}

}  // namespace paley
