#pragma once

// Tower sequences c_l, c_{l,s}, e_l, f_l as exact powers in Z[omega] with
// omega^2 = -D, each cross-checked against its two-term recursion, and the
// tower clique counts built from them. reproduce_table() recomputes the three
// published tables and lists every cell that disagrees.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paley/closed_forms.hpp"
#include "paley/error.hpp"
#include "paley/integer.hpp"
#include "paley/quadforms.hpp"

namespace paley::towers {

struct QuadIntPair {
    BigInt a;
    BigInt b;
    std::int64_t D = 0;

    QuadIntPair operator*(const QuadIntPair& o) const {
        require(D == o.D, ErrorKind::InvariantViolation, "mixing Z[omega] with different D");
        return {a * o.a - D * b * o.b, a * o.b + o.a * b, D};
    }
    bool operator==(const QuadIntPair&) const = default;

    QuadIntPair conj() const { return {a, -b, D}; }
    BigInt norm() const { return a * a + D * b * b; }

    QuadIntPair pow(std::uint64_t e) const {
        QuadIntPair result{1, 0, D};
        QuadIntPair base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }
};

enum class SeqKind { C, CGeneral, E, F };

inline std::string_view to_string(SeqKind k) {
    switch (k) {
        case SeqKind::C: return "c";
        case SeqKind::CGeneral: return "c_general";
        case SeqKind::E: return "e";
        case SeqKind::F: return "f";
    }
    return "?";
}

struct TowerSeq {
    SeqKind kind = SeqKind::C;
    std::uint64_t p = 0;
    unsigned t = 1;            // q-step is p^t (c kinds); for e/f the step is base_q
    unsigned s = 0;
    BigInt base_q;             // p^t for c kinds, q for e, p for f
    QuadIntPair generator;     // x0 + y0 omega or e1 + f1 omega
    QuadIntPair base;          // (c_{0,s}, d_{0,s}) for c kinds, 1 otherwise
    std::vector<BigInt> values;     // indexed by ell, starting at 0
    std::vector<BigInt> companion;  // d_l for c kinds, f_l for e, e_l for f

    const BigInt& at(std::size_t ell) const {
        require(ell < values.size(), ErrorKind::BadArgument, "sequence index " + std::to_string(ell) + " out of range");
        return values[ell];
    }
};

namespace detail {

// base * generator^ell for ell = 0..ell_max, checked against
// v_{l+1} = 2 Re(generator) v_l - N(generator) v_{l-1} on both components.
inline std::vector<QuadIntPair> power_orbit(const QuadIntPair& base, const QuadIntPair& gen, unsigned ell_max) {
    std::vector<QuadIntPair> out;
    out.reserve(ell_max + 1);
    for (unsigned l = 0; l <= ell_max; ++l) out.push_back(base * gen.pow(l));
    const BigInt trace = 2 * gen.a;
    const BigInt norm = gen.norm();
    for (unsigned l = 1; l < ell_max; ++l) {
        const BigInt ra = trace * out[l].a - norm * out[l - 1].a;
        const BigInt rb = trace * out[l].b - norm * out[l - 1].b;
        require(ra == out[l + 1].a && rb == out[l + 1].b, ErrorKind::InvariantViolation,
                "two-term recursion disagrees with the exact power at ell=" + std::to_string(l + 1));
    }
    return out;
}

inline void check_c_claims(const TowerSeq& seq) {
    const BigInt norm0 = seq.base.norm();
    for (std::size_t l = 0; l < seq.values.size(); ++l) {
        const BigInt& c = seq.values[l];
        require(mod_floor(c, BigInt(3)) == 1, ErrorKind::InvariantViolation,
                "c_" + std::to_string(l) + "=" + c.str() + " is not 1 mod 3");
        require(c % seq.p != 0, ErrorKind::InvariantViolation,
                "p divides c_" + std::to_string(l) + "=" + c.str());
        require(c * c + 27 * seq.companion[l] * seq.companion[l] == norm0 * ipow(seq.base_q, l),
                ErrorKind::InvariantViolation, "norm law fails at ell=" + std::to_string(l));
    }
}

inline TowerSeq build_c(SeqKind kind, std::uint64_t p, unsigned t, unsigned s, const qf::QFRep& gen_rep,
                        const QuadIntPair& base, unsigned ell_max) {
    TowerSeq seq;
    seq.kind = kind;
    seq.p = p;
    seq.t = t;
    seq.s = s;
    seq.base_q = ipow(BigInt(p), t);
    seq.generator = {gen_rep.a, gen_rep.b, 27};
    seq.base = base;
    for (const auto& z : power_orbit(base, seq.generator, ell_max)) {
        seq.values.push_back(z.a);
        seq.companion.push_back(z.b);
    }
    check_c_claims(seq);
    return seq;
}

// (e1 + f1 omega)^ell with omega = 2i, plus the paired recursion
// e_{l+1} = e1 e_l - 4 f1 f_l, f_{l+1} = e1 f_l + f1 e_l.
inline std::vector<QuadIntPair> gaussian_orbit(const BigInt& q, std::uint64_t p, unsigned ell_max, QuadIntPair& gen) {
    const auto rep = qf::rep_x2_4y2(q, p, qf::X2Mode::ENormalized);
    gen = {rep.a, rep.b, 4};
    auto orbit = power_orbit({1, 0, 4}, gen, ell_max);
    for (unsigned l = 0; l < ell_max; ++l) {
        const BigInt e = gen.a * orbit[l].a - 4 * gen.b * orbit[l].b;
        const BigInt f = gen.a * orbit[l].b + gen.b * orbit[l].a;
        require(e == orbit[l + 1].a && f == orbit[l + 1].b, ErrorKind::InvariantViolation,
                "paired e/f recursion disagrees at ell=" + std::to_string(l + 1));
    }
    for (unsigned l = 0; l <= ell_max; ++l) {
        const BigInt& e = orbit[l].a;
        require(mod_floor(e, BigInt(4)) == 1, ErrorKind::InvariantViolation,
                "e_" + std::to_string(l) + "=" + e.str() + " is not 1 mod 4");
        require(e % p != 0, ErrorKind::InvariantViolation, "p divides e_" + std::to_string(l));
        require(orbit[l].norm() == ipow(q, l), ErrorKind::InvariantViolation, "norm law fails at ell=" + std::to_string(l));
    }
    return orbit;
}

}  // namespace detail

/// c_l = -2 Re((x0 + y0 omega)^l), omega^2 = -27, with p = x0^2 + 27 y0^2.
inline TowerSeq c_sequence(std::uint64_t p, unsigned ell_max) {
    require(is_prime(p) && p % 3 == 1, ErrorKind::HypothesisViolated,
            "c-sequence needs a prime p = 1 (mod 3), got " + std::to_string(p));
    qf::QFRep rep;
    try {
        rep = qf::rep_x2_27y2(BigInt(p), p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoRepresentation) throw;
        fail(ErrorKind::NotRepresentable,
             "2 is not a cubic residue mod " + std::to_string(p) + ", so p != x^2+27y^2");
    }
    return detail::build_c(SeqKind::C, p, 1, 0, rep, {-2, 0, 27}, ell_max);
}

struct TowerExponent {
    unsigned t = 0;
    qf::QFRep rep;
};

/// Smallest t with p^t = x^2 + 27 y^2, gcd(x, p) = 1.
inline TowerExponent minimal_tower_exponent(std::uint64_t p, unsigned cap = 12) {
    require(is_prime(p), ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    for (unsigned a = 1; a <= cap; ++a) {
        try {
            return {a, qf::rep_x2_27y2(ipow(BigInt(p), a), p)};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoRepresentation) throw;
        }
    }
    fail(ErrorKind::MinimalityProbeFailed,
         "no t <= " + std::to_string(cap) + " with " + std::to_string(p) + "^t = x^2+27y^2 coprimely");
}

/// c_{l,s} = Re((c_{0,s} + d_{0,s} omega)(x0 + y0 omega)^l) with p^t = x0^2 + 27 y0^2.
/// t = 0 asks for the probe; an explicit t must be the minimal one.
inline TowerSeq c_sequence_general(std::uint64_t p, unsigned t, unsigned s, unsigned ell_max) {
    const auto probe = minimal_tower_exponent(p);
    if (t == 0) t = probe.t;
    require(t == probe.t, ErrorKind::HypothesisViolated,
            "t=" + std::to_string(t) + " is not the minimal exponent " + std::to_string(probe.t) + " for p=" + std::to_string(p));
    require(s < t, ErrorKind::BadArgument, "need 0 <= s < t, got s=" + std::to_string(s) + ", t=" + std::to_string(t));
    QuadIntPair base{-2, 0, 27};
    if (s >= 1) {
        const auto b = qf::rep_4q_c2_27d2(ipow(BigInt(p), s), p);
        base = {b.a, b.b, 27};
        // d0 and -d0 both represent 4p^s; only the one over the same prime as
        // the generator keeps c coprime to p.
        const QuadIntPair gen{probe.rep.a, probe.rep.b, 27};
        if ((base * gen).a % p == 0) base = base.conj();
    }
    return detail::build_c(SeqKind::CGeneral, p, t, s, probe.rep, base, ell_max);
}

/// e_l = Re((e1 + 2 f1 i)^l) for q = e1^2 + 4 f1^2, companion f_l.
inline TowerSeq e_sequence(std::uint64_t q, unsigned ell_max) {
    const auto pp = as_prime_power(q);
    require(pp.has_value(), ErrorKind::BadArgument, std::to_string(q) + " is not a prime power");
    require(q % 8 == 1 && pp->p % 4 == 1, ErrorKind::HypothesisViolated,
            "e-sequence needs q = 1 (mod 8) and p = 1 (mod 4), got q=" + std::to_string(q));
    TowerSeq seq;
    seq.kind = SeqKind::E;
    seq.p = pp->p;
    seq.base_q = q;
    seq.base = {1, 0, 4};
    for (const auto& z : detail::gaussian_orbit(BigInt(q), pp->p, ell_max, seq.generator)) {
        seq.values.push_back(z.a);
        seq.companion.push_back(z.b);
    }
    return seq;
}

/// f_l = b-component of (e1 + f1 omega)^l, omega = 2i, for p = e1^2 + 4 f1^2; companion e_l.
inline TowerSeq f_sequence(std::uint64_t p, unsigned ell_max) {
    require(is_prime(p) && p % 4 == 1, ErrorKind::HypothesisViolated,
            "f-sequence needs a prime p = 1 (mod 4), got " + std::to_string(p));
    TowerSeq seq;
    seq.kind = SeqKind::F;
    seq.p = p;
    seq.base_q = p;
    seq.base = {1, 0, 4};
    for (const auto& z : detail::gaussian_orbit(BigInt(p), p, ell_max, seq.generator)) {
        seq.values.push_back(z.b);
        seq.companion.push_back(z.a);
    }
    return seq;
}

inline ExactCount k3_count_from_c(const BigInt& Q, const BigInt& c) {
    return exact_div(Q * (Q - 1) * (Q + c - 8), 162, "K3 tower k=3");
}
inline ExactCount k3_count_from_e(const BigInt& Q, const BigInt& e) {
    return exact_div(Q * (Q - 1) * (Q - 6 * e - 11), 384, "K3 tower k=4");
}
inline ExactCount k4_count_from_f(const BigInt& Q, const BigInt& f) {
    return exact_div(Q * (Q - 1) * ((Q - 9) * (Q - 9) - 16 * f * f), 1536, "K4 tower k=2");
}

/// K3(Gamma(3, p^ell)).
inline ExactCount k3_tower_k3(std::uint64_t p, unsigned ell) {
    require(ell >= 1, ErrorKind::BadArgument, "ell must be at least 1");
    return k3_count_from_c(ipow(BigInt(p), ell), c_sequence(p, ell).at(ell));
}

/// K3(Gamma(3, p^(s + t ell))) from the general c-sequence.
inline ExactCount k3_tower_k3_general(std::uint64_t p, unsigned t, unsigned s, unsigned ell) {
    const auto seq = c_sequence_general(p, t, s, ell);
    require(s + ell >= 1, ErrorKind::BadArgument, "s + ell must be at least 1");
    return k3_count_from_c(ipow(BigInt(p), s + seq.t * ell), seq.at(ell));
}

/// K3(Gamma(4, q^ell)).
inline ExactCount k3_tower_k4(std::uint64_t q, unsigned ell) {
    require(ell >= 1, ErrorKind::BadArgument, "ell must be at least 1");
    return k3_count_from_e(ipow(BigInt(q), ell), e_sequence(q, ell).at(ell));
}

/// K4(Gamma(2, p^ell)).
inline ExactCount k4_tower_k2(std::uint64_t p, unsigned ell) {
    require(ell >= 1, ErrorKind::BadArgument, "ell must be at least 1");
    return k4_count_from_f(ipow(BigInt(p), ell), f_sequence(p, ell).at(ell));
}

// Direct closed-formula cross-checks solve a representation by exhaustive
// search; beyond this size that search is skipped.
inline constexpr std::uint64_t kDirectCheckCap = 1'000'000'000ULL;

struct TableRow {
    unsigned ell = 0;
    BigInt sequence_value;
    ExactCount count;
    std::optional<BigInt> published_value;
    std::optional<ExactCount> published_count;
    bool erratum = false;
    std::optional<ExactCount> direct_count;          // closed formula at q^ell, independent solve
    std::optional<bool> representation_unique;       // the admissible representation of q^ell is unique
};

struct TableReport {
    int id = 0;
    std::string caption;
    std::string sequence_name;
    TowerSeq sequence;
    std::vector<TableRow> rows;
    std::vector<std::string> errata;
};

namespace published {

struct Row {
    std::int64_t value;
    const char* count;
};

inline constexpr std::array<Row, 5> kTable1{{
    {4, "155"},
    {46, "5689120"},
    {-308, "161470943875"},
    {-194, "4861047204287040"},
    {10324, "144899484304503423275"},
}};

inline constexpr std::array<Row, 5> kTable2{{
    {1, "0"},
    {-15, "79764"},
    {-47, "325790856"},
    {161, "1499479239720"},
    {761, "7430192286281890"},
}};

inline constexpr std::array<Row, 5> kTable3{{
    {1, "0"},
    {2, "75"},
    {1, "135625"},
    {22, "283140000"},
    {-19, "61674593750"},
}};

}  // namespace published

/// Recomputes published table `id` (1: K3 Gamma(3,31^l), 2: K3 Gamma(4,17^l),
/// 3: K4 Gamma(2,5^l)) for ell = 1..ell_max and lists disagreeing cells.
inline TableReport reproduce_table(int id, unsigned ell_max) {
    require(id >= 1 && id <= 3, ErrorKind::BadArgument, "table id must be 1, 2 or 3, got " + std::to_string(id));
    require(ell_max >= 1 && ell_max <= 64, ErrorKind::BadArgument, "max ell must be in 1..64");
    TableReport rep;
    rep.id = id;
    std::uint64_t base = 0;
    const std::array<published::Row, 5>* pub = nullptr;
    switch (id) {
        case 1:
            base = 31;
            rep.caption = "c_l and K3(Gamma(3,31^l))";
            rep.sequence_name = "c";
            rep.sequence = c_sequence(base, ell_max);
            pub = &published::kTable1;
            break;
        case 2:
            base = 17;
            rep.caption = "e_l and K3(Gamma(4,17^l))";
            rep.sequence_name = "e";
            rep.sequence = e_sequence(base, ell_max);
            pub = &published::kTable2;
            break;
        default:
            base = 5;
            rep.caption = "f_l and K4(Gamma(2,5^l))";
            rep.sequence_name = "f";
            rep.sequence = f_sequence(base, ell_max);
            pub = &published::kTable3;
            break;
    }

    for (unsigned l = 1; l <= ell_max; ++l) {
        TableRow row;
        row.ell = l;
        row.sequence_value = rep.sequence.at(l);
        const BigInt Q = ipow(BigInt(base), l);
        switch (id) {
            case 1: row.count = k3_count_from_c(Q, row.sequence_value); break;
            case 2: row.count = k3_count_from_e(Q, row.sequence_value); break;
            default: row.count = k4_count_from_f(Q, row.sequence_value); break;
        }

        if (Q <= kDirectCheckCap) {
            switch (id) {
                case 1: {
                    row.direct_count = formulas::k3_k3(Q, 0, base, l).value;
                    row.representation_unique = qf::rep_4q_c2_27d2(Q, base).a == row.sequence_value;
                    break;
                }
                case 2: {
                    row.direct_count = formulas::k3_k4(Q, 0, base, l).value;
                    const auto all = qf::all_reps_x2_4y2(Q, base, qf::X2Mode::ENormalized);
                    row.representation_unique = all.size() == 1 && all.front().a == row.sequence_value;
                    break;
                }
                default: {
                    row.direct_count = formulas::k4_k2(Q, 0, base, l).value;
                    const auto all = qf::all_reps_x2_4y2(Q, base, qf::X2Mode::CoprimeOnly);
                    row.representation_unique = all.size() == 1 && all.front().b == abs(row.sequence_value);
                    break;
                }
            }
            require(*row.direct_count == row.count, ErrorKind::InvariantViolation,
                    "tower count and direct formula disagree at ell=" + std::to_string(l));
        }

        if (l <= pub->size()) {
            const auto& cell = (*pub)[l - 1];
            row.published_value = BigInt(cell.value);
            row.published_count = BigInt(cell.count);
            // f enters only squared, so its published sign carries no information.
            const bool value_ok = id == 3 ? abs(row.sequence_value) == abs(*row.published_value)
                                          : row.sequence_value == *row.published_value;
            const bool count_ok = row.count == *row.published_count;
            row.erratum = !value_ok || !count_ok;
            if (!value_ok)
                rep.errata.push_back("ell=" + std::to_string(l) + ": " + rep.sequence_name + " published " +
                                     row.published_value->str() + ", computed " + row.sequence_value.str());
            if (!count_ok)
                rep.errata.push_back("ell=" + std::to_string(l) + ": count published " + row.published_count->str() +
                                     ", computed " + row.count.str());
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace paley::towers
