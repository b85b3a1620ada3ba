#include <gtest/gtest.h>

#include "paley/closed_forms.hpp"
#include "paley/graph_oracle.hpp"
#include "support/oracles.hpp"

using namespace paley;
using namespace paley::formulas;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvariantViolation;
}

LocalRing field(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    return LocalRing::build(RingDescriptor{RingKind::Field, pp->p, pp->r, 1, 1});
}

// Oracle count for Gamma(k, q) through the naive polynomial field.
std::uint64_t naive_gamma(std::uint64_t q, std::uint64_t k, int ell) {
    const auto pp = as_prime_power(q);
    const oracle::NaiveField F(static_cast<std::int64_t>(pp->p), pp->r);
    return oracle::count_cliques(oracle::paley_adjacency(F, k), ell);
}

double residual_of(const FormulaResult& r) { return std::get<double>(r.intermediates.at("bracket_residual")); }

}  // namespace

TEST(ScaleBlowup, Examples) {
    EXPECT_EQ(scale_blowup(26, 1, 3), 26);
    EXPECT_EQ(scale_blowup(26, 2, 3), 208);
    EXPECT_EQ(scale_blowup(203, 29, 4), 143578043);
}

TEST(K3K2, Examples) {
    EXPECT_EQ(k3_k2(5, 0).value, 0);
    EXPECT_EQ(k3_k2(13, 0).value, 26);
    EXPECT_EQ(k3_k2(5, 1).value, 0);
    EXPECT_EQ(kind_of([] { k3_k2(7, 0); }), ErrorKind::HypothesisViolated);
}

TEST(K3K3, Examples) {
    EXPECT_EQ(k3_k3(31, 0, 31, 1).value, 155);
    EXPECT_EQ(k3_k3(7, 0, 7, 1).value, 0);
    const auto r = k3_k3(19, 0, 19, 1);
    EXPECT_EQ(r.value, 38);
    EXPECT_EQ(std::get<BigInt>(r.intermediates.at("c")), 7);
    EXPECT_EQ(kind_of([] { k3_k3(5, 0, 5, 1); }), ErrorKind::HypothesisViolated);
    EXPECT_EQ(kind_of([] { k3_k3(8, 0, 2, 3); }), ErrorKind::HypothesisViolated);
    EXPECT_EQ(kind_of([] { k3_k3(31, 0, 31, 2); }), ErrorKind::BadArgument);
}

TEST(K3K4, Examples) {
    EXPECT_EQ(k3_k4(17, 0, 17, 1).value, 0);
    EXPECT_EQ(k3_k4(289, 0, 17, 2).value, 79764);
    const auto r = k3_k4(41, 0, 41, 1);
    EXPECT_EQ(r.value, 0);
    EXPECT_EQ(std::get<BigInt>(r.intermediates.at("e")), 5);
    EXPECT_EQ(kind_of([] { k3_k4(13, 0, 13, 1); }), ErrorKind::HypothesisViolated);
}

TEST(K4K2, Examples) {
    EXPECT_EQ(k4_k2(5, 0, 5, 1).value, 0);
    EXPECT_EQ(k4_k2(25, 0, 5, 2).value, 75);
    EXPECT_EQ(k4_k2(29, 0, 29, 1).value, 203);
}

TEST(K4K3, Examples) {
    const auto r7 = k4_k3(7, 0, 7, 1);
    EXPECT_EQ(r7.value, 0);
    EXPECT_NEAR(std::get<double>(r7.intermediates.at("hyp3f2_chi3_chi3_chi3bar_re")), 5.0 / 49.0, 1e-9);
    EXPECT_EQ(k4_k3(13, 0, 13, 1).value, 0);
    EXPECT_EQ(k4_k3(61, 0, 61, 1).value, count_cliques(unitary_power_graph(field(61), 3), 4));
}

TEST(K4K4, Examples) {
    EXPECT_EQ(k4_k4(17, 0, 17, 1).value, 0);
    EXPECT_EQ(k4_k4(41, 0, 41, 1).value, naive_gamma(41, 4, 4));
    EXPECT_EQ(k4_k4(73, 0, 73, 1).value, naive_gamma(73, 4, 4));
}

TEST(ZpAlpha, Examples) {
    EXPECT_EQ(k3_zpalpha(13, 2), 57122);
    EXPECT_EQ(k4_zpalpha(13, 2), 0);
    EXPECT_EQ(k4_zpalpha(29, 2), 143578043);
    EXPECT_EQ(kind_of([] { k3_zpalpha(7, 2); }), ErrorKind::HypothesisViolated);
}

TEST(ZpAlpha, EqualsGeneralFormula) {
    for (std::uint64_t p : {5, 13, 17, 29, 37, 41}) {
        for (unsigned a = 1; a <= 4; ++a) {
            EXPECT_EQ(k3_zpalpha(p, a), k3_k2(p, a - 1).value);
            EXPECT_EQ(k4_zpalpha(p, a), k4_k2(p, a - 1, p, 1).value);
        }
    }
}

TEST(JacobiIdentity, Examples) {
    for (auto [p, a, want] : {std::tuple{5u, 2u, -150}, {13u, 2u, 1690}, {5u, 1u, -6}, {17u, 2u, -8670}}) {
        const auto r = jacobi_identity_check(p, a);
        EXPECT_TRUE(r.agrees) << p << "," << a;
        EXPECT_EQ(r.rhs, want);
        EXPECT_LT(r.residual, 1e-6);
    }
}

TEST(FormulaOracle, K3AllOrdersAgainstNaiveField) {
    for (std::uint64_t q : {9, 13, 17, 25, 29, 37, 49}) EXPECT_EQ(k3_k2(q, 0).value, naive_gamma(q, 2, 3)) << q;
    for (std::uint64_t q : {4, 7, 13, 16, 19, 31, 37, 43, 64}) {
        const auto pp = as_prime_power(q);
        EXPECT_EQ(k3_k3(q, 0, pp->p, pp->r).value, naive_gamma(q, 3, 3)) << q;
    }
    for (std::uint64_t q : {17, 41, 73, 89, 97}) EXPECT_EQ(k3_k4(q, 0, q, 1).value, naive_gamma(q, 4, 3)) << q;
}

TEST(FormulaOracle, K4AllOrdersAgainstBitsetOracle) {
    for (std::uint64_t q : {5, 13, 17, 25, 29, 37, 41, 49, 53, 81}) {
        const auto pp = as_prime_power(q);
        EXPECT_EQ(k4_k2(q, 0, pp->p, pp->r).value, count_cliques(unitary_power_graph(field(q), 2), 4)) << q;
    }
    for (std::uint64_t q : {7, 13, 19, 31, 37, 61, 67, 73, 79, 97, 103, 109}) {
        const auto r = k4_k3(q, 0, q, 1);
        EXPECT_EQ(r.value, count_cliques(unitary_power_graph(field(q), 3), 4)) << q;
        EXPECT_LT(residual_of(r), 1e-6);
    }
    for (std::uint64_t q : {17, 41, 73, 89, 97, 113, 137}) {
        const auto r = k4_k4(q, 0, q, 1);
        EXPECT_EQ(r.value, count_cliques(unitary_power_graph(field(q), 4), 4)) << q;
        EXPECT_LT(residual_of(r), 1e-6);
    }
}

// Both symbol conventions reproduce the oracle on the calibration fields; the
// frozen default must stay the literal one.
TEST(Calibration, ConventionGuard) {
    EXPECT_EQ(ff::kCalibratedConvention, ff::BinomConvention::PaperLiteral);
    for (auto conv : {ff::BinomConvention::PaperLiteral, ff::BinomConvention::Greene}) {
        EXPECT_EQ(k4_k3(13, 0, 13, 1, conv).value, count_cliques(unitary_power_graph(field(13), 3), 4));
        EXPECT_EQ(k4_k4(17, 0, 17, 1, conv).value, count_cliques(unitary_power_graph(field(17), 4), 4));
        EXPECT_EQ(k4_k3(73, 0, 73, 1, conv).value, 1460);
        EXPECT_EQ(k4_k4(113, 0, 113, 1, conv).value, 3955);
    }
}

// x in the k=4 bracket is the e-normalized representative; the coprime
// representative with its own sign gives a different, wrong count.
TEST(Calibration, XBindingGuard) {
    for (std::uint64_t q : {41, 73, 113}) {
        const auto r = k4_k4(q, 0, q, 1);
        const auto e = qf::rep_x2_4y2(q, q, qf::X2Mode::ENormalized);
        EXPECT_EQ(std::get<BigInt>(r.intermediates.at("x")), e.a);
        EXPECT_EQ(r.value, count_cliques(unitary_power_graph(field(q), 4), 4));
    }
}

TEST(BlowupConsistency, GeneralEqualsScaledField) {
    for (std::uint64_t q : {5, 13, 17, 29}) {
        for (unsigned beta = 0; beta <= 3; ++beta) {
            const BigInt m = ipow(BigInt(q), beta);
            EXPECT_EQ(k3_k2(q, beta).value, scale_blowup(k3_k2(q, 0).value, m, 3));
            EXPECT_EQ(k4_k2(q, beta, q, 1).value, scale_blowup(k4_k2(q, 0, q, 1).value, m, 4));
        }
    }
    for (unsigned beta = 0; beta <= 2; ++beta) {
        const BigInt m = ipow(BigInt(7), beta);
        EXPECT_EQ(k3_k3(7, beta, 7, 1).value, scale_blowup(k3_k3(7, 0, 7, 1).value, m, 3));
        EXPECT_EQ(k4_k3(19, beta, 19, 1).value, scale_blowup(k4_k3(19, 0, 19, 1).value, ipow(BigInt(19), beta), 4));
        EXPECT_EQ(k4_k4(41, beta, 41, 1).value, scale_blowup(k4_k4(41, 0, 41, 1).value, ipow(BigInt(41), beta), 4));
    }
}

TEST(FormulaReport, RingDispatchAndOracle) {
    const auto Z25 = LocalRing::build("zpk:5,2");
    const auto T = LocalRing::build("fqt:5,1,2");
    for (int ell : {3, 4}) {
        auto a = formula_report(Z25, 2, ell);
        auto b = formula_report(T, 2, ell);
        EXPECT_EQ(a.formula_value, b.formula_value);
        EXPECT_EQ(a.intermediates, b.intermediates);
        a.set_oracle(count_cliques(unitary_power_graph(Z25, 2), ell));
        EXPECT_EQ(a.match, true);
    }
    const auto r = formula_report(Z25, 2, 3);
    EXPECT_EQ(std::get<BigInt>(r.intermediates.at("q")), 5);
    EXPECT_EQ(std::get<BigInt>(r.intermediates.at("beta")), 1);
    EXPECT_EQ(*r.formula_value, 0);

    EXPECT_EQ(kind_of([] { formula_report(LocalRing::build("fq:13,1"), 5, 3); }), ErrorKind::HypothesisViolated);
    EXPECT_EQ(kind_of([] { formula_report(LocalRing::build("fq:13,1"), 2, 5); }), ErrorKind::HypothesisViolated);
    EXPECT_EQ(kind_of([] { formula_report(LocalRing::build("zpk:5,2"), 5, 3); }), ErrorKind::NotCoprime);
    EXPECT_EQ(kind_of([] { formula_report(LocalRing::build("zpk:11,2"), 2, 3); }), ErrorKind::HypothesisViolated);
}

TEST(FormulaReport, LocalRingMatrix) {
    for (auto [d, k] : {std::pair{"zpk:5,2", 2u}, {"fqt:5,1,2", 2u}, {"zpk:7,2", 3u}, {"zpk:13,2", 2u},
                        {"gr:3,2,2", 2u}, {"fqt:3,2,2", 2u}, {"zpk:3,3", 2u}}) {
        const auto R = LocalRing::build(d);
        const auto G = unitary_power_graph(R, k);
        if (G.directed()) continue;
        for (int ell : {3, 4}) EXPECT_EQ(*formula_report(R, k, ell).formula_value, count_cliques(G, ell)) << d << " ell=" << ell;
    }
}
