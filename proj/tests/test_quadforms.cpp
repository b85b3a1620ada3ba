#include <gtest/gtest.h>

#include "paley/quadforms.hpp"

using namespace paley;
using namespace paley::qf;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvariantViolation;
}

// Every (a, b) with a^2 + D b^2 = N by trial over both coordinates.
std::vector<std::pair<long long, long long>> brute(long long N, long long D) {
    std::vector<std::pair<long long, long long>> out;
    for (long long b = 0; D * b * b <= N; ++b)
        for (long long a = 0; a * a + D * b * b <= N; ++a)
            if (a * a + D * b * b == N) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST(RepX2_4Y2, Examples) {
    auto r = rep_x2_4y2(17, 17, X2Mode::ENormalized);
    EXPECT_EQ(r.a, 1);
    EXPECT_EQ(r.b, 2);
    r = rep_x2_4y2(5, 5, X2Mode::ENormalized);
    EXPECT_EQ(r.a, 1);
    EXPECT_EQ(r.b, 1);
    r = rep_x2_4y2(625, 5, X2Mode::CoprimeOnly);
    EXPECT_EQ(r.a, 7);
    EXPECT_EQ(r.b, 12);
    r = rep_x2_4y2(13, 13, X2Mode::ENormalized);
    EXPECT_EQ(r.a, -3);
    EXPECT_EQ(r.b, 1);
    r = rep_x2_4y2(41, 41, X2Mode::ENormalized);
    EXPECT_EQ(r.a, 5);
    EXPECT_EQ(r.b, 2);
    EXPECT_EQ(kind_of([] { rep_x2_4y2(7, 7, X2Mode::CoprimeOnly); }), ErrorKind::NoRepresentation);
}

TEST(RepX2_4Y2, InertPrimeSquareKeepsMultiplesOfP) {
    // 9 = 3^2 + 0: p = 3 is 3 mod 4, so no coprimality filter applies
    const auto r = rep_x2_4y2(9, 3, X2Mode::ENormalized);
    EXPECT_EQ(r.a * r.a + 4 * r.b * r.b, 9);
    EXPECT_EQ(mod_floor(r.a, BigInt(4)), 1);
}

TEST(RepX2_4Y2, AgreesWithBruteForce) {
    for (long long q : {5, 13, 17, 25, 29, 37, 41, 53, 61, 73, 89, 97, 101, 113, 125, 169, 289, 625}) {
        long long p = q;
        for (long long d = 2; d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        const auto r = rep_x2_4y2(q, p, X2Mode::CoprimeOnly);
        EXPECT_TRUE(r.satisfies_equation());
        long long best_b = -1;
        for (auto [a, b] : brute(q, 4)) {
            if (p % 4 == 1 && a % p == 0) continue;
            best_b = b;
            break;
        }
        EXPECT_EQ(r.b, best_b) << q;
    }
}

TEST(Rep4Q, Examples) {
    auto r = rep_4q_c2_27d2(31, 31);
    EXPECT_EQ(r.a, 4);
    EXPECT_EQ(r.b, 2);
    r = rep_4q_c2_27d2(13, 13);
    EXPECT_EQ(r.a, -5);
    EXPECT_EQ(r.b, 1);
    r = rep_4q_c2_27d2(4, 2);
    EXPECT_EQ(r.a, 4);
    EXPECT_EQ(r.b, 0);
    r = rep_4q_c2_27d2(7, 7);
    EXPECT_EQ(r.a, 1);
    r = rep_4q_c2_27d2(19, 19);
    EXPECT_EQ(r.a, 7);
    EXPECT_EQ(kind_of([] { rep_4q_c2_27d2(8, 2); }), ErrorKind::OddExtensionForInertPrime);
    EXPECT_EQ(kind_of([] { rep_4q_c2_27d2(11, 11); }), ErrorKind::OddExtensionForInertPrime);
}

TEST(Rep4Q, NormalizationHoldsAcrossPrimePowers) {
    for (long long p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97}) {
        for (unsigned r = 1; r <= 3; ++r) {
            const BigInt q = ipow(BigInt(p), r);
            const auto rep = rep_4q_c2_27d2(q, p);
            EXPECT_TRUE(rep.satisfies_equation());
            EXPECT_EQ(mod_floor(rep.a, BigInt(3)), 1);
            EXPECT_NE(rep.a % p, 0);
        }
    }
    // inert primes with even exponent
    for (long long p : {2, 5, 11}) {
        const auto rep = rep_4q_c2_27d2(BigInt(p) * p, p);
        EXPECT_TRUE(rep.satisfies_equation());
        EXPECT_EQ(rep.a, -2 * (-p));
    }
}

TEST(RepX2_27Y2, Examples) {
    auto r = rep_x2_27y2(31, 31);
    EXPECT_EQ(r.a, -2);
    EXPECT_EQ(r.b, 1);
    r = rep_x2_27y2(43, 43);
    EXPECT_EQ(r.a, 4);
    EXPECT_EQ(r.b, 1);
    EXPECT_EQ(kind_of([] { rep_x2_27y2(7, 7); }), ErrorKind::NoRepresentation);
    r = rep_x2_27y2(343, 7);
    EXPECT_EQ(r.a, 10);
    EXPECT_EQ(r.b, 3);
}

TEST(RepU2_2V2, Examples) {
    auto r = rep_u2_2v2(17, 17);
    EXPECT_EQ(r.a, 3);
    EXPECT_EQ(r.b, 2);
    r = rep_u2_2v2(41, 41);
    EXPECT_EQ(r.a, 3);
    EXPECT_EQ(r.b, 4);
    r = rep_u2_2v2(73, 73);
    EXPECT_TRUE(r.satisfies_equation());
    EXPECT_EQ(mod_floor(r.a, BigInt(4)), 3);
    EXPECT_EQ(kind_of([] { rep_u2_2v2(13, 13); }), ErrorKind::NoRepresentation);
}

// Gauss: p = x^2 + 27 y^2 iff 2 is a cubic residue mod p, for p = 1 mod 3.
TEST(GaussEuler, EquivalenceBelow500) {
    int checked = 0;
    for (std::uint64_t p = 7; p < 500; ++p) {
        if (!is_prime(p) || p % 3 != 1) continue;
        const auto [rep, cubic] = gauss_euler_equivalence(p);
        bool brute_rep = false;
        for (auto [a, b] : brute(static_cast<long long>(p), 27)) brute_rep = brute_rep || (b > 0 && a % 3 != 0);
        EXPECT_EQ(rep, cubic) << p;
        EXPECT_EQ(rep, brute_rep) << p;
        ++checked;
    }
    EXPECT_GT(checked, 40);
}
