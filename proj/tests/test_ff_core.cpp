#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "paley/ff_core.hpp"
#include "support/oracles.hpp"

using namespace paley;
using namespace paley::ff;

namespace {

constexpr double kTight = 1e-9;
constexpr double kLoose = 1e-6;

struct FieldCase {
    std::uint64_t p;
    unsigned r;
};

const FieldCase kFields[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
                             {7, 1}, {7, 2}, {11, 1}, {13, 1}, {2, 5}, {3, 4}, {17, 1}};

}  // namespace

TEST(FieldTable, PrimeFieldExpIsPermutation) {
    const auto F = build_field(5, 1);
    std::set<Element> seen(F.exp_table().begin(), F.exp_table().end());
    EXPECT_EQ(seen, (std::set<Element>{1, 2, 3, 4}));
    EXPECT_EQ(F.exp(0), 1u);
}

TEST(FieldTable, F4WithGivenModulus) {
    const auto F = build_field(2, 2, std::vector<std::int64_t>{1, 1, 1});
    EXPECT_EQ(F.q(), 4u);
    for (Element x = 1; x < 4; ++x) EXPECT_EQ(F.pow(x, 3), 1u);
}

TEST(FieldTable, F25GeneratorHasFullOrder) {
    const auto F = build_field(5, 2);
    const Element g = F.generator();
    Element x = g;
    int order = 1;
    while (x != 1) {
        x = F.mul(x, g);
        ++order;
    }
    EXPECT_EQ(order, 24);
}

TEST(FieldTable, SmallestIrreducibleIsLexicographic) {
    EXPECT_EQ(FieldTable::smallest_irreducible(2, 2), (std::vector<std::int64_t>{1, 1, 1}));
    EXPECT_EQ(FieldTable::smallest_irreducible(3, 2), (std::vector<std::int64_t>{1, 0, 1}));
    EXPECT_EQ(FieldTable::smallest_irreducible(2, 3), (std::vector<std::int64_t>{1, 1, 0, 1}));
}

TEST(FieldTable, Errors) {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvariantViolation;
    };
    EXPECT_EQ(kind([] { build_field(6, 1); }), ErrorKind::NonPrime);
    EXPECT_EQ(kind([] { build_field(2, 2, std::vector<std::int64_t>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
    EXPECT_EQ(kind([] { build_field(2, 2, std::vector<std::int64_t>{1, 1, 2}); }), ErrorKind::BadArgument);
    EXPECT_EQ(kind([] { build_field(1009, 2); }), ErrorKind::SizeCap);
    EXPECT_EQ(kind([] { build_field(2, 40); }), ErrorKind::SizeCap);
}

TEST(FieldTable, RabinAgreesWithFactorSearch) {
    for (std::int64_t p : {2, 3, 5}) {
        for (unsigned r = 2; r <= 4; ++r) {
            const std::uint64_t count = upow(static_cast<std::uint64_t>(p), r);
            for (std::uint64_t code = 0; code < count; ++code) {
                detail::Poly f(r + 1, 0);
                std::uint64_t c = code;
                for (unsigned i = 0; i < r; ++i) {
                    f[i] = static_cast<std::int64_t>(c % p);
                    c /= p;
                }
                f[r] = 1;
                EXPECT_EQ(detail::irreducible_by_rabin(f, p), detail::irreducible_by_factor_search(f, p))
                    << "p=" << p << " code=" << code;
            }
        }
    }
}

// Map the library's x to a root of its modulus inside an independently built
// field; the induced map must be a ring isomorphism.
TEST(FieldTable, IsomorphicToNaiveField) {
    for (const auto& c : kFields) {
        const auto F = build_field(c.p, c.r);
        const oracle::NaiveField N(static_cast<std::int64_t>(c.p), c.r);
        ASSERT_EQ(F.q(), static_cast<std::uint64_t>(N.q()));
        const auto& f = F.modulus();
        auto eval = [&](const std::vector<std::int64_t>& coeffs, std::int64_t x) {
            std::int64_t acc = 0;
            for (std::size_t i = coeffs.size(); i-- > 0;) acc = N.add(N.mul(acc, x), coeffs[i] % static_cast<std::int64_t>(c.p));
            return acc;
        };
        std::int64_t root = -1;
        for (std::int64_t x = 0; x < N.q() && root < 0; ++x)
            if (eval(f, x) == 0) root = x;
        ASSERT_GE(root, 0) << c.p << "^" << c.r;
        std::vector<std::int64_t> phi(F.q());
        std::set<std::int64_t> image;
        for (Element a = 0; a < F.q(); ++a) {
            std::vector<std::int64_t> digits;
            for (Element t = a, i = 0; i < c.r; ++i, t /= c.p) digits.push_back(t % c.p);
            phi[a] = eval(digits, root);
            image.insert(phi[a]);
        }
        EXPECT_EQ(image.size(), F.q());
        const Element step = F.q() > 64 ? 7 : 1;
        for (Element a = 0; a < F.q(); a += step)
            for (Element b = 0; b < F.q(); b += step) {
                EXPECT_EQ(phi[F.mul(a, b)], N.mul(phi[a], phi[b]));
                EXPECT_EQ(phi[F.add(a, b)], N.add(phi[a], phi[b]));
            }
    }
}

TEST(FieldTable, FieldAxiomsExhaustiveSmall) {
    for (const auto& c : kFields) {
        const auto F = build_field(c.p, c.r);
        if (F.q() > 32) continue;
        for (Element x = 0; x < F.q(); ++x) {
            EXPECT_EQ(F.add(x, F.neg(x)), 0u);
            if (x) {
                EXPECT_EQ(F.mul(x, F.inv(x)), 1u);
            }
            EXPECT_EQ(F.pow(x, F.q()), x);  // Frobenius fixes F_q
            for (Element y = 0; y < F.q(); ++y) {
                EXPECT_EQ(F.add(x, y), F.add(y, x));
                EXPECT_EQ(F.mul(x, y), F.mul(y, x));
                for (Element z = 0; z < F.q(); z += 3) EXPECT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
            }
        }
    }
}

TEST(FieldTable, TraceIsAdditiveAndSurjective) {
    for (const auto& c : kFields) {
        const auto F = build_field(c.p, c.r);
        std::set<std::uint64_t> image;
        for (Element x = 0; x < F.q(); ++x) {
            image.insert(F.trace(x));
            for (Element y = 0; y < F.q() && y < 20; ++y)
                EXPECT_EQ(F.trace(F.add(x, y)), (F.trace(x) + F.trace(y)) % c.p);
        }
        EXPECT_EQ(image.size(), c.p);
    }
}

TEST(Characters, OrderAndAvailability) {
    const auto F = build_field(13, 1);
    EXPECT_EQ(character_of_order(F, 4).value, 3);
    EXPECT_EQ(F.character_order(CharIndex{3}), 4u);
    EXPECT_EQ(F.character_order(CharIndex{0}), 1u);
    EXPECT_THROW(character_of_order(build_field(7, 1), 4), Error);
    EXPECT_EQ(character_at_minus_one(F, CharIndex{6}), 1);   // 13 = 1 mod 4
    EXPECT_EQ(character_at_minus_one(build_field(7, 1), CharIndex{3}), -1);
}

TEST(JacobiSum, SpecValuesF13) {
    const auto F = build_field(13, 1);
    const auto trivial = jacobi_sum(F, CharIndex{0}, CharIndex{0});
    EXPECT_NEAR(trivial.real(), 11.0, kTight);
    EXPECT_NEAR(trivial.imag(), 0.0, kTight);
    const auto mixed = jacobi_sum(F, CharIndex{5}, CharIndex{0});
    EXPECT_NEAR(mixed.real(), -1.0, kTight);
    EXPECT_NEAR(mixed.imag(), 0.0, kTight);
    const auto chi4 = character_of_order(F, 4);
    EXPECT_NEAR(std::abs(jacobi_sum(F, chi4, chi4)), std::sqrt(13.0), kTight);
}

TEST(JacobiSum, MagnitudeAndConjugation) {
    for (const auto& c : kFields) {
        const auto F = build_field(c.p, c.r);
        const auto n = static_cast<std::int64_t>(F.n());
        for (std::int64_t a = 1; a < n; ++a) {
            for (std::int64_t b = 1; b < n; b += 2) {
                if ((a + b) % n == 0) continue;
                const auto J = jacobi_sum(F, CharIndex{a}, CharIndex{b});
                EXPECT_NEAR(std::norm(J), static_cast<double>(F.q()), kLoose);
                const auto Jc = jacobi_sum(F, CharIndex{-a}, CharIndex{-b});
                EXPECT_NEAR(std::abs(Jc - std::conj(J)), 0.0, kTight);
            }
        }
    }
}

TEST(GaussSum, Values) {
    const auto F5 = build_field(5, 1);
    const auto g = gauss_sum(F5, CharIndex{2});
    EXPECT_NEAR(g.real(), std::sqrt(5.0), kTight);
    EXPECT_NEAR(g.imag(), 0.0, kTight);
    const auto e = gauss_sum(F5, CharIndex{0});
    EXPECT_NEAR(e.real(), -1.0, kTight);
    const auto F25 = build_field(5, 2);
    for (std::int64_t j = 1; j < 24; ++j) EXPECT_NEAR(std::norm(gauss_sum(F25, CharIndex{j})), 25.0, kTight);
}

TEST(GaussSum, ProductIdentityAndEvaluatorAgreement) {
    for (const auto& c : kFields) {
        const auto F = build_field(c.p, c.r);
        const HypergeometricEvaluator H(F);
        const auto n = static_cast<std::int64_t>(F.n());
        for (std::int64_t a = 0; a < n; ++a) {
            const auto g = gauss_sum(F, CharIndex{a});
            EXPECT_NEAR(std::abs(g - H.gauss(CharIndex{a})), 0.0, kLoose);
            if (a) {
                EXPECT_NEAR(std::norm(g), static_cast<double>(F.q()), kLoose);
                // g(chi) g(conj chi) = chi(-1) q
                const auto gg = g * gauss_sum(F, CharIndex{-a});
                EXPECT_NEAR(gg.real(), character_at_minus_one(F, CharIndex{a}) * static_cast<double>(F.q()), kLoose);
            }
            for (std::int64_t b = 0; b < n; ++b) {
                const auto direct = jacobi_sum(F, CharIndex{a}, CharIndex{b});
                EXPECT_NEAR(std::abs(direct - H.jacobi_direct(CharIndex{a}, CharIndex{b})), 0.0, kLoose);
                EXPECT_NEAR(std::abs(direct - H.jacobi(CharIndex{a}, CharIndex{b})), 0.0, kLoose);
                if (a && b && (a + b) % n) {
                    const auto via = gauss_sum(F, CharIndex{a}) * gauss_sum(F, CharIndex{b}) / gauss_sum(F, CharIndex{a + b});
                    EXPECT_NEAR(std::abs(direct - via), 0.0, kLoose);
                }
            }
        }
    }
}

TEST(BinomSymbol, TrivialOverTrivial) {
    const auto F = build_field(7, 1);
    for (auto conv : {BinomConvention::PaperLiteral, BinomConvention::Greene}) {
        const auto v = binom_symbol(F, CharIndex{0}, CharIndex{0}, conv);
        EXPECT_NEAR(v.real(), 5.0 / 7.0, kTight);
        EXPECT_NEAR(v.imag(), 0.0, kTight);
    }
    const auto F13 = build_field(13, 1);
    EXPECT_LE(std::abs(binom_symbol(F13, character_of_order(F13, 4), CharIndex{0})), std::sqrt(13.0) / 13.0 + kTight);
}

TEST(BinomSymbol, EvaluatorMatchesFreeFunction) {
    const auto F = build_field(13, 1);
    const HypergeometricEvaluator H(F);
    for (std::int64_t a = 0; a < 12; ++a)
        for (std::int64_t b = 0; b < 12; ++b)
            for (auto conv : {BinomConvention::PaperLiteral, BinomConvention::Greene})
                EXPECT_NEAR(std::abs(H.binom(CharIndex{a}, CharIndex{b}, conv) - binom_symbol(F, CharIndex{a}, CharIndex{b}, conv)), 0.0, kLoose);
}

// Direct double sum over characters, no Gauss-sum shortcut.
TEST(Hyp3F2, F7MatchesDirectSummation) {
    const auto F = build_field(7, 1);
    const auto v = hyp3f2(F, 3, {1, 1, 2, 0, 0});
    EXPECT_NEAR(v.real(), 5.0 / 49.0, kLoose);
    EXPECT_NEAR(v.imag(), 0.0, kLoose);

    const auto n = static_cast<std::int64_t>(F.n());
    const auto base = character_of_order(F, 3).value;
    Complex direct = 0;
    for (std::int64_t j = 0; j < n; ++j) {
        direct += binom_symbol(F, CharIndex{base + j}, CharIndex{j}) * binom_symbol(F, CharIndex{base + j}, CharIndex{j}) *
                  binom_symbol(F, CharIndex{2 * base + j}, CharIndex{j});
    }
    direct *= 7.0 / 6.0;
    EXPECT_NEAR(std::abs(direct - v), 0.0, kLoose);
}

TEST(Hyp3F2, F17PairFitsTheBracket) {
    const auto F = build_field(17, 1);
    const auto A = hyp3f2(F, 4, {1, 1, 3, 0, 0});
    const auto B = hyp3f2(F, 4, {1, 2, 2, 0, 0});
    EXPECT_NEAR(A.imag(), 0.0, kLoose);
    EXPECT_NEAR(B.imag(), 0.0, kLoose);
    EXPECT_NEAR(12 * 289 * A.real() + 30 * 289 * B.real(), 660.0, kLoose);
}

TEST(Hyp3F2, OrderUnavailable) {
    EXPECT_THROW(hyp3f2(build_field(11, 1), 3, {1, 1, 2, 0, 0}), Error);
}

TEST(CubicResidue, Examples) {
    EXPECT_TRUE(cubic_residue(1, 7));
    EXPECT_TRUE(cubic_residue(1, 31));
    EXPECT_TRUE(cubic_residue(2, 31));
    EXPECT_FALSE(cubic_residue(2, 7));
    EXPECT_TRUE(cubic_residue(2, 5));  // p = 2 mod 3: every unit is a cube
    EXPECT_THROW(cubic_residue(14, 7), Error);
}

TEST(Dirichlet, TableAndJacobi) {
    const DirichletTable T(5, 2);
    EXPECT_EQ(T.group_order(), 20u);
    EXPECT_EQ(T.log(5), -1);
    EXPECT_EQ(T.log(1), 0);

    const auto J51 = dirichlet_jacobi(5, 1);
    EXPECT_NEAR(std::abs(J51), std::sqrt(5.0), kLoose);
    auto sym = [](Complex J) { return (J * J + std::conj(J) * std::conj(J)).real(); };
    EXPECT_NEAR(sym(J51), -6.0, kLoose);
    EXPECT_NEAR(sym(dirichlet_jacobi(5, 2)), -150.0, kLoose);
    EXPECT_NEAR(sym(dirichlet_jacobi(13, 2)), 1690.0, kLoose);
    EXPECT_NEAR(sym(dirichlet_jacobi(17, 2)), -8670.0, kLoose);
    try {
        dirichlet_jacobi(7, 1);
        FAIL() << "expected OrderUnavailable";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OrderUnavailable);
    }
}
