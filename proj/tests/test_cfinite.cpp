#include "ec/cfinite.hpp"
#include "ec/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ec;
using namespace ec::testing;

namespace {

RationalGF monomer_dimer_2xn() { return RationalGF(Poly(Q({1, -1})), Poly(Q({1, -3, -1, 1}))); }

}  // namespace

TEST(CFinite, FibonacciToGf) {
    RationalGF g = rec_to_gf(fibonacci_recurrence());
    EXPECT_EQ(g.numerator, Poly(1));
    EXPECT_EQ(g.denominator, Poly(Q({1, -1, -1})));
}

TEST(CFinite, PowersOfTwoToGf) {
    RationalGF g = rec_to_gf(LinearRecurrence({-2}, {1}));
    EXPECT_EQ(g.numerator, Poly(1));
    EXPECT_EQ(g.denominator, Poly(Q({1, -2})));
}

TEST(CFinite, ZeroSequenceGf) {
    RationalGF g = rec_to_gf(LinearRecurrence({-1}, {0}));
    EXPECT_TRUE(g.numerator.is_zero());
    EXPECT_TRUE(g.reduced().numerator.is_zero());
    EXPECT_EQ(g.reduced().denominator, Poly(1));
}

TEST(CFinite, MonomerDimerGfToRecurrence) {
    LinearRecurrence r = gf_to_rec(monomer_dimer_2xn());
    EXPECT_EQ(r.order(), 3);
    EXPECT_EQ(r.initial, Q({1, 2, 7}));
    EXPECT_EQ(r.coeffs, Q({-3, -1, 1}));
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(nth_term(r, n), count_rectangle_tilings(2, n, true)) << n;
}

TEST(CFinite, GfToRecSimpleCases) {
    LinearRecurrence fib = gf_to_rec(RationalGF(Poly(1), Poly(Q({1, -1, -1}))));
    EXPECT_EQ(fib, fibonacci_recurrence());
    LinearRecurrence ones = gf_to_rec(RationalGF(Poly(1), Poly(Q({1, -1}))));
    EXPECT_EQ(ones.coeffs, Q({-1}));
    EXPECT_EQ(ones.initial, Q({1}));
}

TEST(CFinite, ImproperRationalRejected) {
    try {
        gf_to_rec(RationalGF(Poly(Q({1, 1})), Poly(Q({1, -1}))));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ImproperRational);
    }
}

TEST(CFinite, RoundTripAndExpansion) {
    std::vector<LinearRecurrence> recs{fibonacci_recurrence(), LinearRecurrence({-2}, {1}),
                                       gf_to_rec(monomer_dimer_2xn()),
                                       LinearRecurrence({Rational(1, 2), -3, 5}, {2, Rational(-1, 3), 0})};
    for (const auto& r : recs) {
        EXPECT_EQ(gf_to_rec(rec_to_gf(r)), r);
        Series s = rec_to_gf(r).series(50);
        for (int n = 0; n <= 50; ++n) EXPECT_EQ(s[n], nth_term(r, n));
    }
}

TEST(CFinite, NthTermExamples) {
    EXPECT_EQ(nth_term(fibonacci_recurrence(), 11), 144);
    EXPECT_EQ(nth_term(LinearRecurrence({-2}, {1}), 30), 1073741824);
    EXPECT_EQ(nth_term(fibonacci_recurrence(), 200), Rational(Integer("453973694165307953197296969697410619233826")));
}

TEST(CFinite, FibonacciNearestIntegerFormula) {
    double phi = dominant_growth(rec_to_gf(fibonacci_recurrence()));
    long double c = (1 + std::sqrt(5.0L)) / (2 * std::sqrt(5.0L));
    for (int n = 0; n <= 40; ++n) {
        long double approx = c * std::pow(static_cast<long double>(phi), n);
        EXPECT_EQ(nth_term(fibonacci_recurrence(), n), Rational(static_cast<long>(std::llround(approx)))) << n;
    }
}

TEST(CFinite, DetectPolynomialExamples) {
    auto sq = detect_polynomial(Q({0, 1, 4, 9, 16, 25}));
    ASSERT_TRUE(sq);
    EXPECT_EQ(sq->degree, 2);
    EXPECT_EQ(sq->polynomial, Poly(Q({0, 0, 1})));
    EXPECT_FALSE(detect_polynomial(Q({1, 2, 4, 8, 16})));
    auto square_ehrhart = detect_polynomial(Q({1, 4, 9, 16, 25}));
    ASSERT_TRUE(square_ehrhart);
    EXPECT_EQ(square_ehrhart->polynomial, pow(Poly(Q({1, 1})), 2));
    auto zero = detect_polynomial(Q({0, 0, 0}));
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->degree, 0);
    EXPECT_TRUE(zero->polynomial.is_zero());
    EXPECT_THROW(detect_polynomial(Q({5})), Error);
}

TEST(CFinite, DetectPolynomialAgreesWithLagrange) {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<int> dist(-7, 7);
    for (int trial = 0; trial < 30; ++trial) {
        int deg = trial % 5;
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = make_rational(dist(rng), 1 + (dist(rng) + 7) % 3);
        if (c.back() == 0) c.back() = 1;
        Poly f(c);
        std::vector<Rational> xs, ys;
        for (int k = 0; k < deg + 4; ++k) {
            xs.emplace_back(k);
            ys.push_back(f(Rational(k)));
        }
        auto fit = detect_polynomial(ys);
        ASSERT_TRUE(fit);
        EXPECT_EQ(fit->polynomial, interpolate(xs, ys));
        EXPECT_EQ(fit->polynomial, f);
    }
}

TEST(CFinite, DominantGrowthExamples) {
    EXPECT_NEAR(dominant_growth(rec_to_gf(fibonacci_recurrence())), 1.6180339887, 1e-8);
    EXPECT_NEAR(dominant_growth(monomer_dimer_2xn()), 3.2143, 1e-4);
    EXPECT_NEAR(dominant_growth(RationalGF(Poly(1), pow(Poly(Q({1, -1})), 2))), 1.0, 1e-8);
}

TEST(CFinite, DominantGrowthRejectsNonDominant) {
    // 1/(1 - x^2) has poles at +1 and -1.
    EXPECT_THROW(dominant_growth(RationalGF(Poly(1), Poly(Q({1, 0, -1})))), Error);
    // 1/(1 + x): no positive pole.
    EXPECT_THROW(dominant_growth(RationalGF(Poly(1), Poly(Q({1, 1})))), Error);
}

TEST(CFinite, GuessRecurrenceExamples) {
    auto fib = guess_recurrence(fibonacci_recurrence().terms(12), 4);
    ASSERT_TRUE(fib);
    EXPECT_EQ(*fib, fibonacci_recurrence());

    LinearRecurrence md = gf_to_rec(monomer_dimer_2xn());
    auto guessed = guess_recurrence(md.terms(12), 4);
    ASSERT_TRUE(guessed);
    EXPECT_EQ(guessed->order(), 3);
    EXPECT_EQ(guessed->terms(30), md.terms(30));

    auto constant = guess_recurrence(Q({4, 4, 4, 4, 4, 4}), 2);
    ASSERT_TRUE(constant);
    EXPECT_EQ(constant->order(), 1);

    EXPECT_FALSE(guess_recurrence(Q({1, 2, 6, 24, 120, 720, 5040, 40320}), 3));
}
