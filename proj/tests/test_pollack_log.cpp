#include <gtest/gtest.h>

#include "polluxe/error.hpp"
#include "polluxe/pollack_log.hpp"
#include "support/oracles.hpp"

using namespace polluxe;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<Rational> coeffs_of(const GrowthSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

std::vector<Rational> from_mpq(const std::vector<mpq_class>& v) {
    std::vector<Rational> out;
    for (const auto& x : v) out.emplace_back(x);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<std::int64_t> levels(Sign s, std::int64_t M) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m <= M; ++m) out.push_back(s == Sign::Plus ? 2 * m : 2 * m - 1);
    return out;
}

} // namespace

TEST(HalfLog, PlusExpansionAtLevelOne) {
    const HalfLog h = half_log(3, 0, Sign::Plus, 1, 6);
    EXPECT_TRUE(h.expansion.exact());
    std::vector<Rational> expect;
    for (int c : {3, 9, 18, 21, 15, 6, 1}) expect.push_back(Rational(c) / Rational(9));
    EXPECT_EQ(coeffs_of(h.expansion), expect);
}

TEST(HalfLog, MinusExpansionAtLevelOne) {
    const HalfLog h = half_log(3, 0, Sign::Minus, 1, 2);
    EXPECT_EQ(coeffs_of(h.expansion), (std::vector<Rational>{q("1/3"), q("1/3"), q("1/9")}));
}

TEST(HalfLog, ConstantTermIsOneThird) {
    for (std::int64_t M = 1; M <= 3; ++M)
        for (Sign s : {Sign::Plus, Sign::Minus}) EXPECT_EQ(half_log(3, 0, s, M).expansion.coeff(0), q("1/3"));
}

TEST(HalfLog, MatchesIndependentConstruction) {
    for (std::int64_t p : {3, 5})
        for (std::int64_t j : {-1, 0, 2})
            for (Sign s : {Sign::Plus, Sign::Minus})
                for (std::int64_t M = 1; M <= (p == 3 ? 2 : 1); ++M) {
                    const HalfLog h = half_log(p, j, s, M);
                    EXPECT_EQ(coeffs_of(h.expansion), from_mpq(oracle::half_log(p, j, levels(s, M))));
                    for (const auto& f : h.factors)
                        EXPECT_EQ(f.poly.degree(), ipow(p, static_cast<std::uint64_t>(f.level - 1)).get_si() * (p - 1));
                }
}

TEST(HalfLog, TruncationMarksInexact) {
    const HalfLog h = half_log(3, 1, Sign::Plus, 2, 10);
    EXPECT_FALSE(h.expansion.exact());
    EXPECT_EQ(h.expansion.trunc_degree(), 10);
    EXPECT_EQ(h.expansion.coeff(7), h.product.coeff(7));
}

TEST(FactorTable, Examples) {
    EXPECT_EQ(factor_disc_valuation(3, 2, 0, 1), Rational(0));
    EXPECT_EQ(factor_disc_valuation(3, 2, 0, 2), q("-2/3"));
    EXPECT_EQ(factor_disc_valuation(3, 1, 0, 3), q("-26/27"));
}

TEST(FactorTable, AgreesWithDirectDiscValuation) {
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t n = 1; n <= 3; ++n) {
            if (p == 7 && n == 3) continue;
            for (std::int64_t j : {0, 1, 3}) {
                std::vector<mpq_class> f = oracle::compose_scaled_shift(oracle::cyclotomic(p, n), oracle::gamma_pow(p, -j));
                for (auto& c : f) c /= p;
                for (std::int64_t h = 0; h <= 2 * n + 1; ++h) {
                    const auto direct = oracle::disc_valuation(f, p, h);
                    EXPECT_EQ(factor_disc_valuation(p, n, j, h), Rational(*direct)) << p << " " << n << " " << h;
                    const auto lib = disc_valuation(GrowthSeries::polynomial(p, log_factor(p, n, j)), h).value;
                    EXPECT_EQ(lib, Valuation(Rational(*direct)));
                }
            }
        }
}

TEST(HalfLogValuation, SettledDiscsMatchFactorSum) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const HalfLog h = half_log(3, 0, s, 3);
        for (std::int64_t hh = 0; hh <= 6; ++hh) {
            if (!h.disc_valuation_settled(hh)) continue;
            EXPECT_EQ(disc_valuation(h.expansion, hh).value, Valuation(half_log_disc_valuation_sum(3, s, 3, hh)));
        }
    }
}

TEST(HalfLogValuation, PlusOddDiscValues) {
    // Exact values of log⁺_{3,0} on discs h = 1, 3, 5 (computed with three factors).
    const HalfLog h = half_log(3, 0, Sign::Plus, 3);
    EXPECT_EQ(disc_valuation(h.expansion, 1).value, Valuation(Rational(-1)));
    EXPECT_EQ(disc_valuation(h.expansion, 3).value, Valuation(q("-17/9")));
    EXPECT_EQ(disc_valuation(h.expansion, 5).value, Valuation(q("-233/81")));
    for (std::int64_t hh : {1, 3, 5}) {
        const auto direct = oracle::disc_valuation(
            [&] {
                std::vector<mpq_class> v;
                for (const auto& c : h.expansion.coeffs()) v.push_back(c.get());
                return v;
            }(),
            3, hh);
        EXPECT_EQ(plus_log_odd_disc_closed_form(3, hh), Rational(*direct));
    }
    EXPECT_THROW(plus_log_odd_disc_closed_form(3, 2), Error);
}

TEST(HalfLogValuation, OddShiftedValuesRiseTowardTheirLimit) {
    // v_h + h/2 over odd h rises toward −3/8; over even h it tends to −5/8.
    const HalfLog h = half_log(3, 0, Sign::Plus, 3);
    Rational prev(-100);
    for (std::int64_t hh : {1, 3, 5}) {
        const Rational v = disc_valuation(h.expansion, hh).value.value() + Rational(hh) / Rational(2);
        EXPECT_GT(v, prev);
        EXPECT_LT(v, q("-3/8"));
        prev = v;
    }
    EXPECT_EQ(order_bound(h.expansion, q("1/2"), 5).value, Valuation(Rational(-1)));
}

TEST(LogPi, SingletonEqualsHalfLog) {
    const LogPi l = log_pi(3, {0}, Sign::Plus, 2);
    EXPECT_EQ(l.expansion, half_log(3, 0, Sign::Plus, 2).expansion);
}

TEST(LogPi, ConstantTermForTwoCriticalIntegers) {
    const LogPi l = log_pi(3, {2, 1, 1}, Sign::Plus, 1);
    EXPECT_EQ(l.crit, (std::vector<std::int64_t>{1, 2}));
    const Polynomial phi9 = cyclotomic_poly(3, 2);
    const Rational expect = q("1/9") * (phi9(gamma_power(3, -1)) / Rational(3)) * (phi9(gamma_power(3, -2)) / Rational(3));
    EXPECT_EQ(l.expansion.coeff(0), expect);
    EXPECT_THROW(log_pi(3, {}, Sign::Plus, 1), Error);
}

TEST(LogPi, DiscValuationIsSumOverCrit) {
    const LogPi l = log_pi(3, {0, 1, 2}, Sign::Minus, 2);
    for (std::int64_t h = 0; h <= 4; ++h) {
        Rational sum;
        for (const auto& f : l.factored) sum += disc_valuation(f.expansion, h).value.value();
        EXPECT_EQ(disc_valuation(l.expansion, h).value, Valuation(sum));
    }
}

TEST(Vanishing, PlusLogAtNinthRoots) {
    for (std::int64_t j : {0, 1, 2}) {
        const HalfLog h = half_log(3, j, Sign::Plus, 1);
        const CyclotomicRing r2(3, 2), r1(3, 1);
        for (std::int64_t a : r2.primitive_exponents()) EXPECT_TRUE(evaluate_at_point(h, {j, 2, a}).is_zero());
        for (std::int64_t a : r1.primitive_exponents()) {
            const auto v = evaluate_at_point(h, {j, 1, a});
            EXPECT_FALSE(v.is_zero());
            EXPECT_FALSE(cyc_valuation(v).is_infinite());
        }
    }
    const HalfLog h0 = half_log(3, 0, Sign::Plus, 1);
    for (std::int64_t a : {1, 2})
        EXPECT_EQ(evaluate_at_point(h0, {0, 1, a}), CyclotomicElement::constant(CyclotomicRing(3, 1), q("1/3")));
}

TEST(Vanishing, MinusLogAtCubeRoots) {
    for (std::int64_t j : {0, 1, 2}) {
        const HalfLog h = half_log(3, j, Sign::Minus, 1);
        for (std::int64_t a : {1, 2}) EXPECT_TRUE(evaluate_at_point(h, {j, 1, a}).is_zero());
        for (std::int64_t a : CyclotomicRing(3, 2).primitive_exponents())
            EXPECT_FALSE(evaluate_at_point(h, {j, 2, a}).is_zero());
    }
}

TEST(Vanishing, FactoredAgreesWithExpansion) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const LogPi l = log_pi(3, {1, 2}, s, 1);
        for (std::int64_t m = 1; m <= 2; ++m)
            for (std::int64_t j : {0, 1, 2})
                for (std::int64_t a : CyclotomicRing(3, m).primitive_exponents()) {
                    const CyclotomicPoint pt{j, m, a};
                    EXPECT_EQ(evaluate_at_point(l, pt), evaluate_at_point(l.expansion, pt));
                }
    }
}

TEST(Vanishing, LogPiAtCriticalPoint) {
    const LogPi l = log_pi(3, {1, 2}, Sign::Plus, 1);
    EXPECT_TRUE(evaluate_at_point(l, {1, 2, 1}).is_zero());
    EXPECT_TRUE(evaluate_at_point(l, {2, 2, 4}).is_zero());
    EXPECT_FALSE(evaluate_at_point(l, {0, 2, 1}).is_zero());
}

TEST(Vanishing, ParityPatternUpToTheCap) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const HalfLog h = half_log(3, 1, s, 2);
        for (std::int64_t m = 1; m < h.next_missing_level(); ++m) {
            const bool expect_zero = m <= h.top_level() && ((m % 2 == 0) == (s == Sign::Plus));
            for (std::int64_t a : CyclotomicRing(3, m).primitive_exponents())
                EXPECT_EQ(evaluate_at_point(h, {1, m, a}).is_zero(), expect_zero) << "m=" << m;
        }
    }
}

TEST(Vanishing, LevelBeyondRetainedFactorsIsRejected) {
    const HalfLog h = half_log(3, 0, Sign::Plus, 1);
    EXPECT_EQ(h.next_missing_level(), 4);
    try {
        (void)evaluate_at_point(h, {0, 4, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LevelTooLow);
    }
    EXPECT_NO_THROW((void)evaluate_at_point(h, {0, 3, 1}));
    EXPECT_NO_THROW((void)evaluate_at_point(h, {0, 4, 1}, Exactness::AllowTruncated));
    EXPECT_THROW((void)evaluate_at_point(half_log(3, 0, Sign::Plus, 1, 3).expansion, {0, 1, 1}), Error);
}

TEST(Vanishing, OmittedFactorsAreOneBelowTheirLevel) {
    // At level 3 the factor Φ_{81}/p of M = 2 equals one, so M = 1 and M = 2 agree there.
    const HalfLog a = half_log(3, 0, Sign::Plus, 1), b = half_log(3, 0, Sign::Plus, 2);
    for (std::int64_t x : CyclotomicRing(3, 3).primitive_exponents())
        EXPECT_EQ(evaluate_at_point(a, {0, 3, x}), evaluate_at_point(b, {0, 3, x}));
}

TEST(Sign, Parsing) {
    EXPECT_EQ(parse_sign("+"), Sign::Plus);
    EXPECT_EQ(parse_sign("minus"), Sign::Minus);
    EXPECT_THROW(parse_sign("x"), Error);
    EXPECT_EQ(to_string(Sign::Minus), "-");
}
