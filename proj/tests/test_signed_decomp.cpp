#include <gtest/gtest.h>

#include "polluxe/error.hpp"
#include "polluxe/signed_decomp.hpp"
#include "support/oracles.hpp"

using namespace polluxe;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

GrowthSeries poly(std::int64_t p, const Polynomial& f) { return GrowthSeries::polynomial(p, f); }

DistributionSeries dist(std::int64_t p, std::vector<Polynomial> branches) {
    DistributionSeries d;
    d.p = p;
    for (auto& b : branches) d.branches.push_back(poly(p, b));
    return d;
}

DistributionSeries times(const LogPi& log, const DistributionSeries& l) {
    DistributionSeries out;
    out.p = l.p;
    for (const auto& b : l.branches) out.branches.push_back(series_mul(log.expansion, b));
    return out;
}

const std::vector<std::int64_t> kCrit{1, 2};

} // namespace

TEST(Distribution, Validation) {
    DistributionSeries d = dist(3, {Polynomial{1}});
    EXPECT_THROW(d.validate(), Error);
    d = dist(3, {Polynomial{1}, Polynomial{2}});
    EXPECT_NO_THROW(d.validate());
    d.branches[1] = GrowthSeries::polynomial(5, Polynomial{1});
    EXPECT_THROW(d.validate(), Error);
    EXPECT_EQ(DistributionSeries::uniform(poly(5, Polynomial{1, 1})).branches.size(), 4u);
}

TEST(GPair, Examples) {
    const auto mu = dist(3, {Polynomial{1, 2}, Polynomial{3, 0, 1}});
    auto [gp, gm] = g_pair(mu, mu);
    EXPECT_EQ(gp.branches, mu.branches);
    for (const auto& b : gm.branches) EXPECT_TRUE(b.is_zero());

    const auto neg = dist(3, {Polynomial{-1, -2}, Polynomial{-3, 0, -1}});
    std::tie(gp, gm) = g_pair(mu, neg);
    for (const auto& b : gp.branches) EXPECT_TRUE(b.is_zero());
    EXPECT_EQ(gm.branches, mu.branches);

    const auto other = dist(3, {Polynomial{q("1/2"), 7}, Polynomial{0, 1}});
    std::tie(gp, gm) = g_pair(mu, other);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(series_add(gp.branches[k], gm.branches[k]).as_polynomial(), mu.branches[k].as_polynomial());
        EXPECT_EQ(series_sub(gp.branches[k], gm.branches[k]).as_polynomial(), other.branches[k].as_polynomial());
    }
}

TEST(Parity, PlusLogTimesAnythingVanishesAtEvenLevels) {
    const LogPi log = log_pi(3, kCrit, Sign::Plus, 1);
    const auto g = times(log, dist(3, {Polynomial{2, 1, 5}, Polynomial{q("1/3"), 0, 0, 1}}));
    const auto r = parity_vanishing_check(g, Sign::Plus, kCrit, 3);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.points.size(), 2u * 2u * 6u);
}

TEST(Parity, ConstantBranchFailsEverywhere) {
    const auto g = dist(3, {Polynomial{1}, Polynomial{1}});
    const auto r = parity_vanishing_check(g, Sign::Minus, kCrit, 3);
    EXPECT_FALSE(r.passed);
    for (const auto& pt : r.points) {
        EXPECT_FALSE(pt.zero);
        EXPECT_EQ(pt.valuation, Valuation(0));
    }
}

TEST(Parity, OddLevelsOfPlusProductAreReportedNonzero) {
    const LogPi log = log_pi(3, kCrit, Sign::Plus, 1);
    const auto g = times(log, dist(3, {Polynomial{1, 1}, Polynomial{1}}));
    const auto r = parity_vanishing_check(g, Sign::Minus, kCrit, 1);
    EXPECT_FALSE(r.passed);
    for (const auto& pt : r.points) {
        EXPECT_FALSE(pt.zero);
        EXPECT_FALSE(pt.valuation.is_infinite());
    }
}

TEST(Extract, RoundTrip) {
    const LogPi log = log_pi(3, kCrit, Sign::Plus, 1);
    const auto mu = dist(3, {Polynomial{2, q("1/9"), 5}, Polynomial{-1, 0, 0, 4}});
    const auto l = extract_signed(times(log, mu), log);
    EXPECT_EQ(l.branches, mu.branches);
}

TEST(Extract, UnitIsNotDivisible) {
    const LogPi log = log_pi(3, kCrit, Sign::Plus, 1);
    try {
        (void)extract_signed(dist(3, {Polynomial{1}, Polynomial{1}}), log);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
    }
}

TEST(Extract, TruncatedModeAgreesWithExactPrefix) {
    const LogPi exact = log_pi(3, kCrit, Sign::Minus, 1);
    const LogPi trunc = log_pi(3, kCrit, Sign::Minus, 1, 5);
    const auto mu = dist(3, {Polynomial{3, 1, 4, 1, 5, 9, 2, 6}, Polynomial{2, 7, 1, 8}});
    const auto g = times(exact, mu);
    DistributionSeries g_trunc;
    g_trunc.p = 3;
    for (const auto& b : g.branches) {
        std::vector<Rational> c(b.coeffs().begin(), b.coeffs().begin() + 6);
        g_trunc.branches.push_back(GrowthSeries::truncated(3, std::move(c)));
    }
    const auto l = extract_signed(g_trunc, trunc, 5);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_FALSE(l.branches[k].exact());
        for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(l.branches[k].coeff(n), mu.branches[k].coeff(n));
    }
}

TEST(OrderReport, Examples) {
    const auto ones = dist(3, {Polynomial{1}, Polynomial{1}});
    for (const auto& e : order_report(ones, Rational(1), 2, 5)) EXPECT_EQ(e.value, Valuation(0));

    const auto bounded = dist(3, {Polynomial{4, -7, 3, 9}, Polynomial{1, 0, 2}});
    for (const auto& e : order_report(bounded, Rational(1), 2, 6)) EXPECT_GE(e.value, Valuation(0));

    // log⁻_{3,0} with r − #crit/2 = 1/2, against the factor table
    const HalfLog h = half_log(3, 0, Sign::Minus, 3);
    const auto l = DistributionSeries::uniform(h.expansion);
    const auto est = order_report(l, Rational(1), 1, 4);
    Rational expect(1000);
    for (std::int64_t hh = 0; hh <= 4; ++hh)
        expect = std::min(expect, half_log_disc_valuation_sum(3, Sign::Minus, 3, hh) + Rational(hh) / Rational(2));
    for (const auto& e : est) EXPECT_EQ(e.value, Valuation(expect));
}

TEST(Interpolate, Examples) {
    const auto one = dist(3, {Polynomial{1}, Polynomial{1}});
    const auto x = dist(3, {Polynomial{0, 1}, Polynomial{0, 1}});
    for (std::int64_t m = 1; m <= 3; ++m) {
        const CyclotomicRing ring(3, m);
        for (std::int64_t a : ring.primitive_exponents()) {
            EXPECT_EQ(interpolate_value(one, {1, 2, m, a}), CyclotomicElement::constant(ring, 1));
            EXPECT_EQ(interpolate_value(x, {0, 2, m, a}),
                      CyclotomicElement::root_power(ring, a, Rational(16)) - CyclotomicElement::constant(ring, 1));
        }
    }
    const auto root = dist(3, {log_factor(3, 2, 1), Polynomial{1}});
    for (std::int64_t a : CyclotomicRing(3, 2).primitive_exponents())
        EXPECT_TRUE(interpolate_value(root, {0, 1, 2, a}).is_zero());
    EXPECT_THROW(interpolate_value(one, {2, 0, 1, 1}), Error);
}

TEST(Synth, IsDeterministic) {
    const auto a = synth_instance(5, 3, kCrit, 1, 8, {Rational(0)});
    const auto b = synth_instance(5, 3, kCrit, 1, 8, {Rational(0)});
    EXPECT_EQ(a.l_alpha.branches, b.l_alpha.branches);
    const auto c = synth_instance(6, 3, kCrit, 1, 8, {Rational(0)});
    EXPECT_NE(a.l_alpha.branches, c.l_alpha.branches);
}

TEST(Synth, ConstructionMatchesDefinition) {
    const auto inst = synth_instance(1, 3, kCrit, 1, 0, {Rational(0)});
    for (std::size_t k = 0; k < 2; ++k) {
        const Rational cp = inst.truth.l_plus.branches[k].coeff(0), cm = inst.truth.l_minus.branches[k].coeff(0);
        EXPECT_EQ(inst.truth.l_plus.branches[k].trunc_degree(), 0);
        const Polynomial expect = inst.truth.log_plus.product * cp + inst.truth.log_minus.product * cm;
        EXPECT_EQ(inst.l_alpha.branches[k].as_polynomial(), expect);
    }
}

TEST(Synth, PlantedCoefficientsFollowTheProfile) {
    const auto inst = synth_instance(3, 3, kCrit, 1, 20, {q("1/2")});
    for (const auto& b : inst.truth.l_plus.branches)
        for (std::int64_t n = 0; n <= b.trunc_degree(); ++n) {
            const auto c = b.coeff(static_cast<std::size_t>(n));
            if (c.is_zero()) continue;
            EXPECT_GE(val_p(c, 3), Valuation(-(ell(static_cast<std::uint64_t>(n), 3) / 2)));
        }
}

TEST(Pipeline, RoundTripOverSeeds) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const auto inst = synth_instance(seed, 3, kCrit, 2, 10, {Rational(0)});
        const auto res = decompose(inst.l_alpha, inst.l_beta, inst.truth.log_plus, inst.truth.log_minus, 4,
                                   Rational(1), 6);
        EXPECT_TRUE(res.parity_plus.passed);
        EXPECT_TRUE(res.parity_minus.passed);
        EXPECT_EQ(res.l_plus.branches, inst.truth.l_plus.branches);
        EXPECT_EQ(res.l_minus.branches, inst.truth.l_minus.branches);
        EXPECT_TRUE(res.reconstructs);
        for (std::size_t k = 0; k < 2; ++k) {
            EXPECT_EQ(series_add(res.g_plus.branches[k], res.g_minus.branches[k]).as_polynomial(),
                      inst.l_alpha.branches[k].as_polynomial());
            EXPECT_EQ(series_sub(res.g_plus.branches[k], res.g_minus.branches[k]).as_polynomial(),
                      inst.l_beta.branches[k].as_polynomial());
        }
        for (const auto& e : res.order_plus) EXPECT_FALSE(e.value.is_infinite());
        EXPECT_TRUE(check_point_identities(inst.l_alpha, inst.l_beta, inst.truth, 3).holds());
    }
}

TEST(Pipeline, IdentityCheckCatchesABrokenPair) {
    auto inst = synth_instance(2, 3, kCrit, 1, 4, {Rational(0)});
    inst.l_beta = inst.l_alpha;  // L_β = L_α breaks the sign flip at even levels
    const auto r = check_point_identities(inst.l_alpha, inst.l_beta, inst.truth, 2);
    EXPECT_FALSE(r.holds());
    EXPECT_GT(r.checked, r.failures);
}

TEST(Pipeline, TamperedPlusPartIsNotDivisible) {
    auto inst = synth_instance(1, 3, kCrit, 2, 6, {Rational(0)});
    const auto bump = GrowthSeries::polynomial(3, Polynomial::monomial(Rational(1), 3));
    inst.l_alpha.branches[0] = series_add(inst.l_alpha.branches[0], bump);
    inst.l_beta.branches[0] = series_add(inst.l_beta.branches[0], bump);
    try {
        (void)decompose(inst.l_alpha, inst.l_beta, inst.truth.log_plus, inst.truth.log_minus, 4, Rational(1), 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
    }
}

TEST(Nonvanishing, UnitBranchHasNoExceptionalPoints) {
    const auto l = dist(3, {Polynomial{1, 3}, Polynomial{-2, 0, 6}});
    const auto r = nonvanishing_report(l, 2, kCrit, 3);
    EXPECT_EQ(r.center, 1);
    for (const auto& b : r.branches) {
        EXPECT_EQ(b.weierstrass.lambda, 0);
        EXPECT_TRUE(b.exceptional.empty());
        EXPECT_TRUE(b.within_bound);
        EXPECT_EQ(b.tested.size(), 2u + 6u + 18u);
    }
}

TEST(Nonvanishing, PlantedCyclotomicZeros) {
    const std::int64_t w = 2;
    const Polynomial planted = log_factor(3, 2, w / 2) * Polynomial{1, 3};
    const auto l = dist(3, {planted, Polynomial{1}});
    const auto r = nonvanishing_report(l, w, kCrit, 3);
    const auto& b = r.branches[0];
    EXPECT_GE(b.weierstrass.lambda, 6);
    ASSERT_EQ(b.exceptional.size(), 6u);
    for (const auto& pt : b.exceptional) {
        EXPECT_EQ(pt.m, 2);
        EXPECT_EQ(pt.j, 1);
    }
    EXPECT_TRUE(b.within_bound);
    EXPECT_TRUE(r.branches[1].exceptional.empty());
}

TEST(Nonvanishing, HypothesesAreEnforced) {
    const auto l = dist(3, {Polynomial{1}, Polynomial{1}});
    auto kind = [&](std::int64_t w, std::vector<std::int64_t> crit, const DistributionSeries& d) {
        try {
            (void)nonvanishing_report(d, w, crit, 1);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidConfig;
    };
    EXPECT_EQ(kind(3, {1}, l), ErrorKind::OddPurityWeight);
    EXPECT_EQ(kind(2, {1}, l), ErrorKind::CentralCritOnly);
    EXPECT_EQ(kind(2, {0, 1}, dist(3, {Polynomial{}, Polynomial{1}})), ErrorKind::ZeroSeries);
}
