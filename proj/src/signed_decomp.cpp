#include "polluxe/signed_decomp.hpp"

#include <algorithm>
#include <random>

#include "polluxe/error.hpp"

namespace polluxe {

DistributionSeries DistributionSeries::uniform(const GrowthSeries& f) {
    DistributionSeries out;
    out.p = f.p();
    out.branches.assign(static_cast<std::size_t>(f.p() - 1), f);
    return out;
}

void DistributionSeries::validate() const {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidConfig, "distribution prime must be prime");
    if (branches.size() != static_cast<std::size_t>(p - 1))
        throw Error(ErrorKind::InvalidConfig, "expected " + std::to_string(p - 1) + " branches, got " +
                                                  std::to_string(branches.size()));
    for (const auto& b : branches)
        if (b.p() != p) throw Error(ErrorKind::MismatchedPrime, "branch prime differs from distribution prime");
}

bool DistributionSeries::exact() const {
    return std::all_of(branches.begin(), branches.end(), [](const GrowthSeries& b) { return b.exact(); });
}

namespace {

void require_compatible(const DistributionSeries& a, const DistributionSeries& b) {
    a.validate();
    b.validate();
    if (a.p != b.p) throw Error(ErrorKind::MismatchedPrime, "distributions over different primes");
}

template <typename Op>
DistributionSeries branchwise(const DistributionSeries& a, const DistributionSeries& b, Op op) {
    DistributionSeries out;
    out.p = a.p;
    for (std::size_t k = 0; k < a.branches.size(); ++k) out.branches.push_back(op(a.branches[k], b.branches[k]));
    return out;
}

std::vector<std::int64_t> levels_of_parity(Sign sign, std::int64_t m_max) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m <= m_max; ++m)
        if ((m % 2 == 0) == (sign == Sign::Plus)) out.push_back(m);
    return out;
}

PointCheck make_check(std::int64_t branch, const CyclotomicPoint& pt, const CyclotomicElement& value,
                      bool with_valuation) {
    PointCheck c;
    c.branch = branch;
    c.point = pt;
    c.zero = value.is_zero();
    if (!c.zero && with_valuation) c.valuation = cyc_valuation(value);
    return c;
}

void require_exact_branch(const GrowthSeries& b) {
    if (!b.exact())
        throw Error(ErrorKind::LevelTooLow, "a truncated branch has no exact value at a cyclotomic point");
}

} // namespace

std::pair<DistributionSeries, DistributionSeries> g_pair(const DistributionSeries& l_alpha,
                                                         const DistributionSeries& l_beta) {
    require_compatible(l_alpha, l_beta);
    const Rational half(mpz_class(1), mpz_class(2));
    auto plus = branchwise(l_alpha, l_beta, [&](const GrowthSeries& f, const GrowthSeries& g) {
        return series_scale(series_add(f, g), half);
    });
    auto minus = branchwise(l_alpha, l_beta, [&](const GrowthSeries& f, const GrowthSeries& g) {
        return series_scale(series_sub(f, g), half);
    });
    return {std::move(plus), std::move(minus)};
}

ParityReport parity_vanishing_check(const DistributionSeries& g, Sign sign, std::span<const std::int64_t> crit,
                                    std::int64_t m_max) {
    g.validate();
    ParityReport out;
    out.sign = sign;
    const auto levels = levels_of_parity(sign, m_max);
    for (std::size_t k = 0; k < g.branches.size(); ++k) {
        const auto& branch = g.branches[k];
        require_exact_branch(branch);
        for (std::int64_t j : crit) {
            const PointEvaluator eval(branch.as_polynomial(), gamma_power(g.p, j));
            for (std::int64_t m : levels) {
                const CyclotomicRing ring(g.p, m);
                for (std::int64_t a : ring.primitive_exponents()) {
                    PointCheck c = make_check(static_cast<std::int64_t>(k), {j, m, a}, eval.at(ring, a), true);
                    out.passed = out.passed && c.zero;
                    out.points.push_back(std::move(c));
                }
            }
        }
    }
    return out;
}

DistributionSeries extract_signed(const DistributionSeries& g, const LogPi& log,
                                  std::optional<std::int64_t> out_degree) {
    g.validate();
    if (g.p != log.p) throw Error(ErrorKind::MismatchedPrime, "log and distribution over different primes");
    DistributionSeries out;
    out.p = g.p;
    for (const auto& branch : g.branches) {
        if (branch.exact() && log.expansion.exact()) {
            const std::int64_t deg = std::max<std::int64_t>(0, branch.as_polynomial().degree() - log.product.degree());
            out.branches.push_back(series_div(branch, log.expansion, out_degree.value_or(deg), DivisionMode::Exact));
        } else {
            const std::int64_t deg = std::max<std::int64_t>(0, branch.trunc_degree() - log.product.degree());
            out.branches.push_back(series_div(branch, log.expansion, out_degree.value_or(deg), DivisionMode::Formal));
        }
    }
    return out;
}

std::vector<ValuationEstimate> order_report(const DistributionSeries& l, const Rational& r, std::int64_t crit_size,
                                            std::int64_t h_max) {
    l.validate();
    const Rational rate = r - Rational(mpz_class(crit_size), mpz_class(2));
    std::vector<ValuationEstimate> out;
    for (const auto& b : l.branches) out.push_back(order_bound(b, rate, h_max));
    return out;
}

CyclotomicElement interpolate_value(const DistributionSeries& mu, const InterpolationPoint& pt) {
    mu.validate();
    if (pt.branch < 0 || pt.branch >= static_cast<std::int64_t>(mu.branches.size()))
        throw Error(ErrorKind::InvalidConfig, "tame branch index out of range");
    return evaluate_at_point(mu.branches[static_cast<std::size_t>(pt.branch)], CyclotomicPoint{pt.j, pt.m, pt.a});
}

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::int64_t draw_nonzero(std::mt19937_64& rng) {
    const std::int64_t mag = draw(rng, 1, 9);
    return draw(rng, 0, 1) == 0 ? mag : -mag;
}

GrowthSeries planted_branch(std::mt19937_64& rng, std::int64_t p, std::int64_t degree, const OrderProfile& profile) {
    const std::int64_t d = draw(rng, 0, degree);
    std::vector<Rational> c(static_cast<std::size_t>(d + 1));
    for (std::int64_t n = 0; n <= d; ++n) {
        const std::int64_t base = (n == 0 || n == d) ? draw_nonzero(rng) : draw(rng, -9, 9);
        const Rational growth = profile.rate * Rational(ell(static_cast<std::uint64_t>(n), p));
        mpz_class shift;
        mpz_fdiv_q(shift.get_mpz_t(), growth.get().get_num_mpz_t(), growth.get().get_den_mpz_t());
        c[static_cast<std::size_t>(n)] = Rational(base) * pow(Rational(p), -shift.get_si());
    }
    return GrowthSeries::polynomial(p, Polynomial(std::move(c)));
}

DistributionSeries times_log(const LogPi& log, const DistributionSeries& l) {
    DistributionSeries out;
    out.p = l.p;
    for (const auto& b : l.branches) out.branches.push_back(series_mul(log.expansion, b));
    return out;
}

} // namespace

SynthInstance synth_instance(std::uint64_t seed, std::int64_t p, std::vector<std::int64_t> crit, std::int64_t M,
                             std::int64_t degree, const OrderProfile& profile) {
    if (degree < 0) throw Error(ErrorKind::InvalidConfig, "planted degree must be >= 0");
    if (profile.rate < Rational(0)) throw Error(ErrorKind::InvalidConfig, "order profile rate must be >= 0");
    std::mt19937_64 rng(seed);
    LogPi log_plus = log_pi(p, crit, Sign::Plus, M);
    LogPi log_minus = log_pi(p, crit, Sign::Minus, M);

    DistributionSeries l_plus, l_minus;
    l_plus.p = l_minus.p = p;
    l_plus.claimed_order = l_minus.claimed_order = profile.rate;
    for (std::int64_t k = 0; k + 1 < p; ++k) {
        l_plus.branches.push_back(planted_branch(rng, p, degree, profile));
        l_minus.branches.push_back(planted_branch(rng, p, degree, profile));
    }
    DistributionSeries g_plus = times_log(log_plus, l_plus);
    DistributionSeries g_minus = times_log(log_minus, l_minus);
    DistributionSeries l_alpha = branchwise(g_plus, g_minus, series_add);
    DistributionSeries l_beta = branchwise(g_plus, g_minus, series_sub);
    return SynthInstance{std::move(l_alpha), std::move(l_beta),
                         SignedPair{std::move(g_plus), std::move(g_minus), std::move(l_plus), std::move(l_minus),
                                    std::move(log_plus), std::move(log_minus)}};
}

IdentityReport check_point_identities(const DistributionSeries& l_alpha, const DistributionSeries& l_beta,
                                      const SignedPair& pair, std::int64_t m_max) {
    require_compatible(l_alpha, l_beta);
    IdentityReport out;
    const std::int64_t p = l_alpha.p;
    for (std::size_t k = 0; k < l_alpha.branches.size(); ++k) {
        require_exact_branch(l_alpha.branches[k]);
        require_exact_branch(l_beta.branches[k]);
        for (std::int64_t j : pair.log_plus.crit) {
            const Rational c = gamma_power(p, j);
            const PointEvaluator ea(l_alpha.branches[k].as_polynomial(), c);
            const PointEvaluator eb(l_beta.branches[k].as_polynomial(), c);
            const PointEvaluator ep(pair.l_plus.branches[k].as_polynomial(), c);
            const PointEvaluator em(pair.l_minus.branches[k].as_polynomial(), c);
            for (std::int64_t m = 1; m <= m_max; ++m) {
                const CyclotomicRing ring(p, m);
                const bool odd = (m % 2 != 0);
                for (std::int64_t a : ring.primitive_exponents()) {
                    const CyclotomicPoint pt{j, m, a};
                    const CyclotomicElement va = ea.at(ring, a);
                    const CyclotomicElement vb = eb.at(ring, a);
                    const CyclotomicElement rhs =
                        odd ? evaluate_at_point(pair.log_plus, pt, Exactness::AllowTruncated) * ep.at(ring, a)
                            : evaluate_at_point(pair.log_minus, pt, Exactness::AllowTruncated) * em.at(ring, a);
                    const bool ok = (va == rhs) && (odd ? vb == va : vb == -va);
                    ++out.checked;
                    if (!ok) ++out.failures;
                }
            }
        }
    }
    return out;
}

namespace {

bool reproduces(const LogPi& log, const DistributionSeries& l, const DistributionSeries& g) {
    for (std::size_t k = 0; k < g.branches.size(); ++k) {
        if (!l.branches[k].exact() || !g.branches[k].exact() || !log.expansion.exact()) return false;
        if (log.product * l.branches[k].as_polynomial() != g.branches[k].as_polynomial()) return false;
    }
    return true;
}

} // namespace

DecompositionResult decompose(const DistributionSeries& l_alpha, const DistributionSeries& l_beta,
                              const LogPi& log_plus, const LogPi& log_minus, std::int64_t m_max, const Rational& r,
                              std::int64_t h_max) {
    DecompositionResult out;
    std::tie(out.g_plus, out.g_minus) = g_pair(l_alpha, l_beta);
    out.parity_plus = parity_vanishing_check(out.g_plus, Sign::Plus, log_plus.crit, m_max);
    out.parity_minus = parity_vanishing_check(out.g_minus, Sign::Minus, log_minus.crit, m_max);
    out.l_plus = extract_signed(out.g_plus, log_plus);
    out.l_minus = extract_signed(out.g_minus, log_minus);
    const auto crit_size = static_cast<std::int64_t>(log_plus.crit.size());
    out.order_plus = order_report(out.l_plus, r, crit_size, h_max);
    out.order_minus = order_report(out.l_minus, r, crit_size, h_max);
    out.reconstructs = reproduces(log_plus, out.l_plus, out.g_plus) && reproduces(log_minus, out.l_minus, out.g_minus);
    return out;
}

NonvanishingReport nonvanishing_report(const DistributionSeries& l, std::int64_t w, std::span<const std::int64_t> crit,
                                       std::int64_t m_max, bool with_valuations) {
    l.validate();
    if (w % 2 != 0) throw Error(ErrorKind::OddPurityWeight, "purity weight w must be even for a central value");
    if (crit.size() == 1 && crit.front() * 2 == w)
        throw Error(ErrorKind::CentralCritOnly, "nonvanishing requires crit != {w/2}");
    NonvanishingReport out;
    out.w = w;
    out.center = w / 2;
    for (std::size_t k = 0; k < l.branches.size(); ++k) {
        const auto& branch = l.branches[k];
        if (branch.is_zero())
            throw Error(ErrorKind::ZeroSeries, "branch " + std::to_string(k) + " vanishes identically");
        require_exact_branch(branch);
        BranchNonvanishing b;
        b.branch = static_cast<std::int64_t>(k);
        b.weierstrass = weierstrass_invariants(branch);
        const PointEvaluator eval(branch.as_polynomial(), gamma_power(l.p, out.center));
        for (std::int64_t m = 1; m <= m_max; ++m) {
            const CyclotomicRing ring(l.p, m);
            for (std::int64_t a : ring.primitive_exponents()) {
                PointCheck c = make_check(b.branch, {out.center, m, a}, eval.at(ring, a), with_valuations);
                if (c.zero) b.exceptional.push_back(c.point);
                b.tested.push_back(std::move(c));
            }
        }
        b.within_bound = static_cast<std::int64_t>(b.exceptional.size()) <= b.weierstrass.lambda;
        out.branches.push_back(std::move(b));
    }
    return out;
}

} // namespace polluxe
