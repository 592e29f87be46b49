#include "polluxe/pollack_log.hpp"

#include <algorithm>

#include "polluxe/error.hpp"

namespace polluxe {

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::Plus;
    if (s == "-" || s == "minus") return Sign::Minus;
    throw Error(ErrorKind::InvalidConfig, "sign must be \"+\" or \"-\", got \"" + s + "\"");
}

Polynomial log_factor(std::int64_t p, std::int64_t n, std::int64_t j) {
    const Polynomial phi = cyclotomic_poly(p, n);
    const Rational c = gamma_power(p, -j);
    return phi.compose_affine(c, c) * Rational(mpz_class(1), mpz_class(static_cast<long>(p)));
}

Rational factor_disc_valuation(std::int64_t p, std::int64_t n, std::int64_t /*j*/, std::int64_t h) {
    if (n < 1) throw Error(ErrorKind::InvalidConfig, "factor level must be >= 1");
    if (h <= n - 1) return Rational();
    return pow(Rational(p), n - h - 1) - Rational(1);
}

namespace {

GrowthSeries truncate_to(std::int64_t p, const Polynomial& f, std::optional<std::int64_t> D) {
    if (!D || *D >= f.degree()) return GrowthSeries::polynomial(p, f);
    std::vector<Rational> c(static_cast<std::size_t>(*D + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i);
    return GrowthSeries::truncated(p, std::move(c));
}

void check_level(std::int64_t p, std::int64_t M, std::optional<std::int64_t> D) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidConfig, "p must be prime");
    if (M < 1) throw Error(ErrorKind::InvalidConfig, "level M must be >= 1");
    if (D && *D < 0) throw Error(ErrorKind::InvalidConfig, "degree D must be >= 0");
}

std::vector<std::int64_t> retained_levels(Sign sign, std::int64_t M) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m <= M; ++m) out.push_back(sign == Sign::Plus ? 2 * m : 2 * m - 1);
    return out;
}

} // namespace

HalfLog half_log(std::int64_t p, std::int64_t j, Sign sign, std::int64_t M, std::optional<std::int64_t> D) {
    check_level(p, M, D);
    std::vector<LogFactor> factors;
    Polynomial product = Polynomial::constant(Rational(mpz_class(1), mpz_class(static_cast<long>(p))));
    for (std::int64_t n : retained_levels(sign, M)) {
        Polynomial f = log_factor(p, n, j);
        product = product * f;
        factors.push_back({n, std::move(f)});
    }
    GrowthSeries expansion = truncate_to(p, product, D);
    return HalfLog{p, j, sign, M, std::move(factors), std::move(product), std::move(expansion)};
}

Rational half_log_disc_valuation_sum(std::int64_t p, Sign sign, std::int64_t M, std::int64_t h) {
    Rational acc(-1);
    for (std::int64_t n : retained_levels(sign, M)) acc += factor_disc_valuation(p, n, 0, h);
    return acc;
}

Rational plus_log_odd_disc_closed_form(std::int64_t p, std::int64_t h) {
    if (h < 1 || h % 2 == 0) throw Error(ErrorKind::InvalidConfig, "closed form holds for odd h >= 1");
    const Rational p2(p * p);
    return (Rational(1) - pow(Rational(p), 1 - h)) / (p2 - Rational(1)) - Rational(mpz_class(h + 1), mpz_class(2));
}

LogPi log_pi(std::int64_t p, std::vector<std::int64_t> crit, Sign sign, std::int64_t M,
             std::optional<std::int64_t> D) {
    check_level(p, M, D);
    if (crit.empty()) throw Error(ErrorKind::InvalidConfig, "crit must be nonempty");
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    std::vector<HalfLog> factored;
    Polynomial product = Polynomial::constant(Rational(1));
    for (std::int64_t j : crit) {
        HalfLog h = half_log(p, j, sign, M);
        product = product * h.product;
        factored.push_back(std::move(h));
    }
    GrowthSeries expansion = truncate_to(p, product, D);
    return LogPi{p, std::move(crit), sign, M, std::move(factored), std::move(product), std::move(expansion)};
}

namespace {

// Φ_{p^n}(γ^{d} ζ^a) / p = (1/p) Σ_{i<p} γ^{d·i·p^{n−1}} ζ^{a·i·p^{n−1}}.
CyclotomicElement factor_at(std::int64_t p, std::int64_t n, std::int64_t shift, const CyclotomicRing& ring,
                            std::int64_t a) {
    const std::int64_t step = ipow(p, static_cast<std::uint64_t>(n - 1)).get_si();
    const std::int64_t order = ring.order();
    CyclotomicElement acc(ring);
    for (std::int64_t i = 0; i < p; ++i) {
        const std::int64_t exponent = static_cast<std::int64_t>(
            (static_cast<__int128>(a) * i % order) * (step % order) % order);
        acc += CyclotomicElement::root_power(ring, exponent, gamma_power(p, shift * i * step));
    }
    return acc * Rational(mpz_class(1), mpz_class(static_cast<long>(p)));
}

void check_point_level(std::int64_t next_missing, const CyclotomicPoint& pt, Exactness mode) {
    if (pt.m < 1) throw Error(ErrorKind::InvalidConfig, "point level m must be >= 1");
    if (mode == Exactness::RequireExact && pt.m >= next_missing)
        throw Error(ErrorKind::LevelTooLow, "point level " + std::to_string(pt.m) +
                                                " needs cyclotomic factors beyond the retained level " +
                                                std::to_string(next_missing - 2));
}

} // namespace

CyclotomicElement evaluate_at_point(const HalfLog& f, const CyclotomicPoint& pt, Exactness mode) {
    check_point_level(f.next_missing_level(), pt, mode);
    const CyclotomicRing ring(f.p, pt.m);
    CyclotomicElement acc = CyclotomicElement::constant(ring, f.prefactor());
    for (const auto& factor : f.factors) {
        acc = acc * factor_at(f.p, factor.level, pt.j - f.j, ring, pt.a);
        if (acc.is_zero()) break;
    }
    return acc;
}

CyclotomicElement evaluate_at_point(const LogPi& f, const CyclotomicPoint& pt, Exactness mode) {
    check_point_level(f.next_missing_level(), pt, mode);
    const CyclotomicRing ring(f.p, pt.m);
    CyclotomicElement acc = CyclotomicElement::constant(ring, Rational(1));
    for (const auto& h : f.factored) {
        acc = acc * evaluate_at_point(h, pt, mode);
        if (acc.is_zero()) break;
    }
    return acc;
}

CyclotomicElement evaluate_at_point(const GrowthSeries& f, const CyclotomicPoint& pt) {
    if (!f.exact())
        throw Error(ErrorKind::LevelTooLow, "a truncated series has no exact value at a cyclotomic point");
    const CyclotomicRing ring(f.p(), pt.m);
    return PointEvaluator(f.as_polynomial(), gamma_power(f.p(), pt.j)).at(ring, pt.a);
}

} // namespace polluxe
