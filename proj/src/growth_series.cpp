#include "polluxe/growth_series.hpp"

#include <algorithm>
#include <limits>

#include "polluxe/error.hpp"

namespace polluxe {

GrowthSeries::GrowthSeries(std::int64_t p, std::vector<Rational> coeffs, bool exact)
    : p_(p), c_(std::move(coeffs)), exact_(exact) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidConfig, "series prime must be prime");
    if (c_.empty()) throw Error(ErrorKind::InvalidConfig, "series needs at least one coefficient");
}

GrowthSeries GrowthSeries::polynomial(std::int64_t p, const Polynomial& f) {
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    if (c.empty()) c.emplace_back();
    return GrowthSeries(p, std::move(c), true);
}

GrowthSeries GrowthSeries::truncated(std::int64_t p, std::vector<Rational> coeffs) {
    return GrowthSeries(p, std::move(coeffs), false);
}

bool GrowthSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational disc_radius(std::int64_t p, std::int64_t h) {
    if (h < 0) throw Error(ErrorKind::InvalidConfig, "disc index h must be nonnegative");
    return Rational(mpz_class(1), ipow(p, static_cast<std::uint64_t>(h)) * (p - 1));
}

ValuationEstimate disc_valuation(const GrowthSeries& f, std::int64_t h) {
    const Rational u = disc_radius(f.p(), h);
    Valuation best = Valuation::infinity();
    const auto c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        Valuation v = val_p(c[n], f.p()) + Valuation(u * Rational(static_cast<std::int64_t>(n)));
        if (v < best) best = std::move(v);
    }
    return {best, f.exact()};
}

ValuationEstimate order_bound(const GrowthSeries& f, const Rational& r, std::int64_t h_max) {
    if (h_max < 0) throw Error(ErrorKind::InvalidConfig, "h_max must be nonnegative");
    Valuation best = Valuation::infinity();
    for (std::int64_t h = 0; h <= h_max; ++h) {
        Valuation v = disc_valuation(f, h).value + Valuation(r * Rational(h));
        if (v < best) best = std::move(v);
    }
    return {best, f.exact()};
}

std::int64_t ell(std::uint64_t n, std::int64_t p) {
    std::int64_t m = 0;
    // n < p^m  <=>  floor(n / p^{m}) == 0 after m divisions.
    while (n > 0) {
        n /= static_cast<std::uint64_t>(p);
        ++m;
    }
    return m;
}

Valuation coeff_order_witness(const GrowthSeries& f, const Rational& r) {
    Valuation best = Valuation::infinity();
    const auto c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        Valuation v = val_p(c[n], f.p()) + Valuation(r * Rational(ell(n, f.p())));
        if (v < best) best = std::move(v);
    }
    return best;
}

namespace {

void require_same_prime(const GrowthSeries& f, const GrowthSeries& g) {
    if (f.p() != g.p()) throw Error(ErrorKind::MismatchedPrime, "series over different primes");
}

// Truncation degree of a binary result: exact operands lose nothing.
std::int64_t joint_degree(const GrowthSeries& f, const GrowthSeries& g) {
    if (f.exact() && g.exact()) return std::numeric_limits<std::int64_t>::max();
    if (f.exact()) return g.trunc_degree();
    if (g.exact()) return f.trunc_degree();
    return std::min(f.trunc_degree(), g.trunc_degree());
}

GrowthSeries combine(const GrowthSeries& f, const GrowthSeries& g, int sign) {
    require_same_prime(f, g);
    const bool exact = f.exact() && g.exact();
    const std::int64_t cap = joint_degree(f, g);
    const std::int64_t len = exact ? std::max(f.trunc_degree(), g.trunc_degree()) + 1 : cap + 1;
    std::vector<Rational> c(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = sign > 0 ? f.coeff(i) + g.coeff(i) : f.coeff(i) - g.coeff(i);
    if (exact) return GrowthSeries::polynomial(f.p(), Polynomial(std::move(c)));
    return GrowthSeries(f.p(), std::move(c), false);
}

std::size_t x_adic_order(std::span<const Rational> c) {
    std::size_t v = 0;
    while (v < c.size() && c[v].is_zero()) ++v;
    return v;
}

} // namespace

GrowthSeries series_add(const GrowthSeries& f, const GrowthSeries& g) { return combine(f, g, +1); }

GrowthSeries series_sub(const GrowthSeries& f, const GrowthSeries& g) { return combine(f, g, -1); }

GrowthSeries series_scale(const GrowthSeries& f, const Rational& s) {
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) x *= s;
    if (f.exact()) return GrowthSeries::polynomial(f.p(), Polynomial(std::move(c)));
    return GrowthSeries(f.p(), std::move(c), false);
}

GrowthSeries series_mul(const GrowthSeries& f, const GrowthSeries& g) {
    require_same_prime(f, g);
    if (f.exact() && g.exact()) return GrowthSeries::polynomial(f.p(), f.as_polynomial() * g.as_polynomial());
    const std::int64_t cap = joint_degree(f, g);
    std::vector<Rational> c(static_cast<std::size_t>(cap + 1));
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    for (std::size_t i = 0; i < fc.size() && i < c.size(); ++i) {
        if (fc[i].is_zero()) continue;
        for (std::size_t j = 0; j < gc.size() && i + j < c.size(); ++j) c[i + j] += fc[i] * gc[j];
    }
    return GrowthSeries(f.p(), std::move(c), false);
}

GrowthSeries series_div(const GrowthSeries& f, const GrowthSeries& g, std::int64_t out_degree, DivisionMode mode) {
    require_same_prime(f, g);
    if (g.is_zero()) throw Error(ErrorKind::DivisorZero, "division by the zero series");
    if (out_degree < 0) throw Error(ErrorKind::InvalidConfig, "division output degree must be nonnegative");

    if (f.exact() && g.exact()) {
        auto [q, r] = divmod(f.as_polynomial(), g.as_polynomial());
        if (r.is_zero()) return GrowthSeries::polynomial(f.p(), q);
        if (mode == DivisionMode::Exact)
            throw Error(ErrorKind::NotDivisible, "divisor leaves a nonzero polynomial remainder");
    } else if (mode == DivisionMode::Exact) {
        throw Error(ErrorKind::InvalidConfig, "exact division requires exact polynomial inputs");
    }

    const auto gc = g.coeffs();
    const std::size_t v = x_adic_order(gc);
    for (std::size_t i = 0; i < v && i < f.coeffs().size(); ++i) {
        if (!f.coeffs()[i].is_zero())
            throw Error(ErrorKind::NotDivisible, "X-adic order of the divisor exceeds that of the dividend");
    }

    // Normalize g by the largest power of p dividing its represented coefficients.
    std::int64_t k = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : gc)
        if (!c.is_zero()) k = std::min(k, val_p(c, g.p()).value().num().get_si());
    const Rational scale = pow(Rational(g.p()), -k);

    std::int64_t cap = out_degree;
    if (!f.exact()) cap = std::min(cap, f.trunc_degree() - static_cast<std::int64_t>(v));
    if (!g.exact()) cap = std::min(cap, g.trunc_degree() - static_cast<std::int64_t>(v));
    if (cap < 0) throw Error(ErrorKind::InvalidConfig, "inputs too short for the requested quotient");

    std::vector<Rational> gn;
    gn.reserve(gc.size() - v);
    for (std::size_t i = v; i < gc.size(); ++i) gn.push_back(gc[i] * scale);
    const Rational inv0 = Rational(1) / gn[0];

    std::vector<Rational> q(static_cast<std::size_t>(cap + 1));
    for (std::size_t n = 0; n < q.size(); ++n) {
        Rational acc = f.coeff(n + v);
        for (std::size_t i = 1; i <= n && i < gn.size(); ++i) acc -= gn[i] * q[n - i];
        q[n] = acc * inv0;
    }
    for (auto& c : q) c *= scale;
    return GrowthSeries(f.p(), std::move(q), false);
}

std::vector<Rational> NewtonPolygon::slopes() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        out.push_back((vertices[i].value - vertices[i - 1].value) /
                      Rational(vertices[i].index - vertices[i - 1].index));
    return out;
}

NewtonPolygon newton_polygon(const GrowthSeries& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroSeries, "Newton polygon of the zero series");
    std::vector<PolygonVertex> hull;
    const auto c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        PolygonVertex pt{static_cast<std::int64_t>(n), val_p(c[n], f.p()).value()};
        // Pop while the last two hull points and pt fail to turn strictly upward.
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const Rational cross = (b.value - a.value) * Rational(pt.index - a.index) -
                                   (pt.value - a.value) * Rational(b.index - a.index);
            if (cross >= Rational(0)) hull.pop_back();
            else break;
        }
        hull.push_back(std::move(pt));
    }
    return {std::move(hull)};
}

WeierstrassData weierstrass_invariants(const GrowthSeries& f, const std::optional<Rational>& tail_bound) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroSeries, "Weierstrass invariants of the zero series");
    WeierstrassData out;
    bool found = false;
    const auto c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n].is_zero()) continue;
        Rational v = val_p(c[n], f.p()).value();
        if (!found || v < out.mu) {
            out.mu = std::move(v);
            out.lambda = static_cast<std::int64_t>(n);
            found = true;
        }
    }
    out.certified = f.exact() || (tail_bound && *tail_bound > out.mu);
    return out;
}

} // namespace polluxe
