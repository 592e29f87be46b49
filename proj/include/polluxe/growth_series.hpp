#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polluxe/polynomial.hpp"
#include "polluxe/rational.hpp"

namespace polluxe {

/// A power series Σ a_n X^n over Q known through X^D.
///
/// When `exact()` holds the represented coefficients are the whole series,
/// i.e. it is a polynomial and nothing was truncated. Otherwise the terms of
/// degree > D are unknown and every valuation computed from the series is an
/// estimate over the represented range only.
class GrowthSeries {
public:
    /// An exact polynomial; D is its degree (0 for the zero polynomial).
    static GrowthSeries polynomial(std::int64_t p, const Polynomial& f);
    /// Coefficients a_0..a_D of a series truncated at D = coeffs.size() - 1.
    static GrowthSeries truncated(std::int64_t p, std::vector<Rational> coeffs);
    /// Generic constructor; coeffs must be nonempty.
    GrowthSeries(std::int64_t p, std::vector<Rational> coeffs, bool exact);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t trunc_degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool exact() const noexcept { return exact_; }
    std::span<const Rational> coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t n) const { return n < c_.size() ? c_[n] : Rational(); }
    bool is_zero() const;
    /// The represented coefficients as a polynomial.
    Polynomial as_polynomial() const { return Polynomial(c_); }

    friend bool operator==(const GrowthSeries&, const GrowthSeries&) = default;

private:
    std::int64_t p_ = 0;
    std::vector<Rational> c_;
    bool exact_ = true;
};

/// A valuation together with whether it is exact or only an estimate over the
/// represented coefficient range of a truncated series.
struct ValuationEstimate {
    Valuation value;
    bool certified = true;
};

/// u_h = 1 / (p^h (p − 1)), the valuation radius of the h-th closed disc.
Rational disc_radius(std::int64_t p, std::int64_t h);

/// min_n (v_p(a_n) + n·u_h): the sup-norm valuation on the closed disc of radius valuation u_h.
ValuationEstimate disc_valuation(const GrowthSeries& f, std::int64_t h);

/// min_{0≤h≤h_max} (disc_valuation(f, h) + r·h), a finite-range witness of v_r(f).
ValuationEstimate order_bound(const GrowthSeries& f, const Rational& r, std::int64_t h_max);

/// ℓ(n) = least m ≥ 0 with n < p^m.
std::int64_t ell(std::uint64_t n, std::int64_t p);

/// min_n (v_p(a_n) + r·ℓ(n)) over the represented coefficients.
Valuation coeff_order_witness(const GrowthSeries& f, const Rational& r);

GrowthSeries series_add(const GrowthSeries& f, const GrowthSeries& g);
GrowthSeries series_sub(const GrowthSeries& f, const GrowthSeries& g);
GrowthSeries series_scale(const GrowthSeries& f, const Rational& s);
GrowthSeries series_mul(const GrowthSeries& f, const GrowthSeries& g);

enum class DivisionMode {
    /// Return the exact quotient when the inputs are exact polynomials and the
    /// division is exact; otherwise the formal quotient up to `out_degree`.
    Formal,
    /// Exact polynomial inputs must divide exactly; NotDivisible otherwise.
    Exact,
};

/// q with q·g ≡ f mod X^{out_degree+1}.
/// Throws DivisorZero for g = 0 and NotDivisible when g's X-adic order
/// exceeds f's, or (Exact mode) when a polynomial remainder is left.
GrowthSeries series_div(const GrowthSeries& f, const GrowthSeries& g, std::int64_t out_degree,
                        DivisionMode mode = DivisionMode::Formal);

struct PolygonVertex {
    std::int64_t index;
    Rational value;
    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

/// Lower convex hull of {(n, v_p(a_n)) : a_n ≠ 0}; slopes strictly increase.
struct NewtonPolygon {
    std::vector<PolygonVertex> vertices;

    std::vector<Rational> slopes() const;
};

/// Throws ZeroSeries.
NewtonPolygon newton_polygon(const GrowthSeries& f);

struct WeierstrassData {
    Rational mu;
    std::int64_t lambda = 0;
    bool certified = false;
};

/// mu = min v_p(a_n), lambda = least n attaining it. A truncated series is
/// only certified when `tail_bound` (a lower bound for v_p(a_n), n > D) exceeds mu.
/// Throws ZeroSeries.
WeierstrassData weierstrass_invariants(const GrowthSeries& f,
                                       const std::optional<Rational>& tail_bound = std::nullopt);

} // namespace polluxe
