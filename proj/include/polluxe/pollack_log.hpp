#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polluxe/cyclotomic.hpp"
#include "polluxe/growth_series.hpp"
#include "polluxe/polynomial.hpp"

namespace polluxe {

enum class Sign { Plus, Minus };

std::string to_string(Sign s);
Sign parse_sign(const std::string& s);

/// Φ_{p^n}(γ^{-j}(1+X)) / p as an exact polynomial in X.
Polynomial log_factor(std::int64_t p, std::int64_t n, std::int64_t j);

/// Disc valuation of log_factor(p, n, j) on the h-th disc in closed form:
/// 0 for h ≤ n − 1 and p^{n−h−1} − 1 beyond. Independent of j.
Rational factor_disc_valuation(std::int64_t p, std::int64_t n, std::int64_t j, std::int64_t h);

/// A point X = γ^j ζ^a − 1 with ζ the distinguished primitive p^m-th root.
struct CyclotomicPoint {
    std::int64_t j = 0;
    std::int64_t m = 1;
    std::int64_t a = 1;
};

enum class Exactness { RequireExact, AllowTruncated };

struct LogFactor {
    std::int64_t level;  // n in Φ_{p^n}
    Polynomial poly;
};

/// The half-logarithm log^±_{p,j} cut off after M cyclotomic factors:
///   (1/p) ∏ Φ_{p^k}(γ^{-j}(1+X))/p,  k = 2,4,…,2M (plus) or 1,3,…,2M−1 (minus).
/// Factors of level > top_level() are omitted; each equals 1 at every point of
/// level below its own, so evaluations at levels below next_missing_level()
/// agree in zero-status with the infinite product.
struct HalfLog {
    std::int64_t p;
    std::int64_t j;
    Sign sign;
    std::int64_t level;  // M
    std::vector<LogFactor> factors;
    Polynomial product;      // prefactor · ∏ factors, untruncated
    GrowthSeries expansion;  // product truncated at the requested degree

    Rational prefactor() const { return Rational(mpz_class(1), mpz_class(static_cast<long>(p))); }
    std::int64_t top_level() const { return sign == Sign::Plus ? 2 * level : 2 * level - 1; }
    std::int64_t next_missing_level() const { return top_level() + 2; }
    /// Disc valuations at h agree with the infinite product: every omitted factor
    /// has level ≥ h + 1 and so disc valuation 0 there.
    bool disc_valuation_settled(std::int64_t h) const { return next_missing_level() >= h + 1; }
};

/// Throws InvalidConfig unless M ≥ 1 and (when given) D ≥ 0. Without D the
/// expansion is the exact product polynomial.
HalfLog half_log(std::int64_t p, std::int64_t j, Sign sign, std::int64_t M,
                 std::optional<std::int64_t> D = std::nullopt);

/// −1 + Σ over retained levels n of factor_disc_valuation(p, n, ·, h).
Rational half_log_disc_valuation_sum(std::int64_t p, Sign sign, std::int64_t M, std::int64_t h);

/// Disc valuation of log^+_{p,j} at odd h once M ≥ (h+1)/2:
///   (1 − p^{1−h})/(p² − 1) − 1/2 − h/2.
Rational plus_log_odd_disc_closed_form(std::int64_t p, std::int64_t h);

/// log^±_Π = ∏_{j ∈ crit} log^±_{p,j}.
struct LogPi {
    std::int64_t p;
    std::vector<std::int64_t> crit;
    Sign sign;
    std::int64_t level;
    std::vector<HalfLog> factored;
    Polynomial product;
    GrowthSeries expansion;

    std::int64_t next_missing_level() const { return factored.front().next_missing_level(); }
};

/// crit must be nonempty; it is sorted and deduplicated.
LogPi log_pi(std::int64_t p, std::vector<std::int64_t> crit, Sign sign, std::int64_t M,
             std::optional<std::int64_t> D = std::nullopt);

/// Value of the retained product at the point, computed factor by factor.
/// With RequireExact, throws LevelTooLow when pt.m ≥ next_missing_level().
CyclotomicElement evaluate_at_point(const HalfLog& f, const CyclotomicPoint& pt,
                                    Exactness mode = Exactness::RequireExact);
CyclotomicElement evaluate_at_point(const LogPi& f, const CyclotomicPoint& pt,
                                    Exactness mode = Exactness::RequireExact);
/// Exact polynomials only; a truncated series throws LevelTooLow.
CyclotomicElement evaluate_at_point(const GrowthSeries& f, const CyclotomicPoint& pt);

} // namespace polluxe
