#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polluxe/cyclotomic.hpp"
#include "polluxe/growth_series.hpp"
#include "polluxe/pollack_log.hpp"

namespace polluxe {

/// A distribution on Z_p^× through its Amice transform: one power series per
/// tame branch k = 0..p−2 (the branch of ω^k on (Z/pZ)^×).
struct DistributionSeries {
    std::int64_t p = 0;
    std::vector<GrowthSeries> branches;
    std::optional<Rational> claimed_order;

    /// The same series on every branch.
    static DistributionSeries uniform(const GrowthSeries& f);
    /// Throws MismatchedPrime / InvalidConfig on malformed branch data.
    void validate() const;
    bool exact() const;
};

/// G^± = (L_α ± L_β) / 2, branchwise.
std::pair<DistributionSeries, DistributionSeries> g_pair(const DistributionSeries& l_alpha,
                                                         const DistributionSeries& l_beta);

struct PointCheck {
    std::int64_t branch = 0;
    CyclotomicPoint point;
    bool zero = false;
    Valuation valuation;  // +∞ when zero
};

struct ParityReport {
    Sign sign = Sign::Plus;
    std::vector<PointCheck> points;
    bool passed = true;  // every point evaluated to exactly zero
};

/// Evaluates g on every branch at γ^j ζ − 1 for j ∈ crit, every level m ≤ m_max
/// of the sign's parity (even for +, odd for −) and every primitive ζ.
ParityReport parity_vanishing_check(const DistributionSeries& g, Sign sign, std::span<const std::int64_t> crit,
                                    std::int64_t m_max);

/// Branchwise quotient g / log^±_Π. On exact inputs the division is exact
/// (NotDivisible when g is outside the ideal); otherwise formal up to out_degree,
/// which defaults to deg g − deg log.
DistributionSeries extract_signed(const DistributionSeries& g, const LogPi& log,
                                  std::optional<std::int64_t> out_degree = std::nullopt);

/// order_bound(branch, r − crit_size/2, h_max) per branch.
std::vector<ValuationEstimate> order_report(const DistributionSeries& l, const Rational& r, std::int64_t crit_size,
                                            std::int64_t h_max);

struct InterpolationPoint {
    std::int64_t branch = 0;
    std::int64_t j = 0;
    std::int64_t m = 1;
    std::int64_t a = 1;  // which primitive p^m-th root: ζ^a
};

/// Value of branch k at γ^j ζ^a − 1. Throws LevelTooLow for truncated branches.
CyclotomicElement interpolate_value(const DistributionSeries& mu, const InterpolationPoint& pt);

/// Planted coefficients a_n ∈ p^{−⌊rate·ℓ(n)⌋}·Z; rate 0 gives bounded (integral) series.
struct OrderProfile {
    Rational rate;
};

struct SignedPair {
    DistributionSeries g_plus, g_minus;
    DistributionSeries l_plus, l_minus;
    LogPi log_plus, log_minus;
};

struct SynthInstance {
    DistributionSeries l_alpha, l_beta;
    SignedPair truth;
};

/// Deterministic in all arguments. Planted branches l^± are nonzero
/// polynomials of degree ≤ degree; g^± = log^±_Π·l^±, L_α = g⁺ + g⁻, L_β = g⁺ − g⁻.
SynthInstance synth_instance(std::uint64_t seed, std::int64_t p, std::vector<std::int64_t> crit, std::int64_t M,
                             std::int64_t degree, const OrderProfile& profile);

struct IdentityReport {
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    bool holds() const { return failures == 0; }
};

/// At odd m: L_α(pt) = log⁺(pt)·l⁺(pt) = L_β(pt); at even m: L_α(pt) = log⁻(pt)·l⁻(pt) = −L_β(pt).
/// Points: every branch, j ∈ crit, m ≤ m_max, every primitive root.
IdentityReport check_point_identities(const DistributionSeries& l_alpha, const DistributionSeries& l_beta,
                                      const SignedPair& pair, std::int64_t m_max);

struct DecompositionResult {
    DistributionSeries g_plus, g_minus;
    ParityReport parity_plus, parity_minus;
    DistributionSeries l_plus, l_minus;
    std::vector<ValuationEstimate> order_plus, order_minus;
    bool reconstructs = false;  // log^±·l^± reproduces G^± exactly
};

/// G^± formation, parity checks, extraction and order bounds in one pass.
/// Extraction runs regardless of the parity outcome so that a broken
/// divisibility surfaces as NotDivisible.
DecompositionResult decompose(const DistributionSeries& l_alpha, const DistributionSeries& l_beta,
                              const LogPi& log_plus, const LogPi& log_minus, std::int64_t m_max, const Rational& r,
                              std::int64_t h_max);

struct BranchNonvanishing {
    std::int64_t branch = 0;
    WeierstrassData weierstrass;
    std::vector<PointCheck> tested;
    std::vector<CyclotomicPoint> exceptional;
    bool within_bound = false;  // #exceptional ≤ λ (meaningful when certified)
};

struct NonvanishingReport {
    std::int64_t w = 0;
    std::int64_t center = 0;  // w/2
    std::vector<BranchNonvanishing> branches;
};

/// Checks the central twists γ^{w/2} ζ − 1 for m ≤ m_max on every branch.
/// Throws OddPurityWeight, CentralCritOnly (crit = {w/2}) or ZeroSeries.
NonvanishingReport nonvanishing_report(const DistributionSeries& l, std::int64_t w, std::span<const std::int64_t> crit,
                                       std::int64_t m_max, bool with_valuations = true);

} // namespace polluxe
