#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polluxe/growth_series.hpp"
#include "polluxe/rational.hpp"

namespace polluxe {

/// A dominant, pure weight μ = (μ_1 ≥ … ≥ μ_2n) with μ_i + μ_{2n+1−i} = w.
class WeightVector {
public:
    /// Throws AxiomError("shape" | "dominance" | "purity").
    static WeightVector create(std::vector<std::int64_t> entries);

    std::int64_t n() const noexcept { return static_cast<std::int64_t>(mu_.size()) / 2; }
    std::int64_t purity_weight() const noexcept { return w_; }
    const std::vector<std::int64_t>& entries() const noexcept { return mu_; }
    /// 1-based access, matching the usual indexing of μ.
    std::int64_t operator[](std::int64_t i) const { return mu_.at(static_cast<std::size_t>(i - 1)); }

private:
    std::vector<std::int64_t> mu_;
    std::int64_t w_ = 0;
};

/// h_i = μ_i + 2n − i.
std::vector<std::int64_t> hodge_numbers(const WeightVector& weight);

/// The integer interval [μ_{n+1}, μ_n].
std::vector<std::int64_t> crit_set(const WeightVector& weight);

struct PolygonReport {
    std::vector<PolygonVertex> hodge;   // (j, Σ_{i≤j} h_{2n+1−i}), j = 0..2n
    std::vector<PolygonVertex> newton;  // (j, Σ_{i≤j} v_p(α_{2n+1−i}))
    bool dominance = false;             // newton ≥ hodge at every j
    bool endpoints_match = false;
};

/// Works on unvalidated inputs; the spectral constructor uses it as a validator.
PolygonReport polygons(std::int64_t p, std::span<const std::int64_t> hodge, std::span<const Rational> satake);

/// Weight, prime and Satake parameters satisfying every structural axiom.
class SpectralData {
public:
    /// Satake parameters are stable-sorted by decreasing valuation, then the
    /// pairing α_i α_{2n+1−i} = λ is checked. Throws AxiomError naming the
    /// failed condition: "odd prime required", "shape", "dominance", "purity",
    /// "nonzero", "pairing", "lambda-valuation", "endpoints", "newton-above-hodge".
    static SpectralData create(std::int64_t p, std::vector<std::int64_t> weight, std::vector<Rational> satake);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t n() const noexcept { return weight_.n(); }
    const WeightVector& weight() const noexcept { return weight_; }
    const std::vector<Rational>& satake() const noexcept { return alpha_; }
    /// 1-based.
    const Rational& alpha(std::int64_t i) const { return alpha_.at(static_cast<std::size_t>(i - 1)); }
    std::int64_t valuation(std::int64_t i) const;
    const std::vector<std::int64_t>& hodge() const noexcept { return hodge_; }
    std::int64_t h(std::int64_t i) const { return hodge_.at(static_cast<std::size_t>(i - 1)); }
    const Rational& lambda() const noexcept { return lambda_; }
    const std::vector<std::int64_t>& crit() const noexcept { return crit_; }
    std::int64_t crit_size() const noexcept { return static_cast<std::int64_t>(crit_.size()); }
    const PolygonReport& polygon() const noexcept { return polygon_; }

private:
    SpectralData(std::int64_t p, WeightVector w) : p_(p), weight_(std::move(w)) {}

    std::int64_t p_;
    WeightVector weight_;
    std::vector<Rational> alpha_;
    std::vector<std::int64_t> hodge_;
    Rational lambda_;
    std::vector<std::int64_t> crit_;
    PolygonReport polygon_;
};

using IndexSet = std::vector<std::int64_t>;  // 1-based, strictly increasing

struct Stabilization {
    IndexSet indices;
    Rational alpha;
    std::int64_t valuation = 0;
    std::int64_t slope = 0;  // r_I = v_p(α_I) − Σ_{i>n} h_i
    bool shalika = false;
    bool q_regular = false;
    bool non_critical_slope = false;
};

/// All C(2n, n) index sets in lexicographic order.
std::vector<Stabilization> enumerate_stabilizations(const SpectralData& data);

/// I_n = (n, n+2, …, 2n) and I_{n+1} = (n+1, …, 2n).
IndexSet candidate_i_n(std::int64_t n);
IndexSet candidate_i_n1(std::int64_t n);

struct NcsCheck {
    std::vector<IndexSet> ncs_set;
    bool contained = false;  // ncs_set ⊆ {I_n, I_{n+1}}
};

NcsCheck ncs_theorem_check(const SpectralData& data);

/// Minimum of v_p(α_I) over index sets containing a pair {i, 2n+1−i},
/// against the valuation of (n, n+1, n+3, …, 2n). Empty for n = 1.
struct PairMinimum {
    IndexSet witness;
    std::int64_t minimum = 0;
    std::int64_t witness_valuation = 0;
};

std::optional<PairMinimum> pair_containing_minimum(const SpectralData& data);

struct PollackChecks {
    bool pollack = false;           // α_n + α_{n+1} = 0
    Rational r;                     // slope of I_{n+1}
    Rational slope_i_n;             // slope of I_n
    bool lower_bound_ok = false;    // pollack ⇒ r ≥ #Crit/2
    bool both_ncs = false;          // both candidates below #Crit
    bool bounded_case = false;      // r = #Crit/2
};

PollackChecks pollack_checks(const SpectralData& data);

} // namespace polluxe
