#include "polluxe/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "polluxe/error.hpp"

namespace polluxe {

WeightVector WeightVector::create(std::vector<std::int64_t> entries) {
    if (entries.empty() || entries.size() % 2 != 0)
        throw AxiomError("shape", "weight must have an even, positive number of entries");
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1] < entries[i])
            throw AxiomError("dominance", "mu_" + std::to_string(i) + " < mu_" + std::to_string(i + 1));
    }
    const std::size_t len = entries.size();
    const std::int64_t w = entries.front() + entries.back();
    for (std::size_t i = 0; i < len / 2; ++i) {
        if (entries[i] + entries[len - 1 - i] != w)
            throw AxiomError("purity", "mu_" + std::to_string(i + 1) + " + mu_" + std::to_string(len - i) +
                                           " != " + std::to_string(w));
    }
    WeightVector out;
    out.mu_ = std::move(entries);
    out.w_ = w;
    return out;
}

std::vector<std::int64_t> hodge_numbers(const WeightVector& weight) {
    const std::int64_t two_n = 2 * weight.n();
    std::vector<std::int64_t> h;
    h.reserve(static_cast<std::size_t>(two_n));
    for (std::int64_t i = 1; i <= two_n; ++i) h.push_back(weight[i] + two_n - i);
    return h;
}

std::vector<std::int64_t> crit_set(const WeightVector& weight) {
    const std::int64_t n = weight.n();
    std::vector<std::int64_t> out;
    for (std::int64_t j = weight[n + 1]; j <= weight[n]; ++j) out.push_back(j);
    return out;
}

PolygonReport polygons(std::int64_t p, std::span<const std::int64_t> hodge, std::span<const Rational> satake) {
    PolygonReport out;
    const std::size_t len = hodge.size();
    Rational hy, ny;
    out.hodge.push_back({0, hy});
    out.newton.push_back({0, ny});
    bool dominance = true;
    for (std::size_t j = 1; j <= len; ++j) {
        hy += Rational(hodge[len - j]);
        const std::size_t idx = len - j;
        if (idx < satake.size() && !satake[idx].is_zero()) ny += val_p(satake[idx], p).value();
        out.hodge.push_back({static_cast<std::int64_t>(j), hy});
        out.newton.push_back({static_cast<std::int64_t>(j), ny});
        if (ny < hy) dominance = false;
    }
    out.dominance = dominance;
    out.endpoints_match = (hy == ny);
    return out;
}

std::int64_t SpectralData::valuation(std::int64_t i) const {
    return val_p(alpha(i), p_).value().num().get_si();
}

SpectralData SpectralData::create(std::int64_t p, std::vector<std::int64_t> weight, std::vector<Rational> satake) {
    if (p < 3 || !is_prime(p)) throw AxiomError("odd prime required", "p = " + std::to_string(p));
    WeightVector wv = WeightVector::create(std::move(weight));
    const std::size_t len = static_cast<std::size_t>(2 * wv.n());
    if (satake.size() != len)
        throw AxiomError("shape", "expected " + std::to_string(len) + " Satake parameters, got " +
                                      std::to_string(satake.size()));
    for (std::size_t i = 0; i < len; ++i) {
        if (satake[i].is_zero()) throw AxiomError("nonzero", "alpha_" + std::to_string(i + 1) + " = 0");
    }
    std::stable_sort(satake.begin(), satake.end(), [p](const Rational& a, const Rational& b) {
        return val_p(a, p) > val_p(b, p);
    });

    SpectralData out(p, std::move(wv));
    out.alpha_ = std::move(satake);
    out.lambda_ = out.alpha_.front() * out.alpha_.back();
    for (std::size_t i = 0; i < len / 2; ++i) {
        if (out.alpha_[i] * out.alpha_[len - 1 - i] != out.lambda_)
            throw AxiomError("pairing", "alpha_" + std::to_string(i + 1) + " * alpha_" + std::to_string(len - i) +
                                            " != lambda = " + out.lambda_.str());
    }
    const std::int64_t expected = static_cast<std::int64_t>(len) - 1 + out.weight_.purity_weight();
    if (val_p(out.lambda_, p) != Valuation(expected))
        throw AxiomError("lambda-valuation", "v_p(lambda) = " + val_p(out.lambda_, p).str() + ", expected " +
                                                 std::to_string(expected));
    out.hodge_ = hodge_numbers(out.weight_);
    out.crit_ = crit_set(out.weight_);
    out.polygon_ = polygons(p, out.hodge_, out.alpha_);
    if (!out.polygon_.endpoints_match)
        throw AxiomError("endpoints", "Newton and Hodge polygons end at different heights");
    if (!out.polygon_.dominance)
        throw AxiomError("newton-above-hodge", "Newton polygon dips below the Hodge polygon");
    return out;
}

namespace {

void for_each_subset(std::int64_t two_n, std::int64_t n, const auto& visit) {
    IndexSet current;
    auto rec = [&](auto&& self, std::int64_t next) -> void {
        if (static_cast<std::int64_t>(current.size()) == n) {
            visit(current);
            return;
        }
        const std::int64_t need = n - static_cast<std::int64_t>(current.size());
        for (std::int64_t i = next; i <= two_n - need + 1; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
}

bool is_shalika(const IndexSet& idx, std::int64_t n) {
    std::vector<int> hits(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t i : idx) ++hits[static_cast<std::size_t>(std::min(i, 2 * n + 1 - i))];
    return std::all_of(hits.begin() + 1, hits.end(), [](int c) { return c == 1; });
}

bool contains_pair(const IndexSet& idx, std::int64_t n) {
    return std::any_of(idx.begin(), idx.end(), [&](std::int64_t i) {
        return std::binary_search(idx.begin(), idx.end(), 2 * n + 1 - i);
    });
}

std::int64_t bottom_hodge_sum(const SpectralData& d) {
    std::int64_t s = 0;
    for (std::int64_t i = d.n() + 1; i <= 2 * d.n(); ++i) s += d.h(i);
    return s;
}

Rational product_of(const SpectralData& d, const IndexSet& idx) {
    Rational a(1);
    for (std::int64_t i : idx) a *= d.alpha(i);
    return a;
}

std::int64_t valuation_of(const SpectralData& d, const IndexSet& idx) {
    std::int64_t v = 0;
    for (std::int64_t i : idx) v += d.valuation(i);
    return v;
}

} // namespace

std::vector<Stabilization> enumerate_stabilizations(const SpectralData& data) {
    const std::int64_t n = data.n();
    const std::int64_t base = bottom_hodge_sum(data);
    std::vector<Stabilization> out;
    for_each_subset(2 * n, n, [&](const IndexSet& idx) {
        Stabilization s;
        s.indices = idx;
        s.alpha = product_of(data, idx);
        s.valuation = valuation_of(data, idx);
        s.slope = s.valuation - base;
        s.shalika = is_shalika(idx, n);
        s.non_critical_slope = s.slope < data.crit_size();
        out.push_back(std::move(s));
    });
    for (auto& s : out) {
        if (!s.shalika) continue;
        s.q_regular = std::none_of(out.begin(), out.end(), [&](const Stabilization& t) {
            return t.shalika && t.indices != s.indices && t.alpha == s.alpha;
        });
    }
    return out;
}

IndexSet candidate_i_n(std::int64_t n) {
    IndexSet out{n};
    for (std::int64_t i = n + 2; i <= 2 * n; ++i) out.push_back(i);
    return out;
}

IndexSet candidate_i_n1(std::int64_t n) {
    IndexSet out;
    for (std::int64_t i = n + 1; i <= 2 * n; ++i) out.push_back(i);
    return out;
}

NcsCheck ncs_theorem_check(const SpectralData& data) {
    NcsCheck out;
    const IndexSet a = candidate_i_n(data.n());
    const IndexSet b = candidate_i_n1(data.n());
    out.contained = true;
    for (const auto& s : enumerate_stabilizations(data)) {
        if (!s.non_critical_slope) continue;
        out.ncs_set.push_back(s.indices);
        if (s.indices != a && s.indices != b) out.contained = false;
    }
    return out;
}

std::optional<PairMinimum> pair_containing_minimum(const SpectralData& data) {
    const std::int64_t n = data.n();
    if (n < 2) return std::nullopt;
    PairMinimum out;
    out.witness = {n, n + 1};
    for (std::int64_t i = n + 3; i <= 2 * n; ++i) out.witness.push_back(i);
    out.witness_valuation = valuation_of(data, out.witness);
    bool first = true;
    for_each_subset(2 * n, n, [&](const IndexSet& idx) {
        if (!contains_pair(idx, n)) return;
        const std::int64_t v = valuation_of(data, idx);
        if (first || v < out.minimum) out.minimum = v;
        first = false;
    });
    return out;
}

PollackChecks pollack_checks(const SpectralData& data) {
    const std::int64_t n = data.n();
    const std::int64_t base = bottom_hodge_sum(data);
    const Rational crit(data.crit_size());
    const Rational half_crit = crit / Rational(2);
    PollackChecks out;
    out.pollack = (data.alpha(n) + data.alpha(n + 1)).is_zero();
    out.r = Rational(valuation_of(data, candidate_i_n1(n)) - base);
    out.slope_i_n = Rational(valuation_of(data, candidate_i_n(n)) - base);
    out.lower_bound_ok = !out.pollack || out.r >= half_crit;
    out.both_ncs = out.r < crit && out.slope_i_n < crit;
    out.bounded_case = out.r == half_crit;
    return out;
}

} // namespace polluxe
