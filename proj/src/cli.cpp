#include "polluxe/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace polluxe::cli {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidConfig:
    case ErrorKind::MismatchedPrime:
        return 1;
    case ErrorKind::Axiom:
    case ErrorKind::CentralCritOnly:
    case ErrorKind::OddPurityWeight:
        return 2;
    case ErrorKind::DivisorZero:
    case ErrorKind::NotDivisible:
    case ErrorKind::ZeroSeries:
    case ErrorKind::LevelTooLow:
        return 3;
    }
    return 1;
}

std::string config_hash(const Json& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); }

std::int64_t get_int(const Json& c, const char* key, std::optional<std::int64_t> fallback, std::int64_t lo,
                     std::int64_t hi) {
    auto it = c.find(key);
    if (it == c.end()) {
        if (!fallback) bad(std::string("missing field \"") + key + "\"");
        return *fallback;
    }
    if (!it->is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    const auto v = it->get<std::int64_t>();
    if (v < lo || v > hi)
        bad(std::string("field \"") + key + "\" = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
            std::to_string(hi) + "]");
    return v;
}

std::int64_t get_prime(const Json& c) {
    const std::int64_t p = get_int(c, "p", std::nullopt, INT64_MIN, INT64_MAX);
    if (p < 3 || !is_prime(p)) throw AxiomError("odd prime required", "p = " + std::to_string(p));
    if (p > 97) bad("p must be at most 97");
    return p;
}

std::vector<std::int64_t> get_crit(const Json& c) {
    if (c.contains("crit")) {
        const Json& v = c["crit"];
        if (!v.is_array() || v.empty()) bad("field \"crit\" must be a nonempty list of integers");
        std::vector<std::int64_t> out;
        for (const auto& e : v) {
            if (!e.is_number_integer()) bad("field \"crit\" must be a nonempty list of integers");
            out.push_back(e.get<std::int64_t>());
        }
        return out;
    }
    if (c.contains("j")) return {get_int(c, "j", std::nullopt, -64, 64)};
    bad("missing field \"crit\"");
}

Rational get_rational(const Json& c, const char* key, const Rational& fallback) {
    auto it = c.find(key);
    return it == c.end() ? fallback : rational_from_json(*it);
}

std::uint64_t get_seed(const Json& c) {
    auto it = c.find("seed");
    if (it == c.end()) return 0;
    if (!it->is_number_unsigned()) bad("field \"seed\" must be a non-negative integer");
    return it->get<std::uint64_t>();
}

Json header(const char* command, const Json& config) {
    Json out;
    out["schema"] = kSchema;
    out["version"] = kVersion;
    out["command"] = command;
    out["config_hash"] = config_hash(config);
    return out;
}

Json parity_summary(const ParityReport& r, std::int64_t m_max) {
    Json out;
    out["sign"] = to_string(r.sign);
    Json levels = Json::array();
    for (std::int64_t m = 1; m <= m_max; ++m)
        if ((m % 2 == 0) == (r.sign == Sign::Plus)) levels.push_back(m);
    out["levels"] = std::move(levels);
    out["points_checked"] = r.points.size();
    out["passed"] = r.passed;
    Json nonzero = Json::array();
    for (const auto& p : r.points)
        if (!p.zero) nonzero.push_back(to_json(p));
    out["nonzero_points"] = std::move(nonzero);
    return out;
}

Json estimates(const std::vector<ValuationEstimate>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(to_json(e));
    return out;
}

Json nonvanishing_json(const NonvanishingReport& r) {
    Json out;
    out["w"] = r.w;
    out["center"] = r.center;
    Json branches = Json::array();
    for (const auto& b : r.branches) {
        Json bj;
        bj["branch"] = b.branch;
        bj["weierstrass"] = to_json(b.weierstrass);
        Json tested = Json::array();
        for (const auto& t : b.tested) tested.push_back(to_json(t));
        bj["tested"] = std::move(tested);
        Json exc = Json::array();
        for (const auto& pt : b.exceptional) exc.push_back(to_json(pt));
        bj["exceptional"] = std::move(exc);
        bj["within_bound"] = b.within_bound;
        branches.push_back(std::move(bj));
    }
    out["branches"] = std::move(branches);
    return out;
}

bool same_branches(const DistributionSeries& a, const DistributionSeries& b) {
    return a.p == b.p && a.branches == b.branches;
}

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct DecomposeParams {
    std::int64_t p;
    std::vector<std::int64_t> crit;
    std::int64_t level;
    std::int64_t m_max;
    std::int64_t h_max;
    Rational r;
};

DecomposeParams decompose_params(const Json& c) {
    DecomposeParams d;
    d.p = get_prime(c);
    d.crit = sorted_unique(get_crit(c));
    d.level = get_int(c, "level", std::nullopt, 1, 3);
    d.m_max = get_int(c, "m_max", 2 * d.level, 1, 6);
    d.h_max = get_int(c, "h_max", 6, 0, 64);
    d.r = get_rational(c, "r", Rational(static_cast<std::int64_t>(d.crit.size())) / Rational(2));
    return d;
}

Json decomposition_json(const DecompositionResult& res, const DecomposeParams& d) {
    Json out;
    out["parity"] = {{"plus", parity_summary(res.parity_plus, d.m_max)},
                     {"minus", parity_summary(res.parity_minus, d.m_max)}};
    out["extracted"] = {{"l_plus", to_json(res.l_plus)}, {"l_minus", to_json(res.l_minus)}};
    out["reconstructs"] = res.reconstructs;
    Json order;
    order["r"] = d.r.str();
    order["rate"] = (d.r - Rational(static_cast<std::int64_t>(d.crit.size())) / Rational(2)).str();
    order["h_max"] = d.h_max;
    order["plus"] = estimates(res.order_plus);
    order["minus"] = estimates(res.order_minus);
    out["order_report"] = std::move(order);
    return out;
}

void merge_into(Json& out, const Json& extra) {
    for (const auto& [k, v] : extra.items()) out[k] = v;
}

} // namespace

Json run_analyze(const Json& config) {
    Json out = header("analyze", config);
    const SpectralData data = spectral_from_json(config);
    merge_into(out, spectral_report(data));
    return out;
}

Json run_logpm(const Json& config) {
    Json out = header("logpm", config);
    const std::int64_t p = get_prime(config);
    const auto crit = sorted_unique(get_crit(config));
    auto sign_it = config.find("sign");
    if (sign_it == config.end() || !sign_it->is_string()) bad("field \"sign\" must be \"+\" or \"-\"");
    const Sign sign = parse_sign(sign_it->get<std::string>());
    const std::int64_t M = get_int(config, "level", std::nullopt, 1, 3);
    std::optional<std::int64_t> D;
    if (config.contains("degree")) D = get_int(config, "degree", std::nullopt, 0, 2000);
    const LogPi log = log_pi(p, crit, sign, M, D);
    const HalfLog& first = log.factored.front();
    const std::int64_t h_max = get_int(config, "h_max", first.top_level() + 1, 0, 64);
    const std::int64_t m_max = get_int(config, "m_max", std::min<std::int64_t>(first.top_level() + 1, 3), 1, 12);

    out["p"] = p;
    out["sign"] = to_string(sign);
    out["crit"] = crit;
    out["level"] = M;
    out["full_degree"] = log.product.degree();
    out["expansion"] = to_json(log.expansion);

    Json table = Json::array();
    for (const auto& h : log.factored) {
        for (const auto& f : h.factors) {
            const GrowthSeries fs = GrowthSeries::polynomial(p, f.poly);
            for (std::int64_t hh = 0; hh <= h_max; ++hh) {
                const Rational closed = factor_disc_valuation(p, f.level, h.j, hh);
                const Valuation direct = disc_valuation(fs, hh).value;
                Json row;
                row["j"] = h.j;
                row["n"] = f.level;
                row["h"] = hh;
                row["closed_form"] = closed.str();
                row["direct"] = to_json(direct);
                row["match"] = direct == Valuation(closed);
                table.push_back(std::move(row));
            }
        }
    }
    out["factor_table"] = std::move(table);

    Json discs = Json::array();
    const GrowthSeries full = GrowthSeries::polynomial(p, log.product);
    for (std::int64_t hh = 0; hh <= h_max; ++hh) {
        Rational sum;
        bool settled = true;
        for (const auto& h : log.factored) {
            sum += half_log_disc_valuation_sum(p, sign, M, hh);
            settled = settled && h.disc_valuation_settled(hh);
        }
        const Valuation direct = disc_valuation(full, hh).value;
        Json row;
        row["h"] = hh;
        row["direct"] = to_json(direct);
        row["factor_sum"] = sum.str();
        row["match"] = direct == Valuation(sum);
        row["settled"] = settled;
        discs.push_back(std::move(row));
    }
    out["disc_valuation"] = std::move(discs);

    Json points = Json::array();
    bool pattern = true;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        const CyclotomicRing ring(p, m);
        const bool expect_zero = m <= first.top_level() && ((m % 2 == 0) == (sign == Sign::Plus));
        for (std::int64_t j : crit) {
            for (std::int64_t a : ring.primitive_exponents()) {
                const CyclotomicPoint pt{j, m, a};
                const CyclotomicElement v = evaluate_at_point(log, pt);
                Json row = to_json(pt);
                row["zero"] = v.is_zero();
                row["valuation"] = to_json(cyc_valuation(v));
                pattern = pattern && (v.is_zero() == expect_zero);
                points.push_back(std::move(row));
            }
        }
    }
    out["vanishing"] = {{"m_max", m_max}, {"pattern_ok", pattern}, {"points", std::move(points)}};
    return out;
}

Json run_synth(const Json& config) {
    Json out = header("synth", config);
    const DecomposeParams d = decompose_params(config);
    const std::int64_t degree = get_int(config, "degree", 6, 0, 60);
    const Rational rate = get_rational(config, "order_rate", Rational(0));
    const std::uint64_t seed = get_seed(config);

    SynthInstance inst = synth_instance(seed, d.p, d.crit, d.level, degree, OrderProfile{rate});
    if (auto it = config.find("tamper_plus"); it != config.end()) {
        const std::int64_t k = get_int(*it, "k", std::nullopt, 0, 4000);
        const Rational delta = get_rational(*it, "delta", Rational(1));
        std::vector<Rational> bump(static_cast<std::size_t>(k + 1));
        bump.back() = delta;
        const GrowthSeries b = GrowthSeries::polynomial(d.p, Polynomial(std::move(bump)));
        inst.l_alpha.branches[0] = series_add(inst.l_alpha.branches[0], b);
        inst.l_beta.branches[0] = series_add(inst.l_beta.branches[0], b);
    }

    out["p"] = d.p;
    out["crit"] = inst.truth.log_plus.crit;
    out["level"] = d.level;
    out["degree"] = degree;
    out["seed"] = seed;
    out["order_rate"] = rate.str();
    out["m_max"] = d.m_max;
    out["instance"] = {{"l_alpha", to_json(inst.l_alpha)}, {"l_beta", to_json(inst.l_beta)}};
    out["planted"] = {{"l_plus", to_json(inst.truth.l_plus)}, {"l_minus", to_json(inst.truth.l_minus)}};

    const DecompositionResult res =
        decompose(inst.l_alpha, inst.l_beta, inst.truth.log_plus, inst.truth.log_minus, d.m_max, d.r, d.h_max);
    merge_into(out, decomposition_json(res, d));
    out["roundtrip_exact"] =
        same_branches(res.l_plus, inst.truth.l_plus) && same_branches(res.l_minus, inst.truth.l_minus);

    const IdentityReport ids = check_point_identities(inst.l_alpha, inst.l_beta, inst.truth, d.m_max);
    out["point_identities"] = {{"checked", ids.checked}, {"failures", ids.failures}, {"holds", ids.holds()}};

    if (auto it = config.find("nonvanish"); it != config.end()) {
        const std::int64_t w = get_int(*it, "w", std::nullopt, -64, 64);
        const std::int64_t nv_m = get_int(*it, "m_max", 2, 1, 4);
        out["nonvanishing"] = {
            {"plus", nonvanishing_json(nonvanishing_report(res.l_plus, w, inst.truth.log_plus.crit, nv_m, false))},
            {"minus", nonvanishing_json(nonvanishing_report(res.l_minus, w, inst.truth.log_plus.crit, nv_m, false))}};
    } else {
        out["nonvanishing"] = nullptr;
    }
    return out;
}

Json run_decompose(const Json& config) {
    Json out = header("decompose", config);
    const DecomposeParams d = decompose_params(config);
    DistributionSeries l_alpha, l_beta;
    if (config.contains("L_alpha") || config.contains("L_beta")) {
        if (!config.contains("L_alpha") || !config.contains("L_beta")) bad("L_alpha and L_beta must come together");
        l_alpha = distribution_from_json(config["L_alpha"]);
        l_beta = distribution_from_json(config["L_beta"]);
    } else {
        const std::int64_t degree = get_int(config, "degree", 6, 0, 60);
        SynthInstance inst = synth_instance(get_seed(config), d.p, d.crit, d.level, degree,
                                            OrderProfile{get_rational(config, "order_rate", Rational(0))});
        l_alpha = std::move(inst.l_alpha);
        l_beta = std::move(inst.l_beta);
    }
    if (l_alpha.p != d.p || l_beta.p != d.p) throw Error(ErrorKind::MismatchedPrime, "series prime differs from p");
    const LogPi log_plus = log_pi(d.p, d.crit, Sign::Plus, d.level);
    const LogPi log_minus = log_pi(d.p, d.crit, Sign::Minus, d.level);

    out["p"] = d.p;
    out["crit"] = log_plus.crit;
    out["level"] = d.level;
    out["m_max"] = d.m_max;
    const DecompositionResult res = decompose(l_alpha, l_beta, log_plus, log_minus, d.m_max, d.r, d.h_max);
    out["g_plus"] = to_json(res.g_plus);
    out["g_minus"] = to_json(res.g_minus);
    merge_into(out, decomposition_json(res, d));
    return out;
}

Json run_nonvanish(const Json& config) {
    Json out = header("nonvanish", config);
    const std::int64_t p = get_prime(config);
    const auto crit = sorted_unique(get_crit(config));
    const std::int64_t w = get_int(config, "w", std::nullopt, -64, 64);
    const std::int64_t m_max = get_int(config, "m_max", 2, 1, 4);
    DistributionSeries l;
    if (config.contains("distribution")) {
        l = distribution_from_json(config["distribution"]);
        if (l.p != p) throw Error(ErrorKind::MismatchedPrime, "distribution prime differs from p");
    } else {
        const std::int64_t level = get_int(config, "level", 1, 1, 3);
        const std::int64_t degree = get_int(config, "degree", 6, 0, 60);
        l = synth_instance(get_seed(config), p, crit, level, degree, OrderProfile{Rational(0)}).truth.l_plus;
    }
    out["p"] = p;
    out["crit"] = crit;
    out["m_max"] = m_max;
    merge_into(out, nonvanishing_json(nonvanishing_report(l, w, crit, m_max)));
    return out;
}

std::string render_summary(const Json& report) {
    std::ostringstream os;
    for (const auto& [k, v] : report.items()) {
        if (v.is_structured()) continue;
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    return os.str();
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
    Json config;
    {
        std::ifstream in(inv.config_path);
        if (!in) {
            err << "error: cannot open config " << inv.config_path << '\n';
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            config = Json::parse(buf.str());
        } catch (const Json::parse_error& e) {
            err << "error: parse error at byte " << e.byte << ": " << e.what() << '\n';
            return 1;
        }
    }
    if (!config.is_object()) {
        err << "error: config must be a JSON object\n";
        return 1;
    }
    if (inv.seed) config["seed"] = *inv.seed;

    Json report;
    try {
        if (inv.command == "analyze") report = run_analyze(config);
        else if (inv.command == "logpm") report = run_logpm(config);
        else if (inv.command == "synth") report = run_synth(config);
        else if (inv.command == "decompose") report = run_decompose(config);
        else if (inv.command == "nonvanish") report = run_nonvanish(config);
        else {
            err << "error: unknown command " << inv.command << '\n';
            return 1;
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const Json::exception& e) {
        err << "error [InvalidConfig]: " << e.what() << '\n';
        return 1;
    }

    const std::string text = report.dump(2) + "\n";
    if (!inv.out_path) {
        out << text;
        return 0;
    }
    std::ofstream file(*inv.out_path, std::ios::binary);
    if (!file || !(file << text)) {
        err << "error: cannot write " << *inv.out_path << '\n';
        return 1;
    }
    if (!inv.quiet) out << render_summary(report);
    return 0;
}

} // namespace polluxe::cli
