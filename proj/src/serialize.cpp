#include "polluxe/serialize.hpp"

#include "polluxe/error.hpp"

namespace polluxe {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Valuation& v) { return v.str(); }

Json to_json(const ValuationEstimate& v) {
    Json out;
    out["value"] = to_json(v.value);
    out["certified"] = v.certified;
    return out;
}

Json to_json(const GrowthSeries& f) {
    Json out;
    out["p"] = f.p();
    out["trunc_degree"] = f.trunc_degree();
    out["exact"] = f.exact();
    Json c = Json::array();
    for (const auto& a : f.coeffs()) c.push_back(a.str());
    out["coeffs"] = std::move(c);
    return out;
}

Json to_json(const DistributionSeries& d) {
    Json out;
    out["p"] = d.p;
    Json b = Json::array();
    for (const auto& f : d.branches) b.push_back(to_json(f));
    out["branches"] = std::move(b);
    out["claimed_order"] = d.claimed_order ? Json(d.claimed_order->str()) : Json(nullptr);
    return out;
}

Json to_json(const LogPi& log) {
    Json out;
    out["p"] = log.p;
    out["sign"] = to_string(log.sign);
    out["crit"] = log.crit;
    out["level"] = log.level;
    out["expansion"] = to_json(log.expansion);
    return out;
}

Json to_json(const CyclotomicPoint& pt) {
    Json out;
    out["j"] = pt.j;
    out["m"] = pt.m;
    out["a"] = pt.a;
    return out;
}

Json to_json(const PointCheck& c) {
    Json out;
    out["branch"] = c.branch;
    out["j"] = c.point.j;
    out["m"] = c.point.m;
    out["a"] = c.point.a;
    out["zero"] = c.zero;
    out["valuation"] = to_json(c.valuation);
    return out;
}

Json to_json(const WeierstrassData& w) {
    Json out;
    out["mu"] = w.mu.str();
    out["lambda"] = w.lambda;
    out["certified"] = w.certified;
    return out;
}

Json to_json(const std::vector<PolygonVertex>& vertices) {
    Json out = Json::array();
    for (const auto& v : vertices) out.push_back(Json::array({v.index, v.value.str()}));
    return out;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const Json& v, const char* key) {
    if (!v.is_array()) bad(std::string("field \"") + key + "\" must be a list of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) bad(std::string("field \"") + key + "\" must be a list of integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

std::vector<Rational> rational_list(const Json& v, const char* key) {
    if (!v.is_array()) bad(std::string("field \"") + key + "\" must be a list of rationals");
    std::vector<Rational> out;
    for (const auto& e : v) out.push_back(rational_from_json(e));
    return out;
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) bad("expected a rational string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        bad(e.what());
    }
}

GrowthSeries growth_series_from_json(const Json& j) {
    const std::int64_t p = int_field(j, "p");
    auto coeffs = rational_list(field(j, "coeffs"), "coeffs");
    const Json& exact = field(j, "exact");
    if (!exact.is_boolean()) bad("field \"exact\" must be a boolean");
    if (j.contains("trunc_degree") && int_field(j, "trunc_degree") != static_cast<std::int64_t>(coeffs.size()) - 1)
        bad("trunc_degree disagrees with the number of coefficients");
    if (exact.get<bool>()) return GrowthSeries::polynomial(p, Polynomial(std::move(coeffs)));
    return GrowthSeries::truncated(p, std::move(coeffs));
}

DistributionSeries distribution_from_json(const Json& j) {
    DistributionSeries out;
    out.p = int_field(j, "p");
    const Json& b = field(j, "branches");
    if (!b.is_array()) bad("field \"branches\" must be a list");
    for (const auto& f : b) out.branches.push_back(growth_series_from_json(f));
    if (j.contains("claimed_order") && !j["claimed_order"].is_null())
        out.claimed_order = rational_from_json(j["claimed_order"]);
    out.validate();
    return out;
}

LogPi log_pi_from_json(const Json& j) {
    const std::int64_t p = int_field(j, "p");
    const Json& sign = field(j, "sign");
    if (!sign.is_string()) bad("field \"sign\" must be a string");
    const auto crit = int_list(field(j, "crit"), "crit");
    const std::int64_t level = int_field(j, "level");
    std::optional<std::int64_t> degree;
    GrowthSeries stored = growth_series_from_json(field(j, "expansion"));
    if (!stored.exact()) degree = stored.trunc_degree();
    LogPi out = log_pi(p, crit, parse_sign(sign.get<std::string>()), level, degree);
    if (!(out.expansion == stored)) bad("stored expansion does not match the rebuilt log");
    return out;
}

SpectralData spectral_from_json(const Json& j) {
    const std::int64_t p = int_field(j, "p");
    auto weight = int_list(field(j, "weight"), "weight");
    auto satake = rational_list(field(j, "satake"), "satake");
    if (j.contains("n")) {
        const std::int64_t n = int_field(j, "n");
        if (n < 1 || n > 4) bad("n must lie in [1, 4]");
        if (weight.size() != static_cast<std::size_t>(2 * n))
            throw AxiomError("shape", "weight has " + std::to_string(weight.size()) + " entries, expected " +
                                          std::to_string(2 * n));
    }
    return SpectralData::create(p, std::move(weight), std::move(satake));
}

namespace {

Json index_set(const IndexSet& s) { return Json(s); }

} // namespace

Json spectral_report(const SpectralData& data) {
    Json out;
    out["p"] = data.p();
    out["n"] = data.n();
    out["weight"] = data.weight().entries();
    out["purity_weight"] = data.weight().purity_weight();
    Json satake = Json::array();
    Json vals = Json::array();
    for (std::int64_t i = 1; i <= 2 * data.n(); ++i) {
        satake.push_back(data.alpha(i).str());
        vals.push_back(data.valuation(i));
    }
    out["satake"] = std::move(satake);
    out["valuations"] = std::move(vals);
    out["lambda"] = data.lambda().str();
    out["lambda_valuation"] = to_json(val_p(data.lambda(), data.p()));
    out["crit"] = data.crit();
    out["hodge_numbers"] = data.hodge();

    Json poly;
    poly["hodge"] = to_json(data.polygon().hodge);
    poly["newton"] = to_json(data.polygon().newton);
    poly["dominance"] = data.polygon().dominance;
    poly["endpoints_match"] = data.polygon().endpoints_match;
    out["polygons"] = std::move(poly);

    Json table = Json::array();
    for (const auto& s : enumerate_stabilizations(data)) {
        Json row;
        row["indices"] = index_set(s.indices);
        row["alpha"] = s.alpha.str();
        row["valuation"] = s.valuation;
        row["slope"] = s.slope;
        row["shalika"] = s.shalika;
        row["q_regular"] = s.q_regular;
        row["non_critical_slope"] = s.non_critical_slope;
        table.push_back(std::move(row));
    }
    out["stabilizations"] = std::move(table);

    const NcsCheck ncs = ncs_theorem_check(data);
    Json ncs_set = Json::array();
    for (const auto& s : ncs.ncs_set) ncs_set.push_back(index_set(s));
    out["ncs_set"] = std::move(ncs_set);
    out["ncs_contained"] = ncs.contained;

    if (auto pm = pair_containing_minimum(data)) {
        Json m;
        m["witness"] = index_set(pm->witness);
        m["witness_valuation"] = pm->witness_valuation;
        m["minimum"] = pm->minimum;
        m["attained"] = pm->minimum == pm->witness_valuation;
        out["pair_minimum"] = std::move(m);
    } else {
        out["pair_minimum"] = nullptr;
    }

    const PollackChecks pc = pollack_checks(data);
    Json pj;
    pj["pollack"] = pc.pollack;
    pj["r"] = pc.r.str();
    pj["slope_i_n"] = pc.slope_i_n.str();
    pj["lower_bound_ok"] = pc.lower_bound_ok;
    pj["both_ncs"] = pc.both_ncs;
    pj["bounded_case"] = pc.bounded_case;
    out["pollack_checks"] = std::move(pj);
    return out;
}

} // namespace polluxe
