#pragma once

#include <json.hpp>

#include "polluxe/growth_series.hpp"
#include "polluxe/pollack_log.hpp"
#include "polluxe/signed_decomp.hpp"
#include "polluxe/spectral.hpp"

namespace polluxe {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "polluxe/1";
inline constexpr const char* kVersion = "0.1.0";

Json to_json(const Rational& r);
Json to_json(const Valuation& v);  // "inf" for +∞
Json to_json(const ValuationEstimate& v);
Json to_json(const GrowthSeries& f);
Json to_json(const DistributionSeries& d);
Json to_json(const LogPi& log);
Json to_json(const CyclotomicPoint& pt);
Json to_json(const PointCheck& c);
Json to_json(const WeierstrassData& w);
Json to_json(const std::vector<PolygonVertex>& vertices);

/// Accepts "a/b", "a" or a JSON integer. Throws InvalidConfig otherwise.
Rational rational_from_json(const Json& j);
GrowthSeries growth_series_from_json(const Json& j);
DistributionSeries distribution_from_json(const Json& j);
/// Rebuilds the factors from (p, sign, crit, level) and checks the stored expansion.
LogPi log_pi_from_json(const Json& j);

/// Spectral input {"p","n","weight","satake"}.
SpectralData spectral_from_json(const Json& j);
/// Polygons, crit, λ, the stabilization table, NCS set and Pollack checks.
Json spectral_report(const SpectralData& data);

} // namespace polluxe
