#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "rdl/adversarial.hpp"
#include "rdl/distribution.hpp"
#include "rdl/market.hpp"
#include "rdl/profiles.hpp"
#include "rdl/robust.hpp"
#include "rdl/valuation.hpp"

namespace rdl {

using Json = nlohmann::ordered_json;

using ProfileSpec = std::variant<QuantileProfile, QualityProfile>;

// Wire formats.  All emitters round-trip through the matching parser.
Json to_json(const AtomicDistribution& d);
Json to_json(const QuantileProfile& p);
Json to_json(const QualityProfile& p);
Json to_json(const ProfileSpec& p);
Json to_json(const Valuation& v);
Json to_json(const MarketInstance& instance);
Json to_json(const AdversarialCertificate& cert);
Json to_json(const RatioReport& report);

AtomicDistribution distribution_from_json(const Json& j);
ProfileSpec profile_from_json(const Json& j);
Valuation valuation_from_json(const Json& j);
MarketInstance instance_from_json(const Json& j);
AdversarialCertificate certificate_from_json(const Json& j);

Json load_json_file(const std::string& path);
MarketInstance load_instance(const std::string& path);

/// Resolves a profile argument: a preset name ("uniform:K", "upwork",
/// "airbnb"), inline JSON, a path to a profile JSON file, or a
/// comma-separated threshold list.
ProfileSpec parse_profile(const std::string& spec);

} // namespace rdl
