#pragma once

#include "json.hpp"

#include "gct/chardecomp.hpp"
#include "gct/gct.hpp"
#include "gct/liealg.hpp"

namespace gct {

using Json = nlohmann::ordered_json;

Json weight_json(const DominantWeight& w);
/// {"a,b,c": mult, ...}, largest weight first.
Json table_json(const std::map<DominantWeight, std::uint64_t>& entries);
Json mtable_json(const MTable& t);
Json qtable_json(const QTable& q);

Json isotropy_json(const IsotropyReport& r, const std::string& target);
Json profile_json(const PaddedProfile& p);
Json decomp_json(const DecompReport& r);
Json certificate_json(const CertificateReport& r);

/// Parses {"rank": k, "entries": [{"weight": [...], "mult": m}, ...]}.
WeightCharacter character_from_json(const Json& j);

}  // namespace gct
