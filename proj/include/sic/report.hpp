#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sic/contextuality.hpp"

namespace sic {

// JSON keys are stable: dim, rays, chromatic_number, clique_number,
// independence_number, is_sic, is_ks, witness, vacuous_ks, elapsed_ms.
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const TableReport& t);
nlohmann::json to_json(const SubsetSearchResult& r);
nlohmann::json bases_to_json(const RaySet& s, const std::vector<Basis>& bases);

std::string to_text(const Verdict& v);
std::string to_text(const TableReport& t);
std::string to_text(const SubsetSearchResult& r);
std::string bases_to_text(const RaySet& s, const std::vector<Basis>& bases);

} // namespace sic
