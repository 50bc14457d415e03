#pragma once

#include <string>

#include <json.hpp>

#include "derring/group_ring.hpp"

namespace derring {

/// "Zmod(6)", "GF(2,2)", "Mat(2,Zmod(3))", "Prod(Zmod(2),Zmod(3))", or a JSON
/// object { "orders": [...], "mul": [[[...],...],...], "one": [...] }.
FiniteRing parse_ring(const nlohmann::json &spec);
FiniteRing parse_ring(const std::string &spec);
inline FiniteRing parse_ring(const char *spec) {
  return parse_ring(std::string(spec));
}

/// "C6", "D4", "Q8", "S4", "A4", "Heis3", products with 'x' ("C2xC4"), or a
/// JSON object { "order": n, "table": [[...]] }.
FiniteGroup parse_group(const nlohmann::json &spec);
FiniteGroup parse_group(const std::string &spec);
inline FiniteGroup parse_group(const char *spec) {
  return parse_group(std::string(spec));
}

nlohmann::json ring_info_json(const FiniteRing &r, const Caps &caps);
nlohmann::json group_info_json(const FiniteGroup &g);

}  // namespace derring
