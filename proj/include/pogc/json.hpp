#pragma once

#include <json.hpp>

#include "pogc/certificate.hpp"
#include "pogc/interval.hpp"
#include "pogc/pog.hpp"

namespace pogc {

// Certificates refer to vertices by name:
//   {"tag": "DirectedCut", "vertices": ["a"], "walk": [["a","b"], ...],
//    "location": "", "mode": "local_tournament"}
nlohmann::json certificate_to_json(const Pog& p, const Certificate& c);
// Throws Error on unknown tags, modes or vertex names.
Certificate certificate_from_json(const Pog& p, const nlohmann::json& j);

nlohmann::json arcs_to_json(const Pog& p);     // [["a","b"], ...]
nlohmann::json edges_to_json(const Pog& p);    // same, unordered pairs
nlohmann::json ordering_to_json(const Pog& p, const Ordering& o);
nlohmann::json representation_to_json(const Pog& p, const Representation& r);

}  // namespace pogc
