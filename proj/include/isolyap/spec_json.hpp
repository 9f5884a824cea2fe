#ifndef ISOLYAP_SPEC_JSON_HPP
#define ISOLYAP_SPEC_JSON_HPP

// JSON wire format for ensemble specifications.
//
//   ensemble: {"beta": 1|2|4, "n": <int>, "rows": [<row>, ...]}
//   row:      {"type": "gaussian", "sigma": s} | {"type": "beta1", "nu": v}
//           | {"type": "beta2", "omega": w}
//   shifted:  {"beta": 1|2|4, "n": <int>, "c": <nonzero>, "sigma": s}
//
// Parsing is strict: wrong arity, unknown row types, or parameter domain
// violations raise std::invalid_argument / std::domain_error.

#include "isolyap/ensembles.hpp"

#include <json.hpp> // vendored single-header nlohmann::json

#include <string>

namespace isolyap {
namespace ensembles {

nlohmann::json to_json(const EnsembleSpec& spec);
nlohmann::json to_json(const ShiftedGaussianSpec& spec);
nlohmann::json to_json(const AnySpec& spec);

EnsembleSpec ensemble_from_json(const nlohmann::json& j);
ShiftedGaussianSpec shifted_from_json(const nlohmann::json& j);

// Dispatches on the presence of "c" (shifted) vs "rows" (plain ensemble).
AnySpec spec_from_json(const nlohmann::json& j);
AnySpec spec_from_file(const std::string& path);

} // namespace ensembles
} // namespace isolyap

#endif
