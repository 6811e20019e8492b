#pragma once

#include <json.hpp>

#include "hamloc/localization.hpp"

namespace hamloc {

// Wire format of a component, keys in this order:
//   {"name": "X", "half_dim": 2, "moment_value": "0", "weights": [1, 1],
//    "euler_class": [[t_pow, u_pow, "p/q"], ...], "orient_norm": 1}
// euler_class entries are sorted by (t_pow, u_pow). A model is
//   {"total_dim": 8, "components": [X, Y]}.

nlohmann::ordered_json to_json(const TruncPoly& p);
nlohmann::ordered_json to_json(const FixedComponent& c);
nlohmann::ordered_json to_json(const HamiltonianModel& m);

/// Throw Error{Parse} on missing keys or malformed values.
TruncPoly poly_from_json(const nlohmann::json& j, int trunc_order);
FixedComponent component_from_json(const nlohmann::json& j);
HamiltonianModel model_from_json(const nlohmann::json& j);

}  // namespace hamloc
