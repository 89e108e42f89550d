#ifndef THETA_JSON_IO_HPP
#define THETA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "theta/expression.hpp"

namespace theta {

/// Stable "v1" expression schema:
/// { "schema": "v1",
///   "target": {"ep":"1/4","e":"1/6"}, "jacobi_applied": false,
///   "terms": [ { "scalar":"-1/3", "phase_r":"0", "pi_power":1,
///                "dtheta_half_power":0,
///                "factors":[{"ep":"0","e":"0","exp":1}, ...] } ] }
nlohmann::json to_json(const ThetaExpression& e);
ThetaExpression expression_from_json(const nlohmann::json& j);

} // namespace theta

#endif
