#include "hamloc/model_io.hpp"

#include "hamloc/error.hpp"

namespace hamloc {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const TruncPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back(ordered_json::array({m.t, m.u, format_rational(c)}));
  return arr;
}

ordered_json to_json(const FixedComponent& c) {
  ordered_json j;
  j["name"] = std::string(to_string(c.name));
  j["half_dim"] = c.half_dim;
  j["moment_value"] = format_rational(c.moment_value);
  j["weights"] = c.weights;
  j["euler_class"] = to_json(c.euler_class);
  j["orient_norm"] = c.orient_norm;
  return j;
}

ordered_json to_json(const HamiltonianModel& m) {
  ordered_json j;
  j["total_dim"] = m.total_dim;
  j["components"] = ordered_json::array({to_json(m.x), to_json(m.y)});
  return j;
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::Parse, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

TruncPoly poly_from_json(const json& j, int trunc_order) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "class must be an array of [t, u, \"p/q\"] triples");
  TruncPoly p(trunc_order);
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number_integer() ||
        !term[2].is_string())
      throw Error(ErrorCode::Parse, "malformed term " + term.dump());
    const int t = term[0].get<int>();
    const int u = term[1].get<int>();
    if (t < 0 || u < 0 || u > trunc_order) throw Error(ErrorCode::Parse, "term out of range " + term.dump());
    p.add_term(t, u, parse_rational(term[2].get<std::string>()));
  }
  return p;
}

FixedComponent component_from_json(const json& j) {
  FixedComponent c;
  const json& name = require(j, "name");
  if (name == "X") {
    c.name = ComponentName::X;
  } else if (name == "Y") {
    c.name = ComponentName::Y;
  } else {
    throw Error(ErrorCode::Parse, "component name must be \"X\" or \"Y\"");
  }
  c.half_dim = require_int(j, "half_dim");
  if (c.half_dim < 0) throw Error(ErrorCode::Parse, "negative half_dim");
  const json& mv = require(j, "moment_value");
  if (!mv.is_string()) throw Error(ErrorCode::Parse, "moment_value must be a \"p/q\" string");
  c.moment_value = parse_rational(mv.get<std::string>());
  const json& ws = require(j, "weights");
  if (!ws.is_array()) throw Error(ErrorCode::Parse, "weights must be an array");
  for (const json& w : ws) {
    if (!w.is_number_integer()) throw Error(ErrorCode::Parse, "weights must be integers");
    c.weights.push_back(w.get<int>());
  }
  c.euler_class = poly_from_json(require(j, "euler_class"), c.half_dim);
  c.orient_norm = require_int(j, "orient_norm");
  return c;
}

HamiltonianModel model_from_json(const json& j) {
  HamiltonianModel m;
  m.total_dim = require_int(j, "total_dim");
  const json& comps = require(j, "components");
  if (!comps.is_array() || comps.size() != 2) throw Error(ErrorCode::Parse, "components must hold exactly X and Y");
  FixedComponent a = component_from_json(comps[0]);
  FixedComponent b = component_from_json(comps[1]);
  if (a.name == b.name) throw Error(ErrorCode::Parse, "components must be named X and Y");
  if (a.name == ComponentName::Y) std::swap(a, b);
  m.x = std::move(a);
  m.y = std::move(b);
  return m;
}

}  // namespace hamloc
