#include "frob/json_io.hpp"

namespace frob::io {

json to_json(const BigInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

toric::Fan fan_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("fan JSON must be an object");
  for (const char* key : {"dim", "rays", "cones"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("fan JSON lacks \"") + key + "\"");
  }
  toric::Fan fan;
  try {
    fan.dim = j.at("dim").get<std::int64_t>();
    fan.rays = j.at("rays").get<std::vector<toric::IntVec>>();
    fan.cones = j.at("cones").get<std::vector<toric::RayIndices>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed fan JSON: ") + e.what());
  }
  return fan;
}

json fan_to_json(const toric::Fan& fan) {
  return {{"dim", fan.dim}, {"rays", fan.rays}, {"cones", fan.cones}};
}

json to_json(const FiltrationRankTable& t) {
  json ranks = json::array();
  for (const auto& r : t.graded_ranks) ranks.push_back(to_json(r));
  json out = {{"c", t.c}, {"p", t.p}, {"graded_ranks", ranks}, {"total_rank", to_json(t.total_rank)}};
  if (t.ambient_dim) out["n"] = *t.ambient_dim;
  if (t.pushforward_rank) out["pushforward_rank"] = to_json(*t.pushforward_rank);
  return out;
}

json to_json(const CartierRankTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    rows.push_back({{"i", i},
                    {"fstar_omega", to_json(r.fstar_omega)},
                    {"z", to_json(r.z)},
                    {"b", to_json(r.b)}});
  }
  return {{"n", t.n}, {"p", t.p}, {"rows", rows}};
}

json to_json(const toric::FanViolation& v) {
  json out = {{"kind", std::string(toric::to_string(v.kind))},
              {"message", v.message},
              {"location", v.location}};
  if (v.determinant) out["determinant"] = to_json(*v.determinant);
  return out;
}

json to_json(const toric::PositivityVerdict& v) {
  json out = {{"verdict", std::string(to_string(v.value))}};
  if (v.witness) {
    out["witness"] = {{"cone", v.witness->cone},
                      {"ray", v.witness->ray},
                      {"pairing", v.witness->pairing},
                      {"bound", v.witness->bound}};
  }
  return out;
}

json to_json(const toric::LineBundleDecomposition& d) {
  json summands = json::array();
  for (const auto& s : d.summands) {
    summands.push_back({{"divisor", s.divisor.coeffs}, {"multiplicity", s.multiplicity}});
  }
  return {{"rank", d.rank()}, {"summands", summands}};
}

json to_json(const toric::BundleVerdict& v) {
  json out = {{"verdict", std::string(to_string(v.value))}};
  if (v.witness) out["witness_summand"] = v.witness->coeffs;
  if (v.witness_positivity) out["witness_positivity"] = to_json(*v.witness_positivity);
  return out;
}

json to_json(const projective::PnTwistDecomposition& d) {
  // Twists as an array of pairs so that ordering stays numeric.
  json summands = json::array();
  for (const auto& [m, mult] : d.summands) {
    summands.push_back({{"twist", m}, {"multiplicity", to_json(mult)}});
  }
  return {{"n", d.n}, {"p", d.p}, {"d", d.d}, {"rank", to_json(d.rank())}, {"summands", summands}};
}

json to_json(const bott::RegularityCertificate& c) {
  json checks = json::array();
  for (const auto& v : c.checks) {
    checks.push_back({{"i", v.i}, {"twist", v.twist}, {"dim", to_json(v.dim)}});
  }
  return {{"regular", c.regular}, {"regularity", c.regularity}, {"checks", checks}};
}

json to_json(const bott::PositivityRange& r) {
  return {{"ample", {{"lo", r.ample_lo}, {"hi", r.ample_hi}, {"empty", r.ample_empty()}}},
          {"nef", {{"lo", r.nef_lo}, {"hi", r.nef_hi}, {"empty", r.nef_empty()}}}};
}

json to_json(const obstruction::Verdict& v) {
  json trace = json::array();
  for (const auto& s : v.trace) {
    trace.push_back({{"rule", s.rule}, {"statement", s.statement}, {"detail", s.detail}});
  }
  return {{"verdict", std::string(to_string(v.value))}, {"trace", trace}};
}

}  // namespace frob::io
