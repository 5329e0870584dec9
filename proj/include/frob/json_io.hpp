// JSON encoding of every result type, and the fan input format
//   {"dim": n, "rays": [[...], ...], "cones": [[i, j, ...], ...]}
//
// Integers that do not fit in int64 are written as decimal strings.
#pragma once

#include "json.hpp"

#include "frob/bott.hpp"
#include "frob/cartier_ranks.hpp"
#include "frob/obstruction.hpp"
#include "frob/projective.hpp"
#include "frob/toric.hpp"
#include "frob/trunc_sym.hpp"

namespace frob::io {

using nlohmann::json;

json to_json(const BigInt& v);

/// Throws InvalidArgument on malformed input. Does not validate the fan.
toric::Fan fan_from_json(const json& j);
json fan_to_json(const toric::Fan& fan);

json to_json(const FiltrationRankTable& t);
json to_json(const CartierRankTable& t);
json to_json(const toric::FanViolation& v);
json to_json(const toric::PositivityVerdict& v);
json to_json(const toric::LineBundleDecomposition& d);
json to_json(const toric::BundleVerdict& v);
json to_json(const projective::PnTwistDecomposition& d);
json to_json(const bott::RegularityCertificate& c);
json to_json(const bott::PositivityRange& r);
json to_json(const obstruction::Verdict& v);

}  // namespace frob::io
