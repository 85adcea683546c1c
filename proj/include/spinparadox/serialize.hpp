#pragma once

// JSON and CSV encodings of the library's result types. Key order is fixed
// (ordered_json), so identical values always serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "spinparadox/measurement.hpp"
#include "spinparadox/paradox.hpp"
#include "spinparadox/rational.hpp"
#include "spinparadox/rotation.hpp"
#include "spinparadox/spin.hpp"

namespace spinparadox {

using Json = nlohmann::ordered_json;

/// {"twice_s": 4, "s": "2"}
Json to_json(const Spin& spin);
/// {"num": 1, "den": 16}
Json to_json(const Rational& r);
/// {"label": "x", "theta": ..., "phi": ...}
Json to_json(const Axis& axis);
/// Row-major array of rows, each entry a [re, im] pair.
Json matrix_to_json(const OperatorMatrix& m);
/// {"spin", "axis", "amplitudes": [{"twice_m", "re", "im"}]}
Json to_json(const Expansion& e);
/// {"spin", "axes", "shots", "seed", "condition", "accepted",
///  "counts": [{"chain": [twice_m...], "count"}]}
Json to_json(const SequenceStats& stats);
/// {"twice_s", "lhs", "rhs", "violated", "min_sy_squared_needed",
///  "joint_probability"}
Json to_json(const ParadoxReport& report);
/// {"twice_vx", "twice_vy", "twice_vz"}
Json to_json(const Assignment& a);

/// Header line "chain,count" followed by one row per outcome chain; the
/// chain column holds space-separated signed m values such as "+2 -1/2".
std::string counts_to_csv(const SequenceStats& stats);

}  // namespace spinparadox
