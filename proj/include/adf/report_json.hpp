#pragma once

#include <json.hpp>

#include "adf/classical.hpp"
#include "adf/counting.hpp"
#include "adf/reduction.hpp"
#include "adf/solver.hpp"
#include "adf/threshold.hpp"

namespace adf {

using Json = nlohmann::ordered_json;

// {decision, method, equipartition: {X}, cycles, arc_directions, stats:
// {checked, total}}; arc_directions[c] lists the arcs of cycle c as [from, to].
// refutation and guarantee are added when present.
Json to_json(const Certificate& c);
Json to_json(const CensusReport& r);
// Big integers and rationals as decimal strings.
Json to_json(const CountReport& r);
Json to_json(const EdgeColoring& c);
Json to_json(const ConjectureReport& r);
Json to_json(const ClassicalReport& r);
Json to_json(const ThresholdBracket& b);

// Single line unless `pretty`, always newline-terminated.
std::string dump(const Json& j, bool pretty);

}  // namespace adf
