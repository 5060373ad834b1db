#pragma once

#include <nlohmann/json.hpp>

#include <optional>

#include "alcove/arrangement.hpp"
#include "alcove/degeneration.hpp"
#include "alcove/harmonic.hpp"

namespace alcove {

using Json = nlohmann::ordered_json;

Json position_report_json(const PositionReport& rep);

/// {n, vertices, edges, alcoves, alcove_polygons, edge_alcove_degrees}
/// with coordinates as exact "p/q" strings.
Json arrangement_report(const Arrangement& arr);

Json harmonic_report(const HarmonicSpec& spec, const std::vector<RingReport>& rings,
                     const Arrangement* arr = nullptr,
                     const AlcoveClassification* cls = nullptr);

Json degeneration_report(const CurveFamily& family, const std::vector<TangentReport>& reports);

}  // namespace alcove
