#pragma once

#include <json.hpp>

#include "freecert/axes.hpp"
#include "freecert/certify.hpp"
#include "freecert/whgraph.hpp"

namespace freecert {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"schema": 1, "rank": r, "edges": [["x1", "x2'"], ...]}
Json to_json(const WhiteheadGraph& g);
WhiteheadGraph graph_from_json(const Json& j);

/// {"schema": 1, "overlap": n | "infinite", "length": n | "infinite",
///  "endpoints": [low, high]?}
Json to_json(const AxisOverlap& o);

/// {"schema": 1, "subject": ..., "verdict": ..., "rule": ...,
///  "trail": {"w": ..., "minimal": bool, "overlap": n | "infinite",
///            "threshold": n, "k": int?, "subgraph": bool?, ...}}
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, int rank);

/// {"schema": 1, "ok": bool, "checks": {name: {"status": ..., "detail": ...}}}
Json to_json(const Report& r);

}  // namespace freecert
