#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bdi/cell_set.hpp"
#include "bdi/complex.hpp"
#include "bdi/quiver.hpp"
#include "bdi/series.hpp"
#include "bdi/vertex_map.hpp"

namespace bdi {

using Json = nlohmann::ordered_json;

/// Parses the instance document {"sources", "targets", "arrows", "m", "u"}.
Instance instance_from_json(const Json& doc, BuildMode mode);
Json instance_to_json(const Instance& instance);
/// Geometry, N and the normalization report.
Json instance_info_json(const Instance& instance);

/// Facets are arrays of [i, j, k] triples in ascending cell order.
Json cell_set_to_json(const Instance& instance, const CellSet& set);
CellSet cell_set_from_json(const Instance& instance, const Json& doc);
/// One line of sorted triples, e.g. "(3,2,1) (1,2,2)".
std::string cell_set_to_text(const Instance& instance, const CellSet& set);

Json road_map_to_json(const Instance& instance, const RoadMap& map);
Json corners_to_json(const Instance& instance, const CornerReport& report);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big_to_json(const BigInt& value);
Json polynomial_to_json(const Polynomial& p);
Json series_to_json(const HilbertSeries& series);

}  // namespace bdi
