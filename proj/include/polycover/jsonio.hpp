#pragma once

#include <json.hpp>

#include "polycover/errors.hpp"
#include "polycover/geom.hpp"

namespace polycover {

using Json = nlohmann::json;

/// CG:SHOP coordinate: an integer, or {num, den} with integer parts.
/// Values wider than 64 bits travel as decimal strings.
Json json_from_rat(const Rat& v);
Rat rat_from_json(const Json& j);

Json json_from_point(const Point& p);
Point point_from_json(const Json& j);

Json json_from_ring(const std::vector<Point>& ring);
std::vector<Point> ring_from_json(const Json& j);

}  // namespace polycover
