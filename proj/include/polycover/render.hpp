#pragma once

#include <string>
#include <vector>

#include "polycover/geom.hpp"
#include "polycover/pipeline.hpp"

namespace polycover {

struct RenderOptions {
  double stroke_width = 0;  // 0 = auto from extent
  double fill_opacity = 0.45;
  bool show_uncovered = false;
};

/// Instance outline (one path per ring) with translucent filled convex
/// polygons on top, one path each, in deterministic color order.
/// Uncovered components, when requested, are hatched.
std::string render_svg(const PolygonWithHoles& p, const std::vector<ConvexPolygon>& polys,
                       const RenderOptions& opt = {});

}  // namespace polycover
