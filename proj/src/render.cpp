#include "polycover/render.hpp"

#include <sstream>

namespace polycover {

namespace {

// y is negated so the SVG, with its downward y axis, matches the model.
void path_from_ring(std::ostringstream& out, const std::vector<Point>& ring) {
  for (std::size_t i = 0; i < ring.size(); i++) {
    out << (i == 0 ? "M" : "L") << ring[i].x.get_d() << " " << -ring[i].y.get_d();
  }
  out << "Z";
}

const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};

}  // namespace

std::string render_svg(const PolygonWithHoles& p, const std::vector<ConvexPolygon>& polys,
                       const RenderOptions& opt) {
  auto [lo, hi] = p.bbox();
  double x0 = lo.x.get_d(), y0 = -hi.y.get_d();
  double w = hi.x.get_d() - lo.x.get_d();
  double h = hi.y.get_d() - lo.y.get_d();
  double margin = 0.03 * std::max(w, h);
  double stroke = opt.stroke_width > 0 ? opt.stroke_width : std::max(w, h) / 300.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - margin << " "
      << y0 - margin << " " << w + 2 * margin << " " << h + 2 * margin << "\">\n";
  out << "<defs><pattern id=\"hatch\" width=\"" << 6 * stroke << "\" height=\""
      << 6 * stroke << "\" patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">"
      << "<rect width=\"" << 6 * stroke << "\" height=\"" << 6 * stroke
      << "\" fill=\"#ffe5e5\"/><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << 6 * stroke
      << "\" stroke=\"#cc2222\" stroke-width=\"" << 2 * stroke << "\"/></pattern></defs>\n";

  // Instance rings: outer then holes, hole fill via even-odd rule.
  out << "<g class=\"instance\" fill=\"#f5f5f0\" fill-rule=\"evenodd\" stroke=\"#222\" "
      << "stroke-width=\"" << stroke << "\" stroke-linejoin=\"round\">\n";
  out << "<path d=\"";
  path_from_ring(out, p.outer());
  out << "\"/>\n";
  for (const auto& hole : p.holes()) {
    out << "<path fill=\"#ffffff\" d=\"";
    path_from_ring(out, hole);
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"cover\" stroke-width=\"" << stroke / 2
      << "\" stroke-linejoin=\"round\" fill-opacity=\"" << opt.fill_opacity << "\">\n";
  for (std::size_t i = 0; i < polys.size(); i++) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<path fill=\"" << color << "\" stroke=\"" << color << "\" d=\"";
    path_from_ring(out, polys[i].vertices());
    out << "\"/>\n";
  }
  out << "</g>\n";

  if (opt.show_uncovered) {
    UncoveredRegion u = uncovered_region(p, polys);
    out << "<g class=\"uncovered\" stroke=\"#cc2222\" stroke-width=\"" << stroke / 2
        << "\" fill=\"url(#hatch)\" fill-rule=\"evenodd\">\n";
    for (const UncoveredComponent& comp : u.components) {
      out << "<path class=\"uncovered-component\" d=\"";
      if (comp.polygon) {
        path_from_ring(out, comp.polygon->outer());
        for (const auto& hole : comp.polygon->holes()) path_from_ring(out, hole);
      } else {
        for (const ConvexPolygon& piece : comp.fallback_pieces)
          path_from_ring(out, piece.vertices());
      }
      out << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace polycover
