#pragma once

#include <string>

#include "boroczky/boroczky.hpp"

namespace boroczky {

struct RenderStyle {
  double viewport_radius = 2.2;  // drawing covers [-R, R]^2
  int size_px = 800;
  bool color_by_orbit = true;  // orbit-size glyph colors when 3 | n
};

/// SVG rendering of a configuration: unit circle, lines clipped to the
/// viewport, triple points marked by orbit size when available. The three
/// lines through the origin (j = 0, n/3, 2n/3 when 3 | n) are dotted. All
/// coordinates come from the numeric embedding; nothing feeds back into
/// exact computation.
std::string render_svg(const Configuration& c, const IncidenceReport& rep,
                       const RenderStyle& style = {});

}  // namespace boroczky
