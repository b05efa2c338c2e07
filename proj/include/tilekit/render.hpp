#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilekit/io.hpp"

namespace tilekit {

struct RenderSpec {
  Artifact artifact;
  std::optional<CurveFamily> overlay;  // drawn over each diamond pane
  std::vector<std::string> palette;    // "#rrggbb" per color; empty = default
  double scale = 24.0;                 // pixels per lattice unit
  // Extra legend rows appended after the derived ones (model, size, colors).
  std::vector<std::pair<std::string, std::string>> legend;
};

// Built-in per-color palette, cycled when more colors are asked for.
const std::vector<std::string>& default_palette();

// One SVG document per spec. Identical specs produce identical bytes:
// elements are emitted in a fixed order with three-decimal coordinates.
// Layers render as side-by-side panes, one per color; dominos and
// lozenges are shaded by type within their color. Statistics render as
// a per-cell heat map of horizontal-domino coverage. The overlay family
// is rescaled by the rank and drawn once per pane as one path per
// branch. Throws std::invalid_argument when the palette is shorter than
// the color count or the scale is not positive.
std::string render_svg(const RenderSpec& spec);

}  // namespace tilekit
