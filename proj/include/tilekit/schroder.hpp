#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilekit/aztec.hpp"
#include "tilekit/encodings.hpp"

namespace tilekit {

enum class SchroderStep : uint8_t { NE, SE, E };

std::string step_name(SchroderStep s);
SchroderStep step_from_name(const std::string& name);

// Path i (1-based) runs from (-m-1+i, -i+1/2) to (m+1-i, -i+1/2) using
// NE (1,1), SE (1,-1) and E (2,0) steps. Segments are drawn on the
// dominos: a vertical gray-bottom domino carries SE, a vertical gray-top
// carries NE, a horizontal gray-right carries E through its waist, and a
// horizontal gray-left carries nothing.
struct SchroderPathFamily {
  int rank = 0;
  std::vector<std::vector<SchroderStep>> paths;

  friend bool operator==(const SchroderPathFamily&,
                         const SchroderPathFamily&) = default;
};

SchroderPathFamily tiling_to_paths(const Tiling& T);

// Rebuilds the tiling, filling the cells no path visits with gray-left
// horizontal dominos. Throws std::invalid_argument when steps cross each
// other, leave the region, or strand cells that cannot pair up.
Tiling paths_to_tiling(const SchroderPathFamily& F);

// Height of path i at abscissa q/2, returned doubled (so the exact value
// is the result over 2). q must stay within [2(-m-1+i), 2(m+1-i)].
int path_height_doubled(const SchroderPathFamily& F, int i, int q);

// x_i / y_i exponents read off the steps starting on slice 2i-1: SE and
// NE starts for PurpleGray, E starts for the WhitePink x_i with y_i the
// slice cells left over by all starts.
TilingWeight path_xy_weight(const SchroderPathFamily& F,
                            ModelKind model = ModelKind::PurpleGray);

// Total t-exponent of same-rank families, one per color in order: a
// factor for every point where a smaller color arrives strictly above a
// larger one (SE over E over NE), plus every NE step two colors share.
long path_interactions(const std::vector<SchroderPathFamily>& families);

// E steps guaranteed to open the i-th path of color a when k colors
// carry no interactions: min((k-1)i + 1 - a, m - i + 1).
int frozen_prefix(int color_a, int index_i, int k, int m);

}  // namespace tilekit
