#pragma once

#include <vector>

#include "tilekit/aztec.hpp"
#include "tilekit/schroder.hpp"

namespace tilekit {

// Down-and-left shift amounts sending color a's i-th path to global
// position (i-1)k + (k-a+1); nonnegative whenever a <= i(k-1)+1.
struct ShiftPlan {
  int rank = 0;
  int colors = 0;
  std::vector<std::vector<int>> shift;  // [color-1][index-1]
};

ShiftPlan shift_plan(int m, int k);
int shifted_position(int color_a, int index_i, int k);

// Collapses a zero-interaction k-tiling to the single tiling whose paths
// are the shifted non-frozen suffixes. Throws std::invalid_argument when
// the input carries interactions.
Tiling t0_forward(const KTiling& KT);

// Rebuilds the unique zero-interaction k-tiling mapping to T: the path
// at position j becomes the i-th path of color a with i = ceil(j/k) and
// a = ik + 1 - j, refrozen behind j - i east steps.
KTiling t0_inverse(const Tiling& T, int k);

// Reflection of every layer over the diagonal, keeping the color order.
KTiling phi_involution(const KTiling& KT);

}  // namespace tilekit
