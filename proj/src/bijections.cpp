#include "tilekit/bijections.hpp"

#include <stdexcept>
#include <utility>

#include "tilekit/encodings.hpp"

namespace tilekit {

ShiftPlan shift_plan(int m, int k) {
  if (m < 1 || k < 1) throw std::invalid_argument("need m >= 1 and k >= 1");
  ShiftPlan plan;
  plan.rank = m;
  plan.colors = k;
  plan.shift.assign(k, std::vector<int>(m, 0));
  for (int a = 1; a <= k; ++a)
    for (int i = 1; i <= m; ++i) plan.shift[a - 1][i - 1] = (k - 1) * i + 1 - a;
  return plan;
}

int shifted_position(int color_a, int index_i, int k) {
  if (k < 1 || color_a < 1 || color_a > k || index_i < 1)
    throw std::invalid_argument("bad shift query");
  return (index_i - 1) * k + (k - color_a + 1);
}

Tiling t0_forward(const KTiling& KT) {
  if (KT.empty()) throw std::invalid_argument("need at least one layer");
  const int k = static_cast<int>(KT.size());
  const int m = KT.front().rank();
  for (const Tiling& T : KT)
    if (T.rank() != m) throw std::invalid_argument("layers differ in rank");
  if (interactions(KT, ModelKind::PurpleGray) != 0)
    throw std::invalid_argument("input has interactions");
  std::vector<std::vector<SchroderStep>> placed(m);
  for (int a = 1; a <= k; ++a) {
    SchroderPathFamily F = tiling_to_paths(KT[a - 1]);
    for (int i = 1; i <= m; ++i) {
      const auto& path = F.paths[i - 1];
      const int j = i * k - a + 1;
      if (j > m) {
        // Shifted past the lower-left boundary, so it must be all east.
        if (path != std::vector<SchroderStep>(m + 1 - i, SchroderStep::E))
          throw std::logic_error("unfrozen path in an interaction-free input");
        continue;
      }
      const int s = j - i;
      for (int e = 0; e < s; ++e)
        if (path[e] != SchroderStep::E)
          throw std::logic_error("unfrozen prefix in an interaction-free input");
      placed[j - 1].assign(path.begin() + s, path.end());
    }
  }
  SchroderPathFamily G;
  G.rank = m;
  G.paths = std::move(placed);
  return paths_to_tiling(G);
}

KTiling t0_inverse(const Tiling& T, int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  const int m = T.rank();
  SchroderPathFamily F = tiling_to_paths(T);
  KTiling out;
  out.reserve(k);
  for (int a = 1; a <= k; ++a) {
    SchroderPathFamily layer;
    layer.rank = m;
    layer.paths.resize(m);
    for (int i = 1; i <= m; ++i) {
      const int j = i * k - a + 1;
      auto& path = layer.paths[i - 1];
      if (j <= m) {
        path.assign(j - i, SchroderStep::E);
        path.insert(path.end(), F.paths[j - 1].begin(), F.paths[j - 1].end());
      } else {
        path.assign(m + 1 - i, SchroderStep::E);
      }
    }
    out.push_back(paths_to_tiling(layer));
  }
  return out;
}

KTiling phi_involution(const KTiling& KT) {
  KTiling out;
  out.reserve(KT.size());
  for (const Tiling& T : KT) out.push_back(reflect_diagonal(T));
  return out;
}

}  // namespace tilekit
