#include "tilekit/aztec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tilekit {

namespace {
int corner_reach(int a) { return a >= 0 ? a + 1 : -a; }
}  // namespace

bool aztec_contains(int m, int a, int b) {
  return corner_reach(a) + corner_reach(b) <= m + 1;
}

std::vector<std::pair<int, int>> aztec_cells(int m) {
  std::vector<std::pair<int, int>> cells;
  for (int a = -m; a < m; ++a)
    for (int b = -m; b < m; ++b)
      if (aztec_contains(m, a, b)) cells.push_back({a, b});
  return cells;
}

bool cell_is_white(int m, int a, int b) { return ((a + b + m) & 1) != 0; }

std::string domino_type_name(DominoType t) {
  switch (t) {
    case DominoType::I: return "I";
    case DominoType::II: return "II";
    case DominoType::III: return "III";
    case DominoType::IV: return "IV";
  }
  throw std::logic_error("domino_type_name: bad type");
}

DominoType domino_type(int m, const Domino& d) {
  bool anchor_white = cell_is_white(m, d.x, d.y);
  if (d.o == Orientation::Horizontal)
    return anchor_white ? DominoType::I : DominoType::III;
  return anchor_white ? DominoType::II : DominoType::IV;
}

Tiling::Tiling(int rank, std::vector<Domino> dominos)
    : rank_(rank), dominos_(std::move(dominos)) {
  if (rank_ < 1) throw std::invalid_argument("Tiling: rank must be positive");
  std::sort(dominos_.begin(), dominos_.end());
  std::set<std::pair<int, int>> covered;
  for (const Domino& d : dominos_) {
    for (auto cell : {d.cell0(), d.cell1()}) {
      if (!aztec_contains(rank_, cell.first, cell.second))
        throw std::invalid_argument("Tiling: domino leaves the region");
      if (!covered.insert(cell).second)
        throw std::invalid_argument("Tiling: cell covered twice");
    }
  }
  if (static_cast<int>(covered.size()) != 2 * rank_ * (rank_ + 1))
    throw std::invalid_argument("Tiling: region not fully covered");
}

std::array<int, 4> type_histogram(const Tiling& T) {
  std::array<int, 4> h{};
  for (const Domino& d : T.dominos())
    ++h[static_cast<int>(domino_type(T.rank(), d))];
  return h;
}

Tiling all_horizontal(int m) {
  std::vector<Domino> ds;
  for (int b = -m; b < m; ++b) {
    int g = m + 1 - corner_reach(b);  // row spans a in [-g, g-1]
    for (int a = -g; a < g; a += 2) ds.push_back({a, b, Orientation::Horizontal});
  }
  return Tiling(m, std::move(ds));
}

std::vector<std::pair<int, int>> flippable_blocks(const Tiling& T) {
  std::set<Domino> have(T.dominos().begin(), T.dominos().end());
  std::vector<std::pair<int, int>> blocks;
  for (const Domino& d : T.dominos()) {
    if (d.o == Orientation::Horizontal) {
      if (have.count({d.x, d.y + 1, Orientation::Horizontal}))
        blocks.push_back({d.x, d.y});
    } else {
      if (have.count({d.x + 1, d.y, Orientation::Vertical}))
        blocks.push_back({d.x, d.y});
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Tiling apply_flip(const Tiling& T, std::pair<int, int> block) {
  auto [bx, by] = block;
  std::set<Domino> ds(T.dominos().begin(), T.dominos().end());
  Domino h0{bx, by, Orientation::Horizontal}, h1{bx, by + 1, Orientation::Horizontal};
  Domino v0{bx, by, Orientation::Vertical}, v1{bx + 1, by, Orientation::Vertical};
  if (ds.count(h0) && ds.count(h1)) {
    ds.erase(h0), ds.erase(h1);
    ds.insert(v0), ds.insert(v1);
  } else if (ds.count(v0) && ds.count(v1)) {
    ds.erase(v0), ds.erase(v1);
    ds.insert(h0), ds.insert(h1);
  } else {
    throw std::invalid_argument("apply_flip: block is not flippable");
  }
  return Tiling(T.rank(), std::vector<Domino>(ds.begin(), ds.end()));
}

Tiling reflect_diagonal(const Tiling& T) {
  std::vector<Domino> ds;
  ds.reserve(T.dominos().size());
  for (const Domino& d : T.dominos()) {
    // Cells (x,y) and the partner swap coordinates; orientation flips.
    if (d.o == Orientation::Horizontal)
      ds.push_back({d.y, d.x, Orientation::Vertical});
    else
      ds.push_back({d.y, d.x, Orientation::Horizontal});
  }
  return Tiling(T.rank(), std::move(ds));
}

std::vector<Tiling> enumerate_tilings(int m, int cap) {
  if (m < 1) throw std::invalid_argument("enumerate_tilings: rank must be positive");
  if (m > cap)
    throw std::invalid_argument("enumerate_tilings: rank " + std::to_string(m) +
                                " exceeds the cap " + std::to_string(cap));
  std::set<Tiling> seen;
  std::vector<Tiling> order;
  std::vector<Tiling> frontier{all_horizontal(m)};
  seen.insert(frontier[0]);
  order.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Tiling> next;
    for (const Tiling& T : frontier) {
      for (auto block : flippable_blocks(T)) {
        Tiling U = apply_flip(T, block);
        if (seen.insert(U).second) {
          order.push_back(U);
          next.push_back(std::move(U));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace tilekit
