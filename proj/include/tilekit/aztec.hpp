#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tilekit {

// Cells are unit squares named by their integer lower-left corner (a,b).
// Rank m keeps the cells whose square lies in |x|+|y| <= m+1; on corners
// that reads f(a)+f(b) <= m+1 with f(a) = a >= 0 ? a+1 : -a.
bool aztec_contains(int m, int a, int b);
std::vector<std::pair<int, int>> aztec_cells(int m);  // sorted, 2m(m+1) cells
bool cell_is_white(int m, int a, int b);              // white iff a+b+m odd

enum class Orientation : uint8_t { Horizontal, Vertical };

struct Domino {
  int x = 0, y = 0;  // lower-left covered cell
  Orientation o = Orientation::Horizontal;

  std::pair<int, int> cell0() const { return {x, y}; }
  std::pair<int, int> cell1() const {
    return o == Orientation::Horizontal ? std::pair{x + 1, y} : std::pair{x, y + 1};
  }
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

// Type I: horizontal, gray half on the right. Type III: gray on the left.
// Type II: vertical, gray on top. Type IV: gray on the bottom.
enum class DominoType : uint8_t { I, II, III, IV };

std::string domino_type_name(DominoType t);
DominoType domino_type(int m, const Domino& d);

// A full tiling of the rank-m region; dominos kept sorted.
class Tiling {
 public:
  Tiling(int rank, std::vector<Domino> dominos);

  int rank() const { return rank_; }
  const std::vector<Domino>& dominos() const { return dominos_; }

  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend bool operator<(const Tiling& a, const Tiling& b) {
    return a.rank_ != b.rank_ ? a.rank_ < b.rank_ : a.dominos_ < b.dominos_;
  }

 private:
  int rank_ = 0;
  std::vector<Domino> dominos_;
};

using KTiling = std::vector<Tiling>;

// Counts of (I, II, III, IV).
std::array<int, 4> type_histogram(const Tiling& T);

// Every row of the region has even length, so horizontal dominos fill it.
Tiling all_horizontal(int m);

// Lower-left corners of 2x2 squares covered by two parallel dominos.
std::vector<std::pair<int, int>> flippable_blocks(const Tiling& T);

// Rotates the domino pair in the given block; throws if not flippable.
Tiling apply_flip(const Tiling& T, std::pair<int, int> block);

// Reflection across the line y = x; swaps types I<->II and III<->IV.
Tiling reflect_diagonal(const Tiling& T);

// All tilings, found by flip search from the all-horizontal tiling.
// Count is 2^(m(m+1)/2); refuses ranks above the cap.
std::vector<Tiling> enumerate_tilings(int m, int cap = 5);

}  // namespace tilekit
