#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tilekit/algebra.hpp"
#include "tilekit/sampler.hpp"

namespace tilekit {

// Hexagon with side lengths a, b, c, a, b, c on the triangular lattice,
// handled in sheared integer coordinates where the region is
// {0 <= x <= a+b, 0 <= y <= a+c, a <= x+y <= a+b+c}. The renderer owns
// the shear that makes the lattice triangles equilateral.
struct HexRegion {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const HexRegion&, const HexRegion&) = default;
};

// Entry [s][j] is the row (1-based, bottom to top) of the j-th unit right
// step of strand s; rows are weakly increasing along each strand.
using RightStepMatrix = std::vector<std::vector<int>>;

// Non-crossing strand picture of one lozenge tiling. Strand s (0-based,
// leftmost first) enters the bottom edge in column s, takes b unit right
// steps across the a+c rows, and leaves the top edge in column b+s. A
// strand steps strictly later than its right neighbour:
// steps[s][j] >= steps[s+1][j] + 1.
struct HexPathFamily {
  HexRegion region;
  RightStepMatrix steps;
  friend bool operator==(const HexPathFamily&, const HexPathFamily&) = default;
};

// One strand family per color, smaller colors first.
using KLozengeTiling = std::vector<HexPathFamily>;

// Throw invalid_argument on shape or ordering violations.
void validate(const HexPathFamily& f);
void validate(const KLozengeTiling& tiling);

// Number of lozenge tilings of the a x b x c hexagon (equivalently,
// plane partitions in an a x b x c box).
mpz_class macmahon(int a, int b, int c);

// Every tiling of the a x b x c hexagon; throws length_error when the
// count exceeds cap.
std::vector<HexPathFamily> enumerate_lozenge(int a, int b, int c,
                                             long long cap = 1 << 21);

// Interactions of the ordered color pair (lo = smaller color, hi =
// larger). Row by row, a unit right step of lo leaving column x counts
// one interaction when a hi strand crosses the same edge in that row,
// and another when a hi strand ends the row at column x; the second kind
// is skipped on the top row, where the hi lozenge it points at would
// stick out of the hexagon.
long lozenge_pair_interactions(const HexPathFamily& lo,
                               const HexPathFamily& hi);

// Sum of pair interactions over ordered color pairs; 0 <= total <=
// C(k,2)ab, and for k = 1 it is 0.
long lozenge_interactions(const KLozengeTiling& tiling);

// Exact generating polynomial in q and t: the sum over color k-tuples of
// tilings of q^(total step weight) t^(interactions), where a right step
// in row r weighs r-1. Computed by a transfer recursion over rows whose
// state is one strand-progress vector per color; throws length_error
// when the state tuple count exceeds cap.
Poly hex_generating_polynomial(int a, int b, int c, int k,
                               long long cap = 1 << 22);

// Same sum with q and t fixed to numbers.
Rational hex_transfer_value(int a, int b, int c, int k, const Rational& q,
                            const Rational& t, long long cap = 1 << 22);

// Polynomial in t at fixed numeric q, rebuilt from transfer values at
// C(k,2)ab + 1 interpolation nodes.
Poly hex_polynomial_in_t(int a, int b, int c, int k, const Rational& q,
                         long long cap = 1 << 22);

// Vertical-axis reflection composed with color reversal: maps tilings of
// a x b x c to tilings of c x b x a and shifts the interaction count by
// C(k,2) * b * (c - a). Applying it twice gives back the input.
KLozengeTiling hex_flip_symmetry(const KLozengeTiling& tiling);

// Zero-interaction k-tuples of a x b x c correspond to single tilings of
// ka x b x (c-(k-1)a): color alpha's strand s becomes combined strand
// s*k + alpha, keeping its step rows. Throws invalid_argument unless the
// input has zero interactions.
HexPathFamily hex_t0_bijection(const KLozengeTiling& tiling);

// Inverse slicing; the combined side a must be divisible by k.
KLozengeTiling hex_t0_inverse(const HexPathFamily& f, int k);

// Maximal-interaction k-tuples of a x b x c correspond to single tilings
// of a x kb x c by interleaving step rows color by color:
// combined steps[s][j*k + alpha] = color alpha's steps[s][j]. Throws
// invalid_argument unless the input has C(k,2)ab interactions.
HexPathFamily hex_tinf_bijection(const KLozengeTiling& tiling);

// Inverse de-interleaving; the combined side b must be divisible by k.
KLozengeTiling hex_tinf_inverse(const HexPathFamily& f, int k);

// Heights of the stack of unit cubes over each base cell: entry [i][j]
// is c - steps[a-1-i][j] + i + 1, weakly decreasing along rows and
// columns with values in [0, c].
std::vector<std::vector<int>> plane_partition(const HexPathFamily& f);
HexPathFamily from_plane_partition(const HexRegion& region,
                                   const std::vector<std::vector<int>>& pp);

// Isometric projection of cube-surface coordinates: the three axis
// directions map to plane vectors at mutual angle 120 degrees and the
// all-ones direction is collapsed.
std::pair<double, double> hex_project(double x, double y, double z);

// One lozenge of a single color's tiling, in sheared coordinates.
// type 1: vertical rhombus at column col between rows row and row+1;
// type 2: the unit cell (row, col) the color's strands leave empty;
// type 3: the unit right step col -> col+1 in row row.
// Per tiling the three types appear exactly ac, bc and ab times.
struct Lozenge {
  int type = 0;
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};
using LozengeTiling = std::vector<Lozenge>;

LozengeTiling lozenges(const HexPathFamily& f);

// Corner loop in sheared coordinates, counterclockwise once the shear
// is applied.
std::array<std::pair<int, int>, 4> lozenge_corners(const Lozenge& l);

struct HexSamplerConfig {
  HexRegion region;
  int colors = 1;
  Rational t = 1;
  long long steps = 0;
  long long burn_in = 0;
  long long thinning = 1;
  uint64_t seed = 0;
};

// Throws invalid_argument unless the sides, colors, thinning >= 1,
// steps > burn_in >= 0 and t >= 0.
void validate(const HexSamplerConfig& cfg);

// The minimal-weight tiling: every strand steps as early as it can, all
// of strand s's steps in row a - s.
HexPathFamily hex_base_tiling(const HexRegion& region);

// Whether steps[color][strand][j] may move to the adjacent row in
// direction dir (+1 or -1) without breaking validity. Moves change one
// entry at a time, which adds or removes one cube of the color's stack.
bool hex_move_valid(const KLozengeTiling& state, int color, int strand,
                    int j, int dir);

// Interaction change of a valid move; only the two rows the move touches
// need recounting.
long hex_move_delta(const KLozengeTiling& state, int color, int strand,
                    int j, int dir);

// One Metropolis proposal: uniform (color, strand, step, direction); a
// valid move is applied with probability min(1, t^delta). Draws four
// indices from rng, plus one acceptance variate when the move is valid.
KLozengeTiling hex_mcmc_step(const KLozengeTiling& state, const Rational& t,
                             SplitMix64& rng);

// Runs the chain from the minimal-weight start (its zero-interaction
// preimage when t = 0), recording every thinning-th state after burn_in.
// Deterministic in cfg.seed; iterating hex_mcmc_step with the same rng
// visits exactly the same states.
KLozengeTiling hex_run(const HexSamplerConfig& cfg,
                       std::vector<KLozengeTiling>* snapshots = nullptr);

// Draws from the exact distribution proportional to t^interactions by
// enumerating all k-tuples; refuses when the tuple count exceeds the cap
// and throws invalid_argument when every tuple has weight zero.
KLozengeTiling hex_exact_sample(int a, int b, int c, int k, const Rational& t,
                                uint64_t seed, long tuple_cap = 1 << 22);

}  // namespace tilekit
