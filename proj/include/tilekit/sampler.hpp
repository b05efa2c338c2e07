#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tilekit/algebra.hpp"
#include "tilekit/aztec.hpp"

namespace tilekit {

// Named generator so runs are reproducible across machines; the standard
// splitmix64 stream, split() forks an independent child stream.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  SplitMix64 split() { return SplitMix64(next()); }
  // Uniform draw in [0, n); n must be positive.
  uint64_t below(uint64_t n);
};

inline constexpr const char* kSamplerRng = "splitmix64";

struct SamplerConfig {
  int rank = 0;
  int colors = 1;
  Rational t = 1;
  long long steps = 0;
  long long burn_in = 0;
  long long thinning = 1;
  uint64_t seed = 0;
};

// Throws invalid_argument unless rank, colors, thinning >= 1,
// steps > burn_in >= 0 and t >= 0.
void validate(const SamplerConfig& cfg);

// Proposal space of the chain: every 2x2 square whose four cells lie in
// the rank-m region, in (a, b) order. State independent, so the uniform
// proposal is symmetric.
std::vector<std::pair<int, int>> proposal_blocks(int m);

// min(1, t^delta); t = 0 gives 1 for delta <= 0 and 0 otherwise.
Rational flip_acceptance(const Rational& t, long delta);

// Change in the total pair interaction count if the given layer's block
// is flipped. The block must be flippable in that layer. Only the two
// gray squares of the block can move, so the cost is O(colors).
long flip_interaction_delta(const KTiling& state, int color,
                            std::pair<int, int> block);

// One Metropolis proposal: uniform (color, block); a flippable block is
// rotated with probability min(1, t^delta). Draws two indices from rng,
// plus one acceptance variate when the block is flippable.
KTiling mcmc_step(const KTiling& state, const SamplerConfig& cfg,
                  SplitMix64& rng);

// Per cell, per color, how often each domino type covered the cell.
struct CellStatistics {
  int rank = 0;
  int colors = 0;
  long long samples = 0;
  std::vector<std::pair<int, int>> cells;  // aztec_cells(rank)
  // counts[color * cells.size() + cell][type index]
  std::vector<std::array<long long, 4>> counts;

  double frequency(int color, size_t cell, DominoType type) const;
};

// Exact elementwise addition of two runs over the same geometry.
void merge(CellStatistics& into, const CellStatistics& other);

// Runs the chain from the all-horizontal start (its zero-interaction
// image when t = 0), recording every thinning-th state after burn_in.
// Deterministic in cfg.seed. Iterating mcmc_step with the same rng
// visits exactly the same states.
CellStatistics run(const SamplerConfig& cfg, KTiling* final_state = nullptr,
                   std::vector<KTiling>* snapshots = nullptr);

// Draws from the exact distribution proportional to t^interactions by
// enumerating all k-tuples; refuses when the tuple count exceeds the cap.
KTiling exact_sample(int m, int k, const Rational& t, uint64_t seed,
                     long tuple_cap = 1 << 22);

}  // namespace tilekit
