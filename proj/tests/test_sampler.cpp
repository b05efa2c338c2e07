#include "tilekit/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "tilekit/bijections.hpp"
#include "tilekit/encodings.hpp"

using tilekit::all_horizontal;
using tilekit::apply_flip;
using tilekit::CellStatistics;
using tilekit::DominoType;
using tilekit::enumerate_tilings;
using tilekit::exact_sample;
using tilekit::flip_acceptance;
using tilekit::flip_interaction_delta;
using tilekit::interactions;
using tilekit::KTiling;
using tilekit::mcmc_step;
using tilekit::ModelKind;
using tilekit::proposal_blocks;
using tilekit::Rational;
using tilekit::run;
using tilekit::SamplerConfig;
using tilekit::SplitMix64;
using tilekit::t0_inverse;
using tilekit::Tiling;

namespace {

SamplerConfig config(int m, int k, Rational t, long long steps,
                     long long burn = 0, long long thin = 1,
                     uint64_t seed = 1) {
  SamplerConfig cfg;
  cfg.rank = m;
  cfg.colors = k;
  cfg.t = std::move(t);
  cfg.steps = steps;
  cfg.burn_in = burn;
  cfg.thinning = thin;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(Sampler, ConfigValidation) {
  EXPECT_NO_THROW(tilekit::validate(config(2, 1, 1, 10)));
  EXPECT_THROW(tilekit::validate(config(0, 1, 1, 10)), std::invalid_argument);
  EXPECT_THROW(tilekit::validate(config(2, 0, 1, 10)), std::invalid_argument);
  EXPECT_THROW(tilekit::validate(config(2, 1, Rational(-1), 10)),
               std::invalid_argument);
  EXPECT_THROW(tilekit::validate(config(2, 1, 1, 10, 10)),
               std::invalid_argument);
  EXPECT_THROW(tilekit::validate(config(2, 1, 1, 10, -1)),
               std::invalid_argument);
  auto bad_thin = config(2, 1, 1, 10);
  bad_thin.thinning = 0;
  EXPECT_THROW(tilekit::validate(bad_thin), std::invalid_argument);
}

TEST(Sampler, SplitMixReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);

  SplitMix64 a(42), b(42);
  SplitMix64 child = a.split();
  EXPECT_NE(child.next(), b.next());  // child stream differs from parent's
  for (int i = 0; i < 1000; ++i) EXPECT_LT(a.below(7), 7u);
  EXPECT_EQ(a.below(1), 0u);
  EXPECT_THROW(a.below(0), std::invalid_argument);
}

TEST(Sampler, ProposalBlocks) {
  using P = std::pair<int, int>;
  EXPECT_EQ(proposal_blocks(1), (std::vector<P>{{-1, -1}}));
  EXPECT_EQ(proposal_blocks(2),
            (std::vector<P>{{-2, -1}, {-1, -2}, {-1, -1}, {-1, 0}, {0, -1}}));
  EXPECT_EQ(proposal_blocks(3).size(), 13u);

  for (int m : {2, 3, 4}) {
    auto blocks = proposal_blocks(m);
    std::set<P> all(blocks.begin(), blocks.end());
    for (P b : tilekit::flippable_blocks(all_horizontal(m)))
      EXPECT_TRUE(all.count(b)) << m;
  }
}

TEST(Sampler, FlipAcceptanceValues) {
  EXPECT_EQ(flip_acceptance(Rational(0), 1), Rational(0));
  EXPECT_EQ(flip_acceptance(Rational(0), 0), Rational(1));
  EXPECT_EQ(flip_acceptance(Rational(0), -2), Rational(1));
  EXPECT_EQ(flip_acceptance(Rational(1), 5), Rational(1));
  Rational half(1, 2);
  EXPECT_EQ(flip_acceptance(half, 2), Rational(1, 4));
  EXPECT_EQ(flip_acceptance(half, -2), Rational(1));
  EXPECT_EQ(flip_acceptance(Rational(2), -3), Rational(1, 8));
  EXPECT_EQ(flip_acceptance(Rational(2), 3), Rational(1));
  Rational fivethirds(5, 3);
  EXPECT_EQ(flip_acceptance(fivethirds, -2), Rational(9, 25));
  EXPECT_THROW(flip_acceptance(Rational(-1), 1), std::invalid_argument);
}

TEST(Sampler, LocalDeltaMatchesGlobalRecount) {
  auto check_state = [](const KTiling& state) {
    int m = state[0].rank();
    for (int c = 0; c < static_cast<int>(state.size()); ++c) {
      for (auto block : proposal_blocks(m)) {
        bool flippable = false;
        for (auto fb : tilekit::flippable_blocks(state[c]))
          if (fb == block) flippable = true;
        if (!flippable) {
          EXPECT_THROW(flip_interaction_delta(state, c, block),
                       std::invalid_argument);
          continue;
        }
        KTiling next = state;
        next[c] = apply_flip(state[c], block);
        long expect = interactions(next, ModelKind::PurpleGray) -
                      interactions(state, ModelKind::PurpleGray);
        EXPECT_EQ(flip_interaction_delta(state, c, block), expect);
      }
    }
  };

  auto two = enumerate_tilings(2);
  for (const Tiling& a : two)
    for (const Tiling& b : two) check_state({a, b});

  auto three = enumerate_tilings(3);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const Tiling& a = three[rng.below(three.size())];
    const Tiling& b = three[rng.below(three.size())];
    check_state({a, b});
  }
  for (int trial = 0; trial < 40; ++trial) {
    check_state({two[rng.below(8)], two[rng.below(8)], two[rng.below(8)]});
  }
}

TEST(Sampler, StepAndRunWalkTheSameChain) {
  SamplerConfig cfg = config(3, 2, Rational(1, 2), 4000, 0, 1, 99);
  KTiling from_run;
  run(cfg, &from_run);

  KTiling state(2, all_horizontal(3));
  SplitMix64 rng(99);
  for (int i = 0; i < 4000; ++i) state = mcmc_step(state, cfg, rng);
  EXPECT_EQ(state, from_run);

  SamplerConfig zero = config(3, 2, Rational(0), 2500, 0, 1, 5);
  KTiling from_run0;
  run(zero, &from_run0);
  KTiling state0 = t0_inverse(all_horizontal(3), 2);
  SplitMix64 rng0(5);
  for (int i = 0; i < 2500; ++i) state0 = mcmc_step(state0, zero, rng0);
  EXPECT_EQ(state0, from_run0);

  EXPECT_THROW(mcmc_step(KTiling{}, cfg, rng), std::invalid_argument);
  EXPECT_THROW(mcmc_step(KTiling(3, all_horizontal(3)), cfg, rng),
               std::invalid_argument);
}

TEST(Sampler, ZeroTemperatureKeepsZeroInteractions) {
  SamplerConfig cfg = config(3, 2, Rational(0), 20000, 0, 500, 11);
  std::vector<KTiling> snaps;
  run(cfg, nullptr, &snaps);
  ASSERT_EQ(snaps.size(), 40u);
  for (const KTiling& s : snaps)
    EXPECT_EQ(interactions(s, ModelKind::PurpleGray), 0);
}

TEST(Sampler, ZeroTemperatureFlipGraphConnected) {
  auto count_reachable = [](int m, int k) {
    KTiling start = t0_inverse(all_horizontal(m), k);
    std::set<KTiling> seen{start};
    std::vector<KTiling> frontier{start};
    auto blocks = proposal_blocks(m);
    while (!frontier.empty()) {
      KTiling cur = frontier.back();
      frontier.pop_back();
      for (int c = 0; c < k; ++c) {
        std::set<std::pair<int, int>> flippable;
        for (auto b : tilekit::flippable_blocks(cur[c])) flippable.insert(b);
        for (auto b : blocks) {
          if (!flippable.count(b)) continue;
          if (flip_interaction_delta(cur, c, b) != 0) continue;
          KTiling next = cur;
          next[c] = apply_flip(cur[c], b);
          if (seen.insert(next).second) frontier.push_back(next);
        }
      }
    }
    return seen.size();
  };

  EXPECT_EQ(count_reachable(2, 2), 8u);
  EXPECT_EQ(count_reachable(2, 3), 8u);
  EXPECT_EQ(count_reachable(3, 2), 64u);
}

TEST(Sampler, ExactSampleDeterministicAndCapped) {
  KTiling a = exact_sample(3, 2, Rational(1, 2), 123);
  KTiling b = exact_sample(3, 2, Rational(1, 2), 123);
  EXPECT_EQ(a, b);
  EXPECT_THROW(exact_sample(6, 2, Rational(1), 1), std::invalid_argument);
  EXPECT_THROW(exact_sample(12, 1, Rational(1), 1), std::invalid_argument);
  EXPECT_THROW(exact_sample(2, 0, Rational(1), 1), std::invalid_argument);
}

TEST(Sampler, ExactSampleZeroTemperature) {
  std::set<KTiling> seen;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    KTiling s = exact_sample(3, 2, Rational(0), seed);
    EXPECT_EQ(interactions(s, ModelKind::PurpleGray), 0);
    seen.insert(s);
  }
  EXPECT_GE(seen.size(), 20u);
}

TEST(Sampler, ExactSampleUniformAtTOne) {
  auto tilings = enumerate_tilings(2);
  std::map<Tiling, long> hits;
  const long draws = 8000;
  for (long seed = 0; seed < draws; ++seed) {
    KTiling s = exact_sample(2, 1, Rational(1), seed);
    ++hits[s[0]];
  }
  double expect = draws / 8.0;
  double bound = 3.0 * std::sqrt(draws * (1.0 / 8) * (7.0 / 8));
  for (const Tiling& T : tilings)
    EXPECT_NEAR(hits[T], expect, bound);
}

TEST(Sampler, RunUniformStationaryLaw) {
  SamplerConfig cfg = config(2, 1, Rational(1), 1000000, 10000, 50, 2024);
  std::vector<KTiling> snaps;
  CellStatistics stats = run(cfg, nullptr, &snaps);
  const long n = 19800;
  ASSERT_EQ(stats.samples, n);
  ASSERT_EQ(snaps.size(), static_cast<size_t>(n));

  std::map<Tiling, long> hits;
  for (const KTiling& s : snaps) ++hits[s[0]];
  EXPECT_EQ(hits.size(), 8u);
  double expect = n / 8.0;
  double bound = 3.0 * std::sqrt(n * (1.0 / 8) * (7.0 / 8));
  for (auto& [state, count] : hits) EXPECT_NEAR(count, expect, bound);

  // Cell frequencies: each cell is always covered, so the four type
  // frequencies sum to one.
  ASSERT_EQ(stats.cells.size(), 12u);
  for (size_t i = 0; i < stats.cells.size(); ++i) {
    double sum = 0;
    for (DominoType t : {DominoType::I, DominoType::II, DominoType::III,
                         DominoType::IV})
      sum += stats.frequency(0, i, t);
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }

  CellStatistics again = run(cfg);
  EXPECT_EQ(again.counts, stats.counts);

  CellStatistics merged = stats;
  tilekit::merge(merged, again);
  EXPECT_EQ(merged.samples, 2 * n);
  EXPECT_EQ(merged.counts[0][0], 2 * stats.counts[0][0]);
}

TEST(Sampler, RunMatchesExactWeights) {
  // Exact stationary law on rank 2 with two colors at t = 2.
  auto tilings = enumerate_tilings(2);
  std::map<KTiling, Rational> weight;
  Rational z = 0;
  for (const Tiling& a : tilings)
    for (const Tiling& b : tilings) {
      KTiling s{a, b};
      Rational w = 1;
      long n = interactions(s, ModelKind::PurpleGray);
      for (long i = 0; i < n; ++i) w *= 2;
      weight[s] = w;
      z += w;
    }

  SamplerConfig cfg = config(2, 2, Rational(2), 1200000, 20000, 60, 77);
  std::vector<KTiling> snaps;
  run(cfg, nullptr, &snaps);
  const double n = static_cast<double>(snaps.size());
  std::map<KTiling, long> hits;
  for (const KTiling& s : snaps) ++hits[s];

  for (auto& [state, w] : weight) {
    double p = w.get_d() / z.get_d();
    double bound = 3.0 * std::sqrt(n * p * (1 - p));
    EXPECT_NEAR(hits[state], n * p, bound);
  }
}

TEST(Sampler, ExactStationarityOfTheTransitionMatrix) {
  // Enumerable chain: every transition probability written exactly, then
  // pi P = pi checked with zero residual for pi proportional to t^N.
  auto tilings = enumerate_tilings(2);
  std::vector<KTiling> states;
  for (const Tiling& a : tilings)
    for (const Tiling& b : tilings) states.push_back({a, b});
  std::map<KTiling, size_t> index;
  for (size_t i = 0; i < states.size(); ++i) index[states[i]] = i;

  auto blocks = proposal_blocks(2);
  const int k = 2;
  Rational proposal(1, static_cast<long>(k * blocks.size()));

  for (Rational t : {Rational(1, 2), Rational(2)}) {
    std::vector<std::vector<Rational>> P(
        states.size(), std::vector<Rational>(states.size(), 0));
    for (size_t i = 0; i < states.size(); ++i) {
      Rational stay = 1;
      for (int c = 0; c < k; ++c) {
        std::set<std::pair<int, int>> flippable;
        for (auto bl : tilekit::flippable_blocks(states[i][c]))
          flippable.insert(bl);
        for (auto bl : blocks) {
          if (!flippable.count(bl)) continue;
          KTiling next = states[i];
          next[c] = apply_flip(states[i][c], bl);
          long dn = interactions(next, ModelKind::PurpleGray) -
                    interactions(states[i], ModelKind::PurpleGray);
          Rational move = proposal * flip_acceptance(t, dn);
          P[i][index[next]] += move;
          stay -= move;
        }
      }
      P[i][i] += stay;
    }

    std::vector<Rational> pi(states.size());
    Rational z = 0;
    for (size_t i = 0; i < states.size(); ++i) {
      long n = interactions(states[i], ModelKind::PurpleGray);
      Rational w = 1;
      for (long j = 0; j < n; ++j) w *= t;
      pi[i] = w;
      z += w;
    }
    for (Rational& w : pi) w /= z;

    for (size_t i = 0; i < states.size(); ++i) {
      Rational row = 0;
      for (size_t j = 0; j < states.size(); ++j) row += P[i][j];
      EXPECT_EQ(row, Rational(1));
    }
    for (size_t j = 0; j < states.size(); ++j) {
      Rational out = 0;
      for (size_t i = 0; i < states.size(); ++i) out += pi[i] * P[i][j];
      EXPECT_EQ(out, pi[j]) << "column " << j;
    }
  }
}
