#include "tilekit/sampler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tilekit/bijections.hpp"
#include "tilekit/encodings.hpp"

namespace tilekit {

uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("below: empty range");
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(next()) * n) >> 64);
}

void validate(const SamplerConfig& cfg) {
  if (cfg.rank < 1) throw std::invalid_argument("rank must be positive");
  if (cfg.colors < 1) throw std::invalid_argument("need at least one color");
  if (cfg.t < 0) throw std::invalid_argument("t must be nonnegative");
  if (cfg.burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
  if (cfg.steps <= cfg.burn_in)
    throw std::invalid_argument("steps must exceed burn_in");
  if (cfg.thinning < 1) throw std::invalid_argument("thinning must be >= 1");
}

std::vector<std::pair<int, int>> proposal_blocks(int m) {
  std::vector<std::pair<int, int>> blocks;
  for (int a = -(m + 1); a <= m - 1; ++a)
    for (int b = -(m + 1); b <= m - 1; ++b)
      if (aztec_contains(m, a, b) && aztec_contains(m, a + 1, b) &&
          aztec_contains(m, a, b + 1) && aztec_contains(m, a + 1, b + 1))
        blocks.emplace_back(a, b);
  return blocks;
}

Rational flip_acceptance(const Rational& t, long delta) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (t == 0) return delta > 0 ? Rational(0) : Rational(1);
  if (delta == 0 || t == 1) return 1;
  unsigned long e = delta > 0 ? delta : -delta;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), t.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), t.get_den().get_mpz_t(), e);
  Rational r = delta > 0 ? Rational(num) / Rational(den)
                         : Rational(den) / Rational(num);
  return r < 1 ? r : Rational(1);
}

namespace {

constexpr uint8_t kHL = 0, kHR = 1, kVB = 2, kVT = 3, kOut = 255;

// How one uniform variate decides a flip with a fixed delta.
struct Gate {
  enum { Always, Never, Compare } kind = Always;
  mpz_class den;
  mpz_class num_shifted;  // numerator * 2^64
};

class Engine {
 public:
  Engine(const KTiling& start, Rational t)
      : m_(start.empty() ? 0 : start[0].rank()), t_(std::move(t)) {
    if (start.empty()) throw std::invalid_argument("state has no layers");
    if (t_ < 0) throw std::invalid_argument("t must be nonnegative");
    k_ = static_cast<int>(start.size());
    for (const Tiling& T : start)
      if (T.rank() != m_) throw std::invalid_argument("layers disagree on rank");
    width_ = 2 * m_ + 2;
    base_ = m_ + 1;
    role_.assign(static_cast<size_t>(k_) * width_ * width_, kOut);
    for (int c = 0; c < k_; ++c)
      for (const Domino& d : start[c].dominos()) {
        if (d.o == Orientation::Horizontal) {
          at(c, d.x, d.y) = kHL;
          at(c, d.x + 1, d.y) = kHR;
        } else {
          at(c, d.x, d.y) = kVB;
          at(c, d.x, d.y + 1) = kVT;
        }
      }
    blocks_ = proposal_blocks(m_);
    cells_ = aztec_cells(m_);
    t_zero_ = t_ == 0;
    t_one_ = t_ == 1;
  }

  int rank() const { return m_; }
  int colors() const { return k_; }

  bool flippable(int c, int a, int b) const {
    uint8_t r = get(c, a, b);
    if (r == kHL) return get(c, a, b + 1) == kHL;
    if (r == kVB) return get(c, a + 1, b) == kVB;
    return false;
  }

  // Rotates the two dominos in a flippable block; its own inverse.
  void rotate(int c, int a, int b) {
    if (get(c, a, b) == kHL) {
      at(c, a, b) = kVB;
      at(c, a + 1, b) = kVB;
      at(c, a, b + 1) = kVT;
      at(c, a + 1, b + 1) = kVT;
    } else {
      at(c, a, b) = kHL;
      at(c, a + 1, b) = kHR;
      at(c, a, b + 1) = kHL;
      at(c, a + 1, b + 1) = kHR;
    }
  }

  long delta(int c, int a, int b) {
    long before = local_pairs(c, a, b);
    rotate(c, a, b);
    long after = local_pairs(c, a, b);
    rotate(c, a, b);
    return after - before;
  }

  // One proposal; true when a flip was applied.
  bool step(SplitMix64& rng) {
    int c = static_cast<int>(rng.below(k_));
    auto [a, b] = blocks_[rng.below(blocks_.size())];
    if (!flippable(c, a, b)) return false;
    long d = 0;
    bool need_delta = k_ > 1 && !t_one_;
    if (need_delta) {
      long before = local_pairs(c, a, b);
      rotate(c, a, b);
      d = local_pairs(c, a, b) - before;
    } else {
      rotate(c, a, b);
    }
    uint64_t u = rng.next();
    bool accept;
    if (!need_delta) {
      accept = true;
    } else if (t_zero_) {
      accept = d <= 0;
    } else {
      accept = gate(d).kind == Gate::Always ||
               (gate(d).kind == Gate::Compare &&
                mpz_class(u) * gate(d).den < gate(d).num_shifted);
    }
    if (!accept) rotate(c, a, b);
    return accept;
  }

  KTiling to_ktiling() const {
    KTiling out;
    out.reserve(k_);
    for (int c = 0; c < k_; ++c) {
      std::vector<Domino> ds;
      for (auto [a, b] : cells_) {
        uint8_t r = get(c, a, b);
        if (r == kHL) ds.push_back({a, b, Orientation::Horizontal});
        else if (r == kVB) ds.push_back({a, b, Orientation::Vertical});
      }
      out.emplace_back(m_, std::move(ds));
    }
    return out;
  }

  void record(CellStatistics& st) const {
    size_t n = cells_.size();
    for (int c = 0; c < k_; ++c)
      for (size_t i = 0; i < n; ++i) {
        auto [a, b] = cells_[i];
        ++st.counts[c * n + i][type_index(c, a, b)];
      }
    ++st.samples;
  }

  int type_index(int c, int a, int b) const {
    uint8_t r = get(c, a, b);
    if (r == kHL || r == kHR) {
      int ax = r == kHL ? a : a - 1;
      bool anchor_white = ((ax + b + m_) & 1) != 0;
      return anchor_white ? 0 : 2;  // I : III
    }
    int by = r == kVB ? b : b - 1;
    bool anchor_white = ((a + by + m_) & 1) != 0;
    return anchor_white ? 1 : 3;  // II : IV
  }

  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }

 private:
  uint8_t& at(int c, int a, int b) {
    return role_[static_cast<size_t>(c) * width_ * width_ +
                 (b + base_) * width_ + (a + base_)];
  }
  uint8_t get(int c, int a, int b) const {
    return role_[static_cast<size_t>(c) * width_ * width_ +
                 (b + base_) * width_ + (a + base_)];
  }

  // Feature of a layer on a gray square: 0 bottom of IV, 1 right of I,
  // 2 top of II. On gray squares the role alone decides.
  static int flag(uint8_t role) {
    switch (role) {
      case kVB: return 0;
      case kHR: return 1;
      case kVT: return 2;
      default: return -1;
    }
  }

  static bool pair_hit(int lo, int hi) {
    return (lo == 0 && hi == 1) || (lo == 2 && hi == 2) ||
           (lo == 1 && hi == 2) || (lo == 0 && hi == 2);
  }

  // Interactions between layer c and every other layer, restricted to
  // the block's two gray squares (the only ones a flip can change).
  long local_pairs(int c, int a, int b) const {
    std::pair<int, int> gray[2];
    if (((a + b + m_) & 1) == 0) {
      gray[0] = {a, b};
      gray[1] = {a + 1, b + 1};
    } else {
      gray[0] = {a + 1, b};
      gray[1] = {a, b + 1};
    }
    long total = 0;
    for (auto [x, y] : gray) {
      int fc = flag(get(c, x, y));
      for (int c2 = 0; c2 < k_; ++c2) {
        if (c2 == c) continue;
        int f2 = flag(get(c2, x, y));
        if (fc < 0 && f2 < 0) continue;
        bool hit = c < c2 ? pair_hit(fc, f2) : pair_hit(f2, fc);
        if (hit) ++total;
      }
    }
    return total;
  }

  const Gate& gate(long d) {
    auto it = gates_.find(d);
    if (it != gates_.end()) return it->second;
    Gate g;
    // Per-flip deltas are bounded by 2*(colors-1), so the exact rational
    // gate always applies; enormous exponents would need the float path.
    Rational r = flip_acceptance(t_, d);
    if (r >= 1) {
      g.kind = Gate::Always;
    } else if (r == 0) {
      g.kind = Gate::Never;
    } else {
      g.kind = Gate::Compare;
      g.den = r.get_den();
      g.num_shifted = mpz_class(r.get_num()) << 64;
    }
    return gates_.emplace(d, std::move(g)).first->second;
  }

  int m_, k_ = 1, width_ = 0, base_ = 0;
  Rational t_;
  bool t_zero_ = false, t_one_ = false;
  std::vector<uint8_t> role_;
  std::vector<std::pair<int, int>> blocks_;
  std::vector<std::pair<int, int>> cells_;
  std::map<long, Gate> gates_;
};

}  // namespace

long flip_interaction_delta(const KTiling& state, int color,
                            std::pair<int, int> block) {
  if (color < 0 || color >= static_cast<int>(state.size()))
    throw std::invalid_argument("color out of range");
  Engine e(state, 0);
  if (!e.flippable(color, block.first, block.second))
    throw std::invalid_argument("block is not flippable in that layer");
  return e.delta(color, block.first, block.second);
}

KTiling mcmc_step(const KTiling& state, const SamplerConfig& cfg,
                  SplitMix64& rng) {
  if (state.empty()) throw std::invalid_argument("state has no layers");
  if (cfg.colors != static_cast<int>(state.size()))
    throw std::invalid_argument("config colors disagree with the state");
  if (cfg.rank != state[0].rank())
    throw std::invalid_argument("config rank disagrees with the state");
  Engine e(state, cfg.t);
  e.step(rng);
  return e.to_ktiling();
}

double CellStatistics::frequency(int color, size_t cell, DominoType type) const {
  if (samples == 0) throw std::logic_error("no samples recorded");
  return static_cast<double>(
             counts[color * cells.size() + cell][static_cast<int>(type)]) /
         static_cast<double>(samples);
}

void merge(CellStatistics& into, const CellStatistics& other) {
  if (into.rank != other.rank || into.colors != other.colors)
    throw std::invalid_argument("merge: mismatched geometry");
  for (size_t i = 0; i < into.counts.size(); ++i)
    for (int t = 0; t < 4; ++t) into.counts[i][t] += other.counts[i][t];
  into.samples += other.samples;
}

CellStatistics run(const SamplerConfig& cfg, KTiling* final_state,
                   std::vector<KTiling>* snapshots) {
  validate(cfg);
  KTiling start = cfg.t == 0
                      ? t0_inverse(all_horizontal(cfg.rank), cfg.colors)
                      : KTiling(cfg.colors, all_horizontal(cfg.rank));
  Engine e(start, cfg.t);

  CellStatistics stats;
  stats.rank = cfg.rank;
  stats.colors = cfg.colors;
  stats.cells = e.cells();
  stats.counts.assign(static_cast<size_t>(cfg.colors) * stats.cells.size(),
                      {0, 0, 0, 0});

  SplitMix64 rng(cfg.seed);
  for (long long i = 1; i <= cfg.steps; ++i) {
    e.step(rng);
    if (i > cfg.burn_in && (i - cfg.burn_in) % cfg.thinning == 0) {
      e.record(stats);
      if (snapshots) snapshots->push_back(e.to_ktiling());
    }
  }
  if (final_state) *final_state = e.to_ktiling();
  return stats;
}

KTiling exact_sample(int m, int k, const Rational& t, uint64_t seed,
                     long tuple_cap) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  long pairs = static_cast<long>(m) * (m + 1) / 2;
  if (pairs * k > 62 || (1L << (pairs * k)) > tuple_cap)
    throw std::invalid_argument("enumeration cap exceeded");
  std::vector<Tiling> tilings = enumerate_tilings(m, m);
  size_t n = tilings.size();

  std::vector<std::vector<long>> pair_n;
  if (k > 1) {
    std::vector<InteractionFeatures> feats;
    feats.reserve(n);
    for (const Tiling& T : tilings)
      feats.push_back(interaction_features(T, ModelKind::PurpleGray));
    pair_n.assign(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        pair_n[i][j] = interaction_count(feats[i], feats[j]);
  }

  std::map<long, Rational> powers;
  auto power = [&](long inter) -> const Rational& {
    auto it = powers.find(inter);
    if (it != powers.end()) return it->second;
    Rational w;
    if (t == 0) {
      w = inter == 0 ? 1 : 0;
    } else {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), t.get_num().get_mpz_t(),
                 static_cast<unsigned long>(inter));
      mpz_pow_ui(den.get_mpz_t(), t.get_den().get_mpz_t(),
                 static_cast<unsigned long>(inter));
      w = Rational(num) / Rational(den);
    }
    return powers.emplace(inter, w).first->second;
  };

  auto for_each_tuple = [&](auto&& fn) {
    std::vector<size_t> idx(k, 0);
    for (;;) {
      long inter = 0;
      for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q) inter += pair_n[idx[p]][idx[q]];
      fn(idx, inter);
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
      if (pos < 0) break;
    }
  };

  Rational total = 0;
  if (k == 1) {
    total = Rational(static_cast<long>(n));
  } else {
    for_each_tuple([&](const std::vector<size_t>&, long inter) {
      total += power(inter);
    });
  }
  if (total == 0) throw std::logic_error("no admissible tuples");

  SplitMix64 rng(seed);
  mpz_class hi(rng.next()), lo(rng.next());
  Rational u = Rational((hi << 64) + lo) / Rational(mpz_class(1) << 128);
  Rational target = u * total;

  if (k == 1) {
    size_t pick = static_cast<size_t>(mpz_class(target.get_num() /
                                                target.get_den())
                                          .get_ui());
    if (pick >= n) pick = n - 1;
    return {tilings[pick]};
  }

  KTiling out;
  Rational cum = 0;
  bool done = false;
  for_each_tuple([&](const std::vector<size_t>& idx, long inter) {
    if (done) return;
    cum += power(inter);
    if (cum > target) {
      out.clear();
      for (size_t i : idx) out.push_back(tilings[i]);
      done = true;
    }
  });
  if (!done) {
    // Guard against exact-boundary draws.
    KTiling last;
    for (int i = 0; i < k; ++i) last.push_back(tilings[n - 1]);
    return last;
  }
  return out;
}

}  // namespace tilekit
