#include "tilekit/hexagon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace tilekit {
namespace {

int rows_of(const HexRegion& r) { return r.a + r.c; }

void check_region(const HexRegion& r) {
  if (r.a < 0 || r.b < 0 || r.c < 0)
    throw std::invalid_argument("hexagon sides must be nonnegative");
}

// Strand columns once rows 1..r are done (r = 0 gives the entry columns).
std::vector<int> positions_after(const HexPathFamily& f, int r) {
  std::vector<int> pos(f.steps.size());
  for (size_t s = 0; s < f.steps.size(); ++s) {
    const auto& rows = f.steps[s];
    pos[s] = static_cast<int>(s) +
             static_cast<int>(std::upper_bound(rows.begin(), rows.end(), r) -
                              rows.begin());
  }
  return pos;
}

// Interactions one row contributes for the ordered pair: lo's steps are
// the columns swept between the two position snapshots, hi is probed for
// a crossing of the same edge and for its end-of-row column.
long pair_row_interactions(const std::vector<int>& lo_before,
                           const std::vector<int>& lo_after,
                           const std::vector<int>& hi_before,
                           const std::vector<int>& hi_after,
                           bool count_columns) {
  long total = 0;
  const size_t n = hi_before.size();
  size_t u = 0, v = 0;
  for (size_t s = 0; s < lo_before.size(); ++s) {
    for (int x = lo_before[s]; x < lo_after[s]; ++x) {
      while (u < n && hi_after[u] <= x) ++u;
      if (u < n && hi_before[u] <= x) ++total;
      if (count_columns) {
        while (v < n && hi_after[v] < x) ++v;
        if (v < n && hi_after[v] == x) ++total;
      }
    }
  }
  return total;
}

long pair_rows(const HexPathFamily& lo, const HexPathFamily& hi, int r_first,
               int r_last) {
  const int rows = rows_of(lo.region);
  long total = 0;
  for (int r = r_first; r <= r_last; ++r)
    total += pair_row_interactions(positions_after(lo, r - 1),
                                   positions_after(lo, r),
                                   positions_after(hi, r - 1),
                                   positions_after(hi, r), r < rows);
  return total;
}

long max_interactions(const HexRegion& r, int k) {
  return static_cast<long>(k) * (k - 1) / 2 * r.a * r.b;
}

// Weakly increasing strand-progress vectors, the per-color row state of
// the transfer recursion.
std::vector<std::vector<int>> color_states(int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(a, 0);
  std::function<void(int, int)> rec = [&](int s, int least) {
    if (s == a) {
      out.push_back(cur);
      return;
    }
    for (int v = least; v <= b; ++v) {
      cur[s] = v;
      rec(s + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

struct ColorMove {
  int from = 0;
  int to = 0;
  int cells = 0;
  std::vector<int> before;
  std::vector<int> after;
};

// All one-row advances, grouped by source state. A strand may advance up
// to its right neighbour's start column, which keeps the family ordered.
std::vector<std::vector<ColorMove>> color_moves(
    int a, int b, const std::vector<std::vector<int>>& states) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
  std::vector<std::vector<ColorMove>> out(states.size());
  for (size_t i = 0; i < states.size(); ++i) {
    const auto& lam = states[i];
    std::vector<int> mu(a);
    std::function<void(int)> fill = [&](int s) {
      if (s == a) {
        ColorMove mv;
        mv.from = static_cast<int>(i);
        mv.to = index.at(mu);
        mv.before.resize(a);
        mv.after.resize(a);
        for (int w = 0; w < a; ++w) {
          mv.cells += mu[w] - lam[w];
          mv.before[w] = w + lam[w];
          mv.after[w] = w + mu[w];
        }
        out[i].push_back(std::move(mv));
        return;
      }
      const int hi = s + 1 < a ? lam[s + 1] : b;
      for (int v = lam[s]; v <= hi; ++v) {
        mu[s] = v;
        fill(s + 1);
      }
    };
    fill(0);
  }
  return out;
}

// Row-by-row sum over k-tuples of tilings. weight(row, cells, crossings)
// multiplies in one row of one tuple transition.
template <typename Weight, typename StepWeight>
Weight transfer_sum(int a, int b, int c, int k, long long cap,
                    StepWeight weight) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("hexagon sides must be nonnegative");
  if (k < 1) throw std::invalid_argument("color count must be positive");
  const auto states = color_states(a, b);
  mpz_class tuples;
  mpz_pow_ui(tuples.get_mpz_t(), mpz_class(states.size()).get_mpz_t(),
             static_cast<unsigned long>(k));
  if (tuples > static_cast<long>(cap))
    throw std::length_error("transfer state space exceeds cap");
  const auto moves = color_moves(a, b, states);
  int start = -1, goal = -1;
  for (size_t i = 0; i < states.size(); ++i) {
    if (states[i] == std::vector<int>(a, 0)) start = static_cast<int>(i);
    if (states[i] == std::vector<int>(a, b)) goal = static_cast<int>(i);
  }
  const int rows = a + c;
  std::map<std::vector<int>, Weight> front;
  front[std::vector<int>(k, start)] = Weight(1);
  std::vector<const ColorMove*> pick(k);
  for (int r = 1; r <= rows; ++r) {
    std::map<std::vector<int>, Weight> next;
    const bool count_columns = r < rows;
    for (const auto& [tuple, w] : front) {
      std::function<void(int)> expand = [&](int color) {
        if (color == k) {
          int cells = 0;
          long crossings = 0;
          for (int al = 0; al < k; ++al) {
            cells += pick[al]->cells;
            for (int be = al + 1; be < k; ++be)
              crossings += pair_row_interactions(
                  pick[al]->before, pick[al]->after, pick[be]->before,
                  pick[be]->after, count_columns);
          }
          std::vector<int> target(k);
          for (int al = 0; al < k; ++al) target[al] = pick[al]->to;
          Weight contribution = w * weight(r, cells, crossings);
          auto it = next.find(target);
          if (it == next.end())
            next.emplace(std::move(target), std::move(contribution));
          else
            it->second += contribution;
          return;
        }
        for (const ColorMove& mv : moves[tuple[color]]) {
          pick[color] = &mv;
          expand(color + 1);
        }
      };
      expand(0);
    }
    front = std::move(next);
  }
  auto it = front.find(std::vector<int>(k, goal));
  return it == front.end() ? Weight(0) : it->second;
}

// Shared acceptance gate: u below t^delta scaled to 64 bits, matching
// the exact rational comparison u / 2^64 < min(1, t^delta).
bool accept_move(const Rational& t, long delta, uint64_t u) {
  const Rational p = flip_acceptance(t, delta);
  if (p == 1) return true;
  return mpz_class(u) * p.get_den() < mpz_class(p.get_num()) << 64;
}

// In-place proposal; returns whether the move was applied. Draw order:
// color, strand, step, direction, then one acceptance variate for every
// valid move.
bool step_in_place(KLozengeTiling& state, const Rational& t, SplitMix64& rng) {
  const int k = static_cast<int>(state.size());
  const HexRegion region = state.front().region;
  const int color = static_cast<int>(rng.below(k));
  const int strand = static_cast<int>(rng.below(region.a));
  const int j = static_cast<int>(rng.below(region.b));
  const int dir = rng.below(2) ? 1 : -1;
  if (!hex_move_valid(state, color, strand, j, dir)) return false;
  const uint64_t u = rng.next();
  long delta = k > 1 ? hex_move_delta(state, color, strand, j, dir) : 0;
  if (!accept_move(t, delta, u)) return false;
  state[color].steps[strand][j] += dir;
  return true;
}

}  // namespace

void validate(const HexPathFamily& f) {
  check_region(f.region);
  const int a = f.region.a, b = f.region.b;
  const int rows = rows_of(f.region);
  if (static_cast<int>(f.steps.size()) != a)
    throw std::invalid_argument("strand count must equal side a");
  for (int s = 0; s < a; ++s) {
    if (static_cast<int>(f.steps[s].size()) != b)
      throw std::invalid_argument("each strand takes exactly b right steps");
    for (int j = 0; j < b; ++j) {
      const int r = f.steps[s][j];
      if (r < 1 || r > rows)
        throw std::invalid_argument("step row out of range");
      if (j > 0 && f.steps[s][j - 1] > r)
        throw std::invalid_argument("step rows must be weakly increasing");
      if (s + 1 < a && f.steps[s + 1][j] >= r)
        throw std::invalid_argument(
            "a strand must step strictly later than its right neighbour");
    }
  }
}

void validate(const KLozengeTiling& tiling) {
  if (tiling.empty())
    throw std::invalid_argument("a tiling needs at least one color");
  for (const auto& f : tiling) {
    if (!(f.region == tiling.front().region))
      throw std::invalid_argument("all colors must share one region");
    validate(f);
  }
}

mpz_class macmahon(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("hexagon sides must be nonnegative");
  Rational prod = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int l = 1; l <= c; ++l)
        prod *= Rational(i + j + l - 1, i + j + l - 2);
  prod.canonicalize();
  return prod.get_num();
}

std::vector<HexPathFamily> enumerate_lozenge(int a, int b, int c,
                                             long long cap) {
  if (macmahon(a, b, c) > static_cast<long>(cap))
    throw std::length_error("tiling count exceeds cap");
  std::vector<HexPathFamily> out;
  HexPathFamily f{{a, b, c}, RightStepMatrix(a, std::vector<int>(b))};
  // Fill strands right to left so each lower bound is already in place.
  std::function<void(int, int)> fill = [&](int s, int j) {
    if (s < 0) {
      out.push_back(f);
      return;
    }
    if (j == b) {
      fill(s - 1, 0);
      return;
    }
    int lo = j > 0 ? f.steps[s][j - 1] : 1;
    if (s + 1 < a) lo = std::max(lo, f.steps[s + 1][j] + 1);
    for (int r = lo; r <= a + c - s; ++r) {
      f.steps[s][j] = r;
      fill(s, j + 1);
    }
  };
  fill(a - 1, 0);
  return out;
}

long lozenge_pair_interactions(const HexPathFamily& lo,
                               const HexPathFamily& hi) {
  if (!(lo.region == hi.region))
    throw std::invalid_argument("interacting colors must share one region");
  return pair_rows(lo, hi, 1, rows_of(lo.region));
}

long lozenge_interactions(const KLozengeTiling& tiling) {
  validate(tiling);
  long total = 0;
  for (size_t al = 0; al < tiling.size(); ++al)
    for (size_t be = al + 1; be < tiling.size(); ++be)
      total += lozenge_pair_interactions(tiling[al], tiling[be]);
  return total;
}

Poly hex_generating_polynomial(int a, int b, int c, int k, long long cap) {
  return transfer_sum<Poly>(a, b, c, k, cap,
                            [](int r, int cells, long crossings) {
                              return Poly::term(
                                  Monomial::var(var_q(), (r - 1) * cells) *
                                      Monomial::var(var_t(),
                                                    static_cast<int>(crossings)),
                                  1);
                            });
}

Rational hex_transfer_value(int a, int b, int c, int k, const Rational& q,
                            const Rational& t, long long cap) {
  return transfer_sum<Rational>(
      a, b, c, k, cap, [&](int r, int cells, long crossings) -> Rational {
        return rational_pow(q, static_cast<long>(r - 1) * cells) *
               rational_pow(t, crossings);
      });
}

Poly hex_polynomial_in_t(int a, int b, int c, int k, const Rational& q,
                         long long cap) {
  const long degree = max_interactions({a, b, c}, k);
  std::vector<std::pair<Rational, Poly>> samples;
  for (long i = 0; i <= degree; ++i)
    samples.push_back({Rational(i), Poly(hex_transfer_value(
                                        a, b, c, k, q, Rational(i), cap))});
  return lagrange_interpolate(var_t(), samples);
}

KLozengeTiling hex_flip_symmetry(const KLozengeTiling& tiling) {
  validate(tiling);
  const HexRegion src = tiling.front().region;
  const HexRegion dst{src.c, src.b, src.a};
  const int rows = rows_of(src);
  const int total = src.a + src.b + src.c;
  const int k = static_cast<int>(tiling.size());
  KLozengeTiling out(k, HexPathFamily{dst, RightStepMatrix(dst.a)});
  for (int color = 0; color < k; ++color) {
    const HexPathFamily& f = tiling[color];
    // Each cell the color leaves empty becomes a reflected right step.
    std::vector<std::set<int>> departures(rows + 1);
    std::vector<int> before = positions_after(f, 0);
    for (int r = 1; r <= rows; ++r) {
      std::vector<int> after = positions_after(f, r);
      const int xlo = std::max(0, src.a - r + 1);
      const int xhi = std::min(src.a + src.b - 1, total - r - 1);
      size_t u = 0;
      for (int x = xlo; x <= xhi; ++x) {
        while (u < after.size() && after[u] < x) ++u;
        const bool occupied =
            u < after.size() && before[u] <= x && x <= after[u];
        if (!occupied) departures[r].insert(total - x - r - 1);
      }
      before = std::move(after);
    }
    HexPathFamily& g = out[k - 1 - color];
    std::vector<int> pos(dst.a);
    for (int w = 0; w < dst.a; ++w) {
      pos[w] = w;
      g.steps[w].clear();
    }
    for (int r = 1; r <= rows; ++r) {
      for (int w = dst.a - 1; w >= 0; --w) {
        auto it = departures[r].find(pos[w]);
        while (it != departures[r].end()) {
          departures[r].erase(it);
          g.steps[w].push_back(r);
          ++pos[w];
          it = departures[r].find(pos[w]);
        }
      }
      if (!departures[r].empty())
        throw std::logic_error("reflected steps do not form strands");
    }
  }
  validate(out);
  return out;
}

HexPathFamily hex_t0_bijection(const KLozengeTiling& tiling) {
  validate(tiling);
  const int k = static_cast<int>(tiling.size());
  if (lozenge_interactions(tiling) != 0)
    throw std::invalid_argument("only the zero-interaction class maps");
  const HexRegion src = tiling.front().region;
  const HexRegion dst{k * src.a, src.b, src.c - (k - 1) * src.a};
  HexPathFamily out{dst, RightStepMatrix(dst.a, std::vector<int>(dst.b))};
  for (int s = 0; s < src.a; ++s)
    for (int al = 0; al < k; ++al) out.steps[s * k + al] = tiling[al].steps[s];
  validate(out);
  return out;
}

KLozengeTiling hex_t0_inverse(const HexPathFamily& f, int k) {
  validate(f);
  if (k < 1) throw std::invalid_argument("color count must be positive");
  if (f.region.a % k != 0)
    throw std::invalid_argument("combined side a must be divisible by k");
  const int a = f.region.a / k;
  const HexRegion dst{a, f.region.b, f.region.c + (k - 1) * a};
  KLozengeTiling out(k, HexPathFamily{dst, RightStepMatrix(a)});
  for (int s = 0; s < a; ++s)
    for (int al = 0; al < k; ++al) out[al].steps[s] = f.steps[s * k + al];
  validate(out);
  if (lozenge_interactions(out) != 0)
    throw std::logic_error("sliced tuple left the zero class");
  return out;
}

HexPathFamily hex_tinf_bijection(const KLozengeTiling& tiling) {
  validate(tiling);
  const int k = static_cast<int>(tiling.size());
  const HexRegion src = tiling.front().region;
  if (lozenge_interactions(tiling) != max_interactions(src, k))
    throw std::invalid_argument("only the maximal-interaction class maps");
  const HexRegion dst{src.a, k * src.b, src.c};
  HexPathFamily out{dst, RightStepMatrix(dst.a, std::vector<int>(dst.b))};
  for (int s = 0; s < src.a; ++s)
    for (int j = 0; j < src.b; ++j)
      for (int al = 0; al < k; ++al)
        out.steps[s][j * k + al] = tiling[al].steps[s][j];
  validate(out);
  return out;
}

KLozengeTiling hex_tinf_inverse(const HexPathFamily& f, int k) {
  validate(f);
  if (k < 1) throw std::invalid_argument("color count must be positive");
  if (f.region.b % k != 0)
    throw std::invalid_argument("combined side b must be divisible by k");
  const int b = f.region.b / k;
  const HexRegion dst{f.region.a, b, f.region.c};
  KLozengeTiling out(k, HexPathFamily{dst, RightStepMatrix(dst.a,
                                                           std::vector<int>(b))});
  for (int s = 0; s < dst.a; ++s)
    for (int j = 0; j < b; ++j)
      for (int al = 0; al < k; ++al)
        out[al].steps[s][j] = f.steps[s][j * k + al];
  validate(out);
  if (lozenge_interactions(out) != max_interactions(dst, k))
    throw std::logic_error("de-interleaved tuple left the top class");
  return out;
}

std::vector<std::vector<int>> plane_partition(const HexPathFamily& f) {
  validate(f);
  const int a = f.region.a, b = f.region.b, c = f.region.c;
  std::vector<std::vector<int>> pp(a, std::vector<int>(b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) pp[i][j] = c - f.steps[a - 1 - i][j] + i + 1;
  return pp;
}

HexPathFamily from_plane_partition(const HexRegion& region,
                                   const std::vector<std::vector<int>>& pp) {
  check_region(region);
  if (static_cast<int>(pp.size()) != region.a)
    throw std::invalid_argument("plane partition must have a rows");
  HexPathFamily f{region, RightStepMatrix(region.a,
                                          std::vector<int>(region.b))};
  for (int i = 0; i < region.a; ++i) {
    if (static_cast<int>(pp[i].size()) != region.b)
      throw std::invalid_argument("plane partition must have b columns");
    for (int j = 0; j < region.b; ++j)
      f.steps[region.a - 1 - i][j] = region.c + i + 1 - pp[i][j];
  }
  validate(f);
  return f;
}

std::pair<double, double> hex_project(double x, double y, double z) {
  const double s = std::numbers::sqrt3 / 2.0;
  return {s * (y - x), z - (x + y) / 2.0};
}

LozengeTiling lozenges(const HexPathFamily& f) {
  validate(f);
  const int a = f.region.a, b = f.region.b;
  const int rows = rows_of(f.region);
  const int total = a + b + f.region.c;
  LozengeTiling out;
  std::vector<int> before = positions_after(f, 0);
  for (int r = 1; r <= rows; ++r) {
    std::vector<int> after = positions_after(f, r);
    for (size_t u = 0; u < after.size(); ++u) {
      for (int x = before[u]; x < after[u]; ++x) out.push_back({3, r, x});
      if (r < rows && a <= after[u] + r && after[u] + r + 1 <= total)
        out.push_back({1, r, after[u]});
    }
    const int xlo = std::max(0, a - r + 1);
    const int xhi = std::min(a + b - 1, total - r - 1);
    size_t u = 0;
    for (int x = xlo; x <= xhi; ++x) {
      while (u < after.size() && after[u] < x) ++u;
      const bool occupied = u < after.size() && before[u] <= x && x <= after[u];
      if (!occupied) out.push_back({2, r, x});
    }
    before = std::move(after);
  }
  return out;
}

std::array<std::pair<int, int>, 4> lozenge_corners(const Lozenge& l) {
  const int x = l.col, r = l.row;
  switch (l.type) {
    case 1:
      return {{{x + 1, r - 1}, {x + 1, r}, {x, r + 1}, {x, r}}};
    case 2:
      return {{{x, r - 1}, {x + 1, r - 1}, {x + 1, r}, {x, r}}};
    case 3:
      return {{{x, r}, {x + 1, r - 1}, {x + 2, r - 1}, {x + 1, r}}};
    default:
      throw std::invalid_argument("lozenge type must be 1, 2 or 3");
  }
}

void validate(const HexSamplerConfig& cfg) {
  if (cfg.region.a < 1 || cfg.region.b < 1 || cfg.region.c < 1)
    throw std::invalid_argument("sampler region sides must be positive");
  if (cfg.colors < 1)
    throw std::invalid_argument("color count must be positive");
  if (cfg.t < 0) throw std::invalid_argument("t must be nonnegative");
  if (cfg.burn_in < 0 || cfg.steps <= cfg.burn_in)
    throw std::invalid_argument("need steps > burn_in >= 0");
  if (cfg.thinning < 1) throw std::invalid_argument("thinning must be >= 1");
}

HexPathFamily hex_base_tiling(const HexRegion& region) {
  check_region(region);
  HexPathFamily f{region, RightStepMatrix(region.a)};
  for (int s = 0; s < region.a; ++s)
    f.steps[s].assign(region.b, region.a - s);
  return f;
}

bool hex_move_valid(const KLozengeTiling& state, int color, int strand, int j,
                    int dir) {
  const HexPathFamily& f = state[color];
  const int a = f.region.a, b = f.region.b;
  const int next = f.steps[strand][j] + dir;
  if (next < 1 || next > rows_of(f.region)) return false;
  if (j > 0 && f.steps[strand][j - 1] > next) return false;
  if (j + 1 < b && f.steps[strand][j + 1] < next) return false;
  if (strand > 0 && f.steps[strand - 1][j] <= next) return false;
  if (strand + 1 < a && f.steps[strand + 1][j] >= next) return false;
  return true;
}

long hex_move_delta(const KLozengeTiling& state, int color, int strand, int j,
                    int dir) {
  const HexPathFamily& f = state[color];
  const int r = f.steps[strand][j];
  const int r_first = std::min(r, r + dir), r_last = std::max(r, r + dir);
  HexPathFamily moved = f;
  moved.steps[strand][j] += dir;
  long delta = 0;
  for (size_t other = 0; other < state.size(); ++other) {
    if (static_cast<int>(other) == color) continue;
    if (color < static_cast<int>(other)) {
      delta += pair_rows(moved, state[other], r_first, r_last) -
               pair_rows(f, state[other], r_first, r_last);
    } else {
      delta += pair_rows(state[other], moved, r_first, r_last) -
               pair_rows(state[other], f, r_first, r_last);
    }
  }
  return delta;
}

KLozengeTiling hex_mcmc_step(const KLozengeTiling& state, const Rational& t,
                             SplitMix64& rng) {
  KLozengeTiling next = state;
  step_in_place(next, t, rng);
  return next;
}

KLozengeTiling hex_run(const HexSamplerConfig& cfg,
                       std::vector<KLozengeTiling>* snapshots) {
  validate(cfg);
  KLozengeTiling state;
  if (cfg.t == 0) {
    const int excess = (cfg.colors - 1) * cfg.region.a;
    if (excess > cfg.region.c)
      throw std::invalid_argument(
          "the zero-interaction class of this region is empty");
    state = hex_t0_inverse(
        hex_base_tiling({cfg.colors * cfg.region.a, cfg.region.b,
                         cfg.region.c - excess}),
        cfg.colors);
  } else {
    state.assign(cfg.colors, hex_base_tiling(cfg.region));
  }
  SplitMix64 rng(cfg.seed);
  for (long long i = 0; i < cfg.steps; ++i) {
    step_in_place(state, cfg.t, rng);
    if (snapshots && i >= cfg.burn_in && (i - cfg.burn_in) % cfg.thinning == 0)
      snapshots->push_back(state);
  }
  return state;
}

KLozengeTiling hex_exact_sample(int a, int b, int c, int k, const Rational& t,
                                uint64_t seed, long tuple_cap) {
  if (k < 1) throw std::invalid_argument("color count must be positive");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const mpz_class count = macmahon(a, b, c);
  mpz_class tuples;
  mpz_pow_ui(tuples.get_mpz_t(), count.get_mpz_t(),
             static_cast<unsigned long>(k));
  if (tuples > tuple_cap) throw std::length_error("tuple count exceeds cap");
  const auto singles = enumerate_lozenge(a, b, c, tuple_cap);
  const long n = static_cast<long>(singles.size());
  const long m = tuples.get_si();
  std::vector<Rational> weight(m);
  Rational total = 0;
  KLozengeTiling tup(k);
  for (long idx = 0; idx < m; ++idx) {
    long rem = idx;
    for (int al = 0; al < k; ++al) {
      tup[al] = singles[rem % n];
      rem /= n;
    }
    weight[idx] = rational_pow(t, lozenge_interactions(tup));
    total += weight[idx];
  }
  if (total == 0)
    throw std::invalid_argument("every tuple has weight zero at this t");
  SplitMix64 rng(seed);
  const mpz_class hi(rng.next()), lo(rng.next());
  const Rational u = Rational((hi << 64) + lo) / Rational(mpz_class(1) << 128);
  const Rational target = u * total;
  Rational cum = 0;
  long picked = m - 1;
  for (long idx = 0; idx < m; ++idx) {
    cum += weight[idx];
    if (cum > target) {
      picked = idx;
      break;
    }
  }
  long rem = picked;
  for (int al = 0; al < k; ++al) {
    tup[al] = singles[rem % n];
    rem /= n;
  }
  return tup;
}

}  // namespace tilekit
