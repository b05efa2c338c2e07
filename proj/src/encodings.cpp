#include "tilekit/encodings.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilekit {

namespace {

int pack_cell(int a, int b) { return ((a + 16384) << 15) | (b + 16384); }

long count_common(const std::vector<int>& u, const std::vector<int>& v) {
  long n = 0;
  auto i = u.begin();
  auto j = v.begin();
  while (i != u.end() && j != v.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      ++n, ++i, ++j;
  }
  return n;
}

std::map<std::pair<int, int>, DominoType> cell_types(const Tiling& T) {
  std::map<std::pair<int, int>, DominoType> types;
  for (const Domino& d : T.dominos()) {
    DominoType t = domino_type(T.rank(), d);
    types[d.cell0()] = t;
    types[d.cell1()] = t;
  }
  return types;
}

bool pg_particle(DominoType t) { return t == DominoType::I || t == DominoType::IV; }

int odd_slice_index(int ell) {
  if ((ell & 1) == 0)
    throw std::logic_error("weight slice is even; shading rules out this case");
  return (ell - 1) / 2;  // 0-based index of x_i / y_i with i = (ell+1)/2
}

}  // namespace

std::string model_name(ModelKind model) {
  return model == ModelKind::PurpleGray ? "purple-gray" : "white-pink";
}

std::vector<std::pair<int, int>> slice_cells(int m, int ell) {
  if (ell < 0 || ell > 2 * m) throw std::invalid_argument("slice_cells: bad slice");
  std::vector<std::pair<int, int>> cells;
  int d = ell - m;
  for (int b = -m; b < m; ++b)
    if (aztec_contains(m, b - d, b)) cells.push_back({b - d, b});
  return cells;
}

SliceWindow slice_window(int m, int ell, ModelKind model) {
  auto cells = slice_cells(m, ell);
  int min_coord = model == ModelKind::PurpleGray ? cells.front().second
                                                 : cells.front().first;
  return {static_cast<int>(cells.size()), -min_coord, min_coord};
}

TilingWeight xy_weight(const Tiling& T, ModelKind model) {
  int m = T.rank();
  TilingWeight w;
  w.x_exponents.assign(m, 0);
  w.y_exponents.assign(m, 0);
  for (const Domino& d : T.dominos()) {
    switch (domino_type(m, d)) {
      case DominoType::IV:
        if (model == ModelKind::PurpleGray)
          ++w.x_exponents[odd_slice_index((d.y + 1) - d.x + m)];
        break;
      case DominoType::II:
        if (model == ModelKind::PurpleGray)
          ++w.y_exponents[odd_slice_index(d.y - d.x + m)];
        break;
      case DominoType::I:
        if (model == ModelKind::WhitePink)
          ++w.x_exponents[odd_slice_index(d.y - d.x + m)];
        break;
      case DominoType::III:
        if (model == ModelKind::WhitePink)
          ++w.y_exponents[odd_slice_index(d.y - (d.x + 1) + m)];
        break;
    }
  }
  return w;
}

Poly weight_monomial(const TilingWeight& w) {
  Monomial mono = Monomial::var(var_t(), static_cast<int>(w.t_exponent));
  for (size_t i = 0; i < w.x_exponents.size(); ++i)
    mono = mono * Monomial::var(var_x(static_cast<int>(i) + 1), w.x_exponents[i]);
  for (size_t i = 0; i < w.y_exponents.size(); ++i)
    mono = mono * Monomial::var(var_y(static_cast<int>(i) + 1), w.y_exponents[i]);
  return Poly::term(mono, 1);
}

PartitionSequence tiling_to_sequence(const Tiling& T, ModelKind model) {
  int m = T.rank();
  auto types = cell_types(T);
  PartitionSequence seq{m, model, {}};
  for (int ell = 0; ell <= 2 * m; ++ell) {
    auto cells = slice_cells(m, ell);
    SliceWindow w = slice_window(m, ell, model);
    MayaWindow maya{w.width, w.zero_position, std::vector<uint8_t>(w.width, 0)};
    for (int c = 0; c < w.width; ++c) {
      bool pg = pg_particle(types.at(cells[c]));
      maya.bits[c] = (model == ModelKind::PurpleGray) == pg ? 1 : 0;
    }
    seq.steps.push_back({partition_from_maya(maya)});
  }
  return seq;
}

PartitionSequence ktiling_to_sequence(const KTiling& KT, ModelKind model) {
  if (KT.empty()) throw std::invalid_argument("ktiling_to_sequence: no layers");
  PartitionSequence seq{KT[0].rank(), model, {}};
  seq.steps.assign(2 * seq.rank + 1, {});
  for (const Tiling& T : KT) {
    if (T.rank() != seq.rank)
      throw std::invalid_argument("ktiling_to_sequence: mixed ranks");
    PartitionSequence one = tiling_to_sequence(T, model);
    for (size_t i = 0; i < one.steps.size(); ++i)
      seq.steps[i].push_back(one.steps[i][0]);
  }
  return seq;
}

namespace {

// Particle coordinates (b for purple-gray, a for white-pink) of one slice
// as encoded by the partition.
std::vector<int> slice_positions(const Partition& p, const SliceWindow& w,
                                 bool particles) {
  MayaWindow maya = maya_from_partition(p, w.width, w.zero_position);
  std::vector<int> out;
  for (int c = 0; c < w.width; ++c)
    if ((maya.bits[c] != 0) == particles) out.push_back(c + w.min_coord);
  return out;
}

}  // namespace

KTiling sequence_to_ktiling(const PartitionSequence& seq) {
  int m = seq.rank;
  if (m < 1) throw std::invalid_argument("sequence_to_ktiling: bad rank");
  if (seq.steps.size() != static_cast<size_t>(2 * m + 1))
    throw std::invalid_argument("sequence_to_ktiling: need 2m+1 steps");
  size_t k = seq.steps[0].size();
  if (k == 0) throw std::invalid_argument("sequence_to_ktiling: no colors");
  for (auto& tuple : seq.steps)
    if (tuple.size() != k)
      throw std::invalid_argument("sequence_to_ktiling: ragged steps");

  bool pg = seq.model == ModelKind::PurpleGray;
  KTiling out;
  for (size_t color = 0; color < k; ++color) {
    std::vector<Domino> ds;
    for (int ell = 0; ell < 2 * m; ++ell) {
      SliceWindow wlo = slice_window(m, ell, seq.model);
      SliceWindow whi = slice_window(m, ell + 1, seq.model);
      bool up_step = (ell % 2) == 0;  // even->odd slice
      // Purple-gray matches particles below even slices and holes above;
      // white-pink is the other way around. Either way the i-th marker of
      // the lower slice pairs with the i-th of the upper one.
      bool track_particles = pg ? up_step : !up_step;
      std::vector<int> lo =
          slice_positions(seq.steps[ell][color], wlo, track_particles);
      std::vector<int> hi =
          slice_positions(seq.steps[ell + 1][color], whi, track_particles);
      if (lo.size() != hi.size())
        throw std::invalid_argument("sequence_to_ktiling: chain broken between slices " +
                                    std::to_string(ell) + " and " + std::to_string(ell + 1));
      for (size_t i = 0; i < lo.size(); ++i) {
        int shift = hi[i] - lo[i];
        // The lower slice's coordinate fixes the cell; shifts say whether
        // the domino steps sideways (same coordinate) or diagonally.
        if (pg) {
          int b = lo[i], a = b - (ell - m);
          if (up_step && shift == 0)
            ds.push_back({a - 1, b, Orientation::Horizontal});  // type I
          else if (up_step && shift == 1)
            ds.push_back({a, b, Orientation::Vertical});  // type IV
          else if (!up_step && shift == 0)
            ds.push_back({a - 1, b, Orientation::Horizontal});  // type III
          else if (!up_step && shift == 1)
            ds.push_back({a, b, Orientation::Vertical});  // type II
          else
            throw std::invalid_argument("sequence_to_ktiling: interlacing violated");
        } else {
          int a = lo[i], b = a + (ell - m);
          if (up_step && shift == -1)
            ds.push_back({a - 1, b, Orientation::Horizontal});  // type I
          else if (up_step && shift == 0)
            ds.push_back({a, b, Orientation::Vertical});  // type IV
          else if (!up_step && shift == -1)
            ds.push_back({a - 1, b, Orientation::Horizontal});  // type III
          else if (!up_step && shift == 0)
            ds.push_back({a, b, Orientation::Vertical});  // type II
          else
            throw std::invalid_argument("sequence_to_ktiling: interlacing violated");
        }
      }
    }
    out.push_back(Tiling(m, std::move(ds)));
  }
  return out;
}

Tiling sequence_to_tiling(const PartitionSequence& seq) {
  KTiling kt = sequence_to_ktiling(seq);
  if (kt.size() != 1)
    throw std::invalid_argument("sequence_to_tiling: sequence has several colors");
  return kt[0];
}

bool sequence_chain_valid(const PartitionSequence& seq) {
  int m = seq.rank;
  if (m < 1 || seq.steps.size() != static_cast<size_t>(2 * m + 1)) return false;
  size_t k = seq.steps[0].size();
  if (k == 0) return false;
  for (auto& tuple : seq.steps)
    if (tuple.size() != k) return false;
  for (auto& p : seq.steps.front())
    if (!p.empty()) return false;
  for (auto& p : seq.steps.back())
    if (!p.empty()) return false;
  for (int ell = 0; ell <= 2 * m; ++ell) {
    SliceWindow w = slice_window(m, ell, seq.model);
    for (auto& p : seq.steps[ell])
      if (!partition_fits(p, w.width, w.zero_position)) return false;
  }
  bool pg = seq.model == ModelKind::PurpleGray;
  for (int i = 1; i <= 2 * m; ++i) {
    const PartitionTuple& prev = seq.steps[i - 1];
    const PartitionTuple& cur = seq.steps[i];
    bool ok;
    if (i % 2 == 1)  // rising step: the odd slice dominates
      ok = pg ? tuple_co_interlaces(cur, prev) : tuple_interlaces(cur, prev);
    else  // falling step
      ok = pg ? tuple_interlaces(prev, cur) : tuple_co_interlaces(prev, cur);
    if (!ok) return false;
  }
  return true;
}

InteractionFeatures interaction_features(const Tiling& T, ModelKind model) {
  InteractionFeatures out;
  out.model = model;
  for (const Domino& d : T.dominos()) {
    switch (domino_type(T.rank(), d)) {
      case DominoType::IV:
        if (model == ModelKind::PurpleGray)
          out.f[0].push_back(pack_cell(d.x, d.y));  // gray bottom
        break;
      case DominoType::I:
        if (model == ModelKind::PurpleGray)
          out.f[1].push_back(pack_cell(d.x + 1, d.y));  // gray right
        else
          out.f[0].push_back(pack_cell(d.x, d.y));  // white left
        break;
      case DominoType::II:
        if (model == ModelKind::PurpleGray)
          out.f[2].push_back(pack_cell(d.x, d.y + 1));  // gray top
        else
          out.f[1].push_back(pack_cell(d.x, d.y));  // white bottom
        break;
      case DominoType::III:
        if (model == ModelKind::WhitePink)
          out.f[2].push_back(pack_cell(d.x + 1, d.y));  // white right
        break;
    }
  }
  for (auto& v : out.f) std::sort(v.begin(), v.end());
  return out;
}

long interaction_count(const InteractionFeatures& a, const InteractionFeatures& b) {
  if (a.model != b.model)
    throw std::invalid_argument("interaction_count: mixed models");
  if (a.model == ModelKind::PurpleGray) {
    // IV under I, II on II, I under II, IV under II - all on a shared gray square
    return count_common(a.f[0], b.f[1]) + count_common(a.f[2], b.f[2]) +
           count_common(a.f[1], b.f[2]) + count_common(a.f[0], b.f[2]);
  }
  // I under II, I on I, II under III, I under III - on a shared white square
  return count_common(a.f[0], b.f[1]) + count_common(a.f[0], b.f[0]) +
         count_common(a.f[1], b.f[2]) + count_common(a.f[0], b.f[2]);
}

long interactions(const KTiling& KT, ModelKind model) {
  if (KT.empty()) throw std::invalid_argument("interactions: no layers");
  std::vector<InteractionFeatures> feats;
  feats.reserve(KT.size());
  for (const Tiling& T : KT) feats.push_back(interaction_features(T, model));
  long n = 0;
  for (size_t i = 0; i < feats.size(); ++i)
    for (size_t j = i + 1; j < feats.size(); ++j)
      n += interaction_count(feats[i], feats[j]);
  return n;
}

Poly weight(const KTiling& KT, ModelKind model) {
  if (KT.empty()) throw std::invalid_argument("weight: no layers");
  int m = KT[0].rank();
  TilingWeight total;
  total.x_exponents.assign(m, 0);
  total.y_exponents.assign(m, 0);
  for (const Tiling& T : KT) {
    TilingWeight w = xy_weight(T, model);
    for (int i = 0; i < m; ++i) {
      total.x_exponents[i] += w.x_exponents[i];
      total.y_exponents[i] += w.y_exponents[i];
    }
  }
  total.t_exponent = interactions(KT, model);
  return weight_monomial(total);
}

namespace {

struct TupleScan {
  std::vector<Tiling> tilings;
  std::vector<TilingWeight> weights;
  std::vector<std::vector<long>> pair_n;  // interaction_count[i][j], ordered

  TupleScan(int m, int k, ModelKind model, int cap) {
    if (k < 1) throw std::invalid_argument("color count must be positive");
    tilings = enumerate_tilings(m, cap);
    std::vector<InteractionFeatures> feats;
    for (const Tiling& T : tilings) {
      weights.push_back(xy_weight(T, model));
      feats.push_back(interaction_features(T, model));
    }
    size_t n = tilings.size();
    pair_n.assign(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        pair_n[i][j] = interaction_count(feats[i], feats[j]);
  }

  // Calls fn(indices, total interactions) for every k-tuple.
  template <typename Fn>
  void for_each_tuple(int k, Fn&& fn) {
    size_t n = tilings.size();
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
  }
};

}  // namespace

Poly generating_polynomial(int m, int k, ModelKind model, int cap) {
  TupleScan scan(m, k, model, cap);
  Poly sum;
  scan.for_each_tuple(k, [&](const std::vector<size_t>& idx, long inter) {
    TilingWeight total;
    total.x_exponents.assign(m, 0);
    total.y_exponents.assign(m, 0);
    total.t_exponent = inter;
    for (size_t i : idx) {
      for (int v = 0; v < m; ++v) {
        total.x_exponents[v] += scan.weights[i].x_exponents[v];
        total.y_exponents[v] += scan.weights[i].y_exponents[v];
      }
    }
    sum += weight_monomial(total);
  });
  return sum;
}

Poly t_marginal_polynomial(int m, int k, ModelKind model, int cap) {
  TupleScan scan(m, k, model, cap);
  std::vector<long> counts;
  scan.for_each_tuple(k, [&](const std::vector<size_t>&, long inter) {
    if (counts.size() <= static_cast<size_t>(inter)) counts.resize(inter + 1, 0);
    ++counts[inter];
  });
  Poly sum;
  for (size_t n = 0; n < counts.size(); ++n)
    if (counts[n])
      sum += Poly::term(Monomial::var(var_t(), static_cast<int>(n)), counts[n]);
  return sum;
}

Poly product_formula(int m, int k) {
  Poly z(1);
  for (int ell = 0; ell < k; ++ell)
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j)
        z *= Poly(1) + Poly::term(Monomial::var(var_t(), ell) *
                                      Monomial::var(var_x(i)) * Monomial::var(var_y(j)),
                                  1);
  return z;
}

std::map<HistogramKey, long> cross_model_histogram(int m, int k, ModelKind model,
                                                   int cap) {
  TupleScan scan(m, k, model, cap);
  std::map<HistogramKey, long> hist;
  scan.for_each_tuple(k, [&](const std::vector<size_t>& idx, long inter) {
    std::vector<int> xs(m, 0), ys(m, 0);
    for (size_t i : idx) {
      for (int v = 0; v < m; ++v) {
        xs[v] += scan.weights[i].x_exponents[v];
        ys[v] += scan.weights[i].y_exponents[v];
      }
    }
    ++hist[{inter, xs, ys}];
  });
  return hist;
}

}  // namespace tilekit
