#include "tilekit/vertex.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace tilekit {

namespace {

ColorVector full_mask(int k) {
  return k == 32 ? ~ColorVector(0) : ((ColorVector(1) << k) - 1);
}

void require_colors(int k, const FaceConfig& face) {
  if (k < 1 || k > 32) throw std::invalid_argument("color count out of range");
  const ColorVector full = full_mask(k);
  if ((face.I | face.J | face.K | face.L) & ~full)
    throw std::invalid_argument("face uses colors beyond the color count");
}

// Number of colors above i contained in v.
int count_above(ColorVector v, int i, int k) {
  return color_count(v & full_mask(k) & ~((ColorVector(1) << i) - 1));
}

// sum over i < j of A_i B_j for indicator vectors A, B
long cross_pairs(ColorVector a, ColorVector b, int k) {
  long total = 0;
  for (int i = 1; i <= k; ++i)
    if (has_color(a, i)) total += count_above(b, i, k);
  return total;
}

long choose2(long n) { return n * (n - 1) / 2; }

// Colors crossing the face straight bottom to top with nothing else.
ColorVector vertical_transits(const FaceConfig& f) {
  return f.I & ~f.J & f.K & ~f.L;
}

}  // namespace

const char* family_name(VertexFamily f) {
  switch (f) {
    case VertexFamily::L: return "L";
    case VertexFamily::LPrime: return "L'";
    case VertexFamily::M: return "M";
    case VertexFamily::MPrime: return "M'";
    case VertexFamily::RPrime: return "R'";
  }
  return "?";
}

bool face_valid(VertexFamily f, int k, const FaceConfig& face) {
  require_colors(k, face);
  if ((face.I ^ face.J) != (face.K ^ face.L)) return false;
  if ((face.I & face.J) != (face.K & face.L)) return false;
  switch (f) {
    case VertexFamily::L:
    case VertexFamily::M:
    case VertexFamily::RPrime:
      return (face.I & face.J) == 0;
    case VertexFamily::LPrime:
    case VertexFamily::MPrime:
      return (face.J & ~face.K) == 0;
  }
  return false;
}

Rational weight_algebraic(VertexFamily f, int k, const Rational& x,
                          const Rational& y, const Rational& t,
                          const FaceConfig& face) {
  if (!face_valid(f, k, face)) return 0;
  const ColorVector present = face.I | face.J;
  const int nl = color_count(face.L);
  switch (f) {
    case VertexFamily::L:
      return rational_pow(x, nl) * rational_pow(t, cross_pairs(face.L, present, k));
    case VertexFamily::LPrime:
      return rational_pow(x, nl) *
             rational_pow(t, cross_pairs(face.L, face.K & ~face.J, k));
    case VertexFamily::M: {
      if (x == 0 || (k > 1 && t == 0))
        throw std::domain_error("M weight inverts x*t^(k-1)");
      const Rational xbar = 1 / (x * rational_pow(t, k - 1));
      return rational_pow(x, k) * rational_pow(t, choose2(k)) *
             rational_pow(xbar, nl) *
             rational_pow(t, cross_pairs(face.L, present, k));
    }
    case VertexFamily::MPrime: {
      if (x == 0) throw std::domain_error("M' weight inverts x");
      return rational_pow(x, k) * rational_pow(1 / x, nl) *
             rational_pow(t, cross_pairs(face.L, face.K & ~face.J, k));
    }
    case VertexFamily::RPrime: {
      if (y == 0) throw std::domain_error("R' weight inverts y");
      const int nk = color_count(face.K);
      const Rational r = x / y;
      const Rational p = pochhammer(-r, t, nk + nl);
      if (p == 0) throw std::domain_error("R' weight hits a pole");
      return rational_pow(r, nl) / p *
             rational_pow(t, cross_pairs(face.L, face.K | face.L, k));
    }
  }
  return 0;
}

BoxMonomial box_weight(VertexFamily f, int k, const FaceConfig& face) {
  if (f == VertexFamily::RPrime)
    throw std::invalid_argument("cross weights are not monomials");
  BoxMonomial out;
  if (!face_valid(f, k, face)) return out;
  out.zero = false;
  const ColorVector present = face.I | face.J;
  const ColorVector vertical = vertical_transits(face);
  for (int i = 1; i <= k; ++i) {
    const bool right = has_color(face.L, i);
    switch (f) {
      case VertexFamily::L:
        if (right) {
          ++out.var_exponent;
          out.t_exponent += count_above(present, i, k);
        }
        break;
      case VertexFamily::LPrime:
        if (right) {
          ++out.var_exponent;
          out.t_exponent += count_above(vertical, i, k);
        }
        break;
      case VertexFamily::M: {
        const long alpha = count_above(~face.L, i, k);
        const long beta = count_above(face.K, i, k);
        out.t_exponent += beta;
        if (!right) {
          ++out.var_exponent;
          out.t_exponent += alpha - beta;
        }
        break;
      }
      case VertexFamily::MPrime: {
        const long gamma = count_above(vertical, i, k);
        out.t_exponent += gamma;
        if (!right) {
          ++out.var_exponent;
          out.t_exponent -= gamma;
        }
        break;
      }
      case VertexFamily::RPrime:
        break;
    }
  }
  return out;
}

Rational weight_graphical(VertexFamily f, int k, const Rational& x,
                          const Rational& y, const Rational& t,
                          const FaceConfig& face) {
  if (f != VertexFamily::RPrime) {
    const BoxMonomial m = box_weight(f, k, face);
    if (m.zero) return 0;
    return rational_pow(x, m.var_exponent) * rational_pow(t, m.t_exponent);
  }
  if (!face_valid(f, k, face)) return 0;
  const ColorVector present = face.I | face.J;
  Rational out = 1;
  for (int i = 1; i <= k; ++i) {
    if (!has_color(present, i)) continue;
    const Rational shifted = x * rational_pow(t, count_above(present, i, k));
    const Rational den = shifted + y;
    if (den == 0) throw std::domain_error("R' weight hits a pole");
    out *= has_color(face.K, i) ? y / den : shifted / den;
  }
  return out;
}

Poly rprime_cleared(int k, const FaceConfig& face, const Poly& ratio) {
  if (!face_valid(VertexFamily::RPrime, k, face)) return Poly();
  const int shown = color_count(face.K) + color_count(face.L);
  Poly out = ratio.pow(color_count(face.L)) *
             Poly::var(var_t(), static_cast<int>(cross_pairs(
                                    face.L, face.K | face.L, k)));
  for (int m = shown; m < k; ++m)
    out *= Poly(1) + ratio * Poly::var(var_t(), m);
  return out;
}

namespace {

struct TripleFamilies {
  VertexFamily x_family;  // rows carrying the x parameter
  VertexFamily y_family;  // rows carrying the y parameter
};

TripleFamilies ybe_families(ModelKind model) {
  if (model == ModelKind::PurpleGray)
    return {VertexFamily::M, VertexFamily::LPrime};
  return {VertexFamily::L, VertexFamily::MPrime};
}

}  // namespace

bool ybe_check(ModelKind model, int k, const Rational& x, const Rational& y,
               const Rational& t, const YbeBoundary& b) {
  const auto fam = ybe_families(model);
  Rational xf, yf;
  if (model == ModelKind::PurpleGray) {
    if (x == 0 || (k > 1 && t == 0))
      throw std::domain_error("cross parameter inverts x*t^(k-1)");
    xf = 1 / (x * rational_pow(t, k - 1));
    yf = y;
  } else {
    if (y == 0) throw std::domain_error("cross parameter inverts y");
    xf = x;
    yf = 1 / y;
  }
  const ColorVector full = full_mask(k);
  Rational lhs = 0, rhs = 0;
  for (ColorVector a = 0; a <= full; ++a)
    for (ColorVector c = 0; c <= full; ++c)
      for (ColorVector d = 0; d <= full; ++d) {
        {
          const FaceConfig cross{b.I1, b.J1, a, d};
          const FaceConfig top{c, a, b.K3, b.I3};
          const FaceConfig bot{b.K1, d, c, b.J3};
          if (face_valid(VertexFamily::RPrime, k, cross) &&
              face_valid(fam.y_family, k, top) && face_valid(fam.x_family, k, bot))
            lhs += weight_algebraic(VertexFamily::RPrime, k, xf, yf, t, cross) *
                   weight_algebraic(fam.y_family, k, y, 0, t, top) *
                   weight_algebraic(fam.x_family, k, x, 0, t, bot);
        }
        {
          const FaceConfig ybox{b.K1, b.I1, c, a};
          const FaceConfig xbox{c, b.J1, b.K3, d};
          const FaceConfig cross{a, d, b.I3, b.J3};
          if (face_valid(fam.y_family, k, ybox) && face_valid(fam.x_family, k, xbox) &&
              face_valid(VertexFamily::RPrime, k, cross))
            rhs += weight_algebraic(fam.y_family, k, y, 0, t, ybox) *
                   weight_algebraic(fam.x_family, k, x, 0, t, xbox) *
                   weight_algebraic(VertexFamily::RPrime, k, xf, yf, t, cross);
        }
      }
  return lhs == rhs;
}

bool ybe_check_symbolic(ModelKind model, int k, const YbeBoundary& b) {
  const auto fam = ybe_families(model);
  const VarId vx = var_x(1), vy = var_y(1);
  Poly ratio;  // displayed x over displayed y at the cross
  if (model == ModelKind::PurpleGray)
    ratio = Poly::term(Monomial::var(vx, -1) * Monomial::var(vy, -1) *
                           Monomial::var(var_t(), -(k - 1)),
                       1);
  else
    ratio = Poly::term(Monomial::var(vx) * Monomial::var(vy), 1);

  auto box_term = [&](VertexFamily f, VarId v, const FaceConfig& face,
                      bool& ok) -> Poly {
    const BoxMonomial m = box_weight(f, k, face);
    if (m.zero) {
      ok = false;
      return Poly();
    }
    return Poly::term(Monomial::var(v, m.var_exponent) *
                          Monomial::var(var_t(), static_cast<int>(m.t_exponent)),
                      1);
  };

  const ColorVector full = full_mask(k);
  Poly lhs, rhs;
  for (ColorVector a = 0; a <= full; ++a)
    for (ColorVector c = 0; c <= full; ++c)
      for (ColorVector d = 0; d <= full; ++d) {
        {
          const FaceConfig cross{b.I1, b.J1, a, d};
          const FaceConfig top{c, a, b.K3, b.I3};
          const FaceConfig bot{b.K1, d, c, b.J3};
          const Poly cw = rprime_cleared(k, cross, ratio);
          if (!cw.is_zero()) {
            bool ok = true;
            const Poly tw = box_term(fam.y_family, vy, top, ok);
            const Poly bw = box_term(fam.x_family, vx, bot, ok);
            if (ok) lhs += cw * tw * bw;
          }
        }
        {
          const FaceConfig ybox{b.K1, b.I1, c, a};
          const FaceConfig xbox{c, b.J1, b.K3, d};
          const FaceConfig cross{a, d, b.I3, b.J3};
          const Poly cw = rprime_cleared(k, cross, ratio);
          if (!cw.is_zero()) {
            bool ok = true;
            const Poly yw = box_term(fam.y_family, vy, ybox, ok);
            const Poly xw = box_term(fam.x_family, vx, xbox, ok);
            if (ok) rhs += cw * yw * xw;
          }
        }
      }
  return lhs == rhs;
}

LatticeSpec aztec_lattice_spec(int m, int k, ModelKind model) {
  if (m < 1) throw std::invalid_argument("rank must be positive");
  if (k < 1 || k > 32) throw std::invalid_argument("color count out of range");
  const ColorVector full = full_mask(k);
  LatticeSpec spec;
  spec.model = model;
  spec.rank = m;
  spec.colors = k;
  if (model == ModelKind::PurpleGray) {
    // m+1 columns keep the odd lines wide enough when 2m-1 is too narrow
    spec.width = std::max(2 * m - 1, m + 1);
    for (int i = 1; i <= m; ++i) {
      spec.rows.push_back({VertexFamily::LPrime, var_x(i), spec.width});
      spec.rows.push_back({VertexFamily::M, var_y(i), spec.width});
    }
    for (int h = 0; h <= 2 * m; ++h) spec.markers.push_back(m - h / 2);
    for (int r = 0; r < 2 * m; ++r) {
      spec.left.push_back(0);
      spec.right.push_back(r % 2 == 1 ? full : 0);
    }
    for (int c = 0; c < spec.width; ++c) {
      spec.bottom.push_back(c < m ? full : 0);
      spec.top.push_back(0);
    }
  } else {
    if (m < 2)
      throw std::invalid_argument(
          "white-pink lattice boundary degenerates at rank 1");
    spec.width = 2 * m - 1;
    for (int i = 1; i <= m; ++i) {
      spec.rows.push_back({VertexFamily::L, var_x(i), spec.width});
      spec.rows.push_back({VertexFamily::MPrime, var_y(i), spec.width});
    }
    for (int h = 0; h <= 2 * m; ++h) spec.markers.push_back(m - 1 + h / 2);
    for (int r = 0; r < 2 * m; ++r) {
      spec.left.push_back(r % 2 == 1 ? full : 0);
      spec.right.push_back(0);
    }
    for (int c = 0; c < spec.width; ++c) {
      spec.bottom.push_back(c < m - 1 ? full : 0);
      spec.top.push_back(full);
    }
  }
  return spec;
}

Poly pg_lattice_constant(int m, int k) {
  Monomial mono;
  for (int i = 1; i <= m; ++i)
    mono = mono * Monomial::var(var_y(i), k * (m - i));
  mono = mono * Monomial::var(
                    var_t(), static_cast<int>(choose2(k) * choose2(m)));
  return Poly::term(mono, 1);
}

Poly wp_lattice_constant(int m, int k) {
  Monomial mono;
  for (int i = 1; i <= m; ++i)
    mono = mono * Monomial::var(var_y(i), k * (m - i + 1));
  return Poly::term(mono, 1);
}

namespace {

ColorVector line_column(const LatticeLine& line, int col, int k) {
  ColorVector v = 0;
  for (int i = 0; i < k; ++i)
    v |= ColorVector((line[i] >> col) & 1) << i;
  return v;
}

struct RowOutcome {
  LatticeLine top;
  int var_exponent;
  long t_exponent;
};

using RowKey =
    std::tuple<VertexFamily, int, int, ColorVector, ColorVector, LatticeLine>;

std::map<RowKey, std::vector<RowOutcome>> row_cache;
std::mutex row_cache_mutex;

void expand_row(VertexFamily fam, int width, int k, ColorVector right,
                const LatticeLine& in, int col, ColorVector carry,
                LatticeLine& out, int var_exp, long t_exp,
                std::vector<RowOutcome>& results) {
  if (col == width) {
    if (carry == right) results.push_back({out, var_exp, t_exp});
    return;
  }
  const ColorVector I = line_column(in, col, k);
  const ColorVector J = carry;
  ColorVector forced_k, forced_l, branchable;
  if (fam == VertexFamily::L || fam == VertexFamily::M) {
    if (I & J) return;
    forced_k = 0;
    forced_l = 0;
    branchable = I ^ J;
  } else {
    forced_k = J;
    forced_l = I & J;
    branchable = I & ~J;
  }
  ColorVector s = branchable;
  while (true) {
    const FaceConfig face{I, J, forced_k | s,
                          forced_l | (branchable & ~s)};
    const BoxMonomial w = box_weight(fam, k, face);
    if (!w.zero) {
      for (int i = 0; i < k; ++i)
        if (has_color(face.K, i + 1)) out[i] |= uint64_t(1) << col;
      expand_row(fam, width, k, right, in, col + 1, face.L, out,
                 var_exp + w.var_exponent, t_exp + w.t_exponent, results);
      for (int i = 0; i < k; ++i)
        if (has_color(face.K, i + 1)) out[i] &= ~(uint64_t(1) << col);
    }
    if (s == 0) break;
    s = (s - 1) & branchable;
  }
}

const std::vector<RowOutcome>& row_expansions(VertexFamily fam, int width,
                                              int k, ColorVector left,
                                              ColorVector right,
                                              const LatticeLine& in) {
  std::lock_guard<std::mutex> lock(row_cache_mutex);
  const RowKey key{fam, width, k, left, right, in};
  auto it = row_cache.find(key);
  if (it != row_cache.end()) return it->second;
  std::vector<RowOutcome> results;
  LatticeLine out(k, 0);
  expand_row(fam, width, k, right, in, 0, left, out, 0, 0, results);
  return row_cache.emplace(key, std::move(results)).first->second;
}

LatticeLine boundary_line(const std::vector<ColorVector>& labels, int k) {
  LatticeLine line(k, 0);
  for (size_t c = 0; c < labels.size(); ++c)
    for (int i = 0; i < k; ++i)
      if (has_color(labels[c], i + 1)) line[i] |= uint64_t(1) << c;
  return line;
}

void validate_lattice(const LatticeSpec& spec) {
  if (spec.width < 1 || spec.width > 62)
    throw std::length_error("lattice width outside the supported cap");
  if (spec.colors < 1 || spec.colors > 32)
    throw std::invalid_argument("color count out of range");
  if (spec.rows.empty()) throw std::invalid_argument("lattice has no rows");
  if (spec.left.size() != spec.rows.size() ||
      spec.right.size() != spec.rows.size() ||
      spec.bottom.size() != size_t(spec.width) ||
      spec.top.size() != size_t(spec.width))
    throw std::invalid_argument("boundary labels do not match the grid");
}

constexpr size_t kStateCap = size_t(1) << 22;

}  // namespace

Poly lattice_partition_function(const LatticeSpec& spec, bool symbolic) {
  validate_lattice(spec);
  const int k = spec.colors;
  std::map<LatticeLine, Poly> front;
  front.emplace(boundary_line(spec.bottom, k), Poly(1));
  for (size_t r = 0; r < spec.rows.size(); ++r) {
    std::map<LatticeLine, Poly> next;
    for (const auto& [line, acc] : front) {
      for (const RowOutcome& o :
           row_expansions(spec.rows[r].family, spec.width, k, spec.left[r],
                          spec.right[r], line)) {
        Monomial mono = Monomial::var(var_t(), static_cast<int>(o.t_exponent));
        if (symbolic)
          mono = mono * Monomial::var(spec.rows[r].var, o.var_exponent);
        next[o.top] += acc * Poly::term(mono, 1);
      }
    }
    front = std::move(next);
    if (front.size() > kStateCap)
      throw std::length_error("lattice state cap exceeded");
  }
  const auto it = front.find(boundary_line(spec.top, k));
  return it == front.end() ? Poly() : it->second;
}

std::vector<LatticeConfig> enumerate_lattice_configs(const LatticeSpec& spec) {
  validate_lattice(spec);
  const int k = spec.colors;
  const LatticeLine target = boundary_line(spec.top, k);
  std::vector<LatticeConfig> out;
  std::vector<LatticeLine> lines{boundary_line(spec.bottom, k)};
  Poly weight(1);

  auto dfs = [&](auto&& self, size_t r) -> void {
    if (r == spec.rows.size()) {
      if (lines.back() == target) out.push_back({lines, weight});
      return;
    }
    for (const RowOutcome& o :
         row_expansions(spec.rows[r].family, spec.width, k, spec.left[r],
                        spec.right[r], lines.back())) {
      const Poly saved = weight;
      weight *= Poly::term(
          Monomial::var(spec.rows[r].var, o.var_exponent) *
              Monomial::var(var_t(), static_cast<int>(o.t_exponent)),
          1);
      lines.push_back(o.top);
      self(self, r + 1);
      lines.pop_back();
      weight = saved;
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<PartitionTuple> config_tuples(const LatticeSpec& spec,
                                          const LatticeConfig& config) {
  if (spec.markers.size() != config.lines.size())
    throw std::invalid_argument("marker list does not match the line count");
  std::vector<PartitionTuple> out;
  for (size_t h = 0; h < config.lines.size(); ++h) {
    PartitionTuple tuple;
    for (int i = 0; i < spec.colors; ++i) {
      MayaWindow w;
      w.width = spec.width;
      w.zero_position = spec.markers[h];
      for (int c = 0; c < spec.width; ++c)
        w.bits.push_back((config.lines[h][i] >> c) & 1);
      tuple.push_back(partition_from_maya(w));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

namespace {

// Unique row configuration between two fixed lines: the carried right-edge
// set is forced column by column. Returns false if no configuration fits.
bool forced_row(VertexFamily fam, int width, int k, ColorVector left,
                ColorVector right, const LatticeLine& bottom,
                const LatticeLine& top, int& var_exp, long& t_exp) {
  ColorVector carry = left;
  var_exp = 0;
  t_exp = 0;
  for (int c = 0; c < width; ++c) {
    const ColorVector I = line_column(bottom, c, k);
    const ColorVector K = line_column(top, c, k);
    if ((K & ~(I | carry)) || (I & carry & ~K)) return false;
    const FaceConfig face{I, carry, K, I ^ carry ^ K};
    const BoxMonomial w = box_weight(fam, k, face);
    if (w.zero) return false;
    var_exp += w.var_exponent;
    t_exp += w.t_exponent;
    carry = face.L;
  }
  return carry == right;
}

}  // namespace

Poly sequence_config_weight(const LatticeSpec& spec,
                            const std::vector<PartitionTuple>& steps) {
  validate_lattice(spec);
  if (steps.size() != spec.rows.size() + 1 ||
      spec.markers.size() != steps.size())
    throw std::invalid_argument("step count does not match the lattice");
  const int k = spec.colors;
  std::vector<LatticeLine> lines;
  for (size_t h = 0; h < steps.size(); ++h) {
    if (steps[h].size() != size_t(k))
      throw std::invalid_argument("tuple has the wrong number of colors");
    LatticeLine line(k, 0);
    for (int i = 0; i < k; ++i) {
      if (!partition_fits(steps[h][i], spec.width, spec.markers[h]))
        throw std::invalid_argument("partition does not fit its line window");
      const MayaWindow w =
          maya_from_partition(steps[h][i], spec.width, spec.markers[h]);
      for (int c = 0; c < spec.width; ++c)
        if (w.bits[c]) line[i] |= uint64_t(1) << c;
    }
    lines.push_back(std::move(line));
  }
  if (lines.front() != boundary_line(spec.bottom, k) ||
      lines.back() != boundary_line(spec.top, k))
    throw std::invalid_argument("sequence endpoints disagree with the boundary");
  Poly weight(1);
  for (size_t r = 0; r < spec.rows.size(); ++r) {
    int ve = 0;
    long te = 0;
    if (!forced_row(spec.rows[r].family, spec.width, k, spec.left[r],
                    spec.right[r], lines[r], lines[r + 1], ve, te))
      throw std::invalid_argument("sequence does not match a configuration");
    weight *= Poly::term(Monomial::var(spec.rows[r].var, ve) *
                             Monomial::var(var_t(), static_cast<int>(te)),
                         1);
  }
  return weight;
}

Rational row_weight(VertexFamily family, const Rational& var, int k,
                    const PartitionTuple& bottom, const PartitionTuple& top,
                    const Rational& t) {
  if (family == VertexFamily::RPrime)
    throw std::invalid_argument("cross rows have no free-standing weight");
  if (k < 1 || k > 32) throw std::invalid_argument("color count out of range");
  if (bottom.size() != size_t(k) || top.size() != size_t(k))
    throw std::invalid_argument("tuple has the wrong number of colors");

  int len_b = 0, wid_b = 0, len_t = 0, wid_t = 0;
  for (int i = 0; i < k; ++i) {
    len_b = std::max(len_b, bottom[i].length());
    wid_b = std::max(wid_b, bottom[i].part(1));
    len_t = std::max(len_t, top[i].length());
    wid_t = std::max(wid_t, top[i].part(1));
  }

  int zb, zt, width;
  ColorVector left = 0, right = 0;
  const ColorVector full = full_mask(k);
  switch (family) {
    case VertexFamily::L:
    case VertexFamily::LPrime:
      zb = zt = std::max(len_b, len_t);
      width = zb + std::max(wid_b, wid_t);
      break;
    case VertexFamily::M:
      zb = std::max(len_b, len_t + 1);
      zt = zb - 1;
      width = zb + std::max({wid_b, wid_t - 1, 0});
      right = full;
      break;
    default:  // MPrime
      zb = std::max({len_b, len_t - 1, 0});
      zt = zb + 1;
      width = std::max({zb + wid_b, zt + wid_t, zt});
      left = full;
      break;
  }

  auto make_line = [&](const PartitionTuple& tuple, int zero) {
    LatticeLine line(k, 0);
    for (int i = 0; i < k; ++i) {
      const MayaWindow w = maya_from_partition(tuple[i], width, zero);
      for (int c = 0; c < width; ++c)
        if (w.bits[c]) line[i] |= uint64_t(1) << c;
    }
    return line;
  };

  int ve = 0, vac_ve = 0;
  long te = 0, vac_te = 0;
  if (!forced_row(family, width, k, left, right, make_line(bottom, zb),
                  make_line(top, zt), ve, te))
    return 0;
  const PartitionTuple vacuum(k);
  if (!forced_row(family, width, k, left, right, make_line(vacuum, zb),
                  make_line(vacuum, zt), vac_ve, vac_te))
    throw std::logic_error("vacuum row must always be valid");
  return rational_pow(var, ve - vac_ve) * rational_pow(t, te - vac_te);
}

}  // namespace tilekit
