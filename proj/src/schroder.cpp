#include "tilekit/schroder.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace tilekit {

namespace {

// Lattice point with doubled ordinate; path points always have odd h.
struct Pt {
  int x = 0;
  int h = 0;

  friend auto operator<=>(const Pt&, const Pt&) = default;
};

struct Seg {
  SchroderStep step;
  Pt to;
};

Pt start_point(int m, int i) { return {-m - 1 + i, -2 * i + 1}; }
Pt end_point(int m, int i) { return {m + 1 - i, -2 * i + 1}; }

Pt advance(Pt at, SchroderStep s) {
  switch (s) {
    case SchroderStep::NE:
      return {at.x + 1, at.h + 2};
    case SchroderStep::SE:
      return {at.x + 1, at.h - 2};
    case SchroderStep::E:
      return {at.x + 2, at.h};
  }
  throw std::logic_error("unreachable step kind");
}

// Segment carried by a domino, if any, keyed by its starting point.
bool domino_segment(int m, const Domino& d, Pt* from, Seg* seg) {
  switch (domino_type(m, d)) {
    case DominoType::I:
      *from = {d.x, 2 * d.y + 1};
      *seg = {SchroderStep::E, {d.x + 2, 2 * d.y + 1}};
      return true;
    case DominoType::II:
      *from = {d.x, 2 * d.y + 1};
      *seg = {SchroderStep::NE, {d.x + 1, 2 * d.y + 3}};
      return true;
    case DominoType::IV:
      *from = {d.x, 2 * d.y + 3};
      *seg = {SchroderStep::SE, {d.x + 1, 2 * d.y + 1}};
      return true;
    case DominoType::III:
      return false;
  }
  return false;
}

void check_family_shape(const SchroderPathFamily& F) {
  if (F.rank < 0 || static_cast<int>(F.paths.size()) != F.rank)
    throw std::invalid_argument("family needs one path per start point");
}

int arrival_rank(SchroderStep s) {
  switch (s) {
    case SchroderStep::SE:
      return 2;
    case SchroderStep::E:
      return 1;
    case SchroderStep::NE:
      return 0;
  }
  throw std::logic_error("unreachable step kind");
}

// Incoming step at every point a path arrives at, for one family.
std::map<Pt, SchroderStep> arrival_steps(const SchroderPathFamily& F) {
  std::map<Pt, SchroderStep> in;
  for (int i = 1; i <= F.rank; ++i) {
    Pt at = start_point(F.rank, i);
    for (SchroderStep s : F.paths[i - 1]) {
      at = advance(at, s);
      in.insert_or_assign(at, s);
    }
    if (at != end_point(F.rank, i))
      throw std::invalid_argument("path does not reach its end point");
  }
  return in;
}

}  // namespace

std::string step_name(SchroderStep s) {
  switch (s) {
    case SchroderStep::NE:
      return "NE";
    case SchroderStep::SE:
      return "SE";
    case SchroderStep::E:
      return "E";
  }
  throw std::logic_error("unreachable step kind");
}

SchroderStep step_from_name(const std::string& name) {
  if (name == "NE") return SchroderStep::NE;
  if (name == "SE") return SchroderStep::SE;
  if (name == "E") return SchroderStep::E;
  throw std::invalid_argument("unknown step name: " + name);
}

SchroderPathFamily tiling_to_paths(const Tiling& T) {
  const int m = T.rank();
  std::map<Pt, Seg> segs;
  for (const Domino& d : T.dominos()) {
    Pt from;
    Seg seg;
    if (domino_segment(m, d, &from, &seg)) segs.emplace(from, seg);
  }
  SchroderPathFamily F;
  F.rank = m;
  F.paths.resize(m);
  for (int i = 1; i <= m; ++i) {
    Pt at = start_point(m, i);
    const Pt goal = end_point(m, i);
    auto& path = F.paths[i - 1];
    while (at != goal) {
      auto it = segs.find(at);
      if (it == segs.end())
        throw std::logic_error("path broke off inside a full tiling");
      path.push_back(it->second.step);
      at = it->second.to;
    }
  }
  return F;
}

Tiling paths_to_tiling(const SchroderPathFamily& F) {
  check_family_shape(F);
  const int m = F.rank;
  std::vector<Domino> dominos;
  std::set<std::pair<int, int>> covered;
  auto cover = [&](int a, int b) {
    if (!covered.insert({a, b}).second)
      throw std::invalid_argument("paths cross: cell covered twice");
  };
  for (int i = 1; i <= m; ++i) {
    Pt at = start_point(m, i);
    for (SchroderStep s : F.paths[i - 1]) {
      const int a = at.x;
      const int b = (at.h - 1) / 2;
      switch (s) {
        case SchroderStep::E:
          cover(a, b);
          cover(a + 1, b);
          dominos.push_back({a, b, Orientation::Horizontal});
          break;
        case SchroderStep::NE:
          cover(a, b);
          cover(a, b + 1);
          dominos.push_back({a, b, Orientation::Vertical});
          break;
        case SchroderStep::SE:
          cover(a, b - 1);
          cover(a, b);
          dominos.push_back({a, b - 1, Orientation::Vertical});
          break;
      }
      at = advance(at, s);
    }
    if (at != end_point(m, i))
      throw std::invalid_argument("path does not reach its end point");
  }
  // The remaining cells must pair into horizontal dominos row by row.
  std::vector<std::pair<int, int>> rest;
  for (auto [a, b] : aztec_cells(m))
    if (!covered.count({a, b})) rest.push_back({b, a});
  std::sort(rest.begin(), rest.end());
  for (size_t i = 0; i < rest.size(); i += 2) {
    if (i + 1 == rest.size() ||
        rest[i + 1] != std::pair{rest[i].first, rest[i].second + 1})
      throw std::invalid_argument("leftover cells do not pair horizontally");
    dominos.push_back({rest[i].second, rest[i].first, Orientation::Horizontal});
  }
  return Tiling(m, std::move(dominos));
}

int path_height_doubled(const SchroderPathFamily& F, int i, int q) {
  check_family_shape(F);
  if (i < 1 || i > F.rank) throw std::invalid_argument("path index out of range");
  Pt at = start_point(F.rank, i);
  if (q < 2 * at.x || q > 2 * end_point(F.rank, i).x)
    throw std::invalid_argument("abscissa outside the path's span");
  for (SchroderStep s : F.paths[i - 1]) {
    const Pt next = advance(at, s);
    if (q <= 2 * next.x) {
      switch (s) {
        case SchroderStep::E:
          return at.h;
        case SchroderStep::NE:
          return at.h + (q - 2 * at.x);
        case SchroderStep::SE:
          return at.h - (q - 2 * at.x);
      }
    }
    at = next;
  }
  return at.h;
}

TilingWeight path_xy_weight(const SchroderPathFamily& F, ModelKind model) {
  check_family_shape(F);
  const int m = F.rank;
  TilingWeight w;
  w.x_exponents.assign(m, 0);
  w.y_exponents.assign(m, 0);
  std::vector<int> starts(m, 0);
  for (int i = 1; i <= m; ++i) {
    Pt at = start_point(m, i);
    for (SchroderStep s : F.paths[i - 1]) {
      // Slice of the cell whose left edge the step starts on; always odd.
      const int ell = (at.h - 1) / 2 - at.x + m;
      if (ell < 1 || ell > 2 * m - 1 || ell % 2 == 0)
        throw std::invalid_argument("step starts off the odd slices");
      const int slot = (ell - 1) / 2;
      ++starts[slot];
      if (model == ModelKind::PurpleGray) {
        if (s == SchroderStep::SE) ++w.x_exponents[slot];
        if (s == SchroderStep::NE) ++w.y_exponents[slot];
      } else if (s == SchroderStep::E) {
        ++w.x_exponents[slot];
      }
      at = advance(at, s);
    }
    if (at != end_point(m, i))
      throw std::invalid_argument("path does not reach its end point");
  }
  if (model == ModelKind::WhitePink)
    for (int i = 0; i < m; ++i) w.y_exponents[i] = m + 1 - starts[i];
  return w;
}

long path_interactions(const std::vector<SchroderPathFamily>& families) {
  if (families.empty())
    throw std::invalid_argument("need at least one family");
  const int m = families.front().rank;
  std::vector<std::map<Pt, SchroderStep>> in;
  in.reserve(families.size());
  for (const auto& F : families) {
    if (F.rank != m) throw std::invalid_argument("families differ in rank");
    in.push_back(arrival_steps(F));
  }
  long total = 0;
  for (size_t a = 0; a < in.size(); ++a)
    for (size_t b = a + 1; b < in.size(); ++b)
      for (const auto& [p, sa] : in[a]) {
        auto it = in[b].find(p);
        if (it == in[b].end()) continue;
        const SchroderStep sb = it->second;
        const bool together =
            sa == SchroderStep::NE && sb == SchroderStep::NE;
        if (together || arrival_rank(sa) > arrival_rank(sb)) ++total;
      }
  return total;
}

int frozen_prefix(int color_a, int index_i, int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("need k >= 1 and m >= 1");
  if (color_a < 1 || color_a > k) throw std::invalid_argument("color out of range");
  if (index_i < 1 || index_i > m) throw std::invalid_argument("index out of range");
  return std::min((k - 1) * index_i + 1 - color_a, m - index_i + 1);
}

}  // namespace tilekit
