#include "tilekit/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

namespace tilekit {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

int hex_digit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  throw std::invalid_argument("palette colors must look like #rrggbb");
}

// Mixes the color toward white; whiten is a percentage. Type shading
// within one color's pane.
std::string shade(const std::string& color, int whiten) {
  if (color.size() != 7 || color[0] != '#')
    throw std::invalid_argument("palette colors must look like #rrggbb");
  char buf[8];
  int out[3];
  for (int i = 0; i < 3; ++i) {
    int v = 16 * hex_digit(color[1 + 2 * i]) + hex_digit(color[2 + 2 * i]);
    out[i] = v + (255 - v) * whiten / 100;
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", out[0], out[1], out[2]);
  return buf;
}

// Pixel frame of one pane; world y points up, pixel y points down.
struct Frame {
  double ox = 0, oy = 0, scale = 1;
  double px(double wx) const { return ox + scale * wx; }
  double py(double wy) const { return oy - scale * wy; }
};

void pane_title(std::string& out, const Frame& f, double world_left,
                double world_top, const std::string& text) {
  out += "<text class=\"pane-title\" x=\"" + fmt(f.px(world_left)) + "\" y=\"" +
         fmt(f.py(world_top) - 6.0) + "\" font-family=\"monospace\" font-size=\"13\">" +
         escape(text) + "</text>\n";
}

void aztec_frame_outline(std::string& out, const Frame& f, int m) {
  const double r = m + 1;
  out += "<polygon class=\"frame\" points=\"";
  const double cs[4][2] = {{r, 0}, {0, r}, {-r, 0}, {0, -r}};
  for (int i = 0; i < 4; ++i) {
    if (i) out += ' ';
    out += fmt(f.px(cs[i][0])) + ',' + fmt(f.py(cs[i][1]));
  }
  out += "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1.000\"/>\n";
}

void domino_rect(std::string& out, const Frame& f, const Domino& d,
                 DominoType type, const std::string& color) {
  const bool horizontal = d.o == Orientation::Horizontal;
  const double w = horizontal ? 2 : 1;
  const double h = horizontal ? 1 : 2;
  static const int whiten[4] = {0, 35, 65, 85};
  out += "<rect class=\"domino\" x=\"" + fmt(f.px(d.x)) + "\" y=\"" +
         fmt(f.py(d.y + h)) + "\" width=\"" + fmt(f.scale * w) +
         "\" height=\"" + fmt(f.scale * h) + "\" fill=\"" +
         shade(color, whiten[static_cast<int>(type)]) +
         "\" stroke=\"#1a1a1a\" stroke-width=\"" + fmt(f.scale * 0.06) +
         "\"/>\n";
}

void tiling_pane(std::string& out, const Frame& f, const Tiling& T,
                 const std::string& color) {
  for (const Domino& d : T.dominos())
    domino_rect(out, f, d, domino_type(T.rank(), d), color);
}

void statistics_pane(std::string& out, const Frame& f,
                     const CellStatistics& stats, int color,
                     const std::string& fill) {
  for (size_t cell = 0; cell < stats.cells.size(); ++cell) {
    const auto [a, b] = stats.cells[cell];
    double level = 0;
    if (stats.samples > 0)
      level = stats.frequency(color, cell, DominoType::I) +
              stats.frequency(color, cell, DominoType::III);
    out += "<rect class=\"cell\" x=\"" + fmt(f.px(a)) + "\" y=\"" +
           fmt(f.py(b + 1)) + "\" width=\"" + fmt(f.scale) + "\" height=\"" +
           fmt(f.scale) + "\" fill=\"" + fill + "\" fill-opacity=\"" +
           fmt(level) + "\"/>\n";
  }
}

// Curves live in the rescaled diamond |x| + |y| <= 1; stretch by the rank.
void overlay_pane(std::string& out, const Frame& f, const CurveFamily& family,
                  int m) {
  for (const CurveBranch& b : family.branches) {
    const auto line = branch_polyline(b);
    if (line.empty()) continue;
    out += "<path class=\"branch\" d=\"";
    for (size_t i = 0; i < line.size(); ++i) {
      out += i == 0 ? "M" : " L";
      out += fmt(f.px(m * line[i].first)) + ',' + fmt(f.py(m * line[i].second));
    }
    out += "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.000\"/>\n";
  }
}

void paths_pane(std::string& out, const Frame& f, const SchroderPathFamily& F,
                const std::vector<std::string>& palette) {
  aztec_frame_outline(out, f, F.rank);
  for (int i = 1; i <= F.rank; ++i) {
    double x = -F.rank - 1 + i;
    double h = -2 * i + 1;
    out += "<polyline class=\"schroder\" points=\"" + fmt(f.px(x)) + ',' +
           fmt(f.py(h / 2));
    for (SchroderStep s : F.paths[i - 1]) {
      x += s == SchroderStep::E ? 2 : 1;
      h += s == SchroderStep::NE ? 2 : (s == SchroderStep::SE ? -2 : 0);
      out += ' ' + fmt(f.px(x)) + ',' + fmt(f.py(h / 2));
    }
    out += "\" fill=\"none\" stroke=\"" + palette[(i - 1) % palette.size()] +
           "\" stroke-width=\"" + fmt(f.scale * 0.12) + "\"/>\n";
  }
}

std::pair<double, double> hex_point(double x, double y) {
  return {x + y / 2, std::numbers::sqrt3 / 2 * y};
}

void lozenge_pane(std::string& out, const Frame& f, const HexPathFamily& fam,
                  const std::string& color) {
  static const int whiten[3] = {0, 40, 70};
  for (const Lozenge& l : lozenges(fam)) {
    out += "<polygon class=\"lozenge\" points=\"";
    bool first = true;
    for (auto [gx, gy] : lozenge_corners(l)) {
      const auto [cx, cy] = hex_point(gx, gy);
      if (!first) out += ' ';
      first = false;
      out += fmt(f.px(cx)) + ',' + fmt(f.py(cy));
    }
    out += "\" fill=\"" + shade(color, whiten[l.type - 1]) +
           "\" stroke=\"#1a1a1a\" stroke-width=\"" + fmt(f.scale * 0.06) +
           "\"/>\n";
  }
}

struct Layout {
  double width = 0, height = 0;
  std::vector<Frame> frames;  // one per pane
};

// Panes sit side by side; world box [-wb, wb]^2 (aztec) or the hexagon's
// bounding box. Legend space is added by the caller.
Layout diamond_layout(int panes, int m, double scale) {
  Layout lay;
  const double wb = m + 1;
  const double pad = 1.5 * scale;
  const double side = 2 * wb * scale;
  for (int p = 0; p < panes; ++p) {
    Frame f;
    f.scale = scale;
    f.ox = pad + p * (side + pad) + side / 2;
    f.oy = pad + 18 + side / 2;
    lay.frames.push_back(f);
  }
  lay.width = pad + panes * (side + pad);
  lay.height = side + 2 * pad + 18;
  return lay;
}

Layout hexagon_layout(int panes, const HexRegion& r, double scale) {
  Layout lay;
  const double w = (r.a + r.b) + (r.a + r.c) / 2.0;
  const double h = std::numbers::sqrt3 / 2 * (r.a + r.c);
  const double pad = 1.5 * scale;
  for (int p = 0; p < panes; ++p) {
    Frame f;
    f.scale = scale;
    f.ox = pad + p * (w * scale + pad);
    f.oy = pad + 18 + h * scale;
    lay.frames.push_back(f);
  }
  lay.width = pad + panes * (w * scale + pad);
  lay.height = h * scale + 2 * pad + 18;
  return lay;
}

std::vector<std::string> effective_palette(const RenderSpec& spec, int k) {
  std::vector<std::string> out;
  const auto& base = spec.palette.empty() ? default_palette() : spec.palette;
  if (!spec.palette.empty() && static_cast<int>(spec.palette.size()) < k)
    throw std::invalid_argument("palette needs at least one color per layer");
  for (int i = 0; i < k; ++i) out.push_back(base[i % base.size()]);
  for (const std::string& c : out) shade(c, 0);  // validates the format
  return out;
}

using LegendRows = std::vector<std::pair<std::string, std::string>>;

std::string document(const Layout& lay, const std::string& body,
                     const LegendRows& rows) {
  const double legend_h = 8 + 18 * static_cast<double>(rows.size());
  const double W = lay.width;
  const double H = lay.height + legend_h;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) +
         "\" height=\"" + fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + ' ' +
         fmt(H) + "\">\n";
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + fmt(W) +
         "\" height=\"" + fmt(H) + "\" fill=\"#ffffff\"/>\n";
  out += body;
  out += "<g class=\"legend\" font-family=\"monospace\" font-size=\"13\">\n";
  double y = lay.height + 14;
  for (const auto& [key, value] : rows) {
    out += "<text x=\"8\" y=\"" + fmt(y) + "\">" + escape(key) + ": " +
           escape(value) + "</text>\n";
    y += 18;
  }
  out += "</g>\n</svg>\n";
  return out;
}

LegendRows sampler_rows(const SamplerConfig& cfg) {
  return {{"model", "aztec"},
          {"rank", std::to_string(cfg.rank)},
          {"colors", std::to_string(cfg.colors)},
          {"t", rational_str(cfg.t)},
          {"steps", std::to_string(cfg.steps)},
          {"seed", std::to_string(cfg.seed)},
          {"rng", kSamplerRng}};
}

LegendRows hex_sampler_rows(const HexSamplerConfig& cfg) {
  const HexRegion& r = cfg.region;
  return {{"model", "hexagon"},
          {"hexagon", std::to_string(r.a) + "x" + std::to_string(r.b) + "x" +
                          std::to_string(r.c)},
          {"colors", std::to_string(cfg.colors)},
          {"t", rational_str(cfg.t)},
          {"steps", std::to_string(cfg.steps)},
          {"seed", std::to_string(cfg.seed)},
          {"rng", kSamplerRng}};
}

struct Renderer {
  const RenderSpec& spec;

  std::string aztec_panes(const KTiling& KT, const LegendRows& rows) {
    const int k = static_cast<int>(KT.size());
    const int m = KT.front().rank();
    const auto palette = effective_palette(spec, k);
    Layout lay = diamond_layout(k, m, spec.scale);
    std::string body;
    for (int a = 0; a < k; ++a) {
      const Frame& f = lay.frames[a];
      pane_title(body, f, -(m + 1), m + 1, "color " + std::to_string(a + 1));
      aztec_frame_outline(body, f, m);
      tiling_pane(body, f, KT[a], palette[a]);
      if (spec.overlay) overlay_pane(body, f, *spec.overlay, m);
    }
    return document(lay, body, rows);
  }

  std::string operator()(const KTiling& KT) {
    LegendRows rows = {{"model", "aztec"},
                       {"rank", std::to_string(KT.front().rank())},
                       {"colors", std::to_string(KT.size())}};
    rows.insert(rows.end(), spec.legend.begin(), spec.legend.end());
    return aztec_panes(KT, rows);
  }

  std::string operator()(const SchroderPathFamily& F) {
    const auto palette = effective_palette(spec, 1);
    Layout lay = diamond_layout(1, F.rank, spec.scale);
    std::string body;
    pane_title(body, lay.frames[0], -(F.rank + 1), F.rank + 1, "paths");
    paths_pane(body, lay.frames[0], F, palette);
    if (spec.overlay) overlay_pane(body, lay.frames[0], *spec.overlay, F.rank);
    LegendRows rows = {{"model", "aztec"},
                       {"rank", std::to_string(F.rank)},
                       {"paths", std::to_string(F.paths.size())}};
    rows.insert(rows.end(), spec.legend.begin(), spec.legend.end());
    return document(lay, body, rows);
  }

  std::string operator()(const CellStatistics& stats) {
    const auto palette = effective_palette(spec, stats.colors);
    Layout lay = diamond_layout(stats.colors, stats.rank, spec.scale);
    std::string body;
    for (int a = 0; a < stats.colors; ++a) {
      const Frame& f = lay.frames[a];
      pane_title(body, f, -(stats.rank + 1), stats.rank + 1,
                 "color " + std::to_string(a + 1));
      aztec_frame_outline(body, f, stats.rank);
      statistics_pane(body, f, stats, a, palette[a]);
      if (spec.overlay) overlay_pane(body, f, *spec.overlay, stats.rank);
    }
    LegendRows rows = {{"model", "aztec"},
                       {"rank", std::to_string(stats.rank)},
                       {"colors", std::to_string(stats.colors)},
                       {"samples", std::to_string(stats.samples)}};
    rows.insert(rows.end(), spec.legend.begin(), spec.legend.end());
    return document(lay, body, rows);
  }

  std::string hex_panes(const KLozengeTiling& KL, const LegendRows& rows) {
    if (spec.overlay)
      throw std::invalid_argument("curve overlays apply to diamond panes only");
    const int k = static_cast<int>(KL.size());
    const HexRegion& r = KL.front().region;
    const auto palette = effective_palette(spec, k);
    Layout lay = hexagon_layout(k, r, spec.scale);
    std::string body;
    for (int a = 0; a < k; ++a) {
      const Frame& f = lay.frames[a];
      pane_title(body, f, 0, std::numbers::sqrt3 / 2 * (r.a + r.c),
                 "color " + std::to_string(a + 1));
      lozenge_pane(body, f, KL[a], palette[a]);
    }
    return document(lay, body, rows);
  }

  std::string operator()(const KLozengeTiling& KL) {
    const HexRegion& r = KL.front().region;
    LegendRows rows = {{"model", "hexagon"},
                       {"hexagon", std::to_string(r.a) + "x" +
                                       std::to_string(r.b) + "x" +
                                       std::to_string(r.c)},
                       {"colors", std::to_string(KL.size())}};
    rows.insert(rows.end(), spec.legend.begin(), spec.legend.end());
    return hex_panes(KL, rows);
  }

  std::string operator()(const SnapshotDocument& doc) {
    if (doc.snapshots.empty())
      throw std::invalid_argument("no snapshots to render");
    LegendRows rows = sampler_rows(doc.config);
    rows.push_back({"snapshot",
                    std::to_string(doc.snapshots.size()) + " of " +
                        std::to_string(doc.snapshots.size())});
    rows.insert(rows.end(), spec.legend.begin(), spec.legend.end());
    return aztec_panes(doc.snapshots.back(), rows);
  }

  std::string operator()(const HexSnapshotDocument& doc) {
    if (doc.snapshots.empty())
      throw std::invalid_argument("no snapshots to render");
    LegendRows rows = hex_sampler_rows(doc.config);
    rows.push_back({"snapshot",
                    std::to_string(doc.snapshots.size()) + " of " +
                        std::to_string(doc.snapshots.size())});
    rows.insert(rows.end(), spec.legend.begin(), spec.legend.end());
    return hex_panes(doc.snapshots.back(), rows);
  }
};

}  // namespace

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> colors = {
      "#4c72b0", "#dd8452", "#55a868", "#c44e52",
      "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};
  return colors;
}

std::string render_svg(const RenderSpec& spec) {
  if (!(spec.scale > 0))
    throw std::invalid_argument("render scale must be positive");
  return std::visit(Renderer{spec}, spec.artifact);
}

}  // namespace tilekit
