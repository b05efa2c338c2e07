#include "tilekit/io.hpp"

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace tilekit {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "tilekit/1";

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("tilekit json: " + msg);
}

// Strict field policy: the object must carry exactly a subset of `allowed`
// and every name in `required`.
void check_fields(const json& j, const char* what,
                  std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (auto name : allowed)
      if (item.key() == name) known = true;
    if (!known) bad(std::string("unknown field \"") + item.key() + "\" in " + what);
  }
  for (auto name : required)
    if (!j.contains(name)) bad(std::string(what) + " is missing \"" + std::string(name) + "\"");
}

long long get_integer(const json& j, const char* what) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

uint64_t get_u64(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0) bad(std::string(what) + " must be nonnegative");
    return static_cast<uint64_t>(v);
  }
  bad(std::string(what) + " must be an integer");
}

std::string get_string(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed document");
  if (!j.is_object()) bad("top level must be an object");
  if (!j.contains("schema") || !j["schema"].is_string() ||
      j["schema"].get<std::string>() != kSchema)
    bad(std::string("expected \"schema\": \"") + kSchema + "\"");
  return j;
}

json layer_to_json(const Tiling& T) {
  json layer = json::array();
  for (const Domino& d : T.dominos())
    layer.push_back({{"x", d.x},
                     {"y", d.y},
                     {"o", d.o == Orientation::Horizontal ? "h" : "v"}});
  return layer;
}

Tiling layer_from_json(int rank, const json& layer) {
  if (!layer.is_array()) bad("layer must be an array of dominos");
  std::vector<Domino> ds;
  ds.reserve(layer.size());
  for (const json& dj : layer) {
    check_fields(dj, "domino", {"x", "y", "o"}, {"x", "y", "o"});
    Domino d;
    d.x = static_cast<int>(get_integer(dj["x"], "domino x"));
    d.y = static_cast<int>(get_integer(dj["y"], "domino y"));
    std::string o = get_string(dj["o"], "domino o");
    if (o == "h")
      d.o = Orientation::Horizontal;
    else if (o == "v")
      d.o = Orientation::Vertical;
    else
      bad("domino o must be \"h\" or \"v\"");
    ds.push_back(d);
  }
  try {
    return Tiling(rank, std::move(ds));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

json layers_to_json(const KTiling& KT) {
  json layers = json::array();
  for (const Tiling& T : KT) layers.push_back(layer_to_json(T));
  return layers;
}

KTiling layers_from_json(int rank, const json& layers) {
  if (!layers.is_array() || layers.empty())
    bad("layers must be a nonempty array");
  KTiling KT;
  KT.reserve(layers.size());
  for (const json& layer : layers) KT.push_back(layer_from_json(rank, layer));
  return KT;
}

int get_rank(const json& j) {
  long long m = get_integer(j, "rank");
  if (m < 1 || m > 1 << 20) bad("rank out of range");
  return static_cast<int>(m);
}

KTiling ktiling_from(const json& j) {
  check_fields(j, "tiling document", {"schema", "rank", "layers"},
               {"rank", "layers"});
  int m = get_rank(j["rank"]);
  return layers_from_json(m, j["layers"]);
}

SchroderPathFamily paths_from(const json& j) {
  check_fields(j, "path document", {"schema", "rank", "paths"},
               {"rank", "paths"});
  SchroderPathFamily F;
  F.rank = get_rank(j["rank"]);
  const json& paths = j["paths"];
  if (!paths.is_array()) bad("paths must be an array");
  for (const json& pj : paths) {
    if (!pj.is_array()) bad("each path must be an array of step names");
    std::vector<SchroderStep> steps;
    for (const json& sj : pj) {
      try {
        steps.push_back(step_from_name(get_string(sj, "step")));
      } catch (const std::invalid_argument& e) {
        bad(e.what());
      }
    }
    F.paths.push_back(std::move(steps));
  }
  if (static_cast<int>(F.paths.size()) != F.rank)
    bad("a rank-m family needs exactly m paths");
  try {
    paths_to_tiling(F);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return F;
}

CellStatistics statistics_from(const json& j) {
  check_fields(j, "statistics document",
               {"schema", "rank", "colors", "samples", "cells", "counts"},
               {"rank", "colors", "samples", "cells", "counts"});
  CellStatistics s;
  s.rank = get_rank(j["rank"]);
  s.colors = static_cast<int>(get_integer(j["colors"], "colors"));
  if (s.colors < 1) bad("colors must be positive");
  s.samples = get_integer(j["samples"], "samples");
  if (s.samples < 0) bad("samples must be nonnegative");
  const json& cells = j["cells"];
  if (!cells.is_array()) bad("cells must be an array");
  for (const json& cj : cells) {
    if (!cj.is_array() || cj.size() != 2) bad("each cell must be a pair");
    s.cells.emplace_back(static_cast<int>(get_integer(cj[0], "cell a")),
                         static_cast<int>(get_integer(cj[1], "cell b")));
  }
  if (s.cells != aztec_cells(s.rank))
    bad("cells must list the rank's cells in canonical order");
  const json& counts = j["counts"];
  if (!counts.is_array() ||
      counts.size() != s.cells.size() * static_cast<size_t>(s.colors))
    bad("counts must hold colors * cells entries");
  for (const json& row : counts) {
    if (!row.is_array() || row.size() != 4)
      bad("each counts entry must hold four numbers");
    std::array<long long, 4> entry{};
    for (int i = 0; i < 4; ++i) {
      entry[i] = get_integer(row[i], "count");
      if (entry[i] < 0) bad("counts must be nonnegative");
    }
    s.counts.push_back(entry);
  }
  return s;
}

json region_to_json(const HexRegion& r) {
  return {{"a", r.a}, {"b", r.b}, {"c", r.c}};
}

HexRegion region_from_json(const json& j) {
  check_fields(j, "hexagon", {"a", "b", "c"}, {"a", "b", "c"});
  HexRegion r;
  r.a = static_cast<int>(get_integer(j["a"], "hexagon a"));
  r.b = static_cast<int>(get_integer(j["b"], "hexagon b"));
  r.c = static_cast<int>(get_integer(j["c"], "hexagon c"));
  return r;
}

json strands_to_json(const HexPathFamily& f) {
  json layer = json::array();
  for (const auto& row : f.steps) layer.push_back(row);
  return layer;
}

HexPathFamily strands_from_json(const HexRegion& region, const json& layer) {
  if (!layer.is_array()) bad("layer must be an array of strand rows");
  HexPathFamily f;
  f.region = region;
  for (const json& row : layer) {
    if (!row.is_array()) bad("strand row must be an array");
    std::vector<int> steps;
    for (const json& v : row)
      steps.push_back(static_cast<int>(get_integer(v, "strand step")));
    f.steps.push_back(std::move(steps));
  }
  try {
    validate(f);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return f;
}

KLozengeTiling hex_layers_from_json(const HexRegion& region, const json& layers) {
  if (!layers.is_array() || layers.empty())
    bad("layers must be a nonempty array");
  KLozengeTiling KL;
  for (const json& layer : layers)
    KL.push_back(strands_from_json(region, layer));
  return KL;
}

KLozengeTiling hex_ktiling_from(const json& j) {
  check_fields(j, "lozenge document", {"schema", "hexagon", "layers"},
               {"hexagon", "layers"});
  return hex_layers_from_json(region_from_json(j["hexagon"]), j["layers"]);
}

json aztec_metadata(const SamplerConfig& cfg) {
  return {{"model", "aztec"},    {"rank", cfg.rank},
          {"colors", cfg.colors}, {"t", rational_str(cfg.t)},
          {"steps", cfg.steps},  {"burn_in", cfg.burn_in},
          {"thinning", cfg.thinning}, {"seed", cfg.seed},
          {"rng", kSamplerRng}};
}

json hex_metadata(const HexSamplerConfig& cfg) {
  return {{"model", "hexagon"},  {"hexagon", region_to_json(cfg.region)},
          {"colors", cfg.colors}, {"t", rational_str(cfg.t)},
          {"steps", cfg.steps},  {"burn_in", cfg.burn_in},
          {"thinning", cfg.thinning}, {"seed", cfg.seed},
          {"rng", kSamplerRng}};
}

void shared_metadata_from(const json& meta, const char* model, int& colors,
                          Rational& t, long long& steps, long long& burn_in,
                          long long& thinning, uint64_t& seed) {
  const char* geometry = std::string_view(model) == "aztec" ? "rank" : "hexagon";
  check_fields(meta, "metadata",
               {"model", geometry, "colors", "t", "steps", "burn_in",
                "thinning", "seed", "rng"},
               {"model", geometry, "colors", "t", "steps", "burn_in",
                "thinning", "seed", "rng"});
  if (get_string(meta["model"], "model") != model) bad("unexpected model");
  if (get_string(meta["rng"], "rng") != kSamplerRng)
    bad(std::string("unknown rng, expected ") + kSamplerRng);
  colors = static_cast<int>(get_integer(meta["colors"], "colors"));
  t = rational_from_str(get_string(meta["t"], "t"));
  steps = get_integer(meta["steps"], "steps");
  burn_in = get_integer(meta["burn_in"], "burn_in");
  thinning = get_integer(meta["thinning"], "thinning");
  seed = get_u64(meta["seed"], "seed");
}

SnapshotDocument aztec_snapshots_from(const json& j) {
  check_fields(j, "snapshot document", {"schema", "metadata", "snapshots"},
               {"metadata", "snapshots"});
  SnapshotDocument doc;
  const json& meta = j["metadata"];
  shared_metadata_from(meta, "aztec", doc.config.colors, doc.config.t,
                       doc.config.steps, doc.config.burn_in,
                       doc.config.thinning, doc.config.seed);
  doc.config.rank = get_rank(meta["rank"]);
  try {
    validate(doc.config);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  const json& snaps = j["snapshots"];
  if (!snaps.is_array()) bad("snapshots must be an array");
  for (const json& sj : snaps) {
    check_fields(sj, "snapshot", {"rank", "layers"}, {"rank", "layers"});
    if (get_rank(sj["rank"]) != doc.config.rank)
      bad("snapshot rank differs from the configured rank");
    doc.snapshots.push_back(layers_from_json(doc.config.rank, sj["layers"]));
    if (static_cast<int>(doc.snapshots.back().size()) != doc.config.colors)
      bad("snapshot layer count differs from the configured colors");
  }
  return doc;
}

HexSnapshotDocument hex_snapshots_from(const json& j) {
  check_fields(j, "snapshot document", {"schema", "metadata", "snapshots"},
               {"metadata", "snapshots"});
  HexSnapshotDocument doc;
  const json& meta = j["metadata"];
  shared_metadata_from(meta, "hexagon", doc.config.colors, doc.config.t,
                       doc.config.steps, doc.config.burn_in,
                       doc.config.thinning, doc.config.seed);
  doc.config.region = region_from_json(meta["hexagon"]);
  try {
    validate(doc.config);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  const json& snaps = j["snapshots"];
  if (!snaps.is_array()) bad("snapshots must be an array");
  for (const json& sj : snaps) {
    check_fields(sj, "snapshot", {"hexagon", "layers"}, {"hexagon", "layers"});
    if (!(region_from_json(sj["hexagon"]) == doc.config.region))
      bad("snapshot hexagon differs from the configured region");
    doc.snapshots.push_back(
        hex_layers_from_json(doc.config.region, sj["layers"]));
    if (static_cast<int>(doc.snapshots.back().size()) != doc.config.colors)
      bad("snapshot layer count differs from the configured colors");
  }
  return doc;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational rational_from_str(const std::string& s) {
  if (s.empty()) bad("empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      bad("rational must look like \"p\" or \"p/q\"");
  Rational r;
  if (r.set_str(s, 10) != 0) bad("unreadable rational \"" + s + "\"");
  if (r.get_den() == 0) bad("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string ktiling_to_json(const KTiling& KT) {
  if (KT.empty()) throw std::invalid_argument("ktiling_to_json: no layers");
  json j = {{"schema", kSchema},
            {"rank", KT.front().rank()},
            {"layers", layers_to_json(KT)}};
  return dump(j);
}

KTiling ktiling_from_json(const std::string& text) {
  return ktiling_from(parse_document(text));
}

std::string paths_to_json(const SchroderPathFamily& F) {
  json paths = json::array();
  for (const auto& path : F.paths) {
    json pj = json::array();
    for (SchroderStep s : path) pj.push_back(step_name(s));
    paths.push_back(pj);
  }
  json j = {{"schema", kSchema}, {"rank", F.rank}, {"paths", paths}};
  return dump(j);
}

SchroderPathFamily paths_from_json(const std::string& text) {
  return paths_from(parse_document(text));
}

std::string statistics_to_json(const CellStatistics& stats) {
  json cells = json::array();
  for (auto [a, b] : stats.cells) cells.push_back({a, b});
  json counts = json::array();
  for (const auto& entry : stats.counts)
    counts.push_back({entry[0], entry[1], entry[2], entry[3]});
  json j = {{"schema", kSchema},     {"rank", stats.rank},
            {"colors", stats.colors}, {"samples", stats.samples},
            {"cells", cells},        {"counts", counts}};
  return dump(j);
}

CellStatistics statistics_from_json(const std::string& text) {
  return statistics_from(parse_document(text));
}

std::string hex_ktiling_to_json(const KLozengeTiling& KL) {
  if (KL.empty()) throw std::invalid_argument("hex_ktiling_to_json: no layers");
  json layers = json::array();
  for (const HexPathFamily& f : KL) layers.push_back(strands_to_json(f));
  json j = {{"schema", kSchema},
            {"hexagon", region_to_json(KL.front().region)},
            {"layers", layers}};
  return dump(j);
}

KLozengeTiling hex_ktiling_from_json(const std::string& text) {
  return hex_ktiling_from(parse_document(text));
}

std::string snapshots_to_json(const SnapshotDocument& doc) {
  json snaps = json::array();
  for (const KTiling& KT : doc.snapshots)
    snaps.push_back(
        {{"rank", doc.config.rank}, {"layers", layers_to_json(KT)}});
  json j = {{"schema", kSchema},
            {"metadata", aztec_metadata(doc.config)},
            {"snapshots", snaps}};
  return dump(j);
}

std::string snapshots_to_json(const HexSnapshotDocument& doc) {
  json snaps = json::array();
  for (const KLozengeTiling& KL : doc.snapshots) {
    json layers = json::array();
    for (const HexPathFamily& f : KL) layers.push_back(strands_to_json(f));
    snaps.push_back({{"hexagon", region_to_json(doc.config.region)},
                     {"layers", layers}});
  }
  json j = {{"schema", kSchema},
            {"metadata", hex_metadata(doc.config)},
            {"snapshots", snaps}};
  return dump(j);
}

SnapshotDocument aztec_snapshots_from_json(const std::string& text) {
  return aztec_snapshots_from(parse_document(text));
}

HexSnapshotDocument hex_snapshots_from_json(const std::string& text) {
  return hex_snapshots_from(parse_document(text));
}

std::string curves_to_json(const CurveFamily& family, int samples) {
  json branches = json::array();
  for (const CurveBranch& b : family.branches) {
    json points = json::array();
    for (auto [x, y] : branch_polyline(b, samples)) points.push_back({x, y});
    branches.push_back({{"name", b.name}, {"points", points}});
  }
  json j = {{"schema", kSchema}, {"curve", family.name}, {"branches", branches}};
  return dump(j);
}

Artifact artifact_from_json(const std::string& text) {
  json j = parse_document(text);
  if (j.contains("snapshots")) {
    if (!j.contains("metadata") || !j["metadata"].is_object() ||
        !j["metadata"].contains("model"))
      bad("snapshot document without metadata.model");
    std::string model = get_string(j["metadata"]["model"], "model");
    if (model == "aztec") return aztec_snapshots_from(j);
    if (model == "hexagon") return hex_snapshots_from(j);
    bad("unknown model \"" + model + "\"");
  }
  if (j.contains("counts")) return statistics_from(j);
  if (j.contains("paths")) return paths_from(j);
  if (j.contains("layers") && j.contains("hexagon")) return hex_ktiling_from(j);
  if (j.contains("layers")) return ktiling_from(j);
  bad("unrecognized document kind");
}

}  // namespace tilekit
