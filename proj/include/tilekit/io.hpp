#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tilekit/arctic.hpp"
#include "tilekit/aztec.hpp"
#include "tilekit/hexagon.hpp"
#include "tilekit/sampler.hpp"
#include "tilekit/schroder.hpp"

namespace tilekit {

// All documents carry "schema": "tilekit/1" at the top level. Parsers are
// strict: a missing schema, an unknown field, or an out-of-range value
// throws std::invalid_argument, as does syntactically broken JSON.

std::string rational_str(const Rational& r);
Rational rational_from_str(const std::string& s);

// {"schema", "rank", "layers": [[{"x", "y", "o": "h|v"}, ...], ...]}
std::string ktiling_to_json(const KTiling& KT);
KTiling ktiling_from_json(const std::string& text);

// {"schema", "rank", "paths": [["E", "NE", "SE", ...], ...]}
std::string paths_to_json(const SchroderPathFamily& F);
SchroderPathFamily paths_from_json(const std::string& text);

// {"schema", "rank", "colors", "samples", "cells": [[a, b], ...],
//  "counts": [[nI, nII, nIII, nIV], ...]} with counts indexed
// color * cells.size() + cell.
std::string statistics_to_json(const CellStatistics& stats);
CellStatistics statistics_from_json(const std::string& text);

// {"schema", "hexagon": {"a", "b", "c"}, "layers": [strand rows, ...]}
// where each layer is the right-step matrix of one color.
std::string hex_ktiling_to_json(const KLozengeTiling& KL);
KLozengeTiling hex_ktiling_from_json(const std::string& text);

// Chain output: the run configuration plus every recorded state.
struct SnapshotDocument {
  SamplerConfig config;
  std::vector<KTiling> snapshots;
};

struct HexSnapshotDocument {
  HexSamplerConfig config;
  std::vector<KLozengeTiling> snapshots;
};

// {"schema", "metadata": {"model", geometry, "colors", "t", "steps",
//  "burn_in", "thinning", "seed", "rng"}, "snapshots": [...]} where each
// snapshot reuses the tiling schema's layer shape.
std::string snapshots_to_json(const SnapshotDocument& doc);
std::string snapshots_to_json(const HexSnapshotDocument& doc);
SnapshotDocument aztec_snapshots_from_json(const std::string& text);
HexSnapshotDocument hex_snapshots_from_json(const std::string& text);

// {"schema", "curve", "branches": [{"name", "points": [[x, y], ...]}, ...]}
// One polyline per branch, for consumers that do not link the library.
std::string curves_to_json(const CurveFamily& family, int samples = 256);

using Artifact = std::variant<KTiling, SchroderPathFamily, CellStatistics,
                              KLozengeTiling, SnapshotDocument,
                              HexSnapshotDocument>;

// Detects the document kind from its fields and parses it strictly.
Artifact artifact_from_json(const std::string& text);

}  // namespace tilekit
