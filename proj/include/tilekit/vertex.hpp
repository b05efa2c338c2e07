#pragma once

#include <cstdint>
#include <vector>

#include "tilekit/algebra.hpp"
#include "tilekit/encodings.hpp"
#include "tilekit/partitions.hpp"

namespace tilekit {

// Set of colors on one edge, bit i-1 for color i (1-based, k <= 32).
using ColorVector = uint32_t;

inline int color_count(ColorVector v) { return __builtin_popcount(v); }
inline bool has_color(ColorVector v, int i) { return (v >> (i - 1)) & 1u; }

// One face of the colored path model. Edges are read counterclockwise
// from the bottom: I enters from below, J from the left, K leaves through
// the top, L through the right. For the cross family the same four slots
// mean bottom-left, top-left, top-right, bottom-right.
struct FaceConfig {
  ColorVector I = 0, J = 0, K = 0, L = 0;
  friend bool operator==(const FaceConfig&, const FaceConfig&) = default;
};

// The five local weight families. L and M alternate in the purple-gray
// lattice, LPrime and MPrime in the white-pink one; RPrime is the cross
// used only inside the exchange relation.
enum class VertexFamily : uint8_t { L, LPrime, M, MPrime, RPrime };

const char* family_name(VertexFamily f);

// Color conservation plus the family's support rule: L, M and RPrime
// forbid a color entering both in-edges at once, LPrime and MPrime
// require every color leaving through the top to do so whenever it
// entered from the left.
bool face_valid(VertexFamily f, int k, const FaceConfig& face);

// Exact face weight from the closed formulas. The cross and the barred
// families invert parameters, so those require nonzero x (and t for M
// with k >= 2, y for the cross); a zero that would be inverted throws
// std::domain_error. k < 1 or out-of-range colors throw
// std::invalid_argument.
Rational weight_algebraic(VertexFamily f, int k, const Rational& x,
                          const Rational& y, const Rational& t,
                          const FaceConfig& face);

// The same weight built the pictorial way: one single-color factor per
// color, with the parameter shifted by counting higher colors around the
// face. Agreement with weight_algebraic is a test target, not a given.
Rational weight_graphical(VertexFamily f, int k, const Rational& x,
                          const Rational& y, const Rational& t,
                          const FaceConfig& face);

// Box-family weights are single monomials var^a t^b with a, b >= 0.
// zero = true marks an invalid face. RPrime is not a box family and
// throws.
struct BoxMonomial {
  bool zero = true;
  int var_exponent = 0;
  long t_exponent = 0;
};

BoxMonomial box_weight(VertexFamily f, int k, const FaceConfig& face);

// Cross weight with cleared denominator: given the strand ratio
// r = x/y as a Laurent monomial, returns RPrime(face) * prod_{m<k}
// (1 + r t^m), which is a Laurent polynomial. Zero for invalid faces.
Poly rprime_cleared(int k, const FaceConfig& face, const Poly& ratio);

// Boundary of the exchange-relation hexagon. I1/J1 enter the left pair
// of rows, K1/K3 are the bottom and top verticals, I3/J3 leave on the
// right; the roles of the six labels match on both sides of the
// relation.
struct YbeBoundary {
  ColorVector I1 = 0, J1 = 0, K1 = 0, I3 = 0, J3 = 0, K3 = 0;
};

// Exchange relation for one boundary. The model picks the triple:
// PurpleGray couples an M row at x with an LPrime row at y, WhitePink an
// L row at x with an MPrime row at y; both put the cross at the displayed
// row variables. ybe_check evaluates both sides at one rational point,
// ybe_check_symbolic proves the identity in the function field by
// clearing the cross denominator.
bool ybe_check(ModelKind model, int k, const Rational& x, const Rational& y,
               const Rational& t, const YbeBoundary& b);
bool ybe_check_symbolic(ModelKind model, int k, const YbeBoundary& b);

// One row of boxes in a lattice.
struct LatticeRow {
  VertexFamily family = VertexFamily::L;
  VarId var;
  int length = 0;
};

// Rectangular grid of box rows with boundary colors and the origin
// markers of the horizontal lines. Lines and rows are indexed from the
// bottom; left/right hold one label per row, bottom/top one per column.
struct LatticeSpec {
  ModelKind model = ModelKind::PurpleGray;
  int rank = 0;
  int colors = 0;
  int width = 0;
  std::vector<LatticeRow> rows;
  std::vector<int> markers;
  std::vector<ColorVector> left, right;
  std::vector<ColorVector> bottom, top;
};

// Lattice whose configurations match the slice sequences of k-tilings of
// rank m. PurpleGray works for every m >= 1; the white-pink boundary
// needs 2m-1 columns in an essential way and throws for m = 1.
LatticeSpec aztec_lattice_spec(int m, int k, ModelKind model);

// Proportionality constants between the lattice sum and the tiling
// generating polynomial: Z = constant * sum of tiling weights.
Poly pg_lattice_constant(int m, int k);
Poly wp_lattice_constant(int m, int k);

// Horizontal line state: one bitmask of occupied columns per color.
using LatticeLine = std::vector<uint64_t>;

// Partition function by row transfer (states are horizontal lines, rows
// apply memoized operators). symbolic keeps the row variables; otherwise
// they are set to 1 and only t survives.
Poly lattice_partition_function(const LatticeSpec& spec, bool symbolic);

struct LatticeConfig {
  std::vector<LatticeLine> lines;  // rows+1 states, bottom to top
  Poly weight;
};

// Exhaustive listing; meant for small ranks where counting and matching
// individual configurations is the point.
std::vector<LatticeConfig> enumerate_lattice_configs(const LatticeSpec& spec);

// Reads each horizontal line as one partition per color via the line's
// origin marker.
std::vector<PartitionTuple> config_tuples(const LatticeSpec& spec,
                                          const LatticeConfig& config);

// Weight of the unique configuration whose horizontal lines show the
// given tuples. Throws if no configuration matches.
Poly sequence_config_weight(const LatticeSpec& spec,
                            const std::vector<PartitionTuple>& steps);

// One free-standing row of boxes: bottom and top tuples in their minimal
// windows, white or colored side labels as the family demands. Zero
// unless the tuples (co-)interlace the right way; at t = 1 the value is
// var^(size difference). RPrime throws.
Rational row_weight(VertexFamily family, const Rational& var, int k,
                    const PartitionTuple& bottom, const PartitionTuple& top,
                    const Rational& t);

}  // namespace tilekit
