#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tilekit/algebra.hpp"
#include "tilekit/aztec.hpp"
#include "tilekit/partitions.hpp"

namespace tilekit {

// Two equivalent ways to read a tiling as a sequence of partition tuples.
// Both slice the region along the diagonals b - a = const; they differ in
// which domino types count as particles and where the origin sits.
enum class ModelKind { PurpleGray, WhitePink };

std::string model_name(ModelKind model);

// Slice ell (0..2m) holds the cells with b - a = ell - m. Slices with even
// ell have m cells, odd ones m+1; all cells of a slice share one shading
// (gray on even slices, white on odd).
std::vector<std::pair<int, int>> slice_cells(int m, int ell);

// Maya window of a slice. Cells are ordered by b (equivalently by a); the
// particle position is b for PurpleGray and a for WhitePink, so the origin
// offset differs between the models while the width does not.
struct SliceWindow {
  int width = 0;
  int zero_position = 0;
  int min_coord = 0;  // smallest b (PurpleGray) or a (WhitePink) on the slice
};
SliceWindow slice_window(int m, int ell, ModelKind model);

// Exponent record of one tiling: x_i counts the vertical gray-bottom
// dominos whose top square lies on slice 2i-1 and y_i the vertical
// gray-top dominos whose bottom square lies there (PurpleGray); the
// WhitePink reading uses horizontal dominos, x_i from gray-right lefts
// and y_i from gray-left rights on slice 2i-1.
struct TilingWeight {
  std::vector<int> x_exponents;
  std::vector<int> y_exponents;
  long t_exponent = 0;
};

TilingWeight xy_weight(const Tiling& T, ModelKind model);
Poly weight_monomial(const TilingWeight& w);

// 2m+1 partition tuples, one per slice, empty at both ends. Component c
// describes layer c of the k-tiling.
struct PartitionSequence {
  int rank = 0;
  ModelKind model = ModelKind::PurpleGray;
  std::vector<PartitionTuple> steps;
};

PartitionSequence tiling_to_sequence(const Tiling& T, ModelKind model);
PartitionSequence ktiling_to_sequence(const KTiling& KT, ModelKind model);

// Inverse reading: unique tiling whose slice diagrams match the sequence.
// Throws if the sequence violates a window bound or the interlacing chain.
KTiling sequence_to_ktiling(const PartitionSequence& seq);
Tiling sequence_to_tiling(const PartitionSequence& seq);  // single color

// Chain test: PurpleGray needs emptyset co-interlace lam^1 interlace
// lam^2 co-interlace ... down to emptyset; WhitePink swaps the two
// relations. Also checks window fit and empty endpoints.
bool sequence_chain_valid(const PartitionSequence& seq);

// Sorted packed squares driving the pair interaction count. Meaning:
//   PurpleGray   f[0] bottoms of IV   f[1] rights of I   f[2] tops of II
//   WhitePink    f[0] lefts of I      f[1] bottoms of II f[2] rights of III
// (gray squares in the first model, white in the second).
struct InteractionFeatures {
  ModelKind model = ModelKind::PurpleGray;
  std::array<std::vector<int>, 3> f;
};

InteractionFeatures interaction_features(const Tiling& T, ModelKind model);

// Interactions between an ordered color pair (a before b): the four
// coincidence patterns, counted per shared square.
long interaction_count(const InteractionFeatures& a, const InteractionFeatures& b);

// Total over all ordered pairs of layers. k = 0 is rejected.
long interactions(const KTiling& KT, ModelKind model);

// t^interactions times the product of the layers' x/y monomials.
Poly weight(const KTiling& KT, ModelKind model);

// Sum of weight over all k-tuples of tilings of rank m.
Poly generating_polynomial(int m, int k, ModelKind model, int cap = 5);

// Same sum with every x_i = y_i = 1, i.e. the t-marginal; cheap enough
// for ranks where the full symbolic sum is not.
Poly t_marginal_polynomial(int m, int k, ModelKind model, int cap = 5);

// The closed product form the sums must equal.
Poly product_formula(int m, int k);

using HistogramKey = std::tuple<long, std::vector<int>, std::vector<int>>;

// Distribution of (interactions, total x exponents, total y exponents)
// over all k-tuples; the two models give identical maps.
std::map<HistogramKey, long> cross_model_histogram(int m, int k, ModelKind model,
                                                   int cap = 5);

}  // namespace tilekit
