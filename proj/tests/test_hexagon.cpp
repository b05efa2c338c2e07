#include "tilekit/hexagon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace tilekit {
namespace {

Poly tpoly(const std::vector<long>& coeffs) {
  Poly p;
  for (size_t d = 0; d < coeffs.size(); ++d)
    p += Poly(Rational(coeffs[d])) * Poly::var(var_t()).pow(static_cast<int>(d));
  return p;
}

long step_weight(const HexPathFamily& f) {
  long w = 0;
  for (const auto& strand : f.steps)
    for (int r : strand) w += r - 1;
  return w;
}

long tuple_weight(const KLozengeTiling& tiling) {
  long w = 0;
  for (const auto& f : tiling) w += step_weight(f);
  return w;
}

// All color k-tuples over the tilings of one hexagon, color 0 varying
// fastest, matching the order hex_exact_sample walks.
std::vector<KLozengeTiling> all_tuples(int a, int b, int c, int k) {
  const auto singles = enumerate_lozenge(a, b, c);
  const long n = static_cast<long>(singles.size());
  long m = 1;
  for (int i = 0; i < k; ++i) m *= n;
  std::vector<KLozengeTiling> out;
  out.reserve(m);
  for (long idx = 0; idx < m; ++idx) {
    KLozengeTiling tup(k);
    long rem = idx;
    for (int al = 0; al < k; ++al) {
      tup[al] = singles[rem % n];
      rem /= n;
    }
    out.push_back(std::move(tup));
  }
  return out;
}

Poly enumeration_polynomial(int a, int b, int c, int k) {
  Poly z;
  for (const auto& tup : all_tuples(a, b, c, k))
    z += Poly::term(
        Monomial::var(var_q(), static_cast<int>(tuple_weight(tup))) *
            Monomial::var(var_t(),
                          static_cast<int>(lozenge_interactions(tup))),
        1);
  return z;
}

// prod_{i<=a} prod_{j<=b} (1 - q^(shift+i+j-1)) as a polynomial in q.
Poly box_product(int a, int b, int shift) {
  Poly p(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      p *= Poly(1) - Poly::var(var_q()).pow(shift + i + j - 1);
  return p;
}

int choose2(int n) { return n * (n - 1) / 2; }

TEST(HexagonCounts, ProductFormula) {
  EXPECT_EQ(macmahon(1, 1, 1), 2);
  EXPECT_EQ(macmahon(2, 2, 2), 20);
  EXPECT_EQ(macmahon(3, 2, 3), 175);
  EXPECT_EQ(macmahon(2, 2, 3), 50);
  EXPECT_EQ(macmahon(3, 4, 3), 4116);
  EXPECT_EQ(macmahon(4, 1, 1), 5);
  EXPECT_EQ(macmahon(5, 5, 0), 1);
  EXPECT_EQ(macmahon(0, 7, 9), 1);
  // symmetric in the three sides
  EXPECT_EQ(macmahon(1, 2, 3), macmahon(3, 1, 2));
  EXPECT_EQ(macmahon(1, 2, 3), macmahon(2, 3, 1));
  EXPECT_THROW(macmahon(-1, 2, 2), std::invalid_argument);
}

TEST(HexagonCounts, EnumerationMatchesProductFormula) {
  const int shapes[][3] = {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {1, 1, 2},
                           {2, 2, 1}, {2, 1, 2}, {1, 2, 2}, {2, 2, 2},
                           {3, 1, 2}, {1, 2, 3}, {3, 2, 1}, {2, 2, 3}};
  for (const auto& s : shapes) {
    const auto all = enumerate_lozenge(s[0], s[1], s[2]);
    EXPECT_EQ(mpz_class(all.size()), macmahon(s[0], s[1], s[2]));
    std::set<RightStepMatrix> seen;
    for (const auto& f : all) {
      EXPECT_NO_THROW(validate(f));
      EXPECT_EQ(f.region, (HexRegion{s[0], s[1], s[2]}));
      seen.insert(f.steps);
    }
    EXPECT_EQ(seen.size(), all.size());
  }
}

TEST(HexagonCounts, DegenerateHexagons) {
  auto flat = enumerate_lozenge(2, 3, 0);
  ASSERT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0].steps, (RightStepMatrix{{2, 2, 2}, {1, 1, 1}}));
  auto empty = enumerate_lozenge(0, 3, 2);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].steps.empty());
  EXPECT_EQ(lozenges(flat[0]).size(), 6u);
}

TEST(HexagonCounts, CapIsRespected) {
  EXPECT_THROW(enumerate_lozenge(3, 3, 3, 100), std::length_error);
  EXPECT_NO_THROW(enumerate_lozenge(3, 3, 3, 980));
}

TEST(HexagonValidation, RejectsMalformedFamilies) {
  HexPathFamily f{{2, 2, 1}, {{3, 3}, {1, 2}}};
  EXPECT_NO_THROW(validate(f));
  f.steps = {{3, 3}};
  EXPECT_THROW(validate(f), std::invalid_argument);  // strand count
  f.steps = {{3, 3, 3}, {1, 2}};
  EXPECT_THROW(validate(f), std::invalid_argument);  // step count
  f.steps = {{3, 4}, {1, 2}};
  EXPECT_THROW(validate(f), std::invalid_argument);  // row out of range
  f.steps = {{3, 2}, {1, 1}};
  EXPECT_THROW(validate(f), std::invalid_argument);  // decreasing rows
  f.steps = {{2, 3}, {2, 2}};
  EXPECT_THROW(validate(f), std::invalid_argument);  // strands collide
  KLozengeTiling none;
  EXPECT_THROW(validate(none), std::invalid_argument);
  KLozengeTiling mixed{HexPathFamily{{1, 1, 1}, {{1}}},
                       HexPathFamily{{1, 1, 2}, {{1}}}};
  EXPECT_THROW(validate(mixed), std::invalid_argument);
}

// Interaction counts of every ordered state pair of the 1 x 2 x 1
// hexagon, worked out by hand on the two rows: states (1,1), (1,2) and
// (2,2) in enumeration order.
TEST(HexagonInteractions, PinnedPairMatrix) {
  const auto singles = enumerate_lozenge(1, 2, 1);
  ASSERT_EQ(singles.size(), 3u);
  EXPECT_EQ(singles[0].steps, (RightStepMatrix{{1, 1}}));
  EXPECT_EQ(singles[1].steps, (RightStepMatrix{{1, 2}}));
  EXPECT_EQ(singles[2].steps, (RightStepMatrix{{2, 2}}));
  const long expected[3][3] = {{2, 2, 1}, {1, 2, 2}, {0, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(lozenge_pair_interactions(singles[i], singles[j]),
                expected[i][j])
          << i << "," << j;
}

TEST(HexagonInteractions, SingleColorHasNone) {
  for (const auto& f : enumerate_lozenge(2, 2, 2))
    EXPECT_EQ(lozenge_interactions({f}), 0);
}

TEST(HexagonInteractions, BoundIsSharp) {
  // 2 x 2 x 1 with two colors: c < a, so the lower end of the range
  // lifts off zero while the upper end C(2,2)*ab = 4 is attained.
  long lo = 1000, hi = -1;
  for (const auto& tup : all_tuples(2, 2, 1, 2)) {
    const long n = lozenge_interactions(tup);
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  EXPECT_EQ(lo, 2);
  EXPECT_EQ(hi, 4);
  EXPECT_THROW(
      lozenge_pair_interactions(enumerate_lozenge(1, 1, 1)[0],
                                enumerate_lozenge(1, 1, 2)[0]),
      std::invalid_argument);
}

struct PolynomialRow {
  int a, b, c;
  std::vector<long> coeffs;  // ascending powers of t
};

TEST(HexagonPolynomials, TwoColorPolynomialsOnAllSmallShapes) {
  const std::vector<PolynomialRow> rows = {
      {1, 1, 1, {1, 3}},
      {1, 1, 2, {3, 6}},
      {1, 1, 3, {6, 10}},
      {1, 2, 1, {1, 3, 5}},
      {1, 2, 2, {6, 15, 15}},
      {1, 2, 3, {20, 45, 35}},
      {2, 1, 1, {0, 3, 6}},
      {2, 1, 2, {1, 15, 20}},
      {2, 1, 3, {5, 45, 50}},
      {2, 2, 1, {0, 0, 6, 15, 15}},
      {2, 2, 2, {1, 15, 104, 175, 105}},
      {2, 2, 3, {15, 175, 770, 1050, 490}},
      {3, 1, 1, {0, 0, 6, 10}},
      {3, 1, 2, {0, 5, 45, 50}},
      {3, 1, 3, {1, 35, 189, 175}},
      {3, 2, 1, {0, 0, 0, 0, 20, 45, 35}},
      {3, 2, 2, {0, 0, 15, 175, 770, 1050, 490}},
      {3, 2, 3, {1, 35, 594, 3850, 10689, 11340, 4116}},
  };
  for (const auto& row : rows) {
    const Poly z = hex_generating_polynomial(row.a, row.b, row.c, 2);
    EXPECT_EQ(z.substitute(var_q(), 1), tpoly(row.coeffs))
        << row.a << "," << row.b << "," << row.c;
    // coefficient sum is the square of the tiling count
    Rational sum = z.evaluate({{var_q(), 1}, {var_t(), 1}});
    EXPECT_EQ(sum, Rational(macmahon(row.a, row.b, row.c) *
                            macmahon(row.a, row.b, row.c)));
  }
}

TEST(HexagonPolynomials, RefinedGoldenAndEnumerationRoute) {
  const Poly q = Poly::var(var_q()), t = Poly::var(var_t());
  EXPECT_EQ(hex_generating_polynomial(1, 1, 1, 2), q * q * t + q * t + q + t);
  EXPECT_EQ(hex_generating_polynomial(2, 1, 1, 1),
            q + q.pow(2) + q.pow(3));
  for (const auto& s :
       std::vector<std::array<int, 4>>{{1, 2, 1, 2}, {2, 1, 2, 2},
                                       {2, 2, 1, 2}, {1, 1, 1, 3},
                                       {1, 1, 2, 3}}) {
    EXPECT_EQ(hex_generating_polynomial(s[0], s[1], s[2], s[3]),
              enumeration_polynomial(s[0], s[1], s[2], s[3]))
        << s[0] << "," << s[1] << "," << s[2] << " k=" << s[3];
  }
}

TEST(HexagonPolynomials, NumericTransferAndInterpolation) {
  const Rational q(2), t(3, 2);
  const Poly z = hex_generating_polynomial(2, 2, 2, 2);
  EXPECT_EQ(hex_transfer_value(2, 2, 2, 2, q, t),
            z.evaluate({{var_q(), q}, {var_t(), t}}));
  EXPECT_EQ(hex_polynomial_in_t(2, 2, 2, 2, Rational(1)),
            z.substitute(var_q(), 1));
  EXPECT_EQ(hex_polynomial_in_t(2, 2, 2, 2, q), z.substitute(var_q(), q));
  EXPECT_THROW(hex_generating_polynomial(3, 3, 3, 3, 100), std::length_error);
}

// z(q, t=1) equals (q^(b*C(a,2)) * M(a,b,c))^k where M is the boxed
// q-count; checked cross-multiplied to stay inside polynomials.
TEST(HexagonPolynomials, UnitTSpecialization) {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) {
        const int k = 2;
        const Poly z1 = hex_generating_polynomial(a, b, c, k)
                            .substitute(var_t(), 1);
        const Poly lhs = z1 * box_product(a, b, 0).pow(k);
        const Poly rhs = Poly::var(var_q()).pow(k * b * choose2(a)) *
                         box_product(a, b, c).pow(k);
        EXPECT_EQ(lhs, rhs) << a << "," << b << "," << c;
      }
}

// The extreme t-coefficients carry the q-counts of the two companion
// hexagons: ka x b x (c-(k-1)a) at the bottom, a x kb x c at the top.
TEST(HexagonPolynomials, ExtremeCoefficientSeries) {
  const int shapes[][4] = {{1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2},
                           {2, 1, 3, 2}, {2, 2, 2, 2}, {1, 1, 2, 3}};
  for (const auto& s : shapes) {
    const int a = s[0], b = s[1], c = s[2], k = s[3];
    const Poly z = hex_generating_polynomial(a, b, c, k);
    const Poly bottom = z.coefficient_of(var_t(), 0);
    const int ka = k * a, cc = c - (k - 1) * a;
    ASSERT_GE(cc, 0);
    EXPECT_EQ(bottom * box_product(ka, b, 0),
              Poly::var(var_q()).pow(b * choose2(ka)) *
                  box_product(ka, b, cc))
        << a << "," << b << "," << c << " k=" << k;
    const Poly top = z.coefficient_of(var_t(), choose2(k) * a * b);
    EXPECT_EQ(top * box_product(a, k * b, 0),
              Poly::var(var_q()).pow(k * b * choose2(a)) *
                  box_product(a, k * b, c))
        << a << "," << b << "," << c << " k=" << k;
  }
}

TEST(HexagonFlip, SquareShapeIsInvariant) {
  const auto tuples = all_tuples(1, 1, 1, 2);
  std::multiset<long> before, after;
  for (const auto& tup : tuples) {
    const auto image = hex_flip_symmetry(tup);
    EXPECT_EQ(image.front().region, (HexRegion{1, 1, 1}));
    EXPECT_EQ(hex_flip_symmetry(image), tup);
    before.insert(lozenge_interactions(tup));
    after.insert(lozenge_interactions(image));
  }
  EXPECT_EQ(before, after);  // ab = bc, so the shift vanishes
}

TEST(HexagonFlip, ShiftsInteractionsBetweenMirrorShapes) {
  // a x b x c -> c x b x a adds C(k,2) * b * (c - a) interactions
  const int shapes[][4] = {{1, 1, 2, 2}, {1, 2, 2, 2}, {2, 1, 1, 2},
                           {1, 1, 3, 2}, {1, 1, 2, 3}};
  for (const auto& s : shapes) {
    const int a = s[0], b = s[1], c = s[2], k = s[3];
    const long shift = choose2(k) * b * (c - a);
    std::set<std::vector<RightStepMatrix>> images;
    for (const auto& tup : all_tuples(a, b, c, k)) {
      const auto image = hex_flip_symmetry(tup);
      EXPECT_EQ(image.front().region, (HexRegion{c, b, a}));
      EXPECT_EQ(lozenge_interactions(image),
                lozenge_interactions(tup) + shift);
      EXPECT_EQ(hex_flip_symmetry(image), tup);
      std::vector<RightStepMatrix> key;
      for (const auto& f : image) key.push_back(f.steps);
      images.insert(key);
    }
    // bijective onto the mirror shape's tuples
    size_t mirror_count = all_tuples(c, b, a, k).size();
    EXPECT_EQ(images.size(), mirror_count);
  }
}

TEST(HexagonFlip, ReversesColors) {
  const auto singles = enumerate_lozenge(1, 2, 2);
  KLozengeTiling tup{singles[0], singles[3]};
  const auto image = hex_flip_symmetry(tup);
  EXPECT_EQ(image[0], hex_flip_symmetry({singles[3]})[0]);
  EXPECT_EQ(image[1], hex_flip_symmetry({singles[0]})[0]);
}

// The worked 2 x 3 x 3 example: two colors with zero interactions merge,
// strand by strand, into one tiling of the 4 x 3 x 1 hexagon.
TEST(HexagonBijections, EarlyClassWorkedExample) {
  HexPathFamily blue{{2, 3, 3}, {{4, 5, 5}, {2, 2, 3}}};
  HexPathFamily red{{2, 3, 3}, {{3, 4, 4}, {1, 1, 1}}};
  KLozengeTiling tup{blue, red};
  EXPECT_EQ(lozenge_interactions(tup), 0);
  const HexPathFamily merged = hex_t0_bijection(tup);
  EXPECT_EQ(merged.region, (HexRegion{4, 3, 1}));
  EXPECT_EQ(merged.steps,
            (RightStepMatrix{{4, 5, 5}, {3, 4, 4}, {2, 2, 3}, {1, 1, 1}}));
  EXPECT_EQ(hex_t0_inverse(merged, 2), tup);
}

TEST(HexagonBijections, EarlyClassIsExhaustive) {
  const int shapes[][4] = {{1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2},
                           {2, 1, 3, 2}, {1, 1, 2, 3}};
  for (const auto& s : shapes) {
    const int a = s[0], b = s[1], c = s[2], k = s[3];
    const int ka = k * a, cc = c - (k - 1) * a;
    std::set<RightStepMatrix> images;
    long class_size = 0;
    for (const auto& tup : all_tuples(a, b, c, k)) {
      if (lozenge_interactions(tup) != 0) {
        EXPECT_THROW(hex_t0_bijection(tup), std::invalid_argument);
        continue;
      }
      ++class_size;
      const HexPathFamily merged = hex_t0_bijection(tup);
      EXPECT_EQ(merged.region, (HexRegion{ka, b, cc}));
      EXPECT_EQ(step_weight(merged), tuple_weight(tup));
      EXPECT_EQ(hex_t0_inverse(merged, k), tup);
      images.insert(merged.steps);
    }
    EXPECT_EQ(mpz_class(class_size), macmahon(ka, b, cc))
        << a << "," << b << "," << c << " k=" << k;
    EXPECT_EQ(mpz_class(images.size()), macmahon(ka, b, cc));
  }
}

TEST(HexagonBijections, EarlyClassCanBeEmpty) {
  for (const auto& tup : all_tuples(2, 1, 1, 2))
    EXPECT_GT(lozenge_interactions(tup), 0);
  EXPECT_THROW(hex_t0_inverse(enumerate_lozenge(3, 1, 1)[0], 2),
               std::invalid_argument);  // 3 not divisible by 2
}

TEST(HexagonBijections, LateClassIsExhaustive) {
  const int shapes[][4] = {{1, 1, 1, 2}, {1, 2, 1, 2}, {2, 1, 1, 2},
                           {1, 1, 2, 2}, {1, 1, 1, 3}};
  for (const auto& s : shapes) {
    const int a = s[0], b = s[1], c = s[2], k = s[3];
    const long want = static_cast<long>(choose2(k)) * a * b;
    std::set<RightStepMatrix> images;
    long class_size = 0;
    for (const auto& tup : all_tuples(a, b, c, k)) {
      if (lozenge_interactions(tup) != want) {
        EXPECT_THROW(hex_tinf_bijection(tup), std::invalid_argument);
        continue;
      }
      ++class_size;
      const HexPathFamily woven = hex_tinf_bijection(tup);
      EXPECT_EQ(woven.region, (HexRegion{a, k * b, c}));
      EXPECT_EQ(step_weight(woven), tuple_weight(tup));
      EXPECT_EQ(hex_tinf_inverse(woven, k), tup);
      images.insert(woven.steps);
    }
    EXPECT_EQ(mpz_class(class_size), macmahon(a, k * b, c))
        << a << "," << b << "," << c << " k=" << k;
    EXPECT_EQ(mpz_class(images.size()), macmahon(a, k * b, c));
  }
  EXPECT_THROW(hex_tinf_inverse(enumerate_lozenge(1, 3, 1)[0], 2),
               std::invalid_argument);  // 3 not divisible by 2
}

TEST(HexagonPlanePartitions, RoundTripAndWeight) {
  const int a = 2, b = 2, c = 2;
  for (const auto& f : enumerate_lozenge(a, b, c)) {
    const auto pp = plane_partition(f);
    ASSERT_EQ(pp.size(), static_cast<size_t>(a));
    long volume = 0;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        EXPECT_GE(pp[i][j], 0);
        EXPECT_LE(pp[i][j], c);
        if (i > 0) EXPECT_LE(pp[i][j], pp[i - 1][j]);
        if (j > 0) EXPECT_LE(pp[i][j], pp[i][j - 1]);
        volume += pp[i][j];
      }
    EXPECT_EQ(step_weight(f),
              static_cast<long>(a) * b * c + static_cast<long>(b) * choose2(a) -
                  volume);
    EXPECT_EQ(from_plane_partition(f.region, pp), f);
  }
  // the minimal-weight tiling stacks the box full
  const auto full = plane_partition(hex_base_tiling({2, 3, 4}));
  for (const auto& row : full)
    for (int h : row) EXPECT_EQ(h, 4);
  EXPECT_THROW(from_plane_partition({2, 2, 2}, {{1, 1}}),
               std::invalid_argument);
  EXPECT_THROW(from_plane_partition({2, 2, 2}, {{1, 2}, {1, 1}}),
               std::invalid_argument);
}

TEST(HexagonLozenges, TypeCountsAndExactCover) {
  const int shapes[][3] = {{2, 2, 2}, {1, 2, 3}, {3, 2, 1}, {2, 1, 2}};
  for (const auto& s : shapes) {
    const int a = s[0], b = s[1], c = s[2];
    for (const auto& f : enumerate_lozenge(a, b, c)) {
      const auto tiles = lozenges(f);
      long counts[4] = {0, 0, 0, 0};
      // each lozenge is a left-leaning plus a right-leaning triangle;
      // together they partition the hexagon
      std::set<std::array<int, 3>> triangles;
      for (const auto& l : tiles) {
        ++counts[l.type];
        const int x = l.col, r = l.row;
        std::array<int, 3> left{0, x + 1, r - 1}, right{1, x + 1, r - 1};
        if (l.type == 1) right = {1, x + 1, r};
        if (l.type == 3) right = {1, x + 2, r - 1};
        EXPECT_TRUE(triangles.insert(left).second);
        EXPECT_TRUE(triangles.insert(right).second);
      }
      EXPECT_EQ(counts[1], static_cast<long>(a) * c);
      EXPECT_EQ(counts[2], static_cast<long>(b) * c);
      EXPECT_EQ(counts[3], static_cast<long>(a) * b);
      EXPECT_EQ(triangles.size(),
                2u * (a * b + b * c + c * a));
      const int total = a + b + c;
      for (const auto& tri : triangles) {
        // corner fan of the triangle, depending on its lean
        const int j = tri[1], i = tri[2];
        std::vector<std::pair<int, int>> pts;
        if (tri[0] == 0)
          pts = {{j, i}, {j, i + 1}, {j - 1, i + 1}};
        else
          pts = {{j, i}, {j - 1, i + 1}, {j - 1, i}};
        for (auto [x, y] : pts) {
          EXPECT_GE(x, 0);
          EXPECT_LE(x, a + b);
          EXPECT_GE(y, 0);
          EXPECT_LE(y, a + c);
          EXPECT_GE(x + y, a);
          EXPECT_LE(x + y, total);
        }
      }
    }
  }
}

TEST(HexagonLozenges, CornerLoops) {
  EXPECT_EQ(lozenge_corners({1, 1, 0}),
            (std::array<std::pair<int, int>, 4>{
                {{1, 0}, {1, 1}, {0, 2}, {0, 1}}}));
  EXPECT_EQ(lozenge_corners({2, 1, 0}),
            (std::array<std::pair<int, int>, 4>{
                {{0, 0}, {1, 0}, {1, 1}, {0, 1}}}));
  EXPECT_EQ(lozenge_corners({3, 1, 0}),
            (std::array<std::pair<int, int>, 4>{
                {{0, 1}, {1, 0}, {2, 0}, {1, 1}}}));
  EXPECT_THROW(lozenge_corners({0, 1, 0}), std::invalid_argument);
}

TEST(HexagonProjection, CollapsesTheDiagonal) {
  auto [dx, dy] = hex_project(1, 1, 1);
  EXPECT_NEAR(dx, 0.0, 1e-12);
  EXPECT_NEAR(dy, 0.0, 1e-12);
  const auto e1 = hex_project(1, 0, 0), e2 = hex_project(0, 1, 0),
             e3 = hex_project(0, 0, 1);
  for (const auto& e : {e1, e2, e3})
    EXPECT_NEAR(e.first * e.first + e.second * e.second, 1.0, 1e-12);
  EXPECT_NEAR(e1.first * e2.first + e1.second * e2.second, -0.5, 1e-12);
  EXPECT_NEAR(e2.first * e3.first + e2.second * e3.second, -0.5, 1e-12);
}

// Exact chain law: the proposal is uniform over (color, strand, step,
// direction) and a valid move passes min(1, t^delta), so t^interactions
// is stationary.
TEST(HexagonSampler, ExactStationarity) {
  for (const Rational& t : {Rational(1, 2), Rational(3)}) {
    const auto states = all_tuples(1, 1, 1, 2);
    const int n = static_cast<int>(states.size());
    ASSERT_EQ(n, 4);
    std::vector<Rational> pi(n);
    std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n, 0));
    const Rational u(1, 2 * 1 * 1 * 2);
    for (int i = 0; i < n; ++i) {
      pi[i] = rational_pow(t, lozenge_interactions(states[i]));
      for (int color = 0; color < 2; ++color)
        for (int dir : {1, -1}) {
          if (!hex_move_valid(states[i], color, 0, 0, dir)) {
            P[i][i] += u;
            continue;
          }
          KLozengeTiling target = states[i];
          target[color].steps[0][0] += dir;
          const int j =
              static_cast<int>(std::find(states.begin(), states.end(),
                                         target) -
                               states.begin());
          ASSERT_LT(j, n);
          const Rational p =
              flip_acceptance(t, hex_move_delta(states[i], color, 0, 0, dir));
          P[i][j] += u * p;
          P[i][i] += u * (1 - p);
        }
    }
    for (int i = 0; i < n; ++i) {
      Rational row = 0;
      for (int j = 0; j < n; ++j) row += P[i][j];
      EXPECT_EQ(row, 1);
    }
    for (int j = 0; j < n; ++j) {
      Rational in = 0;
      for (int i = 0; i < n; ++i) in += pi[i] * P[i][j];
      EXPECT_EQ(in, pi[j]);
    }
  }
}

TEST(HexagonSampler, SingleColorWalkIsDoublyStochastic) {
  const auto singles = enumerate_lozenge(2, 2, 2);
  const int n = static_cast<int>(singles.size());
  ASSERT_EQ(n, 20);
  std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n, 0));
  const Rational u(1, 1 * 2 * 2 * 2);
  for (int i = 0; i < n; ++i) {
    KLozengeTiling state{singles[i]};
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < 2; ++j)
        for (int dir : {1, -1}) {
          if (!hex_move_valid(state, 0, s, j, dir)) {
            P[i][i] += u;
            continue;
          }
          HexPathFamily target = singles[i];
          target.steps[s][j] += dir;
          const int to = static_cast<int>(
              std::find(singles.begin(), singles.end(), target) -
              singles.begin());
          ASSERT_LT(to, n);
          P[i][to] += u;  // single color always accepts
        }
  }
  for (int j = 0; j < n; ++j) {
    Rational in = 0, out = 0;
    for (int i = 0; i < n; ++i) {
      in += P[i][j];
      out += P[j][i];
    }
    EXPECT_EQ(in, 1);
    EXPECT_EQ(out, 1);
  }
}

TEST(HexagonSampler, RunMatchesStepwiseChain) {
  HexSamplerConfig cfg;
  cfg.region = {1, 2, 2};
  cfg.colors = 2;
  cfg.t = Rational(1, 2);
  cfg.steps = 300;
  cfg.burn_in = 100;
  cfg.thinning = 7;
  cfg.seed = 42;
  std::vector<KLozengeTiling> snapshots;
  const KLozengeTiling last = hex_run(cfg, &snapshots);
  KLozengeTiling state(cfg.colors, hex_base_tiling(cfg.region));
  SplitMix64 rng(cfg.seed);
  std::vector<KLozengeTiling> mirror;
  for (long long i = 0; i < cfg.steps; ++i) {
    state = hex_mcmc_step(state, cfg.t, rng);
    if (i >= cfg.burn_in && (i - cfg.burn_in) % cfg.thinning == 0)
      mirror.push_back(state);
  }
  EXPECT_EQ(state, last);
  EXPECT_EQ(mirror, snapshots);
  EXPECT_EQ(snapshots.size(), 29u);
}

TEST(HexagonSampler, EmpiricalFrequenciesMatchTheExactLaw) {
  HexSamplerConfig cfg;
  cfg.region = {1, 1, 1};
  cfg.colors = 2;
  cfg.t = 3;
  cfg.steps = 210000;
  cfg.burn_in = 10000;
  cfg.thinning = 10;
  cfg.seed = 7;
  std::vector<KLozengeTiling> snapshots;
  hex_run(cfg, &snapshots);
  ASSERT_EQ(snapshots.size(), 20000u);
  std::map<std::pair<int, int>, long> hits;
  for (const auto& s : snapshots)
    ++hits[{s[0].steps[0][0], s[1].steps[0][0]}];
  // pi proportional to t^N: states (1,1), (1,2), (2,2) carry one
  // interaction, (2,1) none; Z = 3t + 1 = 10
  const std::map<std::pair<int, int>, double> law = {
      {{1, 1}, 0.3}, {{1, 2}, 0.3}, {{2, 1}, 0.1}, {{2, 2}, 0.3}};
  for (const auto& [state, p] : law) {
    const double freq =
        static_cast<double>(hits[state]) / snapshots.size();
    EXPECT_NEAR(freq, p, 0.02) << state.first << "," << state.second;
  }
}

TEST(HexagonSampler, ZeroTemperatureStaysInTheEarlyClass) {
  HexSamplerConfig cfg;
  cfg.region = {1, 1, 2};
  cfg.colors = 2;
  cfg.t = 0;
  cfg.steps = 2000;
  cfg.burn_in = 0;
  cfg.seed = 11;
  std::vector<KLozengeTiling> snapshots;
  hex_run(cfg, &snapshots);
  std::set<std::pair<int, int>> visited;
  for (const auto& s : snapshots) {
    EXPECT_EQ(lozenge_interactions(s), 0);
    visited.insert({s[0].steps[0][0], s[1].steps[0][0]});
  }
  // the full early class: color 0 strictly after color 1
  EXPECT_EQ(visited,
            (std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}));
  HexSamplerConfig empty = cfg;
  empty.region = {2, 1, 1};
  EXPECT_THROW(hex_run(empty), std::invalid_argument);
}

TEST(HexagonSampler, ConfigValidation) {
  HexSamplerConfig cfg;
  cfg.region = {1, 1, 1};
  cfg.steps = 10;
  EXPECT_NO_THROW(validate(cfg));
  HexSamplerConfig bad = cfg;
  bad.region.b = 0;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.colors = 0;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.t = -1;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.burn_in = 10;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.thinning = 0;
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(HexagonSampler, StepFollowsTheDocumentedDrawOrder) {
  KLozengeTiling state(2, hex_base_tiling({1, 2, 1}));
  SplitMix64 rng(99), twin(99);
  const Rational t(1, 3);
  for (int i = 0; i < 50; ++i) {
    KLozengeTiling mirror = state;
    const int color = static_cast<int>(twin.below(2));
    const int strand = static_cast<int>(twin.below(1));
    const int j = static_cast<int>(twin.below(2));
    const int dir = twin.below(2) ? 1 : -1;
    if (hex_move_valid(mirror, color, strand, j, dir)) {
      const uint64_t u = twin.next();
      const Rational p =
          flip_acceptance(t, hex_move_delta(mirror, color, strand, j, dir));
      if (p == 1 || mpz_class(u) * p.get_den() < mpz_class(p.get_num()) << 64)
        mirror[color].steps[strand][j] += dir;
    }
    state = hex_mcmc_step(state, t, rng);
    ASSERT_EQ(state, mirror) << "step " << i;
  }
}

TEST(HexagonSampler, ExactSampler) {
  const auto a = hex_exact_sample(1, 1, 1, 2, Rational(3), 5);
  const auto b = hex_exact_sample(1, 1, 1, 2, Rational(3), 5);
  EXPECT_EQ(a, b);
  EXPECT_NO_THROW(validate(a));
  // at t = 0 only the single zero-interaction pair carries weight
  const auto zero = hex_exact_sample(1, 1, 1, 2, Rational(0), 123);
  EXPECT_EQ(zero[0].steps, (RightStepMatrix{{2}}));
  EXPECT_EQ(zero[1].steps, (RightStepMatrix{{1}}));
  EXPECT_THROW(hex_exact_sample(2, 1, 1, 2, Rational(0), 1),
               std::invalid_argument);
  EXPECT_THROW(hex_exact_sample(3, 3, 3, 2, Rational(1), 1, 100),
               std::length_error);
  // draws follow the exact law: with t = 1 on 1 x 1 x 1 all four pairs
  // are equally likely
  std::map<std::pair<int, int>, long> hits;
  for (uint64_t seed = 0; seed < 400; ++seed) {
    const auto s = hex_exact_sample(1, 1, 1, 2, Rational(1), seed);
    ++hits[{s[0].steps[0][0], s[1].steps[0][0]}];
  }
  for (const auto& [state, count] : hits) {
    EXPECT_GT(count, 60) << state.first << "," << state.second;
    EXPECT_LT(count, 140) << state.first << "," << state.second;
  }
}

}  // namespace
}  // namespace tilekit
