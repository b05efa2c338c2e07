#include "tilekit/arctic.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace tilekit {

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Root3 rat(long num, long den = 1) { return {frac(num, den), 0}; }

Root3 surd(long num, long den = 1) { return {0, frac(num, den)}; }

Root3 twice(const Root3& u) { return u + u; }

}  // namespace

Root3 Root3::inverse() const {
  Rational den = a * a - 3 * b * b;
  if (den == 0) throw std::invalid_argument("Root3 division by zero");
  return {a / den, -b / den};
}

double Root3::value() const {
  return a.get_d() + b.get_d() * std::numbers::sqrt3;
}

QuadraticForm QuadraticForm::from_squares(const LinearForm& u,
                                          const LinearForm& v,
                                          const Root3& radius2) {
  QuadraticForm q;
  for (const LinearForm* L : {&u, &v}) {
    q.xx = q.xx + L->cx * L->cx;
    q.xy = q.xy + twice(L->cx * L->cy);
    q.yy = q.yy + L->cy * L->cy;
    q.x = q.x + twice(L->cx * L->c0);
    q.y = q.y + twice(L->cy * L->c0);
    q.c = q.c + L->c0 * L->c0;
  }
  q.c = q.c - radius2;
  return q;
}

Root3 QuadraticForm::at(const Root3& px, const Root3& py) const {
  return xx * px * px + xy * px * py + yy * py * py + x * px + y * py + c;
}

double QuadraticForm::at(double px, double py) const {
  return xx.value() * px * px + xy.value() * px * py + yy.value() * py * py +
         x.value() * px + y.value() * py + c.value();
}

QuadraticForm QuadraticForm::normalized() const {
  for (const Root3* lead : {&xx, &xy, &yy, &x, &y, &c}) {
    if (lead->is_zero()) continue;
    Root3 inv = lead->inverse();
    return {xx * inv, xy * inv, yy * inv, x * inv, y * inv, c * inv};
  }
  return *this;
}

CurveBranch make_branch(std::string name, LinearForm axis1, LinearForm axis2,
                        Root3 radius2, std::vector<LinearForm> domain) {
  CurveBranch b;
  b.name = std::move(name);
  b.quad = QuadraticForm::from_squares(axis1, axis2, radius2);
  b.axis1 = std::move(axis1);
  b.axis2 = std::move(axis2);
  b.radius2 = radius2;
  b.domain = std::move(domain);
  return b;
}

namespace {

const LinearForm kAxisX{rat(1), rat(0), rat(0)};
const LinearForm kAxisY{rat(0), rat(1), rat(0)};

std::vector<LinearForm> diamond_ambient() {
  return {{rat(-1), rat(-1), rat(1)},
          {rat(-1), rat(1), rat(1)},
          {rat(1), rat(-1), rat(1)},
          {rat(1), rat(1), rat(1)}};
}

LinearForm swap_xy(const LinearForm& f) { return {f.cy, f.cx, f.c0}; }

CurveBranch swap_xy(const CurveBranch& b, std::string name) {
  std::vector<LinearForm> domain;
  domain.reserve(b.domain.size());
  for (const LinearForm& f : b.domain) domain.push_back(swap_xy(f));
  return make_branch(std::move(name), swap_xy(b.axis1), swap_xy(b.axis2),
                     b.radius2, std::move(domain));
}

}  // namespace

CurveFamily aztec_t0_curves(int k) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  CurveFamily fam;
  fam.name = "aztec-t0";
  fam.ambient = diamond_ambient();
  Root3 half = rat(1, 2);

  fam.branches.push_back(make_branch(
      "north", kAxisX, kAxisY, half,
      {{rat(1), rat(0), rat(1, 2)},
       {rat(-1), rat(0), rat(1, 2)},
       {rat(0), rat(1), rat(-1, 2)}}));

  fam.branches.push_back(make_branch(
      "south", {rat(1), rat(k - 1), rat(0)}, {rat(0), rat(k), rat(0)}, half,
      {{rat(1), rat(0), rat(1, 2 * k)},
       {rat(-1), rat(0), rat(2 * k - 1, 2 * k)},
       {rat(0), rat(-1), rat(-1, 2 * k)}}));

  fam.branches.push_back(make_branch(
      "east",
      {rat(k + 1, 2), rat(k - 1, 2), rat(1 - k, 2)},
      {rat(k - 1, 2), rat(k + 1, 2), rat(1 - k, 2)}, half,
      {{rat(0), rat(1), rat(1, 2 * k)},
       {rat(0), rat(-1), rat(1, 2)},
       {rat(k + 1), rat(k - 1), rat(-k)}}));

  fam.branches.push_back(make_branch(
      "west",
      {rat(k + 1, 2 * k), rat(k - 1, 2 * k), rat(1 - k, 2 * k)},
      {rat(1 - k, 2 * k), rat(3 * k - 1, 2 * k), rat(1 - k, 2 * k)}, half,
      {{rat(0), rat(1), rat(1, 2 * k)},
       {rat(0), rat(-1), rat(1, 2)},
       {rat(-(k + 1)), rat(1 - k), rat(-1)}}));

  return fam;
}

CurveFamily aztec_tinf_curves(int k) {
  CurveFamily t0 = aztec_t0_curves(k);
  CurveFamily fam;
  fam.name = "aztec-tinf";
  fam.ambient = diamond_ambient();
  fam.branches.push_back(swap_xy(t0.branches[0], "east"));
  fam.branches.push_back(swap_xy(t0.branches[1], "west"));
  fam.branches.push_back(swap_xy(t0.branches[2], "north"));
  fam.branches.push_back(swap_xy(t0.branches[3], "south"));
  return fam;
}

CurveFamily hexagon_t0_curves() {
  CurveFamily fam;
  fam.name = "hexagon-t0";
  fam.ambient = {{rat(0), rat(-1), surd(1)},
                 {rat(0), rat(1), surd(1)},
                 {rat(-1), rat(0), rat(1)},
                 {rat(1), rat(0), rat(2)},
                 {surd(1), rat(-1), surd(2)},
                 {surd(-1), rat(1), surd(1)}};
  Root3 three = rat(3);

  fam.branches.push_back(make_branch(
      "west", {rat(2), surd(-1, 3), rat(2)}, kAxisY, three,
      {{rat(-1), rat(0), rat(-3, 2)},
       {rat(0), rat(1), surd(1, 2)},
       {rat(0), rat(-1), surd(1, 2)}}));

  fam.branches.push_back(make_branch(
      "north-west", kAxisX, kAxisY, three,
      {{rat(-1), rat(0), rat(0)},
       {rat(0), rat(1), surd(-1, 2)},
       {rat(0), rat(-1), surd(1)}}));

  fam.branches.push_back(make_branch(
      "north-east", {rat(1), surd(-1, 3), rat(1)}, kAxisY, three,
      {{rat(1), rat(0), rat(0)},
       {rat(0), rat(1), surd(-1, 2)},
       {rat(0), rat(-1), surd(1)}}));

  fam.branches.push_back(make_branch(
      "east", {rat(2), surd(-1, 3), rat(0)}, kAxisY, three,
      {{rat(1), rat(0), rat(-1, 2)},
       {rat(0), rat(1), surd(1, 2)},
       {rat(0), rat(-1), surd(1, 2)}}));

  fam.branches.push_back(make_branch(
      "south-east", {rat(1), rat(0), rat(1)}, kAxisY, three,
      {{rat(1), rat(0), rat(1)},
       {rat(0), rat(-1), surd(-1, 2)},
       {rat(0), rat(1), surd(1)}}));

  fam.branches.push_back(make_branch(
      "south-west", {rat(1), surd(-1, 3), rat(0)}, kAxisY, three,
      {{rat(-1), rat(0), rat(-1)},
       {rat(0), rat(-1), surd(-1, 2)},
       {rat(0), rat(1), surd(1)}}));

  return fam;
}

CurveFamily hexagon_tinf_curves() {
  CurveFamily fam;
  fam.name = "hexagon-tinf";
  fam.ambient = {{rat(0), rat(-1), surd(1)},
                 {rat(0), rat(1), surd(1)},
                 {surd(1), rat(-1), surd(2)},
                 {surd(1), rat(1), surd(2)},
                 {surd(-1), rat(-1), surd(1)},
                 {surd(-1), rat(1), surd(1)}};
  Root3 three = rat(3);

  fam.branches.push_back(make_branch(
      "west", kAxisX, kAxisY, three,
      {{rat(-1), rat(0), rat(-3, 2)},
       {rat(0), rat(1), surd(1, 2)},
       {rat(0), rat(-1), surd(1, 2)}}));

  fam.branches.push_back(make_branch(
      "north-west", {rat(2), surd(-1, 3), rat(2)}, kAxisY, three,
      {{rat(-1), rat(0), rat(-1, 2)},
       {rat(0), rat(1), surd(-1, 2)},
       {rat(0), rat(-1), surd(1)}}));

  fam.branches.push_back(make_branch(
      "north-east", {rat(2), surd(1, 3), rat(0)}, kAxisY, three,
      {{rat(1), rat(0), rat(1, 2)},
       {rat(0), rat(1), surd(-1, 2)},
       {rat(0), rat(-1), surd(1)}}));

  fam.branches.push_back(make_branch(
      "east", {rat(1), rat(0), rat(1)}, kAxisY, three,
      {{rat(1), rat(0), rat(-1, 2)},
       {rat(0), rat(1), surd(1, 2)},
       {rat(0), rat(-1), surd(1, 2)}}));

  fam.branches.push_back(make_branch(
      "south-east", {rat(2), surd(-1, 3), rat(0)}, kAxisY, three,
      {{rat(1), rat(0), rat(1, 2)},
       {rat(0), rat(-1), surd(-1, 2)},
       {rat(0), rat(1), surd(1)}}));

  fam.branches.push_back(make_branch(
      "south-west", {rat(2), surd(1, 3), rat(2)}, kAxisY, three,
      {{rat(-1), rat(0), rat(-1, 2)},
       {rat(0), rat(-1), surd(-1, 2)},
       {rat(0), rat(1), surd(1)}}));

  return fam;
}

Classification classify(double px, double py, const CurveFamily& family,
                        double eps) {
  bool near = false;
  bool outside = false;
  for (const CurveBranch& b : family.branches) {
    bool governed = true;
    for (const LinearForm& f : b.domain) {
      if (f.at(px, py) < -eps) {
        governed = false;
        break;
      }
    }
    if (!governed) continue;
    double q = b.quad.at(px, py);
    if (std::abs(q) <= eps) {
      near = true;
    } else if (q > 0) {
      outside = true;
    }
  }
  if (near) return Classification::Near;
  if (outside) return Classification::Outside;
  return Classification::Inside;
}

std::vector<std::pair<double, double>> branch_polyline(const CurveBranch& branch,
                                                       int samples) {
  if (samples < 8) throw std::invalid_argument("too few samples");
  double a = branch.axis1.cx.value();
  double b = branch.axis1.cy.value();
  double e = branch.axis1.c0.value();
  double c = branch.axis2.cx.value();
  double d = branch.axis2.cy.value();
  double f = branch.axis2.c0.value();
  double det = a * d - b * c;
  if (std::abs(det) < 1e-12) throw std::logic_error("degenerate branch axes");
  double r = std::sqrt(branch.radius2.value());

  std::vector<int> kept;
  std::vector<std::pair<double, double>> points;
  for (int i = 0; i < samples; ++i) {
    double theta = 2.0 * std::numbers::pi * i / samples;
    double u = r * std::cos(theta) - e;
    double v = r * std::sin(theta) - f;
    double x = (d * u - b * v) / det;
    double y = (a * v - c * u) / det;
    bool ok = true;
    for (const LinearForm& form : branch.domain) {
      if (form.at(x, y) < -1e-9) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(i);
      points.emplace_back(x, y);
    }
  }
  if (points.size() < 2) return points;

  // Rotate so the arc starts just after the largest angular gap.
  size_t n = kept.size();
  size_t cut = 0;
  int widest = -1;
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    int gap = kept[j] - kept[i];
    if (j == 0) gap += samples;
    if (gap > widest) {
      widest = gap;
      cut = j;
    }
  }
  std::vector<std::pair<double, double>> arc;
  arc.reserve(n);
  for (size_t i = 0; i < n; ++i) arc.push_back(points[(cut + i) % n]);
  return arc;
}

}  // namespace tilekit
