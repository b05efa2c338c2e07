#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tilekit/algebra.hpp"

namespace tilekit {

// Exact a + b*sqrt(3), the coefficient field of the hexagon curves.
struct Root3 {
  Rational a = 0;
  Rational b = 0;

  friend Root3 operator+(const Root3& u, const Root3& v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend Root3 operator-(const Root3& u, const Root3& v) {
    return {u.a - v.a, u.b - v.b};
  }
  friend Root3 operator-(const Root3& u) { return {-u.a, -u.b}; }
  friend Root3 operator*(const Root3& u, const Root3& v) {
    return {u.a * v.a + 3 * u.b * v.b, u.a * v.b + u.b * v.a};
  }
  friend bool operator==(const Root3&, const Root3&) = default;

  bool is_zero() const { return a == 0 && b == 0; }
  Root3 inverse() const;
  double value() const;
};

// cx*X + cy*Y + c0
struct LinearForm {
  Root3 cx, cy, c0;

  Root3 at(const Root3& x, const Root3& y) const {
    return cx * x + cy * y + c0;
  }
  double at(double x, double y) const {
    return cx.value() * x + cy.value() * y + c0.value();
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// xx*X^2 + xy*XY + yy*Y^2 + x*X + y*Y + c
struct QuadraticForm {
  Root3 xx, xy, yy, x, y, c;

  static QuadraticForm from_squares(const LinearForm& u, const LinearForm& v,
                                    const Root3& radius2);
  Root3 at(const Root3& px, const Root3& py) const;
  double at(double px, double py) const;
  QuadraticForm normalized() const;  // unit leading coefficient
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// One arc: the points of axis1^2 + axis2^2 = radius2 whose coordinates
// satisfy every domain form >= 0.
struct CurveBranch {
  std::string name;
  LinearForm axis1, axis2;
  Root3 radius2;
  QuadraticForm quad;  // axis1^2 + axis2^2 - radius2
  std::vector<LinearForm> domain;
};

CurveBranch make_branch(std::string name, LinearForm axis1, LinearForm axis2,
                        Root3 radius2, std::vector<LinearForm> domain);

// Closed arc chain inside an ambient convex region (all forms >= 0).
struct CurveFamily {
  std::string name;
  std::vector<CurveBranch> branches;
  std::vector<LinearForm> ambient;
};

// Rescaled limiting coordinates: the diamond |x|+|y| <= 1 for the Aztec
// families, tangent-line hexagons for the lozenge ones.
CurveFamily aztec_t0_curves(int k);
CurveFamily aztec_tinf_curves(int k);  // the t=0 family reflected in y=x
CurveFamily hexagon_t0_curves();       // 2 colors, a x 2a x 3a hexagon
CurveFamily hexagon_tinf_curves();     // 2 colors, 2a x a x 2a hexagon

enum class Classification { Inside, Outside, Near };

// Sign of the governing branches at the point, with |Q| <= eps reported
// as Near. Points under no branch's domain lie in the liquid middle.
Classification classify(double px, double py, const CurveFamily& family,
                        double eps = 1e-9);

// Points along the branch's arc, ordered by the ellipse angle and
// restricted to the branch domain.
std::vector<std::pair<double, double>> branch_polyline(const CurveBranch& branch,
                                                       int samples = 256);

}  // namespace tilekit
