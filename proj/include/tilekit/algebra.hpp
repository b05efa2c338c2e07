#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tilekit {

using Rational = mpq_class;

// b^e for integer e of either sign; 0^negative throws.
Rational rational_pow(const Rational& base, long e);

enum class VarFamily : uint8_t { X = 0, Y = 1, Q = 2, T = 3 };

// A variable is a family tag plus an index: x1, x2, ..., y1, ..., q, t.
// Ordering x < y < q < t (then by index) is the canonical print order.
struct VarId {
  VarFamily family = VarFamily::X;
  int index = 0;  // 1-based for x,y; 0 for q,t
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId var_x(int i) { return {VarFamily::X, i}; }
inline VarId var_y(int i) { return {VarFamily::Y, i}; }
inline VarId var_q() { return {VarFamily::Q, 0}; }
inline VarId var_t() { return {VarFamily::T, 0}; }

std::string var_name(VarId v);

// Laurent monomial: sorted (VarId, exponent) pairs, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int exp = 1);

  int degree() const;  // sum of exponents (may be negative)
  int exponent(VarId v) const;
  bool is_unit() const { return exps_.empty(); }
  const std::vector<std::pair<VarId, int>>& factors() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int n) const;
  // Drops v entirely; used when substituting a value for v.
  Monomial without(VarId v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, int>> exps_;
};

// Graded lexicographic: lower total degree first, ties broken by the
// exponent of the earliest variable (larger exponent = larger monomial).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse Laurent polynomial with exact rational coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c);
  static Poly var(VarId v, int exp = 1);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Nonnegative power always works; negative power requires a monomial.
  Poly pow(int n) const;

  // Every variable present must be assigned; zero assigned to a variable
  // with a negative exponent throws.
  Rational evaluate(const std::map<VarId, Rational>& assignment) const;
  Poly substitute(VarId v, const Rational& value) const;
  Poly substitute_family(VarFamily fam, const Rational& value) const;

  // Coefficient of v^k as a polynomial in the remaining variables.
  Poly coefficient_of(VarId v, int k) const;
  int degree_in(VarId v) const;      // 0 for the zero polynomial
  int min_degree_in(VarId v) const;
  std::vector<VarId> variables() const;

  // Canonical text form: terms from highest to lowest in the graded-lex
  // order, e.g. "8*t^3 + 24*t^2 + 24*t + 8".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

// (x;t)_n = prod_{m=0}^{n-1} (1 - x t^m)
Rational pochhammer(const Rational& x, const Rational& t, int n);

// Interpolate the unique polynomial of degree < samples.size() in `v`
// through the given (node, value) pairs; values may involve other
// variables but not `v`, and nodes must be distinct.
Poly lagrange_interpolate(VarId v, const std::vector<std::pair<Rational, Poly>>& samples);

}  // namespace tilekit
