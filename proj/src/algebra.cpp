#include "tilekit/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tilekit {

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return 0;
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational acc = 1;
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

std::string var_name(VarId v) {
  switch (v.family) {
    case VarFamily::X: return "x" + std::to_string(v.index);
    case VarFamily::Y: return "y" + std::to_string(v.index);
    case VarFamily::Q: return "q";
    case VarFamily::T: return "t";
  }
  throw std::logic_error("var_name: bad family");
}

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp != 0) m.exps_.push_back({v, exp});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = exps_.begin(), ae = exps_.end();
  auto b = o.exps_.begin(), be = o.exps_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.exps_.push_back({a->first, e});
      ++a, ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(int n) const {
  Monomial out;
  if (n == 0) return out;
  for (auto& [v, e] : exps_) out.exps_.push_back({v, e * n});
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (auto& [w, e] : exps_)
    if (!(w == v)) out.exps_.push_back({w, e});
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: compare exponent vectors variable by variable. The
  // monomial with the larger exponent on the earliest differing variable
  // sorts higher.
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    VarId va = ia != ea ? ia->first : VarId{VarFamily::T, 1 << 20};
    VarId vb = ib != eb ? ib->first : VarId{VarFamily::T, 1 << 20};
    if (va < vb) {
      // a has a factor on an earlier variable that b lacks
      if (ia->second != 0) return ia->second < 0;
      ++ia;
    } else if (vb < va) {
      if (ib->second != 0) return ib->second > 0;
      ++ib;
    } else {
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia, ++ib;
    }
  }
  return false;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[Monomial()] = c;
}

Poly Poly::var(VarId v, int exp) { return term(Monomial::var(v, exp), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second == 1;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::pow(int n) const {
  if (n < 0) {
    if (terms_.size() != 1)
      throw std::domain_error("Poly::pow: negative power of a non-monomial");
    auto& [m, c] = *terms_.begin();
    return term(m.pow(n), rational_pow(c, n));
  }
  Poly acc(1), base = *this;
  while (n) {
    if (n & 1) acc *= base;
    if (n >>= 1) base *= base;
  }
  return acc;
}

Rational Poly::evaluate(const std::map<VarId, Rational>& assignment) const {
  Rational total = 0;
  for (auto& [m, c] : terms_) {
    Rational prod = c;
    for (auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("Poly::evaluate: no value for " + var_name(v));
      prod *= rational_pow(it->second, e);
    }
    total += prod;
  }
  return total;
}

Poly Poly::substitute(VarId v, const Rational& value) const {
  Poly out;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(v);
    out.add_term(m.without(v), c * rational_pow(value, e));
  }
  return out;
}

Poly Poly::substitute_family(VarFamily fam, const Rational& value) const {
  Poly out;
  for (auto& [m, c] : terms_) {
    Monomial kept;
    Rational scale = c;
    for (auto& [v, e] : m.factors()) {
      if (v.family == fam)
        scale *= rational_pow(value, e);
      else
        kept = kept * Monomial::var(v, e);
    }
    out.add_term(kept, scale);
  }
  return out;
}

Poly Poly::coefficient_of(VarId v, int k) const {
  Poly out;
  for (auto& [m, c] : terms_)
    if (m.exponent(v) == k) out.add_term(m.without(v), c);
  return out;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Poly::min_degree_in(VarId v) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::min(d, m.exponent(v));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> out;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // map iterates ascending; we print descending
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit_coeff = (a == 1) && !m.is_unit();
    if (!unit_coeff) os << a.get_str();
    bool need_star = !unit_coeff;
    for (auto& [v, e] : m.factors()) {
      if (need_star) os << "*";
      os << var_name(v);
      if (e != 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

Rational pochhammer(const Rational& x, const Rational& t, int n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  Rational acc = 1, tm = 1;
  for (int m = 0; m < n; ++m) {
    acc *= (1 - x * tm);
    tm *= t;
  }
  return acc;
}

Poly lagrange_interpolate(VarId v, const std::vector<std::pair<Rational, Poly>>& samples) {
  if (samples.empty()) throw std::invalid_argument("lagrange_interpolate: no samples");
  Poly result;
  size_t n = samples.size();
  for (size_t i = 0; i < n; ++i) {
    // Basis polynomial for node i, built as a product of linear factors.
    Poly basis(1);
    Rational denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis *= Poly::var(v) - Poly(samples[j].first);
      denom *= samples[i].first - samples[j].first;
    }
    if (denom == 0)
      throw std::invalid_argument("lagrange_interpolate: repeated node");
    result += basis * samples[i].second * Poly(Rational(1) / denom);
  }
  return result;
}

}  // namespace tilekit
