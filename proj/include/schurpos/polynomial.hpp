#pragma once

#include "schurpos/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurpos {

// Dense univariate polynomial with exact rational coefficients.
// coefficient k is the coefficient of x^k; the zero polynomial stores an
// empty list, so the leading coefficient of a nonzero polynomial is never 0.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Rational c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
  }

  static Polynomial monomial(int k, Rational c = Rational(1)) {
    if (k < 0) throw std::invalid_argument("monomial with negative exponent");
    Polynomial p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
      p.coeffs_.back() = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
  }

  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    if (s == 0) return Polynomial();
    Polynomial p = a;
    for (auto& c : p.coeffs_) c *= s;
    return p;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<int>(i);
    return Polynomial(std::move(out));
  }

  Polynomial monic() const {
    if (is_zero()) return Polynomial();
    return *this * (Rational(1) / leading());
  }

  // p(-x): negate odd coefficients.
  Polynomial reflected() const {
    Polynomial p = *this;
    for (size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
    return p;
  }

  // Coefficient list, constant term first: "[1,2,1/2]".
  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += rational_str(coeffs_[i]);
    }
    s += ']';
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<Rational> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
};

// Euclidean division: p = q * quotient + remainder with deg(remainder) < deg(q).
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Polynomial remainder = p;
  std::vector<Rational> quotient;
  if (remainder.degree() >= q.degree()) {
    quotient.assign(static_cast<size_t>(remainder.degree() - q.degree()) + 1, Rational(0));
  }
  const Rational lead_inv = Rational(1) / q.leading();
  while (!remainder.is_zero() && remainder.degree() >= q.degree()) {
    const int shift = remainder.degree() - q.degree();
    const Rational c = remainder.leading() * lead_inv;
    quotient[static_cast<size_t>(shift)] = c;
    remainder = remainder - Polynomial::monomial(shift, c) * q;
  }
  return {Polynomial(std::move(quotient)), std::move(remainder)};
}

inline Polynomial remainder(const Polynomial& p, const Polynomial& q) { return divmod(p, q).second; }

// Monic gcd; gcd(p, 0) is the monic form of p, gcd(0, 0) is 0.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p, b = q;
  while (!b.is_zero()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r).monic();  // normalizing keeps coefficients small
  }
  return a.monic();
}

// Yun squarefree decomposition: p = lc * prod f_i^i with the f_i monic,
// squarefree and pairwise coprime. Only nonconstant factors are returned.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Polynomial, int>> factors;
  if (p.degree() == 0) return factors;

  const Polynomial f = p.monic();
  const Polynomial g = gcd(f, f.derivative());
  if (g.degree() == 0) {
    factors.emplace_back(f, 1);
    return factors;
  }
  Polynomial w = divmod(f, g).first;
  Polynomial y = divmod(f.derivative(), g).first;
  Polynomial z = y - w.derivative();
  int multiplicity = 1;
  while (w.degree() > 0) {
    Polynomial a = gcd(w, z);
    if (a.degree() > 0) factors.emplace_back(a, multiplicity);
    w = divmod(w, a).first;
    y = divmod(z, a).first;
    z = y - w.derivative();
    ++multiplicity;
  }
  return factors;
}

}  // namespace schurpos
