#pragma once

#include "schurpos/determinant.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/rational.hpp"

#include <stdexcept>
#include <vector>

namespace schurpos {

// The specialization phi determined on the complete homogeneous generators
// by phi(h_n) = 1 / ((t)_n n!) for a fixed rational t > 0, together with the
// values it induces on skew Schur functions (Jacobi-Trudi determinant),
// elementary symmetric functions and power sums (Newton identities).
//
// Values phi(h_0..bound) are precomputed at construction; the object is
// immutable afterwards and safe to share across threads. Indices past the
// bound are computed directly from the closed form.
class SpecializationContext {
 public:
  explicit SpecializationContext(Rational t, int precompute_bound = 64) : t_(std::move(t)) {
    if (t_.sign() <= 0) {
      throw std::invalid_argument("specialization requires t > 0, got t = " + rational_str(t_));
    }
    if (precompute_bound < 0) precompute_bound = 0;
    h_.reserve(static_cast<size_t>(precompute_bound) + 1);
    h_.push_back(Rational(1));
    Rational denom = 1;  // (t)_n * n!
    for (int n = 1; n <= precompute_bound; ++n) {
      denom *= (t_ + (n - 1)) * n;
      h_.push_back(Rational(1) / denom);
    }
  }

  const Rational& t() const { return t_; }

  // phi(h_n); 0 for n < 0.
  Rational phi_h(int n) const {
    if (n < 0) return Rational(0);
    if (n < static_cast<int>(h_.size())) return h_[static_cast<size_t>(n)];
    return Rational(1) / (rising_factorial(t_, n) * factorial(n));
  }

  // phi(s_{outer/inner}) = det( phi(h_{outer_i - inner_j - i + j}) ).
  Rational phi_skew_schur(const SkewShape& shape) const {
    const int l = static_cast<int>(shape.outer().length());
    std::vector<std::vector<Rational>> m(static_cast<size_t>(l),
                                         std::vector<Rational>(static_cast<size_t>(l)));
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) {
        const int index = shape.outer().part(static_cast<size_t>(i - 1)) -
                          shape.inner().part(static_cast<size_t>(j - 1)) - i + j;
        m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = phi_h(index);
      }
    }
    return determinant(std::move(m));
  }

  Rational phi_schur(const Partition& shape) const {
    return phi_skew_schur(SkewShape(shape, Partition()));
  }

  // phi(e_n) through e_n = sum_{k=1}^{n} (-1)^{k-1} h_k e_{n-k}; 0 for n < 0.
  // This path is independent of the h-determinant, so the dual Jacobi-Trudi
  // comparison is a genuine cross-check.
  Rational phi_e(int n) const {
    if (n < 0) return Rational(0);
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
      Rational acc = 0;
      for (int k = 1; k <= m; ++k) {
        const Rational term = phi_h(k) * e[static_cast<size_t>(m - k)];
        acc += (k % 2 == 1) ? term : -term;
      }
      e[static_cast<size_t>(m)] = acc;
    }
    return e[static_cast<size_t>(n)];
  }

  // phi(p_n) through Newton's identity n h_n = sum_{k=1}^{n} h_{n-k} p_k.
  Rational phi_p(int n) const {
    if (n < 1) throw std::invalid_argument("phi_p requires n >= 1");
    std::vector<Rational> p(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
      Rational acc = phi_h(m) * m;
      for (int k = 1; k < m; ++k) acc -= phi_h(m - k) * p[static_cast<size_t>(k)];
      p[static_cast<size_t>(m)] = acc;
    }
    return p[static_cast<size_t>(n)];
  }

 private:
  Rational t_;
  std::vector<Rational> h_;
};

}  // namespace schurpos
