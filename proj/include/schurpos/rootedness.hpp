#pragma once

#include "schurpos/polynomial.hpp"
#include "schurpos/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schurpos {

// Sturm chain of the squarefree part of a polynomial: q, q', then negated
// Euclidean remainders down to a nonzero constant. Sign-variation
// differences count distinct real roots over half-open intervals (a, b].
struct SturmChain {
  Polynomial squarefree_input;
  std::vector<Polynomial> chain;

  static SturmChain build(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm chain of zero polynomial");
    SturmChain s;
    const Polynomial g = gcd(p, p.derivative());
    s.squarefree_input = g.degree() > 0 ? divmod(p, g).first.monic() : p.monic();
    s.chain.push_back(s.squarefree_input);
    if (s.squarefree_input.degree() > 0) {
      s.chain.push_back(s.squarefree_input.derivative());
      while (s.chain.back().degree() > 0) {
        Polynomial r = -remainder(s.chain[s.chain.size() - 2], s.chain.back());
        if (r.is_zero()) break;  // cannot happen for squarefree input
        // scaling by a positive constant preserves every sign variation
        s.chain.push_back(r * (Rational(1) / abs(r.leading())));
      }
    }
    return s;
  }

  int variations_at(const Rational& x) const {
    int prev = 0, count = 0;
    for (const auto& q : chain) {
      const int s = q(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  // nullopt stands for -infinity / +infinity; the sign there comes from the
  // leading coefficient and the degree parity.
  int variations_at(const std::optional<Rational>& x, bool positive_side) const {
    if (x.has_value()) return variations_at(*x);
    int prev = 0, count = 0;
    for (const auto& q : chain) {
      int s = q.leading().sign();
      if (!positive_side && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }
};

// Number of distinct real roots of p in (lower, upper]; nullopt bounds are
// -infinity / +infinity.
inline int count_real_roots(const Polynomial& p, const std::optional<Rational>& lower,
                            const std::optional<Rational>& upper) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (lower.has_value() && upper.has_value() && *lower > *upper) {
    throw std::invalid_argument("root count over empty interval");
  }
  if (p.degree() == 0) return 0;
  const SturmChain s = SturmChain::build(p);
  return s.variations_at(lower, /*positive_side=*/false) -
         s.variations_at(upper, /*positive_side=*/true);
}

inline int count_real_roots(const Polynomial& p) {
  return count_real_roots(p, std::nullopt, std::nullopt);
}

namespace detail {

// deg(p) = sum over squarefree factors of multiplicity * (roots in range)
// holds exactly when every zero of p, counted with multiplicity, is real and
// within the range.
inline bool all_roots_real_within(const Polynomial& p, const std::optional<Rational>& upper) {
  if (p.is_zero()) throw std::invalid_argument("root test of zero polynomial");
  if (p.degree() == 0) return true;
  int counted = 0;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    counted += multiplicity * count_real_roots(factor, std::nullopt, upper);
  }
  return counted == p.degree();
}

}  // namespace detail

inline bool all_roots_real(const Polynomial& p) {
  return detail::all_roots_real_within(p, std::nullopt);
}

inline bool all_roots_real_nonpositive(const Polynomial& p) {
  return detail::all_roots_real_within(p, Rational(0));
}

// Jensen polynomial of the multiplier sequence gamma_k = 1/(t)_k:
// J_n(x) = sum_k C(n,k) x^k / (t)_k.
inline Polynomial jensen_poly(const Rational& t, int n) {
  if (t.sign() <= 0) throw std::invalid_argument("jensen_poly requires t > 0");
  if (n < 0) throw std::invalid_argument("jensen_poly requires n >= 0");
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  Rational rising = 1;  // (t)_k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) rising *= t + (k - 1);
    coeffs[static_cast<size_t>(k)] = Rational(binomial(n, k)) / rising;
  }
  return Polynomial(std::move(coeffs));
}

// Generalized Laguerre polynomial L_n^alpha by the three-term recurrence
// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1},
// L_0 = 1, L_1 = 1 + alpha - x.
inline Polynomial laguerre_poly(const Rational& alpha, int n) {
  if (n < 0) throw std::invalid_argument("laguerre_poly requires n >= 0");
  Polynomial prev{Rational(1)};
  if (n == 0) return prev;
  Polynomial cur{alpha + 1, Rational(-1)};
  for (int m = 1; m < n; ++m) {
    Polynomial next =
        (Polynomial{alpha + (2 * m + 1), Rational(-1)} * cur - prev * (alpha + m)) *
        Rational(1, m + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// J_n(x) = (n!/(t)_n) L_n^{t-1}(-x), coefficient by coefficient. The two
// sides come from genuinely different computations (binomial sum vs
// recurrence), so exact equality is a meaningful check.
inline bool check_jensen_laguerre_identity(const Rational& t, int n) {
  if (t.sign() <= 0) throw std::invalid_argument("jensen-laguerre check requires t > 0");
  const Polynomial lhs = jensen_poly(t, n);
  const Polynomial rhs =
      laguerre_poly(t - 1, n).reflected() * (Rational(factorial(n)) / rising_factorial(t, n));
  return lhs == rhs;
}

// Coefficientwise identity 1/((t)_m m!) = Gamma(t) / (m! Gamma(m+t)) for all
// m < count, with the Gamma ratio accumulated independently through
// Gamma(s+1) = s Gamma(s).
inline bool check_bessel_series_identity(const Rational& t, int count) {
  if (t.sign() <= 0) throw std::invalid_argument("bessel series check requires t > 0");
  if (count < 1) throw std::invalid_argument("bessel series check requires count >= 1");
  Rational gamma_ratio = 1;  // Gamma(t+m) / Gamma(t)
  for (int m = 0; m < count; ++m) {
    if (m > 0) gamma_ratio *= t + (m - 1);
    const Rational lhs = Rational(1) / (rising_factorial(t, m) * factorial(m));
    const Rational rhs = Rational(1) / (Rational(factorial(m)) * gamma_ratio);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace schurpos
