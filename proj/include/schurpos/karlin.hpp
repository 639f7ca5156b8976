#pragma once

#include "schurpos/extent.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/rational.hpp"
#include "schurpos/toeplitz.hpp"

#include <stdexcept>
#include <vector>

namespace schurpos {

// Parameters of the strict-positivity criterion. Only the sign of theta
// matters, so it is carried as a boolean; K and L are ignored when theta is
// positive.
struct KarlinParams {
  bool theta_positive;
  Extent K;
  Extent L;

  static KarlinParams from(const EdreiParams& p) {
    return KarlinParams{p.theta.sign() > 0, p.K, p.L};
  }
};

// Decides strict positivity of the minor T(I,J) of a totally positive
// sequence with the given parameters:
//   (i)   theta > 0:        positive iff i_k <= j_k for all k;
//   (ii)  theta = 0, K > 0: positive iff j_{k-K} - L < i_k <= j_k for all k;
//   (iii) theta = 0, K = 0: positive iff j_k - L <= i_k <= j_k for all k.
// A left constraint referring to j_{k-K} with k <= K is vacuous, as is any
// left constraint with L infinite.
inline bool predict_positive(const KarlinParams& params, const IndexList& rows,
                             const IndexList& cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("predict_positive with index lists of different lengths");
  }
  const size_t r = rows.size();
  for (size_t k = 0; k < r; ++k) {
    if (rows[k] > cols[k]) return false;
  }
  if (params.theta_positive || params.L.is_infinite()) return true;

  const long l_count = params.L.value();
  if (params.K.is_zero()) {
    // case (iii): j_k - L <= i_k
    for (size_t k = 0; k < r; ++k) {
      if (cols[k] > rows[k] + l_count) return false;
    }
    return true;
  }
  // case (ii): j_{k-K} - L < i_k, vacuous while k <= K
  if (params.K.is_infinite()) return true;
  const size_t k_count = static_cast<size_t>(params.K.value());
  for (size_t k = k_count; k < r; ++k) {
    if (cols[k - k_count] >= rows[k] + l_count) return false;
  }
  return true;
}

// Validation corpus: sequences whose generating-function parameters are
// known by construction, so the predicate can be checked against exact
// determinant signs.
inline std::vector<ToeplitzSequence> oracle_sequences() {
  std::vector<ToeplitzSequence> out;

  out.emplace_back(
      "exp(x)", [](int n) { return Rational(1) / factorial(n); },
      EdreiParams{Rational(1), Extent(0), Extent(0)});

  for (int m = 1; m <= 3; ++m) {
    out.emplace_back(
        "(1+x)^" + std::to_string(m), [m](int n) { return Rational(binomial(m, n)); },
        EdreiParams{Rational(0), Extent(0), Extent(m)});
  }

  for (const Rational& delta : {Rational(1, 2), Rational(1)}) {
    out.emplace_back(
        "1/(1-" + rational_str(delta) + "x)",
        [delta](int n) { return rational_pow(delta, n); },
        EdreiParams{Rational(0), Extent(1), Extent(0)});
  }

  // (1+x)/(1-x/2): a_0 = 1, a_n = 3/2^n for n >= 1
  out.emplace_back(
      "(1+x)/(1-1/2x)",
      [](int n) { return n == 0 ? Rational(1) : Rational(3) / rational_pow(Rational(2), n); },
      EdreiParams{Rational(0), Extent(1), Extent(1)});

  for (const Rational& t : {Rational(1, 2), Rational(1), Rational(2)}) {
    out.push_back(phi_sequence(SpecializationContext(t)));
  }
  return out;
}

}  // namespace schurpos
