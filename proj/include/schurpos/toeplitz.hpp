#pragma once

#include "schurpos/determinant.hpp"
#include "schurpos/extent.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/rational.hpp"
#include "schurpos/specialization.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurpos {

// Declared generating-function parameters of a totally positive sequence:
// f(x) = e^{theta x} prod(1 + rho_i x) / prod(1 - delta_i x), with K the
// number of positive delta_i and L the number of positive rho_i.
struct EdreiParams {
  Rational theta;
  Extent K;
  Extent L;
};

// A sequence n -> a_n with a_n = 0 for n < 0, viewed through its Toeplitz
// matrix (a_{j-i})_{i,j>=1}. Sequences fed to the Edrei/Karlin machinery are
// normalized with a_0 = 1.
class ToeplitzSequence {
 public:
  ToeplitzSequence(std::string label, std::function<Rational(int)> term,
                   std::optional<EdreiParams> declared = std::nullopt)
      : label_(std::move(label)), term_(std::move(term)), declared_(std::move(declared)) {}

  Rational term(int n) const { return n < 0 ? Rational(0) : term_(n); }

  const std::string& label() const { return label_; }
  const std::optional<EdreiParams>& declared_params() const { return declared_; }

 private:
  std::string label_;
  std::function<Rational(int)> term_;
  std::optional<EdreiParams> declared_;
};

// Exact minor T(I,J) = det( a_{j_m - i_l} )_{l,m}. Empty index lists give 1.
inline Rational toeplitz_minor(const ToeplitzSequence& seq, const IndexList& rows,
                               const IndexList& cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("toeplitz minor with index lists of different lengths");
  }
  const size_t r = rows.size();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r));
  for (size_t l = 0; l < r; ++l) {
    for (size_t c = 0; c < r; ++c) m[l][c] = seq.term(cols[c] - rows[l]);
  }
  return determinant(std::move(m));
}

// The sequence a_n = phi(h_n). Its generating function has theta = 0, K = 0
// and L = infinity; both branches of the criterion are still exercised
// elsewhere through constructed sequences with other parameters.
inline ToeplitzSequence phi_sequence(const SpecializationContext& ctx) {
  auto shared = std::make_shared<const SpecializationContext>(ctx);
  return ToeplitzSequence(
      "phi(t=" + rational_str(shared->t()) + ")",
      [shared](int n) { return shared->phi_h(n); },
      EdreiParams{Rational(0), Extent(0), Extent::infinity()});
}

// Finite truncation of the Edrei product form: theta >= 0, every rho > 0,
// every delta >= 0.
struct EdreiForm {
  Rational theta;
  std::vector<Rational> rho;
  std::vector<Rational> delta;

  EdreiForm(Rational theta_in, std::vector<Rational> rho_in, std::vector<Rational> delta_in)
      : theta(std::move(theta_in)), rho(std::move(rho_in)), delta(std::move(delta_in)) {
    if (theta.sign() < 0) throw std::invalid_argument("edrei form requires theta >= 0");
    for (const auto& r : rho) {
      if (r.sign() <= 0) throw std::invalid_argument("edrei form requires rho entries > 0");
    }
    for (const auto& d : delta) {
      if (d.sign() < 0) throw std::invalid_argument("edrei form requires delta entries >= 0");
    }
  }

  EdreiParams params() const {
    long k = 0;
    for (const auto& d : delta) {
      if (d.sign() > 0) ++k;
    }
    return EdreiParams{theta, Extent(k), Extent(static_cast<long>(rho.size()))};
  }

  std::string label() const {
    std::string s = "e^(" + rational_str(theta) + "x)";
    for (const auto& r : rho) s += "(1+" + rational_str(r) + "x)";
    for (const auto& d : delta) s += "/(1-" + rational_str(d) + "x)";
    return s;
  }
};

// First `count` power-series coefficients of the form, exactly: the
// exponential through its factorial series, each (1+rho x) by convolution,
// each 1/(1-delta x) by the prefix recurrence b_n = a_n + delta b_{n-1}.
inline std::vector<Rational> edrei_coefficients(const EdreiForm& form, int count) {
  if (count < 0) throw std::invalid_argument("edrei_coefficients with negative count");
  std::vector<Rational> a(static_cast<size_t>(count));
  if (count == 0) return a;
  a[0] = 1;
  for (int n = 1; n < count; ++n) {
    a[static_cast<size_t>(n)] = a[static_cast<size_t>(n - 1)] * form.theta / n;
  }
  for (const auto& rho : form.rho) {
    for (int n = count - 1; n >= 1; --n) {
      a[static_cast<size_t>(n)] += rho * a[static_cast<size_t>(n - 1)];
    }
  }
  for (const auto& delta : form.delta) {
    if (delta.sign() == 0) continue;
    for (int n = 1; n < count; ++n) {
      a[static_cast<size_t>(n)] += delta * a[static_cast<size_t>(n - 1)];
    }
  }
  return a;
}

inline ToeplitzSequence edrei_sequence(const EdreiForm& form) {
  return ToeplitzSequence(
      form.label(), [form](int n) { return edrei_coefficients(form, n + 1).back(); },
      form.params());
}

enum class MinorSign { negative, zero, positive };

inline MinorSign classify_sign(const Rational& value) {
  const int s = value.sign();
  if (s < 0) return MinorSign::negative;
  return s == 0 ? MinorSign::zero : MinorSign::positive;
}

inline std::string_view minor_sign_str(MinorSign s) {
  switch (s) {
    case MinorSign::negative: return "negative";
    case MinorSign::zero: return "zero";
    default: return "positive";
  }
}

struct MinorRecord {
  IndexList rows;
  IndexList cols;
  Rational value;
  MinorSign sign;
};

struct TpScanReport {
  std::string label;
  int max_order = 0;
  int window = 0;
  std::vector<MinorRecord> records;
  long negatives = 0;
  long zeros = 0;
  long positives = 0;

  bool any_negative() const { return negatives > 0; }
};

// Evaluates every minor T(I,J) with |I| = |J| = r <= max_order and indices
// <= window, in deterministic order (r ascending, then I and J each
// lexicographic). Total positivity at this scale means no negative record.
inline TpScanReport tp_scan(const ToeplitzSequence& seq, int max_order, int window) {
  if (max_order < 1 || window < 1 || max_order > window) {
    throw std::invalid_argument("tp_scan requires 1 <= max_order <= window");
  }
  TpScanReport report;
  report.label = seq.label();
  report.max_order = max_order;
  report.window = window;
  for (int r = 1; r <= max_order; ++r) {
    for_each_index_list(window, r, [&](const IndexList& rows) {
      for_each_index_list(window, r, [&](const IndexList& cols) {
        Rational value = toeplitz_minor(seq, rows, cols);
        const MinorSign s = classify_sign(value);
        switch (s) {
          case MinorSign::negative: ++report.negatives; break;
          case MinorSign::zero: ++report.zeros; break;
          case MinorSign::positive: ++report.positives; break;
        }
        report.records.push_back(MinorRecord{rows, cols, std::move(value), s});
      });
    });
  }
  return report;
}

}  // namespace schurpos
