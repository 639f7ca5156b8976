// Acceptance suite: every top-level claim checked end to end with exact
// arithmetic, one pass/fail line per criterion. Exit status 0 only when all
// criteria hold.

#include <schurpos/schurpos.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace schurpos;

std::vector<Rational> sweep_t_values() {
  return {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)};
}

std::vector<SkewShape> all_skew_shapes(int max_weight) {
  std::vector<SkewShape> shapes;
  for (const Partition& outer : enumerate_partitions(max_weight)) {
    for (const Partition& inner : sub_partitions(outer)) {
      shapes.emplace_back(outer, inner);
    }
  }
  return shapes;
}

// 1. phi(s_{lambda/mu}) > 0 for every skew shape with |lambda| <= 8 and
//    t in {1/2, 1, 2, 7/3}.
bool criterion_positivity_sweep(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto shapes = all_skew_shapes(8);
  long evaluations = 0;
  long nonpositive = 0;
  for (const Rational& t : sweep_t_values()) {
    const SpecializationContext ctx(t);
    for (const SkewShape& shape : shapes) {
      ++evaluations;
      if (ctx.phi_skew_schur(shape).sign() <= 0) ++nonpositive;
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start);
  std::ostringstream out;
  out << shapes.size() << " shapes x 4 t-values, " << evaluations << " evaluations, "
      << nonpositive << " nonpositive, " << elapsed.count() << " ms";
  detail = out.str();
  return nonpositive == 0;
}

// 2. The Toeplitz minor at the index sets of a shape equals the Jacobi-Trudi
//    value, for the same shapes and t values.
bool criterion_minor_schur_equivalence(std::string& detail) {
  const auto shapes = all_skew_shapes(8);
  long mismatches = 0;
  for (const Rational& t : sweep_t_values()) {
    const SpecializationContext ctx(t);
    const ToeplitzSequence seq = phi_sequence(ctx);
    for (const SkewShape& shape : shapes) {
      const auto [rows, cols] = shape_to_index_sets(shape);
      if (toeplitz_minor(seq, rows, cols) != ctx.phi_skew_schur(shape)) ++mismatches;
    }
  }
  detail = std::to_string(shapes.size() * 4) + " comparisons, " + std::to_string(mismatches) +
           " mismatches";
  return mismatches == 0;
}

// 3. Dual Jacobi-Trudi: the e-determinant over the conjugate shape (phi(e)
//    from the Newton recurrence) equals the h-determinant, |lambda| <= 6,
//    t in {1, 2}.
bool criterion_dual_jacobi_trudi(std::string& detail) {
  long comparisons = 0;
  long mismatches = 0;
  for (const Rational& t : {Rational(1), Rational(2)}) {
    const SpecializationContext ctx(t);
    for (const Partition& shape : enumerate_partitions(6)) {
      const Partition conj = shape.conjugate();
      const int m = static_cast<int>(conj.length());
      std::vector<std::vector<Rational>> e_matrix(
          static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(m)));
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          e_matrix[i - 1][j - 1] = ctx.phi_e(conj.part(static_cast<size_t>(i - 1)) - i + j);
        }
      }
      ++comparisons;
      if (determinant(std::move(e_matrix)) != ctx.phi_schur(shape)) ++mismatches;
    }
  }
  detail = std::to_string(comparisons) + " comparisons, " + std::to_string(mismatches) +
           " mismatches";
  return mismatches == 0;
}

// 4. Total-positivity scan of the phi sequence, t in {1, 2}, order <= 4,
//    window <= 10: no negative minor, and the sign is positive exactly on
//    staircase index pairs, zero elsewhere.
bool criterion_tp_scan(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  long minors = 0;
  long sign_errors = 0;
  long negatives = 0;
  for (const Rational& t : {Rational(1), Rational(2)}) {
    const TpScanReport report = tp_scan(phi_sequence(SpecializationContext(t)), 4, 10);
    negatives += report.negatives;
    minors += static_cast<long>(report.records.size());
    for (const MinorRecord& record : report.records) {
      bool staircase = true;
      for (size_t k = 0; k < record.rows.size(); ++k) {
        staircase = staircase && record.rows[k] <= record.cols[k];
      }
      const MinorSign expected = staircase ? MinorSign::positive : MinorSign::zero;
      if (record.sign != expected) ++sign_errors;
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start);
  std::ostringstream out;
  out << minors << " minors, " << negatives << " negative, " << sign_errors
      << " sign mismatches, " << elapsed.count() << " ms";
  detail = out.str();
  return negatives == 0 && sign_errors == 0;
}

// 5. The strict-positivity predicate agrees with exact determinant signs on
//    the finite-parameter oracle corpus, r <= 3, indices <= 7.
bool criterion_karlin_validation(std::string& detail) {
  long comparisons = 0;
  long disagreements = 0;
  for (const ToeplitzSequence& seq : oracle_sequences()) {
    const auto& declared = seq.declared_params();
    if (!declared.has_value() || declared->K.is_infinite() || declared->L.is_infinite()) {
      continue;
    }
    const KarlinParams params = KarlinParams::from(*declared);
    for (int r = 1; r <= 3; ++r) {
      for_each_index_list(7, r, [&](const IndexList& rows) {
        for_each_index_list(7, r, [&](const IndexList& cols) {
          ++comparisons;
          const bool positive = toeplitz_minor(seq, rows, cols) > 0;
          if (predict_positive(params, rows, cols) != positive) ++disagreements;
        });
      });
    }
  }
  detail = std::to_string(comparisons) + " comparisons, " + std::to_string(disagreements) +
           " disagreements";
  return comparisons > 0 && disagreements == 0;
}

// 6. Jensen polynomials have only nonpositive real zeros for n <= 15 and
//    t in {1/2, 1, 3/2, 2, 7/3}; the Jensen-Laguerre identity holds on the
//    same range; the series/Gamma coefficient identity holds for count = 20.
bool criterion_rootedness(std::string& detail) {
  const std::vector<Rational> ts = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                    Rational(7, 3)};
  long failures = 0;
  long checks = 0;
  for (const Rational& t : ts) {
    for (int n = 0; n <= 15; ++n) {
      ++checks;
      if (!all_roots_real_nonpositive(jensen_poly(t, n))) ++failures;
      ++checks;
      if (!check_jensen_laguerre_identity(t, n)) ++failures;
    }
    ++checks;
    if (!check_bessel_series_identity(t, 20)) ++failures;
  }
  detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// 7. A_1..A_20 are positive integers with A_2 = 1, A_3 = 5, A_4 = 56,
//    increasing from n = 2; ratios 2 A_n / C_n are integers 1, 2, 8, ... and
//    increase through n = 20.
bool criterion_lassalle_table(std::string& detail) {
  const ZeilbergerReport report = zeilberger_check(20);
  const auto& a = report.table.a_values;
  bool pinned = a.size() == 20 && a[0] == 1 && a[1] == 1 && a[2] == 5 && a[3] == 56 &&
                report.table.ratios[1] == 1 && report.table.ratios[2] == 2 &&
                report.table.ratios[3] == 8;
  bool positive_integers = true;
  for (const BigInt& value : a) positive_integers = positive_integers && value > 0;
  detail = "A_2=" + a[1].str() + " A_3=" + a[2].str() + " A_4=" + a[3].str() +
           ", zeilberger rows " + (report.pass ? "all pass" : "FAILED");
  return pinned && positive_integers && report.pass;
}

// 8. phi(e_n) > 0 and (-1)^{n-1} phi(p_n) > 0 for n <= 12 and the sweep t set.
bool criterion_e_p_signs(std::string& detail) {
  long failures = 0;
  long checks = 0;
  for (const Rational& t : sweep_t_values()) {
    const SpecializationContext ctx(t);
    for (int n = 1; n <= 12; ++n) {
      ++checks;
      if (ctx.phi_e(n).sign() <= 0) ++failures;
      ++checks;
      const Rational p = ctx.phi_p(n);
      if ((n % 2 == 1 ? p : -p).sign() <= 0) ++failures;
    }
  }
  detail = std::to_string(checks) + " sign checks, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// 9. Sturm root counting matches construction on 200 randomized products of
//    rational linear factors (degree <= 8, roots in [-5, 5]).
bool criterion_sturm_oracle(std::string& detail) {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> degree_dist(1, 8);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 2);
  long mismatches = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int degree = degree_dist(rng);
    std::set<Rational> distinct;
    Polynomial p{Rational(1)};
    for (int k = 0; k < degree; ++k) {
      const Rational root = make_rational(num(rng), 2 * den(rng));
      distinct.insert(root);
      p = p * Polynomial({-root, Rational(1)});
    }
    if (count_real_roots(p) != static_cast<int>(distinct.size())) ++mismatches;
  }
  detail = "200 polynomials, " + std::to_string(mismatches) + " count mismatches";
  return mismatches == 0;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "positivity sweep |lambda| <= 8, t in {1/2,1,2,7/3}", criterion_positivity_sweep},
      {2, "minor / skew-Schur equivalence", criterion_minor_schur_equivalence},
      {3, "dual Jacobi-Trudi oracle, |lambda| <= 6, t in {1,2}", criterion_dual_jacobi_trudi},
      {4, "total-positivity scan, order <= 4, window <= 10, t in {1,2}", criterion_tp_scan},
      {5, "strict-positivity predicate vs exact minors, r <= 3, indices <= 7",
       criterion_karlin_validation},
      {6, "Jensen rootedness + Laguerre and Bessel identities", criterion_rootedness},
      {7, "Catalan / A_n table through n = 20", criterion_lassalle_table},
      {8, "phi(e_n) and alternating phi(p_n) signs, n <= 12", criterion_e_p_signs},
      {9, "Sturm count vs constructed roots, 200 random polynomials", criterion_sturm_oracle},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.name << " (" << detail << ")\n";
  }
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
