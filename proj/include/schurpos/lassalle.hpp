#pragma once

#include "schurpos/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace schurpos {

// C_n = binomial(2n, n) / (n+1); the division is exact.
inline BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of negative index");
  BigInt num = binomial(2 * n, n);
  BigInt q, r;
  boost::multiprecision::divide_qr(num, BigInt(n + 1), q, r);
  if (r != 0) throw std::logic_error("catalan division not exact");
  return q;
}

// A_1..A_N from A_1 = 1 and, for n >= 2,
//   (-1)^{n-1} A_n = C_n + sum_{j=1}^{n-1} (-1)^j binomial(2n-1, 2j-1) A_j C_{n-j}.
// The recursion runs over exact rationals; integrality of every A_n is a
// checked property, not an assumption.
inline std::vector<BigInt> lassalle_a(int N) {
  if (N < 1) throw std::invalid_argument("lassalle_a requires N >= 1");
  std::vector<Rational> a;
  a.reserve(static_cast<size_t>(N));
  a.push_back(Rational(1));
  for (int n = 2; n <= N; ++n) {
    Rational rhs = Rational(catalan(n));
    for (int j = 1; j <= n - 1; ++j) {
      const Rational term =
          Rational(binomial(2 * n - 1, 2 * j - 1)) * a[static_cast<size_t>(j - 1)] *
          Rational(catalan(n - j));
      rhs += (j % 2 == 1) ? -term : term;
    }
    a.push_back(n % 2 == 1 ? rhs : -rhs);
  }
  std::vector<BigInt> out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!is_integer(a[i])) {
      throw std::logic_error("A_" + std::to_string(i + 1) +
                             " is not an integer: " + rational_str(a[i]));
    }
    out.push_back(numerator(a[i]));
  }
  return out;
}

struct LassalleTable {
  std::vector<BigInt> catalan;   // C_0..C_N
  std::vector<BigInt> a_values;  // A_1..A_N
  std::vector<Rational> ratios;  // 2 A_n / C_n for n = 1..N

  static LassalleTable build(int N) {
    if (N < 1) throw std::invalid_argument("lassalle table requires N >= 1");
    LassalleTable t;
    for (int n = 0; n <= N; ++n) t.catalan.push_back(schurpos::catalan(n));
    t.a_values = lassalle_a(N);
    for (int n = 1; n <= N; ++n) {
      t.ratios.push_back(make_rational(2 * t.a_values[static_cast<size_t>(n - 1)],
                                       t.catalan[static_cast<size_t>(n)]));
    }
    return t;
  }
};

struct ZeilbergerRow {
  int n;
  bool a_positive;
  bool a_monotone;      // A_n >= A_{n-1}
  bool ratio_integer;   // 2 A_n / C_n is an integer
  bool ratio_monotone;  // ratios strictly increase from n = 3 on

  bool pass() const { return a_positive && a_monotone && ratio_integer && ratio_monotone; }
};

struct ZeilbergerReport {
  LassalleTable table;
  std::vector<ZeilbergerRow> rows;  // n = 2..N
  bool pass = true;
};

// Checks, for 2 <= n <= N: A_n > 0, A_n >= A_{n-1}, 2 A_n / C_n an integer,
// and the ratio sequence increasing. The ratio claim concerns n >= 2, so its
// first comparison is n = 3 against n = 2.
inline ZeilbergerReport zeilberger_check(int N) {
  if (N < 2) throw std::invalid_argument("zeilberger_check requires N >= 2");
  ZeilbergerReport report;
  report.table = LassalleTable::build(N);
  const auto& a = report.table.a_values;
  const auto& ratios = report.table.ratios;
  for (int n = 2; n <= N; ++n) {
    ZeilbergerRow row;
    row.n = n;
    row.a_positive = a[static_cast<size_t>(n - 1)] > 0;
    row.a_monotone = a[static_cast<size_t>(n - 1)] >= a[static_cast<size_t>(n - 2)];
    row.ratio_integer = is_integer(ratios[static_cast<size_t>(n - 1)]);
    row.ratio_monotone =
        n == 2 || ratios[static_cast<size_t>(n - 1)] > ratios[static_cast<size_t>(n - 2)];
    report.pass = report.pass && row.pass();
    report.rows.push_back(row);
  }
  return report;
}

// CSV export, one row per n = 1..N.
inline std::string lassalle_csv(const LassalleTable& table) {
  std::string csv = "n,C_n,A_n,2A_n/C_n\n";
  for (size_t i = 0; i < table.a_values.size(); ++i) {
    csv += std::to_string(i + 1);
    csv += ',';
    csv += table.catalan[i + 1].str();
    csv += ',';
    csv += table.a_values[i].str();
    csv += ',';
    csv += rational_str(table.ratios[i]);
    csv += '\n';
  }
  return csv;
}

}  // namespace schurpos
