#include <schurpos/lassalle.hpp>

#include <gtest/gtest.h>

namespace schurpos {
namespace {

TEST(Catalan, Values) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(1), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(4), 14);
  EXPECT_EQ(catalan(10), 16796);
  EXPECT_THROW(catalan(-1), std::invalid_argument);
}

// Independent oracle for the closed form: the convolution recurrence
// C_{n+1} = sum_k C_k C_{n-k}.
TEST(Catalan, ConvolutionRecurrence) {
  for (int n = 0; n <= 15; ++n) {
    BigInt conv = 0;
    for (int k = 0; k <= n; ++k) conv += catalan(k) * catalan(n - k);
    EXPECT_EQ(catalan(n + 1), conv) << n;
  }
}

TEST(LassalleA, InitialValues) {
  const auto a = lassalle_a(4);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0], 1);   // A_1, the defining initial value
  EXPECT_EQ(a[1], 1);   // A_2 = -(C_2 - 3 A_1 C_1)
  EXPECT_EQ(a[2], 5);   // A_3
  EXPECT_EQ(a[3], 56);  // A_4 = -(14 - 35 + 70 - 105)
  EXPECT_EQ(lassalle_a(1), std::vector<BigInt>{BigInt(1)});
  EXPECT_THROW(lassalle_a(0), std::invalid_argument);
}

TEST(LassalleA, PositiveIntegersThroughTwenty) {
  const auto a = lassalle_a(20);
  ASSERT_EQ(a.size(), 20u);
  for (size_t i = 1; i < a.size(); ++i) {
    EXPECT_GT(a[i], 0);
    EXPECT_GE(a[i], a[i - 1]);
  }
}

TEST(LassalleTable, RatiosStartOneTwoEight) {
  const LassalleTable table = LassalleTable::build(4);
  EXPECT_EQ(table.ratios[1], Rational(1));  // 2*1/2
  EXPECT_EQ(table.ratios[2], Rational(2));  // 2*5/5
  EXPECT_EQ(table.ratios[3], Rational(8));  // 2*56/14
  EXPECT_EQ(table.catalan.size(), 5u);
  EXPECT_EQ(table.a_values.size(), 4u);
}

TEST(Zeilberger, AllChecksPassThroughTwenty) {
  const ZeilbergerReport report = zeilberger_check(20);
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.rows.size(), 19u);
  for (const ZeilbergerRow& row : report.rows) {
    EXPECT_TRUE(row.a_positive) << row.n;
    EXPECT_TRUE(row.a_monotone) << row.n;
    EXPECT_TRUE(row.ratio_integer) << row.n;
    EXPECT_TRUE(row.ratio_monotone) << row.n;
  }
}

TEST(Zeilberger, MinimalRange) {
  const ZeilbergerReport report = zeilberger_check(2);
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].n, 2);
  EXPECT_THROW(zeilberger_check(1), std::invalid_argument);
}

TEST(Zeilberger, CsvExport) {
  const std::string csv = lassalle_csv(LassalleTable::build(4));
  EXPECT_EQ(csv,
            "n,C_n,A_n,2A_n/C_n\n"
            "1,1,1,2\n"
            "2,2,1,1\n"
            "3,5,5,2\n"
            "4,14,56,8\n");
}

}  // namespace
}  // namespace schurpos
