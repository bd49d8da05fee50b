#include "golden.hpp"
#include "naive.hpp"

#include "schroeder/oracle.hpp"
#include "schroeder/recurrences.hpp"

#include <gtest/gtest.h>

using namespace schroeder;

namespace {

constexpr int kFar = 50;

const RecurrenceId kAll[] = {RecurrenceId::p31,      RecurrenceId::p41,     RecurrenceId::p51,
                             RecurrenceId::t_lemmas, RecurrenceId::p53_rec, RecurrenceId::p53_closed};

}  // namespace

TEST(Recurrence, MatchesOracle) {
  for (int id = 3; id <= 6; ++id) {
    const auto rec = table_recurrence(id);
    ASSERT_TRUE(rec);
    EXPECT_EQ(recurrence_table(*rec), id);
    const auto diff = first_difference(triangle_by_recurrence(*rec, 8), table_oracle(id, 8));
    EXPECT_FALSE(diff) << "table " << id << " " << diff->describe();
  }
  EXPECT_FALSE(table_recurrence(1));
  EXPECT_FALSE(table_recurrence(2));
  EXPECT_FALSE(recurrence_table(RecurrenceId::p53_rec));
}

TEST(Recurrence, GoldenTables) {
  for (int id = 3; id <= 6; ++id) {
    const golden::Table& g = golden::table(id);
    EXPECT_EQ(golden::mismatch(g, triangle_by_recurrence(*table_recurrence(id), golden::n_max(g))),
              "");
  }
}

TEST(Recurrence, RowSumsFarOut) {
  // Row totals are Schroeder numbers and central binomials at every n.
  const auto r = naive::large_schroeder(kFar);
  const auto p31 = triangle_by_recurrence(RecurrenceId::p31, kFar);
  const auto p41 = triangle_by_recurrence(RecurrenceId::p41, kFar);
  const auto p51 = triangle_by_recurrence(RecurrenceId::p51, kFar);
  const auto tl = triangle_by_recurrence(RecurrenceId::t_lemmas, kFar);
  const auto dist = triangle_by_recurrence(RecurrenceId::p53_rec, kFar);
  for (int n = 2; n <= kFar; ++n) {
    EXPECT_EQ(p31.row(n).sum() * 2, r[n - 1]) << n;
    EXPECT_EQ(p41.row(n).sum() * 2, r[n - 1]) << n;
    EXPECT_EQ(p51.row(n).sum(), r[n - 1]) << n;
    EXPECT_EQ(tl.row(n).sum(), naive::choose(2 * n - 4, n - 2)) << n;
    EXPECT_EQ(dist.row(n).sum(), naive::choose(2 * n - 3, n - 1)) << n;
  }
}

TEST(Recurrence, DistanceClosedFormFarOut) {
  EXPECT_EQ(triangle_by_recurrence(RecurrenceId::p53_rec, kFar),
            triangle_by_recurrence(RecurrenceId::p53_closed, kFar));
  EXPECT_EQ(closed_form_dist(50, 1), naive::choose(96, 48));
  EXPECT_EQ(triangle_by_recurrence(RecurrenceId::p53_closed, kFar).cell(50, 1),
            naive::choose(96, 48));
  EXPECT_EQ(closed_form_dist(4, 2), 3);
  EXPECT_THROW(closed_form_dist(4, 4), std::out_of_range);
  EXPECT_THROW(closed_form_dist(1, 1), std::out_of_range);
}

TEST(Recurrence, DistanceStepIdentity) {
  // a_{4,2} = a_{4,3} + a_{3,1} = 1 + 2
  const Triangle t = triangle_by_recurrence(RecurrenceId::p53_rec, 4);
  EXPECT_EQ(t.value(4, 3), 1);
  EXPECT_EQ(t.value(3, 1), 2);
  EXPECT_EQ(t.value(4, 2), 3);
  EXPECT_EQ(t.value(4, 2), naive::choose(3, 2));
}

TEST(Recurrence, LastCellOfP31IsPreviousRowSum) {
  Triangle t = triangle_by_recurrence(RecurrenceId::p31, kFar);
  for (int n = 3; n <= kFar; ++n) EXPECT_EQ(t.cell(n, n - 1), t.row(n - 1).sum()) << n;
}

TEST(Recurrence, LemmaBoundariesAgreeWithInteriorRule) {
  // At l = n-2 the boundary value also satisfies t(n,l) = t(n,l-1) + t(n-1,l).
  Triangle t = triangle_by_recurrence(RecurrenceId::t_lemmas, kFar);
  for (int n = 5; n <= kFar; ++n) {
    const int l = n - 2;
    EXPECT_EQ(t.cell(n, l), t.cell(n, l - 1) + t.value(n - 1, l)) << n;
  }
  for (int n = 3; n <= kFar; ++n) EXPECT_EQ(t.cell(n, 1), t.cell(n, 2)) << n;
}

TEST(Recurrence, SmallRowsOfP51) {
  Triangle t = triangle_by_recurrence(RecurrenceId::p51, 7);
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(t.cell(n, 1), t.cell(n, 2));
    EXPECT_EQ(t.cell(n, 2), t.cell(n, 3));
  }
}

TEST(Recurrence, NamesAndLayouts) {
  for (RecurrenceId id : kAll) {
    EXPECT_EQ(parse_recurrence_id(to_string(id)), id);
    const RowLayout l = recurrence_layout(id);
    EXPECT_THROW(triangle_by_recurrence(id, l.n_min - 1), std::invalid_argument);
    EXPECT_EQ(triangle_by_recurrence(id, l.n_min).n_min(), l.n_min);
  }
  EXPECT_FALSE(parse_recurrence_id("P99"));
}

TEST(Recurrence, BinomialHelper) {
  for (int n = 0; n <= 30; ++n)
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), naive::choose(n, k));
}
