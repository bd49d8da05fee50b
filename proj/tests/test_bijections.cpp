#include "schroeder/bijections.hpp"
#include "schroeder/oracle.hpp"
#include "schroeder/recurrences.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace schroeder;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const Construction kAll[] = {Construction::PROP31, Construction::PROP41, Construction::PROP51,
                             Construction::PROP53};

std::map<std::string, std::size_t> sizes(const CellReport& c) {
  std::map<std::string, std::size_t> out;
  for (const auto& b : c.branches) out[b.branch] = b.size;
  return out;
}

const CellReport& cell(const BijectionReport& r, int k) {
  for (const auto& c : r.cells)
    if (c.k == k) return c;
  throw std::out_of_range("no cell " + std::to_string(k));
}

}  // namespace

TEST(Prop31, Examples) {
  EXPECT_EQ(prop31_child(P("25143"), 3, Prop31Branch::adjacent), P("361254"));
  EXPECT_EQ(prop31_child(P("25143"), 3, Prop31Branch::end), P("361542"));
  EXPECT_EQ(prop31_child(P("12"), 2, Prop31Branch::left_j), P("213"));
  // The size-2 cell is a base case: {12}, not produced by any branch.
  const TableDef def = table_def(3);
  const auto two = class_members(2, def.cls);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], P("12"));
  EXPECT_THROW(prop31_child(P("1"), 1, Prop31Branch::left_j), PreconditionError);
}

TEST(Prop31, PreconditionsAreEnforced) {
  EXPECT_THROW(prop31_child(P("1324"), 3, Prop31Branch::left_j), PreconditionError);  // contains 1324
  EXPECT_THROW(prop31_child(P("312"), 3, Prop31Branch::left_j), PreconditionError);   // skew sum
  EXPECT_THROW(prop31_child(P("25143"), 2, Prop31Branch::left_j), PreconditionError);  // j = 3 > 2
  EXPECT_THROW(prop31_child(P("25143"), 4, Prop31Branch::adjacent), PreconditionError);
  EXPECT_THROW(prop31_child(P("2413"), 4, Prop31Branch::end), PreconditionError);  // ell = n-1
}

TEST(Prop41, Examples) {
  EXPECT_EQ(phi1(P("132")), P("123"));
  EXPECT_EQ(phi2(P("132"), 2), P("1432"));
  EXPECT_EQ(phi3(P("12")), P("213"));
  EXPECT_EQ(phi3(P("132")), P("3142"));
  EXPECT_THROW(phi1(P("123")), PreconditionError);       // n is last
  EXPECT_THROW(phi1(P("312")), PreconditionError);       // n before 1
  EXPECT_THROW(phi2(P("132"), 3), PreconditionError);    // maximum not at k
  EXPECT_THROW(phi3(P("2413")), PreconditionError);      // contains 2413
}

TEST(Prop41, MarkersSplitTheTarget) {
  // Exactly one of the three predicates holds on every target member.
  const TableDef def = table_def(4);
  for (int n = 4; n <= 8; ++n)
    for (const Permutation& t : class_members(n, def.cls)) {
      const int k = t.position_of(n);
      if (k < 3 || k == n) continue;
      const bool m1 = t.value_at(k - 1) > t.value_at(k + 1);
      const bool m2 = t.value_at(k + 1) == n - 1;
      const bool m3 = t.value_at(k - 1) < t.value_at(k + 1) && t.value_at(k + 1) < n - 1;
      EXPECT_EQ(int(m1) + int(m2) + int(m3), 1) << t;
    }
}

TEST(Prop41, ImageSizes) {
  const Triangle t4 = table_oracle(4, 7);
  const BijectionReport r5 = verify_partition(5, Construction::PROP41);
  const auto s55 = sizes(cell(r5, 5));
  EXPECT_EQ(s55.at("phi1"), 16u);
  EXPECT_EQ(s55.at("phi3"), 6u);
  EXPECT_EQ(s55.count("phi2"), 0u);
  const BijectionReport r6 = verify_partition(6, Construction::PROP41);
  std::size_t total = 0;
  for (const auto& [name, size] : sizes(cell(r6, 5))) total += size;
  EXPECT_EQ(total, 68u);
  const BijectionReport r7 = verify_partition(7, Construction::PROP41);
  EXPECT_TRUE(r7.passed());
  for (int k = 2; k <= 7; ++k) {
    std::size_t sum = 0;
    for (const auto& [name, size] : sizes(cell(r7, k))) sum += size;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(sum)), t4.value(7, k)) << k;
  }
}

TEST(Prop51, Examples) {
  EXPECT_EQ(alpha(P("2413"), 4), P("35124"));
  EXPECT_EQ(alpha_case(P("2413")), AlphaCase::two_left_of_one);
  EXPECT_EQ(alpha_inverse(P("35124")), P("2413"));
  EXPECT_THROW(alpha(P("2413"), 3), PreconditionError);   // ell < 4
  EXPECT_THROW(alpha(P("2134"), 5), PreconditionError);   // contains 2134
  EXPECT_THROW(alpha(P("1324"), 5), PreconditionError);   // contains 1324
  EXPECT_THROW(alpha_inverse(P("35214")), PreconditionError);
}

TEST(Prop51, AlphaCasesAndInverse) {
  const TableDef def = table_def(5);
  std::set<AlphaCase> seen;
  for (int m = 4; m <= 8; ++m)
    for (const Permutation& t : class_members(m - 1, def.cls)) {
      const int ell = t.last() + 1;
      if (ell < 4) continue;
      const Permutation s = alpha(t, ell);
      EXPECT_EQ(s.last(), ell);
      EXPECT_GT(s.value_at(m - 1), 1);
      EXPECT_LT(s.value_at(m - 1), ell);
      EXPECT_EQ(alpha_inverse(s), t);
      seen.insert(alpha_case(t));
    }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Prop51, SplitSizes) {
  const BijectionReport r = verify_partition(6, Construction::PROP51);
  ASSERT_TRUE(r.passed());
  const Triangle s = table_oracle(5, 6);
  const auto c = sizes(cell(r, 4));
  EXPECT_EQ(c.at("U"), 22u);
  EXPECT_EQ(c.at("V"), 22u);
  for (int ell = 4; ell <= 6; ++ell) {
    const auto z = sizes(cell(r, ell));
    EXPECT_EQ(BigInt(static_cast<unsigned long>(z.at("U") + z.at("V"))), 2 * s.value(5, ell - 1));
  }
}

TEST(Prop53, Examples) {
  EXPECT_EQ(dist_step(P("3142"), DistBranch::A_theta), P("31452"));
  EXPECT_EQ(dist_step(P("41352"), DistBranch::A_tau), P("13452"));
  EXPECT_THROW(dist_step(P("13452"), DistBranch::A_tau), PreconditionError);  // 4 right of 1
  EXPECT_THROW(dist_step(P("1243"), DistBranch::A_theta), PreconditionError);  // contains 1243
}

TEST(Partition, AllConstructionsSmallN) {
  for (Construction c : kAll)
    for (int n = 3; n <= 8; ++n) {
      const BijectionReport r = verify_partition(n, c);
      EXPECT_TRUE(r.passed()) << to_string(c) << " n=" << n << " "
                              << (r.witnesses.empty() ? "" : r.witnesses.front());
      EXPECT_TRUE(r.witnesses.empty());
      EXPECT_EQ(r.image_total(), r.target_size);
    }
}

TEST(Partition, Prop31BaseSizes) {
  const BijectionReport r = verify_partition(3, Construction::PROP31);
  ASSERT_EQ(r.cells.size(), 2u);
  EXPECT_EQ(r.cells[0].target_size, 2u);
  EXPECT_EQ(r.cells[1].target_size, 1u);
}

TEST(Partition, BranchSizesAreRecurrenceTerms) {
  constexpr int kN = 8;
  const Triangle a31 = triangle_by_recurrence(RecurrenceId::p31, kN);
  const Triangle a41 = triangle_by_recurrence(RecurrenceId::p41, kN);
  const Triangle s51 = triangle_by_recurrence(RecurrenceId::p51, kN);
  const Triangle a53 = triangle_by_recurrence(RecurrenceId::p53_rec, kN);
  const auto eq = [](std::size_t got, const BigInt& want) {
    return BigInt(static_cast<unsigned long>(got)) == want;
  };
  for (int n = 3; n <= kN; ++n) {
    const auto r31 = verify_partition(n, Construction::PROP31);
    for (int l = 1; l <= n - 1; ++l) {
      const auto z = sizes(cell(r31, l));
      BigInt left = 0;
      for (int j = 1; j < l; ++j) left += a31.value(n - 1, j);
      EXPECT_TRUE(eq(z.at("left_j"), left)) << n << "," << l;
      if (l < n - 1) {
        EXPECT_TRUE(eq(z.at("adjacent"), a31.value(n - 1, l)));
        EXPECT_TRUE(eq(z.at("end"), a31.value(n - 1, l)));
      }
    }
    const auto r41 = verify_partition(n, Construction::PROP41);
    for (int k = 3; k <= n; ++k) {
      const auto z = sizes(cell(r41, k));
      EXPECT_TRUE(eq(z.at("phi1"), a41.value(n, k - 1)));
      if (k < n) EXPECT_TRUE(eq(z.at("phi2"), a41.value(n - 1, k)));
      EXPECT_TRUE(eq(z.at("phi3"), a41.value(n - 1, k - 1)));
    }
    const auto r51 = verify_partition(n, Construction::PROP51);
    for (int l = 4; l <= n; ++l) {
      const auto z = sizes(cell(r51, l));
      BigInt tail = 0;
      for (int m = l; m <= n - 1; ++m) tail += s51.value(n - 1, m);
      EXPECT_TRUE(eq(z.at("descent"), tail));
      EXPECT_TRUE(eq(z.at("U"), s51.value(n - 1, l - 1)));
      EXPECT_TRUE(eq(z.at("V"), s51.value(n - 1, l - 1)));
    }
    const auto r53 = verify_partition(n, Construction::PROP53);
    for (int k = 2; k <= n - 2; ++k) {
      const auto z = sizes(cell(r53, k));
      EXPECT_TRUE(eq(z.at("A_theta"), a53.value(n - 1, k - 1)));
      EXPECT_TRUE(eq(z.at("A_tau"), a53.value(n, k + 1)));
    }
  }
}

TEST(Partition, RejectsSizesOutsideRange) {
  EXPECT_THROW(verify_partition(2, Construction::PROP31), std::invalid_argument);
  EXPECT_THROW(verify_partition(11, Construction::PROP31, 10), std::invalid_argument);
}

TEST(Partition, ConstructionNames) {
  for (Construction c : kAll) EXPECT_EQ(parse_construction(to_string(c)), c);
  EXPECT_FALSE(parse_construction("PROP99"));
}
