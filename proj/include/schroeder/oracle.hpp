#pragma once

#include "schroeder/permutation.hpp"
#include "schroeder/triangle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schroeder {

enum class Filter {
  none,
  skew_indecomposable,
  one_before_n,            // pos(1) < pos(n)
  one_adjacent_left_of_n,  // pos(n) - pos(1) == 1
};

struct ClassSpec {
  PatternSet patterns;
  Filter filter = Filter::none;

  bool admits(const Permutation& sigma) const;
  bool admits(std::span<const int> word) const;
};

enum class StatisticKind {
  position_of_1,
  position_of_n,
  distance_1_to_n,
  distance_a_to_n,
  last_entry,
  first_entry,
};

/// A positional statistic. Distance statistics are undefined (nullopt) on
/// permutations that miss their order constraint: for distance_a_to_n the
/// entry a must lie left of n and every entry below a right of n.
struct StatisticSpec {
  StatisticKind kind = StatisticKind::position_of_1;
  int a = 1;

  static StatisticSpec distance_a(int a) { return {StatisticKind::distance_a_to_n, a}; }

  std::optional<int> evaluate(std::span<const int> word) const;
  std::optional<int> evaluate(const Permutation& sigma) const {
    return evaluate(sigma.values());
  }
};

/// Every sigma of size n avoiding `patterns`, in lexicographic order.
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& patterns);

/// Avoiders that also pass the class filter, in lexicographic order.
std::vector<Permutation> class_members(int n, const ClassSpec& cls);

/// Degree of parallelism for the OpenMP kernels; 0 means the runtime
/// default. Read from SCHROEDER_THREADS when unset.
struct Parallelism {
  int threads = 0;

  static Parallelism from_environment();
};

/// Counts class members of size 1..n_max by statistic value. Row n spans
/// k = 1..n. Enumeration is chunked by the two leading entries and the
/// chunks run on OpenMP threads; the merged triangle does not depend on
/// the thread count.
Triangle triangle_from_oracle(int n_max, const ClassSpec& cls, const StatisticSpec& stat,
                              Parallelism par = Parallelism::from_environment());

/// Serial reference: one std::next_permutation sweep with the generic
/// containment test. Kept for cross-checking the parallel kernel.
Triangle triangle_from_oracle_serial(int n_max, const ClassSpec& cls,
                                     const StatisticSpec& stat);

// --- printed tables ------------------------------------------------------------

inline constexpr int kDefaultOracleNMax = 8;
inline constexpr int kOracleCeiling = 10;

struct TableDef {
  int id = 0;
  ClassSpec cls;
  StatisticSpec stat;
  RowLayout layout;
  std::string caption;
};

/// Class, statistic and printed row shape of tables 1..6. Throws
/// std::out_of_range for other ids.
TableDef table_def(int table_id);

/// The oracle triangle of a table, reshaped onto its printed layout.
Triangle table_oracle(int table_id, int n_max,
                      Parallelism par = Parallelism::from_environment());

}  // namespace schroeder
