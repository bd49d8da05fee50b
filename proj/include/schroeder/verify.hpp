#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first differing cell or witness on failure
};

bool all_passed(const std::vector<CheckResult>& checks);

/// Oracle vs series vs recurrence for one printed table, n <= n_max, plus
/// series vs recurrence up to max(n_max, 12).
std::vector<CheckResult> verify_table(int table_id, int n_max);

/// The 1-before-n distance triangle of the (1243,1324) class: oracle,
/// its recurrence and its binomial closed form.
std::vector<CheckResult> verify_distance_triangle(int n_max);

/// Functional equations and sequence anchors, exact to `order`.
std::vector<CheckResult> verify_identities(int order = 12);

/// Palindromic rows, 1-before-n vs n-before-1 balance and the
/// reverse-complement count C(2n-3, n-1), all from the oracle.
std::vector<CheckResult> verify_symmetries(int n_max);

/// verify_partition for every construction and 3 <= n <= n_max.
std::vector<CheckResult> verify_bijections(int n_max);

/// Scope names accepted by run_verify: "all", "1".."6", "bijections",
/// "identities".
bool valid_scope(std::string_view scope);

/// Throws std::invalid_argument on an unknown scope or an n_max outside
/// the oracle range.
std::vector<CheckResult> run_verify(std::string_view scope, int n_max);

}  // namespace schroeder
