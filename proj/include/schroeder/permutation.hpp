#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

/// A permutation of 1..n in one-line notation. Positions and values are
/// 1-based. The size-0 permutation is valid and acts as the identity of
/// both direct and skew sums.
class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);

  /// Accepts "2413" (digit per entry, only for n <= 9) or "2,4,1,3" /
  /// "2 4 1 3". The empty string is the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  int value_at(int position) const { return values_.at(position - 1); }
  int position_of(int value) const { return positions_.at(value - 1); }

  int first() const { return values_.front(); }
  int last() const { return values_.back(); }

  std::span<const int> values() const noexcept { return values_; }

  /// Digits concatenated when n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.values_ == b.values_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.values_ <=> b.values_;
  }

private:
  std::vector<int> values_;
  std::vector<int> positions_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// A deduplicated, sorted, nonempty set of nonempty patterns.
class PatternSet {
public:
  PatternSet(std::initializer_list<Permutation> patterns);
  explicit PatternSet(std::vector<Permutation> patterns);

  static PatternSet parse(std::string_view text);  // "2413,3142"

  std::span<const Permutation> patterns() const noexcept { return patterns_; }
  std::string to_string() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
  std::vector<Permutation> patterns_;
};

namespace patterns {
PatternSet separable();         // {2413, 3142}
PatternSet p1324_1423();
PatternSet p1423_2413();
PatternSet p1324_2134();
PatternSet p1243_1324();
}  // namespace patterns

// --- containment -----------------------------------------------------------

/// Generic pruned subsequence search; works for any pattern length.
bool contains_generic(std::span<const int> word, std::span<const int> pattern);

/// Four nested loops with early pruning; `pattern` must have length 4.
bool contains_length4(std::span<const int> word, std::span<const int> pattern);

/// Dispatches to the length-4 scan when possible. The empty pattern is
/// contained in everything.
bool contains_pattern(std::span<const int> word, std::span<const int> pattern);
bool contains_pattern(const Permutation& sigma, const Permutation& pattern);

bool avoids(std::span<const int> word, const PatternSet& set);
bool avoids(const Permutation& sigma, const PatternSet& set);

// --- symmetries --------------------------------------------------------------

enum class Symmetry { reverse, complement, inverse, reverse_complement };

Permutation apply_symmetry(const Permutation& sigma, Symmetry which);
PatternSet apply_symmetry(const PatternSet& set, Symmetry which);

// --- sums ----------------------------------------------------------------------

Permutation direct_sum(const Permutation& pi, const Permutation& tau);
Permutation skew_sum(const Permutation& pi, const Permutation& tau);

/// Maximal decomposition sigma = c1 (+) c2 (+) ... with every ci
/// sum-indecomposable. Requires a nonempty sigma.
std::vector<Permutation> sum_components(const Permutation& sigma);

/// Maximal decomposition sigma = c1 (-) c2 (-) ... into skew components.
std::vector<Permutation> skew_components(const Permutation& sigma);

bool is_sum_indecomposable(const Permutation& sigma);
bool is_skew_indecomposable(const Permutation& sigma);

// --- insertion / reduction -------------------------------------------------

/// Rank-normalizes a word of distinct integers to a permutation.
Permutation reduce(std::span<const int> word);

/// Inserts value k at position j into a permutation of size n-1:
/// entries >= k are incremented, entries at positions >= j shift right.
/// Throws std::out_of_range unless 1 <= k <= n and 1 <= j <= n.
Permutation insert_value(const Permutation& pi, int k, int j);

/// Removes the entry at position j and reduces. Inverse of insert_value.
Permutation delete_position(const Permutation& sigma, int j);

}  // namespace schroeder
