#pragma once

#include "schroeder/permutation.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

/// Raised when a construction is applied outside its declared domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// --- skew-indecomposable (1324,1423)-avoiders by position of 1 ----------------

enum class Prop31Branch {
  left_j,    // insert 1 at position ell; the old 1 sits at some j < ell
  adjacent,  // insert 2 at position ell + 1
  end,       // insert 2 at the last position
};

/// Builds a member of the size-n cell `ell` from tau of size n-1. For
/// left_j, tau must have its 1 at a position j < ell; otherwise at ell,
/// with ell < n - 1.
Permutation prop31_child(const Permutation& tau, int ell, Prop31Branch branch);

// --- (1423,2413)-avoiders with 1 before n, by position of n --------------------

/// Swaps positions k-1 and k, where k-1 is the position of n.
Permutation phi1(const Permutation& sigma);

/// sigma has its maximum n-1 at position k < n (sigma has size n-1, 1
/// before n-1); inserts n at position k.
Permutation phi2(const Permutation& sigma, int k);

/// sigma has size n-1, 1 before n-1, n-1 at position k-1. When n-1 is
/// last, inserts 1 at position n-1. Otherwise, with m the entry right of
/// n-1, rebuilds sigma = pi L1 1 L2 rho (n-1) m R into
/// pi' (m+1) rho' L1 1 L2 n m R, where pi, rho hold the entries above m
/// and primes mark entries raised by one.
Permutation phi3(const Permutation& sigma);

// --- (1324,2134)-avoiders by last entry -----------------------------------------

/// alpha: tau in A_{n-1, ell-1} (ell >= 4) to V_{n, ell}, the members
/// ending in ell whose second-to-last entry lies strictly between 1 and ell.
Permutation alpha(const Permutation& tau, int ell);

/// Every branch of alpha inserts its value at position n-1, so deleting
/// that position recovers tau.
Permutation alpha_inverse(const Permutation& sigma);

enum class AlphaCase { two_left_of_one, prefix_large_or_empty, prefix_min };

/// Which branch alpha takes on tau.
AlphaCase alpha_case(const Permutation& tau);

// --- (1243,1324)-avoiders with 1 before n, by distance --------------------------

enum class DistBranch {
  A_theta,  // size n-1, distance k-1 -> size n, distance k: n placed right after n-1
  A_tau,    // n-1 left of 1, distance k -> distance k+1 by relabelling
};

Permutation dist_step(const Permutation& sigma, DistBranch branch);

// --- exhaustive verification -------------------------------------------------------

enum class Construction { PROP31, PROP41, PROP51, PROP53 };

std::string_view to_string(Construction c);
std::optional<Construction> parse_construction(std::string_view name);

struct BranchCount {
  std::string branch;
  std::size_t size = 0;
};

/// Per target cell (statistic value k) breakdown.
struct CellReport {
  int k = 0;
  std::size_t target_size = 0;
  std::vector<BranchCount> branches;
  bool disjoint = true;
  bool covers = true;
};

struct BijectionReport {
  int n = 0;
  Construction construction = Construction::PROP31;
  /// Image size per branch, summed over cells.
  std::vector<BranchCount> image_sizes;
  std::size_t target_size = 0;
  bool injective = true;
  bool disjoint = true;
  bool covers_target = true;
  /// Branch-specific structural claims (markers, dispatch predicates).
  bool markers_hold = true;
  std::vector<std::string> witnesses;  // at most 3
  std::vector<CellReport> cells;

  bool passed() const { return injective && disjoint && covers_target && markers_hold; }
  std::size_t image_total() const;
};

inline constexpr std::size_t kMaxWitnesses = 3;

/// Checks every target cell of size n: branches are injective, their images
/// are pairwise disjoint, and together they equal the oracle's target set.
/// Failures are recorded in the report, never thrown. Requires
/// 3 <= n <= max_n.
BijectionReport verify_partition(int n, Construction construction, int max_n = 10);

}  // namespace schroeder
