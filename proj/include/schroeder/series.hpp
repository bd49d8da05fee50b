#pragma once

#include "schroeder/triangle.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

using Rational = mpq_class;

/// Variable roles: the size variable x and up to two marker variables
/// (u or t in one-marker formulas; t and s in the three-variable one).
enum class Var { x, marker1, marker2 };

struct Exponents {
  int x = 0;
  int m1 = 0;
  int m2 = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
  std::string to_string() const;
};

/// Inclusive per-variable truncation bounds.
struct Bounds {
  int x = 0;
  int m1 = 0;
  int m2 = 0;

  bool contains(const Exponents& e) const {
    return e.x >= 0 && e.m1 >= 0 && e.m2 >= 0 && e.x <= x && e.m1 <= m1 && e.m2 <= m2;
  }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

Bounds min_bounds(const Bounds& a, const Bounds& b);

class SeriesError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Element of Q[x, m1, m2] / (x^{X+1}, m1^{M1+1}, m2^{M2+1}), stored densely.
class TruncatedSeries {
public:
  explicit TruncatedSeries(Bounds bounds);

  static TruncatedSeries constant(const Rational& c, Bounds bounds);
  /// c times the monomial; zero if the monomial lies outside the bounds.
  static TruncatedSeries monomial(const Rational& c, Exponents e, Bounds bounds);
  static TruncatedSeries variable(Var v, Bounds bounds);

  const Bounds& bounds() const noexcept { return bounds_; }

  /// Throws std::out_of_range for exponents beyond the bounds; a zero
  /// return therefore always means a genuine zero coefficient.
  const Rational& coefficient(Exponents e) const;
  void set(Exponents e, const Rational& value);

  /// True when some operation dropped terms that crossed a marker bound.
  bool truncation_flag() const noexcept { return truncated_; }
  void mark_truncated() noexcept { truncated_ = true; }

  bool is_zero() const;
  /// Nonzero coefficients in lexicographic (x, m1, m2) order.
  std::vector<std::pair<Exponents, Rational>> terms() const;

  /// Same coefficients with tighter bounds.
  TruncatedSeries restricted(Bounds b) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

private:
  std::size_t index(const Exponents& e) const;

  Bounds bounds_;
  std::vector<Rational> coeffs_;
  bool truncated_ = false;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// num / den by order-by-order recursion. Throws SeriesError
/// "non-invertible denominator" when den has a zero constant term.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

/// Square root with constant term 1. Throws SeriesError "sqrt requires
/// unit constant term" unless a's constant term is 1.
TruncatedSeries series_sqrt(const TruncatedSeries& a);

/// Substitutes x -> x * marker: the x^n coefficient gains marker^n. Terms
/// pushed past the marker bound are dropped and the result is flagged.
TruncatedSeries scale_argument(const TruncatedSeries& a, Var marker);

/// Substitutes marker = 1 by summing over the marker degree; the result has
/// that marker's bound set to 0.
TruncatedSeries at_one(const TruncatedSeries& a, Var marker);

/// Exact division by a single marker variable: shifts every term down one
/// marker degree. Throws SeriesError if a term has marker degree 0. The
/// marker bound drops by one.
TruncatedSeries divide_by_marker(const TruncatedSeries& a, Var marker);

/// Re-embeds a series whose `marker` bound is 0 (for instance the output of
/// at_one) into a ring where that marker runs up to `bound`.
TruncatedSeries lift_marker(const TruncatedSeries& a, Var marker, int bound);

struct IdentityCheck {
  bool equal = true;
  std::optional<Exponents> first_mismatch;
};

/// Compares coefficients over the common bounds in lexicographic order.
IdentityCheck check_identity(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// --- generating functions ----------------------------------------------------

enum class FormulaId {
  S,           // large Schroeder numbers
  G_SEP_POS1,  // separable, position of 1            (marker1 = u)
  F_SEP_DIST,  // separable, 1 before n, distance      (marker1 = t)
  F_SEP_A,     // separable, a before n               (marker1 = t, marker2 = s)
  G_P31,       // skew-indecomposable (1324,1423)      (marker1 = u)
  G_COR42,     // (1423,2413), 1 before n, pos of n    (marker1 = t)
  H_P51,       // (1324,2134), last entry              (marker1 = u)
  G_CB,        // (1243,1324), 1 adj-left of n, first  (marker1 = u)
  LITTLE,      // little Schroeder numbers
};

std::string_view to_string(FormulaId id);
std::optional<FormulaId> parse_formula_id(std::string_view name);

/// Number of marker variables the formula uses (0, 1 or 2).
int marker_count(FormulaId id);

inline constexpr int kDefaultSeriesOrder = 12;
inline constexpr int kMaxSeriesOrder = 20;

/// Bounds {order, order, order} restricted to the markers `id` uses.
Bounds formula_bounds(FormulaId id, int order);

/// Evaluates the closed form by composing the series primitives. Requires
/// bounds.x >= 2.
TruncatedSeries paper_gf(FormulaId id, Bounds bounds);
inline TruncatedSeries paper_gf(FormulaId id, int order = kDefaultSeriesOrder) {
  return paper_gf(id, formula_bounds(id, order));
}

/// The Schroeder series S(x) on the given bounds (terms only in x).
TruncatedSeries schroeder_series(Bounds bounds);

/// Formula whose (x^n, marker1^k) coefficients give table `table_id`.
FormulaId table_formula(int table_id);

/// How a triangle column k maps to a marker1 exponent: directly (k) or
/// reflected (n - k). The separable distance formula counts distance k at
/// t^(n-k).
enum class MarkerIndexing { direct, reflected };

MarkerIndexing table_indexing(int table_id);

/// Reads cell (n, k) from the coefficient of x^n m1^k (or m1^(n-k)) over
/// `layout`. Throws SeriesError if a cell coefficient is not an integer.
Triangle coefficient_triangle(const TruncatedSeries& series, const RowLayout& layout,
                              int n_max, MarkerIndexing indexing = MarkerIndexing::direct);

/// Table `table_id` (1..6) through its generating function, n <= n_max.
Triangle table_series(int table_id, int n_max);

}  // namespace schroeder
