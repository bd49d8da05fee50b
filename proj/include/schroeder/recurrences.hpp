#pragma once

#include "schroeder/triangle.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace schroeder {

/// Recurrence-defined triangles.
///   p31        skew-indecomposable (1324,1423)-avoiders by position of 1
///   p41        (1423,2413)-avoiders, 1 before n, by position of n
///   p51        (1324,2134)-avoiders by last entry
///   t_lemmas   (1243,1324)-avoiders with 1 adjacent-left of n, by first entry
///   p53_rec    (1243,1324)-avoiders, 1 before n, by distance (recurrence)
///   p53_closed same triangle from the binomial closed form
enum class RecurrenceId { p31, p41, p51, t_lemmas, p53_rec, p53_closed };

std::string_view to_string(RecurrenceId id);
std::optional<RecurrenceId> parse_recurrence_id(std::string_view name);

RowLayout recurrence_layout(RecurrenceId id);

/// Printed table fed by a recurrence (3..6), or nullopt for p53_*.
std::optional<int> recurrence_table(RecurrenceId id);
std::optional<RecurrenceId> table_recurrence(int table_id);

/// Rows up to n_max over the recurrence's own layout. Throws
/// std::invalid_argument when n_max is below the base-case floor
/// (1 for p31, 2 otherwise).
Triangle triangle_by_recurrence(RecurrenceId id, int n_max);

/// C(2n-k-3, n-2) for n >= 2, 1 <= k <= n-1; std::out_of_range otherwise.
BigInt closed_form_dist(int n, int k);

BigInt binomial(long n, long k);

}  // namespace schroeder
