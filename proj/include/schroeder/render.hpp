#pragma once

#include "schroeder/series.hpp"
#include "schroeder/triangle.hpp"
#include "schroeder/verify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schroeder {

enum class OutputFormat { plain, csv, json, bfile };

std::optional<OutputFormat> parse_format(std::string_view name);

/// plain: aligned rows with a sum column.
/// csv:   header `n,k,value`, one line per cell.
/// json:  {"table": id, "rows": [{"n", "k_min", "entries", "sum"}]} with
///        integers written as bare literals.
/// bfile: `index value` lines, row-major, index starting at 1.
std::string render_triangle(const Triangle& t, int table_id, OutputFormat format);

/// Nonzero coefficients with their exponent vectors. A series without
/// markers in bfile form is written `exponent value` for every power
/// 0..order; anything else gets a running 1-based index.
std::string render_series(const TruncatedSeries& s, FormulaId id, OutputFormat format);

/// Marker names of a formula, e.g. {"u"} or {"t", "s"}.
std::vector<std::string> marker_names(FormulaId id);

/// One `PASS name` / `FAIL name: detail` line per check, then a summary.
std::string render_checks(const std::vector<CheckResult>& checks);

}  // namespace schroeder
