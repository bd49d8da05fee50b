#pragma once

// Printed triangles, transcribed cell by cell. Rows start at n_min and
// each row starts at the layout's first column.

#include "schroeder/triangle.hpp"

#include <string>
#include <vector>

namespace golden {

struct Table {
  int id;
  int n_min;
  int k_min;
  std::vector<std::vector<long>> rows;
};

inline const std::vector<Table>& tables() {
  static const std::vector<Table> t{
      {1, 1, 1,
       {{1},
        {1, 1},
        {2, 2, 2},
        {6, 5, 5, 6},
        {22, 16, 14, 16, 22},
        {90, 60, 47, 47, 60, 90},
        {394, 248, 180, 162, 180, 248, 394},
        {1806, 1092, 752, 629, 629, 752, 1092, 1806}}},
      // Column headers read 2..8; the cells are distances 1..n-1.
      {2, 2, 1,
       {{1},
        {2, 1},
        {5, 4, 2},
        {16, 13, 10, 6},
        {60, 46, 37, 32, 22},
        {248, 180, 140, 125, 120, 90},
        {1092, 760, 567, 490, 480, 496, 394}}},
      {3, 1, 1,
       {{1},
        {1},
        {2, 1},
        {4, 4, 3},
        {8, 12, 14, 11},
        {16, 32, 48, 56, 45},
        {32, 80, 144, 208, 242, 197}}},
      {4, 2, 2,
       {{1},
        {1, 2},
        {1, 4, 6},
        {1, 6, 16, 22},
        {1, 8, 30, 68, 90},
        {1, 10, 48, 146, 304, 394},
        {1, 12, 70, 264, 714, 1412, 1806}}},
      {5, 1, 1,
       {{1},
        {1, 1},
        {2, 2, 2},
        {6, 6, 6, 4},
        {22, 22, 22, 16, 8},
        {90, 90, 90, 68, 40, 16},
        {394, 394, 394, 304, 192, 96, 32}}},
      {6, 2, 1,
       {{1},
        {1, 1},
        {2, 2, 2},
        {4, 4, 6, 6},
        {8, 8, 14, 20, 20},
        {16, 16, 30, 50, 70, 70},
        {32, 32, 62, 112, 182, 252, 252}}},
  };
  return t;
}

inline const Table& table(int id) { return tables().at(static_cast<std::size_t>(id - 1)); }

inline int n_max(const Table& t) { return t.n_min + static_cast<int>(t.rows.size()) - 1; }

inline const std::vector<long> kTable2RowSums{1, 3, 11, 45, 197, 903, 4279};

/// First cell where `t` disagrees with the printed table, or "" if none.
inline std::string mismatch(const Table& g, const schroeder::Triangle& t) {
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    const int n = g.n_min + static_cast<int>(i);
    for (std::size_t j = 0; j < g.rows[i].size(); ++j) {
      const int k = g.k_min + static_cast<int>(j);
      if (t.value(n, k) != g.rows[i][j])
        return "table " + std::to_string(g.id) + " (n=" + std::to_string(n) +
               ", k=" + std::to_string(k) + "): got " + t.value(n, k).get_str() + ", printed " +
               std::to_string(g.rows[i][j]);
    }
    // nothing outside the printed row
    if (t.has_row(n) && t.row(n).cells.size() != g.rows[i].size())
      return "table " + std::to_string(g.id) + " row " + std::to_string(n) + " has " +
             std::to_string(t.row(n).cells.size()) + " cells";
  }
  return "";
}

}  // namespace golden
