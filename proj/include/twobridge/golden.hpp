#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Reference tables for the census of 2-bridge knots up to 16 crossings,
// transcribed once and kept as data so verification stays independent of
// the code under test.
//
//   table 1: closed-form knot counts by crossing number c = 3..16
//   table 2: |U^{m,n}| for the tabulated presentation families
//   table 3: knots per (m, n, c), c up to 28
//   table 4: knots per (m, c) for c <= 16
//   table 5: the knots of up to 8 crossings with presentations and DT codes

namespace twobridge::golden {

struct Table1Row {
  int c;
  int64_t reflections_distinct;  // knots counting mirror images separately
  int64_t achiral;
  int64_t total;                 // knot and mirror counted once
};

std::span<const Table1Row> table1();
extern const int64_t kTable1TotalReflectionsDistinct;  // 11007
extern const int64_t kTable1TotalAchiral;              // 85
extern const int64_t kTable1Total;                     // 5546

struct Table2Cell {
  int m, n;
  int64_t count;
};
struct Table2RowTotal {
  int m;
  int64_t total;  // TK^m
};
struct Table2ColTotal {
  int n;
  int64_t total;
};

std::span<const Table2Cell> table2();
std::span<const Table2RowTotal> table2_row_totals();
std::span<const Table2ColTotal> table2_col_totals();
extern const int64_t kTable2GrandTotal;  // 598964

// Counts for c = first_c..first_c + values.size() - 1; every printed cell in
// a row is contiguous (the band is exactly m - n + 1 <= c <= m).
struct Table3Row {
  int m, n;
  int first_c;
  std::vector<int64_t> values;
};

const std::vector<Table3Row>& table3();
std::span<const int64_t> table3_totals();  // per c = 3..28

struct Table4Row {
  int m;
  int first_c;
  std::vector<int64_t> values;
  int64_t row_total;
};

const std::vector<Table4Row>& table4();
std::span<const int64_t> table4_knots_per_c();  // TK_c for c = 3..16

struct Table5Row {
  const char* name;  // knot name in the alternating tables, e.g. "6a3"
  int m, n;
  std::vector<int64_t> a;
  std::vector<int64_t> dt;
};

const std::vector<Table5Row>& table5();

}  // namespace twobridge::golden
