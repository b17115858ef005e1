#include "twobridge/golden.hpp"

namespace twobridge::golden {

namespace {

const Table1Row kTable1[] = {
    {3, 2, 0, 1},      {4, 1, 1, 1},       {5, 4, 0, 2},
    {6, 5, 1, 3},      {7, 14, 0, 7},      {8, 21, 3, 12},
    {9, 48, 0, 24},    {10, 85, 5, 45},    {11, 182, 0, 91},
    {12, 341, 11, 176},{13, 704, 0, 352},  {14, 1365, 21, 693},
    {15, 2774, 0, 1387},{16, 5461, 43, 2752},
};

const Table2Cell kTable2[] = {
    {4, 2, 2},
    {6, 2, 2},
    {8, 2, 4},    {8, 4, 6},
    {10, 2, 4},   {10, 4, 16},
    {12, 2, 6},   {12, 4, 44},   {12, 6, 20},
    {14, 2, 6},   {14, 4, 80},   {14, 6, 96},
    {16, 2, 8},   {16, 4, 146},  {16, 6, 348},   {16, 8, 72},
    {18, 2, 8},   {18, 4, 224},  {18, 6, 896},   {18, 8, 512},
    {20, 2, 10},  {20, 4, 344},  {20, 6, 2040},  {20, 8, 2336},   {20, 10, 272},
    {22, 2, 10},  {22, 4, 480},  {22, 6, 4032},  {22, 8, 7680},   {22, 10, 2560},
    {24, 2, 12},  {24, 4, 670},  {24, 6, 7432},  {24, 8, 21200},  {24, 10, 14160},
    {24, 12, 1056},
    {26, 2, 12},  {26, 4, 880},  {26, 6, 12672}, {26, 8, 50688},  {26, 10, 56320},
    {26, 12, 12288},
    {28, 2, 14},  {28, 4, 1156}, {28, 6, 20652}, {28, 8, 109984}, {28, 10, 183280},
    {28, 12, 80064}, {28, 14, 4160},
};

const Table2RowTotal kTable2RowTotals[] = {
    {4, 2},      {6, 2},      {8, 10},     {10, 20},   {12, 70},
    {14, 182},   {16, 574},   {18, 1640},  {20, 5002}, {22, 14762},
    {24, 44530}, {26, 132860},{28, 399310},
};

const Table2ColTotal kTable2ColTotals[] = {
    {2, 98},      {4, 4046},   {6, 48188}, {8, 192472},
    {10, 256592}, {12, 93408}, {14, 4160},
};

const int64_t kTable3Totals[] = {
    1,     1,     2,     3,     7,      12,     24,    45,    91,
    176,   352,   693,   1387,  2752,   5496,   10866, 21082, 38726,
    64760, 94008, 113480,109064,79456,  41056,  13344, 2080,
};

const int64_t kTable4KnotsPerC[] = {
    1, 1, 2, 3, 7, 12, 24, 45, 91, 176, 352, 693, 1387, 2752,
};

}  // namespace

std::span<const Table1Row> table1() { return kTable1; }
const int64_t kTable1TotalReflectionsDistinct = 11007;
const int64_t kTable1TotalAchiral = 85;
const int64_t kTable1Total = 5546;

std::span<const Table2Cell> table2() { return kTable2; }
std::span<const Table2RowTotal> table2_row_totals() { return kTable2RowTotals; }
std::span<const Table2ColTotal> table2_col_totals() { return kTable2ColTotals; }
const int64_t kTable2GrandTotal = 598964;

const std::vector<Table3Row>& table3() {
  static const std::vector<Table3Row> rows = {
      {4, 2, 3, {1, 1}},
      {6, 2, 5, {1, 1}},
      {8, 2, 7, {2, 2}},
      {8, 4, 5, {1, 2, 2, 1}},
      {10, 2, 9, {2, 2}},
      {10, 4, 7, {2, 6, 6, 2}},
      {12, 2, 11, {3, 3}},
      {12, 4, 9, {6, 16, 16, 6}},
      {12, 6, 7, {1, 3, 6, 6, 3, 1}},
      {14, 2, 13, {3, 3}},
      {14, 4, 11, {10, 30, 30, 10}},
      {14, 6, 9, {3, 15, 30, 30, 15, 3}},
      {16, 2, 15, {4, 4}},
      {16, 4, 13, {19, 54, 54, 19}},
      {16, 6, 11, {12, 54, 108, 108, 54, 12}},
      {16, 8, 9, {1, 4, 12, 19, 19, 12, 4, 1}},
      {18, 2, 17, {4, 4}},
      {18, 4, 15, {28, 84, 84, 28}},
      {18, 6, 13, {28, 140, 280, 280, 140, 28}},
      {18, 8, 11, {4, 28, 84, 140, 140, 84, 28, 4}},
      {20, 2, 19, {5, 5}},
      {20, 4, 17, {44, 128, 128, 44}},
      {20, 6, 15, {66, 318, 636, 636, 318, 66}},
      {20, 8, 13, {20, 128, 384, 636, 636, 384, 128, 20}},
      {20, 10, 11, {1, 5, 20, 44, 66, 66, 44, 20, 5, 1}},
      {22, 2, 21, {5, 5}},
      {22, 4, 19, {60, 180, 180, 60}},
      {22, 6, 17, {126, 630, 1260, 1260, 630, 126}},
      {22, 8, 15, {60, 420, 1260, 2100, 2100, 1260, 420, 60}},
      {22, 10, 13, {5, 45, 180, 420, 630, 630, 420, 180, 45, 5}},
      {24, 2, 23, {6, 6}},
      {24, 4, 21, {85, 250, 250, 85}},
      {24, 6, 19, {236, 1160, 2320, 2320, 1160, 236}},
      {24, 8, 17, {170, 1160, 3480, 5790, 5790, 3480, 1160, 170}},
      {24, 10, 15, {30, 250, 1000, 2320, 3480, 3480, 2320, 1000, 250, 30}},
      {24, 12, 13, {1, 6, 30, 85, 170, 236, 236, 170, 85, 30, 6, 1}},
      {26, 2, 25, {6, 6}},
      {26, 4, 23, {110, 330, 330, 110}},
      {26, 6, 21, {396, 1980, 3960, 3960, 1980, 396}},
      {26, 8, 19, {396, 2772, 8316, 13860, 13860, 8316, 2772, 396}},
      {26, 10, 17, {110, 990, 3960, 9240, 13860, 13860, 9240, 3960, 990, 110}},
      {26, 12, 15, {6, 66, 330, 990, 1980, 2772, 2772, 1980, 990, 330, 66, 6}},
      {28, 2, 27, {7, 7}},
      {28, 4, 25, {146, 432, 432, 146}},
      {28, 6, 23, {651, 3225, 6450, 6450, 3225, 651}},
      {28, 8, 21, {868, 6016, 18048, 30060, 30060, 18048, 6016, 868}},
      {28, 10, 19, {365, 3225, 12900, 30060, 45090, 45090, 30060, 12900, 3225, 365}},
      {28, 12, 17, {42, 432, 2160, 6450, 12900, 18048, 18048, 12900, 6450, 2160, 432, 42}},
      {28, 14, 15, {1, 7, 42, 146, 365, 651, 868, 868, 651, 365, 146, 42, 7, 1}},
  };
  return rows;
}

std::span<const int64_t> table3_totals() { return kTable3Totals; }

const std::vector<Table4Row>& table4() {
  static const std::vector<Table4Row> rows = {
      {4, 3, {1, 1}, 2},
      {6, 5, {1, 1}, 2},
      {8, 5, {1, 2, 4, 3}, 10},
      {10, 7, {2, 6, 8, 4}, 20},
      {12, 7, {1, 3, 12, 22, 22, 10}, 70},
      {14, 9, {3, 15, 40, 60, 48, 16}, 182},
      {16, 9, {1, 4, 24, 73, 146, 174, 116, 36}, 574},
      {18, 11, {4, 28, 112, 280, 448, 448}, 1320},
      {20, 11, {1, 5, 40, 172, 516, 1020}, 1754},
      {22, 13, {5, 45, 240, 840}, 1130},
      {24, 13, {1, 6, 60, 335}, 402},
      {26, 15, {6, 66}, 72},
      {28, 15, {1, 7}, 8},
  };
  return rows;
}

std::span<const int64_t> table4_knots_per_c() { return kTable4KnotsPerC; }

const std::vector<Table5Row>& table5() {
  static const std::vector<Table5Row> rows = {
      {"3a1", 4, 2, {2, -2}, {6, -8, 2, -4}},
      {"4a1", 4, 2, {2, 2}, {6, 8, 2, 4}},
      {"5a1", 6, 2, {4, -2}, {10, 8, -12, 4, 2, -6}},
      {"5a2", 8, 4, {2, -2, 2, -2}, {12, 8, -16, 4, -14, 2, -10, -6}},
      {"6a1", 8, 4, {2, -2, -2, 2}, {12, -8, 16, -4, -14, 2, -10, 6}},
      {"6a2", 8, 4, {2, 2, -2, 2}, {12, -8, 16, -4, 14, 2, 10, 6}},
      {"6a3", 6, 2, {4, 2}, {10, 8, 12, 4, 2, 6}},
      {"7a1", 8, 4, {2, 2, -2, -2}, {12, -8, -16, -4, 14, 2, 10, -6}},
      {"7a2", 8, 4, {2, 2, 2, -2}, {12, 8, -16, 4, 14, 2, 10, -6}},
      {"7a3", 10, 4, {2, -2, 4, -2}, {16, 12, 10, -20, 6, 4, -18, 2, -14, -8}},
      {"7a4", 8, 2, {6, -2}, {14, 12, 10, -16, 6, 4, 2, -8}},
      {"7a5", 10, 4, {4, -2, 2, -2}, {16, 14, 10, -20, 6, -18, 4, 2, -12, -8}},
      {"7a6", 8, 2, {4, -4}, {12, 10, -16, -14, 4, 2, -8, -6}},
      {"7a7", 12, 6, {2, -2, 2, -2, 2, -2},
       {18, 14, 10, -24, 6, -22, 4, -20, 2, -16, -12, -8}},
      {"8a1", 10, 4, {2, 2, -4, 2}, {16, -12, -10, 20, -6, -4, 18, 2, 14, 8}},
      {"8a4", 10, 4, {2, -2, -4, 2}, {16, -12, -10, 20, -6, -4, -18, 2, -14, 8}},
      {"8a5", 8, 4, {2, 2, 2, 2}, {12, 8, 16, 4, 14, 2, 10, 6}},
      {"8a6", 12, 6, {2, -2, 2, -2, -2, 2},
       {18, 14, -10, 24, -6, -22, 4, -20, 2, -16, -12, 8}},
      {"8a7", 10, 4, {4, -2, -2, 2}, {16, 14, -10, 20, -6, -18, 4, 2, -12, 8}},
      {"8a8", 12, 6, {2, 2, -2, 2, -2, 2},
       {18, -14, -10, 24, -6, 22, -4, 20, 2, 16, 12, 8}},
      {"8a9", 10, 4, {4, -2, 2, 2}, {16, 14, 10, 20, 6, -18, 4, 2, -12, 8}},
      {"8a10", 10, 4, {2, 4, -2, 2}, {14, -8, 20, -4, 18, 16, 2, 12, 10, 6}},
      {"8a11", 8, 2, {6, 2}, {14, 12, 10, 16, 6, 4, 2, 8}},
      {"8a16", 12, 6, {2, -2, 2, 2, -2, 2},
       {18, 14, -10, 24, -6, 22, 4, -20, 2, -16, 12, 8}},
      {"8a17", 10, 4, {4, 2, -2, 2}, {16, 14, -10, 20, -6, 18, 4, 2, 12, 8}},
      {"8a18", 8, 2, {4, 4}, {12, 10, 16, 14, 4, 2, 8, 6}},
  };
  return rows;
}

}  // namespace twobridge::golden
