#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "twobridge/classify.hpp"
#include "twobridge/dtcode.hpp"
#include "twobridge/enumerate.hpp"

namespace twobridge {

// Closed-form counts of 2-bridge knots with c crossings.
struct TwoBridgeCount {
  int64_t reflections_distinct = 0;  // knot and mirror counted separately
  int64_t achiral = 0;
  int64_t total = 0;                 // knot and mirror counted once
};

// Evaluates the classical three-branch formulas; c >= 3, divisions exact.
TwoBridgeCount ernst_sumners(int c);

// Exact counts keyed by (m, n, c), merged by pointwise addition, so any
// partition of the work and any merge order gives the same table.
class CensusTable {
 public:
  struct Cell {
    int64_t count = 0;
    int64_t achiral = 0;

    bool operator==(const Cell&) const = default;
  };
  using Key = std::tuple<int64_t, int64_t, int64_t>;  // (m, n, c)

  void add(int64_t m, int64_t n, int64_t c, bool achiral);
  void merge(const CensusTable& other);

  int64_t count(int64_t m, int64_t n, int64_t c) const;
  int64_t total_mn(int64_t m, int64_t n) const;      // sum over c
  int64_t total_cm(int64_t c, int64_t m) const;      // sum over n
  int64_t total_c(int64_t c) const;                  // sum over m, n
  int64_t achiral_total_c(int64_t c) const;
  int64_t grand_total() const;

  const std::map<Key, Cell>& cells() const { return cells_; }

  bool operator==(const CensusTable&) const = default;

 private:
  std::map<Key, Cell> cells_;
};

// Called once per clique representative; when the census runs on a worker
// pool this is invoked concurrently, so implementations must be
// thread-safe.
class CensusObserver {
 public:
  virtual ~CensusObserver() = default;
  virtual void on_representative(const UmnSpec& spec,
                                 std::span<const int64_t> a,
                                 const TwoBridgeClass& cls) = 0;
};

// Enumerates and classifies every presentation family with m up to the
// census bound for max_c (the full tabulated triangle, including families
// whose knots all have more than max_c crossings). Internal invariants are
// checked per representative; a breach throws std::logic_error naming the
// offending presentation. threads = 0 picks the hardware count.
CensusTable run_census(int max_c, unsigned threads = 0,
                       CensusObserver* observer = nullptr);

struct CensusRecord {
  int64_t m = 0, n = 0;
  std::vector<int64_t> a;
  int64_t alpha = 0;
  int64_t beta = 0;  // smallest member of the chiral orbit
  int64_t c = 0;
  bool achiral = false;
  std::vector<int64_t> dt;
};

// Records of U^{m,n} in emission order, with DT codes.
std::vector<CensusRecord> census_records(const UmnSpec& spec);

enum class RecordFormat { jsonl, csv, dt };

RecordFormat parse_record_format(const std::string& name);
void write_record(std::ostream& out, const CensusRecord& rec, RecordFormat format);
// Writes the csv header before the rows when the format asks for one.
void write_records(std::ostream& out, std::span<const CensusRecord> recs,
                   RecordFormat format);

struct VerifyReport {
  int table = 0;
  int64_t cells_checked = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Cell-by-cell comparison against the embedded reference tables. Table 1
// needs no census; pass the table produced by run_census(16) for the rest.
VerifyReport verify_table(int table_id, const CensusTable& census);
VerifyReport verify_table1();

}  // namespace twobridge
