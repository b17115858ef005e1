#include "twobridge/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twobridge/golden.hpp"

namespace twobridge {

TwoBridgeCount ernst_sumners(int c) {
  if (c < 3) throw std::invalid_argument("counts are defined for c >= 3");
  TwoBridgeCount out;
  int64_t pow_c2 = int64_t{1} << (c - 2);  // 2^(c-2)
  if (c % 2 == 0) {
    out.reflections_distinct = (pow_c2 - 1) / 3;
  } else if (c % 4 == 1) {
    out.reflections_distinct = (pow_c2 + (int64_t{1} << ((c - 1) / 2))) / 3;
  } else {  // c = 3 (mod 4)
    out.reflections_distinct = (pow_c2 + (int64_t{1} << ((c - 1) / 2)) + 2) / 3;
  }
  if (c % 4 == 0) {
    out.achiral = ((int64_t{1} << ((c - 2) / 2)) + 1) / 3;
  } else if (c % 4 == 2) {
    out.achiral = ((int64_t{1} << ((c - 2) / 2)) - 1) / 3;
  } else {
    out.achiral = 0;
  }
  out.total = (out.reflections_distinct + out.achiral) / 2;
  return out;
}

void CensusTable::add(int64_t m, int64_t n, int64_t c, bool achiral) {
  Cell& cell = cells_[{m, n, c}];
  ++cell.count;
  if (achiral) ++cell.achiral;
}

void CensusTable::merge(const CensusTable& other) {
  for (const auto& [key, cell] : other.cells_) {
    Cell& mine = cells_[key];
    mine.count += cell.count;
    mine.achiral += cell.achiral;
  }
}

int64_t CensusTable::count(int64_t m, int64_t n, int64_t c) const {
  auto it = cells_.find({m, n, c});
  return it == cells_.end() ? 0 : it->second.count;
}

int64_t CensusTable::total_mn(int64_t m, int64_t n) const {
  int64_t total = 0;
  for (auto it = cells_.lower_bound({m, n, 0});
       it != cells_.end() && std::get<0>(it->first) == m && std::get<1>(it->first) == n;
       ++it)
    total += it->second.count;
  return total;
}

int64_t CensusTable::total_cm(int64_t c, int64_t m) const {
  int64_t total = 0;
  for (const auto& [key, cell] : cells_)
    if (std::get<0>(key) == m && std::get<2>(key) == c) total += cell.count;
  return total;
}

int64_t CensusTable::total_c(int64_t c) const {
  int64_t total = 0;
  for (const auto& [key, cell] : cells_)
    if (std::get<2>(key) == c) total += cell.count;
  return total;
}

int64_t CensusTable::achiral_total_c(int64_t c) const {
  int64_t total = 0;
  for (const auto& [key, cell] : cells_)
    if (std::get<2>(key) == c) total += cell.achiral;
  return total;
}

int64_t CensusTable::grand_total() const {
  int64_t total = 0;
  for (const auto& [key, cell] : cells_) total += cell.count;
  return total;
}

namespace {

// Classification plus the per-representative sanity checks the census
// relies on. Throws std::logic_error naming the presentation on a breach.
TwoBridgeClass classify_checked(const UmnSpec& spec, std::span<const int64_t> a) {
  ConwaySequence p(std::vector<int64_t>(a.begin(), a.end()));
  TwoBridgeClass cls = knot_class(p);
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string(what) + " for presentation " + p.str());
  };
  if (cls.alpha % 2 == 0 || cls.alpha < 3) fail("even or small alpha");
  if (is_palindromic(p) != cls.achiral)
    fail("palindrome/achirality disagreement");
  if (cls.crossing_number < spec.m - spec.n + 1 || cls.crossing_number > spec.m)
    fail("crossing number outside [m-n+1, m]");
  return cls;
}

}  // namespace

CensusTable run_census(int max_c, unsigned threads, CensusObserver* observer) {
  if (max_c < 3 || max_c > 16)
    throw std::invalid_argument("census validated for 3 <= max_c <= 16");
  std::vector<UmnSpec> tasks = full_domain(max_c);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, tasks.size());

  std::vector<CensusTable> partials(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      const UmnSpec& spec = tasks[i];
      try {
        for_each_representative(spec, [&](std::span<const int64_t> a) {
          TwoBridgeClass cls = classify_checked(spec, a);
          partials[i].add(spec.m, spec.n, cls.crossing_number, cls.achiral);
          if (observer) observer->on_representative(spec, a, cls);
        });
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  CensusTable table;
  for (const CensusTable& partial : partials) table.merge(partial);
  return table;
}

std::vector<CensusRecord> census_records(const UmnSpec& spec) {
  std::vector<CensusRecord> records;
  for_each_representative(spec, [&](std::span<const int64_t> a) {
    TwoBridgeClass cls = classify_checked(spec, a);
    ConwaySequence p(std::vector<int64_t>(a.begin(), a.end()));
    CensusRecord rec;
    rec.m = spec.m;
    rec.n = spec.n;
    rec.a.assign(a.begin(), a.end());
    rec.alpha = cls.alpha;
    rec.beta = cls.beta_orbit_chiral.front();
    rec.c = cls.crossing_number;
    rec.achiral = cls.achiral;
    rec.dt = dt_from_presentation(p).evens();
    records.push_back(std::move(rec));
  });
  return records;
}

RecordFormat parse_record_format(const std::string& name) {
  if (name == "jsonl") return RecordFormat::jsonl;
  if (name == "csv") return RecordFormat::csv;
  if (name == "dt") return RecordFormat::dt;
  throw std::invalid_argument("unknown format '" + name + "' (jsonl, csv, dt)");
}

namespace {

std::string join(std::span<const int64_t> values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

void write_record(std::ostream& out, const CensusRecord& rec, RecordFormat format) {
  switch (format) {
    case RecordFormat::jsonl:
      // All fields are integers, arrays of integers, or booleans; emitted
      // directly in the documented key order.
      out << "{\"m\":" << rec.m << ",\"n\":" << rec.n << ",\"a\":["
          << join(rec.a, ',') << "],\"alpha\":" << rec.alpha
          << ",\"beta\":" << rec.beta << ",\"c\":" << rec.c
          << ",\"achiral\":" << (rec.achiral ? "true" : "false")
          << ",\"dt\":[" << join(rec.dt, ',') << "]}\n";
      break;
    case RecordFormat::csv:
      out << rec.m << ',' << rec.n << ",\"" << join(rec.a, ',') << "\","
          << rec.alpha << ',' << rec.beta << ',' << rec.c << ','
          << (rec.achiral ? "true" : "false") << ",\"" << join(rec.dt, ',')
          << "\"\n";
      break;
    case RecordFormat::dt:
      out << rec.m << ' ' << rec.n << ' ' << join(rec.a, ',') << ' '
          << join(rec.dt, ' ') << '\n';
      break;
  }
}

void write_records(std::ostream& out, std::span<const CensusRecord> recs,
                   RecordFormat format) {
  if (format == RecordFormat::csv) out << "m,n,a,alpha,beta,c,achiral,dt\n";
  for (const CensusRecord& rec : recs) write_record(out, rec, format);
}

namespace {

void expect(VerifyReport& report, int64_t got, int64_t want, std::string where) {
  ++report.cells_checked;
  if (got != want) {
    report.mismatches.push_back(std::move(where) + ": computed " +
                                std::to_string(got) + ", table says " +
                                std::to_string(want));
  }
}

VerifyReport verify_table2(const CensusTable& census) {
  VerifyReport report;
  report.table = 2;
  for (const auto& cell : golden::table2())
    expect(report, census.total_mn(cell.m, cell.n), cell.count,
           "m=" + std::to_string(cell.m) + " n=" + std::to_string(cell.n));
  for (const auto& row : golden::table2_row_totals()) {
    int64_t got = 0;
    for (int64_t n = 2; 2 * n <= row.m; n += 2) got += census.total_mn(row.m, n);
    expect(report, got, row.total, "row total m=" + std::to_string(row.m));
  }
  for (const auto& col : golden::table2_col_totals()) {
    int64_t got = 0;
    for (const auto& cell : golden::table2())
      if (cell.n == col.n) got += census.total_mn(cell.m, cell.n);
    expect(report, got, col.total, "column total n=" + std::to_string(col.n));
  }
  expect(report, census.grand_total(), golden::kTable2GrandTotal, "grand total");
  return report;
}

VerifyReport verify_table3(const CensusTable& census) {
  VerifyReport report;
  report.table = 3;
  for (const auto& row : golden::table3()) {
    // Printed cells, and zero everywhere else in the row.
    for (int c = 3; c <= row.m; ++c) {
      int64_t want = 0;
      if (c >= row.first_c && c < row.first_c + static_cast<int>(row.values.size()))
        want = row.values[static_cast<size_t>(c - row.first_c)];
      expect(report, census.count(row.m, row.n, c), want,
             "m=" + std::to_string(row.m) + " n=" + std::to_string(row.n) +
                 " c=" + std::to_string(c));
    }
  }
  auto totals = golden::table3_totals();
  for (size_t i = 0; i < totals.size(); ++i) {
    int64_t c = static_cast<int64_t>(i) + 3;
    expect(report, census.total_c(c), totals[i],
           "totals row c=" + std::to_string(c));
  }
  return report;
}

VerifyReport verify_table4(const CensusTable& census) {
  VerifyReport report;
  report.table = 4;
  for (const auto& row : golden::table4()) {
    for (int c = 3; c <= 16; ++c) {
      int64_t want = 0;
      if (c >= row.first_c && c < row.first_c + static_cast<int>(row.values.size()))
        want = row.values[static_cast<size_t>(c - row.first_c)];
      expect(report, census.total_cm(c, row.m), want,
             "m=" + std::to_string(row.m) + " c=" + std::to_string(c));
    }
    int64_t row_sum = 0;
    for (int c = 3; c <= 16; ++c) row_sum += census.total_cm(c, row.m);
    expect(report, row_sum, row.row_total, "row total m=" + std::to_string(row.m));
  }
  auto per_c = golden::table4_knots_per_c();
  int64_t grand = 0;
  for (size_t i = 0; i < per_c.size(); ++i) {
    int64_t c = static_cast<int64_t>(i) + 3;
    expect(report, census.total_c(c), per_c[i], "knots at c=" + std::to_string(c));
    grand += per_c[i];
  }
  expect(report, grand, golden::kTable1Total, "grand total");
  return report;
}

}  // namespace

VerifyReport verify_table1() {
  VerifyReport report;
  report.table = 1;
  int64_t sum_rd = 0, sum_ach = 0, sum_total = 0;
  for (const auto& row : golden::table1()) {
    TwoBridgeCount got = ernst_sumners(row.c);
    expect(report, got.reflections_distinct, row.reflections_distinct,
           "reflections-distinct count at c=" + std::to_string(row.c));
    expect(report, got.achiral, row.achiral,
           "achiral count at c=" + std::to_string(row.c));
    expect(report, got.total, row.total, "knot count at c=" + std::to_string(row.c));
    sum_rd += got.reflections_distinct;
    sum_ach += got.achiral;
    sum_total += got.total;
  }
  expect(report, sum_rd, golden::kTable1TotalReflectionsDistinct,
         "reflections-distinct total");
  expect(report, sum_ach, golden::kTable1TotalAchiral, "achiral total");
  expect(report, sum_total, golden::kTable1Total, "knot total");
  return report;
}

VerifyReport verify_table(int table_id, const CensusTable& census) {
  switch (table_id) {
    case 1: return verify_table1();
    case 2: return verify_table2(census);
    case 3: return verify_table3(census);
    case 4: return verify_table4(census);
    default: throw std::invalid_argument("table id must be 1, 2, 3 or 4");
  }
}

}  // namespace twobridge
