// Command-line front end for the 2-bridge knot census library.
//
//   twobridge enumerate --m M --n N [--format F]   representatives of U^{m,n}
//   twobridge dtcode --a LIST                      DT code of one presentation
//   twobridge classify --a LIST                    S(alpha,beta) class data
//   twobridge census --max-crossings C [...]       run the census
//   twobridge verify --table {1,2,3,4}             check against the tables
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
// invariant breach.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "twobridge/census.hpp"
#include "twobridge/golden.hpp"

namespace {

using namespace twobridge;

int cmd_enumerate(int64_t m, int64_t n, const std::string& format) {
  UmnSpec spec{m, n};
  if (!valid_umn(spec)) {
    std::cerr << "need even m, n with 4 <= 2n <= m\n";
    return 2;
  }
  auto records = census_records(spec);
  write_records(std::cout, records, parse_record_format(format));
  return 0;
}

int cmd_dtcode(const std::string& a) {
  ConwaySequence p = ConwaySequence::parse(a);
  std::cout << dt_from_presentation(p).str() << "\n";
  return 0;
}

int cmd_classify(const std::string& a) {
  ConwaySequence p = ConwaySequence::parse(a);
  TwoBridgeClass cls = knot_class(p);
  auto join = [](const std::vector<int64_t>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
    return out;
  };
  std::cout << "{\"a\":[" << p.str() << "],\"alpha\":" << cls.alpha
            << ",\"beta\":" << cls.beta_orbit_chiral.front()
            << ",\"beta_orbit_chiral\":[" << join(cls.beta_orbit_chiral)
            << "],\"beta_orbit_full\":[" << join(cls.beta_orbit_full)
            << "],\"achiral\":" << (cls.achiral ? "true" : "false")
            << ",\"crossing_number\":" << cls.crossing_number << "}\n";
  return 0;
}

int cmd_census(int max_c, unsigned threads, const std::optional<std::string>& format,
               const std::optional<std::string>& out_path) {
  if (format || out_path) {
    RecordFormat fmt = parse_record_format(format.value_or("dt"));
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path) {
      file.open(*out_path, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << *out_path << " for writing\n";
        return 2;
      }
      out = &file;
    }
    if (fmt == RecordFormat::csv) *out << "m,n,a,alpha,beta,c,achiral,dt\n";
    int64_t written = 0;
    for (const UmnSpec& spec : full_domain(max_c)) {
      for (const CensusRecord& rec : census_records(spec)) {
        write_record(*out, rec, fmt);
        ++written;
      }
    }
    if (!*out) {
      std::cerr << "write failure\n";
      return 2;
    }
    if (out_path)
      std::cout << "wrote " << written << " records to " << *out_path << "\n";
    return 0;
  }

  CensusTable table = run_census(max_c, threads);
  std::cout << "presentation families: " << full_domain(max_c).size()
            << ", knot types: " << table.grand_total() << "\n";
  std::cout << "c      knots  achiral\n";
  int64_t knots = 0, achiral = 0;
  for (int c = 3; c <= max_c; ++c) {
    int64_t kc = table.total_c(c);
    int64_t ac = table.achiral_total_c(c);
    knots += kc;
    achiral += ac;
    std::cout << c << (c < 10 ? "      " : "     ") << kc << "  " << ac << "\n";
  }
  std::cout << "total  " << knots << "  " << achiral
            << "   (crossing numbers up to " << max_c << ")\n";
  return 0;
}

int cmd_verify(int table_id, unsigned threads) {
  VerifyReport report;
  if (table_id == 1) {
    report = verify_table1();
  } else {
    CensusTable census = run_census(16, threads);
    report = verify_table(table_id, census);
  }
  if (report.ok()) {
    std::cout << "table " << table_id << ": " << report.cells_checked
              << " cells match\n";
    return 0;
  }
  std::cerr << "table " << table_id << ": " << report.mismatches.size()
            << " mismatches\n";
  for (const auto& line : report.mismatches) std::cerr << "  " << line << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-bridge knot census: even Conway presentations, DT codes, "
               "S(alpha,beta) classification"};
  app.require_subcommand(1);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list U^{m,n} representatives");
  int64_t m = 0, n = 0;
  std::string enum_format = "dt";
  enumerate_cmd->add_option("--m", m, "total crossings of the presentation")->required();
  enumerate_cmd->add_option("--n", n, "number of twist regions")->required();
  enumerate_cmd->add_option("--format", enum_format, "jsonl, csv or dt (default dt)");

  auto* dtcode_cmd = app.add_subcommand("dtcode", "DT code of a presentation");
  std::string dt_a;
  dtcode_cmd->add_option("--a", dt_a, "sequence, e.g. 2,-2")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify a presentation");
  std::string classify_a;
  classify_cmd->add_option("--a", classify_a, "sequence, e.g. 2,-2")->required();

  auto* census_cmd = app.add_subcommand("census", "run the census");
  int max_c = 16;
  unsigned threads = 0;
  std::optional<std::string> census_format;
  std::optional<std::string> census_out;
  census_cmd->add_option("--max-crossings", max_c, "largest crossing number, 3..16")
      ->check(CLI::Range(3, 16));
  census_cmd->add_option("--format", census_format, "emit records: jsonl, csv or dt");
  census_cmd->add_option("--out", census_out, "write records to a file");
  census_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* verify_cmd = app.add_subcommand("verify", "compare against the reference tables");
  int table_id = 0;
  unsigned verify_threads = 0;
  verify_cmd->add_option("--table", table_id, "table to check: 1, 2, 3 or 4")
      ->required()
      ->check(CLI::Range(1, 4));
  verify_cmd->add_option("--threads", verify_threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly, bad usage is 2
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(m, n, enum_format);
    if (dtcode_cmd->parsed()) return cmd_dtcode(dt_a);
    if (classify_cmd->parsed()) return cmd_classify(classify_a);
    if (census_cmd->parsed())
      return cmd_census(max_c, threads, census_format, census_out);
    if (verify_cmd->parsed()) return cmd_verify(table_id, verify_threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
