#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with in-memory streams.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weavekh/gaussfit.hpp"
#include "weavekh/hecke.hpp"

namespace weavekh::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Command { kJones, kKh, kBetti, kFit, kTable, kSignature, kVerify };
enum class Format { kText, kJson, kCsv };
/// Which count the table's dim_H01 column reports.
enum class H01Convention { kPaired, kFull };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitContract = 3,
  kExitVerifyFailed = 4,
};

struct RunConfig {
  Command command = Command::kJones;
  int n = 0;
  int p = 0;
  int q = 0;
  int residue = 1;
  int start = 0;
  int end = 0;
  int n_max = 8;
  Format format = Format::kText;
  std::string out_path;
  std::string density_path;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool no_meta = false;
  bool check_diagram = false;
  bool inject_fault = false;
  H01Convention h01 = H01Convention::kPaired;
};

struct TableRow {
  int n = 0;
  BigInt total;
  BigInt h01;
  BigInt h01_paired;
  std::optional<gaussfit::GaussianFit> fit;  // empty when the line is too short to fit
};

/// Jones -> Khovanov -> normalized Betti line -> fit, for one coefficient row.
TableRow compute_row(const hecke::HeckeCoeffs& row);

/// Rows n = start, start+3, ..., <= end. Hecke rows are produced sequentially
/// and handed to `threads` workers; output order is always ascending n.
std::vector<TableRow> compute_table(int start, int end, unsigned threads);

std::string table_csv(const std::vector<TableRow>& rows, H01Convention h01, bool meta);

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
};

/// Oracle and structural checks up to n_max; `inject_fault` corrupts one
/// recursion row so the harness itself can be tested.
std::vector<CheckResult> run_verify(int n_max, bool inject_fault);

/// Resolved worker count: WEAVEKH_THREADS, else `requested`, else hardware.
unsigned resolve_threads(unsigned requested);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weavekh::cli
