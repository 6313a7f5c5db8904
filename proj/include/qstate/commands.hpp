#pragma once

// Subcommand implementations behind the `qstate` executable. Each takes
// parsed options and output streams and returns the process exit code.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qstate/bench.hpp"
#include "qstate/parallel.hpp"

namespace qstate::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerificationFailed = 2,
  kExitResourceRefusal = 3,
};

inline constexpr int kMaxPrintQubits = 10;
inline constexpr int kMaxVerifyQubits = 10;

enum class OutputMode { Auto, Full, Summary };

struct RunOptions {
  std::string qasmPath;
  index_t basisIndex = 0;
  bench::Precision precision = bench::Precision::Double;
  OutputMode mode = OutputMode::Auto;
  ExecPolicy policy{};
};

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err);

struct BenchOptions {
  bench::BenchConfig config{};
  /// Empty writes to `out`. Rows are appended; the header is written only
  /// when the file is new or empty.
  std::string csvPath;
};

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  int nbQubits = 6;
  std::size_t gatesPerTrial = 200;
  int trials = 20;
  std::uint64_t seed = 0;
  bench::Precision precision = bench::Precision::Double;
  ExecPolicy policy{};
};

struct VerifyReport {
  double maxDeviation = 0.0;
  double tolerance = 0.0;
  bool passed() const noexcept { return maxDeviation <= tolerance; }
};

/// 1e-12 in double precision, 1e-5 in single.
double oracle_tolerance(bench::Precision p);

/// Random full-vocabulary circuits from random states, kernels against the
/// reference simulator. Throws std::length_error beyond kMaxVerifyQubits.
VerifyReport verify_against_oracle(const VerifyOptions& opt);

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct QasmOptions {
  bench::Family family = bench::Family::Qft;
  int nbQubits = 1;
  int trotterSteps = bench::kDefaultTrotterSteps;
  std::uint64_t seed = 0;
  std::string outPath;  // empty: write to `out`
};

int cmd_qasm(const QasmOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace qstate::cli
