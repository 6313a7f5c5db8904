// qstate: run, benchmark and verify state-vector circuit simulations.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qstate/commands.hpp"

namespace {

using qstate::bench::Family;
using qstate::bench::Precision;

struct Common {
  std::string precision = "double";
  std::string threads = "max";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--precision", c.precision, "Amplitude precision: single or double")
      ->check(CLI::IsMember({"single", "double"}))
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads, or max for hardware concurrency")
      ->check(CLI::IsMember({"max"}) | CLI::PositiveNumber)
      ->capture_default_str();
}

Precision precision_of(const Common& c) { return *qstate::bench::parse_precision(c.precision); }

qstate::ExecPolicy policy_of(const Common& c) {
  qstate::ExecPolicy p;
  p.threads = c.threads == "max" ? 0 : std::stoi(c.threads);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-vector quantum circuit simulator"};
  app.require_subcommand(1);

  // run
  Common runCommon;
  qstate::cli::RunOptions runOpt;
  std::string runMode = "auto";
  auto* run = app.add_subcommand("run", "Simulate an openQASM 2.0 file from a basis state");
  run->add_option("file", runOpt.qasmPath, "openQASM 2.0 input")->required();
  run->add_option("--index", runOpt.basisIndex, "Initial basis-state index")->default_str("0");
  run->add_option("--mode", runMode, "Output: auto, full (n <= 10) or summary")
      ->check(CLI::IsMember({"auto", "full", "summary"}));
  add_common(run, runCommon);

  // bench
  Common benchCommon;
  qstate::cli::BenchOptions benchOpt;
  auto& cfg = benchOpt.config;
  auto* bench = app.add_subcommand("bench", "Time a circuit family over a qubit range, CSV out");
  std::string family;
  bench->add_option("--family", family, "Circuit family: qft or tfxy")
      ->check(CLI::IsMember({"qft", "tfxy"}))
      ->required();
  bench->add_option("--nmin", cfg.nMin, "Smallest qubit count")->required();
  bench->add_option("--nmax", cfg.nMax, "Largest qubit count")->required();
  bench->add_option("--reps", cfg.repetitions, "Repetitions per size (best is kept)")
      ->default_val(3);
  bench->add_option("--seed", cfg.seed, "Seed for TFXY rotation angles")->default_val(0);
  bench->add_option("--steps", cfg.trotterSteps, "TFXY Trotter steps")
      ->default_val(qstate::bench::kDefaultTrotterSteps);
  bench->add_option("--mem-budget", cfg.memoryBudget,
                    "Memory budget in bytes (0: 75% of available memory)")
      ->default_val(0);
  bench->add_option("--out", benchOpt.csvPath, "CSV file to append to (default: stdout)");
  add_common(bench, benchCommon);

  // verify
  Common verifyCommon;
  qstate::cli::VerifyOptions verifyOpt;
  auto* verify = app.add_subcommand("verify", "Check kernels against the reference simulator");
  verify->add_option("--n", verifyOpt.nbQubits, "Qubit count (<= 10)")->default_val(6);
  verify->add_option("--gates", verifyOpt.gatesPerTrial, "Gates per random circuit")
      ->default_val(200);
  verify->add_option("--trials", verifyOpt.trials, "Random circuits to check")->default_val(20);
  verify->add_option("--seed", verifyOpt.seed, "Random seed")->default_val(0);
  add_common(verify, verifyCommon);

  // qasm
  qstate::cli::QasmOptions qasmOpt;
  auto* qasm = app.add_subcommand("qasm", "Write a benchmark circuit as openQASM 2.0");
  qasm->require_subcommand(1);
  auto* emitQft = qasm->add_subcommand("emit-qft", "QFT circuit");
  emitQft->add_option("n", qasmOpt.nbQubits, "Qubit count")->required();
  emitQft->add_option("--out", qasmOpt.outPath, "Output file (default: stdout)");
  auto* emitTfxy = qasm->add_subcommand("emit-tfxy", "TFXY Trotter circuit");
  emitTfxy->add_option("n", qasmOpt.nbQubits, "Qubit count")->required();
  emitTfxy->add_option("steps", qasmOpt.trotterSteps, "Trotter steps")->required();
  emitTfxy->add_option("--seed", qasmOpt.seed, "Seed for rotation angles")->default_val(0);
  emitTfxy->add_option("--out", qasmOpt.outPath, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qstate::cli::kExitUsage;
  }

  try {
    if (run->parsed()) {
      runOpt.precision = precision_of(runCommon);
      runOpt.policy = policy_of(runCommon);
      runOpt.mode = runMode == "full"      ? qstate::cli::OutputMode::Full
                    : runMode == "summary" ? qstate::cli::OutputMode::Summary
                                           : qstate::cli::OutputMode::Auto;
      return qstate::cli::cmd_run(runOpt, std::cout, std::cerr);
    }
    if (bench->parsed()) {
      cfg.family = *qstate::bench::parse_family(family);
      cfg.precision = precision_of(benchCommon);
      cfg.policy = policy_of(benchCommon);
      return qstate::cli::cmd_bench(benchOpt, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      verifyOpt.precision = precision_of(verifyCommon);
      verifyOpt.policy = policy_of(verifyCommon);
      return qstate::cli::cmd_verify(verifyOpt, std::cout, std::cerr);
    }
    qasmOpt.family = emitTfxy->parsed() ? Family::Tfxy : Family::Qft;
    return qstate::cli::cmd_qasm(qasmOpt, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qstate::cli::kExitUsage;
  }
}
