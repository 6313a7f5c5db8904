#include "qstate/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "qstate/circuit.hpp"
#include "qstate/oracle.hpp"
#include "qstate/qasm.hpp"

namespace qstate::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <Real T>
void print_state(const StateVector<T>& s, bool full, std::ostream& out) {
  out << std::setprecision(17);
  if (full) {
    for (index_t j = 0; j < s.size(); ++j) {
      out << j << ' ' << s[j].real() << ' ' << s[j].imag() << '\n';
    }
    return;
  }
  out << "norm " << norm(s) << '\n';
  const std::size_t shown = std::min<std::size_t>(8, s.size());
  std::vector<index_t> order(s.size());
  std::iota(order.begin(), order.end(), index_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(shown),
                    order.end(), [&](index_t a, index_t b) {
                      const auto ma = std::abs(s[a]);
                      const auto mb = std::abs(s[b]);
                      return ma != mb ? ma > mb : a < b;
                    });
  out << "index real imag magnitude\n";
  for (std::size_t k = 0; k < shown; ++k) {
    const index_t j = order[k];
    out << j << ' ' << s[j].real() << ' ' << s[j].imag() << ' ' << std::abs(s[j]) << '\n';
  }
}

template <Real T>
void run_circuit(const QuantumCircuit& c, const RunOptions& opt, bool full, std::ostream& out) {
  StateVector<T> s = basis_state<T>(c.nbQubits(), opt.basisIndex);
  simulate(c, s, opt.policy);
  print_state(s, full, out);
}

template <Real T>
double trial_deviation(const QuantumCircuit& c, const StateVector<double>& start,
                       const ExecPolicy& policy) {
  StateVector<T> s = state_cast<T>(start);
  simulate(c, s, policy);
  return max_abs_diff(s, oracle::reference_simulate(c, start));
}

}  // namespace

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  QuantumCircuit circ(1);
  try {
    circ = qasm::parse(read_file(opt.qasmPath));
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qasm::ParseError& e) {
    err << opt.qasmPath << ':' << e.what() << '\n';
    return kExitUsage;
  }

  const int n = circ.nbQubits();
  if (opt.basisIndex >= pow2(n)) {
    err << "error: basis index " << opt.basisIndex << " outside [0, " << pow2(n) << ")\n";
    return kExitUsage;
  }
  bool full = n <= kMaxPrintQubits;
  if (opt.mode == OutputMode::Summary) full = false;
  if (opt.mode == OutputMode::Full && n > kMaxPrintQubits) {
    err << "error: refusing to print all " << pow2(n) << " amplitudes of a " << n
        << "-qubit state; full output is limited to n <= " << kMaxPrintQubits << '\n';
    return kExitResourceRefusal;
  }
  try {
    bench::check_memory(n, opt.precision, bench::default_memory_budget());
  } catch (const bench::ResourceRefusal& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceRefusal;
  }
  if (opt.precision == bench::Precision::Single) {
    run_circuit<float>(circ, opt, full, out);
  } else {
    run_circuit<double>(circ, opt, full, out);
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  bool writeHeader = true;
  try {
    bench::BenchConfig cfg = opt.config;
    if (cfg.memoryBudget == 0) cfg.memoryBudget = bench::default_memory_budget();
    // Validate everything, memory included, before touching the output file.
    const int lowest = cfg.family == bench::Family::Tfxy ? 2 : 1;
    if (cfg.nMin < lowest || cfg.nMax < cfg.nMin || cfg.repetitions < 1 ||
        cfg.trotterSteps < 1) {
      err << "error: need " << lowest << " <= nMin <= nMax, reps >= 1 and steps >= 1\n";
      return kExitUsage;
    }
    bench::check_memory(cfg.nMax, cfg.precision, cfg.memoryBudget);

    if (!opt.csvPath.empty()) {
      std::error_code ec;
      writeHeader = !std::filesystem::exists(opt.csvPath, ec) ||
                    std::filesystem::file_size(opt.csvPath, ec) == 0;
      file.open(opt.csvPath, std::ios::app);
      if (!file) {
        err << "error: cannot open '" << opt.csvPath << "' for writing\n";
        return kExitUsage;
      }
      sink = &file;
    }
    if (writeHeader) *sink << bench::csv_header() << '\n';
    bench::run_benchmark(cfg, [&](const bench::TimingRecord& r) {
      *sink << bench::csv_row(r) << '\n';
      sink->flush();
    });
  } catch (const bench::ResourceRefusal& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceRefusal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!*sink) {
    err << "error: failed writing benchmark output\n";
    return kExitUsage;
  }
  return kExitOk;
}

double oracle_tolerance(bench::Precision p) {
  return p == bench::Precision::Single ? 1e-5 : 1e-12;
}

VerifyReport verify_against_oracle(const VerifyOptions& opt) {
  if (opt.nbQubits > kMaxVerifyQubits) {
    throw std::length_error("verification is limited to n <= " +
                            std::to_string(kMaxVerifyQubits) +
                            " because the reference simulator cost grows with the full state");
  }
  if (opt.nbQubits < 1 || opt.trials < 1) {
    throw std::invalid_argument("need n >= 1 and trials >= 1");
  }
  VerifyReport report;
  report.tolerance = oracle_tolerance(opt.precision);
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    const QuantumCircuit c = random_circuit(opt.nbQubits, opt.gatesPerTrial, rng);
    const StateVector<double> start = random_state<double>(opt.nbQubits, rng);
    const double dev = opt.precision == bench::Precision::Single
                           ? trial_deviation<float>(c, start, opt.policy)
                           : trial_deviation<double>(c, start, opt.policy);
    report.maxDeviation = std::max(report.maxDeviation, dev);
  }
  return report;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  VerifyReport report;
  try {
    report = verify_against_oracle(opt);
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceRefusal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << std::setprecision(6) << "n=" << opt.nbQubits << " trials=" << opt.trials
      << " gates=" << opt.gatesPerTrial << " precision=" << bench::to_string(opt.precision)
      << '\n'
      << "max deviation " << std::scientific << report.maxDeviation << " (tolerance "
      << report.tolerance << ")\n"
      << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_qasm(const QasmOptions& opt, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = qasm::emit(bench::build_family(opt.family, opt.nbQubits, opt.trotterSteps, opt.seed));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (opt.outPath.empty()) {
    out << text;
    return out ? kExitOk : kExitUsage;
  }
  std::ofstream file(opt.outPath, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << opt.outPath << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace qstate::cli
