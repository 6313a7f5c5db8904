#include "qstate/bench.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

namespace qstate::bench {

std::string_view to_string(Family f) { return f == Family::Qft ? "qft" : "tfxy"; }
std::string_view to_string(Precision p) { return p == Precision::Single ? "single" : "double"; }

std::optional<Family> parse_family(std::string_view s) {
  if (s == "qft") return Family::Qft;
  if (s == "tfxy") return Family::Tfxy;
  return std::nullopt;
}

std::optional<Precision> parse_precision(std::string_view s) {
  if (s == "single") return Precision::Single;
  if (s == "double") return Precision::Double;
  return std::nullopt;
}

std::uint64_t state_bytes(int n, Precision p) {
  const std::uint64_t amp = p == Precision::Single ? 8 : 16;
  if (n >= 60) return std::numeric_limits<std::uint64_t>::max();
  return amp << n;
}

namespace {

std::uint64_t available_memory() {
  std::ifstream meminfo("/proc/meminfo");
  std::string key;
  std::uint64_t kib = 0;
  std::string unit;
  while (meminfo >> key >> kib >> unit) {
    if (key == "MemAvailable:") return kib * 1024;
  }
  const long pages = sysconf(_SC_AVPHYS_PAGES);
  const long pageSize = sysconf(_SC_PAGESIZE);
  if (pages > 0 && pageSize > 0) {
    return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(pageSize);
  }
  return 0;
}

}  // namespace

std::uint64_t default_memory_budget() { return available_memory() / 4 * 3; }

ResourceRefusal::ResourceRefusal(std::uint64_t requiredBytes, std::uint64_t budgetBytes)
    : std::runtime_error("state vector needs an estimated " + std::to_string(requiredBytes) +
                         " bytes, exceeding the memory budget of " +
                         std::to_string(budgetBytes) + " bytes"),
      required_(requiredBytes),
      budget_(budgetBytes) {}

void check_memory(int n, Precision p, std::uint64_t budget) {
  const std::uint64_t need = state_bytes(n, p);
  if (need > budget) throw ResourceRefusal(need, budget);
}

QuantumCircuit build_family(Family family, int n, int trotterSteps, std::uint64_t seed) {
  if (family == Family::Qft) return build_qft(n);
  return build_tfxy_trotter(n, trotterSteps, seeded_angles(seed));
}

namespace {

template <Real T>
double best_time(const QuantumCircuit& c, int repetitions, const ExecPolicy& policy) {
  using clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  StateVector<T> s(c.nbQubits());
  for (int r = 0; r < repetitions; ++r) {
    std::fill(s.amplitudes().begin(), s.amplitudes().end(), std::complex<T>{});
    s[0] = T{1};
    const auto start = clock::now();
    simulate(c, s, policy);
    const auto stop = clock::now();
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  // Clamp to the clock tick so the record stays strictly positive.
  const double tick = std::chrono::duration<double>(clock::duration(1)).count();
  return std::max(best, tick);
}

}  // namespace

TimingRecord time_circuit(const QuantumCircuit& c, Family family, Precision precision,
                          int repetitions, const ExecPolicy& policy) {
  if (repetitions < 1) {
    throw std::invalid_argument("repetitions must be at least 1, got " +
                                std::to_string(repetitions));
  }
  TimingRecord r;
  r.family = family;
  r.nbQubits = c.nbQubits();
  r.precision = precision;
  r.repetitions = repetitions;
  r.gateCount = c.size();
  r.wallSeconds = precision == Precision::Single ? best_time<float>(c, repetitions, policy)
                                                 : best_time<double>(c, repetitions, policy);
  return r;
}

std::vector<TimingRecord> run_benchmark(const BenchConfig& cfg,
                                        const std::function<void(const TimingRecord&)>& onRecord) {
  const int lowest = cfg.family == Family::Tfxy ? 2 : 1;
  if (cfg.nMin < lowest || cfg.nMax < cfg.nMin) {
    throw std::invalid_argument("qubit range must satisfy " + std::to_string(lowest) +
                                " <= nMin <= nMax, got " + std::to_string(cfg.nMin) + ".." +
                                std::to_string(cfg.nMax));
  }
  if (cfg.nMax > kMaxQubits) {
    throw std::invalid_argument("nMax exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
  if (cfg.repetitions < 1) {
    throw std::invalid_argument("repetitions must be at least 1");
  }
  if (cfg.trotterSteps < 1) {
    throw std::invalid_argument("Trotter step count must be at least 1");
  }
  const std::uint64_t budget = cfg.memoryBudget ? cfg.memoryBudget : default_memory_budget();
  check_memory(cfg.nMax, cfg.precision, budget);

  std::vector<TimingRecord> out;
  for (int n = cfg.nMin; n <= cfg.nMax; ++n) {
    const QuantumCircuit c = build_family(cfg.family, n, cfg.trotterSteps, cfg.seed);
    out.push_back(time_circuit(c, cfg.family, cfg.precision, cfg.repetitions, cfg.policy));
    if (onRecord) onRecord(out.back());
  }
  return out;
}

std::string csv_header() { return "family,n,precision,reps,gate_count,wall_seconds"; }

std::string csv_row(const TimingRecord& r) {
  std::ostringstream os;
  os.precision(9);
  os << to_string(r.family) << ',' << r.nbQubits << ',' << to_string(r.precision) << ','
     << r.repetitions << ',' << r.gateCount << ',' << r.wallSeconds;
  return os.str();
}

}  // namespace qstate::bench
