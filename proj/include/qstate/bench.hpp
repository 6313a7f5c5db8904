#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qstate/circuit.hpp"
#include "qstate/parallel.hpp"

namespace qstate::bench {

enum class Family { Qft, Tfxy };
enum class Precision { Single, Double };

std::string_view to_string(Family f);
std::string_view to_string(Precision p);
std::optional<Family> parse_family(std::string_view s);
std::optional<Precision> parse_precision(std::string_view s);

inline constexpr int kDefaultTrotterSteps = 10;

/// One measured row: best wall time over `repetitions` runs of simulate.
struct TimingRecord {
  Family family = Family::Qft;
  int nbQubits = 0;
  Precision precision = Precision::Double;
  int repetitions = 1;
  double wallSeconds = 0.0;
  std::size_t gateCount = 0;
};

/// Bytes needed for a state vector: 16 * 2^n (double) or 8 * 2^n (single).
std::uint64_t state_bytes(int n, Precision p);

/// 75% of the memory the OS reports as available.
std::uint64_t default_memory_budget();

class ResourceRefusal : public std::runtime_error {
 public:
  ResourceRefusal(std::uint64_t requiredBytes, std::uint64_t budgetBytes);
  std::uint64_t requiredBytes() const noexcept { return required_; }
  std::uint64_t budgetBytes() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Throws ResourceRefusal exactly when state_bytes(n, p) > budget.
void check_memory(int n, Precision p, std::uint64_t budget);

struct BenchConfig {
  Family family = Family::Qft;
  int nMin = 1;
  int nMax = 1;
  Precision precision = Precision::Double;
  int repetitions = 3;
  std::uint64_t seed = 0;
  int trotterSteps = kDefaultTrotterSteps;
  ExecPolicy policy{};
  std::uint64_t memoryBudget = 0;  // 0: default_memory_budget()
};

/// Family circuit on n qubits; TFXY angles drawn from `seed`.
QuantumCircuit build_family(Family family, int n, int trotterSteps, std::uint64_t seed);

/// Times simulate(c) from |0...0>; state allocation and circuit construction
/// are excluded.
TimingRecord time_circuit(const QuantumCircuit& c, Family family, Precision precision,
                          int repetitions, const ExecPolicy& policy);

/// Validates the config, then measures n = nMin..nMax, invoking `onRecord`
/// after each row.
std::vector<TimingRecord> run_benchmark(
    const BenchConfig& cfg, const std::function<void(const TimingRecord&)>& onRecord = {});

std::string csv_header();
std::string csv_row(const TimingRecord& r);

}  // namespace qstate::bench
