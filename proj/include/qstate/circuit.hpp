#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qstate/gates.hpp"
#include "qstate/parallel.hpp"
#include "qstate/state_vector.hpp"

namespace qstate {

/// Ordered gate list on an n-qubit register. Gate order is application order.
class QuantumCircuit {
 public:
  explicit QuantumCircuit(int nbQubits);

  /// Appends `g`; throws std::out_of_range if a qubit lies outside the register.
  void push_back(Gate g);

  int nbQubits() const noexcept { return nbQubits_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }
  auto begin() const noexcept { return gates_.begin(); }
  auto end() const noexcept { return gates_.end(); }

  friend bool operator==(const QuantumCircuit&, const QuantumCircuit&) = default;

 private:
  int nbQubits_;
  std::vector<Gate> gates_;
};

/// Applies one gate through the most specialized kernel for its kind.
template <Real T>
void apply_gate(StateVector<T>& s, const Gate& g, const ExecPolicy& policy = {});

template <Real T>
void simulate(const QuantumCircuit& c, StateVector<T>& s, const ExecPolicy& policy = {});

extern template void apply_gate<float>(StateVector<float>&, const Gate&, const ExecPolicy&);
extern template void apply_gate<double>(StateVector<double>&, const Gate&, const ExecPolicy&);
extern template void simulate<float>(const QuantumCircuit&, StateVector<float>&,
                                     const ExecPolicy&);
extern template void simulate<double>(const QuantumCircuit&, StateVector<double>&,
                                      const ExecPolicy&);

/// Quantum Fourier transform: H and controlled phases with angle -2 pi / 2^j
/// per qubit, followed by the qubit-reversal SWAP layer.
QuantumCircuit build_qft(int n);

/// n + n(n-1)/2 + floor(n/2).
std::size_t qft_gate_count(int n);

/// Yields one rotation angle per call.
using AngleProvider = std::function<double()>;

/// Uniform angles in [-pi, pi) from a seeded generator.
AngleProvider seeded_angles(std::uint64_t seed);

AngleProvider constant_angle(double theta);

/// Trotterized nearest-neighbour TFXY chain. Each step applies a block to the
/// even pairs (0,1),(2,3),... and then to the odd pairs (1,2),(3,4),...;
/// a block on (q, q+1) is
///   RZ(q) RZ(q+1) CNOT(q,q+1) RX(q) RZ(q+1) CNOT(q,q+1) RZ(q) RZ(q+1).
QuantumCircuit build_tfxy_trotter(int n, int steps, const AngleProvider& angles);

std::size_t tfxy_gate_count(int n, int steps);

/// Reversed gate order with each gate replaced by its adjoint.
QuantumCircuit inverse(const QuantumCircuit& c);

struct RandomCircuitOptions {
  /// Restrict to kinds and control states expressible in openQASM 2.0.
  bool qasmCompatible = false;
};

/// Random circuit over the gate vocabulary: arbitrary (also noncontiguous and
/// reversed) qubit pairs, random angles, random 0/1 control states.
QuantumCircuit random_circuit(int n, std::size_t gateCount, std::mt19937_64& rng,
                              RandomCircuitOptions options = {});

}  // namespace qstate
