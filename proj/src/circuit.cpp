#include "qstate/circuit.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qstate {

QuantumCircuit::QuantumCircuit(int nbQubits) : nbQubits_(nbQubits) {
  check_qubit_count(nbQubits);
}

void QuantumCircuit::push_back(Gate g) {
  if (g.maxQubit() >= nbQubits_) {
    throw std::out_of_range(to_string(g) + ": qubit " + std::to_string(g.maxQubit()) +
                            " outside [0, " + std::to_string(nbQubits_) + ")");
  }
  gates_.push_back(std::move(g));
}

QuantumCircuit build_qft(int n) {
  if (n < 1) {
    throw std::invalid_argument("QFT needs at least 1 qubit, got " + std::to_string(n));
  }
  QuantumCircuit circ(n);
  for (int i = 0; i < n; ++i) {
    circ.push_back(Gate::h(i));
    for (int j = 2; j <= n - i; ++j) {
      const int ctrl = j + i - 1;
      const double th = -2 * std::numbers::pi / static_cast<double>(pow2(j));
      circ.push_back(Gate::cp(ctrl, i, th));
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    circ.push_back(Gate::swap(i, n - i - 1));
  }
  return circ;
}

std::size_t qft_gate_count(int n) {
  const auto m = static_cast<std::size_t>(n);
  return m + m * (m - 1) / 2 + m / 2;
}

AngleProvider seeded_angles(std::uint64_t seed) {
  return [rng = std::mt19937_64(seed),
          dist = std::uniform_real_distribution<double>(-std::numbers::pi,
                                                        std::numbers::pi)]() mutable {
    return dist(rng);
  };
}

AngleProvider constant_angle(double theta) {
  return [theta] { return theta; };
}

QuantumCircuit build_tfxy_trotter(int n, int steps, const AngleProvider& angles) {
  if (n < 2) {
    throw std::invalid_argument("TFXY chain needs at least 2 qubits, got " + std::to_string(n));
  }
  if (steps < 1) {
    throw std::invalid_argument("Trotter step count must be positive, got " +
                                std::to_string(steps));
  }
  QuantumCircuit circ(n);
  auto block = [&](int q) {
    circ.push_back(Gate::rz(q, angles()));
    circ.push_back(Gate::rz(q + 1, angles()));
    circ.push_back(Gate::cnot(q, q + 1));
    circ.push_back(Gate::rx(q, angles()));
    circ.push_back(Gate::rz(q + 1, angles()));
    circ.push_back(Gate::cnot(q, q + 1));
    circ.push_back(Gate::rz(q, angles()));
    circ.push_back(Gate::rz(q + 1, angles()));
  };
  for (int s = 0; s < steps; ++s) {
    for (int q = 0; q + 1 < n; q += 2) block(q);
    for (int q = 1; q + 1 < n; q += 2) block(q);
  }
  return circ;
}

std::size_t tfxy_gate_count(int n, int steps) {
  return 8 * static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(steps);
}

QuantumCircuit inverse(const QuantumCircuit& c) {
  QuantumCircuit inv(c.nbQubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    inv.push_back(dagger(*it));
  }
  return inv;
}

namespace {

/// `count` distinct qubits in random order.
std::vector<int> pick_qubits(int n, int count, std::mt19937_64& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(count));
  return all;
}

}  // namespace

QuantumCircuit random_circuit(int n, std::size_t gateCount, std::mt19937_64& rng,
                              RandomCircuitOptions options) {
  std::vector<GateKind> kinds = {GateKind::H,  GateKind::X,  GateKind::Y,  GateKind::Z,
                                 GateKind::P,  GateKind::RX, GateKind::RY, GateKind::RZ};
  if (!options.qasmCompatible) kinds.push_back(GateKind::U2);
  if (n >= 2) {
    kinds.insert(kinds.end(), {GateKind::CP, GateKind::CNOT, GateKind::CZ, GateKind::SWAP});
    if (!options.qasmCompatible) kinds.insert(kinds.end(), {GateKind::U4, GateKind::CU2});
  }
  if (n >= 3) kinds.push_back(GateKind::CCX);

  std::uniform_int_distribution<std::size_t> pickKind(0, kinds.size() - 1);
  std::uniform_real_distribution<double> pickAngle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  std::bernoulli_distribution pickZeroControl(options.qasmCompatible ? 0.0 : 0.3);
  auto state = [&] { return pickZeroControl(rng) ? 0 : 1; };

  QuantumCircuit circ(n);
  for (std::size_t i = 0; i < gateCount; ++i) {
    const GateKind kind = kinds[pickKind(rng)];
    const auto q = pick_qubits(n, arity(kind), rng);
    switch (kind) {
      case GateKind::H: circ.push_back(Gate::h(q[0])); break;
      case GateKind::X: circ.push_back(Gate::x(q[0])); break;
      case GateKind::Y: circ.push_back(Gate::y(q[0])); break;
      case GateKind::Z: circ.push_back(Gate::z(q[0])); break;
      case GateKind::P: circ.push_back(Gate::p(q[0], pickAngle(rng))); break;
      case GateKind::RX: circ.push_back(Gate::rx(q[0], pickAngle(rng))); break;
      case GateKind::RY: circ.push_back(Gate::ry(q[0], pickAngle(rng))); break;
      case GateKind::RZ: circ.push_back(Gate::rz(q[0], pickAngle(rng))); break;
      case GateKind::U2: circ.push_back(Gate::u2(q[0], random_unitary_2(rng))); break;
      case GateKind::CP: circ.push_back(Gate::cp(q[0], q[1], pickAngle(rng), state())); break;
      case GateKind::CNOT: circ.push_back(Gate::cnot(q[0], q[1], state())); break;
      case GateKind::CZ: circ.push_back(Gate::cz(q[0], q[1], state())); break;
      case GateKind::SWAP: circ.push_back(Gate::swap(q[0], q[1])); break;
      case GateKind::U4: circ.push_back(Gate::u4(q[0], q[1], random_unitary_4(rng))); break;
      case GateKind::CU2:
        circ.push_back(Gate::cu2(q[0], q[1], random_unitary_2(rng), state()));
        break;
      case GateKind::CCX: circ.push_back(Gate::ccx(q[0], q[1], q[2], state(), state())); break;
    }
  }
  return circ;
}

}  // namespace qstate
