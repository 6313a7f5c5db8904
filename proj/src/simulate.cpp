#include <stdexcept>
#include <string>

#include "qstate/circuit.hpp"
#include "qstate/kernels.hpp"

namespace qstate {

template <Real T>
void apply_gate(StateVector<T>& s, const Gate& g, const ExecPolicy& policy) {
  using C = std::complex<T>;
  const auto q = g.qubits();
  switch (g.kind()) {
    case GateKind::H: apply_h(s, q[0], policy); return;
    case GateKind::X: apply_x(s, q[0], policy); return;
    case GateKind::Y: apply_y(s, q[0], policy); return;
    case GateKind::Z: apply_z(s, q[0], policy); return;
    case GateKind::P:
      apply_phase(s, C(std::polar(1.0, g.params()[0])), q[0], policy);
      return;
    case GateKind::RZ: {
      const double th = g.params()[0];
      apply_diag_1q(s, C(std::polar(1.0, -th / 2)), C(std::polar(1.0, th / 2)), q[0], policy);
      return;
    }
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::U2:
      apply_1q(s, target_matrix(g).template cast<T>(), q[0], policy);
      return;
    case GateKind::CNOT: apply_ctrl_x(s, g.controls()[0], q[1], policy); return;
    case GateKind::CZ: apply_ctrl_phase(s, C(-1), g.controls()[0], q[1], policy); return;
    case GateKind::CP:
      apply_ctrl_phase(s, C(std::polar(1.0, g.params()[0])), g.controls()[0], q[1], policy);
      return;
    case GateKind::CU2:
      apply_ctrl_1q(s, target_matrix(g).template cast<T>(), g.controls()[0], q[1], policy);
      return;
    case GateKind::SWAP: apply_swap(s, q[0], q[1], policy); return;
    case GateKind::U4:
      apply_2q(s, two_qubit_matrix(g).template cast<T>(), q[0], q[1], policy);
      return;
    case GateKind::CCX: {
      const auto ctrls = g.controls();
      apply_multi_ctrl_x(s, std::span<const ControlSpec>(ctrls), q[2], policy);
      return;
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

template <Real T>
void simulate(const QuantumCircuit& c, StateVector<T>& s, const ExecPolicy& policy) {
  if (c.nbQubits() != s.nbQubits()) {
    throw std::invalid_argument("circuit has " + std::to_string(c.nbQubits()) +
                                " qubits but state has " + std::to_string(s.nbQubits()));
  }
  for (const Gate& g : c) {
    apply_gate(s, g, policy);
  }
}

template void apply_gate<float>(StateVector<float>&, const Gate&, const ExecPolicy&);
template void apply_gate<double>(StateVector<double>&, const Gate&, const ExecPolicy&);
template void simulate<float>(const QuantumCircuit&, StateVector<float>&, const ExecPolicy&);
template void simulate<double>(const QuantumCircuit&, StateVector<double>&, const ExecPolicy&);

}  // namespace qstate
