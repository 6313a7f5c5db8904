#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstate/kernels.hpp"
#include "qstate/matrix.hpp"

namespace qstate {

enum class GateKind { H, X, Y, Z, P, RX, RY, RZ, CP, CNOT, CZ, SWAP, CCX, U2, U4, CU2 };

std::string_view gate_name(GateKind kind);

/// Number of qubits a gate of this kind acts on.
int arity(GateKind kind);

/// Number of leading entries of the qubit list that are controls.
int control_count(GateKind kind);

bool is_parametric(GateKind kind);

/// Immutable description of one gate application.
///
/// Controls precede targets in `qubits()`. Angles are in radians. Matrix
/// payloads (U2, U4, CU2) are checked for unitarity on construction.
class Gate {
 public:
  static Gate h(int q);
  static Gate x(int q);
  static Gate y(int q);
  static Gate z(int q);
  static Gate p(int q, double theta);
  static Gate rx(int q, double theta);
  static Gate ry(int q, double theta);
  static Gate rz(int q, double theta);
  static Gate cp(int control, int target, double theta, int controlState = 1);
  static Gate cnot(int control, int target, int controlState = 1);
  static Gate cz(int control, int target, int controlState = 1);
  static Gate swap(int qa, int qb);
  static Gate ccx(int control0, int control1, int target, int state0 = 1, int state1 = 1);
  static Gate u2(int q, const Gate2x2<double>& m);
  static Gate u4(int qa, int qb, const Gate4x4<double>& m);
  static Gate cu2(int control, int target, const Gate2x2<double>& m, int controlState = 1);

  GateKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return gate_name(kind_); }
  std::span<const int> qubits() const noexcept { return qubits_; }
  std::span<const double> params() const noexcept { return params_; }
  std::span<const int> controlStates() const noexcept { return controlStates_; }

  /// Controls as (qubit, state) pairs, in qubit-list order.
  std::vector<ControlSpec> controls() const;
  /// Last entry of the qubit list.
  int target() const noexcept { return qubits_.back(); }
  int maxQubit() const noexcept;
  bool hasZeroControl() const noexcept;

  /// Payload of U2/CU2 gates, or the U4 matrix embedded as entries().
  const std::vector<std::complex<double>>& payload() const noexcept { return payload_; }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::vector<int> qubits, std::vector<double> params,
       std::vector<int> controlStates, std::vector<std::complex<double>> payload = {});

  GateKind kind_;
  std::vector<int> qubits_;
  std::vector<double> params_;
  std::vector<int> controlStates_;
  std::vector<std::complex<double>> payload_;
};

/// Full unitary (2x2, 4x4 or 8x8) in big-endian order of the gate's qubit
/// list, control conditions included.
DenseMatrix matrix_of(const Gate& g);

/// The 2x2 matrix applied to the target of a one-qubit or controlled
/// one-qubit gate (H, X, Y, Z, P, RX, RY, RZ, U2, CP, CNOT, CZ, CCX, CU2).
Gate2x2<double> target_matrix(const Gate& g);

/// The 4x4 matrix of SWAP or U4 in |q_0 q_1> ordering of the qubit list.
Gate4x4<double> two_qubit_matrix(const Gate& g);

Gate dagger(const Gate& g);

std::string to_string(const Gate& g);

// Standard matrices.
Gate2x2<double> hadamard_matrix();
Gate2x2<double> pauli_x_matrix();
Gate2x2<double> pauli_y_matrix();
Gate2x2<double> pauli_z_matrix();
Gate2x2<double> phase_matrix(double theta);
Gate2x2<double> rx_matrix(double theta);
Gate2x2<double> ry_matrix(double theta);
Gate2x2<double> rz_matrix(double theta);
Gate4x4<double> swap_matrix();

/// Haar-like random unitary via Gram-Schmidt on a complex Gaussian matrix.
DenseMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);
Gate2x2<double> random_unitary_2(std::mt19937_64& rng);
Gate4x4<double> random_unitary_4(std::mt19937_64& rng);

}  // namespace qstate
