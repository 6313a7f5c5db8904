#pragma once

// Naive reference simulator used as ground truth in tests.
//
// Nothing here touches the bit-mask index arithmetic of kernels.hpp: every
// output amplitude is built by extracting the bits at the gate's qubit
// positions one at a time and summing over the 2^k input configurations.
// Computation is always in double precision.

#include "qstate/circuit.hpp"
#include "qstate/gates.hpp"
#include "qstate/matrix.hpp"
#include "qstate/state_vector.hpp"

namespace qstate::oracle {

using DenseUnitary = DenseMatrix;

inline constexpr int kMaxFullMatrixQubits = 12;

/// Out-of-place application of `g`.
StateVector<double> reference_apply(const StateVector<double>& state, const Gate& g);

/// Applies every gate of `c` in order with reference_apply.
StateVector<double> reference_simulate(const QuantumCircuit& c, const StateVector<double>& state);

/// Dense 2^n x 2^n unitary of one gate embedded in an n-qubit register.
DenseUnitary embed(const Gate& g, int n);

/// Product of the embedded gate unitaries, last gate leftmost. Refuses
/// circuits wider than kMaxFullMatrixQubits.
DenseUnitary full_matrix(const QuantumCircuit& c);

DenseUnitary kron(const DenseUnitary& a, const DenseUnitary& b);

/// Dense matrix-vector product.
StateVector<double> multiply(const DenseUnitary& u, const StateVector<double>& state);

}  // namespace qstate::oracle
