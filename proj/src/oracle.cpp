#include "qstate/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qstate::oracle {

namespace {

/// Bit value of qubit q (qubit 0 most significant) in index i.
int bit_at(index_t i, int n, int q) { return static_cast<int>((i >> (n - 1 - q)) & 1U); }

index_t with_bit(index_t i, int n, int q, int value) {
  const index_t mask = index_t{1} << (n - 1 - q);
  return value ? (i | mask) : (i & ~mask);
}

/// Row/column index into the gate matrix: the gate's qubit bits of i, first
/// listed qubit most significant.
std::size_t local_index(index_t i, int n, std::span<const int> qubits) {
  std::size_t r = 0;
  for (int q : qubits) r = (r << 1) | static_cast<std::size_t>(bit_at(i, n, q));
  return r;
}

/// i with the gate's qubit bits overwritten by the bits of `local`.
index_t deposit(index_t i, int n, std::span<const int> qubits, std::size_t local) {
  const std::size_t k = qubits.size();
  for (std::size_t p = 0; p < k; ++p) {
    const int value = static_cast<int>((local >> (k - 1 - p)) & 1U);
    i = with_bit(i, n, qubits[p], value);
  }
  return i;
}

void check_gate_fits(const Gate& g, int n) {
  if (g.maxQubit() >= n) {
    throw std::out_of_range(to_string(g) + " does not fit a " + std::to_string(n) +
                            "-qubit state");
  }
}

}  // namespace

StateVector<double> reference_apply(const StateVector<double>& state, const Gate& g) {
  const int n = state.nbQubits();
  check_gate_fits(g, n);
  const DenseMatrix u = matrix_of(g);
  const auto qubits = g.qubits();

  StateVector<double> out(n);
  for (index_t row = 0; row < state.size(); ++row) {
    const std::size_t r = local_index(row, n, qubits);
    std::complex<double> acc{};
    for (std::size_t c = 0; c < u.dim; ++c) {
      acc += u(r, c) * state[deposit(row, n, qubits, c)];
    }
    out[row] = acc;
  }
  return out;
}

StateVector<double> reference_simulate(const QuantumCircuit& c, const StateVector<double>& state) {
  if (c.nbQubits() != state.nbQubits()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  StateVector<double> s = state;
  for (const Gate& g : c) s = reference_apply(s, g);
  return s;
}

DenseUnitary embed(const Gate& g, int n) {
  check_qubit_count(n);
  check_gate_fits(g, n);
  const DenseMatrix u = matrix_of(g);
  const auto qubits = g.qubits();
  const index_t dim = pow2(n);
  DenseUnitary m(dim);
  for (index_t row = 0; row < dim; ++row) {
    for (index_t col = 0; col < dim; ++col) {
      // Nonzero only when every bit outside the gate's qubits agrees.
      if (deposit(row, n, qubits, 0) != deposit(col, n, qubits, 0)) continue;
      m(row, col) = u(local_index(row, n, qubits), local_index(col, n, qubits));
    }
  }
  return m;
}

DenseUnitary full_matrix(const QuantumCircuit& c) {
  const int n = c.nbQubits();
  if (n > kMaxFullMatrixQubits) {
    throw std::length_error("full_matrix is limited to " +
                            std::to_string(kMaxFullMatrixQubits) + " qubits, circuit has " +
                            std::to_string(n));
  }
  const index_t dim = pow2(n);
  // Column k of the product is the circuit applied to basis state k, which
  // equals U_m ... U_1 e_k without forming any 2^n x 2^n product.
  DenseUnitary m(dim);
  for (index_t col = 0; col < dim; ++col) {
    StateVector<double> e(n);
    e[col] = 1.0;
    const StateVector<double> out = reference_simulate(c, e);
    for (index_t row = 0; row < dim; ++row) m(row, col) = out[row];
  }
  return m;
}

DenseUnitary kron(const DenseUnitary& a, const DenseUnitary& b) {
  DenseUnitary m(a.dim * b.dim);
  for (std::size_t ar = 0; ar < a.dim; ++ar)
    for (std::size_t ac = 0; ac < a.dim; ++ac)
      for (std::size_t br = 0; br < b.dim; ++br)
        for (std::size_t bc = 0; bc < b.dim; ++bc)
          m(ar * b.dim + br, ac * b.dim + bc) = a(ar, ac) * b(br, bc);
  return m;
}

StateVector<double> multiply(const DenseUnitary& u, const StateVector<double>& state) {
  if (u.dim != state.size()) {
    throw std::invalid_argument("matrix dimension " + std::to_string(u.dim) +
                                " does not match state size " + std::to_string(state.size()));
  }
  StateVector<double> out(state.nbQubits());
  for (std::size_t r = 0; r < u.dim; ++r) {
    std::complex<double> acc{};
    for (std::size_t c = 0; c < u.dim; ++c) acc += u(r, c) * state[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace qstate::oracle
