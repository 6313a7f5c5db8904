#pragma once

// Gate-application kernels built on bit-mask index arithmetic.
//
// A gate acting on k qubits of an n-qubit state updates the amplitudes in
// 2^(n-k) independent groups of 2^k. The loop counter j enumerates the bits
// of the untouched qubits; masks split j into contiguous fields which are
// shifted apart to open a zero bit at every acted-on qubit position.
//
// Every kernel accepts an optional probe. It is called once per loop
// iteration with the indices that iteration touches, from whatever worker runs
// the iteration. The default probe compiles to nothing.

#include <algorithm>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qstate/matrix.hpp"
#include "qstate/parallel.hpp"
#include "qstate/state_vector.hpp"

namespace qstate {

struct NoProbe {
  template <class... Idx>
  constexpr void operator()(Idx...) const noexcept {}
};

struct IndexMasks1Q {
  index_t left = 0;
  index_t right = 0;
  int target = 0;
  int nbQubits = 0;
};

struct IndexMasks2Q {
  index_t left = 0;
  index_t center = 0;
  index_t right = 0;
  int q0 = 0;
  int q1 = 0;
  int nbQubits = 0;
};

/// Masks for a gate on m sorted qubits: field i of the loop counter is
/// shifted left by i.
struct IndexMasksMulti {
  std::vector<index_t> fields;
  std::vector<int> sortedQubits;
  int nbQubits = 0;
};

struct ControlSpec {
  int control = 0;
  int state = 1;

  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

struct IndexQuad {
  index_t a, b, c, d;

  friend bool operator==(const IndexQuad&, const IndexQuad&) = default;
};

namespace detail {

inline void check_qubit(int n, int q, const char* role) {
  if (q < 0 || q >= n) {
    throw std::out_of_range(std::string(role) + " qubit " + std::to_string(q) +
                            " outside [0, " + std::to_string(n) + ")");
  }
}

inline void check_distinct(std::span<const int> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i)
    for (std::size_t k = i + 1; k < qubits.size(); ++k)
      if (qubits[i] == qubits[k]) {
        throw std::invalid_argument("qubit " + std::to_string(qubits[i]) +
                                    " appears more than once in one gate");
      }
}

inline void check_control_state(const ControlSpec& c) {
  if (c.state != 0 && c.state != 1) {
    throw std::invalid_argument("control state must be 0 or 1, got " + std::to_string(c.state));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Index arithmetic
// ---------------------------------------------------------------------------

inline IndexMasks1Q masks_1q(int n, int q) {
  check_qubit_count(n);
  detail::check_qubit(n, q, "target");
  IndexMasks1Q m;
  m.right = pow2(n - q - 1) - 1;
  m.left = (pow2(n - 1) - 1) - m.right;
  m.target = q;
  m.nbQubits = n;
  return m;
}

/// (a_j, b_j): the pair of indices with qubit `target` equal to 0 and 1.
constexpr std::pair<index_t, index_t> index_pair_1q(index_t j, const IndexMasks1Q& m) noexcept {
  const index_t a = (j & m.right) + ((j & m.left) << 1);
  return {a, a + qubit_bit(m.nbQubits, m.target)};
}

/// Masks for two distinct qubits, given in either order.
inline IndexMasks2Q masks_2q(int n, int qa, int qb) {
  check_qubit_count(n);
  detail::check_qubit(n, qa, "first");
  detail::check_qubit(n, qb, "second");
  if (qa == qb) {
    throw std::invalid_argument("two-qubit masks need distinct qubits, got " +
                                std::to_string(qa) + " twice");
  }
  IndexMasks2Q m;
  m.q0 = std::min(qa, qb);
  m.q1 = std::max(qa, qb);
  m.nbQubits = n;
  m.right = pow2(n - m.q1 - 1) - 1;
  m.center = (pow2(n - m.q0 - 2) - 1) - m.right;
  m.left = (pow2(n - 2) - 1) - m.center - m.right;
  return m;
}

/// Index with zero bits opened at q0 and q1.
constexpr index_t spread_2q(index_t j, const IndexMasks2Q& m) noexcept {
  return (j & m.right) + ((j & m.center) << 1) + ((j & m.left) << 2);
}

/// (a, b, c, d) carry bits (q0, q1) = (00, 10, 01, 11).
constexpr IndexQuad index_quad_2q(index_t j, const IndexMasks2Q& m) noexcept {
  const index_t a = spread_2q(j, m);
  const index_t b0 = qubit_bit(m.nbQubits, m.q0);
  const index_t b1 = qubit_bit(m.nbQubits, m.q1);
  return {a, a + b0, a + b1, a + b0 + b1};
}

/// Generalization of the two-qubit masks to any number of distinct qubits.
/// Cumulative right-hand masks are 2^(n - p_{m-1-i} - 1 - i) - 1 for the
/// sorted qubits p; each field is the difference of consecutive ones.
inline IndexMasksMulti masks_multi(int n, std::span<const int> qubits) {
  check_qubit_count(n);
  if (qubits.empty()) {
    throw std::invalid_argument("masks need at least one qubit");
  }
  for (int q : qubits) detail::check_qubit(n, q, "gate");
  detail::check_distinct(qubits);

  IndexMasksMulti m;
  m.nbQubits = n;
  m.sortedQubits.assign(qubits.begin(), qubits.end());
  std::sort(m.sortedQubits.begin(), m.sortedQubits.end());
  const int k = static_cast<int>(m.sortedQubits.size());

  index_t previous = 0;
  for (int i = 0; i < k; ++i) {
    const int q = m.sortedQubits[static_cast<std::size_t>(k - 1 - i)];
    const index_t cumulative = pow2(n - q - 1 - i) - 1;
    m.fields.push_back(cumulative - previous);
    previous = cumulative;
  }
  m.fields.push_back((pow2(n - k) - 1) - previous);
  return m;
}

inline index_t spread_multi(index_t j, const IndexMasksMulti& m) noexcept {
  index_t a = 0;
  for (std::size_t i = 0; i < m.fields.size(); ++i) {
    a += (j & m.fields[i]) << i;
  }
  return a;
}

// ---------------------------------------------------------------------------
// One-qubit kernels
// ---------------------------------------------------------------------------

namespace detail {

template <Real T, class Probe, class Update>
void for_each_pair_1q(StateVector<T>& s, int q, const ExecPolicy& policy, Probe& probe,
                      Update&& update) {
  const IndexMasks1Q m = masks_1q(s.nbQubits(), q);
  auto* x = s.data();
  parallel_for(pow2(s.nbQubits() - 1), policy, [&](index_t j) {
    const auto [a, b] = index_pair_1q(j, m);
    probe(a, b);
    update(x[a], x[b]);
  });
}

}  // namespace detail

template <Real T, class Probe = NoProbe>
void apply_1q(StateVector<T>& s, const Gate2x2<T>& u, int q, const ExecPolicy& policy = {},
              Probe probe = {}) {
  detail::for_each_pair_1q(s, q, policy, probe, [&u](auto& xa, auto& xb) {
    const auto a = xa;
    const auto b = xb;
    xa = u(0, 0) * a + u(0, 1) * b;
    xb = u(1, 0) * a + u(1, 1) * b;
  });
}

template <Real T, class Probe = NoProbe>
void apply_x(StateVector<T>& s, int q, const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_pair_1q(s, q, policy, probe, [](auto& xa, auto& xb) { std::swap(xa, xb); });
}

template <Real T, class Probe = NoProbe>
void apply_y(StateVector<T>& s, int q, const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_pair_1q(s, q, policy, probe, [](auto& xa, auto& xb) {
    const auto a = xa;
    const auto b = xb;
    xa = {b.imag(), -b.real()};  // -i * b
    xb = {-a.imag(), a.real()};  // i * a
  });
}

/// Only the amplitudes with qubit `q` set change.
template <Real T, class Probe = NoProbe>
void apply_z(StateVector<T>& s, int q, const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_pair_1q(s, q, policy, probe, [](auto&, auto& xb) { xb = -xb; });
}

template <Real T, class Probe = NoProbe>
void apply_h(StateVector<T>& s, int q, const ExecPolicy& policy = {}, Probe probe = {}) {
  const T r = T{1} / std::sqrt(T{2});
  detail::for_each_pair_1q(s, q, policy, probe, [r](auto& xa, auto& xb) {
    const auto a = xa;
    const auto b = xb;
    xa = r * (a + b);
    xb = r * (a - b);
  });
}

/// diag(d0, d1) on qubit `q`.
template <Real T, class Probe = NoProbe>
void apply_diag_1q(StateVector<T>& s, std::complex<T> d0, std::complex<T> d1, int q,
                   const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_pair_1q(s, q, policy, probe, [d0, d1](auto& xa, auto& xb) {
    xa *= d0;
    xb *= d1;
  });
}

/// diag(1, phase) on qubit `q`.
template <Real T, class Probe = NoProbe>
void apply_phase(StateVector<T>& s, std::complex<T> phase, int q, const ExecPolicy& policy = {},
                 Probe probe = {}) {
  detail::for_each_pair_1q(s, q, policy, probe, [phase](auto&, auto& xb) { xb *= phase; });
}

// ---------------------------------------------------------------------------
// Controlled one-qubit kernels
// ---------------------------------------------------------------------------

namespace detail {

template <Real T, class Probe, class Update>
void for_each_ctrl_pair(StateVector<T>& s, const ControlSpec& ctrl, int target,
                        const ExecPolicy& policy, Probe& probe, Update&& update) {
  const int n = s.nbQubits();
  if (n < 2) {
    throw std::invalid_argument("a controlled gate needs at least 2 qubits");
  }
  detail::check_qubit(n, ctrl.control, "control");
  detail::check_qubit(n, target, "target");
  detail::check_control_state(ctrl);
  if (ctrl.control == target) {
    throw std::invalid_argument("control and target are both qubit " + std::to_string(target));
  }
  const IndexMasks2Q m = masks_2q(n, ctrl.control, target);
  const index_t offset = ctrl.state == 1 ? qubit_bit(n, ctrl.control) : 0;
  const index_t stride = qubit_bit(n, target);
  auto* x = s.data();
  parallel_for(pow2(n - 2), policy, [&](index_t j) {
    const index_t a = spread_2q(j, m) + offset;
    const index_t b = a + stride;
    probe(a, b);
    update(x[a], x[b]);
  });
}

}  // namespace detail

template <Real T, class Probe = NoProbe>
void apply_ctrl_1q(StateVector<T>& s, const Gate2x2<T>& u, const ControlSpec& ctrl, int target,
                   const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_ctrl_pair(s, ctrl, target, policy, probe, [&u](auto& xa, auto& xb) {
    const auto a = xa;
    const auto b = xb;
    xa = u(0, 0) * a + u(0, 1) * b;
    xb = u(1, 0) * a + u(1, 1) * b;
  });
}

/// CNOT in swap form.
template <Real T, class Probe = NoProbe>
void apply_ctrl_x(StateVector<T>& s, const ControlSpec& ctrl, int target,
                  const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_ctrl_pair(s, ctrl, target, policy, probe,
                             [](auto& xa, auto& xb) { std::swap(xa, xb); });
}

/// Controlled diag(1, phase); covers CZ (phase = -1) and CP.
template <Real T, class Probe = NoProbe>
void apply_ctrl_phase(StateVector<T>& s, std::complex<T> phase, const ControlSpec& ctrl,
                      int target, const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_ctrl_pair(s, ctrl, target, policy, probe,
                             [phase](auto&, auto& xb) { xb *= phase; });
}

// ---------------------------------------------------------------------------
// Two-qubit kernels
// ---------------------------------------------------------------------------

/// Conjugates a matrix in |qa qb> ordering by SWAP, giving the |qb qa> form.
template <Real T>
Gate4x4<T> swap_qubit_order(const Gate4x4<T>& u) {
  constexpr std::size_t perm[4] = {0, 2, 1, 3};
  Gate4x4<T> v;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) v(r, c) = u(perm[r], perm[c]);
  return v;
}

/// Applies `u`, given in the basis |qa qb> = 00, 01, 10, 11.
template <Real T, class Probe = NoProbe>
void apply_2q(StateVector<T>& s, const Gate4x4<T>& u, int qa, int qb,
              const ExecPolicy& policy = {}, Probe probe = {}) {
  const IndexMasks2Q m = masks_2q(s.nbQubits(), qa, qb);
  const Gate4x4<T> v = qa < qb ? u : swap_qubit_order(u);
  auto* x = s.data();
  parallel_for(pow2(s.nbQubits() - 2), policy, [&](index_t j) {
    const IndexQuad i = index_quad_2q(j, m);
    probe(i.a, i.b, i.c, i.d);
    // Basis order |q0 q1>: 00 -> a, 01 -> c, 10 -> b, 11 -> d.
    const std::complex<T> in[4] = {x[i.a], x[i.c], x[i.b], x[i.d]};
    std::complex<T> out[4];
    for (std::size_t r = 0; r < 4; ++r) {
      out[r] = v(r, 0) * in[0] + v(r, 1) * in[1] + v(r, 2) * in[2] + v(r, 3) * in[3];
    }
    x[i.a] = out[0];
    x[i.c] = out[1];
    x[i.b] = out[2];
    x[i.d] = out[3];
  });
}

template <Real T, class Probe = NoProbe>
void apply_swap(StateVector<T>& s, int qa, int qb, const ExecPolicy& policy = {},
                Probe probe = {}) {
  const IndexMasks2Q m = masks_2q(s.nbQubits(), qa, qb);
  auto* x = s.data();
  parallel_for(pow2(s.nbQubits() - 2), policy, [&](index_t j) {
    const IndexQuad i = index_quad_2q(j, m);
    probe(i.b, i.c);
    std::swap(x[i.b], x[i.c]);
  });
}

// ---------------------------------------------------------------------------
// Multi-controlled one-qubit kernels
// ---------------------------------------------------------------------------

namespace detail {

template <Real T, class Probe, class Update>
void for_each_multi_ctrl_pair(StateVector<T>& s, std::span<const ControlSpec> ctrls, int target,
                              const ExecPolicy& policy, Probe& probe, Update&& update) {
  const int n = s.nbQubits();
  if (ctrls.empty()) {
    throw std::invalid_argument("a multi-controlled gate needs at least one control");
  }
  std::vector<int> qubits;
  qubits.reserve(ctrls.size() + 1);
  index_t offset = 0;
  for (const auto& c : ctrls) {
    detail::check_qubit(n, c.control, "control");
    detail::check_control_state(c);
    qubits.push_back(c.control);
    if (c.state == 1) offset += qubit_bit(n, c.control);
  }
  detail::check_qubit(n, target, "target");
  qubits.push_back(target);
  const IndexMasksMulti m = masks_multi(n, qubits);
  const index_t stride = qubit_bit(n, target);
  auto* x = s.data();
  parallel_for(pow2(n - static_cast<int>(qubits.size())), policy, [&](index_t j) {
    const index_t a = spread_multi(j, m) + offset;
    const index_t b = a + stride;
    probe(a, b);
    update(x[a], x[b]);
  });
}

}  // namespace detail

template <Real T, class Probe = NoProbe>
void apply_multi_ctrl_1q(StateVector<T>& s, const Gate2x2<T>& u,
                         std::span<const ControlSpec> ctrls, int target,
                         const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_multi_ctrl_pair(s, ctrls, target, policy, probe, [&u](auto& xa, auto& xb) {
    const auto a = xa;
    const auto b = xb;
    xa = u(0, 0) * a + u(0, 1) * b;
    xb = u(1, 0) * a + u(1, 1) * b;
  });
}

/// Multi-controlled NOT (Toffoli for two controls) in swap form.
template <Real T, class Probe = NoProbe>
void apply_multi_ctrl_x(StateVector<T>& s, std::span<const ControlSpec> ctrls, int target,
                        const ExecPolicy& policy = {}, Probe probe = {}) {
  detail::for_each_multi_ctrl_pair(s, ctrls, target, policy, probe,
                                   [](auto& xa, auto& xb) { std::swap(xa, xb); });
}

}  // namespace qstate
