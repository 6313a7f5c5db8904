#include "qstate/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qstate {

namespace {

using cd = std::complex<double>;

constexpr double kUnitarityTolerance = 1e-12;

struct KindInfo {
  std::string_view name;
  int arity;
  int controls;
  bool parametric;
};

KindInfo info(GateKind kind) {
  switch (kind) {
    case GateKind::H: return {"H", 1, 0, false};
    case GateKind::X: return {"X", 1, 0, false};
    case GateKind::Y: return {"Y", 1, 0, false};
    case GateKind::Z: return {"Z", 1, 0, false};
    case GateKind::P: return {"P", 1, 0, true};
    case GateKind::RX: return {"RX", 1, 0, true};
    case GateKind::RY: return {"RY", 1, 0, true};
    case GateKind::RZ: return {"RZ", 1, 0, true};
    case GateKind::CP: return {"CP", 2, 1, true};
    case GateKind::CNOT: return {"CNOT", 2, 1, false};
    case GateKind::CZ: return {"CZ", 2, 1, false};
    case GateKind::SWAP: return {"SWAP", 2, 0, false};
    case GateKind::CCX: return {"CCX", 3, 2, false};
    case GateKind::U2: return {"U2", 1, 0, false};
    case GateKind::U4: return {"U4", 2, 0, false};
    case GateKind::CU2: return {"CU2", 2, 1, false};
  }
  throw std::invalid_argument("unknown gate kind");
}

template <std::size_t D>
void require_unitary(const Matrix<double, D>& m, GateKind kind) {
  const double err = unitarity_error(DenseMatrix(m));
  if (!(err <= kUnitarityTolerance)) {
    std::ostringstream os;
    os << gate_name(kind) << " matrix is not unitary: max |U U^dagger - I| = " << err;
    throw std::invalid_argument(os.str());
  }
}

Gate2x2<double> payload_2x2(const Gate& g) {
  Gate2x2<double> m;
  std::copy(g.payload().begin(), g.payload().end(), m.entries.begin());
  return m;
}

template <std::size_t D>
std::vector<cd> to_payload(const Matrix<double, D>& m) {
  return {m.entries.begin(), m.entries.end()};
}

/// Controlled-U on (controls..., target) with the given control states.
DenseMatrix embed_controlled(const Gate2x2<double>& u, std::span<const int> states) {
  const std::size_t k = states.size();
  const std::size_t dim = std::size_t{2} << k;
  DenseMatrix m = DenseMatrix::identity(dim);
  std::size_t active = 0;
  for (std::size_t i = 0; i < k; ++i) {
    active = (active << 1) | static_cast<std::size_t>(states[i]);
  }
  const std::size_t r0 = active << 1;
  m(r0, r0) = u(0, 0);
  m(r0, r0 + 1) = u(0, 1);
  m(r0 + 1, r0) = u(1, 0);
  m(r0 + 1, r0 + 1) = u(1, 1);
  return m;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }
int arity(GateKind kind) { return info(kind).arity; }
int control_count(GateKind kind) { return info(kind).controls; }
bool is_parametric(GateKind kind) { return info(kind).parametric; }

Gate::Gate(GateKind kind, std::vector<int> qubits, std::vector<double> params,
           std::vector<int> controlStates, std::vector<cd> payload)
    : kind_(kind),
      qubits_(std::move(qubits)),
      params_(std::move(params)),
      controlStates_(std::move(controlStates)),
      payload_(std::move(payload)) {
  const KindInfo ki = info(kind_);
  if (static_cast<int>(qubits_.size()) != ki.arity) {
    throw std::invalid_argument(std::string(ki.name) + " acts on " + std::to_string(ki.arity) +
                                " qubits, got " + std::to_string(qubits_.size()));
  }
  for (int q : qubits_) {
    if (q < 0) {
      throw std::out_of_range(std::string(ki.name) + ": negative qubit index " +
                              std::to_string(q));
    }
  }
  detail::check_distinct(qubits_);
  if (static_cast<int>(controlStates_.size()) != ki.controls) {
    throw std::invalid_argument(std::string(ki.name) + " expects " +
                                std::to_string(ki.controls) + " control states");
  }
  for (int s : controlStates_) {
    if (s != 0 && s != 1) {
      throw std::invalid_argument("control state must be 0 or 1, got " + std::to_string(s));
    }
  }
  for (double p : params_) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument(std::string(ki.name) + ": angle must be finite");
    }
  }
}

Gate Gate::h(int q) { return Gate(GateKind::H, {q}, {}, {}); }
Gate Gate::x(int q) { return Gate(GateKind::X, {q}, {}, {}); }
Gate Gate::y(int q) { return Gate(GateKind::Y, {q}, {}, {}); }
Gate Gate::z(int q) { return Gate(GateKind::Z, {q}, {}, {}); }
Gate Gate::p(int q, double theta) { return Gate(GateKind::P, {q}, {theta}, {}); }
Gate Gate::rx(int q, double theta) { return Gate(GateKind::RX, {q}, {theta}, {}); }
Gate Gate::ry(int q, double theta) { return Gate(GateKind::RY, {q}, {theta}, {}); }
Gate Gate::rz(int q, double theta) { return Gate(GateKind::RZ, {q}, {theta}, {}); }

Gate Gate::cp(int control, int target, double theta, int controlState) {
  return Gate(GateKind::CP, {control, target}, {theta}, {controlState});
}
Gate Gate::cnot(int control, int target, int controlState) {
  return Gate(GateKind::CNOT, {control, target}, {}, {controlState});
}
Gate Gate::cz(int control, int target, int controlState) {
  return Gate(GateKind::CZ, {control, target}, {}, {controlState});
}
Gate Gate::swap(int qa, int qb) { return Gate(GateKind::SWAP, {qa, qb}, {}, {}); }
Gate Gate::ccx(int control0, int control1, int target, int state0, int state1) {
  return Gate(GateKind::CCX, {control0, control1, target}, {}, {state0, state1});
}
Gate Gate::u2(int q, const Gate2x2<double>& m) {
  require_unitary(m, GateKind::U2);
  return Gate(GateKind::U2, {q}, {}, {}, to_payload(m));
}
Gate Gate::u4(int qa, int qb, const Gate4x4<double>& m) {
  require_unitary(m, GateKind::U4);
  return Gate(GateKind::U4, {qa, qb}, {}, {}, to_payload(m));
}
Gate Gate::cu2(int control, int target, const Gate2x2<double>& m, int controlState) {
  require_unitary(m, GateKind::CU2);
  return Gate(GateKind::CU2, {control, target}, {}, {controlState}, to_payload(m));
}

std::vector<ControlSpec> Gate::controls() const {
  std::vector<ControlSpec> out;
  for (std::size_t i = 0; i < controlStates_.size(); ++i) {
    out.push_back({qubits_[i], controlStates_[i]});
  }
  return out;
}

int Gate::maxQubit() const noexcept { return *std::max_element(qubits_.begin(), qubits_.end()); }

bool Gate::hasZeroControl() const noexcept {
  return std::find(controlStates_.begin(), controlStates_.end(), 0) != controlStates_.end();
}

// Standard matrices -----------------------------------------------------------

Gate2x2<double> hadamard_matrix() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {{cd{r}, cd{r}, cd{r}, cd{-r}}};
}
Gate2x2<double> pauli_x_matrix() { return {{cd{0}, cd{1}, cd{1}, cd{0}}}; }
Gate2x2<double> pauli_y_matrix() { return {{cd{0}, cd{0, -1}, cd{0, 1}, cd{0}}}; }
Gate2x2<double> pauli_z_matrix() { return {{cd{1}, cd{0}, cd{0}, cd{-1}}}; }
Gate2x2<double> phase_matrix(double theta) {
  return {{cd{1}, cd{0}, cd{0}, std::polar(1.0, theta)}};
}
Gate2x2<double> rx_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{cd{c}, cd{0, -s}, cd{0, -s}, cd{c}}};
}
Gate2x2<double> ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{cd{c}, cd{-s}, cd{s}, cd{c}}};
}
Gate2x2<double> rz_matrix(double theta) {
  return {{std::polar(1.0, -theta / 2), cd{0}, cd{0}, std::polar(1.0, theta / 2)}};
}
Gate4x4<double> swap_matrix() {
  Gate4x4<double> m;
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Gate2x2<double> target_matrix(const Gate& g) {
  switch (g.kind()) {
    case GateKind::H: return hadamard_matrix();
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::CCX: return pauli_x_matrix();
    case GateKind::Y: return pauli_y_matrix();
    case GateKind::Z:
    case GateKind::CZ: return pauli_z_matrix();
    case GateKind::P:
    case GateKind::CP: return phase_matrix(g.params()[0]);
    case GateKind::RX: return rx_matrix(g.params()[0]);
    case GateKind::RY: return ry_matrix(g.params()[0]);
    case GateKind::RZ: return rz_matrix(g.params()[0]);
    case GateKind::U2:
    case GateKind::CU2: return payload_2x2(g);
    case GateKind::SWAP:
    case GateKind::U4: break;
  }
  throw std::invalid_argument(std::string(g.name()) + " has no single-target matrix");
}

Gate4x4<double> two_qubit_matrix(const Gate& g) {
  if (g.kind() == GateKind::SWAP) return swap_matrix();
  if (g.kind() == GateKind::U4) {
    Gate4x4<double> m;
    std::copy(g.payload().begin(), g.payload().end(), m.entries.begin());
    return m;
  }
  throw std::invalid_argument(std::string(g.name()) + " is not an uncontrolled 2-qubit gate");
}

DenseMatrix matrix_of(const Gate& g) {
  if (g.kind() == GateKind::SWAP || g.kind() == GateKind::U4) {
    return DenseMatrix(two_qubit_matrix(g));
  }
  if (control_count(g.kind()) == 0) {
    return DenseMatrix(target_matrix(g));
  }
  return embed_controlled(target_matrix(g), g.controlStates());
}

Gate dagger(const Gate& g) {
  const auto q = g.qubits();
  const auto s = g.controlStates();
  switch (g.kind()) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::CCX: return g;
    case GateKind::P: return Gate::p(q[0], -g.params()[0]);
    case GateKind::RX: return Gate::rx(q[0], -g.params()[0]);
    case GateKind::RY: return Gate::ry(q[0], -g.params()[0]);
    case GateKind::RZ: return Gate::rz(q[0], -g.params()[0]);
    case GateKind::CP: return Gate::cp(q[0], q[1], -g.params()[0], s[0]);
    case GateKind::U2: return Gate::u2(q[0], payload_2x2(g).adjoint());
    case GateKind::U4: return Gate::u4(q[0], q[1], two_qubit_matrix(g).adjoint());
    case GateKind::CU2: return Gate::cu2(q[0], q[1], payload_2x2(g).adjoint(), s[0]);
  }
  throw std::invalid_argument("unknown gate kind");
}

std::string to_string(const Gate& g) {
  std::ostringstream os;
  os.precision(17);
  os << g.name();
  if (!g.params().empty()) {
    os << '(';
    for (std::size_t i = 0; i < g.params().size(); ++i) os << (i ? "," : "") << g.params()[i];
    os << ')';
  }
  const auto q = g.qubits();
  const auto s = g.controlStates();
  os << ' ';
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) os << ',';
    if (i < s.size() && s[i] == 0) os << '!';
    os << q[i];
  }
  return os.str();
}

// Random unitaries ------------------------------------------------------------

DenseMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  DenseMatrix m(dim);
  for (auto& e : m.entries) e = {gauss(rng), gauss(rng)};
  // Orthonormalize columns (modified Gram-Schmidt).
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t k = 0; k < c; ++k) {
      cd dot{};
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(m(r, k)) * m(r, c);
      for (std::size_t r = 0; r < dim; ++r) m(r, c) -= dot * m(r, k);
    }
    double len = 0.0;
    for (std::size_t r = 0; r < dim; ++r) len += std::norm(m(r, c));
    len = std::sqrt(len);
    for (std::size_t r = 0; r < dim; ++r) m(r, c) /= len;
  }
  return m;
}

Gate2x2<double> random_unitary_2(std::mt19937_64& rng) {
  const DenseMatrix d = random_unitary(2, rng);
  Gate2x2<double> m;
  std::copy(d.entries.begin(), d.entries.end(), m.entries.begin());
  return m;
}

Gate4x4<double> random_unitary_4(std::mt19937_64& rng) {
  const DenseMatrix d = random_unitary(4, rng);
  Gate4x4<double> m;
  std::copy(d.entries.begin(), d.entries.end(), m.entries.begin());
  return m;
}

}  // namespace qstate
