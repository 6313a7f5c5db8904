#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qstate/circuit.hpp"
#include "qstate/oracle.hpp"

using namespace qstate;

namespace {

std::vector<int> qubits_of(const Gate& g) { return {g.qubits().begin(), g.qubits().end()}; }

}  // namespace

TEST(Circuit, PushBack) {
  QuantumCircuit c(2);
  c.push_back(Gate::h(0));
  EXPECT_EQ(c.size(), 1u);

  QuantumCircuit small(3);
  EXPECT_THROW(small.push_back(Gate::cp(5, 0, 0.1)), std::out_of_range);
  EXPECT_TRUE(small.empty());
}

TEST(Circuit, QftStructureSmall) {
  const QuantumCircuit one = build_qft(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Gate::h(0));

  const QuantumCircuit two = build_qft(2);
  ASSERT_EQ(two.size(), 4u);
  EXPECT_EQ(two[0], Gate::h(0));
  EXPECT_EQ(two[1].kind(), GateKind::CP);
  EXPECT_EQ(qubits_of(two[1]), (std::vector<int>{1, 0}));
  EXPECT_DOUBLE_EQ(two[1].params()[0], -std::numbers::pi / 2);
  EXPECT_EQ(two[2], Gate::h(1));
  EXPECT_EQ(two[3], Gate::swap(0, 1));

  EXPECT_THROW(build_qft(0), std::invalid_argument);
}

TEST(Circuit, QftFiveQubits) {
  const QuantumCircuit c = build_qft(5);
  ASSERT_EQ(c.size(), 17u);
  std::size_t h = 0, cp = 0, swap = 0;
  for (const Gate& g : c) {
    h += g.kind() == GateKind::H;
    cp += g.kind() == GateKind::CP;
    swap += g.kind() == GateKind::SWAP;
  }
  EXPECT_EQ(h, 5u);
  EXPECT_EQ(cp, 10u);
  EXPECT_EQ(swap, 2u);
  EXPECT_EQ(c[0], Gate::h(0));
  EXPECT_EQ(c[c.size() - 1], Gate::swap(1, 3));
  // Second gate: control 1 on target 0, angle -2 pi / 4.
  EXPECT_EQ(qubits_of(c[1]), (std::vector<int>{1, 0}));
  // Last controlled phase of the first block: control 4, angle -2 pi / 32.
  EXPECT_EQ(qubits_of(c[4]), (std::vector<int>{4, 0}));
  EXPECT_DOUBLE_EQ(c[4].params()[0], -2 * std::numbers::pi / 32);
}

TEST(Circuit, QftGateCountFormula) {
  for (int n = 1; n <= 12; ++n) {
    const auto m = static_cast<std::size_t>(n);
    EXPECT_EQ(build_qft(n).size(), m + m * (m - 1) / 2 + m / 2) << "n=" << n;
    EXPECT_EQ(qft_gate_count(n), build_qft(n).size());
  }
}

TEST(Circuit, SimulateEmptyAndInvolution) {
  std::mt19937_64 rng(1);
  const auto start = random_state<double>(3, rng);
  auto s = start;
  simulate(QuantumCircuit(3), s);
  EXPECT_EQ(s, start);

  QuantumCircuit xx(3);
  xx.push_back(Gate::x(0));
  xx.push_back(Gate::x(0));
  simulate(xx, s);
  EXPECT_EQ(s, start);

  StateVector<double> wrong(4);
  EXPECT_THROW(simulate(xx, wrong), std::invalid_argument);
}

TEST(Circuit, QftOfZeroStateIsUniform) {
  auto s = basis_state<double>(5, 0);
  simulate(build_qft(5), s);
  for (index_t j = 0; j < s.size(); ++j) {
    EXPECT_NEAR(s[j].real(), std::pow(2.0, -2.5), 1e-12);
    EXPECT_NEAR(s[j].imag(), 0.0, 1e-12);
  }
  EXPECT_NEAR(std::pow(2.0, -2.5), 0.176777, 1e-6);
}

TEST(Circuit, TfxyBlockStructure) {
  const QuantumCircuit c = build_tfxy_trotter(2, 1, seeded_angles(7));
  ASSERT_EQ(c.size(), 8u);
  const std::vector<std::pair<GateKind, std::vector<int>>> expected = {
      {GateKind::RZ, {0}},      {GateKind::RZ, {1}}, {GateKind::CNOT, {0, 1}},
      {GateKind::RX, {0}},      {GateKind::RZ, {1}}, {GateKind::CNOT, {0, 1}},
      {GateKind::RZ, {0}},      {GateKind::RZ, {1}},
  };
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(c[i].kind(), expected[i].first) << i;
    EXPECT_EQ(qubits_of(c[i]), expected[i].second) << i;
  }
}

TEST(Circuit, TfxyPairLayers) {
  const QuantumCircuit c = build_tfxy_trotter(4, 1, constant_angle(0.1));
  ASSERT_EQ(c.size(), 24u);
  // Even layer (0,1), (2,3), then odd layer (1,2).
  EXPECT_EQ(qubits_of(c[2]), (std::vector<int>{0, 1}));
  EXPECT_EQ(qubits_of(c[10]), (std::vector<int>{2, 3}));
  EXPECT_EQ(qubits_of(c[18]), (std::vector<int>{1, 2}));
  EXPECT_EQ(build_tfxy_trotter(4, 10, seeded_angles(0)).size(), 240u);
  for (int n = 2; n <= 9; ++n) {
    EXPECT_EQ(build_tfxy_trotter(n, 3, seeded_angles(1)).size(), tfxy_gate_count(n, 3));
  }
  EXPECT_THROW(build_tfxy_trotter(1, 1, seeded_angles(0)), std::invalid_argument);
  EXPECT_THROW(build_tfxy_trotter(3, 0, seeded_angles(0)), std::invalid_argument);
}

TEST(Circuit, TfxySeededAnglesAreDeterministic) {
  EXPECT_EQ(build_tfxy_trotter(5, 2, seeded_angles(42)),
            build_tfxy_trotter(5, 2, seeded_angles(42)));
  EXPECT_NE(build_tfxy_trotter(5, 2, seeded_angles(42)),
            build_tfxy_trotter(5, 2, seeded_angles(43)));
}

TEST(Circuit, ZeroAngleTfxyIsIdentity) {
  std::mt19937_64 rng(2);
  const auto start = random_state<double>(6, rng);
  auto s = start;
  simulate(build_tfxy_trotter(6, 3, constant_angle(0.0)), s);
  EXPECT_LE(max_abs_diff(s, start), 1e-12);
}

TEST(Circuit, Inverse) {
  EXPECT_TRUE(inverse(QuantumCircuit(2)).empty());

  QuantumCircuit h(1);
  h.push_back(Gate::h(0));
  EXPECT_EQ(inverse(h), h);

  std::mt19937_64 rng(3);
  const QuantumCircuit qft = build_qft(6);
  const auto start = random_state<double>(6, rng);
  auto s = start;
  simulate(qft, s);
  simulate(inverse(qft), s);
  EXPECT_LE(max_abs_diff(s, start), 1e-10);
}

TEST(Circuit, InverseOfRandomCircuitUndoesIt) {
  std::mt19937_64 rng(4);
  const QuantumCircuit c = random_circuit(8, 300, rng);
  const auto start = random_state<double>(8, rng);
  auto s = start;
  simulate(c, s);
  simulate(inverse(c), s);
  EXPECT_LE(max_abs_diff(s, start), 1e-10);
}

TEST(Circuit, SimulateMatchesReferenceOnRandomCircuits) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 10; ++n) {
    const QuantumCircuit c = random_circuit(n, 200, rng);
    const auto start = random_state<double>(n, rng);
    auto s = start;
    simulate(c, s);
    EXPECT_LE(max_abs_diff(s, oracle::reference_simulate(c, start)), 1e-12) << "n=" << n;
  }
}

TEST(Circuit, NormPreservedOverThousandGates) {
  std::mt19937_64 rng(6);
  auto s = random_state<double>(7, rng);
  simulate(random_circuit(7, 1000, rng), s);
  EXPECT_LE(std::abs(norm(s) - 1.0), 1e-10);
}

TEST(Circuit, RandomCircuitRespectsOptions) {
  std::mt19937_64 rng(7);
  bool sawZeroControl = false;
  bool sawMatrix = false;
  for (const Gate& g : random_circuit(5, 2000, rng)) {
    sawZeroControl = sawZeroControl || g.hasZeroControl();
    sawMatrix = sawMatrix || g.kind() == GateKind::U4;
  }
  EXPECT_TRUE(sawZeroControl);
  EXPECT_TRUE(sawMatrix);
  for (const Gate& g : random_circuit(5, 2000, rng, {.qasmCompatible = true})) {
    ASSERT_FALSE(g.hasZeroControl());
    ASSERT_NE(g.kind(), GateKind::U2);
    ASSERT_NE(g.kind(), GateKind::U4);
    ASSERT_NE(g.kind(), GateKind::CU2);
  }
  for (const Gate& g : random_circuit(1, 100, rng)) ASSERT_EQ(arity(g.kind()), 1);
}

TEST(Circuit, SinglePrecisionSimulation) {
  std::mt19937_64 rng(8);
  const QuantumCircuit c = random_circuit(6, 200, rng);
  const auto start = random_state<double>(6, rng);
  auto s = state_cast<float>(start);
  simulate(c, s);
  EXPECT_LE(max_abs_diff(s, oracle::reference_simulate(c, start)), 1e-5);
}
