#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "qstate/circuit.hpp"
#include "qstate/qasm.hpp"

using namespace qstate;
using qasm::ErrorKind;
using qasm::ParseError;

namespace {

const std::string kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

struct Failure {
  ErrorKind kind;
  std::size_t line;
  std::size_t column;
};

Failure parse_failure(const std::string& text) {
  try {
    qasm::parse(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return {ErrorKind::Syntax, 0, 0};
}

}  // namespace

TEST(QasmEmit, SingleGate) {
  QuantumCircuit c(1);
  c.push_back(Gate::x(0));
  EXPECT_EQ(qasm::emit(c), kHeader + "qreg q[1];\nx q[0];\n");
}

TEST(QasmEmit, TwoQubitQft) {
  EXPECT_EQ(qasm::emit(build_qft(2)), kHeader +
                                          "qreg q[2];\n"
                                          "h q[0];\n"
                                          "cu1(-1.5707963267948966) q[1],q[0];\n"
                                          "h q[1];\n"
                                          "swap q[0],q[1];\n");
}

TEST(QasmEmit, UnsupportedGatesRaise) {
  std::mt19937_64 rng(1);
  QuantumCircuit c(2);
  c.push_back(Gate::h(0));
  c.push_back(Gate::u2(1, random_unitary_2(rng)));
  try {
    qasm::emit(c);
    FAIL() << "expected SerializationError";
  } catch (const qasm::SerializationError& e) {
    EXPECT_EQ(e.gateIndex(), 1u);
  }

  QuantumCircuit zero(2);
  zero.push_back(Gate::cnot(0, 1, 0));
  EXPECT_THROW(qasm::emit(zero), qasm::SerializationError);
}

TEST(QasmParse, Examples) {
  const QuantumCircuit cx = qasm::parse(kHeader + "qreg q[2];\ncx q[0],q[1];\n");
  ASSERT_EQ(cx.size(), 1u);
  EXPECT_EQ(cx[0], Gate::cnot(0, 1));

  const QuantumCircuit cu1 = qasm::parse(kHeader + "qreg q[3];\ncu1(pi/2) q[2],q[0];\n");
  ASSERT_EQ(cu1.size(), 1u);
  EXPECT_EQ(cu1[0].kind(), GateKind::CP);
  EXPECT_EQ(cu1[0].controls(), (std::vector<ControlSpec>{{2, 1}}));
  EXPECT_EQ(cu1[0].target(), 0);
  EXPECT_DOUBLE_EQ(cu1[0].params()[0], std::numbers::pi / 2);
}

TEST(QasmParse, AliasesAndExpressions) {
  const QuantumCircuit c = qasm::parse(kHeader +
                                       "qreg r[3];\n"
                                       "p(-(pi - 1)*2) r[1];\n"
                                       "u1(3e-1) r[0];\n"
                                       "cp(pi/4) r[0], r[2];\n"
                                       "ccx r[0],r[1],r[2];\n");
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.nbQubits(), 3);
  EXPECT_DOUBLE_EQ(c[0].params()[0], -(std::numbers::pi - 1) * 2);
  EXPECT_EQ(c[1], Gate::p(0, 0.3));
  EXPECT_EQ(c[2], Gate::cp(0, 2, std::numbers::pi / 4));
  EXPECT_EQ(c[3], Gate::ccx(0, 1, 2));
}

TEST(QasmParse, CrlfAndComments) {
  const std::string text =
      "// header comment\r\nOPENQASM 2.0;\r\ninclude \"qelib1.inc\"; // trailing\r\n"
      "qreg q[2];\r\n\r\nh q[0]; // apply h\r\ncz q[0],q[1];\r\n";
  const QuantumCircuit c = qasm::parse(text);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], Gate::h(0));
  EXPECT_EQ(c[1], Gate::cz(0, 1));
}

TEST(QasmRoundTrip, QftSimulatesIdentically) {
  const QuantumCircuit c = build_qft(4);
  const QuantumCircuit back = qasm::parse(qasm::emit(c));
  std::mt19937_64 rng(2);
  const auto start = random_state<double>(4, rng);
  auto a = start, b = start;
  simulate(c, a);
  simulate(back, b);
  EXPECT_LE(max_abs_diff(a, b), 1e-12);
}

TEST(QasmRoundTrip, RandomCircuitsPreserveGateList) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    const QuantumCircuit c = random_circuit(n, 40, rng, {.qasmCompatible = true});
    const QuantumCircuit back = qasm::parse(qasm::emit(c));
    ASSERT_EQ(back.nbQubits(), n);
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      ASSERT_EQ(back[i].kind(), c[i].kind()) << i;
      ASSERT_TRUE(std::ranges::equal(back[i].qubits(), c[i].qubits())) << i;
      ASSERT_TRUE(std::ranges::equal(back[i].controlStates(), c[i].controlStates())) << i;
      ASSERT_EQ(back[i].params().size(), c[i].params().size());
      for (std::size_t k = 0; k < c[i].params().size(); ++k) {
        EXPECT_NEAR(back[i].params()[k], c[i].params()[k], 1e-15);
      }
    }
  }
}

TEST(QasmParse, MalformedInputs) {
  struct Case {
    std::string text;
    ErrorKind kind;
    std::size_t line;
    std::size_t column;
  };
  const std::vector<Case> cases = {
      {"qreg q[1];\n", ErrorKind::Syntax, 1, 1},
      {"OPENQASM 3.0;\n", ErrorKind::UnsupportedFeature, 1, 10},
      {kHeader + "qreg q[2];\nfoo q[0];\n", ErrorKind::UnsupportedGate, 4, 1},
      {kHeader + "qreg q[2];\nh q[2];\n", ErrorKind::Semantic, 4, 5},
      {kHeader + "qreg q[2];\nh r[0];\n", ErrorKind::Semantic, 4, 3},
      {kHeader + "qreg q[2];\nh q[0]\nx q[1];\n", ErrorKind::Syntax, 5, 1},
      {kHeader + "qreg q[2];\ncreg c[2];\n", ErrorKind::UnsupportedFeature, 4, 1},
      {kHeader + "qreg q[2];\nmeasure q[0] -> c[0];\n", ErrorKind::UnsupportedFeature, 4, 1},
      {kHeader + "qreg q[2];\nh q;\n", ErrorKind::UnsupportedFeature, 4, 3},
      {kHeader + "qreg q[2];\nrx(theta) q[0];\n", ErrorKind::UnsupportedFeature, 4, 4},
      {kHeader + "qreg q[2];\ncx q[0];\n", ErrorKind::Semantic, 4, 1},
      {kHeader + "qreg q[2];\ncx q[1],q[1];\n", ErrorKind::Semantic, 4, 1},
      {kHeader + "qreg q[2];\nrz q[0];\n", ErrorKind::Semantic, 4, 1},
      {kHeader + "qreg q[2];\nqreg r[2];\n", ErrorKind::UnsupportedFeature, 4, 1},
      {kHeader + "qreg q[2];\nh q[0] $;\n", ErrorKind::Syntax, 4, 8},
  };
  for (const Case& c : cases) {
    const Failure f = parse_failure(c.text);
    EXPECT_EQ(f.kind, c.kind) << c.text;
    EXPECT_EQ(f.line, c.line) << c.text;
    EXPECT_EQ(f.column, c.column) << c.text;
  }
}

TEST(QasmParse, ErrorMessageCarriesPosition) {
  try {
    qasm::parse(kHeader + "qreg q[1];\nbogus q[0];\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("4:1: ", 0), 0u) << e.what();
  }
}
