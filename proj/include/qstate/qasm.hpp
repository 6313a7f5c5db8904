#pragma once

// openQASM 2.0 subset: a single qreg, qelib1 gate statements, constant angle
// expressions over numbers and `pi`, and `//` line comments.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qstate/circuit.hpp"

namespace qstate::qasm {

enum class ErrorKind { Syntax, UnsupportedGate, UnsupportedFeature, Semantic };

std::string_view to_string(ErrorKind kind);

/// Parse failure at a 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// A circuit gate with no openQASM 2.0 spelling.
class SerializationError : public std::runtime_error {
 public:
  SerializationError(std::size_t gateIndex, const std::string& message);
  std::size_t gateIndex() const noexcept { return gateIndex_; }

 private:
  std::size_t gateIndex_;
};

struct Statement {
  std::string name;
  std::vector<double> params;
  std::vector<int> operands;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Program {
  std::string version = "2.0";
  std::string registerName = "q";
  int registerSize = 0;
  std::vector<Statement> statements;
};

/// Syntax-level parse; validates register references and operand bounds.
Program parse_program(std::string_view text);

/// Maps statements onto gates; unknown names raise ErrorKind::UnsupportedGate.
QuantumCircuit to_circuit(const Program& program);

QuantumCircuit parse(std::string_view text);

/// LF-terminated program text. Angles use 17 significant digits.
std::string emit(const QuantumCircuit& c);

}  // namespace qstate::qasm
