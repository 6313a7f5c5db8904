#include "qstate/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace qstate::qasm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::UnsupportedGate: return "unsupported gate";
    case ErrorKind::UnsupportedFeature: return "unsupported feature";
    case ErrorKind::Semantic: return "semantic error";
  }
  return "error";
}

namespace {

std::string located(ErrorKind kind, std::size_t line, std::size_t column,
                    const std::string& message) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         std::string(to_string(kind)) + ": " + message;
}

}  // namespace

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(located(kind, line, column, message)),
      kind_(kind),
      line_(line),
      column_(column) {}

SerializationError::SerializationError(std::size_t gateIndex, const std::string& message)
    : std::runtime_error("gate " + std::to_string(gateIndex) + ": " + message),
      gateIndex_(gateIndex) {}

namespace {

// Lexer ------------------------------------------------------------------------

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;

    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Tok::Ident;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_')) {
        t.text += advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      t.type = Tok::Number;
      lex_number(t);
    } else if (c == '"') {
      t.type = Tok::String;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        throw ParseError(ErrorKind::Syntax, t.line, t.column, "unterminated string literal");
      }
      advance();
    } else if (std::string_view("()[];,+-*/^").find(c) != std::string_view::npos) {
      t.type = Tok::Symbol;
      t.text = advance();
    } else {
      throw ParseError(ErrorKind::Syntax, t.line, t.column,
                       std::string("unexpected character '") + c + "'");
    }
    return t;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_number(Token& t) {
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      t.text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      t.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text += advance();
      const std::size_t before = t.text.size();
      digits();
      if (t.text.size() == before) {
        throw ParseError(ErrorKind::Syntax, t.line, t.column, "malformed exponent in number");
      }
    }
    if (t.text == ".") {
      throw ParseError(ErrorKind::Syntax, t.line, t.column, "stray '.'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Parser -----------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { cur_ = lexer_.next(); }

  Program run() {
    header();
    while (cur_.type != Tok::End) statement();
    if (!haveRegister_) {
      throw ParseError(ErrorKind::Semantic, cur_.line, cur_.column, "program declares no qreg");
    }
    return std::move(program_);
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const Token& at, const std::string& msg) const {
    throw ParseError(kind, at.line, at.column, msg);
  }

  static std::string describe(const Token& t) {
    switch (t.type) {
      case Tok::End: return "end of input";
      case Tok::String: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  Token take() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  bool at_symbol(char c) const {
    return cur_.type == Tok::Symbol && cur_.text.size() == 1 && cur_.text[0] == c;
  }

  Token expect_symbol(char c) {
    if (!at_symbol(c)) {
      fail(ErrorKind::Syntax, cur_, std::string("expected '") + c + "', found " + describe(cur_));
    }
    return take();
  }

  Token expect(Tok type, const char* what) {
    if (cur_.type != type) {
      fail(ErrorKind::Syntax, cur_, std::string("expected ") + what + ", found " + describe(cur_));
    }
    return take();
  }

  long long integer(const Token& t) {
    long long v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
      fail(ErrorKind::Syntax, t, "expected a non-negative integer, found '" + t.text + "'");
    }
    return v;
  }

  void header() {
    const Token kw = cur_;
    if (kw.type != Tok::Ident || kw.text != "OPENQASM") {
      fail(ErrorKind::Syntax, kw, "program must start with 'OPENQASM 2.0;'");
    }
    take();
    const Token version = expect(Tok::Number, "version number");
    if (version.text != "2.0" && version.text != "2") {
      fail(ErrorKind::UnsupportedFeature, version,
           "only openQASM 2.0 is supported, found version " + version.text);
    }
    expect_symbol(';');
  }

  void statement() {
    const Token head = cur_;
    if (head.type != Tok::Ident) {
      fail(ErrorKind::Syntax, head, "expected a statement, found " + describe(head));
    }
    const std::string& w = head.text;
    if (w == "include") {
      take();
      const Token file = expect(Tok::String, "include file name");
      if (file.text != "qelib1.inc") {
        fail(ErrorKind::UnsupportedFeature, file, "only \"qelib1.inc\" may be included");
      }
      expect_symbol(';');
    } else if (w == "qreg") {
      register_decl();
    } else if (w == "creg" || w == "measure" || w == "barrier" || w == "reset" || w == "if" ||
               w == "gate" || w == "opaque" || w == "OPENQASM") {
      fail(ErrorKind::UnsupportedFeature, head, "'" + w + "' statements are not supported");
    } else {
      gate_statement();
    }
  }

  void register_decl() {
    const Token kw = take();
    if (haveRegister_) {
      fail(ErrorKind::UnsupportedFeature, kw, "only a single qreg is supported");
    }
    const Token name = expect(Tok::Ident, "register name");
    expect_symbol('[');
    const Token size = expect(Tok::Number, "register size");
    const long long n = integer(size);
    if (n < 1 || n > kMaxQubits) {
      fail(ErrorKind::Semantic, size,
           "register size must lie in [1, " + std::to_string(kMaxQubits) + "]");
    }
    expect_symbol(']');
    expect_symbol(';');
    haveRegister_ = true;
    program_.registerName = name.text;
    program_.registerSize = static_cast<int>(n);
  }

  void gate_statement() {
    Statement st;
    const Token name = take();
    st.name = name.text;
    st.line = name.line;
    st.column = name.column;
    if (!haveRegister_) {
      fail(ErrorKind::Semantic, name, "gate '" + st.name + "' used before any qreg declaration");
    }
    if (at_symbol('(')) {
      take();
      if (at_symbol(')')) {
        take();
      } else {
        st.params.push_back(expression());
        while (at_symbol(',')) {
          take();
          st.params.push_back(expression());
        }
        expect_symbol(')');
      }
    }
    st.operands.push_back(operand());
    while (at_symbol(',')) {
      take();
      st.operands.push_back(operand());
    }
    expect_symbol(';');
    program_.statements.push_back(std::move(st));
  }

  int operand() {
    const Token reg = expect(Tok::Ident, "qubit operand");
    if (reg.text != program_.registerName) {
      fail(ErrorKind::Semantic, reg, "unknown register '" + reg.text + "'");
    }
    if (!at_symbol('[')) {
      fail(ErrorKind::UnsupportedFeature, reg,
           "whole-register operands are not supported; index the qubit explicitly");
    }
    take();
    const Token idx = expect(Tok::Number, "qubit index");
    const long long i = integer(idx);
    if (i >= program_.registerSize) {
      fail(ErrorKind::Semantic, idx,
           "qubit index " + idx.text + " out of bounds for " + program_.registerName + "[" +
               std::to_string(program_.registerSize) + "]");
    }
    expect_symbol(']');
    return static_cast<int>(i);
  }

  // expression := term (('+'|'-') term)*
  double expression() {
    double v = term();
    while (at_symbol('+') || at_symbol('-')) {
      const char op = take().text[0];
      const double rhs = term();
      v = op == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  // term := unary (('*'|'/') unary)*
  double term() {
    double v = unary();
    while (at_symbol('*') || at_symbol('/')) {
      const Token op = take();
      const double rhs = unary();
      if (op.text[0] == '/' && rhs == 0.0) fail(ErrorKind::Semantic, op, "division by zero");
      v = op.text[0] == '*' ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (at_symbol('-')) {
      take();
      return -unary();
    }
    if (at_symbol('+')) {
      take();
      return unary();
    }
    return primary();
  }

  double primary() {
    if (at_symbol('(')) {
      take();
      const double v = expression();
      expect_symbol(')');
      return v;
    }
    if (cur_.type == Tok::Number) {
      const Token t = take();
      // std::from_chars for double is unavailable in older libstdc++.
      std::istringstream is(t.text);
      double v = 0.0;
      is >> v;
      if (!is || !is.eof()) fail(ErrorKind::Syntax, t, "malformed number '" + t.text + "'");
      return v;
    }
    if (cur_.type == Tok::Ident && cur_.text == "pi") {
      take();
      return std::numbers::pi;
    }
    if (cur_.type == Tok::Ident) {
      fail(ErrorKind::UnsupportedFeature, cur_,
           "identifier '" + cur_.text + "' in expression; only constants and pi are supported");
    }
    fail(ErrorKind::Syntax, cur_, "expected an expression, found " + describe(cur_));
  }

  Lexer lexer_;
  Token cur_;
  Program program_;
  bool haveRegister_ = false;
};

struct GateSpelling {
  std::string_view name;
  std::size_t params;
  std::size_t operands;
};

std::optional<GateSpelling> lookup(std::string_view name) {
  static constexpr GateSpelling table[] = {
      {"h", 0, 1},  {"x", 0, 1},  {"y", 0, 1},   {"z", 0, 1},   {"p", 1, 1},
      {"u1", 1, 1}, {"rx", 1, 1}, {"ry", 1, 1},  {"rz", 1, 1},  {"cx", 0, 2},
      {"cz", 0, 2}, {"cp", 1, 2}, {"cu1", 1, 2}, {"swap", 0, 2}, {"ccx", 0, 3},
  };
  for (const auto& g : table) {
    if (g.name == name) return g;
  }
  return std::nullopt;
}

Gate make_gate(const Statement& st) {
  const auto& p = st.params;
  const auto& q = st.operands;
  const std::string_view n = st.name;
  if (n == "h") return Gate::h(q[0]);
  if (n == "x") return Gate::x(q[0]);
  if (n == "y") return Gate::y(q[0]);
  if (n == "z") return Gate::z(q[0]);
  if (n == "p" || n == "u1") return Gate::p(q[0], p[0]);
  if (n == "rx") return Gate::rx(q[0], p[0]);
  if (n == "ry") return Gate::ry(q[0], p[0]);
  if (n == "rz") return Gate::rz(q[0], p[0]);
  if (n == "cx") return Gate::cnot(q[0], q[1]);
  if (n == "cz") return Gate::cz(q[0], q[1]);
  if (n == "cp" || n == "cu1") return Gate::cp(q[0], q[1], p[0]);
  if (n == "swap") return Gate::swap(q[0], q[1]);
  return Gate::ccx(q[0], q[1], q[2]);
}

std::string spelling(const Gate& g) {
  switch (g.kind()) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::P: return "u1";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CP: return "cu1";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::CCX: return "ccx";
    case GateKind::U2:
    case GateKind::U4:
    case GateKind::CU2: break;
  }
  return {};
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).run(); }

QuantumCircuit to_circuit(const Program& program) {
  QuantumCircuit circ(program.registerSize);
  for (const Statement& st : program.statements) {
    const auto spec = lookup(st.name);
    if (!spec) {
      throw ParseError(ErrorKind::UnsupportedGate, st.line, st.column,
                       "gate '" + st.name + "' is not supported");
    }
    if (st.params.size() != spec->params) {
      throw ParseError(ErrorKind::Semantic, st.line, st.column,
                       "'" + st.name + "' takes " + std::to_string(spec->params) +
                           " parameter(s), got " + std::to_string(st.params.size()));
    }
    if (st.operands.size() != spec->operands) {
      throw ParseError(ErrorKind::Semantic, st.line, st.column,
                       "'" + st.name + "' takes " + std::to_string(spec->operands) +
                           " qubit(s), got " + std::to_string(st.operands.size()));
    }
    try {
      circ.push_back(make_gate(st));
    } catch (const std::logic_error& e) {
      throw ParseError(ErrorKind::Semantic, st.line, st.column, e.what());
    }
  }
  return circ;
}

QuantumCircuit parse(std::string_view text) { return to_circuit(parse_program(text)); }

std::string emit(const QuantumCircuit& c) {
  std::ostringstream os;
  os.precision(17);
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << c.nbQubits() << "];\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    const std::string name = spelling(g);
    if (name.empty()) {
      throw SerializationError(i, std::string(g.name()) + " has no openQASM 2.0 equivalent");
    }
    if (g.hasZeroControl()) {
      throw SerializationError(i, std::string(g.name()) +
                                      " with a zero control has no qelib1 equivalent");
    }
    os << name;
    if (!g.params().empty()) {
      os << '(';
      for (std::size_t k = 0; k < g.params().size(); ++k) {
        os << (k ? "," : "") << g.params()[k];
      }
      os << ')';
    }
    os << ' ';
    for (std::size_t k = 0; k < g.qubits().size(); ++k) {
      os << (k ? "," : "") << "q[" << g.qubits()[k] << ']';
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace qstate::qasm
