// Copyright 2026 The zxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxkit/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "zxkit/errors.hpp"

namespace zxkit {

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.line = line_;
      t.col = col_;
      if (i_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
          t.text += take();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.'))
          t.text += take();
        if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
          t.text += take();
          if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) t.text += take();
          while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t.text += take();
        }
      } else if (c == '"') {
        t.kind = Tok::String;
        take();
        while (i_ < s_.size() && s_[i_] != '"' && s_[i_] != '\n') t.text += take();
        if (i_ >= s_.size() || s_[i_] != '"')
          throw QasmSyntaxError("unterminated string", t.line, t.col);
        take();
      } else if (std::string(";,()[]*/-+").find(c) != std::string::npos) {
        t.kind = Tok::Symbol;
        t.text = take();
      } else {
        throw QasmSyntaxError(std::string("unexpected character '") + c + "'", t.line, t.col);
      }
      out.push_back(t);
    }
  }

 private:
  char take() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        take();
      } else if (s_.compare(i_, 2, "//") == 0) {
        while (i_ < s_.size() && s_[i_] != '\n') take();
      } else {
        return;
      }
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct GateSpec {
  GateKind kind;
  int arity;
  bool param;
};

const std::map<std::string, GateSpec>& gate_table() {
  static const std::map<std::string, GateSpec> t{
      {"h", {GateKind::H, 1, false}},      {"x", {GateKind::X, 1, false}},
      {"z", {GateKind::Z, 1, false}},      {"s", {GateKind::S, 1, false}},
      {"sdg", {GateKind::Sdg, 1, false}},  {"t", {GateKind::T, 1, false}},
      {"tdg", {GateKind::Tdg, 1, false}},  {"rz", {GateKind::RZ, 1, true}},
      {"rx", {GateKind::RX, 1, true}},     {"cx", {GateKind::CNOT, 2, false}},
      {"cz", {GateKind::CZ, 2, false}},    {"swap", {GateKind::SWAP, 2, false}},
  };
  return t;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Circuit run() {
    expect_ident("OPENQASM");
    const Token& v = next();
    if (v.kind != Tok::Number || v.text != "2.0") fail(v, "expected version 2.0");
    expect(";");
    if (peek().kind == Tok::Ident && peek().text == "include") {
      next();
      if (next().kind != Tok::String) fail(prev(), "expected a file name string");
      expect(";");
    }
    expect_ident("qreg");
    reg_ = ident();
    expect("[");
    Circuit c;
    c.width = integer();
    expect("]");
    expect(";");
    while (peek().kind != Tok::End) statement(c);
    return c;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& prev() const { return t_[pos_ - 1]; }
  const Token& next() {
    const Token& t = t_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw QasmSyntaxError(msg, t.line, t.col);
  }

  bool at_symbol(const char* s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  void expect(const char* sym) {
    const Token& t = next();
    if (t.kind != Tok::Symbol || t.text != sym)
      fail(t, std::string("expected '") + sym + "'");
  }

  void expect_ident(const char* word) {
    const Token& t = next();
    if (t.kind != Tok::Ident || t.text != word) fail(t, std::string("expected '") + word + "'");
  }

  std::string ident() {
    const Token& t = next();
    if (t.kind != Tok::Ident) fail(t, "expected an identifier");
    return t.text;
  }

  std::size_t integer() {
    const Token& t = next();
    if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos)
      fail(t, "expected an integer");
    return std::stoull(t.text);
  }

  Phase angle() {
    bool neg = false;
    if (at_symbol("-")) {
      next();
      neg = true;
    }
    std::int64_t k = 1;
    const Token& first = peek();
    if (first.kind == Tok::Number) {
      next();
      const bool integral = first.text.find_first_not_of("0123456789") == std::string::npos;
      if (!integral || !at_symbol("*")) {
        double v = 0;
        try {
          v = std::stod(first.text);
        } catch (const std::exception&) {
          fail(first, "malformed number '" + first.text + "'");
        }
        return Phase::numeric(neg ? -v : v);
      }
      k = std::stoll(first.text);
      next();  // '*'
    }
    const Token& p = next();
    if (p.kind != Tok::Ident || p.text != "pi") fail(p, "expected 'pi' or a number");
    std::int64_t den = 1;
    if (at_symbol("/")) {
      next();
      const Token& dt = peek();
      den = static_cast<std::int64_t>(integer());
      if (den == 0) fail(dt, "division by zero");
    }
    return Phase::exact(neg ? -k : k, den);
  }

  std::size_t operand(const Circuit& c) {
    const Token& r = next();
    if (r.kind != Tok::Ident) fail(r, "expected a qubit operand");
    if (r.text != reg_) fail(r, "unknown register '" + r.text + "'");
    expect("[");
    const Token& it = peek();
    const std::size_t q = integer();
    if (q >= c.width) fail(it, "qubit index out of range");
    expect("]");
    return q;
  }

  void statement(Circuit& c) {
    const Token& name = next();
    if (name.kind != Tok::Ident) fail(name, "expected a gate name");
    if (name.text == "qreg") fail(name, "only one qreg is supported");
    auto it = gate_table().find(name.text);
    if (it == gate_table().end()) throw UnsupportedGate(name.text);
    const GateSpec& spec = it->second;
    Gate g;
    g.kind = spec.kind;
    if (spec.param) {
      expect("(");
      g.phase = angle();
      expect(")");
    } else if (at_symbol("(")) {
      fail(peek(), name.text + " takes no parameter");
    }
    g.q0 = operand(c);
    if (spec.arity == 2) {
      expect(",");
      const Token& t = peek();
      g.q1 = operand(c);
      if (g.q1 == g.q0) fail(t, "repeated qubit operand");
    }
    expect(";");
    c.gates.push_back(g);
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::string reg_;
};

std::string angle_text(const Phase& p) {
  if (!p.is_exact()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", p.radians());
    return buf;
  }
  std::string s = p.num() == 1 ? "pi" : std::to_string(p.num()) + "*pi";
  if (p.den() != 1) s += "/" + std::to_string(p.den());
  return s;
}

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(Lexer(text).run()).run(); }

Circuit load_qasm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_qasm(ss.str());
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.width << "];\n";
  for (const Gate& g : c.gates) {
    os << gate_name(g.kind);
    if (g.kind == GateKind::RZ || g.kind == GateKind::RX) os << "(" << angle_text(g.phase) << ")";
    os << " q[" << g.q0 << "]";
    if (g.two_qubit()) os << ",q[" << g.q1 << "]";
    os << ";\n";
  }
  return os.str();
}

void save_qasm(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << emit_qasm(c);
}

}  // namespace zxkit
