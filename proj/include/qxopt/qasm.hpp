#pragma once

// OpenQASM 2.0 subset: one qreg, optional cregs, the nine Clifford+T gates.
// measure and barrier statements are dropped with a warning.

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qxopt/circuit.hpp"
#include "qxopt/error.hpp"

namespace qxopt::qasm {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
};

inline std::string format(const Diagnostic& d) {
  return std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " + d.message;
}

class ParseError : public Error {
public:
  explicit ParseError(Diagnostic d) : Error(format(d)), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }
  const SourceSpan& span() const noexcept { return diagnostic_.span; }

private:
  Diagnostic diagnostic_;
};

struct ParseOptions {
  // Turns dropped-statement warnings into errors.
  bool strict = false;
};

struct ParseResult {
  Circuit circuit;
  std::vector<Diagnostic> warnings;
  std::size_t dropped = 0;
};

namespace detail {

enum class TokenType { Ident, Number, String, Punct };

struct Token {
  TokenType type;
  std::string text;
  SourceSpan span;
};

// Splits the input into ';'-terminated statements.
class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Returns false at end of input. Throws on an unterminated statement.
  bool next_statement(std::vector<Token>& out) {
    out.clear();
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        if (!out.empty()) throw ParseError({out.front().span, "missing ';' at end of statement"});
        return false;
      }
      Token tok = lex_token();
      if (tok.type == TokenType::Punct && tok.text == ";") {
        if (out.empty()) continue;  // stray ';'
        return true;
      }
      out.push_back(std::move(tok));
    }
  }

private:
  SourceSpan here() const { return {line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex_token() {
    SourceSpan span = here();
    char ch = text_[pos_];
    std::size_t start = pos_;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
      return {TokenType::Ident, std::string(text_.substr(start, pos_ - start)), span};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        advance();
      return {TokenType::Number, std::string(text_.substr(start, pos_ - start)), span};
    }
    if (ch == '"') {
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"') advance();
      if (pos_ >= text_.size()) throw ParseError({span, "unterminated string"});
      advance();
      return {TokenType::String, std::string(text_.substr(start, pos_ - start)), span};
    }
    if (ch == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      return {TokenType::Punct, "->", span};
    }
    advance();
    return {TokenType::Punct, std::string(1, ch), span};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline std::optional<GateKind> gate_from_name(std::string_view name) {
  for (GateKind k : kAllGateKinds)
    if (mnemonic(k) == name) return k;
  return std::nullopt;
}

inline std::size_t parse_index(const Token& tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (tok.type != TokenType::Number || ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError({tok.span, "expected an integer, found '" + tok.text + "'"});
  return value;
}

// Parses `name [ index ]` starting at tokens[i]; advances i.
inline std::pair<std::string, std::size_t> parse_indexed(const std::vector<Token>& toks, std::size_t& i,
                                                        SourceSpan stmt_span) {
  auto expect = [&](bool ok, std::string_view what) {
    if (!ok) {
      SourceSpan s = i < toks.size() ? toks[i].span : stmt_span;
      throw ParseError({s, "malformed statement: expected " + std::string(what)});
    }
  };
  expect(i < toks.size() && toks[i].type == TokenType::Ident, "register name");
  std::string name = toks[i++].text;
  expect(i < toks.size() && toks[i].text == "[", "'['");
  ++i;
  expect(i < toks.size(), "index");
  std::size_t index = parse_index(toks[i++]);
  expect(i < toks.size() && toks[i].text == "]", "']'");
  ++i;
  return {name, index};
}

}  // namespace detail

inline ParseResult parse_with_report(std::string_view text, const ParseOptions& options = {}) {
  using detail::Token;
  using detail::TokenType;

  detail::Lexer lexer(text);
  std::vector<Token> toks;
  std::optional<std::string> qreg_name;
  std::size_t qreg_size = 0;
  std::vector<Gate> gates;
  std::vector<Diagnostic> warnings;
  std::size_t dropped = 0;

  auto drop = [&](const Token& head, const std::string& what) {
    Diagnostic d{head.span, what + " statement dropped"};
    if (options.strict) throw ParseError({head.span, what + " statement not allowed in strict mode"});
    warnings.push_back(std::move(d));
    ++dropped;
  };

  while (lexer.next_statement(toks)) {
    const Token& head = toks.front();
    if (head.type != TokenType::Ident) throw ParseError({head.span, "malformed statement near '" + head.text + "'"});
    const std::string& word = head.text;

    if (word == "OPENQASM") {
      if (toks.size() != 2 || toks[1].type != TokenType::Number)
        throw ParseError({head.span, "malformed OPENQASM header"});
      if (toks[1].text.rfind("2", 0) != 0)
        throw ParseError({toks[1].span, "unsupported OpenQASM version " + toks[1].text});
      continue;
    }
    if (word == "include") {
      if (toks.size() != 2 || toks[1].type != TokenType::String)
        throw ParseError({head.span, "malformed include statement"});
      continue;
    }
    if (word == "qreg" || word == "creg") {
      std::size_t i = 1;
      auto [name, size] = detail::parse_indexed(toks, i, head.span);
      if (i != toks.size()) throw ParseError({toks[i].span, "malformed statement: trailing tokens"});
      if (word == "creg") continue;
      if (qreg_name) throw ParseError({head.span, "multiple quantum registers are not supported"});
      if (size == 0) throw ParseError({toks[1].span, "quantum register must have at least one qubit"});
      qreg_name = name;
      qreg_size = size;
      continue;
    }
    if (word == "measure") {
      drop(head, "measure");
      continue;
    }
    if (word == "barrier") {
      drop(head, "barrier");
      continue;
    }
    if (word == "gate" || word == "opaque")
      throw ParseError({head.span, "gate definitions are not supported"});

    auto kind = detail::gate_from_name(word);
    if (!kind) throw ParseError({head.span, "unknown gate '" + word + "'"});
    if (!qreg_name) throw ParseError({head.span, "gate '" + word + "' used before qreg declaration"});

    std::vector<Qubit> operands;
    std::vector<SourceSpan> spans;
    std::size_t i = 1;
    while (true) {
      SourceSpan arg_span = i < toks.size() ? toks[i].span : head.span;
      auto [reg, index] = detail::parse_indexed(toks, i, head.span);
      if (reg != *qreg_name) throw ParseError({arg_span, "unknown register '" + reg + "'"});
      if (index >= qreg_size)
        throw ParseError({arg_span, "qubit index " + std::to_string(index) + " out of range for register '" + reg +
                                        "' of size " + std::to_string(qreg_size)});
      operands.push_back(static_cast<Qubit>(index));
      spans.push_back(arg_span);
      if (i == toks.size()) break;
      if (toks[i].text != ",") throw ParseError({toks[i].span, "malformed statement: expected ','"});
      ++i;
    }
    if (operands.size() != arity(*kind))
      throw ParseError({head.span, "gate '" + word + "' expects " + std::to_string(arity(*kind)) + " operand(s), got " +
                                       std::to_string(operands.size())});
    if (operands.size() == 2 && operands[0] == operands[1])
      throw ParseError({spans[1], "duplicate qubit in '" + word + "'"});
    gates.push_back(Gate::make(*kind, operands));
  }

  if (!qreg_name) throw ParseError({{1, 1}, "missing qreg declaration"});
  return {Circuit(qreg_size, std::move(gates)), std::move(warnings), dropped};
}

inline Circuit parse(std::string_view text, const ParseOptions& options = {}) {
  return parse_with_report(text, options).circuit;
}

// Optional `comments` are written as `//` lines after the header.
inline std::string emit(const Circuit& c, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  for (const auto& line : comments) os << "// " << line << "\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    os << mnemonic(g.kind()) << ' ';
    const char* sep = "";
    for (Qubit q : g.qubits()) {
      os << sep << "q[" << q << "]";
      sep = ",";
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace qxopt::qasm
