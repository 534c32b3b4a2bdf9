#include "flipcalc/dsl.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace flipcalc::dsl {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

std::string show_byte(unsigned char c) {
  if (std::isprint(c)) return std::string("'") + static_cast<char>(c) + "'";
  std::array<char, 8> buf{};
  std::snprintf(buf.data(), buf.size(), "0x%02X", c);
  return buf.data();
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::vector<std::string> expected, std::string found)
    : Error("line " + std::to_string(span.line) + ", column " + std::to_string(span.column) +
            ": expected " + join(expected) + ", found " + found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool is_reserved_word(const std::string& word) {
  static const std::array<const char*, 10> kWords = {
      "L", "Sym2", "Hilb2", "expect", "assign", "obstruct", "in", "euler", "OBSTRUCTED",
      "INCONCLUSIVE"};
  for (const char* w : kWords) {
    if (word == w) return true;
  }
  return false;
}

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Int: return "integer";
    case TokenKind::Ident: return "name";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Tensor: return "'(*)'";
    case TokenKind::Arrow: return "'=>'";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::Eq: return "'='";
    case TokenKind::Newline: return "end of line";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view in, bool keep_newlines) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto span_at = [&](std::size_t start, std::size_t end) {
    return SourceSpan{start, end, line, start - line_start + 1};
  };
  auto push = [&](TokenKind kind, std::size_t len) {
    out.push_back({kind, std::string(in.substr(i, len)), span_at(i, i + len)});
    i += len;
  };
  while (i < in.size()) {
    const auto c = static_cast<unsigned char>(in[i]);
    if (c == '\n') {
      if (keep_newlines) push(TokenKind::Newline, 1);
      else ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < in.size() && in[i] != '\n') ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
      push(TokenKind::Int, j - i);
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_')) {
        ++j;
      }
      push(TokenKind::Ident, j - i);
      continue;
    }
    const std::string_view rest = in.substr(i);
    if (rest.starts_with("(*)")) { push(TokenKind::Tensor, 3); continue; }
    if (rest.starts_with("=>")) { push(TokenKind::Arrow, 2); continue; }
    if (rest.starts_with("==")) { push(TokenKind::EqEq, 2); continue; }
    switch (c) {
      case '+': push(TokenKind::Plus, 1); continue;
      case '-': push(TokenKind::Minus, 1); continue;
      case '*': push(TokenKind::Star, 1); continue;
      case '^': push(TokenKind::Caret, 1); continue;
      case '(': push(TokenKind::LParen, 1); continue;
      case ')': push(TokenKind::RParen, 1); continue;
      case '{': push(TokenKind::LBrace, 1); continue;
      case '}': push(TokenKind::RBrace, 1); continue;
      case ':': push(TokenKind::Colon, 1); continue;
      case ',': push(TokenKind::Comma, 1); continue;
      case '=': push(TokenKind::Eq, 1); continue;
      default: break;
    }
    throw ParseError(span_at(i, i + 1), {"a token"}, show_byte(c));
  }
  out.push_back({TokenKind::End, "", span_at(in.size(), in.size())});
  return out;
}

}  // namespace flipcalc::dsl
