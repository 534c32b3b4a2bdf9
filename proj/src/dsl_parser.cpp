#include "flipcalc/dsl.hpp"

namespace flipcalc::dsl {

namespace {

SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
  return {a.start, b.end, a.line, a.column};
}

std::string show(const Token& t) {
  if (t.kind == TokenKind::End || t.kind == TokenKind::Newline) return describe(t.kind);
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_word(const char* w) const { return at(TokenKind::Ident) && peek().text == w; }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().span, std::move(expected), show(peek()));
  }
  const Token& expect(TokenKind k) {
    if (!at(k)) fail({describe(k)});
    return advance();
  }
  void expect_end() {
    if (!at(TokenKind::End)) fail({"an operator", describe(TokenKind::End)});
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) {
        throw ParseError(p.peek().span, {"shallower nesting"}, "depth above " +
                                                                   std::to_string(kMaxDepth));
      }
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  Node expr() {
    DepthGuard guard(*this);
    const SourceSpan start = peek().span;
    Node sum{NodeKind::Sum, start, 0, {}, {}, {}, {}};
    bool neg = false;
    if (at(TokenKind::Minus)) {
      advance();
      neg = true;
    }
    sum.children.push_back(term());
    sum.negated.push_back(neg);
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const bool minus = advance().kind == TokenKind::Minus;
      sum.children.push_back(term());
      sum.negated.push_back(minus);
    }
    if (sum.children.size() == 1 && !neg) return std::move(sum.children.front());
    sum.span = cover(start, sum.children.back().span);
    return sum;
  }

  Node term() {
    Node first = factor();
    if (!at(TokenKind::Star)) return first;
    Node prod{NodeKind::Product, first.span, 0, {}, {}, {}, {}};
    prod.children.push_back(std::move(first));
    while (at(TokenKind::Star)) {
      advance();
      prod.children.push_back(factor());
    }
    prod.span = cover(prod.span, prod.children.back().span);
    return prod;
  }

  Integer integer() {
    const Token& t = expect(TokenKind::Int);
    return Integer(t.text, 10);
  }

  std::string atom_name() {
    if (!at(TokenKind::Ident) || is_reserved_word(peek().text)) fail({"atom name"});
    return advance().text;
  }

  Node atom_or_tensor() {
    const Token& t = peek();
    Node a{NodeKind::Atom, t.span, 0, atom_name(), {}, {}, {}};
    if (!at(TokenKind::Tensor)) return a;
    advance();
    const Token& u = peek();
    Node b{NodeKind::Atom, u.span, 0, atom_name(), {}, {}, {}};
    Node tensor{NodeKind::Tensor, cover(a.span, b.span), 0, {}, {}, {}, {}};
    tensor.children.push_back(std::move(a));
    tensor.children.push_back(std::move(b));
    return tensor;
  }

  Node factor() {
    DepthGuard guard(*this);
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Int: {
        Node n{NodeKind::IntLit, t.span, 0, {}, {}, {}, {}};
        n.value = integer();
        return n;
      }
      case TokenKind::LParen: {
        advance();
        Node inner = expr();
        expect(TokenKind::RParen);
        return inner;
      }
      case TokenKind::LBrace: return ledger();
      case TokenKind::Ident: break;
      default: fail({"integer", "name", "'('", "'{'"});
    }
    if (t.text == "L") {
      Node n{NodeKind::LPow, t.span, 1, {}, {}, {}, {}};
      advance();
      if (at(TokenKind::Caret)) {
        advance();
        const Token& e = peek();
        n.value = integer();
        if (n.value > kMaxLPower) {
          throw ParseError(e.span, {"exponent at most " + std::to_string(kMaxLPower)},
                           "'" + e.text + "'");
        }
        n.span = cover(n.span, e.span);
      }
      return n;
    }
    if (t.text == "Sym2") {
      Node n{NodeKind::Sym2, t.span, 0, {}, {}, {}, {}};
      advance();
      expect(TokenKind::LParen);
      n.children.push_back(expr());
      n.span = cover(n.span, expect(TokenKind::RParen).span);
      return n;
    }
    if (t.text == "Hilb2") {
      Node n{NodeKind::Hilb2, t.span, 0, {}, {}, {}, {}};
      advance();
      expect(TokenKind::LParen);
      const Token& d = peek();
      n.value = integer();
      if (n.value > kMaxLPower) {
        throw ParseError(d.span, {"dimension at most " + std::to_string(kMaxLPower)},
                         "'" + d.text + "'");
      }
      expect(TokenKind::Comma);
      n.children.push_back(expr());
      n.span = cover(n.span, expect(TokenKind::RParen).span);
      return n;
    }
    return atom_or_tensor();
  }

  Node ledger() {
    const Token& open = expect(TokenKind::LBrace);
    Node n{NodeKind::LedgerLiteral, open.span, 0, {}, {}, {}, {}};
    if (!at(TokenKind::RBrace)) {
      while (true) {
        std::string name = atom_name();
        expect(TokenKind::Colon);
        n.entries.emplace_back(std::move(name), integer());
        if (!at(TokenKind::Comma)) break;
        advance();
      }
    }
    if (!at(TokenKind::RBrace)) fail({"','", "'}'"});
    n.span = cover(n.span, advance().span);
    return n;
  }

  Node rule() {
    const SourceSpan start = peek().span;
    Node lhs;
    if (at_word("Sym2")) {
      lhs = Node{NodeKind::Sym2, start, 0, {}, {}, {}, {}};
      advance();
      expect(TokenKind::LParen);
      const Token& a = peek();
      lhs.children.push_back(Node{NodeKind::Atom, a.span, 0, atom_name(), {}, {}, {}});
      lhs.span = cover(start, expect(TokenKind::RParen).span);
    } else {
      lhs = atom_or_tensor();
    }
    expect(TokenKind::Arrow);
    Node rhs = ledger();
    Node n{NodeKind::RuleDef, cover(start, rhs.span), 0, {}, {}, {}, {}};
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  Integer signed_integer() {
    bool neg = false;
    if (at(TokenKind::Minus)) {
      advance();
      neg = true;
    }
    Integer v = integer();
    return neg ? Integer(-v) : v;
  }

  bool at_statement_end() const { return at(TokenKind::Newline) || at(TokenKind::End); }

  Statement statement(std::string_view source) {
    const SourceSpan start = peek().span;
    Statement s{StatementKind::Rule, start, {}, {}, {}, 0, std::nullopt};
    if (at_word("assign")) {
      advance();
      s.kind = StatementKind::Assign;
      s.atom = atom_name();
      expect(TokenKind::Eq);
      s.value = signed_integer();
    } else if (at_word("expect")) {
      advance();
      s.kind = StatementKind::Expect;
      s.operands.push_back(expr());
      expect(TokenKind::EqEq);
      s.operands.push_back(expr());
    } else if (at_word("obstruct")) {
      advance();
      s.kind = StatementKind::Obstruct;
      s.operands.push_back(expr());
      if (!at_word("in")) fail({"'in'"});
      advance();
      s.operands.push_back(expr());
      if (at(TokenKind::EqEq)) {
        advance();
        if (!at_word("OBSTRUCTED") && !at_word("INCONCLUSIVE")) {
          fail({"'OBSTRUCTED'", "'INCONCLUSIVE'"});
        }
        s.verdict = advance().text;
      }
    } else if (at_word("euler")) {
      advance();
      s.kind = StatementKind::Euler;
      s.operands.push_back(expr());
      expect(TokenKind::EqEq);
      s.value = signed_integer();
    } else {
      s.operands.push_back(rule());
    }
    if (!at_statement_end()) fail({"end of line"});
    const SourceSpan last = toks_[pos_ - 1].span;
    s.span = cover(start, last);
    s.text = std::string(source.substr(start.start, last.end - start.start));
    return s;
  }

  std::vector<Statement> script(std::string_view source) {
    std::vector<Statement> out;
    while (true) {
      while (at(TokenKind::Newline)) advance();
      if (at(TokenKind::End)) break;
      out.push_back(statement(source));
    }
    return out;
  }

  bool has_top_level_arrow() const {
    int depth = 0;
    for (const auto& t : toks_) {
      if (t.kind == TokenKind::LParen || t.kind == TokenKind::LBrace) ++depth;
      if (t.kind == TokenKind::RParen || t.kind == TokenKind::RBrace) --depth;
      if (t.kind == TokenKind::Arrow && depth == 0) return true;
    }
    return false;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Node parse_expr(std::string_view input) {
  Parser p(lex(input));
  Node n = p.expr();
  p.expect_end();
  return n;
}

Node parse_ledger(std::string_view input) {
  Parser p(lex(input));
  Node n = p.ledger();
  p.expect_end();
  return n;
}

Node parse_rule(std::string_view input) {
  Parser p(lex(input));
  Node n = p.rule();
  p.expect_end();
  return n;
}

Node parse(std::string_view input) {
  Parser p(lex(input));
  Node n = p.has_top_level_arrow() ? p.rule() : p.expr();
  p.expect_end();
  return n;
}

std::vector<Statement> parse_script(std::string_view input) {
  Parser p(lex(input, true));
  return p.script(input);
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name ||
      a.negated != b.negated || a.entries != b.entries ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_tree(a.children[i], b.children[i])) return false;
  }
  return true;
}

}  // namespace flipcalc::dsl
