#pragma once

#include "flipcalc/integer.hpp"
#include "flipcalc/motive.hpp"
#include "flipcalc/sod.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace flipcalc::dsl {

/// Byte offsets [start, end) with the 1-based line and column of start.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::vector<std::string> expected, std::string found);

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Raised by the evaluators for well-formed input with no meaning, such as a
/// tensor product inside a motive.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Keywords that cannot be used as atom names.
bool is_reserved_word(const std::string& word);

enum class TokenKind {
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Tensor,  // (*)
  Arrow,   // =>
  EqEq,
  Eq,
  Newline,
  End,
};

std::string describe(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

/// Splits input into tokens. '#' starts a comment running to the end of the
/// line. Newline tokens are produced only when keep_newlines is set.
std::vector<Token> lex(std::string_view input, bool keep_newlines = false);

enum class NodeKind {
  IntLit,         // value
  LPow,           // value = exponent
  Atom,           // name
  Sym2,           // children[0]
  Hilb2,          // value = n, children[0]
  Tensor,         // children[0], children[1] are atoms
  Sum,            // children with negated flags
  Product,        // children
  LedgerLiteral,  // entries
  RuleDef,        // children[0] = lhs, children[1] = ledger literal
};

struct Node {
  NodeKind kind;
  SourceSpan span;
  Integer value;
  std::string name;
  std::vector<Node> children;
  std::vector<bool> negated;  // Sum only, one per child
  std::vector<std::pair<std::string, Integer>> entries;  // LedgerLiteral only
};

/// Nesting deeper than this is a parse error rather than a stack overflow.
inline constexpr int kMaxDepth = 256;
/// Largest accepted exponent of L, and largest dimension in Hilb2.
inline constexpr unsigned long kMaxLPower = 1000000;

/// expr := ['-'] term (('+'|'-') term)*
/// term := factor ('*' factor)*
/// factor := INT | 'L' ['^' INT] | ATOM ['(*)' ATOM] | 'Sym2' '(' expr ')'
///         | 'Hilb2' '(' INT ',' expr ')' | '(' expr ')' | ledger
/// ledger := '{' [ATOM ':' INT (',' ATOM ':' INT)*] '}'
/// rule := (ATOM | 'Sym2' '(' ATOM ')' | ATOM '(*)' ATOM) '=>' ledger
Node parse_expr(std::string_view input);
Node parse_ledger(std::string_view input);
Node parse_rule(std::string_view input);
/// A rule if the input has a top-level '=>', otherwise an expression.
Node parse(std::string_view input);

enum class StatementKind { Rule, Assign, Expect, Obstruct, Euler };

/// One line of a .sod or .mot script.
///   rule
///   assign ATOM = ['-'] INT
///   expect expr == expr
///   obstruct expr in expr ['==' ('OBSTRUCTED' | 'INCONCLUSIVE')]
///   euler expr == ['-'] INT
struct Statement {
  StatementKind kind;
  SourceSpan span;
  std::string text;  // source of the statement, trimmed
  std::vector<Node> operands;
  std::string atom;
  Integer value;
  std::optional<std::string> verdict;
};

std::vector<Statement> parse_script(std::string_view input);

std::string print_canonical(const motive::Motive& m);
std::string print_canonical(const sod::Ledger& l);
/// Normalized spelling of a syntax tree; parsing it gives an equal tree.
std::string print_canonical(const Node& node);

motive::Motive eval_motive(const Node& node);
/// Ledger value of an expression: ledger literals, atoms (one copy), sums,
/// integer multiples, Sym2, Hilb2 and tensor products resolved by the table.
/// The result is normalized by the table's atom rules.
sod::Ledger eval_ledger(const Node& node, const sod::RuleTable& rules);

/// Like eval_ledger, but expressions built only from integers evaluate to an
/// integer instead of failing.
std::variant<Integer, sod::Ledger> eval_count(const Node& node, const sod::RuleTable& rules);

/// Structural equality of syntax trees, ignoring spans.
bool same_tree(const Node& a, const Node& b);

}  // namespace flipcalc::dsl
