#include "flipcalc/dsl.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using flipcalc::Integer;
using flipcalc::dsl::Node;
using flipcalc::dsl::NodeKind;
using flipcalc::dsl::ParseError;
using flipcalc::motive::Motive;
using flipcalc::sod::Ledger;
namespace dsl = flipcalc::dsl;

namespace {

Motive mot(const char* text) { return dsl::eval_motive(dsl::parse_expr(text)); }

}  // namespace

TEST(Lexer, Tokens) {
  const auto toks = dsl::lex("Sym2(DC) => {DSym2C:1} # note");
  std::vector<dsl::TokenKind> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  using K = dsl::TokenKind;
  EXPECT_EQ(kinds, (std::vector<K>{K::Ident, K::LParen, K::Ident, K::RParen, K::Arrow, K::LBrace,
                                   K::Ident, K::Colon, K::Int, K::RBrace, K::End}));
  EXPECT_EQ(dsl::lex("a (*) b")[1].kind, K::Tensor);
  EXPECT_EQ(dsl::lex("x\ny", true)[1].kind, K::Newline);
  EXPECT_EQ(dsl::lex("x\ny")[1].span.line, 2u);
}

TEST(Parse, SumOfMonomials) {
  const Node n = dsl::parse("1 + L + L^2");
  ASSERT_EQ(n.kind, NodeKind::Sum);
  ASSERT_EQ(n.children.size(), 3u);
  EXPECT_EQ(n.children[0].kind, NodeKind::IntLit);
  EXPECT_EQ(n.children[1].kind, NodeKind::LPow);
  EXPECT_EQ(n.children[2].value, 2);
}

TEST(Parse, LedgerLiteral) {
  const Node n = dsl::parse("{DSym2C:1, DC:8, Dpt:26}");
  ASSERT_EQ(n.kind, NodeKind::LedgerLiteral);
  ASSERT_EQ(n.entries.size(), 3u);
  EXPECT_EQ(n.entries[1].first, "DC");
  EXPECT_EQ(n.entries[2].second, 26);
  EXPECT_EQ(dsl::parse("{}").entries.size(), 0u);
}

TEST(Parse, RuleDef) {
  const Node n = dsl::parse("Sym2(DC) => {DSym2C:1, DC:1}");
  ASSERT_EQ(n.kind, NodeKind::RuleDef);
  EXPECT_EQ(n.children[0].kind, NodeKind::Sym2);
  EXPECT_EQ(n.children[1].kind, NodeKind::LedgerLiteral);
  EXPECT_EQ(dsl::parse("DC (*) Dpt => {DC:1}").children[0].kind, NodeKind::Tensor);
  EXPECT_EQ(dsl::parse("DS => {Dpt:2}").children[0].kind, NodeKind::Atom);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(mot("1 + 2*L^2"), Motive(1) + 2 * Motive::lefschetz(2));
  EXPECT_EQ(mot("(1 + L)*(1 - L)"), Motive(1) - Motive::lefschetz(2));
  EXPECT_EQ(mot("-L + 3"), Motive(3) - Motive::lefschetz());
  EXPECT_EQ(mot("2*3*X"), 6 * Motive::atom("X"));
}

TEST(Parse, BigIntegers) {
  EXPECT_EQ(mot("123456789012345678901234567890 * X"),
            Motive(Integer("123456789012345678901234567890")) * Motive::atom("X"));
}

TEST(Parse, CommentsAndWhitespace) {
  EXPECT_EQ(mot("  1 +\tL # trailing\n"), 1 + Motive::lefschetz());
}

TEST(ParseError, ReportsSpanExpectedAndFound) {
  try {
    dsl::parse_expr("1 +\n  * L");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 2u);
    EXPECT_EQ(e.span().column, 3u);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_EQ(e.found(), "'*'");
    EXPECT_EQ(std::string(e.what()).rfind("line 2, column 3: expected", 0), 0u);
  }
}

TEST(ParseError, Cases) {
  for (const char* bad : {"", "1 +", "(1", "L^", "L^-1", "Sym2 X", "{DC:}", "{DC:1,}", "{DC 1}",
                          "X (*) 2", "1 2", "Hilb2(X, 1)", "L => {}", "@", "L^1000001",
                          "Hilb2(1000001, X)", "expect"}) {
    EXPECT_THROW(dsl::parse(bad), ParseError) << bad;
  }
}

TEST(ParseError, DeepNestingIsAnError) {
  std::string deep(5000, '(');
  deep += "1";
  deep += std::string(5000, ')');
  EXPECT_THROW(dsl::parse(deep), ParseError);
  std::string ok(50, '(');
  ok += "1";
  ok += std::string(50, ')');
  EXPECT_NO_THROW(dsl::parse(ok));
}

TEST(Print, Canonical) {
  EXPECT_EQ(dsl::print_canonical(mot("L^2 + 1 + L + L")), "1 + 2*L + L^2");
  EXPECT_EQ(dsl::print_canonical(Ledger{{"Dpt", 65}}), "{Dpt:65}");
  EXPECT_EQ(dsl::print_canonical(Ledger{}), "{}");
  EXPECT_EQ(dsl::print_canonical(Motive()), "0");
  EXPECT_EQ(dsl::print_canonical(mot("-X*L - 2")), "-2 - L*X");
}

TEST(Print, OrderIndependent) {
  EXPECT_EQ(dsl::print_canonical(mot("X*F + L*C - 1")), dsl::print_canonical(mot("-1 + C*L + F*X")));
  Ledger a{{"DC", 1}, {"Dpt", 2}};
  Ledger b;
  b.add("Dpt", 2);
  b.add("DC", 1);
  EXPECT_EQ(dsl::print_canonical(a), dsl::print_canonical(b));
}

TEST(RoundTrip, GeneratedTrees) {
  flipcalc::testkit::Generator gen(21);
  for (int i = 0; i < 1000; ++i) {
    const Node n = gen.expression(4);
    const std::string text = dsl::print_canonical(n);
    const Node back = dsl::parse_expr(text);
    EXPECT_TRUE(dsl::same_tree(back, n)) << text;
    EXPECT_EQ(dsl::print_canonical(back), text);
  }
}

TEST(RoundTrip, GeneratedValues) {
  flipcalc::testkit::Generator gen(22);
  const flipcalc::sod::RuleTable none;
  for (int i = 0; i < 1000; ++i) {
    const Motive m = gen.motive();
    EXPECT_EQ(mot(dsl::print_canonical(m).c_str()), m) << dsl::print_canonical(m);
    const Ledger l = gen.ledger();
    EXPECT_EQ(dsl::eval_ledger(dsl::parse_expr(dsl::print_canonical(l)), none), l);
  }
}

TEST(Fuzz, ParserIsTotal) {
  flipcalc::testkit::Generator gen(23);
  for (int i = 0; i < 10000; ++i) {
    const std::string input = gen.fuzz_bytes(4096);
    try {
      (void)dsl::parse(input);
    } catch (const flipcalc::Error&) {
    }
    try {
      (void)dsl::parse_script(input);
    } catch (const flipcalc::Error&) {
    }
  }
}

TEST(Eval, Ledgers) {
  const auto rules = flipcalc::sod::RuleTable::standard();
  EXPECT_EQ(dsl::eval_ledger(dsl::parse_expr("Sym2({Dpt:10})"), rules), (Ledger{{"Dpt", 65}}));
  EXPECT_EQ(dsl::eval_ledger(dsl::parse_expr("Hilb2(5, {DC:1, Dpt:4})"), rules),
            (Ledger{{"DSym2C", 1}, {"DC", 8}, {"Dpt", 26}}));
  EXPECT_EQ(dsl::eval_ledger(dsl::parse_expr("2*DC + DC (*) Dpt"), rules), (Ledger{{"DC", 3}}));
  EXPECT_THROW(dsl::eval_ledger(dsl::parse_expr("{DC:1} - {DC:1}"), rules), dsl::EvalError);
  EXPECT_THROW(dsl::eval_ledger(dsl::parse_expr("L"), rules), dsl::EvalError);
  EXPECT_THROW(dsl::eval_ledger(dsl::parse_expr("DX (*) DC"), rules),
               flipcalc::sod::UnresolvedPair);
  EXPECT_EQ(std::get<Integer>(dsl::eval_count(dsl::parse_expr("2*3 + 1"), rules)), 7);
}

TEST(Eval, Motives) {
  EXPECT_EQ(dsl::print_canonical(mot("Hilb2(2, 1 + L + L^2)")), "1 + 2*L + 3*L^2 + 2*L^3 + L^4");
  EXPECT_EQ(mot("Sym2(C)"), Motive::atom("Sym2C"));
  EXPECT_THROW(mot("X (*) Y"), dsl::EvalError);
  EXPECT_THROW(mot("{DC:1}"), dsl::EvalError);
}

TEST(Script, Statements) {
  const auto s = dsl::parse_script(
      "# comment\n"
      "Sym2(Dpt) => {Dpt:2}\n"
      "\n"
      "assign Dpt = -1\n"
      "expect Sym2({Dpt:10}) == {Dpt:65}\n"
      "obstruct 56 in 65 == INCONCLUSIVE\n"
      "euler 1 + L == 2\n");
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s[0].kind, dsl::StatementKind::Rule);
  EXPECT_EQ(s[1].kind, dsl::StatementKind::Assign);
  EXPECT_EQ(s[1].value, -1);
  EXPECT_EQ(s[2].span.line, 5u);
  EXPECT_EQ(s[2].text, "expect Sym2({Dpt:10}) == {Dpt:65}");
  EXPECT_EQ(*s[3].verdict, "INCONCLUSIVE");
  EXPECT_EQ(s[4].value, 2);
  EXPECT_THROW(dsl::parse_script("expect 1 == 1 2\n"), ParseError);
  EXPECT_THROW(dsl::parse_script("obstruct 1 in 2 == MAYBE\n"), ParseError);
}
