#include "flipcalc/dsl.hpp"

#include <variant>

namespace flipcalc::dsl {

namespace {

std::string where(const Node& n) {
  return "line " + std::to_string(n.span.line) + ", column " + std::to_string(n.span.column) +
         ": ";
}

using Value = std::variant<Integer, sod::Ledger>;

Value eval_value(const Node& n, const sod::RuleTable& rules);

sod::Ledger as_ledger(const Value& v, const Node& n) {
  if (const auto* l = std::get_if<sod::Ledger>(&v)) return *l;
  throw EvalError(where(n) + "expected a ledger, found the integer " +
                  to_string(std::get<Integer>(v)));
}

Value eval_value(const Node& n, const sod::RuleTable& rules) {
  switch (n.kind) {
    case NodeKind::IntLit: return n.value;
    case NodeKind::Atom: return sod::Ledger{{n.name, 1}};
    case NodeKind::LedgerLiteral: {
      sod::Ledger l;
      for (const auto& [name, m] : n.entries) l.add(name, m);
      return l;
    }
    case NodeKind::Sym2:
      return sod::sym2_ledger(as_ledger(eval_value(n.children.at(0), rules), n.children[0]),
                              rules);
    case NodeKind::Hilb2:
      return sod::hilb2_ledger(as_ledger(eval_value(n.children.at(0), rules), n.children[0]),
                               to_long(n.value), rules);
    case NodeKind::Tensor: {
      const std::string& a = n.children.at(0).name;
      const std::string& b = n.children.at(1).name;
      const sod::Ledger* t = rules.tensor(a, b);
      if (!t) throw sod::UnresolvedPair("unresolved pair: " + a + " (*) " + b);
      return *t;
    }
    case NodeKind::Sum: {
      Value acc = Integer(0);
      bool have_ledger = false;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        Value v = eval_value(n.children[i], rules);
        const bool neg = n.negated.at(i);
        if (const auto* x = std::get_if<Integer>(&v)) {
          if (have_ledger) throw EvalError(where(n) + "cannot add an integer to a ledger");
          std::get<Integer>(acc) += neg ? Integer(-*x) : *x;
          continue;
        }
        if (neg) throw EvalError(where(n.children[i]) + "ledgers cannot be subtracted");
        if (!have_ledger) {
          if (i > 0) throw EvalError(where(n) + "cannot add a ledger to an integer");
          acc = sod::Ledger{};
          have_ledger = true;
        }
        std::get<sod::Ledger>(acc) += std::get<sod::Ledger>(v);
      }
      return acc;
    }
    case NodeKind::Product: {
      Integer scale = 1;
      std::optional<sod::Ledger> ledger;
      for (const auto& c : n.children) {
        Value v = eval_value(c, rules);
        if (const auto* x = std::get_if<Integer>(&v)) {
          scale *= *x;
        } else if (ledger) {
          throw EvalError(where(c) + "ledgers cannot be multiplied; use (*)");
        } else {
          ledger = std::get<sod::Ledger>(v);
        }
      }
      if (!ledger) return scale;
      if (scale < 0) throw EvalError(where(n) + "negative multiple of a ledger");
      return ledger->scaled(scale);
    }
    case NodeKind::LPow:
      throw EvalError(where(n) + "L has no meaning in a ledger");
    case NodeKind::RuleDef:
      throw EvalError(where(n) + "a rule is not a value");
  }
  throw EvalError(where(n) + "unknown node");
}

}  // namespace

motive::Motive eval_motive(const Node& n) {
  using motive::Motive;
  switch (n.kind) {
    case NodeKind::IntLit: return Motive(n.value);
    case NodeKind::LPow: return Motive::lefschetz(n.value.get_ui());
    case NodeKind::Atom: return Motive::atom(n.name);
    case NodeKind::Sym2: return motive::sym2_class(eval_motive(n.children.at(0)));
    case NodeKind::Hilb2:
      return motive::hilbert_square_class(eval_motive(n.children.at(0)), to_long(n.value));
    case NodeKind::Sum: {
      Motive acc;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (n.negated.at(i)) acc -= eval_motive(n.children[i]);
        else acc += eval_motive(n.children[i]);
      }
      return acc;
    }
    case NodeKind::Product: {
      Motive acc(1);
      for (const auto& c : n.children) acc *= eval_motive(c);
      return acc;
    }
    case NodeKind::Tensor:
      throw EvalError(where(n) + "(*) applies to category atoms, not motives");
    case NodeKind::LedgerLiteral:
      throw EvalError(where(n) + "a ledger is not a motive");
    case NodeKind::RuleDef:
      throw EvalError(where(n) + "a rule is not a value");
  }
  throw EvalError(where(n) + "unknown node");
}

sod::Ledger eval_ledger(const Node& n, const sod::RuleTable& rules) {
  return rules.normalize(as_ledger(eval_value(n, rules), n));
}

std::variant<Integer, sod::Ledger> eval_count(const Node& n, const sod::RuleTable& rules) {
  Value v = eval_value(n, rules);
  if (auto* l = std::get_if<sod::Ledger>(&v)) return rules.normalize(*l);
  return v;
}

}  // namespace flipcalc::dsl
