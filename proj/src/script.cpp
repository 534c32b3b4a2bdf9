#include "flipcalc/script.hpp"

#include "flipcalc/dsl.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace flipcalc::script {

namespace {

Integer hh0_of(const std::variant<Integer, sod::Ledger>& v,
               const std::map<std::string, Integer>& values) {
  if (const auto* x = std::get_if<Integer>(&v)) return *x;
  return sod::additive_invariant(std::get<sod::Ledger>(v), values);
}

[[noreturn]] void wrong_kind(const dsl::Statement& s, const char* script_kind) {
  throw dsl::ParseError(s.span, {std::string("a statement valid in ") + script_kind + " scripts"},
                        "'" + s.text + "'");
}

void add_rule(sod::RuleTable& rules, const dsl::Node& rule, const sod::RuleTable& scratch) {
  const dsl::Node& lhs = rule.children.at(0);
  sod::Ledger rhs = dsl::eval_ledger(rule.children.at(1), scratch);
  switch (lhs.kind) {
    case dsl::NodeKind::Atom: rules.add_rule(lhs.name, std::move(rhs)); break;
    case dsl::NodeKind::Sym2: rules.add_sym2(lhs.children.at(0).name, std::move(rhs)); break;
    case dsl::NodeKind::Tensor:
      rules.add_tensor(lhs.children.at(0).name, lhs.children.at(1).name, std::move(rhs));
      break;
    default: throw dsl::EvalError("unsupported rule left side");
  }
}

}  // namespace

bool Result::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Kind kind_for_path(const std::string& path) {
  auto ends = [&](const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends(".sod")) return Kind::Sod;
  if (ends(".mot")) return Kind::Motive;
  throw DomainError("script must end in .sod or .mot: " + path);
}

Result run(std::string_view text, Kind kind) {
  const auto statements = dsl::parse_script(text);
  Result result;
  sod::RuleTable rules = sod::RuleTable::tensor_defaults();
  const sod::RuleTable empty;
  std::map<std::string, Integer> values;
  for (const auto& s : statements) {
    Outcome out{s.span.line, s.text, {}, {}, true};
    switch (s.kind) {
      case dsl::StatementKind::Rule:
        if (kind != Kind::Sod) wrong_kind(s, ".mot");
        add_rule(rules, s.operands.at(0), empty);
        continue;
      case dsl::StatementKind::Assign:
        values[s.atom] = s.value;
        continue;
      case dsl::StatementKind::Expect:
        if (kind == Kind::Sod) {
          const auto a = dsl::eval_ledger(s.operands.at(0), rules);
          const auto b = dsl::eval_ledger(s.operands.at(1), rules);
          out.computed = dsl::print_canonical(a);
          out.expected = dsl::print_canonical(b);
          out.pass = a == b;
        } else {
          const auto a = dsl::eval_motive(s.operands.at(0));
          const auto b = dsl::eval_motive(s.operands.at(1));
          out.computed = dsl::print_canonical(a);
          out.expected = dsl::print_canonical(b);
          out.pass = a == b;
        }
        break;
      case dsl::StatementKind::Obstruct: {
        if (kind != Kind::Sod) wrong_kind(s, ".mot");
        const Integer cand = hh0_of(dsl::eval_count(s.operands.at(0), rules), values);
        const Integer amb = hh0_of(dsl::eval_count(s.operands.at(1), rules), values);
        const auto ob = sod::embedding_obstruction(cand, amb);
        out.computed = sod::to_string(ob.verdict) + " (hh0 " + to_string(cand) + " vs " +
                       to_string(amb) + ")";
        out.expected = s.verdict.value_or("any verdict");
        out.pass = !s.verdict || *s.verdict == sod::to_string(ob.verdict);
        break;
      }
      case dsl::StatementKind::Euler: {
        if (kind != Kind::Motive) wrong_kind(s, ".sod");
        const Integer e = motive::specialize(dsl::eval_motive(s.operands.at(0)), 1, values);
        out.computed = to_string(e);
        out.expected = to_string(s.value);
        out.pass = e == s.value;
        break;
      }
    }
    result.checks.push_back(std::move(out));
  }
  return result;
}

Result run_file(const std::string& path) {
  const Kind kind = kind_for_path(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return run(buf.str(), kind);
}

std::string render(const Result& result) {
  std::ostringstream out;
  for (const auto& c : result.checks) {
    out << (c.pass ? "PASS" : "FAIL") << " line " << c.line << ": " << c.statement
        << "\n     computed " << c.computed << ", expected " << c.expected << "\n";
  }
  return out.str();
}

}  // namespace flipcalc::script
