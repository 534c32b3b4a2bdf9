#include "flipcalc/dsl.hpp"

namespace flipcalc::dsl {

std::string print_canonical(const motive::Motive& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : m.terms()) {
    std::string body;
    if (mono.lpow == 1) body = "L";
    else if (mono.lpow > 1) body = "L^" + std::to_string(mono.lpow);
    for (const auto& a : mono.atoms) {
      if (!body.empty()) body += "*";
      body += a;
    }
    const Integer mag = abs(c);
    std::string t;
    if (body.empty()) t = to_string(mag);
    else if (mag == 1) t = body;
    else t = to_string(mag) + "*" + body;
    if (out.empty()) out = (c < 0 ? "-" : "") + t;
    else out += (c < 0 ? " - " : " + ") + t;
  }
  return out;
}

std::string print_canonical(const sod::Ledger& l) {
  std::string out = "{";
  for (const auto& [name, m] : l.atoms()) {
    if (out.size() > 1) out += ", ";
    out += name + ":" + to_string(m);
  }
  return out + "}";
}

std::string print_canonical(const Node& n) {
  auto wrapped = [](const Node& c, bool need) {
    return need ? "(" + print_canonical(c) + ")" : print_canonical(c);
  };
  switch (n.kind) {
    case NodeKind::IntLit: return to_string(n.value);
    case NodeKind::LPow: return n.value == 1 ? "L" : "L^" + to_string(n.value);
    case NodeKind::Atom: return n.name;
    case NodeKind::Sym2: return "Sym2(" + print_canonical(n.children.at(0)) + ")";
    case NodeKind::Hilb2:
      return "Hilb2(" + to_string(n.value) + ", " + print_canonical(n.children.at(0)) + ")";
    case NodeKind::Tensor:
      return print_canonical(n.children.at(0)) + " (*) " + print_canonical(n.children.at(1));
    case NodeKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const bool neg = n.negated.at(i);
        if (i == 0) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += wrapped(n.children[i], n.children[i].kind == NodeKind::Sum);
      }
      return out;
    }
    case NodeKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += "*";
        const NodeKind k = n.children[i].kind;
        out += wrapped(n.children[i], k == NodeKind::Sum || k == NodeKind::Product);
      }
      return out;
    }
    case NodeKind::LedgerLiteral: {
      std::string out = "{";
      for (std::size_t i = 0; i < n.entries.size(); ++i) {
        if (i > 0) out += ", ";
        out += n.entries[i].first + ":" + to_string(n.entries[i].second);
      }
      return out + "}";
    }
    case NodeKind::RuleDef:
      return print_canonical(n.children.at(0)) + " => " + print_canonical(n.children.at(1));
  }
  return "";
}

}  // namespace flipcalc::dsl
