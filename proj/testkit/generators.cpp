#include "generators.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace flipcalc::testkit {

namespace {

const std::array<const char*, 4> kMotiveAtoms = {"X", "F", "C", "Z"};
const std::array<const char*, 4> kLedgerAtoms = {"DC", "Dpt", "DX", "DSym2C"};
const std::array<const char*, 6> kTreeAtoms = {"X", "F", "C", "DC", "Dpt", "a_1"};

const std::array<const char*, 28> kFuzzTokens = {
    "1", "0", "12345678901234567890", "-", "+", "*", "^", "(", ")", "{", "}", ":", ",",
    "(*)", "=>", "==", "=", "L", "Sym2", "Hilb2", "X", "DC", "#", "\n", " ", "expect",
    "obstruct", "in"};

}  // namespace

long Generator::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

hodge::HodgeDiamond Generator::symmetric_diamond(int max_dim, long max_entry) {
  const int n = static_cast<int>(uniform(0, max_dim));
  hodge::HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      // Fill one representative of each orbit under (p,q) -> (q,p), (n-p,n-q).
      if (d.at(p, q) != 0) continue;
      const long v = (p == 0 && q == 0) ? 1 : uniform(0, max_entry);
      d.set(p, q, v);
      d.set(q, p, v);
      d.set(n - p, n - q, v);
      d.set(n - q, n - p, v);
    }
  }
  return d.validated();
}

hodge::HodgeDiamond Generator::small_diamond(int max_dim, long max_total) {
  const int n = static_cast<int>(uniform(0, max_dim));
  hodge::HodgeDiamond d(n);
  long left = uniform(0, max_total);
  while (left > 0) {
    d.add(static_cast<int>(uniform(0, n)), static_cast<int>(uniform(0, n)), 1);
    --left;
  }
  return d;
}

motive::Motive Generator::motive(int max_terms) {
  motive::Motive m;
  const long terms = uniform(0, max_terms);
  for (long t = 0; t < terms; ++t) {
    motive::Monomial mono;
    mono.lpow = static_cast<unsigned long>(uniform(0, 4));
    const long atoms = uniform(0, 2);
    for (long a = 0; a < atoms; ++a) mono.atoms.push_back(kMotiveAtoms[uniform(0, 3)]);
    std::sort(mono.atoms.begin(), mono.atoms.end());
    m += motive::Motive::term(uniform(-5, 5), mono);
  }
  return m;
}

sod::Ledger Generator::ledger(int max_atoms) {
  sod::Ledger l;
  const long atoms = uniform(0, max_atoms);
  for (long a = 0; a < atoms; ++a) l.add(kLedgerAtoms[uniform(0, 3)], uniform(1, 30));
  return l;
}

dsl::Node Generator::expression(int depth) {
  using dsl::Node;
  using dsl::NodeKind;
  auto leaf = [&]() {
    Node n{NodeKind::IntLit, {}, 0, {}, {}, {}, {}};
    switch (uniform(0, 3)) {
      case 0: n.value = uniform(0, 1000); break;
      case 1:
        n.kind = NodeKind::LPow;
        n.value = uniform(1, 6);
        break;
      case 2:
        n.kind = NodeKind::Atom;
        n.name = kTreeAtoms[uniform(0, 5)];
        break;
      default: {
        n.kind = NodeKind::Tensor;
        n.children.push_back(Node{NodeKind::Atom, {}, 0, kTreeAtoms[uniform(0, 5)], {}, {}, {}});
        n.children.push_back(Node{NodeKind::Atom, {}, 0, kTreeAtoms[uniform(0, 5)], {}, {}, {}});
      }
    }
    return n;
  };
  if (depth <= 0) return leaf();
  switch (uniform(0, 5)) {
    case 0: return leaf();
    case 1: {
      Node n{NodeKind::Sum, {}, 0, {}, {}, {}, {}};
      const long count = uniform(1, 3);
      for (long i = 0; i < count; ++i) {
        n.children.push_back(expression(depth - 1));
        n.negated.push_back(uniform(0, 1) == 1);
      }
      // A lone unnegated term is not a sum.
      if (count == 1) n.negated[0] = true;
      return n;
    }
    case 2: {
      Node n{NodeKind::Product, {}, 0, {}, {}, {}, {}};
      const long count = uniform(2, 3);
      for (long i = 0; i < count; ++i) n.children.push_back(expression(depth - 1));
      return n;
    }
    case 3: {
      Node n{NodeKind::Sym2, {}, 0, {}, {}, {}, {}};
      n.children.push_back(expression(depth - 1));
      return n;
    }
    case 4: {
      Node n{NodeKind::Hilb2, {}, 0, {}, {}, {}, {}};
      n.value = uniform(1, 5);
      n.children.push_back(expression(depth - 1));
      return n;
    }
    default: {
      Node n{NodeKind::LedgerLiteral, {}, 0, {}, {}, {}, {}};
      std::set<std::string> names;
      const long count = uniform(0, 3);
      for (long i = 0; i < count; ++i) names.insert(kLedgerAtoms[uniform(0, 3)]);
      for (const auto& name : names) n.entries.emplace_back(name, uniform(0, 99));
      return n;
    }
  }
}

std::string Generator::fuzz_bytes(std::size_t max_len) {
  const std::size_t len = static_cast<std::size_t>(uniform(0, static_cast<long>(max_len)));
  std::string out;
  out.reserve(len);
  const long mode = uniform(0, 2);
  while (out.size() < len) {
    // mode 0: raw bytes, 1: tokens, 2: mixed
    const bool token = mode == 1 || (mode == 2 && uniform(0, 1) == 1);
    if (token) out += kFuzzTokens[uniform(0, kFuzzTokens.size() - 1)];
    else out += static_cast<char>(uniform(0, 255));
  }
  out.resize(len);
  return out;
}

}  // namespace flipcalc::testkit
