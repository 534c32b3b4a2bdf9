#include "flipcalc/sod.hpp"

#include "flipcalc/motive.hpp"

#include <algorithm>
#include <set>

namespace flipcalc::sod {

namespace {

void check_atom_name(const std::string& name) {
  if (!motive::is_valid_atom_name(name)) throw LedgerError("invalid atom name '" + name + "'");
}

std::pair<std::string, std::string> unordered(const std::string& a, const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Integer clamp_zero(const Integer& v) { return v < 0 ? Integer(0) : v; }

}  // namespace

Ledger::Ledger(std::initializer_list<std::pair<std::string, Integer>> entries) {
  for (const auto& [name, mult] : entries) add(name, mult);
}

Integer Ledger::count(const std::string& name) const {
  auto it = mult_.find(name);
  return it == mult_.end() ? Integer(0) : it->second;
}

Integer Ledger::total() const {
  Integer sum = 0;
  for (const auto& [name, m] : mult_) sum += m;
  return sum;
}

void Ledger::add(const std::string& name, const Integer& mult) {
  check_atom_name(name);
  if (mult < 0) throw LedgerError("negative multiplicity for " + name);
  if (mult == 0) return;
  mult_[name] += mult;
}

Ledger& Ledger::operator+=(const Ledger& other) {
  for (const auto& [name, m] : other.mult_) mult_[name] += m;
  return *this;
}

Ledger Ledger::scaled(const Integer& factor) const {
  if (factor < 0) throw LedgerError("negative ledger scale factor");
  Ledger out;
  if (factor == 0) return out;
  for (const auto& [name, m] : mult_) out.mult_[name] = m * factor;
  return out;
}

CategoryAtom::CategoryAtom(std::string name, std::optional<Integer> hh0,
                           std::optional<hodge::HodgeDiamond> diamond)
    : name_(std::move(name)), hh0_(std::move(hh0)), diamond_(std::move(diamond)) {
  check_atom_name(name_);
  if (hh0_ && *hh0_ < 0) throw LedgerError("hh0 of " + name_ + " must be nonnegative");
  if (hh0_ && diamond_ && *hh0_ != hodge::hh0(*diamond_)) {
    throw LedgerError("hh0 of " + name_ + " disagrees with its diamond: " +
                      flipcalc::to_string(*hh0_) + " vs " +
                      flipcalc::to_string(hodge::hh0(*diamond_)));
  }
}

std::optional<Integer> CategoryAtom::hh0() const {
  if (hh0_) return hh0_;
  if (diamond_) return hodge::hh0(*diamond_);
  return std::nullopt;
}

void RuleTable::add_tensor(const std::string& a, const std::string& b, Ledger rhs) {
  check_atom_name(a);
  check_atom_name(b);
  tensor_[unordered(a, b)] = std::move(rhs);
}

void RuleTable::add_sym2(const std::string& a, Ledger rhs) {
  check_atom_name(a);
  sym2_[a] = std::move(rhs);
}

void RuleTable::declare_sym2_atom(const std::string& a) {
  check_atom_name(a);
  if (std::find(sym2_atoms_.begin(), sym2_atoms_.end(), a) == sym2_atoms_.end()) {
    sym2_atoms_.push_back(a);
  }
}

void RuleTable::declare_order(std::vector<std::string> smallest_first) {
  std::set<std::string> seen;
  for (const auto& name : smallest_first) {
    check_atom_name(name);
    if (!seen.insert(name).second) throw LedgerError("atom " + name + " repeated in order");
  }
  order_ = std::move(smallest_first);
  // Recheck existing rules against the new order.
  auto existing = std::move(rules_);
  rules_.clear();
  for (auto& [lhs, rhs] : existing) add_rule(lhs, std::move(rhs));
}

bool RuleTable::reaches(const std::string& from, const std::string& target) const {
  std::vector<std::string> stack{from};
  std::set<std::string> seen;
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    if (cur == target) return true;
    if (!seen.insert(cur).second) continue;
    auto it = rules_.find(cur);
    if (it == rules_.end()) continue;
    for (const auto& [name, m] : it->second.atoms()) stack.push_back(name);
  }
  return false;
}

void RuleTable::add_rule(const std::string& atom, Ledger rhs) {
  check_atom_name(atom);
  if (rules_.count(atom)) throw LedgerError("duplicate rule for " + atom);
  for (const auto& [name, m] : rhs.atoms()) {
    if (reaches(name, atom)) {
      throw LedgerError("rule for " + atom + " does not terminate: " + name + " rewrites back");
    }
  }
  if (!order_.empty()) {
    auto rank = [&](const std::string& name) {
      auto it = std::find(order_.begin(), order_.end(), name);
      if (it == order_.end()) throw LedgerError("atom " + name + " missing from declared order");
      return it - order_.begin();
    };
    for (const auto& [name, m] : rhs.atoms()) {
      if (rank(name) >= rank(atom)) {
        throw LedgerError("rule for " + atom + " uses " + name + ", which is not smaller");
      }
    }
  }
  rules_.emplace(atom, std::move(rhs));
}

const Ledger* RuleTable::tensor(const std::string& a, const std::string& b) const {
  auto it = tensor_.find(unordered(a, b));
  return it == tensor_.end() ? nullptr : &it->second;
}

std::optional<Ledger> RuleTable::sym2(const std::string& a) const {
  if (auto it = sym2_.find(a); it != sym2_.end()) return it->second;
  if (std::find(sym2_atoms_.begin(), sym2_atoms_.end(), a) != sym2_atoms_.end()) {
    return Ledger{{motive::sym2_atom_name(a), 1}};
  }
  return std::nullopt;
}

std::optional<Ledger> RuleTable::rewrite_step(const Ledger& ledger) const {
  for (const auto& [name, m] : ledger.atoms()) {
    if (auto it = rules_.find(name); it != rules_.end()) {
      return substitute(ledger, name, it->second);
    }
  }
  return std::nullopt;
}

Ledger RuleTable::normalize(const Ledger& ledger) const {
  Ledger cur = ledger;
  while (auto next = rewrite_step(cur)) cur = std::move(*next);
  return cur;
}

RuleTable RuleTable::tensor_defaults() {
  RuleTable t;
  t.add_tensor("DC", "Dpt", Ledger{{"DC", 1}});
  t.add_tensor("Dpt", "Dpt", Ledger{{"Dpt", 1}});
  return t;
}

RuleTable RuleTable::standard() {
  RuleTable t = tensor_defaults();
  t.add_sym2("DC", Ledger{{"DSym2C", 1}, {"DC", 1}});
  t.add_sym2("Dpt", Ledger{{"Dpt", 2}});
  return t;
}

Ledger substitute(const Ledger& ledger, const std::string& atom, const Ledger& replacement) {
  const Integer m = ledger.count(atom);
  if (m == 0) throw LedgerError("atom " + atom + " is not in the ledger");
  Ledger out;
  for (const auto& [name, k] : ledger.atoms()) {
    if (name != atom) out.add(name, k);
  }
  return out + replacement.scaled(m);
}

Ledger sym2_ledger(const std::vector<std::string>& components, const RuleTable& rules) {
  Ledger counts;
  for (const auto& c : components) counts.add(c);
  return sym2_ledger(counts, rules);
}

Ledger sym2_ledger(const Ledger& components, const RuleTable& rules) {
  // Sym^2 of m copies of A is m Sym^2 A + C(m,2) A (*) A.
  std::vector<std::pair<std::string, Integer>> items(components.atoms().begin(),
                                                     components.atoms().end());
  Ledger out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [a, m] = items[i];
    auto s = rules.sym2(a);
    if (!s) throw UnresolvedPair("unresolved pair: Sym2(" + a + ")");
    out += s->scaled(m);
    for (std::size_t j = i; j < items.size(); ++j) {
      const auto& [b, k] = items[j];
      const Integer copies = i == j ? binomial(m, 2) : Integer(m * k);
      if (copies == 0) continue;
      const Ledger* t = rules.tensor(a, b);
      if (!t) throw UnresolvedPair("unresolved pair: " + a + " (*) " + b);
      out += t->scaled(copies);
    }
  }
  return rules.normalize(out);
}

Ledger hilb2_ledger(const Ledger& components, long n, const RuleTable& rules) {
  if (n < 2) throw DomainError("hilb2_ledger: n must be at least 2");
  return sym2_ledger(components, rules) + rules.normalize(components).scaled(n - 2);
}

bool ledger_equal(const Ledger& a, const Ledger& b) { return a == b; }

Ledger ledger_subtract(const Ledger& a, const Ledger& b) {
  Ledger out;
  for (const auto& [name, m] : b.atoms()) {
    if (a.count(name) < m) {
      throw LedgerError("cannot subtract " + flipcalc::to_string(m) + " copies of " + name +
                        " from " + flipcalc::to_string(a.count(name)));
    }
  }
  for (const auto& [name, m] : a.atoms()) out.add(name, m - b.count(name));
  return out;
}

Integer additive_invariant(const Ledger& ledger, const std::map<std::string, Integer>& values) {
  Integer sum = 0;
  for (const auto& [name, m] : ledger.atoms()) {
    auto it = values.find(name);
    if (it == values.end()) throw LedgerError("no value assigned to " + name);
    sum += m * it->second;
  }
  return sum;
}

std::string to_string(Verdict v) {
  return v == Verdict::Obstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
}

Obstruction embedding_obstruction(const Integer& candidate_hh0, const Integer& ambient_hh0) {
  return {candidate_hh0 > ambient_hh0 ? Verdict::Obstructed : Verdict::Inconclusive,
          candidate_hh0, ambient_hh0};
}

Obstruction embedding_obstruction(const Integer& candidate_hh0,
                                  const hodge::HodgeDiamond& ambient) {
  return embedding_obstruction(candidate_hh0, hodge::hh0(ambient));
}

Obstruction embedding_obstruction(const Ledger& candidate,
                                  const std::map<std::string, Integer>& hh0_values,
                                  const hodge::HodgeDiamond& ambient) {
  return embedding_obstruction(additive_invariant(candidate, hh0_values), ambient);
}

Ledger two_quadrics_ledger(long n) {
  if (n < 1) throw DomainError("two_quadrics_ledger: n must be positive");
  return Ledger{{"DC", 1}, {"Dpt", n - 1}};
}

ConjectureLedger fano_conjecture_ledger(long n) {
  const Integer dc = n - 3;
  const Integer dpt = binomial(n - 4, 2) + 2 * (n - 4);
  ConjectureLedger out;
  out.in_range = n >= 5;
  out.ledger.add("DSym2C", 1);
  out.ledger.add("DC", clamp_zero(dc));
  out.ledger.add("Dpt", clamp_zero(dpt));
  return out;
}

ConjectureLedger pencil_conjecture_ledger(long n) {
  ConjectureLedger out;
  out.in_range = n >= 1;
  out.ledger.add("DC", clamp_zero(Integer(n + 1)));
  out.ledger.add("Dpt", clamp_zero(Integer(n - 1) * (n + 1)));
  return out;
}

ConjectureLedger clifford_conjecture_ledger(long n) {
  if (n % 2 == 0) throw DomainError("clifford_conjecture_ledger: n must be odd");
  ConjectureLedger out;
  out.in_range = n >= 1;
  out.ledger.add("DCl0", clamp_zero(Integer(n + 1)));
  out.ledger.add("DS", clamp_zero(Integer(n - 1) * (n + 1) / 2));
  return out;
}

Ledger clifford_over_p1(const Ledger& clifford) {
  Ledger out = clifford;
  if (out.count("DCl0") > 0) out = substitute(out, "DCl0", Ledger{{"DC", 1}});
  if (out.count("DS") > 0) out = substitute(out, "DS", Ledger{{"Dpt", 2}});
  return out;
}

std::vector<ConsistencyRow> conjecture_consistency(long n_odd_max) {
  std::vector<ConsistencyRow> rows;
  const RuleTable rules = RuleTable::standard();
  for (long n = 3; n <= n_odd_max; n += 2) {
    ConsistencyRow row;
    row.n = n;
    row.hilb2 = hilb2_ledger(two_quadrics_ledger(n), n, rules);
    const auto fano = fano_conjecture_ledger(n);
    const auto pencil = pencil_conjecture_ledger(n);
    row.fano = fano.ledger;
    row.pencil = pencil.ledger;
    row.in_range = fano.in_range && pencil.in_range;
    row.holds = row.hilb2 == row.fano + row.pencil;
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const Ledger& ledger) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& [name, m] : ledger.atoms()) {
    nlohmann::json mult = m.fits_slong_p() ? nlohmann::json(m.get_si())
                                           : nlohmann::json(flipcalc::to_string(m));
    atoms.push_back({{"name", name}, {"mult", mult}});
  }
  return {{"atoms", atoms}};
}

}  // namespace flipcalc::sod
