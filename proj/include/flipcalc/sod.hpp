#pragma once

#include "flipcalc/hodge.hpp"
#include "flipcalc/integer.hpp"

#include "json.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flipcalc::sod {

/// Absent atom, negative multiplicity, unassigned invariant, bad rule.
class LedgerError : public Error {
 public:
  using Error::Error;
};

/// A Sym^2 or tensor product with no rule in the table.
class UnresolvedPair : public Error {
 public:
  using Error::Error;
};

/// Multiset of category atoms. Zero multiplicities are never stored.
class Ledger {
 public:
  Ledger() = default;
  Ledger(std::initializer_list<std::pair<std::string, Integer>> entries);

  const std::map<std::string, Integer>& atoms() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  Integer count(const std::string& name) const;
  Integer total() const;

  /// Adds mult copies of name; mult must be nonnegative.
  void add(const std::string& name, const Integer& mult = 1);

  Ledger& operator+=(const Ledger& other);
  friend Ledger operator+(Ledger a, const Ledger& b) { return a += b; }
  Ledger scaled(const Integer& factor) const;
  bool operator==(const Ledger& other) const = default;

 private:
  std::map<std::string, Integer> mult_;
};

/// A named component with an optional hh0 value and/or Hodge diamond.
class CategoryAtom {
 public:
  /// Throws LedgerError if both invariants are given and disagree.
  CategoryAtom(std::string name, std::optional<Integer> hh0 = std::nullopt,
               std::optional<hodge::HodgeDiamond> diamond = std::nullopt);

  const std::string& name() const { return name_; }
  /// The attached hh0, or hh0 of the attached diamond; nullopt if neither.
  std::optional<Integer> hh0() const;

 private:
  std::string name_;
  std::optional<Integer> hh0_;
  std::optional<hodge::HodgeDiamond> diamond_;
};

/// Tensor, Sym^2 and atom rewrite rules.
///
/// Atom rules must terminate: adding a rule whose right side reaches its own
/// left side is rejected, and when an order is declared every right-side atom
/// must be strictly smaller than the left side.
class RuleTable {
 public:
  /// Symmetric: a (*) b and b (*) a share one entry.
  void add_tensor(const std::string& a, const std::string& b, Ledger rhs);
  void add_sym2(const std::string& a, Ledger rhs);
  void add_rule(const std::string& atom, Ledger rhs);
  /// Sym2 of `a` resolves to the single atom sym2_atom_name(a) when no rule.
  void declare_sym2_atom(const std::string& a);
  /// Well-order on atom names, smallest first.
  void declare_order(std::vector<std::string> smallest_first);

  const Ledger* tensor(const std::string& a, const std::string& b) const;
  /// Resolves Sym2(a) via a rule or a declared atom; nullptr if neither.
  std::optional<Ledger> sym2(const std::string& a) const;
  const std::map<std::string, Ledger>& rules() const { return rules_; }
  const std::vector<std::string>& order() const { return order_; }

  /// Rewrites every copy of the first atom (by name) that has a rule; nullopt
  /// at a normal form.
  std::optional<Ledger> rewrite_step(const Ledger& ledger) const;
  Ledger normalize(const Ledger& ledger) const;

  /// {DC (*) Dpt = DC, Dpt (*) Dpt = Dpt}.
  static RuleTable tensor_defaults();
  /// tensor_defaults plus Sym2(DC) = {DSym2C, DC} and Sym2(Dpt) = {Dpt:2}.
  static RuleTable standard();

 private:
  bool reaches(const std::string& from, const std::string& target) const;

  std::map<std::pair<std::string, std::string>, Ledger> tensor_;
  std::map<std::string, Ledger> sym2_;
  std::map<std::string, Ledger> rules_;
  std::vector<std::string> sym2_atoms_;
  std::vector<std::string> order_;
};

/// Replaces every copy of atom by the replacement. Throws if atom is absent.
Ledger substitute(const Ledger& ledger, const std::string& atom, const Ledger& replacement);

/// Sym^2 of an SOD with these components: Sym^2 A_i for each i plus A_i (*) A_j
/// for i < j. The result is normalized by the table's atom rules.
Ledger sym2_ledger(const std::vector<std::string>& components, const RuleTable& rules);
Ledger sym2_ledger(const Ledger& components, const RuleTable& rules);

/// sym2_ledger(components) plus (n - 2) copies of the components, n >= 2.
Ledger hilb2_ledger(const Ledger& components, long n, const RuleTable& rules);

bool ledger_equal(const Ledger& a, const Ledger& b);
/// a - b; throws LedgerError when some multiplicity would go negative.
Ledger ledger_subtract(const Ledger& a, const Ledger& b);

/// Sum of multiplicity * value. Throws LedgerError on an unassigned atom.
Integer additive_invariant(const Ledger& ledger, const std::map<std::string, Integer>& values);

enum class Verdict { Obstructed, Inconclusive };
std::string to_string(Verdict v);

struct Obstruction {
  Verdict verdict;
  Integer candidate_hh0;
  Integer ambient_hh0;
};

/// Obstructed exactly when the candidate's hh0 exceeds the ambient's.
Obstruction embedding_obstruction(const Integer& candidate_hh0, const Integer& ambient_hh0);
Obstruction embedding_obstruction(const Integer& candidate_hh0, const hodge::HodgeDiamond& ambient);
Obstruction embedding_obstruction(const Ledger& candidate,
                                  const std::map<std::string, Integer>& hh0_values,
                                  const hodge::HodgeDiamond& ambient);

/// {DC:1, Dpt:n-1}: the components of a smooth intersection of two quadrics
/// of dimension n, with C the associated hyperelliptic curve.
Ledger two_quadrics_ledger(long n);

struct ConjectureLedger {
  Ledger ledger;
  /// False when a count had to be clamped at zero.
  bool in_range = true;
};

/// {DSym2C:1, DC:n-3, Dpt:C(n-4,2)+2(n-4)}, negative counts clamped to 0.
ConjectureLedger fano_conjecture_ledger(long n);
/// {DC:n+1, Dpt:(n-1)(n+1)}.
ConjectureLedger pencil_conjecture_ledger(long n);
/// {DCl0:n+1, DS:(n-1)(n+1)/2}; requires odd n.
ConjectureLedger clifford_conjecture_ledger(long n);
/// DCl0 -> DC and DS -> {Dpt:2}: the base S = P^1 case.
Ledger clifford_over_p1(const Ledger& clifford);

struct ConsistencyRow {
  long n;
  Ledger hilb2;
  Ledger fano;
  Ledger pencil;
  bool in_range;
  bool holds;
};

/// hilb2_ledger(two_quadrics_ledger(n), n) against fano + pencil for odd n in
/// [3, n_odd_max]. Rows outside the range of the counts are flagged.
std::vector<ConsistencyRow> conjecture_consistency(long n_odd_max);

/// {"atoms": [{"name": ..., "mult": ...}, ...]} sorted by name.
nlohmann::json to_json(const Ledger& ledger);

}  // namespace flipcalc::sod
