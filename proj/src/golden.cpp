#include "flipcalc/golden.hpp"

#include "flipcalc/builtins.hpp"
#include "flipcalc/dsl.hpp"
#include "flipcalc/fano.hpp"
#include "flipcalc/motive.hpp"
#include "flipcalc/sod.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <algorithm>

namespace flipcalc::golden {

namespace {

using hodge::HodgeDiamond;

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + to_string(x);
  return out;
}

class Recorder {
 public:
  explicit Recorder(int criterion) : criterion_(criterion) {}

  void check(std::string name, std::string inputs, std::string expected, std::string computed,
             const char* provenance) {
    const bool pass = expected == computed;
    out_.push_back({std::move(name), criterion_, std::move(inputs), std::move(expected),
                    std::move(computed), pass, provenance});
  }
  void check(std::string name, std::string inputs, const Integer& expected,
             const Integer& computed, const char* provenance) {
    check(std::move(name), std::move(inputs), to_string(expected), to_string(computed),
          provenance);
  }
  void check(std::string name, std::string inputs, bool computed, const char* provenance) {
    check(std::move(name), std::move(inputs), "true", computed ? "true" : "false", provenance);
  }
  /// Counts failures of a family of subchecks and reports them as one line.
  void tally(std::string name, std::string inputs, long failures, std::string first_failure,
             const char* provenance) {
    check(std::move(name), std::move(inputs), "0 failures",
          failures == 0 ? "0 failures"
                        : std::to_string(failures) + " failures, first: " + first_failure,
          provenance);
  }

  std::vector<CheckReport> take() { return std::move(out_); }

 private:
  int criterion_;
  std::vector<CheckReport> out_;
};

void c1_hilbert_square(Recorder& r, const Catalog& cat) {
  const HodgeDiamond x = cat.get("quartic-double-solid");
  const HodgeDiamond h = hodge::hilbert_square(x);
  r.check("hilb2 column of the quartic double solid", "builtin quartic-double-solid",
          "1 2 4 104 4 2 1", join(h.diagonal()), "reference");
  r.check("hh0 of the Hilbert square", "builtin quartic-double-solid", 118, hodge::hh0(h),
          "reference");
  r.check("Hilbert square is Serre-dual in dim 6", "builtin quartic-double-solid", "",
          h.symmetry_violation(), "derived");
  const Integer e = hodge::euler_characteristic(x);
  r.check("e(X^[2]) = e(e+1)/2 + 2e", "builtin quartic-double-solid", e * (e + 1) / 2 + 2 * e,
          hodge::euler_characteristic(h), "derived");
}

void c2_obstruction(Recorder& r, const Catalog& cat) {
  const HodgeDiamond f = cat.get("f1-quartic-double-solid");
  const HodgeDiamond h = hodge::hilbert_square(cat.get("quartic-double-solid"));
  r.check("hh0 of F1(X)", "builtin f1-quartic-double-solid", 222, hodge::hh0(f), "reference");
  const auto ob = sod::embedding_obstruction(hodge::hh0(f), h);
  r.check("F1(X) into X^[2] obstructed", "222 vs 118", "OBSTRUCTED",
          sod::to_string(ob.verdict), "reference");
}

void c3_degree2(Recorder& r, const Catalog& cat) {
  const sod::RuleTable rules = sod::RuleTable::standard();
  const sod::Ledger sym = sod::sym2_ledger(sod::Ledger{{"Dpt", 10}}, rules);
  r.check("Sym2 of 10 exceptional objects", "{Dpt:10}", "{Dpt:65}", dsl::print_canonical(sym),
          "reference");
  r.check("total = 10*9/2 + 2*10", "{Dpt:10}", Integer(10 * 9 / 2 + 2 * 10), sym.total(),
          "derived");
  const auto hh = hodge::hh0(hodge::hilbert_square(cat.get("degree2-del-pezzo-surface")));
  r.check("hh0 of S^[2] agrees with the ledger", "builtin degree2-del-pezzo-surface", sym.total(),
          hh, "derived");
  const auto ob = sod::embedding_obstruction(56, sym.total());
  r.check("56 lines against 65 objects", "56 vs 65", "INCONCLUSIVE", sod::to_string(ob.verdict),
          "reference");
}

void c4_consistency(Recorder& r) {
  const auto rows = sod::conjecture_consistency(15);
  for (const auto& row : rows) {
    const std::string in = "n = " + std::to_string(row.n);
    if (!row.in_range) {
      r.check("n = 3 is flagged outside the range", in, row.n == 3, "derived");
      continue;
    }
    r.check("hilb2 = fano + pencil", in, dsl::print_canonical(row.hilb2),
            dsl::print_canonical(row.fano + row.pencil), "derived");
  }
  const auto fano5 = sod::fano_conjecture_ledger(5).ledger;
  const auto pencil5 = sod::pencil_conjecture_ledger(5).ledger;
  const auto hilb5 = sod::hilb2_ledger(sod::two_quadrics_ledger(5), 5, sod::RuleTable::standard());
  auto split = [&](const std::string& atom) {
    return to_string(hilb5.count(atom)) + " = " + to_string(fano5.count(atom)) + " + " +
           to_string(pencil5.count(atom));
  };
  r.check("n = 5: copies of D(C)", "n = 5", "8 = 2 + 6", split("DC"), "reference");
  r.check("n = 5: points", "n = 5", "26 = 2 + 24", split("Dpt"), "reference");
}

void c5_codim(Recorder& r) {
  using fano::Family;
  for (Family f : {Family::Cubic, Family::TwoQuadrics, Family::Gr25Section}) {
    long failures = 0;
    long checks = 0;
    std::string first;
    for (const auto& rep : fano::verify_codim_grid(f)) {
      for (const auto& c : rep.checks) {
        ++checks;
        if (c.pass()) continue;
        if (failures++ == 0) {
          first = "n=" + std::to_string(rep.n) + " k=" + std::to_string(rep.k) + " " + c.name;
        }
      }
    }
    r.tally("codimension grid", fano::to_string(f) + ", " + std::to_string(checks) + " identities",
            failures, first, "derived");
    for (const auto& s : fano::verify_codim_symbolic(f)) {
      r.check("symbolic: " + s.name, fano::to_string(f), s.lhs, s.pass ? s.lhs : s.rhs, "derived");
    }
  }
  // Gr(2,5) anchors from the closing identity.
  for (long n = 2; n <= 6; ++n) {
    const auto rep = fano::verify_codim_identity(Family::Gr25Section, n, 0);
    r.check("gr25 k=0 value 2n-3", "n = " + std::to_string(n), Integer(2 * n - 3),
            rep.checks.at(0).lhs, "reference");
  }
  for (long n = 4; n <= 6; ++n) {
    const auto rep = fano::verify_codim_identity(Family::Gr25Section, n, 1);
    r.check("gr25 k=1 value 3n-11", "n = " + std::to_string(n), Integer(3 * n - 11),
            rep.checks.at(0).lhs, "reference");
  }
}

void c6_gr25_table(Recorder& r) {
  const char* expected[] = {"0 - - -", "2 - - -", "4 1 0 -", "6 4 3 0", "8 7 6 4"};
  for (long n = 2; n <= 6; ++n) {
    std::string row;
    for (const auto& c : fano::gr25_column(n)) {
      row += (row.empty() ? "" : " ") + (c.empty ? std::string("-") : to_string(c.value));
    }
    r.check("Gr(2,5) column F1 F2sigma F2tau F3", "dim X = " + std::to_string(n),
            expected[n - 2], row, "reference");
  }
  const char* regimes[] = {"F_k_empty", "F_k_empty", "grassmann_bundle", "disjoint_union",
                           "disjoint_union"};
  for (long n = 2; n <= 6; ++n) {
    r.check("k = 2 regime", "dim X = " + std::to_string(n), regimes[n - 2],
            fano::to_string(fano::emptiness_threshold(fano::Family::Gr25Section, n, 2)),
            "reference");
  }
}

void c7_splittings(Recorder& r) {
  long failures = 0;
  std::string first;
  auto fail = [&](std::string what) {
    if (failures++ == 0) first = std::move(what);
  };
  for (long n = 2; n <= 30; ++n) {
    const auto types = fano::enumerate_line_splittings(n);
    std::vector<fano::Splitting> expected;
    if (n >= 3) {
      fano::Splitting a(2, 0);
      a.insert(a.end(), static_cast<std::size_t>(n - 3), 1);
      expected.push_back(a);
    }
    fano::Splitting b{-1};
    b.insert(b.end(), static_cast<std::size_t>(n - 2), 1);
    expected.push_back(b);
    std::sort(expected.begin(), expected.end());
    auto got = types;
    std::sort(got.begin(), got.end());
    if (got != expected) fail("n=" + std::to_string(n) + " types");
    auto oracle = testkit::brute_force_line_splittings(n, -10);
    std::sort(oracle.begin(), oracle.end());
    if (got != oracle) fail("n=" + std::to_string(n) + " oracle");
    for (const auto& row : fano::hilb2_normal_restriction(n)) {
      if (!row.matches) fail("n=" + std::to_string(n) + " restriction " + fano::to_string(row.line_type));
    }
  }
  r.tally("line splittings, oracle and restriction", "n in [2,30]", failures, first, "reference");
  r.check("n = 2 has one type", "n = 2", "1",
          std::to_string(fano::enumerate_line_splittings(2).size()), "reference");
  r.check("n = 3 types", "n = 3", "O(-1) + O(1); O^2",
          [] {
            auto t = fano::enumerate_line_splittings(3);
            std::sort(t.begin(), t.end());
            return fano::to_string(t.at(0)) + "; " + fano::to_string(t.at(1));
          }(),
          "reference");
}

void c8_taut(Recorder& r) {
  for (long d = -1; d <= 1; ++d) {
    const auto rep = fano::verify_taut_splitting(d, -5, 5);
    r.check("O(d)^[2] splitting, m in [-5,5]", "d = " + std::to_string(d), true, rep.pass,
            "reference");
    r.check("H^1 vanishes", "d = " + std::to_string(d), true, rep.h1_vanishes, "reference");
  }
}

// Blowup along a divisor (c = 1) changes nothing.
motive::Motive blow(const motive::Motive& x, const motive::Motive& z, long c) {
  return c >= 2 ? motive::blowup_class(x, z, c) : x;
}

void c9_motive(Recorder& r) {
  using motive::Motive;
  const Motive f = Motive::atom("F");
  const Motive x = Motive::atom("X");
  long failures = 0;
  std::string first;
  for (unsigned long rr = 0; rr <= 5; ++rr) {
    for (unsigned long s = 0; s <= 5; ++s) {
      // Z = P^r-bundle over F with normal rank s+1; Z' = P^s-bundle with normal rank r+1.
      const Motive xp = x - motive::flip_difference(f, rr, s);
      const Motive lhs = blow(x, f * motive::class_of_pn(rr), static_cast<long>(s) + 1);
      const Motive rhs = blow(xp, f * motive::class_of_pn(s), static_cast<long>(rr) + 1);
      if (lhs != rhs && failures++ == 0) {
        first = "r=" + std::to_string(rr) + " s=" + std::to_string(s);
      }
    }
  }
  r.tally("Bl_Z X = Bl_Z' X' for r,s in [0,5]", "[X] - [X'] = flip_difference", failures, first,
          "derived");
  long nonzero = 0;
  for (unsigned long rr = 0; rr <= 5; ++rr) {
    if (!motive::flip_difference(f, rr, rr).is_zero()) ++nonzero;
  }
  r.check("flip_difference(F, r, r) = 0", "r in [0,5]", Integer(0), Integer(nonzero), "trivial");
  r.check("Sym2[P^1] = [P^2]", "1 + L", dsl::print_canonical(motive::class_of_pn(2)),
          dsl::print_canonical(motive::sym2_class(motive::class_of_pn(1))), "trivial");
  r.check("[(P^2)^[2]]", "1 + L + L^2", "1 + 2*L + 3*L^2 + 2*L^3 + L^4",
          dsl::print_canonical(motive::hilbert_square_class(motive::class_of_pn(2), 2)), "derived");
}

void c10_properties(Recorder& r) {
  {
    long failures = 0;
    std::string first;
    for (long g = 0; g <= 4; ++g) {
      const HodgeDiamond c = HodgeDiamond::curve(g);
      if (!(hodge::sym2(c) == testkit::brute_force_sym2(c)) && failures++ == 0) {
        first = "genus " + std::to_string(g);
      }
    }
    testkit::Generator gen(20260101);
    for (int i = 0; i < 50; ++i) {
      const HodgeDiamond d = gen.small_diamond(3, 8);
      if (!(hodge::sym2(d) == testkit::brute_force_sym2(d)) && failures++ == 0) {
        first = "random diamond " + std::to_string(i);
      }
      const HodgeDiamond sum = hodge::direct_sum(hodge::sym2(d), hodge::alt2(d));
      if (!(sum == hodge::kunneth(d, d)) && failures++ == 0) {
        first = "sym2 + alt2, random diamond " + std::to_string(i);
      }
      if (!(hodge::alt2(d) == testkit::brute_force_alt2(d)) && failures++ == 0) {
        first = "alt2, random diamond " + std::to_string(i);
      }
    }
    r.tally("sym2 against the signed-basis oracle", "genus 0-4 and 50 random diamonds", failures,
            first, "derived");
  }
  {
    long failures = 0;
    std::string first;
    testkit::Generator gen(7);
    const sod::RuleTable empty;
    for (int i = 0; i < 1000; ++i) {
      std::string text;
      bool ok = false;
      try {
        switch (i % 3) {
          case 0: {
            const dsl::Node n = gen.expression(4);
            text = dsl::print_canonical(n);
            ok = dsl::same_tree(dsl::parse_expr(text), n);
            break;
          }
          case 1: {
            const motive::Motive m = gen.motive();
            text = dsl::print_canonical(m);
            ok = dsl::eval_motive(dsl::parse_expr(text)) == m;
            break;
          }
          default: {
            const sod::Ledger l = gen.ledger();
            text = dsl::print_canonical(l);
            ok = dsl::eval_ledger(dsl::parse_expr(text), empty) == l;
          }
        }
      } catch (const Error& e) {
        text += " (" + std::string(e.what()) + ")";
      }
      if (!ok && failures++ == 0) first = text;
    }
    r.tally("parse(print(v)) = v", "1000 generated values", failures, first, "derived");
  }
  {
    long failures = 0;
    std::string first;
    testkit::Generator gen(99);
    for (int i = 0; i < 10000; ++i) {
      const std::string input = gen.fuzz_bytes(4096);
      try {
        (void)dsl::parse(input);
      } catch (const Error&) {
      } catch (const std::exception& e) {
        if (failures++ == 0) first = "input " + std::to_string(i) + ": " + e.what();
      }
      try {
        (void)dsl::parse_script(input);
      } catch (const Error&) {
      } catch (const std::exception& e) {
        if (failures++ == 0) first = "script " + std::to_string(i) + ": " + e.what();
      }
    }
    r.tally("parser totality", "10000 fuzz inputs up to 4 KiB", failures, first, "derived");
  }
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> kCriteria = {
      {1, "Hilbert square of the quartic double solid", 0.1},
      {2, "HH0 obstruction 222 > 118", 0.1},
      {3, "degree-2 del Pezzo surface count 65 vs 56", 0.1},
      {4, "SOD conjecture consistency for odd n in [5,15]", 0.5},
      {5, "codimension identities on the full grids", 2.0},
      {6, "Gr(2,5) Fano scheme dimension table", 0.1},
      {7, "line normal bundle splittings", 1.0},
      {8, "tautological splittings on P^2", 0.5},
      {9, "motivic standard flip identity", 0.5},
      {10, "property suites", 30.0},
  };
  return kCriteria;
}

HodgeDiamond Catalog::get(const std::string& name) const {
  auto it = overrides.find(name);
  if (it != overrides.end()) return it->second;
  return builtins::diamond(name);
}

std::vector<CheckReport> run_criterion(int id, const Catalog& catalog) {
  if (id < 1 || id > static_cast<int>(criteria().size())) {
    throw DomainError("no criterion " + std::to_string(id));
  }
  Recorder r(id);
  try {
    switch (id) {
      case 1: c1_hilbert_square(r, catalog); break;
      case 2: c2_obstruction(r, catalog); break;
      case 3: c3_degree2(r, catalog); break;
      case 4: c4_consistency(r); break;
      case 5: c5_codim(r); break;
      case 6: c6_gr25_table(r); break;
      case 7: c7_splittings(r); break;
      case 8: c8_taut(r); break;
      case 9: c9_motive(r); break;
      case 10: c10_properties(r); break;
    }
  } catch (const std::exception& e) {
    r.check("criterion raised an error", "", "no error", e.what(), "derived");
  }
  return r.take();
}

std::vector<CheckReport> run_golden_suite(const Catalog& catalog) {
  std::vector<CheckReport> out;
  for (const auto& c : criteria()) {
    auto part = run_criterion(c.id, catalog);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

nlohmann::json to_json(const CheckReport& report) {
  return {{"name", report.name},
          {"criterion", report.criterion},
          {"inputs", report.inputs},
          {"expected", report.expected},
          {"computed", report.computed},
          {"pass", report.pass},
          {"provenance", report.provenance}};
}

}  // namespace flipcalc::golden
