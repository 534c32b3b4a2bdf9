#include "flipcalc/builtins.hpp"
#include "flipcalc/fano.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using flipcalc::Integer;
using flipcalc::binomial;
using flipcalc::fano::Family;
using flipcalc::fano::Regime;
using flipcalc::sod::Ledger;
namespace fano = flipcalc::fano;

namespace {

Integer dim0(Family f, long n, long j) { return fano::expected_dim_fano(f, n, j).front().value; }

// Monomials of degree e in `vars` variables, by enumeration.
long monomials(int vars, long e) {
  if (e < 0) return 0;
  if (vars == 1) return 1;
  long total = 0;
  for (long first = 0; first <= e; ++first) total += monomials(vars - 1, e - first);
  return total;
}

// h^i on P^r by monomial counting and Serre duality (K = O(-r-1)).
long h_proj(int r, int i, long e) {
  if (i == 0) return monomials(r + 1, e);
  if (i == r) return monomials(r + 1, -r - 1 - e);
  return 0;
}

}  // namespace

TEST(ExpectedDim, CubicAndTwoQuadricsAnchors) {
  for (long n = 1; n <= 30; ++n) {
    EXPECT_EQ(dim0(Family::Cubic, n, 0), n);
    EXPECT_EQ(dim0(Family::TwoQuadrics, n, 0), n);
    // Lines on a cubic or on two quadrics: 2n - 4.
    EXPECT_EQ(dim0(Family::Cubic, n, 1), 2 * n - 4);
    EXPECT_EQ(dim0(Family::TwoQuadrics, n, 1), 2 * n - 4);
  }
  const auto c = fano::expected_dim_fano(Family::Cubic, 3, 2);
  EXPECT_EQ(c.front().value, 3 * 2 - 10);
  EXPECT_TRUE(c.front().empty);
}

TEST(ExpectedDim, Gr25Table) {
  const std::vector<std::vector<int>> table = {
      {0, 2, 4, 6, 8}, {-1, -1, 1, 4, 7}, {-1, -1, 0, 3, 6}, {-1, -1, -1, 0, 4}};
  for (long n = 2; n <= 6; ++n) {
    const auto col = fano::gr25_column(n);
    ASSERT_EQ(col.size(), 4u);
    for (std::size_t row = 0; row < 4; ++row) {
      const int v = table[row][static_cast<std::size_t>(n - 2)];
      EXPECT_EQ(col[row].empty, v < 0) << n << " " << row;
      if (v >= 0) EXPECT_EQ(col[row].value, v);
    }
  }
  EXPECT_EQ(fano::gr25_column(5)[0].label, "F1");
  EXPECT_THROW(fano::gr25_column(7), flipcalc::DomainError);
  EXPECT_EQ(fano::expected_dim_fano(Family::Gr25Section, 6, 2).size(), 2u);
}

TEST(Emptiness, CubicMatchesExpectedDimensions) {
  for (long k = 0; k <= 6; ++k) {
    for (long n = 1; n <= 40; ++n) {
      const Regime r = fano::emptiness_threshold(Family::Cubic, n, k);
      EXPECT_EQ(r == Regime::FkEmpty, dim0(Family::Cubic, n, k) < 0) << n << " " << k;
      if (r != Regime::FkEmpty) {
        EXPECT_EQ(r == Regime::NonemptyExpected, dim0(Family::Cubic, n, k + 1) >= 0);
      }
    }
  }
}

TEST(Emptiness, TwoQuadrics) {
  for (long k = 0; k <= 6; ++k) {
    for (long n = 1; n <= 40; ++n) {
      const Regime r = fano::emptiness_threshold(Family::TwoQuadrics, n, k);
      EXPECT_EQ(r == Regime::FkEmpty, 2 * n < 3 * k + 1);
      if (r != Regime::FkEmpty) {
        EXPECT_EQ(r == Regime::NonemptyExpected, dim0(Family::TwoQuadrics, n, k + 1) >= 0);
      }
    }
  }
  EXPECT_EQ(fano::emptiness_threshold(Family::TwoQuadrics, 1, 0), Regime::Fk1EmptyFlipDegenerates);
  EXPECT_EQ(fano::emptiness_threshold(Family::TwoQuadrics, 2, 0), Regime::NonemptyExpected);
}

TEST(Emptiness, Gr25) {
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 3, 1), Regime::Fk1EmptyFlipDegenerates);
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 4, 1), Regime::NonemptyExpected);
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 3, 2), Regime::FkEmpty);
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 4, 2), Regime::GrassmannBundle);
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 5, 2), Regime::DisjointUnion);
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 6, 2), Regime::DisjointUnion);
  EXPECT_EQ(fano::emptiness_threshold(Family::Gr25Section, 6, 3), Regime::GrassmannBundle);
}

TEST(FlipShape, Examples) {
  const auto c = fano::flip_shape(Family::Cubic, 5, 0);
  EXPECT_EQ(c.r, 2);
  EXPECT_EQ(c.s, 1);
  for (long n = 2; n <= 20; ++n) {
    for (long k = 0; k <= 4; ++k) {
      if (fano::emptiness_threshold(Family::TwoQuadrics, n, k) == Regime::NonemptyExpected) {
        EXPECT_EQ(fano::flip_shape(Family::TwoQuadrics, n, k).s, 1);
      }
    }
  }
  const auto g = fano::flip_shape(Family::Gr25Section, 6, 1);
  EXPECT_EQ(g.s, 0);
  ASSERT_EQ(g.components.size(), 2u);
  EXPECT_EQ(g.components[0].base_label, "F2sigma");
  EXPECT_EQ(g.components[0].s, 0);
  EXPECT_EQ(g.components[1].s, 1);
  EXPECT_EQ(fano::flip_shape(Family::Cubic, 3, 1).s, -1);
  EXPECT_THROW(fano::flip_shape(Family::Gr25Section, 5, 2), flipcalc::DomainError);
}

TEST(FlipShape, RAtLeastS) {
  for (Family f : {Family::Cubic, Family::TwoQuadrics}) {
    for (long k = 0; k <= 6; ++k) {
      for (long n = std::max(k, 1L); n <= 30; ++n) {
        if (fano::emptiness_threshold(f, n, k) != Regime::NonemptyExpected) continue;
        const auto s = fano::flip_shape(f, n, k);
        EXPECT_EQ(s.r, binomial(k + 3, 2) - 1);
        for (const auto& c : s.components) EXPECT_GE(s.r, c.s);
      }
    }
  }
  for (long n = 2; n <= 6; ++n) {
    for (long k = 0; k <= 1; ++k) {
      if (fano::emptiness_threshold(Family::Gr25Section, n, k) != Regime::NonemptyExpected) continue;
      const auto s = fano::flip_shape(Family::Gr25Section, n, k);
      for (const auto& c : s.components) EXPECT_GE(s.r, c.s);
    }
  }
}

TEST(Codim, FullGridsPass) {
  for (Family f : {Family::Cubic, Family::TwoQuadrics, Family::Gr25Section}) {
    for (const auto& rep : fano::verify_codim_grid(f)) {
      for (const auto& c : rep.checks) {
        EXPECT_TRUE(c.pass()) << fano::to_string(f) << " n=" << rep.n << " k=" << rep.k << " "
                              << c.name;
      }
    }
  }
}

TEST(Codim, GridDomains) {
  EXPECT_EQ(fano::verify_codim_grid(Family::Gr25Section).size(), 15u);
  // k in [0,6], n in [max(k,1), 30].
  EXPECT_EQ(fano::verify_codim_grid(Family::Cubic).size(), 30u + 30 + 29 + 28 + 27 + 26 + 25);
}

TEST(Codim, Anchors) {
  const auto a = fano::verify_codim_identity(Family::Gr25Section, 4, 0);
  ASSERT_FALSE(a.checks.empty());
  EXPECT_EQ(a.checks[0].lhs, 5);
  EXPECT_EQ(a.checks[0].rhs, 5);
  const auto b = fano::verify_codim_identity(Family::Gr25Section, 6, 1);
  EXPECT_EQ(b.checks[0].lhs, 7);
  EXPECT_EQ(b.checks[0].rhs, 3 * 6 - 11);
  const auto c = fano::verify_codim_identity(Family::Cubic, 7, 0);
  EXPECT_EQ(c.checks[0].lhs, 2 * 7 - 3);
  const auto eq = std::find_if(b.checks.begin(), b.checks.end(),
                               [](const auto& x) { return x.name.find("F2tau + 1") != std::string::npos; });
  EXPECT_NE(eq, b.checks.end());
}

TEST(Codim, SmoothnessValue) {
  // (k+1)(k+2)(k+3)/3 at k = 0, 1, 2.
  EXPECT_EQ(fano::h0_qdual_twist2(0), 2);
  EXPECT_EQ(fano::h0_qdual_twist2(1), 8);
  EXPECT_EQ(fano::h0_qdual_twist2(2), 20);
}

TEST(Codim, Symbolic) {
  for (Family f : {Family::Cubic, Family::TwoQuadrics, Family::Gr25Section}) {
    const auto checks = fano::verify_codim_symbolic(f);
    EXPECT_FALSE(checks.empty());
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.lhs << " vs " << c.rhs;
  }
}

TEST(Codim, JsonLayout) {
  const auto j = fano::to_json(fano::verify_codim_identity(Family::Cubic, 5, 0));
  EXPECT_EQ(j["family"], "cubic");
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["k"], 0);
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_EQ(c["lhs"], c["rhs"]);
    EXPECT_EQ(c["pass"], true);
  }
}

TEST(SodCounts, Examples) {
  EXPECT_EQ(fano::sod_counts(Family::Cubic, 5, 0), (Ledger{{"D_F1", 1}, {"D_PQ", 1}}));
  EXPECT_EQ(fano::sod_counts(Family::TwoQuadrics, 5, 0), (Ledger{{"D_F1", 1}, {"D_OGr", 1}}));
  EXPECT_EQ(fano::sod_counts(Family::Cubic, 6, 1), (Ledger{{"D_F2", 3}, {"D_PQ", 1}}));
  EXPECT_EQ(fano::sod_counts(Family::Cubic, 3, 1), (Ledger{{"D_PQ", 1}}));
  EXPECT_EQ(fano::sod_counts(Family::Gr25Section, 6, 2), (Ledger{{"D_F3", 10}, {"D_GrBundle", 1}}));
  EXPECT_EQ(fano::sod_counts(Family::Gr25Section, 4, 2), (Ledger{{"D_GrBundle", 1}}));
  EXPECT_EQ(fano::sod_counts(Family::Gr25Section, 6, 1),
            (Ledger{{"D_F2sigma", 5}, {"D_F2tau", 4}, {"D_GrBundle", 1}}));
}

TEST(SodCounts, CountsAreCorollaryFormulas) {
  for (long k = 0; k <= 6; ++k) {
    for (long n = std::max(k, 1L); n <= 30; ++n) {
      if (fano::emptiness_threshold(Family::Cubic, n, k) == Regime::NonemptyExpected) {
        EXPECT_EQ(fano::sod_counts(Family::Cubic, n, k).count("D_F" + std::to_string(k + 1)),
                  binomial(k + 3, 2) - (k + 2));
      }
      if (fano::emptiness_threshold(Family::TwoQuadrics, n, k) == Regime::NonemptyExpected) {
        EXPECT_EQ(fano::sod_counts(Family::TwoQuadrics, n, k).count("D_F" + std::to_string(k + 1)),
                  binomial(k + 3, 2) - 2);
      }
    }
  }
}

TEST(SodCounts, CubicAlternativeFormTradesBundleSide) {
  for (long k = 0; k <= 6; ++k) {
    for (long n = std::max(k, 1L); n <= 30; ++n) {
      if (fano::emptiness_threshold(Family::Cubic, n, k) == Regime::FkEmpty) continue;
      const Ledger base = fano::sod_counts(Family::Cubic, n, k);
      const Ledger alt = fano::cubic_alternative_sod(n, k);
      EXPECT_EQ(alt.total() - base.total(), Integer(n - k + 1) - 1);
      EXPECT_EQ(flipcalc::sod::substitute(base, "D_PQ",
                                          Ledger{{"D_F" + std::to_string(k), n - k + 1}}),
                alt);
    }
  }
}

TEST(SodCounts, CubicAlternativeFormEulerCharacteristic) {
  // e(X^[2]) = (n + 1) e(X) + e(F_1) for a cubic surface (27 lines) and a
  // cubic threefold (Fano surface with e = 27).
  namespace hodge = flipcalc::hodge;
  struct Case {
    const char* name;
    long n;
    long e_f1;
  };
  for (const Case c : {Case{"cubic-surface", 2, 27}, Case{"cubic-threefold", 3, 27}}) {
    const auto x = flipcalc::builtins::diamond(c.name);
    const Ledger alt = fano::cubic_alternative_sod(c.n, 0);
    const Integer e = hodge::euler_characteristic(x);
    EXPECT_EQ(alt.count("D_F0") * e + alt.count("D_F1") * c.e_f1,
              hodge::euler_characteristic(hodge::hilbert_square(x)))
        << c.name;
  }
}

TEST(Splittings, Examples) {
  using S = fano::Splitting;
  auto sorted = [](std::vector<S> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(fano::enumerate_line_splittings(3)), (std::vector<S>{{-1, 1}, {0, 0}}));
  EXPECT_EQ(fano::enumerate_line_splittings(2), (std::vector<S>{{-1}}));
  EXPECT_EQ(sorted(fano::enumerate_line_splittings(5)),
            (std::vector<S>{{-1, 1, 1, 1}, {0, 0, 1, 1}}));
  EXPECT_EQ(fano::to_string(S{-1, 1, 1, 1}), "O(-1) + O(1)^3");
  EXPECT_EQ(fano::to_string(S{0, 0}), "O^2");
  EXPECT_THROW(fano::enumerate_line_splittings(1), flipcalc::DomainError);
}

TEST(Splittings, MatchBruteForce) {
  for (long n = 2; n <= 12; ++n) {
    auto got = fano::enumerate_line_splittings(n);
    auto oracle = flipcalc::testkit::brute_force_line_splittings(n, -10);
    std::sort(got.begin(), got.end());
    std::sort(oracle.begin(), oracle.end());
    EXPECT_EQ(got, oracle) << n;
    for (const auto& s : got) {
      EXPECT_EQ(static_cast<long>(s.size()), n - 1);
      long sum = 0;
      for (long a : s) sum += a;
      EXPECT_EQ(sum, n - 3);
    }
  }
}

TEST(Taut, TableAndCohomology) {
  EXPECT_EQ(fano::tautological_square_splitting(1), (fano::Splitting{0, 0}));
  EXPECT_EQ(fano::tautological_square_splitting(0), (fano::Splitting{-1, 0}));
  EXPECT_EQ(fano::tautological_square_splitting(-1), (fano::Splitting{-1, -1}));
  EXPECT_THROW(fano::tautological_square_splitting(2), flipcalc::DomainError);
  for (long d = -1; d <= 1; ++d) {
    const auto rep = fano::verify_taut_splitting(d, -5, 5);
    EXPECT_TRUE(rep.pass) << d;
    EXPECT_TRUE(rep.h1_vanishes) << d;
    EXPECT_EQ(rep.rows.size(), 33u);
    for (const auto& row : rep.rows) {
      long kun = 0;
      for (int a = 0; a <= row.degree; ++a) {
        kun += h_proj(1, a, row.m + d) * h_proj(1, row.degree - a, row.m);
      }
      long split = 0;
      for (long e : rep.claimed) split += h_proj(2, row.degree, row.m + e);
      EXPECT_EQ(row.kunneth, kun);
      EXPECT_EQ(row.split, split);
    }
  }
}

TEST(Taut, AnchorValues) {
  const auto rep = fano::verify_taut_splitting(1, 0, 0);
  EXPECT_EQ(rep.rows.at(0).kunneth, 2);
  EXPECT_EQ(rep.rows.at(0).split, 2);
  const auto acyclic = fano::verify_taut_splitting(-1, -1, 0);
  for (const auto& row : acyclic.rows) {
    EXPECT_EQ(row.kunneth, 0);
    EXPECT_EQ(row.split, 0);
  }
}

TEST(Taut, WrongClaimIsDetected) {
  // O(1)^[2] is not O(1) + O(-1): compare by hand at m = 0.
  long kun = h_proj(1, 0, 1) * h_proj(1, 0, 0);
  EXPECT_NE(kun, h_proj(2, 0, 1) + h_proj(2, 0, -1));
}

TEST(NormalRestriction, AllTypes) {
  for (long n = 2; n <= 30; ++n) {
    const auto rows = fano::hilb2_normal_restriction(n);
    EXPECT_EQ(rows.size(), n == 2 ? 1u : 2u);
    for (const auto& r : rows) {
      EXPECT_TRUE(r.matches) << n;
      EXPECT_EQ(static_cast<long>(r.restricted.size()), 2 * n - 2);
    }
  }
}

TEST(Classification, Rows) {
  EXPECT_EQ(fano::degree_classification(3).description, "cubic hypersurface in P^{n+1}");
  EXPECT_NE(fano::degree_classification(4).description.find("2 quadric"), std::string::npos);
  EXPECT_NE(fano::degree_classification(5).description.find("2 <= dim X <= 6"), std::string::npos);
  EXPECT_EQ(fano::degree_classification(9).description, "P^2");
  EXPECT_THROW(fano::degree_classification(0), flipcalc::DomainError);
  EXPECT_THROW(fano::degree_classification(10), flipcalc::DomainError);
}

TEST(Family, Parse) {
  EXPECT_EQ(fano::parse_family("quintic"), Family::Gr25Section);
  EXPECT_EQ(fano::parse_family("two-quadrics"), Family::TwoQuadrics);
  EXPECT_THROW(fano::parse_family("sextic"), flipcalc::DomainError);
}
