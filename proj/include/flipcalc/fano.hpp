#pragma once

#include "flipcalc/integer.hpp"
#include "flipcalc/sod.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flipcalc::fano {

enum class Family { Cubic, TwoQuadrics, Gr25Section };

/// Accepts "cubic", "two-quadrics" (or "quartic") and "gr25" (or "quintic").
Family parse_family(const std::string& text);
std::string to_string(Family f);

/// One component of F_j(X). `empty` is set when the expected dimension is
/// negative or the table says the component is empty; value is kept as is.
struct ComponentDimension {
  std::string label;
  Integer value;
  bool empty = false;
};

/// Expected dimension of the Fano scheme of j-planes, j = k_planes.
///   Cubic in P^{n+1}:        (j+1)(n+1-j) - C(j+3,3)
///   Two quadrics in P^{n+2}: (j+1)(n+2-j) - 2 C(j+2,2)
///   Gr(2,5) section:         lookup table for 2 <= n <= 6, sigma and tau
///                            components reported separately for j = 2.
std::vector<ComponentDimension> expected_dim_fano(Family family, long n, long k_planes);

/// The four Gr(2,5) table cells F1, F2sigma, F2tau, F3 for dim X = n.
std::vector<ComponentDimension> gr25_column(long n);

enum class Regime {
  NonemptyExpected,
  /// G_k(X) is empty: F_k(X) (or the orthogonal Grassmannian side) is empty.
  FkEmpty,
  /// F_{k+1}(X) is empty and the flip is an isomorphism.
  Fk1EmptyFlipDegenerates,
  /// Gr(2,5) sections with k = 2: a disjoint union, not a flip.
  DisjointUnion,
  /// Gr(2,5) sections with k > 2 (or k = 2 without planes F_3): a Grassmann bundle.
  GrassmannBundle,
};

std::string to_string(Regime r);

Regime emptiness_threshold(Family family, long n, long k);

struct FlipComponent {
  std::string base_label;
  long s;
};

/// r = C(k+3,2) - 1 and s per family; s = -1 marks an empty Z'.
/// For Gr(2,5) sections at k = 1, `components` carries s per component and
/// `s` is the sigma value.
struct FlipShape {
  long r = 0;
  long s = -1;
  std::string base_label;
  std::vector<FlipComponent> components;
};

FlipShape flip_shape(Family family, long n, long k);

struct Check {
  std::string name;
  Integer lhs;
  Integer rhs;
  bool pass() const { return lhs == rhs; }
};

struct CodimReport {
  Family family;
  long n;
  long k;
  Regime regime;
  std::vector<Check> checks;
  bool pass() const;
};

/// Integer evaluation of the codimension identity chains (and, for Gr(2,5)
/// sections, the smoothness and equidimensionality identities).
CodimReport verify_codim_identity(Family family, long n, long k);

/// Every grid point: cubic and two quadrics over k in [0,6], n in [k,30];
/// Gr(2,5) sections over the table domain.
std::vector<CodimReport> verify_codim_grid(Family family);

struct SymbolicCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass;
};

/// The same identities as polynomials in n and k over the rationals.
std::vector<SymbolicCheck> verify_codim_symbolic(Family family);

/// h^0 of Q^vee(2) on a (k+1)-plane: (k+1)(k+2)(k+3)/3.
Integer h0_qdual_twist2(long k);

/// Components of the decomposition of D(G_k(X)) as counts.
/// Cubic: {D_F<k+1>: C(k+3,2)-(k+2), D_PQ: 1}.
/// Two quadrics: {D_F<k+1>: C(k+3,2)-2, D_OGr: 1}.
/// Gr(2,5): {D_GrBundle: 1} plus r - s copies of each F_{k+1} component.
/// Degenerate regimes drop the F_{k+1} part; empty G_k gives the empty ledger.
sod::Ledger sod_counts(Family family, long n, long k);

/// The cubic form with the P(Q_{k+1})-bundle expanded over F_k:
/// {D_F<k>: n-k+1, D_F<k+1>: C(k+3,2)-(k+2)}.
sod::Ledger cubic_alternative_sod(long n, long k);

/// Degrees of the line summands, sorted ascending.
using Splitting = std::vector<long>;
std::string to_string(const Splitting& s);

/// Splittings of N_{l/X} for a line in a del Pezzo variety of dimension n:
/// n-1 summands O(a_i) with a_i <= 1 and sum n-3.
std::vector<Splitting> enumerate_line_splittings(long n);

/// O(d)^[2] on l^[2] = P^2 for d in {-1, 0, 1}.
Splitting tautological_square_splitting(long d);

struct TautRow {
  long m;
  int degree;  // cohomological degree i
  Integer kunneth;
  Integer split;
};

struct TautReport {
  long d;
  Splitting claimed;
  std::vector<TautRow> rows;
  bool h1_vanishes = true;
  bool pass = true;
};

/// Compares h^i(P^1 x P^1, O(m+d, m)) with h^i(P^2, claimed(m)) for m in
/// [m_lo, m_hi] and checks that H^1 vanishes on both sides.
TautReport verify_taut_splitting(long d, long m_lo, long m_hi);

Integer h_p1(int i, long e);
Integer h_p2(int i, long e);

struct NormalRestriction {
  Splitting line_type;
  Splitting restricted;
  bool matches;
};

/// Applies the (-)^[2] table summand by summand to each line type and
/// compares with O(-1)^2 + O^(2n-4).
std::vector<NormalRestriction> hilb2_normal_restriction(long n);

struct DegreeClassEntry {
  int degree;
  std::string description;
};

DegreeClassEntry degree_classification(int d);

nlohmann::json to_json(const CodimReport& report);

}  // namespace flipcalc::fano
