#include "flipcalc/fano.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace flipcalc::fano {

namespace {

// Polynomials in n and k with rational coefficients, for the symbolic checks.
class Poly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (deg n, deg k)

  Poly() = default;
  Poly(long c) { add({0, 0}, mpq_class(c)); }  // NOLINT
  static Poly n() { return mono({1, 0}); }
  static Poly k() { return mono({0, 1}); }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [key, c] : o.t_) r.add(key, c);
    return r;
  }
  Poly operator-() const {
    Poly r;
    for (const auto& [key, c] : t_) r.add(key, -c);
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [a, ca] : t_) {
      for (const auto& [b, cb] : o.t_) r.add({a.first + b.first, a.second + b.second}, ca * cb);
    }
    return r;
  }
  Poly scaled(const mpq_class& q) const {
    Poly r;
    for (const auto& [key, c] : t_) r.add(key, c * q);
    return r;
  }
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  /// Substitutes an integer for k.
  Poly at_k(long value) const {
    Poly r;
    for (const auto& [key, c] : t_) {
      mpq_class v = c;
      for (unsigned i = 0; i < key.second; ++i) v *= value;
      r.add({key.first, 0}, v);
    }
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [key, c] = *it;
      mpq_class a = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      std::string vars;
      auto var = [&](const char* name, unsigned d) {
        if (d == 0) return;
        if (!vars.empty()) vars += "*";
        vars += name;
        if (d > 1) vars += "^" + std::to_string(d);
      };
      var("n", key.first);
      var("k", key.second);
      if (vars.empty()) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += vars;
      }
    }
    return out;
  }

 private:
  static Poly mono(Key key) {
    Poly p;
    p.add(key, 1);
    return p;
  }
  void add(Key key, const mpq_class& c) {
    mpq_class& slot = t_[key];
    slot += c;
    slot.canonicalize();
    if (slot == 0) t_.erase(key);
  }

  std::map<Key, mpq_class> t_;
};

// C(p, r) for a constant r.
Poly binom(const Poly& p, long r) {
  Poly out = 1;
  mpz_class fact = 1;
  for (long i = 0; i < r; ++i) {
    out = out * (p - Poly(i));
    fact *= i + 1;
  }
  return out.scaled(mpq_class(1, 1) / mpq_class(fact));
}

void check_params(Family family, long n, long k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 0) throw DomainError("k must be nonnegative");
  if (family == Family::Gr25Section && (n < 2 || n > 6)) {
    throw DomainError("Gr(2,5) sections need 2 <= n <= 6");
  }
}

// The Gr(2,5) table; -1 marks an empty cell.
constexpr std::array<std::array<int, 5>, 4> kGr25Table = {{
    {0, 2, 4, 6, 8},     // F1
    {-1, -1, 1, 4, 7},   // F2 sigma
    {-1, -1, 0, 3, 6},   // F2 tau
    {-1, -1, -1, 0, 4},  // F3
}};

ComponentDimension gr25_cell(std::size_t row, long n, std::string label) {
  const int v = kGr25Table[row][static_cast<std::size_t>(n - 2)];
  return {std::move(label), Integer(v), v < 0};
}

bool nonempty(const std::vector<ComponentDimension>& comps) {
  return std::any_of(comps.begin(), comps.end(), [](const auto& c) { return !c.empty; });
}

const ComponentDimension* find(const std::vector<ComponentDimension>& comps,
                               const std::string& label) {
  for (const auto& c : comps) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::string f_label(long j) { return "F" + std::to_string(j); }

}  // namespace

Family parse_family(const std::string& text) {
  if (text == "cubic") return Family::Cubic;
  if (text == "two-quadrics" || text == "quartic" || text == "twoquadrics") {
    return Family::TwoQuadrics;
  }
  if (text == "gr25" || text == "quintic") return Family::Gr25Section;
  throw DomainError("unknown family '" + text + "' (cubic, two-quadrics, gr25)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Cubic: return "cubic";
    case Family::TwoQuadrics: return "two-quadrics";
    case Family::Gr25Section: return "gr25";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::NonemptyExpected: return "nonempty_expected";
    case Regime::FkEmpty: return "F_k_empty";
    case Regime::Fk1EmptyFlipDegenerates: return "F_k1_empty_flip_degenerates";
    case Regime::DisjointUnion: return "disjoint_union";
    case Regime::GrassmannBundle: return "grassmann_bundle";
  }
  return "?";
}

std::vector<ComponentDimension> gr25_column(long n) {
  if (n < 2 || n > 6) throw DomainError("Gr(2,5) table covers 2 <= dim X <= 6");
  return {gr25_cell(0, n, "F1"), gr25_cell(1, n, "F2sigma"), gr25_cell(2, n, "F2tau"),
          gr25_cell(3, n, "F3")};
}

std::vector<ComponentDimension> expected_dim_fano(Family family, long n, long j) {
  check_params(family, n, 0);
  if (j < 0) throw DomainError("plane dimension must be nonnegative");
  Integer v;
  switch (family) {
    case Family::Cubic:
      v = Integer(j + 1) * (n + 1 - j) - binomial(j + 3, 3);
      return {{f_label(j), v, v < 0}};
    case Family::TwoQuadrics:
      v = Integer(j + 1) * (n + 2 - j) - 2 * binomial(j + 2, 2);
      return {{f_label(j), v, v < 0}};
    case Family::Gr25Section: {
      if (j == 0) return {{"F0", Integer(n), false}};
      const auto col = gr25_column(n);
      if (j == 1) return {col[0]};
      if (j == 2) return {col[1], col[2]};
      if (j == 3) return {col[3]};
      return {{f_label(j), Integer(-1), true}};
    }
  }
  return {};
}

Regime emptiness_threshold(Family family, long n, long k) {
  check_params(family, n, k);
  switch (family) {
    case Family::Cubic:
      // n < k + (k+3)(k+2)/6 - 1, and k + (k+4)(k+3)/6 > n, scaled by 6.
      if (6 * n < 6 * k + (k + 3) * (k + 2) - 6) return Regime::FkEmpty;
      if (6 * k + (k + 4) * (k + 3) > 6 * n) return Regime::Fk1EmptyFlipDegenerates;
      return Regime::NonemptyExpected;
    case Family::TwoQuadrics:
      // n < k - 1 + (k+3)/2, and k - 1 + (k+3) > n.
      if (2 * n < 2 * k - 2 + k + 3) return Regime::FkEmpty;
      if (k - 1 + k + 3 > n) return Regime::Fk1EmptyFlipDegenerates;
      return Regime::NonemptyExpected;
    case Family::Gr25Section:
      if (k + 2 > n && k >= 2) return Regime::FkEmpty;
      if (k == 2) {
        return nonempty(expected_dim_fano(family, n, 3)) ? Regime::DisjointUnion
                                                         : Regime::GrassmannBundle;
      }
      if (k > 2) return Regime::GrassmannBundle;
      if (!nonempty(expected_dim_fano(family, n, k))) return Regime::FkEmpty;
      if (!nonempty(expected_dim_fano(family, n, k + 1))) {
        return Regime::Fk1EmptyFlipDegenerates;
      }
      return Regime::NonemptyExpected;
  }
  return Regime::FkEmpty;
}

FlipShape flip_shape(Family family, long n, long k) {
  const Regime regime = emptiness_threshold(family, n, k);
  if (regime == Regime::DisjointUnion || regime == Regime::GrassmannBundle) {
    throw DomainError("no standard flip for Gr(2,5) sections with k >= 2");
  }
  FlipShape shape;
  shape.r = to_long(binomial(k + 3, 2)) - 1;
  shape.base_label = f_label(k + 1);
  if (regime != Regime::NonemptyExpected) return shape;  // s = -1: Z' is empty
  switch (family) {
    case Family::Cubic:
      shape.s = k + 1;
      shape.components = {{shape.base_label, shape.s}};
      break;
    case Family::TwoQuadrics:
      shape.s = 1;
      shape.components = {{shape.base_label, 1}};
      break;
    case Family::Gr25Section:
      if (k == 0) {
        shape.s = 1;
        shape.components = {{"F1", 1}};
      } else {
        // Kernel of rank 1 over sigma-planes and rank 2 over tau-planes.
        shape.s = 0;
        for (const auto& c : expected_dim_fano(family, n, 2)) {
          if (!c.empty) shape.components.push_back({c.label, c.label == "F2sigma" ? 0L : 1L});
        }
      }
      break;
  }
  return shape;
}

bool CodimReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

Integer h0_qdual_twist2(long k) { return Integer(k + 1) * (k + 2) * (k + 3) / 3; }

CodimReport verify_codim_identity(Family family, long n, long k) {
  CodimReport rep{family, n, k, emptiness_threshold(family, n, k), {}};
  const Integer rank = binomial(k + 3, 2);
  auto dim = [&](long j) { return expected_dim_fano(family, n, j).front().value; };
  switch (family) {
    case Family::Cubic: {
      const Integer z1 = Integer(k + 2) * (n - k) - binomial(k + 4, 3) + k + 1;
      const Integer z2 = Integer(k + 1) * (n + 1 - k) - binomial(k + 3, 3) + (n - k) - rank;
      const Integer y = dim(k) + (n - k);  // P(Q_{k+1}) over F_k
      rep.checks.push_back({"dim Z' first form = second form", z1, z2});
      rep.checks.push_back({"second form = dim Y' - rank Sym2 U", z2, y - rank});
      rep.checks.push_back({"dim Z' = dim F_{k+1} + (k+1)", z1, dim(k + 1) + (k + 1)});
      break;
    }
    case Family::TwoQuadrics: {
      const Integer z1 = Integer(k + 2) * (n - k + 1) - 2 * rank + 1;
      const Integer z2 = Integer(k + 2) * (n - k + 1) - rank + 1 - rank;
      // Isotropic (k+2)-planes of a quadric in a space of dimension n+3, over P^1.
      const long m = k + 2;
      const Integer y = Integer(m) * (n + 3 - m) - binomial(m + 1, 2) + 1;
      rep.checks.push_back({"dim Z' first form = second form", z1, z2});
      rep.checks.push_back({"second form = dim Y' - rank Sym2 U", z2, y - rank});
      rep.checks.push_back({"dim Z' = dim F_{k+1} + 1", z1, dim(k + 1) + 1});
      break;
    }
    case Family::Gr25Section: {
      if (k > 2) break;
      const auto next = expected_dim_fano(family, n, k + 1);
      const ComponentDimension* sigma = k == 1 ? find(next, "F2sigma") : &next.front();
      const ComponentDimension* tau = k == 1 ? find(next, "F2tau") : &next.front();
      if (k <= 1 && !sigma->empty) {
        const Integer rhs = Integer(n - k - 2) * (k + 2) + 4 - rank;
        rep.checks.push_back({"dim F^sigma_{k+1} + 1 - k = (n-k-2)(k+2) + 4 - C(k+3,2)",
                              sigma->value + 1 - k, rhs});
        rep.checks.push_back({k == 0 ? "(n-2)2 + 4 - 3 = 2n - 3" : "(n-3)3 + 4 - 6 = 3n - 11",
                              rhs, k == 0 ? Integer(2 * n - 3) : Integer(3 * n - 11)});
      }
      // h^0(N_{P/X}) + h^0(N_{X/P(W)}|_P) = (n-k+2) h^0(O_P(1)) on a (k+1)-plane P.
      const Integer o1 = Integer(n - k + 2) * (k + 2);
      if (!sigma->empty) {
        rep.checks.push_back({"smoothness identity, sigma-planes", sigma->value,
                              o1 - h0_qdual_twist2(k) - Integer(2 - k) * rank});
      }
      if (k <= 1 && !tau->empty) {
        rep.checks.push_back({"smoothness identity, tau-planes", tau->value,
                              o1 - (k + 2) - 2 * rank});
      }
      if (k == 1 && !sigma->empty && !tau->empty) {
        rep.checks.push_back({"dim F2sigma = dim F2tau + 1", sigma->value, tau->value + 1});
      }
      break;
    }
  }
  return rep;
}

std::vector<CodimReport> verify_codim_grid(Family family) {
  std::vector<CodimReport> out;
  if (family == Family::Gr25Section) {
    for (long n = 2; n <= 6; ++n) {
      for (long k = 0; k <= 2; ++k) out.push_back(verify_codim_identity(family, n, k));
    }
    return out;
  }
  for (long k = 0; k <= 6; ++k) {
    for (long n = std::max(k, 1L); n <= 30; ++n) out.push_back(verify_codim_identity(family, n, k));
  }
  return out;
}

std::vector<SymbolicCheck> verify_codim_symbolic(Family family) {
  const Poly n = Poly::n();
  const Poly k = Poly::k();
  const Poly rank = binom(k + 3, 2);
  std::vector<SymbolicCheck> out;
  auto add = [&](std::string name, const Poly& a, const Poly& b) {
    out.push_back({std::move(name), a.str(), b.str(), a == b});
  };
  switch (family) {
    case Family::Cubic: {
      auto dim_f = [&](const Poly& j) { return (j + 1) * (n + 1 - j) - binom(j + 3, 3); };
      const Poly z1 = (k + 2) * (n - k) - binom(k + 4, 3) + k + 1;
      const Poly z2 = (k + 1) * (n + 1 - k) - binom(k + 3, 3) + (n - k) - rank;
      add("dim Z' first form = second form", z1, z2);
      add("second form = dim Y' - rank Sym2 U", z2, dim_f(k) + (n - k) - rank);
      add("dim Z' = dim F_{k+1} + (k+1)", z1, dim_f(k + 1) + k + 1);
      add("k = 0: dim Z' = 2n - 3", z1.at_k(0), n * 2 - 3);
      break;
    }
    case Family::TwoQuadrics: {
      auto dim_f = [&](const Poly& j) { return (j + 1) * (n + 2 - j) - binom(j + 2, 2) * 2; };
      const Poly m = k + 2;
      const Poly z1 = (k + 2) * (n - k + 1) - rank * 2 + 1;
      const Poly z2 = (k + 2) * (n - k + 1) - rank + 1 - rank;
      add("dim Z' first form = second form", z1, z2);
      add("second form = dim Y' - rank Sym2 U", z2, m * (n + 3 - m) - binom(m + 1, 2) + 1 - rank);
      add("dim Z' = dim F_{k+1} + 1", z1, dim_f(k + 1) + 1);
      break;
    }
    case Family::Gr25Section: {
      const Poly rhs = (n - k - 2) * (k + 2) + 4 - rank;
      add("k = 0: (n-k-2)(k+2) + 4 - C(k+3,2) = 2n - 3", rhs.at_k(0), n * 2 - 3);
      add("k = 1: (n-k-2)(k+2) + 4 - C(k+3,2) = 3n - 11", rhs.at_k(1), n * 3 - 11);
      break;
    }
  }
  return out;
}

sod::Ledger sod_counts(Family family, long n, long k) {
  const Regime regime = emptiness_threshold(family, n, k);
  sod::Ledger out;
  if (regime == Regime::FkEmpty) return out;
  const std::string fk1 = "D_" + f_label(k + 1);
  switch (family) {
    case Family::Cubic:
      out.add("D_PQ");
      break;
    case Family::TwoQuadrics:
      out.add("D_OGr");
      break;
    case Family::Gr25Section:
      out.add("D_GrBundle");
      // P(Sym2 U_4) over F_3: a P^9-bundle.
      if (regime == Regime::DisjointUnion) out.add(fk1, binomial(k + 3, 2));
      if (k >= 2) return out;
      break;
  }
  if (regime != Regime::NonemptyExpected) return out;
  const FlipShape shape = flip_shape(family, n, k);
  for (const auto& c : shape.components) out.add("D_" + c.base_label, Integer(shape.r - c.s));
  return out;
}

sod::Ledger cubic_alternative_sod(long n, long k) {
  sod::Ledger base = sod_counts(Family::Cubic, n, k);
  if (base.count("D_PQ") == 0) return base;
  return sod::substitute(base, "D_PQ", sod::Ledger{{"D_" + f_label(k), n - k + 1}});
}

std::string to_string(const Splitting& s) {
  if (s.empty()) return "0";
  std::map<long, long> mult;
  for (long a : s) ++mult[a];
  std::string out;
  for (const auto& [a, m] : mult) {
    if (!out.empty()) out += " + ";
    out += a == 0 ? "O" : "O(" + std::to_string(a) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

std::vector<Splitting> enumerate_line_splittings(long n) {
  if (n < 2) throw DomainError("line splittings need n >= 2");
  // With a_i <= 1 and sum n-3 over n-1 summands, the deficits 1 - a_i are
  // nonnegative and sum to 2: either two deficits of 1 or one of 2.
  std::vector<Splitting> out;
  const long len = n - 1;
  for (const std::vector<long>& deficits : {std::vector<long>{1, 1}, std::vector<long>{2}}) {
    if (static_cast<long>(deficits.size()) > len) continue;
    Splitting s(static_cast<std::size_t>(len), 1);
    for (std::size_t i = 0; i < deficits.size(); ++i) s[i] -= deficits[i];
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

Splitting tautological_square_splitting(long d) {
  switch (d) {
    case -1: return {-1, -1};
    case 0: return {-1, 0};
    case 1: return {0, 0};
  }
  throw DomainError("tautological square table covers d in {-1, 0, 1}");
}

Integer h_p1(int i, long e) {
  if (i == 0) return e >= 0 ? Integer(e + 1) : Integer(0);
  if (i == 1) return e <= -2 ? Integer(-e - 1) : Integer(0);
  return 0;
}

Integer h_p2(int i, long e) {
  if (i == 0) return e >= 0 ? binomial(e + 2, 2) : Integer(0);
  if (i == 2) return e <= -3 ? binomial(-e - 1, 2) : Integer(0);
  return 0;
}

TautReport verify_taut_splitting(long d, long m_lo, long m_hi) {
  TautReport rep;
  rep.d = d;
  rep.claimed = tautological_square_splitting(d);
  for (long m = m_lo; m <= m_hi; ++m) {
    for (int i = 0; i <= 2; ++i) {
      Integer kun = 0;
      for (int a = 0; a <= i; ++a) kun += h_p1(a, m + d) * h_p1(i - a, m);
      Integer split = 0;
      for (long e : rep.claimed) split += h_p2(i, m + e);
      rep.rows.push_back({m, i, kun, split});
      if (kun != split) rep.pass = false;
      if (i == 1 && (kun != 0 || split != 0)) rep.h1_vanishes = false;
    }
  }
  rep.pass = rep.pass && rep.h1_vanishes;
  return rep;
}

std::vector<NormalRestriction> hilb2_normal_restriction(long n) {
  Splitting expected{-1, -1};
  expected.insert(expected.end(), static_cast<std::size_t>(2 * n - 4), 0);
  std::vector<NormalRestriction> out;
  for (const auto& type : enumerate_line_splittings(n)) {
    Splitting r;
    for (long a : type) {
      const auto sq = tautological_square_splitting(a);
      r.insert(r.end(), sq.begin(), sq.end());
    }
    std::sort(r.begin(), r.end());
    out.push_back({type, r, r == expected});
  }
  return out;
}

DegreeClassEntry degree_classification(int d) {
  static const std::array<const char*, 9> kTable = {
      "sextic hypersurface avoiding singular points in P(1^n, 2, 3)",
      "double covering of P^n branched over a quartic hypersurface",
      "cubic hypersurface in P^{n+1}",
      "complete intersection of 2 quadric hypersurfaces in P^{n+2}",
      "linear section of Gr(2,5) in P^9 via the Pluecker embedding, 2 <= dim X <= 6",
      "linear section of (P^1)^3 in P^7 or of (P^2)^2 in P^8 via the Segre embeddings",
      "del Pezzo surface of degree 7 or the blowup of P^3 at a point",
      "P^3 or a del Pezzo surface of degree 8",
      "P^2",
  };
  if (d < 1 || d > 9) throw DomainError("degree must be in [1, 9]");
  return {d, kTable[static_cast<std::size_t>(d - 1)]};
}

namespace {

nlohmann::json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return flipcalc::to_string(v);
}

}  // namespace

nlohmann::json to_json(const CodimReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", json_integer(c.lhs)},
                      {"rhs", json_integer(c.rhs)},
                      {"pass", c.pass()}});
  }
  return {{"family", to_string(report.family)},
          {"n", report.n},
          {"k", report.k},
          {"regime", to_string(report.regime)},
          {"checks", checks}};
}

}  // namespace flipcalc::fano
