#pragma once

#include "flipcalc/integer.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace flipcalc::hodge {

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Table of Hodge numbers h^{p,q} for 0 <= p,q <= dim.
///
/// A freshly constructed diamond is "raw": any nonnegative table is
/// accepted. validated() checks Hodge symmetry and Serre duality and returns a
/// copy marked geometric. Arithmetic results are always raw, since Tate
/// twists break Serre duality relative to the enlarged dimension.
class HodgeDiamond {
 public:
  HodgeDiamond() : HodgeDiamond(0) {}
  explicit HodgeDiamond(int dim);

  static HodgeDiamond point();
  static HodgeDiamond projective_space(int n);
  static HodgeDiamond curve(const Integer& genus);

  int dim() const { return dim_; }
  bool is_geometric() const { return geometric_; }

  /// Zero outside [0, dim]^2.
  const Integer& at(int p, int q) const;
  void set(int p, int q, Integer value);
  void add(int p, int q, const Integer& value);

  HodgeDiamond validated() const;
  /// Empty when the table is Hodge-symmetric and Serre-dual; otherwise the
  /// first violated relation.
  std::string symmetry_violation() const;

  /// The (p,p) entries, p = 0..dim.
  std::vector<Integer> diagonal() const;

  /// Value equality of dimension and entries; the geometric flag is ignored.
  bool operator==(const HodgeDiamond& other) const;

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(dim_ + 1) +
           static_cast<std::size_t>(q);
  }

  int dim_;
  bool geometric_ = false;
  std::vector<Integer> entries_;
};

/// Direct sum of tables; the result has dimension max(a.dim, b.dim).
HodgeDiamond direct_sum(const HodgeDiamond& a, const HodgeDiamond& b);

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b);

/// Shift by (i,i): the class L^i. Result dimension a.dim + i.
HodgeDiamond tate_twist(const HodgeDiamond& a, int i);

/// Invariants of the swap (with Koszul sign) on H*(X) (x) H*(X).
HodgeDiamond sym2(const HodgeDiamond& a);

/// Anti-invariants of the same involution; sym2(a) + alt2(a) = kunneth(a, a).
HodgeDiamond alt2(const HodgeDiamond& a);

/// sym2(a) plus the twists a(1), ..., a(n-1) from the exceptional divisor.
HodgeDiamond hilbert_square(const HodgeDiamond& a);

/// Projectivization of a rank r_plus_1 bundle over base.
HodgeDiamond projective_bundle(const HodgeDiamond& base, int r_plus_1);

/// Blowup of total along a smooth center of codimension c.
HodgeDiamond blowup(const HodgeDiamond& total, const HodgeDiamond& center, int c);

/// Sum of h^{p,p}: the dimension of HH_0.
Integer hh0(const HodgeDiamond& a);

/// Alternating sum over p+q.
Integer euler_characteristic(const HodgeDiamond& a);

/// {"dim": n, "entries": [[p, q, value], ...]} sorted by (p,q), zeros
/// omitted. Values beyond 64 bits are written as decimal strings.
nlohmann::json to_json(const HodgeDiamond& a);
HodgeDiamond from_json(const nlohmann::json& j);

/// Aligned text rendering, top row h^{n,n} down to h^{0,0}.
std::string render(const HodgeDiamond& a);

}  // namespace flipcalc::hodge
