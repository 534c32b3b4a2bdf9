#pragma once

#include "flipcalc/integer.hpp"

#include "json.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace flipcalc::motive {

/// Raised by sym2_class when its argument leaves the supported fragment.
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// Name of the multiplicative unit atom; it is absorbed on construction.
inline constexpr const char* kPointAtom = "pt";

/// True for names matching [A-Za-z][A-Za-z0-9_]* that are not reserved words
/// of the expression language.
bool is_valid_atom_name(const std::string& name);

/// The declared atom standing for Sym^2 of `name`.
std::string sym2_atom_name(const std::string& name);

/// L^lpow times a product of atoms. Atoms are kept sorted, with repetition.
struct Monomial {
  std::vector<std::string> atoms;
  unsigned long lpow = 0;

  /// Canonical order: fewer atoms first, then atom names, then the L power.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  Monomial operator*(const Monomial& other) const;
};

/// Integer combination of monomials. Zero coefficients are never stored.
class Motive {
 public:
  Motive() = default;
  Motive(long constant);  // NOLINT: integers embed as constants
  Motive(const Integer& constant);  // NOLINT

  static Motive lefschetz(unsigned long power = 1);
  /// Class of a formal generator. "pt" yields 1.
  static Motive atom(const std::string& name);
  static Motive term(Integer coefficient, Monomial monomial);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  Motive& operator+=(const Motive& other);
  Motive& operator-=(const Motive& other);
  Motive& operator*=(const Motive& other);
  Motive operator-() const;

  friend Motive operator+(Motive a, const Motive& b) { return a += b; }
  friend Motive operator-(Motive a, const Motive& b) { return a -= b; }
  friend Motive operator*(const Motive& a, const Motive& b);
  bool operator==(const Motive& other) const = default;

 private:
  void accumulate(const Monomial& m, const Integer& c);

  std::map<Monomial, Integer> terms_;
};

/// [P^n] = 1 + L + ... + L^n.
Motive class_of_pn(unsigned long n);

/// [Bl_Z X] = [X] + [Z]([P^{c-1}] - 1) for a smooth center of codimension c.
Motive blowup_class(const Motive& x, const Motive& z, long c);

/// [X] - [X'] for a standard flip of shape (r, s) over a base with class f:
/// f([P^r] - [P^s]).
Motive flip_difference(const Motive& f, unsigned long r, unsigned long s);

/// Sym^2 on the fragment of nonnegative sums of terms L^i * g, where g is a
/// single atom or 1, via Sym^2(A + B) = Sym^2 A + AB + Sym^2 B and
/// Sym^2(L^i g) = L^{2i} Sym2_g.
Motive sym2_class(const Motive& x);

/// [X^[2]] = Sym^2[X] + ([P^{n-1}] - 1)[X] for X of dimension n >= 1.
Motive hilbert_square_class(const Motive& x, long n);

/// Ring homomorphism to the integers: L -> lefschetz_value, atoms -> values.
/// Throws DomainError when an atom is unassigned.
Integer specialize(const Motive& x, const Integer& lefschetz_value,
                   const std::map<std::string, Integer>& atom_values);

/// [[coeff, l_power, [atoms...]], ...] in canonical order.
nlohmann::json to_json(const Motive& x);

}  // namespace flipcalc::motive
