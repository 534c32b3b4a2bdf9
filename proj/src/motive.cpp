#include "flipcalc/motive.hpp"

#include "flipcalc/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace flipcalc::motive {

bool is_valid_atom_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return !dsl::is_reserved_word(name);
}

std::string sym2_atom_name(const std::string& name) { return "Sym2" + name; }

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = atoms.size() <=> other.atoms.size(); c != 0) return c;
  if (auto c = atoms <=> other.atoms; c != 0) return c;
  return lpow <=> other.lpow;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.lpow = lpow + other.lpow;
  out.atoms.reserve(atoms.size() + other.atoms.size());
  std::merge(atoms.begin(), atoms.end(), other.atoms.begin(), other.atoms.end(),
             std::back_inserter(out.atoms));
  return out;
}

Motive::Motive(long constant) : Motive(Integer(constant)) {}

Motive::Motive(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Motive Motive::lefschetz(unsigned long power) { return term(1, Monomial{{}, power}); }

Motive Motive::atom(const std::string& name) {
  if (name == kPointAtom) return Motive(1);
  if (!is_valid_atom_name(name)) throw DomainError("invalid atom name '" + name + "'");
  return term(1, Monomial{{name}, 0});
}

Motive Motive::term(Integer coefficient, Monomial monomial) {
  std::sort(monomial.atoms.begin(), monomial.atoms.end());
  std::erase(monomial.atoms, std::string(kPointAtom));
  Motive out;
  out.accumulate(monomial, coefficient);
  return out;
}

Integer Motive::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Motive::accumulate(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Motive& Motive::operator+=(const Motive& other) {
  if (&other == this) return *this = *this * Motive(2);
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

Motive& Motive::operator-=(const Motive& other) {
  if (&other == this) return *this = Motive();
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

Motive Motive::operator-() const {
  Motive out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Motive operator*(const Motive& a, const Motive& b) {
  Motive out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.accumulate(ma * mb, ca * cb);
  }
  return out;
}

Motive& Motive::operator*=(const Motive& other) { return *this = *this * other; }

Motive class_of_pn(unsigned long n) {
  Motive out;
  for (unsigned long i = 0; i <= n; ++i) out += Motive::lefschetz(i);
  return out;
}

Motive blowup_class(const Motive& x, const Motive& z, long c) {
  if (c < 2) throw DomainError("blowup_class: codimension must be at least 2");
  return x + z * (class_of_pn(static_cast<unsigned long>(c - 1)) - Motive(1));
}

Motive flip_difference(const Motive& f, unsigned long r, unsigned long s) {
  return f * (class_of_pn(r) - class_of_pn(s));
}

Motive sym2_class(const Motive& x) {
  std::vector<std::pair<Monomial, Integer>> terms(x.terms().begin(), x.terms().end());
  for (const auto& [m, c] : terms) {
    if (m.atoms.size() > 1) throw FragmentError("sym2_class: term with more than one atom");
    if (c < 0) throw FragmentError("sym2_class: negative coefficient");
  }
  Motive out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    // Sym^2(c T) = c Sym^2 T + C(c,2) T^2.
    Monomial square{m.atoms.empty() ? std::vector<std::string>{}
                                    : std::vector<std::string>{sym2_atom_name(m.atoms[0])},
                    2 * m.lpow};
    out += Motive::term(c, square);
    out += Motive::term(binomial(c, 2), m * m);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      out += Motive::term(c * terms[j].second, m * terms[j].first);
    }
  }
  return out;
}

Motive hilbert_square_class(const Motive& x, long n) {
  if (n < 1) throw DomainError("hilbert_square_class: dimension must be positive");
  return sym2_class(x) + (class_of_pn(static_cast<unsigned long>(n - 1)) - Motive(1)) * x;
}

Integer specialize(const Motive& x, const Integer& lefschetz_value,
                   const std::map<std::string, Integer>& atom_values) {
  Integer total = 0;
  for (const auto& [m, c] : x.terms()) {
    Integer v = c;
    Integer lp;
    mpz_pow_ui(lp.get_mpz_t(), lefschetz_value.get_mpz_t(), m.lpow);
    v *= lp;
    for (const auto& a : m.atoms) {
      auto it = atom_values.find(a);
      if (it == atom_values.end()) throw DomainError("no value assigned to atom '" + a + "'");
      v *= it->second;
    }
    total += v;
  }
  return total;
}

nlohmann::json to_json(const Motive& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) {
    nlohmann::json coeff = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(to_string(c));
    out.push_back({coeff, m.lpow, m.atoms});
  }
  return out;
}

}  // namespace flipcalc::motive
