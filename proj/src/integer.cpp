#include "flipcalc/integer.hpp"

#include <cctype>

namespace flipcalc {

Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Integer binomial(long n, long k) { return binomial(Integer(n), k); }

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("not an integer: '" + text + "'");
    }
  }
  return Integer(text, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw DomainError("integer out of range: " + to_string(value));
  }
  return value.get_si();
}

}  // namespace flipcalc
