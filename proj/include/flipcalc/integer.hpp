#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace flipcalc {

/// Arbitrary-precision signed integer used for every count in the library.
using Integer = mpz_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is well-formed but outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Binomial coefficient with the generalized convention for negative n
/// (C(n, k) = n(n-1)...(n-k+1)/k!), and 0 for k < 0.
Integer binomial(const Integer& n, long k);
Integer binomial(long n, long k);

/// Parses a base-10 integer with optional leading '-'. Throws DomainError.
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& value);

/// Converts to long, throwing DomainError if the value does not fit.
long to_long(const Integer& value);

}  // namespace flipcalc
