#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace antipod {

// Arbitrary-precision integers and rationals (GMP-backed). mpq arithmetic
// keeps values canonical: gcd(|num|, den) = 1 and den > 0 after every
// operation, so rationals compare with operator== directly.
using Int = boost::multiprecision::mpz_int;
using Scalar = boost::multiprecision::mpq_rational;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised when a verifier chain cannot be completed (e.g. a certificate step
// that the theory says cannot fail actually failed on this input).
class DiagnosticError : public Error {
public:
    using Error::Error;
};

// Parses "a/b" or an integer string. Whitespace is not accepted.
Scalar parse_scalar(const std::string& text);

// Canonical "num/den" (or "num" when den == 1) form.
std::string scalar_str(const Scalar& q);

// q^e for e >= 0.
Scalar pow_scalar(const Scalar& q, unsigned e);

}  // namespace antipod
