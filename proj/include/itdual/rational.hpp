#ifndef ITDUAL_RATIONAL_HPP
#define ITDUAL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace itdual {

// All coefficients, multipliers and probability masses are exact rationals,
// kept in canonical form (positive denominator, gcd 1) by the GMP backend.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rat parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

}

#endif
