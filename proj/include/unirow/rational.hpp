#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace unirow {

/// Arbitrary-precision integers and rationals. mpq_class keeps values
/// canonical (reduced, positive denominator) after every arithmetic op.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DivisionByZero when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p" or "p/q" (optional leading '-'); throws SyntaxError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool is_integer(const Rational& value);

/// Least non-negative residue of `value` modulo `modulus` (modulus > 0).
BigInt mod_floor(const BigInt& value, const BigInt& modulus);

/// Quotient q with value - q*divisor in [0, |divisor|).
BigInt euclid_quotient(const BigInt& value, const BigInt& divisor);

}  // namespace unirow
