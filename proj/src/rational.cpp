#include "unirow/rational.hpp"

#include <cctype>

#include "unirow/errors.hpp"

namespace unirow {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_digits(std::string_view text, std::size_t offset) {
  if (text.empty()) {
    throw SyntaxError("expected digits", offset);
  }
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw SyntaxError("unexpected character in number", offset + k);
    }
  }
  return BigInt(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  const auto slash = text.find('/', start);
  BigInt num = parse_digits(text.substr(start, slash - start), start);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(text.substr(slash + 1), slash + 1);
    if (den == 0) {
      throw SyntaxError("zero denominator", slash + 1);
    }
  }
  if (negative) {
    num = -num;
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt mod_floor(const BigInt& value, const BigInt& modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt euclid_quotient(const BigInt& value, const BigInt& divisor) {
  if (divisor == 0) {
    fail(ErrorCode::DivisionByZero, "integer division by zero");
  }
  // floor division for positive divisors, ceiling for negative ones, so the
  // remainder always lands in [0, |divisor|)
  BigInt q;
  if (divisor > 0) {
    mpz_fdiv_q(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  }
  return q;
}

}  // namespace unirow
