#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unirow/polynomial.hpp"

namespace unirow {

enum class RingKind { Integers, Rationals, PolynomialRing, PrincipalQuotient };

enum class Coefficients { Integer, Rational };

const char* to_string(RingKind kind);

/// Which arithmetic applies to ring elements. Elements of every ring are
/// represented as `Polynomial`s over `variables()`; ring operations return
/// canonical representatives (normal forms).
///
/// Integer-coefficient polynomial rings (Z[t]) exist only as parameter
/// extensions of Z, and quotients are always over Q with a monic modulus.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring polynomials(std::vector<std::string> variables,
                          MonomialOrder order = MonomialOrder::DegLex);
  /// Q[variables]/(modulus); the modulus is rescaled to be monic under
  /// `order`. Throws Structural when the modulus is zero.
  static Ring quotient(std::vector<std::string> variables, const Polynomial& modulus,
                       MonomialOrder order = MonomialOrder::DegLex);
  /// Same as above, but the modulus is given as text in the variables.
  static Ring quotient(std::vector<std::string> variables, std::string_view modulus,
                       MonomialOrder order = MonomialOrder::DegLex);

  RingKind kind() const;
  Coefficients coefficients() const { return data_->coefficients; }
  const Variables& variables() const { return data_->variables; }
  const std::optional<Polynomial>& modulus() const { return data_->modulus; }
  MonomialOrder order() const { return data_->order; }
  bool is_quotient() const { return data_->modulus.has_value(); }

  /// Canonical representative of f: remainder of division by the modulus
  /// for quotients, f itself otherwise. Rejects polynomials over other
  /// variables and non-integral coefficients in integer rings.
  Polynomial normal_form(const Polynomial& f) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const Rational& value) const;
  Polynomial variable(std::string_view name) const;
  Polynomial variable(std::size_t index) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial pow(const Polynomial& f, unsigned exponent) const;

  bool equal(const Polynomial& f, const Polynomial& g) const;
  bool is_zero(const Polynomial& f) const;
  bool is_one(const Polynomial& f) const;

  /// Parses an element from the textual grammar and normalizes it.
  Polynomial parse(std::string_view text) const;
  /// Prints an element (in normal form) in the textual grammar.
  std::string print(const Polynomial& f) const;
  std::vector<Polynomial> parse_list(std::string_view text) const;

  /// Ring with one more variable appended; the modulus carries over. Throws
  /// Structural on a duplicate name.
  Ring extend_with_variable(const std::string& name) const;
  /// Embeds an element of a ring whose variables form a prefix of ours.
  Polynomial embed(const Polynomial& f) const;

  /// Surface syntax: Z, Q, Q[x,y], Q[x,y]/(x^2 + y^2 - 1), Z[t].
  std::string to_string() const;

  friend bool operator==(const Ring& lhs, const Ring& rhs);

 private:
  struct Data {
    Coefficients coefficients = Coefficients::Rational;
    Variables variables;
    std::optional<Polynomial> modulus;
    MonomialOrder order = MonomialOrder::DegLex;
  };
  explicit Ring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Builds the polynomial written by `text` over `variables`. Grammar:
/// integers, rationals p/q, identifiers [A-Za-z][A-Za-z0-9_]*, + - * ^,
/// parentheses; exponents are non-negative integer literals; implicit
/// multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const Variables& variables);

/// Splits on top-level commas (commas inside parentheses are kept).
std::vector<std::string> split_top_level(std::string_view text, char separator = ',');

/// Grammar `Z | Q | Q[v1,...,vk] | Q[v1,...,vk]/(poly)`, plus `Z[v1,...]`.
Ring parse_ring(std::string_view spec, MonomialOrder order = MonomialOrder::DegLex);

}  // namespace unirow
