#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unirow/rational.hpp"

namespace unirow {

/// Ordered, immutable list of variable names shared between polynomials of
/// the same ring. Copies are cheap; equality compares the names.
class Variables {
 public:
  Variables();
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& operator[](std::size_t k) const { return (*names_)[k]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// True when `this` is a prefix of `other` (including equality).
  bool is_prefix_of(const Variables& other) const;

  Variables with_appended(const std::string& name) const;

  friend bool operator==(const Variables& lhs, const Variables& rhs);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

enum class MonomialOrder { DegLex, Lex };

const char* to_string(MonomialOrder order);

/// Exponent vector; length equals the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exponents_(variables, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  std::size_t size() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t k) const { return exponents_[k]; }
  std::uint32_t& operator[](std::size_t k) { return exponents_[k]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  /// Exact quotient; requires rhs.divides(lhs).
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs);

  // Storage order only (plain lexicographic on exponent vectors); term
  // orders used for division go through `compare`.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Negative, zero or positive as lhs is smaller, equal or greater than rhs.
int compare(const Monomial& lhs, const Monomial& rhs, MonomialOrder order);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Multivariate polynomial with exact rational coefficients in canonical
/// form: the term map never stores a zero coefficient, so equality of
/// polynomials is equality of term maps.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Variables variables) : variables_(std::move(variables)) {}

  static Polynomial constant(Variables variables, const Rational& value);
  static Polynomial variable(Variables variables, std::size_t index);
  static Polynomial term(Variables variables, Monomial monomial, const Rational& coefficient);

  const Variables& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the constant term (zero when absent).
  Rational constant_term() const;
  /// Degree in one variable; -1 for the zero polynomial.
  long degree_in(std::size_t variable) const;
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  bool has_integer_coefficients() const;

  /// Leading term under `order`. Throws DivisionByZero on the zero polynomial.
  Term leading_term(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(unsigned exponent) const;

  /// Adds c * m * other to this polynomial in place.
  void add_scaled(const Polynomial& other, const Rational& c, const Monomial& m);

  /// Per-term evaluation in double precision, summed in storage order.
  double evaluate(std::span<const double> point) const;

  /// Re-expresses the polynomial over `wider`, which must extend the current
  /// variable list (current variables form a prefix).
  Polynomial extend_to(const Variables& wider) const;
  /// Drops trailing variables that do not occur; `narrower` must be a prefix.
  Polynomial restrict_to(const Variables& narrower) const;
  /// Substitutes a rational constant for one variable; variable list kept.
  Polynomial substitute(std::size_t variable, const Rational& value) const;

 private:
  void require_same_variables(const Polynomial& other, const char* what) const;

  Variables variables_;
  Terms terms_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Single-divisor multivariate division: f = quotient*g + remainder, with no
/// remainder term divisible by LT(g). Throws DivisionByZero when g == 0.
DivisionResult divmod(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Pretty-printer in the textual polynomial grammar; terms are emitted in
/// descending `order`.
std::string to_string(const Polynomial& f, MonomialOrder order = MonomialOrder::DegLex);

}  // namespace unirow
