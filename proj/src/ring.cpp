#include "unirow/ring.hpp"

#include <sstream>

#include "unirow/errors.hpp"

namespace unirow {

const char* to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Integers: return "Integers";
    case RingKind::Rationals: return "Rationals";
    case RingKind::PolynomialRing: return "PolynomialRing";
    case RingKind::PrincipalQuotient: return "PrincipalQuotient";
  }
  return "Unknown";
}

Ring Ring::integers() {
  static const Ring ring(std::make_shared<const Data>(Data{Coefficients::Integer, {}, {}, {}}));
  return ring;
}

Ring Ring::rationals() {
  static const Ring ring(std::make_shared<const Data>(Data{Coefficients::Rational, {}, {}, {}}));
  return ring;
}

Ring Ring::polynomials(std::vector<std::string> variables, MonomialOrder order) {
  return Ring(std::make_shared<const Data>(
      Data{Coefficients::Rational, Variables(std::move(variables)), std::nullopt, order}));
}

Ring Ring::quotient(std::vector<std::string> variables, const Polynomial& modulus,
                    MonomialOrder order) {
  Variables vars(std::move(variables));
  if (!(modulus.variables() == vars)) {
    fail(ErrorCode::Structural, "modulus is not a polynomial in the ring variables");
  }
  if (modulus.is_zero()) {
    fail(ErrorCode::Structural, "modulus must be nonzero");
  }
  if (modulus.is_constant()) {
    fail(ErrorCode::Structural, "modulus must be non-constant (a constant generates the unit ideal)");
  }
  const Rational lead = modulus.leading_term(order).coefficient;
  Polynomial monic = modulus.scaled(1 / lead);
  // re-anchor onto the ring's own variable list
  Polynomial stored = monic.extend_to(vars);
  return Ring(std::make_shared<const Data>(
      Data{Coefficients::Rational, std::move(vars), std::move(stored), order}));
}

Ring Ring::quotient(std::vector<std::string> variables, std::string_view modulus,
                    MonomialOrder order) {
  Variables vars(variables);
  return quotient(std::move(variables), parse_polynomial(modulus, vars), order);
}

RingKind Ring::kind() const {
  if (data_->modulus) {
    return RingKind::PrincipalQuotient;
  }
  if (!data_->variables.empty()) {
    return RingKind::PolynomialRing;
  }
  return data_->coefficients == Coefficients::Integer ? RingKind::Integers : RingKind::Rationals;
}

Polynomial Ring::normal_form(const Polynomial& f) const {
  if (!(f.variables() == data_->variables)) {
    fail(ErrorCode::Structural, "element is not over the ring variables of " + to_string());
  }
  if (data_->coefficients == Coefficients::Integer && !f.has_integer_coefficients()) {
    fail(ErrorCode::Structural, "non-integral element " + unirow::to_string(f) + " in " +
                                    to_string());
  }
  if (!data_->modulus) {
    return f;
  }
  // cheap exit: nothing to reduce when no term is divisible by LT(modulus)
  const Monomial lead = data_->modulus->leading_term(data_->order).monomial;
  bool reducible = false;
  for (const auto& [m, c] : f.terms()) {
    if (lead.divides(m)) {
      reducible = true;
      break;
    }
  }
  if (!reducible) {
    return f;
  }
  return divmod(f, *data_->modulus, data_->order).remainder;
}

Polynomial Ring::zero() const { return Polynomial(data_->variables); }

Polynomial Ring::one() const { return Polynomial::constant(data_->variables, 1); }

Polynomial Ring::constant(const Rational& value) const {
  return normal_form(Polynomial::constant(data_->variables, value));
}

Polynomial Ring::variable(std::string_view name) const {
  const auto index = data_->variables.index_of(name);
  if (!index) {
    fail(ErrorCode::Structural, "no variable '" + std::string(name) + "' in " + to_string());
  }
  return variable(*index);
}

Polynomial Ring::variable(std::size_t index) const {
  return normal_form(Polynomial::variable(data_->variables, index));
}

Polynomial Ring::add(const Polynomial& f, const Polynomial& g) const {
  return normal_form(f + g);
}

Polynomial Ring::sub(const Polynomial& f, const Polynomial& g) const {
  return normal_form(f - g);
}

Polynomial Ring::mul(const Polynomial& f, const Polynomial& g) const {
  return normal_form(f * g);
}

Polynomial Ring::neg(const Polynomial& f) const { return normal_form(-f); }

Polynomial Ring::pow(const Polynomial& f, unsigned exponent) const {
  Polynomial result = one();
  Polynomial base = normal_form(f);
  while (exponent > 0) {
    if (exponent & 1U) {
      result = mul(result, base);
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = mul(base, base);
    }
  }
  return result;
}

bool Ring::equal(const Polynomial& f, const Polynomial& g) const {
  return normal_form(f - g).is_zero();
}

bool Ring::is_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ring::is_one(const Polynomial& f) const { return equal(f, one()); }

Polynomial Ring::parse(std::string_view text) const {
  return normal_form(parse_polynomial(text, data_->variables));
}

std::string Ring::print(const Polynomial& f) const {
  return unirow::to_string(normal_form(f), data_->order);
}

std::vector<Polynomial> Ring::parse_list(std::string_view text) const {
  std::vector<Polynomial> out;
  std::size_t offset = 0;
  for (const auto& part : split_top_level(text)) {
    try {
      out.push_back(parse(part));
    } catch (const SyntaxError& e) {
      const std::string msg = e.what();
      throw SyntaxError(msg.substr(0, msg.rfind(" at position")), e.position() + offset);
    }
    offset += part.size() + 1;
  }
  return out;
}

Ring Ring::extend_with_variable(const std::string& name) const {
  if (data_->variables.index_of(name)) {
    fail(ErrorCode::Structural, "variable '" + name + "' already exists in " + to_string());
  }
  Data d = *data_;
  d.variables = data_->variables.with_appended(name);
  if (d.modulus) {
    d.modulus = d.modulus->extend_to(d.variables);
  }
  return Ring(std::make_shared<const Data>(std::move(d)));
}

Polynomial Ring::embed(const Polynomial& f) const {
  return normal_form(f.extend_to(data_->variables));
}

std::string Ring::to_string() const {
  std::ostringstream out;
  out << (data_->coefficients == Coefficients::Integer ? 'Z' : 'Q');
  if (!data_->variables.empty()) {
    out << '[';
    for (std::size_t k = 0; k < data_->variables.size(); ++k) {
      out << (k ? "," : "") << data_->variables[k];
    }
    out << ']';
  }
  if (data_->modulus) {
    out << "/(" << unirow::to_string(*data_->modulus, data_->order) << ')';
  }
  return out.str();
}

bool operator==(const Ring& lhs, const Ring& rhs) {
  if (lhs.data_ == rhs.data_) {
    return true;
  }
  return lhs.data_->coefficients == rhs.data_->coefficients &&
         lhs.data_->variables == rhs.data_->variables && lhs.data_->order == rhs.data_->order &&
         lhs.data_->modulus == rhs.data_->modulus;
}

}  // namespace unirow
