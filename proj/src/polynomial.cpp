#include "unirow/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unirow/errors.hpp"

namespace unirow {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>();
  return names;
}

}  // namespace

Variables::Variables() : names_(empty_names()) {}

Variables::Variables(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_->size(); ++k) {
    if ((*names_)[k] == name) {
      return k;
    }
  }
  return std::nullopt;
}

bool Variables::is_prefix_of(const Variables& other) const {
  if (size() > other.size()) {
    return false;
  }
  return std::equal(names_->begin(), names_->end(), other.names_->begin());
}

Variables Variables::with_appended(const std::string& name) const {
  auto names = *names_;
  names.push_back(name);
  return Variables(std::move(names));
}

bool operator==(const Variables& lhs, const Variables& rhs) {
  return lhs.names_ == rhs.names_ || *lhs.names_ == *rhs.names_;
}

const char* to_string(MonomialOrder order) {
  return order == MonomialOrder::DegLex ? "DegLex" : "Lex";
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents_) {
    d += e;
  }
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] > other.exponents_[k]) {
      return false;
    }
  }
  return true;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  for (std::size_t k = 0; k < out.exponents_.size(); ++k) {
    out.exponents_[k] += rhs.exponents_[k];
  }
  return out;
}

Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  for (std::size_t k = 0; k < out.exponents_.size(); ++k) {
    out.exponents_[k] -= rhs.exponents_[k];
  }
  return out;
}

int compare(const Monomial& lhs, const Monomial& rhs, MonomialOrder order) {
  if (order == MonomialOrder::DegLex) {
    const auto dl = lhs.total_degree();
    const auto dr = rhs.total_degree();
    if (dl != dr) {
      return dl < dr ? -1 : 1;
    }
  }
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs[k] != rhs[k]) {
      return lhs[k] < rhs[k] ? -1 : 1;
    }
  }
  return 0;
}

Polynomial Polynomial::constant(Variables variables, const Rational& value) {
  Polynomial p(std::move(variables));
  if (value != 0) {
    p.terms_.emplace(Monomial(p.variables_.size()), value);
  }
  return p;
}

Polynomial Polynomial::variable(Variables variables, std::size_t index) {
  if (index >= variables.size()) {
    fail(ErrorCode::Structural, "variable index out of range");
  }
  Polynomial p(std::move(variables));
  Monomial m(p.variables_.size());
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::term(Variables variables, Monomial monomial, const Rational& coefficient) {
  if (monomial.size() != variables.size()) {
    fail(ErrorCode::Structural, "monomial length does not match variable count");
  }
  Polynomial p(std::move(variables));
  if (coefficient != 0) {
    p.terms_.emplace(std::move(monomial), coefficient);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(variables_.size()));
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::degree_in(std::size_t variable) const {
  long d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max<long>(d, m[variable]);
  }
  return d;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max<long>(d, static_cast<long>(m.total_degree()));
  }
  return d;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

Term Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) {
    fail(ErrorCode::DivisionByZero, "leading term of the zero polynomial");
  }
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (compare(it->first, best->first, order) > 0) {
      best = it;
    }
  }
  return {best->first, best->second};
}

void Polynomial::require_same_variables(const Polynomial& other, const char* what) const {
  if (!(variables_ == other.variables_)) {
    fail(ErrorCode::Structural, std::string("variable-list mismatch in polynomial ") + what);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) {
    c = -c;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other, "addition");
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variables(other, "subtraction");
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_variables(rhs, "multiplication");
  Polynomial out(lhs.variables_);
  for (const auto& [mr, cr] : rhs.terms_) {
    out.add_scaled(lhs, cr, mr);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.variables_ == rhs.variables_ && lhs.terms_ == rhs.terms_;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c, const Monomial& m) {
  require_same_variables(other, "accumulation");
  if (c == 0) {
    return;
  }
  for (const auto& [mo, co] : other.terms_) {
    Rational v = co * c;
    auto [it, inserted] = terms_.try_emplace(mo * m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) {
    return Polynomial(variables_);
  }
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) {
    c *= factor;
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != variables_.size()) {
    fail(ErrorCode::Structural, "evaluation point has " + std::to_string(point.size()) +
                                    " coordinates, polynomial has " +
                                    std::to_string(variables_.size()) + " variables");
  }
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double value = c.get_d();
    for (std::size_t k = 0; k < point.size(); ++k) {
      for (std::uint32_t e = 0; e < m[k]; ++e) {
        value *= point[k];
      }
    }
    sum += value;
  }
  return sum;
}

Polynomial Polynomial::extend_to(const Variables& wider) const {
  if (!variables_.is_prefix_of(wider)) {
    fail(ErrorCode::Structural, "cannot embed polynomial: variables are not a prefix");
  }
  Polynomial out(wider);
  for (const auto& [m, c] : terms_) {
    auto exps = m.exponents();
    exps.resize(wider.size(), 0);
    out.terms_.emplace(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial Polynomial::restrict_to(const Variables& narrower) const {
  if (!narrower.is_prefix_of(variables_)) {
    fail(ErrorCode::Structural, "cannot restrict polynomial: target is not a prefix");
  }
  Polynomial out(narrower);
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = narrower.size(); k < m.size(); ++k) {
      if (m[k] != 0) {
        fail(ErrorCode::Structural,
             "cannot restrict polynomial: variable " + variables_[k] + " occurs");
      }
    }
    auto exps = m.exponents();
    exps.resize(narrower.size());
    out.terms_.emplace(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t variable, const Rational& value) const {
  if (variable >= variables_.size()) {
    fail(ErrorCode::Structural, "substitution variable out of range");
  }
  Polynomial out(variables_);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    reduced[variable] = 0;
    Rational factor = c;
    for (std::uint32_t e = 0; e < m[variable]; ++e) {
      factor *= value;
    }
    out.add_scaled(constant(variables_, 1), factor, reduced);
  }
  return out;
}

DivisionResult divmod(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (g.is_zero()) {
    fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  }
  if (!(f.variables() == g.variables())) {
    fail(ErrorCode::Structural, "variable-list mismatch in polynomial division");
  }
  const Term lead = g.leading_term(order);
  const Polynomial one = Polynomial::constant(f.variables(), 1);
  DivisionResult out{Polynomial(f.variables()), Polynomial(f.variables())};
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term t = rest.leading_term(order);
    if (lead.monomial.divides(t.monomial)) {
      const Monomial m = t.monomial / lead.monomial;
      const Rational c = t.coefficient / lead.coefficient;
      out.quotient.add_scaled(one, c, m);
      rest.add_scaled(g, -c, m);
    } else {
      out.remainder.add_scaled(one, t.coefficient, t.monomial);
      rest.add_scaled(one, -t.coefficient, t.monomial);
    }
  }
  return out;
}

std::string to_string(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) {
    return "0";
  }
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({m, c});
  }
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare(a.monomial, b.monomial, order) > 0;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) {
        out << '-';
      }
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    if (magnitude != 1 || m.is_one()) {
      out << to_string(magnitude);
      wrote = true;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) {
        continue;
      }
      if (wrote) {
        out << '*';
      }
      out << f.variables()[k];
      if (m[k] > 1) {
        out << '^' << m[k];
      }
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace unirow
