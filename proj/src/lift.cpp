#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

namespace {

void check_pair(const Ring& quotient, const Ring& base) {
  if (quotient.kind() != RingKind::PrincipalQuotient) {
    fail(ErrorCode::ContextMismatch,
         "lifting needs a principal quotient A/J; got " + quotient.to_string());
  }
  if (base.kind() != RingKind::PolynomialRing || base.coefficients() != Coefficients::Rational ||
      !(base.variables() == quotient.variables()) || base.order() != quotient.order()) {
    fail(ErrorCode::ContextMismatch,
         base.to_string() + " is not the polynomial ring under " + quotient.to_string());
  }
}

void check_modulus(const IntegerModulus& modulus) {
  if (modulus.m < 2) {
    fail(ErrorCode::Structural, "integer modulus must be >= 2 (got " + to_string(modulus.m) + ")");
  }
}

Polynomial residue(const Polynomial& lambda, const IntegerModulus& modulus) {
  const Ring z = Ring::integers();
  const Polynomial v = z.normal_form(lambda);
  if (!v.is_constant()) {
    fail(ErrorCode::ContextMismatch, "Z/(m) entries must be integers");
  }
  return z.constant(Rational(mod_floor(v.constant_term().get_num(), modulus.m)));
}

std::vector<Polynomial> reduce_row(std::span<const Polynomial> row, const Ring& quotient) {
  std::vector<Polynomial> out;
  for (const auto& e : row) {
    out.push_back(quotient.normal_form(e));
  }
  return out;
}

std::vector<Polynomial> reduce_row(std::span<const Polynomial> row, const IntegerModulus& m) {
  std::vector<Polynomial> out;
  for (const auto& e : row) {
    out.push_back(residue(e, m));
  }
  return out;
}

}  // namespace

ElementaryFactorization lift_elementary_factorization(const ElementaryFactorization& reduced,
                                                      const Ring& quotient, const Ring& base) {
  check_pair(quotient, base);
  reduced.validate();
  ElementaryFactorization out{reduced.n, {}};
  for (const auto& op : reduced.ops) {
    out.ops.push_back({op.i, op.j, base.normal_form(quotient.normal_form(op.lambda))});
  }
  return out;
}

ElementaryFactorization lift_elementary_factorization(const ElementaryFactorization& reduced,
                                                      const IntegerModulus& modulus) {
  check_modulus(modulus);
  reduced.validate();
  ElementaryFactorization out{reduced.n, {}};
  for (const auto& op : reduced.ops) {
    out.ops.push_back({op.i, op.j, residue(op.lambda, modulus)});
  }
  return out;
}

ElementaryFactorization reduce_factorization(const ElementaryFactorization& f,
                                             const Ring& quotient) {
  ElementaryFactorization out{f.n, {}};
  for (const auto& op : f.ops) {
    out.ops.push_back({op.i, op.j, quotient.normal_form(op.lambda)});
  }
  return out;
}

ElementaryFactorization reduce_factorization(const ElementaryFactorization& f,
                                             const IntegerModulus& modulus) {
  check_modulus(modulus);
  ElementaryFactorization out{f.n, {}};
  for (const auto& op : f.ops) {
    out.ops.push_back({op.i, op.j, residue(op.lambda, modulus)});
  }
  return out;
}

LiftedRow transform_row_with_lift(const UnimodularRow& row, const ElementaryFactorization& reduced,
                                  const Ring& quotient) {
  if (!(row.ring().variables() == quotient.variables())) {
    fail(ErrorCode::ContextMismatch,
         "row over " + row.ring().to_string() + " does not match " + quotient.to_string());
  }
  ElementaryFactorization lift = lift_elementary_factorization(reduced, quotient, row.ring());
  UnimodularRow moved = apply_factorization_with_witness(row, lift);

  const auto expected =
      apply_factorization(quotient, reduce_row(row.entries(), quotient), reduced);
  const auto got = reduce_row(moved.entries(), quotient);
  for (std::size_t k = 0; k < got.size(); ++k) {
    if (!quotient.equal(got[k], expected[k])) {
      fail(ErrorCode::Structural, "lifted row does not reduce to the transformed row");
    }
  }
  return {std::move(moved), std::move(lift)};
}

LiftedRow transform_row_with_lift(const UnimodularRow& row, const ElementaryFactorization& reduced,
                                  const IntegerModulus& modulus) {
  if (row.ring().kind() != RingKind::Integers) {
    fail(ErrorCode::ContextMismatch, "Z/(m) lifting needs a row over Z; got " +
                                         row.ring().to_string());
  }
  ElementaryFactorization lift = lift_elementary_factorization(reduced, modulus);
  UnimodularRow moved = apply_factorization_with_witness(row, lift);

  // reduce after every op so the comparison happens in Z/(m)
  auto expected = reduce_row(row.entries(), modulus);
  const Ring z = Ring::integers();
  for (const auto& op : reduced.ops) {
    expected = reduce_row(apply_op(z, expected, {op.i, op.j, residue(op.lambda, modulus)}),
                          modulus);
  }
  const auto got = reduce_row(moved.entries(), modulus);
  if (got != expected) {
    fail(ErrorCode::Structural, "lifted row does not reduce to the transformed row");
  }
  return {std::move(moved), std::move(lift)};
}

}  // namespace unirow
