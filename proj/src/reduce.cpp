#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

namespace {

enum class EuclidDomain { Integers, Field, UnivariatePolynomials };

EuclidDomain euclid_domain(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return EuclidDomain::Integers;
    case RingKind::Rationals: return EuclidDomain::Field;
    case RingKind::PolynomialRing:
      if (ring.variables().size() == 1 && ring.coefficients() == Coefficients::Rational) {
        return EuclidDomain::UnivariatePolynomials;
      }
      break;
    default: break;
  }
  fail(ErrorCode::Structural, "Euclidean completion needs Z, Q or Q[X]; got " + ring.to_string());
}

// Euclidean size: |x| over Z, degree otherwise (the zero element is never
// measured).
BigInt euclid_size(EuclidDomain domain, const Polynomial& x) {
  if (domain == EuclidDomain::Integers) {
    return abs(x.constant_term().get_num());
  }
  return BigInt(x.total_degree());
}

Polynomial euclid_step_quotient(EuclidDomain domain, const Ring& ring, const Polynomial& x,
                                const Polynomial& divisor) {
  if (domain == EuclidDomain::Integers) {
    const BigInt q = euclid_quotient(x.constant_term().get_num(), divisor.constant_term().get_num());
    return ring.constant(Rational(q));
  }
  return divmod(x, divisor, MonomialOrder::Lex).quotient;
}

bool is_unit(EuclidDomain domain, const Polynomial& g) {
  if (g.is_zero() || !g.is_constant()) {
    return false;
  }
  if (domain == EuclidDomain::Integers) {
    return abs(g.constant_term()) == 1;
  }
  return true;
}

std::string describe_gcd(EuclidDomain domain, const Ring& ring, const Polynomial& g) {
  if (g.is_zero()) {
    return "0";
  }
  if (domain == EuclidDomain::Integers) {
    return to_string(BigInt(abs(g.constant_term().get_num())));
  }
  return ring.print(g.scaled(1 / g.leading_term(MonomialOrder::Lex).coefficient));
}

void push_nonzero(std::vector<ElementaryOp>& ops, std::size_t i, std::size_t j, Polynomial lambda) {
  if (!lambda.is_zero()) {
    ops.push_back({i, j, std::move(lambda)});
  }
}

}  // namespace

EuclidCompletion euclid_complete(const Ring& ring, const Polynomial& a1_in,
                                 const Polynomial& a2_in) {
  const EuclidDomain domain = euclid_domain(ring);
  Polynomial a1 = ring.normal_form(a1_in);
  Polynomial a2 = ring.normal_form(a2_in);
  const std::vector<Polynomial> original{a1, a2};

  ElementaryFactorization f{2, {}};
  while (!a1.is_zero() && !a2.is_zero()) {
    if (euclid_size(domain, a1) >= euclid_size(domain, a2)) {
      const Polynomial q = euclid_step_quotient(domain, ring, a1, a2);
      f.ops.push_back({2, 1, ring.neg(q)});
      a1 = ring.sub(a1, ring.mul(q, a2));
    } else {
      const Polynomial q = euclid_step_quotient(domain, ring, a2, a1);
      f.ops.push_back({1, 2, ring.neg(q)});
      a2 = ring.sub(a2, ring.mul(q, a1));
    }
  }

  const Polynomial& g = a1.is_zero() ? a2 : a1;
  if (!is_unit(domain, g)) {
    throw NotUnimodularError(ErrorCode::NotUnimodular,
                             "(" + ring.print(original[0]) + ", " + ring.print(original[1]) +
                                 ") is not unimodular: gcd = " + describe_gcd(domain, ring, g),
                             describe_gcd(domain, ring, g));
  }
  const Polynomial inv = ring.constant(1 / g.constant_term());
  if (a2.is_zero()) {
    if (!ring.is_one(a1)) {
      // (u, 0) -> (u, 1) -> (1, 1) -> (1, 0)
      f.ops.push_back({1, 2, inv});
      f.ops.push_back({2, 1, ring.sub(ring.one(), a1)});
      f.ops.push_back({1, 2, ring.constant(-1)});
    }
  } else {
    // (0, u) -> (1, u) -> (1, 0)
    f.ops.push_back({2, 1, inv});
    f.ops.push_back({1, 2, ring.neg(a2)});
  }

  const RingMatrix sigma = f.matrix(ring);
  UnimodularRow row = UnimodularRow::verify(ring, original, sigma.column(0));
  CompletionCertificate cert = complete_from_reduction(row, f, Provenance::Euclid);
  return {std::move(f), std::move(cert)};
}

ElementaryFactorization unit_first_reduce(const UnimodularRow& row, const Polynomial& inverse) {
  const Ring& ring = row.ring();
  const auto& a = row.entries();
  const Polynomial inv = ring.normal_form(inverse);
  if (!ring.is_one(ring.mul(a[0], inv))) {
    fail(ErrorCode::NotAnInverse,
         ring.print(inv) + " is not an inverse of " + ring.print(a[0]) + " in " + ring.to_string());
  }
  const std::size_t n = row.size();
  ElementaryFactorization f{n, {}};
  for (std::size_t k = 2; k <= n; ++k) {
    push_nonzero(f.ops, 1, k, ring.neg(ring.mul(a[k - 1], inv)));
  }
  if (!ring.is_one(a[0])) {
    f.ops.push_back({1, 2, inv});
    f.ops.push_back({2, 1, ring.sub(ring.one(), a[0])});
    f.ops.push_back({1, 2, ring.constant(-1)});
  }
  return f;
}

ElementaryFactorization partial_unimodular_reduce(const UnimodularRow& row, std::size_t prefix,
                                                  std::span<const Polynomial> prefix_witness) {
  const Ring& ring = row.ring();
  const std::size_t n = row.size();
  if (prefix < 1 || prefix >= n) {
    fail(ErrorCode::Structural, "prefix length must satisfy 1 <= i < n (got i = " +
                                    std::to_string(prefix) + ", n = " + std::to_string(n) + ")");
  }
  if (prefix_witness.size() != prefix) {
    fail(ErrorCode::Structural, "prefix witness must have length " + std::to_string(prefix));
  }
  const std::span<const Polynomial> head(row.entries().data(), prefix);
  const Polynomial residual = witness_residual(ring, head, prefix_witness);
  if (!residual.is_zero()) {
    fail(ErrorCode::NotAnInverse,
         "prefix witness identity fails: residual " + ring.print(residual));
  }

  ElementaryFactorization f{n, {}};
  std::vector<Polynomial> a = row.entries();
  auto push = [&](std::size_t i, std::size_t j, Polynomial lambda) {
    if (lambda.is_zero()) {
      return;
    }
    ElementaryOp op{i, j, std::move(lambda)};
    a = apply_op(ring, a, op);
    f.ops.push_back(std::move(op));
  };

  // a_n += (1 - a_n) * sum_{k<=i} d_k a_k, one shear per prefix entry
  const Polynomial gap = ring.sub(ring.one(), a[n - 1]);
  for (std::size_t k = 1; k <= prefix; ++k) {
    push(k, n, ring.mul(gap, ring.normal_form(prefix_witness[k - 1])));
  }
  for (std::size_t k = 1; k < n; ++k) {
    push(n, k, ring.neg(a[k - 1]));
  }
  push(n, 1, ring.one());
  push(1, n, ring.constant(-1));
  return f;
}

ElementaryFactorization FactorizationPath::at(const Rational& value) const {
  ElementaryFactorization out{factorization.n, {}};
  out.ops.reserve(factorization.ops.size());
  for (const auto& op : factorization.ops) {
    out.ops.push_back({op.i, op.j, ring.normal_form(op.lambda.substitute(parameter, value))});
  }
  return out;
}

FactorizationPath factorization_path(const ElementaryFactorization& f, const Ring& ring,
                                     const std::string& parameter) {
  f.validate();
  const Ring extended = ring.extend_with_variable(parameter);
  const std::size_t index = extended.variables().size() - 1;
  const Polynomial t = extended.variable(index);
  ElementaryFactorization path{f.n, {}};
  path.ops.reserve(f.ops.size());
  for (const auto& op : f.ops) {
    path.ops.push_back({op.i, op.j, extended.mul(extended.embed(op.lambda), t)});
  }
  return {extended, index, std::move(path)};
}

Polynomial specialize(const Polynomial& f, const Ring& extended, const Ring& base,
                      const Rational& value) {
  if (extended.variables().size() != base.variables().size() + 1) {
    fail(ErrorCode::Structural, "specialize expects a one-parameter extension");
  }
  const std::size_t parameter = base.variables().size();
  return base.normal_form(
      extended.normal_form(f).substitute(parameter, value).restrict_to(base.variables()));
}

RingMatrix specialize(const RingMatrix& m, const Ring& base, const Rational& value) {
  return m.map(base, [&](const Polynomial& e) { return specialize(e, m.ring(), base, value); });
}

}  // namespace unirow
