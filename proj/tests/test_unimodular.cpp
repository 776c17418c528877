#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "unirow/errors.hpp"

using namespace unirow;
using oracle::names;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Usage;
}

std::vector<Polynomial> consts(const Ring& ring, std::initializer_list<long> values) {
  std::vector<Polynomial> out;
  for (long v : values) out.push_back(ring.constant(v));
  return out;
}

bool same_ops(const ElementaryFactorization& lhs, const ElementaryFactorization& rhs) {
  if (lhs.n != rhs.n || lhs.ops.size() != rhs.ops.size()) return false;
  for (std::size_t k = 0; k < lhs.ops.size(); ++k) {
    const auto& a = lhs.ops[k];
    const auto& b = rhs.ops[k];
    if (a.i != b.i || a.j != b.j || !(a.lambda == b.lambda)) return false;
  }
  return true;
}

const Ring kSwanRing = Ring::polynomials(names({"a", "b", "c", "ap", "bp", "cp"}));

}  // namespace

TEST_CASE("verify_unimodular") {
  const Ring q = Ring::rationals();
  CHECK(verify_unimodular(consts(q, {1, 0}), consts(q, {1, 0}), q).size() == 2);

  const Ring circle = oracle::circle();
  const auto xy = circle.parse_list("x, y");
  CHECK_NOTHROW(verify_unimodular(xy, xy, circle));

  const Ring free = Ring::polynomials(names({"x", "y"}));
  const auto fxy = free.parse_list("x, y");
  try {
    verify_unimodular(fxy, fxy, free);
    FAIL("free ring accepted x^2 + y^2 = 1");
  } catch (const NotUnimodularError& e) {
    CHECK(e.code() == ErrorCode::NotUnimodularWithWitness);
    CHECK(free.parse(e.residual()) == free.parse("x^2 + y^2 - 1"));
  }
  CHECK(code_of([&] { verify_unimodular(consts(q, {1}), consts(q, {1}), q); }) ==
        ErrorCode::Structural);
  CHECK(code_of([&] { verify_unimodular(consts(q, {1, 0}), consts(q, {1}), q); }) ==
        ErrorCode::Structural);
}

TEST_CASE("apply_elementary_with_witness") {
  const Ring z = Ring::integers();
  const auto row = verify_unimodular(consts(z, {2, 3}), consts(z, {-1, 1}), z);
  const auto same = apply_elementary_with_witness(row, {1, 2, z.zero()});
  CHECK(same.entries() == row.entries());
  CHECK(same.witness() == row.witness());

  const auto moved = apply_elementary_with_witness(row, {1, 2, z.one()});
  CHECK(moved.entries() == consts(z, {2, 5}));
  CHECK(moved.witness() == consts(z, {-2, 1}));

  // Shear with lambda X in A[X]: a' = (a1 + lambda X a2, a2, a3), b' = (b1,
  // b2 - b1 lambda X, b3).
  const Ring s = Ring::polynomials(names({"a1", "a2", "a3", "b1", "b2", "b3", "l", "X"}));
  const auto a = s.parse_list("a1, a2, a3");
  const auto b = s.parse_list("b1, b2, b3");
  const Polynomial lx = s.parse("l*X");
  CHECK(apply_op(s, a, {2, 1, lx}) == s.parse_list("a1 + l*X*a2, a2, a3"));
  CHECK(apply_op(s, b, {1, 2, s.neg(lx)}) == s.parse_list("b1, b2 - b1*l*X, b3"));
  // the dot product is preserved identically
  CHECK(oracle::dot(s, apply_op(s, a, {2, 1, lx}), apply_op(s, b, {1, 2, s.neg(lx)})) ==
        oracle::dot(s, a, b));

  CHECK(code_of([&] { apply_elementary_with_witness(row, {1, 3, z.one()}); }) ==
        ErrorCode::Structural);
}

TEST_CASE("witness preservation under random shears") {
  oracle::Random rng(31);
  for (const Ring& ring : {Ring::integers(), oracle::circle(), oracle::sphere()}) {
    for (int k = 0; k < 30; ++k) {
      const std::size_t n = 2 + rng.index(3);
      auto row = rng.unimodular(ring, n, 4);
      const auto f = rng.factorization(ring, n, 6);
      for (const auto& op : f.ops) {
        row = apply_elementary_with_witness(row, op);
        CHECK(oracle::dot(ring, row.entries(), row.witness()) == ring.one());
      }
    }
  }
}

TEST_CASE("apply_factorization matches explicit matrices") {
  oracle::Random rng(32);
  const Ring circle = oracle::circle();
  for (int k = 0; k < 30; ++k) {
    const auto f = rng.factorization(circle, 3, 5, 2);
    std::vector<Polynomial> row;
    for (int c = 0; c < 3; ++c) row.push_back(circle.normal_form(rng.poly(circle, 2, 3)));
    CHECK(apply_factorization(circle, row, f) == oracle::apply_naive(circle, row, f.ops));
    CHECK(apply_factorization(circle, row, f) == row_times(row, f.matrix(circle)));
  }
}

TEST_CASE("euclid_complete examples") {
  const Ring z = Ring::integers();
  const auto unit = euclid_complete(z, z.one(), z.zero());
  CHECK(unit.factorization.ops.empty());
  CHECK(unit.certificate.matrix() == RingMatrix::identity(z, 2));

  const auto e = euclid_complete(z, z.constant(3), z.constant(2));
  CHECK(oracle::is_e1(z, oracle::apply_naive(z, consts(z, {3, 2}), e.factorization.ops)));
  const RingMatrix& m = e.certificate.matrix();
  CHECK(m.row(0) == consts(z, {3, 2}));
  CHECK(oracle::leibniz_det(m) == z.one());

  const Ring qx = Ring::polynomials(names({"X"}));
  const auto p = euclid_complete(qx, qx.parse("X^2 + 1"), qx.parse("X"));
  CHECK(oracle::is_e1(qx, oracle::apply_naive(qx, qx.parse_list("X^2 + 1, X"), p.factorization.ops)));
  CHECK(p.certificate.matrix().row(0) == qx.parse_list("X^2 + 1, X"));
  CHECK(determinant(p.certificate.matrix()) == qx.one());

  // Negative entries: sign fixed by shears, never a diagonal matrix.
  const auto neg = euclid_complete(z, z.constant(-5), z.constant(-3));
  CHECK(oracle::is_e1(z, oracle::apply_naive(z, consts(z, {-5, -3}), neg.factorization.ops)));
  const auto swapped = euclid_complete(z, z.zero(), z.constant(-1));
  CHECK(oracle::is_e1(z, oracle::apply_naive(z, consts(z, {0, -1}), swapped.factorization.ops)));
}

TEST_CASE("euclid_complete failures") {
  const Ring z = Ring::integers();
  try {
    euclid_complete(z, z.constant(4), z.constant(-2));
    FAIL("gcd 2 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK(code_of([&] { euclid_complete(z, z.zero(), z.zero()); }) == ErrorCode::NotUnimodular);
  const Ring qx = Ring::polynomials(names({"X"}));
  CHECK(code_of([&] { euclid_complete(qx, qx.parse("X^2 - 1"), qx.parse("2*X - 2")); }) ==
        ErrorCode::NotUnimodular);
  const Ring qxy = Ring::polynomials(names({"x", "y"}));
  CHECK(code_of([&] { euclid_complete(qxy, qxy.parse("x"), qxy.parse("1")); }) ==
        ErrorCode::Structural);
  const Ring circle = oracle::circle();
  CHECK(code_of([&] { euclid_complete(circle, circle.one(), circle.zero()); }) ==
        ErrorCode::Structural);
}

TEST_CASE("euclid_complete on random coprime pairs") {
  oracle::Random rng(33);
  const Ring z = Ring::integers();
  int done = 0;
  while (done < 100) {
    const long a = rng.integer(-10000, 10000), b = rng.integer(-10000, 10000);
    if (std::abs(std::get<0>(oracle::xgcd(a, b))) != 1) continue;
    ++done;
    const auto e = euclid_complete(z, z.constant(a), z.constant(b));
    CHECK(oracle::is_e1(z, oracle::apply_naive(z, consts(z, {a, b}), e.factorization.ops)));
    CHECK(e.certificate.matrix().row(0) == consts(z, {a, b}));
    CHECK(oracle::leibniz_det(e.certificate.matrix()) == z.one());
  }
  const Ring qx = Ring::polynomials(names({"X"}));
  done = 0;
  while (done < 50) {
    const Polynomial f = rng.qpoly(qx, 4, 4), g = rng.qpoly(qx, 4, 4);
    if (oracle::univariate_gcd_degree(f, g) != 0) continue;
    ++done;
    const auto e = euclid_complete(qx, f, g);
    CHECK(oracle::is_e1(qx, oracle::apply_naive(qx, {f, g}, e.factorization.ops)));
    CHECK(oracle::leibniz_det(e.certificate.matrix()) == qx.one());
  }
}

TEST_CASE("unit_first_reduce") {
  const Ring q = Ring::rationals();
  const auto r1 = verify_unimodular(consts(q, {1, 0, 0}), consts(q, {1, 0, 0}), q);
  CHECK(oracle::is_e1(q, oracle::apply_naive(q, r1.entries(), unit_first_reduce(r1, q.one()).ops)));

  const auto r2 = verify_unimodular(consts(q, {2, 3}), {q.constant(make_rational(1, 2)), q.zero()}, q);
  const auto f2 = unit_first_reduce(r2, q.constant(make_rational(1, 2)));
  CHECK(oracle::is_e1(q, oracle::apply_naive(q, r2.entries(), f2.ops)));

  const auto r3 = verify_unimodular(consts(q, {-1, 5, 7}), consts(q, {-1, 0, 0}), q);
  CHECK(oracle::is_e1(q, oracle::apply_naive(q, r3.entries(), unit_first_reduce(r3, q.constant(-1)).ops)));

  CHECK(code_of([&] { unit_first_reduce(r2, q.constant(2)); }) == ErrorCode::NotAnInverse);

  oracle::Random rng(34);
  const Ring circle = oracle::circle();
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + rng.index(3);
    long c = 0;
    while (c == 0) c = rng.integer(-5, 5);
    std::vector<Polynomial> a{circle.constant(c)}, b{circle.constant(make_rational(1, c))};
    for (std::size_t j = 1; j < n; ++j) {
      a.push_back(circle.normal_form(rng.poly(circle, 2, 3)));
      b.push_back(circle.zero());
    }
    const auto row = verify_unimodular(a, b, circle);
    const auto f = unit_first_reduce(row, b[0]);
    CHECK(oracle::is_e1(circle, oracle::apply_naive(circle, a, f.ops)));
  }
}

TEST_CASE("partial_unimodular_reduce") {
  const Ring q = Ring::rationals();
  const auto r1 = verify_unimodular(consts(q, {1, 0, 5}), consts(q, {1, 0, 0}), q);
  const auto d1 = consts(q, {1});
  CHECK(oracle::is_e1(q, oracle::apply_naive(q, r1.entries(), partial_unimodular_reduce(r1, 1, d1).ops)));

  const Ring circle = oracle::circle();
  const auto a2 = circle.parse_list("x, y, x^2 + y^2");
  const auto r2 = verify_unimodular(a2, circle.parse_list("x, y, 0"), circle);
  const auto d2 = circle.parse_list("x, y");
  CHECK(oracle::is_e1(circle, oracle::apply_naive(circle, a2, partial_unimodular_reduce(r2, 2, d2).ops)));

  const Ring z = Ring::integers();
  const auto r3 = verify_unimodular(consts(z, {2, 3, 0}), consts(z, {-1, 1, 0}), z);
  const auto d3 = consts(z, {-1, 1});
  CHECK(oracle::is_e1(z, oracle::apply_naive(z, r3.entries(), partial_unimodular_reduce(r3, 2, d3).ops)));

  const auto bad = consts(z, {1, 1});
  CHECK(code_of([&] { partial_unimodular_reduce(r3, 2, bad); }) == ErrorCode::NotAnInverse);
  CHECK(code_of([&] { partial_unimodular_reduce(r3, 3, consts(z, {-1, 1, 0})); }) ==
        ErrorCode::Structural);

  oracle::Random rng(35);
  for (const Ring& ring : {z, circle, oracle::sphere()}) {
    for (int k = 0; k < 40; ++k) {
      const std::size_t i = 1 + rng.index(3);
      const std::size_t n = i + 1 + rng.index(2);
      std::vector<Polynomial> a{ring.one()}, b{ring.one()};
      if (i > 1) {
        const auto prefix = rng.unimodular(ring, i, 3);
        a = prefix.entries();
        b = prefix.witness();
      }
      const std::vector<Polynomial> d = b;
      while (a.size() < n) {
        a.push_back(ring.normal_form(rng.poly(ring, 2, 3)));
        b.push_back(ring.zero());
      }
      const auto row = verify_unimodular(a, b, ring);
      const auto f = partial_unimodular_reduce(row, i, d);
      CHECK(oracle::is_e1(ring, oracle::apply_naive(ring, a, f.ops)));
    }
  }
}

TEST_CASE("completion certificates") {
  oracle::Random rng(36);
  const Ring sphere = oracle::sphere();
  for (int k = 0; k < 20; ++k) {
    // e1 * f = row, so f^-1 reduces the row and the certificate matrix is f.
    const auto f = rng.factorization(sphere, 3, 4);
    std::vector<Polynomial> e1{sphere.one(), sphere.zero(), sphere.zero()};
    const auto row = apply_factorization_with_witness(verify_unimodular(e1, e1, sphere), f);
    const auto cert = complete_from_reduction(row, f.inverse(), Provenance::UnitReduce);
    CHECK(cert.matrix() == f.matrix(sphere));
    CHECK(cert.matrix().row(0) == row.entries());
    CHECK(oracle::leibniz_det(cert.matrix()) == sphere.one());
    CHECK_NOTHROW(verify_completion(cert));
  }
  const auto row = rng.unimodular(sphere, 3, 2);
  CHECK(code_of([&] { complete_from_reduction(row, {3, {}}, Provenance::UnitReduce); }) ==
        ErrorCode::InvalidCertificate);
}

TEST_CASE("factorization_path") {
  const Ring z = Ring::integers();
  const auto empty = factorization_path({2, {}}, z);
  CHECK(empty.factorization.ops.empty());

  const Ring ring = Ring::polynomials(names({"l"}));
  const auto one = factorization_path({2, {{1, 2, ring.variable("l")}}}, ring);
  CHECK(one.ring.to_string() == "Q[l,t]");
  CHECK(one.factorization.ops[0].lambda == one.ring.parse("l*t"));
  CHECK(one.at(0).ops[0].lambda.is_zero());
  CHECK(one.at(1).ops[0].lambda == one.ring.parse("l"));

  const auto e = euclid_complete(z, z.constant(3), z.constant(2));
  const auto path = factorization_path(e.factorization, z);
  CHECK(path.ring.to_string() == "Z[t]");
  const auto row = path.ring.parse_list("3, 2");
  const auto end = apply_factorization(path.ring, row, path.at(1));
  CHECK(oracle::is_e1(path.ring, end));
  CHECK(apply_factorization(path.ring, row, path.at(0)) == row);
  // the symbolic path specializes to the same endpoints
  const auto sym = apply_factorization(path.ring, row, path.factorization);
  CHECK(specialize(sym[0], path.ring, z, 1) == z.one());
  CHECK(specialize(sym[1], path.ring, z, 1) == z.zero());
  CHECK(specialize(sym[0], path.ring, z, 0) == z.constant(3));
}

TEST_CASE("vaserstein_isotopy examples") {
  const Ring z = Ring::integers();
  const auto same = vaserstein_isotopy(consts(z, {2, 3, 0}), consts(z, {-1, 1, 0}),
                                       consts(z, {-1, 1, 0}), z);
  CHECK(same.path() == RingMatrix::identity(same.extended(), 3));

  const auto cert = vaserstein_isotopy(consts(z, {1, 0, 0}), consts(z, {1, 0, 0}),
                                       consts(z, {1, 1, 0}), z);
  const RingMatrix end = specialize(cert.path(), z, 1);
  CHECK(end == elementary_matrix(3, {2, 1, z.one()}, z));
  CHECK(times_column(end, consts(z, {1, 0, 0})) == consts(z, {1, 1, 0}));
  CHECK_FALSE(cert.below_stable_range());

  const Ring sphere = oracle::sphere();
  const auto s = vaserstein_isotopy(sphere.parse_list("x, y, z"), sphere.parse_list("x, y, z"),
                                    sphere.parse_list("x + y, y - x, z"), sphere);
  CHECK(determinant(s.path()) == s.extended().one());
  CHECK(oracle::leibniz_det(s.path()) == s.extended().one());

  const Ring q = Ring::rationals();
  const auto pair = vaserstein_isotopy(consts(q, {1, 0}), consts(q, {1, 0}), consts(q, {1, 5}), q);
  CHECK(pair.below_stable_range());

  CHECK(code_of([&] {
          vaserstein_isotopy(consts(z, {1, 0, 0}), consts(z, {1, 0, 0}), consts(z, {2, 0, 0}), z);
        }) == ErrorCode::NotUnimodularWithWitness);
}

TEST_CASE("isotopy endpoints on random triples") {
  oracle::Random rng(37);
  for (const Ring& ring : {Ring::integers(), oracle::sphere()}) {
    for (int k = 0; k < 15; ++k) {
      const std::size_t n = 3 + rng.index(2);
      const auto row = rng.unimodular(ring, n, 3);
      const auto c = rng.other_witness(ring, row);
      const auto cert = vaserstein_isotopy(row.entries(), row.witness(), c, ring);
      const Ring& ext = cert.extended();
      CHECK(specialize(cert.path(), ring, 0) == RingMatrix::identity(ring, n));
      CHECK(times_column(specialize(cert.path(), ring, 1), row.witness()) == c);
      CHECK(oracle::leibniz_det(cert.path()) == ext.one());
      CHECK_NOTHROW(cert.recheck());
    }
  }
}

TEST_CASE("swan chain over the free ring") {
  const Ring& r = kSwanRing;
  const auto v = [&](const char* name) { return r.variable(name); };
  const SwanChain chain = swan_chain(r, v("a"), v("b"), v("c"), v("ap"), v("bp"), v("cp"));
  const Polynomial s = r.parse("a*ap + b*bp + c*cp");
  CHECK(oracle::leibniz_det(chain.alpha) == r.mul(s, s));
  CHECK(is_skew_symmetric(chain.alpha));
  // the closed form agrees with alpha1 alpha2 alpha once s = 1
  const RingMatrix product = chain.alpha1 * chain.alpha2 * chain.alpha;
  for (std::size_t k = 0; k < 16; ++k) {
    const Polynomial diff = product.entries()[k] - chain.alpha_prime.entries()[k];
    CHECK(divmod(diff, s - r.one(), MonomialOrder::DegLex).remainder.is_zero());
  }
  CHECK_FALSE(product == chain.alpha_prime);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(chain.alpha_prime(k, 0) == (k == 0 ? r.one() : r.zero()));
  }

  const RingMatrix& m = chain.completion;
  CHECK(m.row(0) == r.parse_list("a^2, b, c"));
  CHECK(m == RingMatrix::from_rows(r, {r.parse_list("a^2, b, c"),
                                       r.parse_list("2*a*cp - b, cp^2, -bp*cp - ap"),
                                       r.parse_list("-2*a*bp - c, ap - bp*cp, bp^2")}));
  const Polynomial det = oracle::leibniz_det(m);
  CHECK(det == r.mul(s, s));
  // det - 1 lies in the ideal (s - 1): single-divisor division leaves nothing
  const auto division = divmod(det - r.one(), s - r.one(), MonomialOrder::DegLex);
  CHECK(division.remainder.is_zero());
}

TEST_CASE("printed final matrix is a completion under a sign change of a, a'") {
  // The printed matrix differs from the rearranged sigma block; it equals
  // that block after (a, a') -> (-a, -a'), which fixes (a^2, b, c) and s.
  const Ring& r = kSwanRing;
  const RingMatrix printed = RingMatrix::from_rows(
      r, {r.parse_list("a^2, b, c"), r.parse_list("-2*a*cp - b, cp^2, -bp*cp + ap"),
          r.parse_list("2*a*bp - c, -bp*cp - ap, bp^2")});
  const Polynomial s = r.parse("a*ap + b*bp + c*cp");
  CHECK(oracle::leibniz_det(printed) == r.mul(s, s));
  const auto v = [&](const char* name) { return r.variable(name); };
  const SwanChain flipped =
      swan_chain(r, r.neg(v("a")), v("b"), v("c"), r.neg(v("ap")), v("bp"), v("cp"));
  CHECK(flipped.completion == printed);
}

TEST_CASE("swan_complete") {
  const Ring q = Ring::rationals();
  const auto cert = swan_complete(q, q.one(), q.zero(), q.zero(), q.one(), q.zero(), q.zero());
  CHECK(cert.matrix() == RingMatrix::from_rows(q, {consts(q, {1, 0, 0}), consts(q, {0, 0, -1}),
                                                   consts(q, {0, 1, 0})}));
  CHECK(oracle::leibniz_det(cert.matrix()) == q.one());

  const Ring sphere = oracle::sphere();
  const auto x = sphere.variable("x"), y = sphere.variable("y"), z = sphere.variable("z");
  const auto s = swan_complete(sphere, x, y, z, x, y, z);
  CHECK(s.matrix().row(0) == sphere.parse_list("x^2, y, z"));
  CHECK(oracle::leibniz_det(s.matrix()) == sphere.one());
  CHECK(s.provenance() == Provenance::Swan);
  CHECK_NOTHROW(verify_completion(s));

  CHECK(code_of([&] { swan_complete(sphere, x, y, z, y, x, z); }) ==
        ErrorCode::NotUnimodularWithWitness);

  oracle::Random rng(38);
  for (int k = 0; k < 10; ++k) {
    const auto row = rng.unimodular(sphere, 3, 3);
    const auto& a = row.entries();
    const auto& b = row.witness();
    const auto cert2 = swan_complete(sphere, a[0], a[1], a[2], b[0], b[1], b[2]);
    CHECK(cert2.matrix().row(0) ==
          std::vector<Polynomial>{sphere.mul(a[0], a[0]), a[1], a[2]});
    CHECK(oracle::leibniz_det(cert2.matrix()) == sphere.one());
  }
}

TEST_CASE("lift examples") {
  const Ring z = Ring::integers();
  const auto l1 = lift_elementary_factorization({2, {{1, 2, z.constant(3)}}}, IntegerModulus{5});
  CHECK(l1.ops[0].lambda == z.constant(3));
  const auto l1b = lift_elementary_factorization({2, {{1, 2, z.constant(-2)}}}, IntegerModulus{5});
  CHECK(l1b.ops[0].lambda == z.constant(3));

  const Ring circle = oracle::circle();
  const Ring free = Ring::polynomials(names({"x", "y"}));
  const auto l2 = lift_elementary_factorization({2, {{2, 1, circle.variable("y")}}}, circle, free);
  CHECK(l2.ops[0].lambda == free.variable("y"));
  const auto l3 = lift_elementary_factorization({2, {{1, 2, circle.parse("x^2")}}}, circle, free);
  CHECK(l3.ops[0].lambda == free.parse("1 - y^2"));
  CHECK(l3.ops[0].lambda == oracle::circle_reduce(free.parse("x^2")));

  const auto row = verify_unimodular(consts(z, {2, 3}), consts(z, {-1, 1}), z);
  const auto t = transform_row_with_lift(row, {2, {{1, 2, z.one()}}}, IntegerModulus{5});
  CHECK(t.row.entries() == consts(z, {2, 5}));
  CHECK(mod_floor(t.row.entries()[1].constant_term().get_num(), 5) == 0);
  const auto unchanged = transform_row_with_lift(row, {2, {}}, IntegerModulus{5});
  CHECK(unchanged.row.entries() == row.entries());

  const auto fxy = verify_unimodular(free.parse_list("x, 1 - x*y"), free.parse_list("y, 1"), free);
  CHECK(code_of([&] { transform_row_with_lift(fxy, {2, {}}, free); }) == ErrorCode::ContextMismatch);
  CHECK(code_of([&] { lift_elementary_factorization({2, {}}, oracle::sphere(), free); }) ==
        ErrorCode::ContextMismatch);
  CHECK(code_of([&] { lift_elementary_factorization({2, {}}, IntegerModulus{1}); }) !=
        ErrorCode::Usage);
}

TEST_CASE("lift then reduce reproduces the input") {
  oracle::Random rng(39);
  const Ring z = Ring::integers();
  for (long m = 2; m <= 11; ++m) {
    for (int k = 0; k < 5; ++k) {
      const auto raw = rng.factorization(z, 3, 5, 0, 30);
      const auto reduced = reduce_factorization(raw, IntegerModulus{m});
      for (const auto& op : reduced.ops) {
        const BigInt v = op.lambda.constant_term().get_num();
        CHECK((v >= 0 && v < m));
      }
      const auto lifted = lift_elementary_factorization(reduced, IntegerModulus{m});
      CHECK(same_ops(reduce_factorization(lifted, IntegerModulus{m}), reduced));

      const auto row = rng.unimodular(z, 3, 4, 0, 5);
      const auto t = transform_row_with_lift(row, reduced, IntegerModulus{m});
      std::vector<Polynomial> row_mod;
      for (const auto& e : row.entries()) row_mod.push_back(z.constant(mod_floor(e.constant_term().get_num(), m)));
      const auto expected = oracle::apply_naive(z, row_mod, reduced.ops);
      for (std::size_t c = 0; c < 3; ++c) {
        CHECK(mod_floor(t.row.entries()[c].constant_term().get_num(), m) ==
              mod_floor(expected[c].constant_term().get_num(), m));
      }
    }
  }

  const Ring circle = oracle::circle();
  const Ring free = Ring::polynomials(names({"x", "y"}));
  for (int k = 0; k < 20; ++k) {
    const auto reduced = rng.factorization(circle, 2, 4, 3);
    const auto lifted = lift_elementary_factorization(reduced, circle, free);
    CHECK(same_ops(reduce_factorization(lifted, circle), reduced));
    const auto row = rng.unimodular(free, 2, 3);
    const auto t = transform_row_with_lift(row, reduced, circle);
    std::vector<Polynomial> row_bar;
    for (const auto& e : row.entries()) row_bar.push_back(oracle::circle_reduce(e));
    const auto expected = oracle::apply_naive(circle, row_bar, reduced.ops);
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(oracle::circle_reduce(t.row.entries()[c]) == expected[c]);
    }
  }
}

TEST_CASE("skew_form") {
  const Ring q = Ring::rationals();
  const RingMatrix v = skew_form(q, consts(q, {1, 0, 0}), consts(q, {1, 0, 0}));
  CHECK(v == RingMatrix::from_rows(q, {consts(q, {0, 1, 0, 0}), consts(q, {-1, 0, 0, 0}),
                                       consts(q, {0, 0, 0, 1}), consts(q, {0, 0, -1, 0})}));
  CHECK(oracle::leibniz_det(v) == q.one());

  const Ring s = Ring::polynomials(names({"a1", "a2", "a3", "b1", "b2", "b3"}));
  const auto a = s.parse_list("a1, a2, a3"), b = s.parse_list("b1, b2, b3");
  const Polynomial dot = s.parse("a1*b1 + a2*b2 + a3*b3");
  CHECK(oracle::leibniz_det(skew_matrix(s, a, b)) == s.mul(dot, dot));
  CHECK(code_of([&] { skew_form(s, a, b); }) == ErrorCode::NotUnimodularWithWitness);

  const Ring sphere = oracle::sphere();
  const auto xyz = sphere.parse_list("x, y, z");
  const RingMatrix w = skew_form(sphere, xyz, xyz);
  CHECK(is_skew_symmetric(w));
  CHECK(determinant(w) == sphere.one());
}

TEST_CASE("conjugate_skew covariance for all six generators") {
  const Ring s = Ring::polynomials(names({"a1", "a2", "a3", "b1", "b2", "b3", "l"}));
  const auto a = s.parse_list("a1, a2, a3"), b = s.parse_list("b1, b2, b3");
  const Polynomial l = s.variable("l");
  const RingMatrix v = skew_matrix(s, a, b);
  CHECK(conjugate_skew(v, {3, {}}) == v);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const RingMatrix got = conjugate_skew(v, {3, {{i, j, l}}});
      const auto a2 = apply_op(s, a, {i, j, l});
      const auto b2 = apply_op(s, b, {j, i, s.neg(l)});
      CHECK(got == skew_matrix(s, a2, b2));
      CHECK(is_skew_symmetric(got));
    }
  }
  const RingMatrix e12 = conjugate_skew(v, {3, {{1, 2, l}}});
  CHECK(e12 == skew_matrix(s, s.parse_list("a1, a1*l + a2, a3"), s.parse_list("b1 - l*b2, b2, b3")));

  oracle::Random rng(40);
  for (int k = 0; k < 5; ++k) {
    const auto tau = rng.factorization(s, 3, 3, 1);
    const auto inv_t = tau.inverse().matrix(s).transpose();
    CHECK(conjugate_skew(v, tau) ==
          skew_matrix(s, row_times(a, tau.matrix(s)), row_times(b, inv_t)));
  }
  CHECK(code_of([&] { conjugate_skew(RingMatrix::identity(s, 4), {3, {}}); }) ==
        ErrorCode::Structural);
  CHECK(code_of([&] { conjugate_skew(v, {2, {}}); }) == ErrorCode::Structural);
}

TEST_CASE("diag(1, tau^t) does not give the covariance identity") {
  const Ring s = Ring::polynomials(names({"a1", "a2", "a3", "b1", "b2", "b3", "l"}));
  const auto a = s.parse_list("a1, a2, a3"), b = s.parse_list("b1, b2, b3");
  const Polynomial l = s.variable("l");
  const RingMatrix v = skew_matrix(s, a, b);
  const RingMatrix tau = elementary_matrix(3, {1, 2, l}, s);
  std::vector<std::vector<Polynomial>> rows(4, std::vector<Polynomial>(4, s.zero()));
  rows[0][0] = s.one();
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) rows[r + 1][c + 1] = tau(c, r);
  }
  const RingMatrix beta = RingMatrix::from_rows(s, rows);
  const RingMatrix got = beta.transpose() * v * beta;
  const auto a2 = apply_op(s, a, {1, 2, l});
  const auto b2 = apply_op(s, b, {2, 1, s.neg(l)});
  CHECK_FALSE(got == skew_matrix(s, a2, b2));
}

TEST_CASE("quaternion_left_matrix") {
  const Ring q = Ring::rationals();
  CHECK(quaternion_left_matrix(q, q.one(), q.zero(), q.zero(), q.zero()) ==
        RingMatrix::identity(q, 4));
  const RingMatrix i = quaternion_left_matrix(q, q.zero(), q.one(), q.zero(), q.zero());
  CHECK(i == RingMatrix::from_rows(q, {consts(q, {0, -1, 0, 0}), consts(q, {1, 0, 0, 0}),
                                       consts(q, {0, 0, 0, -1}), consts(q, {0, 0, 1, 0})}));
  CHECK(is_skew_symmetric(i));
  CHECK(oracle::leibniz_det(i) == q.one());

  const Ring s = Ring::polynomials(names({"x1", "x2", "x3", "x4"}));
  const auto x = [&](const char* n) { return s.variable(n); };
  const RingMatrix pure = quaternion_left_matrix(s, s.zero(), x("x2"), x("x3"), x("x4"));
  CHECK(is_skew_symmetric(pure));
  CHECK(oracle::leibniz_det(pure) == s.parse("(x2^2 + x3^2 + x4^2)^2"));
  const RingMatrix full = quaternion_left_matrix(s, x("x1"), x("x2"), x("x3"), x("x4"));
  CHECK(oracle::leibniz_det(full) == s.parse("(x1^2 + x2^2 + x3^2 + x4^2)^2"));
  // column 0 is the quaternion itself (q1 * 1 = q1)
  CHECK(full.column(0) == s.parse_list("x1, x2, x3, x4"));
}

TEST_CASE("certificate serialization round trip") {
  const Ring z = Ring::integers();
  const auto e = euclid_complete(z, z.constant(3), z.constant(2));
  const std::string text = dump(certificate_to_json(e.certificate));
  const Certificate back = parse_certificate(text);
  REQUIRE(std::holds_alternative<CompletionCertificate>(back));
  CHECK(dump(certificate_to_json(std::get<CompletionCertificate>(back))) == text);

  const Ring sphere = oracle::sphere();
  const auto iso = vaserstein_isotopy(sphere.parse_list("x, y, z"), sphere.parse_list("x, y, z"),
                                      sphere.parse_list("x + y, y - x, z"), sphere);
  const std::string itext = dump(certificate_to_json(iso));
  const Certificate iback = parse_certificate(itext);
  REQUIRE(std::holds_alternative<IsotopyCertificate>(iback));
  CHECK(dump(certificate_to_json(std::get<IsotopyCertificate>(iback))) == itext);

  const auto x = sphere.variable("x"), y = sphere.variable("y"), zz = sphere.variable("z");
  const auto swan = swan_complete(sphere, x, y, zz, x, y, zz);
  const std::string stext = dump(certificate_to_json(swan));
  CHECK(dump(certificate_to_json(std::get<CompletionCertificate>(parse_certificate(stext)))) == stext);
}

TEST_CASE("tampered certificates are rejected") {
  const Ring z = Ring::integers();
  const auto e = euclid_complete(z, z.constant(3), z.constant(2));
  const Json good = certificate_to_json(e.certificate);

  Json bad_matrix = good;
  bad_matrix["matrix"]["entries"][1][1] = "2";
  CHECK(code_of([&] { certificate_from_json(bad_matrix); }) == ErrorCode::InvalidCertificate);

  Json bad_witness = good;
  bad_witness["witness"][0] = "2";
  CHECK(code_of([&] { certificate_from_json(bad_witness); }) == ErrorCode::InvalidCertificate);

  Json bad_ops = good;
  bad_ops["factorization"][0][2] = "5";
  CHECK(code_of([&] { certificate_from_json(bad_ops); }) == ErrorCode::InvalidCertificate);

  Json bad_ring = good;
  bad_ring["ring"]["kind"] = "Rationals";
  CHECK(code_of([&] { certificate_from_json(bad_ring); }) == ErrorCode::InvalidCertificate);

  Json missing = good;
  missing.erase("matrix");
  CHECK(code_of([&] { certificate_from_json(missing); }) == ErrorCode::InvalidCertificate);

  CHECK(code_of([] { parse_certificate("{ not json"); }) == ErrorCode::Syntax);

  const auto iso = vaserstein_isotopy(consts(z, {1, 0, 0}), consts(z, {1, 0, 0}),
                                      consts(z, {1, 1, 0}), z);
  Json bad_path = certificate_to_json(iso);
  bad_path["matrix"]["entries"][0][1] = "t";
  CHECK(code_of([&] { certificate_from_json(bad_path); }) == ErrorCode::InvalidCertificate);
  Json bad_target = certificate_to_json(iso);
  bad_target["target_witness"][1] = "2";
  CHECK(code_of([&] { certificate_from_json(bad_target); }) == ErrorCode::InvalidCertificate);
}

TEST_CASE("certificate constructor rejects wrong data") {
  const Ring z = Ring::integers();
  const auto row = verify_unimodular(consts(z, {3, 2}), consts(z, {1, -1}), z);
  const RingMatrix wrong_det =
      RingMatrix::from_rows(z, {consts(z, {3, 2}), consts(z, {1, 2})});
  CHECK(code_of([&] { CompletionCertificate::make(row, wrong_det, Provenance::Euclid); }) ==
        ErrorCode::InvalidCertificate);
  const RingMatrix wrong_row =
      RingMatrix::from_rows(z, {consts(z, {1, 0}), consts(z, {0, 1})});
  CHECK(code_of([&] { CompletionCertificate::make(row, wrong_row, Provenance::Euclid); }) ==
        ErrorCode::InvalidCertificate);
  const RingMatrix good = RingMatrix::from_rows(z, {consts(z, {3, 2}), consts(z, {1, 1})});
  const auto cert = CompletionCertificate::make(row, good, Provenance::Euclid);
  CHECK(first_row_cofactors(cert.matrix()) == consts(z, {1, -1}));
  CHECK(parse_provenance(to_string(Provenance::PartialUnimodular)) == Provenance::PartialUnimodular);
}
