#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

RingMatrix skew_matrix(const Ring& ring, std::span<const Polynomial> a,
                       std::span<const Polynomial> b) {
  if (a.size() != 3 || b.size() != 3) {
    fail(ErrorCode::Structural, "skew form needs two 3-vectors");
  }
  const Polynomial zero = ring.zero();
  auto n = [&](const Polynomial& p) { return ring.neg(p); };
  return RingMatrix::from_rows(ring, {{zero, a[0], a[1], a[2]},
                                      {n(a[0]), zero, b[2], n(b[1])},
                                      {n(a[1]), n(b[2]), zero, b[0]},
                                      {n(a[2]), b[1], n(b[0]), zero}});
}

RingMatrix skew_form(const Ring& ring, std::span<const Polynomial> a,
                     std::span<const Polynomial> b) {
  if (a.size() != 3 || b.size() != 3) {
    fail(ErrorCode::Structural, "skew form needs two 3-vectors");
  }
  const Polynomial residual = witness_residual(ring, a, b);
  if (!residual.is_zero()) {
    throw NotUnimodularError(ErrorCode::NotUnimodularWithWitness,
                             "skew form needs a.b = 1: residual " + ring.print(residual),
                             ring.print(residual));
  }
  return skew_matrix(ring, a, b);
}

RingMatrix conjugate_skew(const RingMatrix& v, const ElementaryFactorization& tau) {
  if (v.rows() != 4 || v.cols() != 4) {
    fail(ErrorCode::Structural, "conjugation needs a 4x4 matrix");
  }
  if (tau.n != 3) {
    fail(ErrorCode::Structural, "conjugation needs a factorization of size 3");
  }
  if (!is_skew_symmetric(v)) {
    fail(ErrorCode::Structural, "conjugation needs a skew-symmetric matrix");
  }
  const Ring& ring = v.ring();
  const RingMatrix t = tau.matrix(ring);
  // beta = diag(1, tau): the first row of beta^t V beta is then (0, a tau)
  RingMatrix beta = RingMatrix::identity(ring, 4);
  std::vector<Polynomial> entries = beta.entries();
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      entries[(r + 1) * 4 + (c + 1)] = t(r, c);
    }
  }
  beta = RingMatrix(ring, 4, 4, std::move(entries));
  return beta.transpose() * v * beta;
}

RingMatrix quaternion_left_matrix(const Ring& ring, const Polynomial& x1, const Polynomial& x2,
                                  const Polynomial& x3, const Polynomial& x4) {
  auto n = [&](const Polynomial& p) { return ring.neg(p); };
  return RingMatrix::from_rows(ring, {{x1, n(x2), n(x3), n(x4)},
                                      {x2, x1, n(x4), x3},
                                      {x3, x4, x1, n(x2)},
                                      {x4, n(x3), x2, x1}});
}

}  // namespace unirow
