#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

namespace {

struct Six {
  Polynomial a, b, c, aw, bw, cw;
};

// The 4x4 matrix alpha1 alpha2 alpha written out entrywise, valid once
// aa' + bb' + cc' = 1. As a formula in six free symbols it has determinant
// (aa' + bb' + cc')^2.
RingMatrix alpha_prime_formula(const Ring& r, const Six& s) {
  const auto& [a, b, c, aw, bw, cw] = s;
  const Polynomial zero = r.zero();
  const Polynomial ab = r.mul(a, b);
  const Polynomial ac = r.mul(a, c);
  const Polynomial bc = r.mul(b, c);
  return RingMatrix::from_rows(
      r, {{r.one(), a, b, c},
          {zero, r.mul(a, a), r.add(ab, cw), r.sub(ac, bw)},
          {zero, r.sub(ab, cw), r.mul(b, b), r.add(bc, aw)},
          {zero, r.add(ac, bw), r.sub(bc, aw), r.mul(c, c)}});
}

// b' -> b' + ac, c' -> c' - ab
Six beta_substitution(const Ring& r, const Six& s) {
  return {s.a, s.b, s.c, s.aw, r.add(s.bw, r.mul(s.a, s.c)), r.sub(s.cw, r.mul(s.a, s.b))};
}

// b -> -b', c -> c', b' -> -b, c' -> c
Six sigma_substitution(const Ring& r, const Six& s) {
  return {s.a, r.neg(s.bw), s.cw, s.aw, r.neg(s.b), s.c};
}

}  // namespace

SwanChain swan_chain(const Ring& ring, const Polynomial& a_in, const Polynomial& b_in,
                     const Polynomial& c_in, const Polynomial& a_w, const Polynomial& b_w,
                     const Polynomial& c_w) {
  const Six s{ring.normal_form(a_in), ring.normal_form(b_in), ring.normal_form(c_in),
              ring.normal_form(a_w),  ring.normal_form(b_w),  ring.normal_form(c_w)};
  const Polynomial zero = ring.zero();
  const Polynomial one = ring.one();

  const std::vector<Polynomial> row{s.a, s.b, s.c};
  const std::vector<Polynomial> wit{s.aw, s.bw, s.cw};
  RingMatrix alpha = skew_matrix(ring, row, wit);
  RingMatrix alpha1 = RingMatrix::from_rows(
      ring, {{one, zero, zero, zero}, {s.a, one, zero, zero}, {s.b, zero, one, zero},
             {s.c, zero, zero, one}});
  RingMatrix alpha2 = RingMatrix::from_rows(
      ring, {{one, ring.neg(s.aw), ring.neg(s.bw), ring.neg(s.cw)}, {zero, one, zero, zero},
             {zero, zero, one, zero}, {zero, zero, zero, one}});

  RingMatrix alpha_prime = alpha_prime_formula(ring, s);
  RingMatrix beta = alpha_prime_formula(ring, beta_substitution(ring, s));
  RingMatrix sigma =
      alpha_prime_formula(ring, beta_substitution(ring, sigma_substitution(ring, s)));

  // The lower block of sigma starts with (a^2, c, b). Swapping its last two
  // columns and then its last two rows keeps the determinant and puts
  // (a^2, b, c) on top.
  const RingMatrix lower = sigma.trailing_block(1);
  RingMatrix completion = RingMatrix::from_rows(
      ring, {{lower(0, 0), lower(0, 2), lower(0, 1)},
             {lower(2, 0), lower(2, 2), lower(2, 1)},
             {lower(1, 0), lower(1, 2), lower(1, 1)}});

  return {std::move(alpha),  std::move(alpha1), std::move(alpha2),    std::move(alpha_prime),
          std::move(beta),   std::move(sigma),  std::move(completion)};
}

CompletionCertificate swan_complete(const Ring& ring, const Polynomial& a, const Polynomial& b,
                                    const Polynomial& c, const Polynomial& a_w,
                                    const Polynomial& b_w, const Polynomial& c_w) {
  // throws NotUnimodularWithWitness when aa' + bb' + cc' != 1
  const UnimodularRow abc = UnimodularRow::verify(ring, {a, b, c}, {a_w, b_w, c_w});
  const SwanChain chain = swan_chain(ring, a, b, c, a_w, b_w, c_w);
  if (!(chain.alpha1 * chain.alpha2 * chain.alpha == chain.alpha_prime)) {
    fail(ErrorCode::Structural, "alpha1 alpha2 alpha disagrees with its closed form");
  }
  const std::vector<Polynomial> first = chain.completion.row(0);
  UnimodularRow row = UnimodularRow::verify(ring, first, first_row_cofactors(chain.completion));
  return CompletionCertificate::make(std::move(row), chain.completion, Provenance::Swan);
}

}  // namespace unirow
