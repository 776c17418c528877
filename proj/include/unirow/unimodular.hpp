#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unirow/matrix.hpp"

namespace unirow {

// ---------------------------------------------------------------------------
// Rows, witnesses and factorizations
// ---------------------------------------------------------------------------

/// Ordered shears acting on the right of row vectors, applied left to right:
/// a -> a * E(ops[0]) * E(ops[1]) * ...
struct ElementaryFactorization {
  std::size_t n = 0;
  std::vector<ElementaryOp> ops;

  /// Throws Structural when an op has invalid indices for n.
  void validate() const;
  /// The matrix product E(ops[0]) * ... * E(ops[r-1]).
  RingMatrix matrix(const Ring& ring) const;
  ElementaryFactorization inverse() const { return {n, invert_elementary_product(ops)}; }
};

/// Row a with a witness b such that sum a_i b_i = 1 in the ring. The witness
/// identity is checked on construction, so every instance is valid.
class UnimodularRow {
 public:
  /// Throws NotUnimodularError (code NotUnimodularWithWitness, carrying the
  /// residual) when the identity fails; Structural on length problems.
  static UnimodularRow verify(const Ring& ring, std::vector<Polynomial> entries,
                              std::vector<Polynomial> witness);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }
  const std::vector<Polynomial>& witness() const noexcept { return witness_; }

 private:
  UnimodularRow(Ring ring, std::vector<Polynomial> entries, std::vector<Polynomial> witness)
      : ring_(std::move(ring)), entries_(std::move(entries)), witness_(std::move(witness)) {}
  friend UnimodularRow apply_elementary_with_witness(const UnimodularRow&, const ElementaryOp&);

  Ring ring_;
  std::vector<Polynomial> entries_;
  std::vector<Polynomial> witness_;
};

inline UnimodularRow verify_unimodular(std::vector<Polynomial> a, std::vector<Polynomial> b,
                                       const Ring& ring) {
  return UnimodularRow::verify(ring, std::move(a), std::move(b));
}

/// Normal form of sum a_i b_i - 1.
Polynomial witness_residual(const Ring& ring, std::span<const Polynomial> a,
                            std::span<const Polynomial> b);

/// a' = a * E_ij(lambda) and b' = b * E_ji(-lambda), so a'.b' = a.b = 1.
UnimodularRow apply_elementary_with_witness(const UnimodularRow& row, const ElementaryOp& op);
UnimodularRow apply_factorization_with_witness(const UnimodularRow& row,
                                               const ElementaryFactorization& f);

/// a * E(op) for a bare row (a'_j = a_j + lambda a_i).
std::vector<Polynomial> apply_op(const Ring& ring, std::span<const Polynomial> row,
                                 const ElementaryOp& op);
std::vector<Polynomial> apply_factorization(const Ring& ring, std::span<const Polynomial> row,
                                            const ElementaryFactorization& f);

/// True when `row` equals (1, 0, ..., 0) in normal form.
bool is_first_unit_vector(const Ring& ring, std::span<const Polynomial> row);

// ---------------------------------------------------------------------------
// Completion certificates
// ---------------------------------------------------------------------------

enum class Provenance { Euclid, UnitReduce, PartialUnimodular, Swan, Lifted };

const char* to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

/// Square matrix whose first row is the given unimodular row and whose
/// determinant is exactly 1. Verified eagerly on construction; `recheck`
/// re-runs every invariant from the stored data.
class CompletionCertificate {
 public:
  /// Throws InvalidCertificate when an invariant fails. When `reduction` is
  /// non-empty it must take the row to (1, 0, ..., 0).
  static CompletionCertificate make(UnimodularRow row, RingMatrix matrix, Provenance provenance,
                                    ElementaryFactorization reduction = {});

  const UnimodularRow& row() const noexcept { return row_; }
  const RingMatrix& matrix() const noexcept { return matrix_; }
  Provenance provenance() const noexcept { return provenance_; }
  /// Factorization taking the row to e_1 (empty when none is recorded).
  const ElementaryFactorization& reduction() const noexcept { return reduction_; }

  void recheck() const;

 private:
  CompletionCertificate(UnimodularRow row, RingMatrix matrix, Provenance provenance,
                        ElementaryFactorization reduction)
      : row_(std::move(row)),
        matrix_(std::move(matrix)),
        provenance_(provenance),
        reduction_(std::move(reduction)) {}

  UnimodularRow row_;
  RingMatrix matrix_;
  Provenance provenance_;
  ElementaryFactorization reduction_;
};

/// Independent invariant check: first row, det = 1, witness identity, and
/// (if present) that the reduction takes the row to e_1 and the matrix is
/// its inverse product. Throws InvalidCertificate.
void verify_completion(const CompletionCertificate& cert);

/// Completion from a factorization reducing `row` to e_1: the matrix is the
/// inverse product, whose first row is e_1 * sigma^-1 = row.
CompletionCertificate complete_from_reduction(const UnimodularRow& row,
                                              const ElementaryFactorization& reduction,
                                              Provenance provenance);

/// First-row cofactors of a square matrix; for a det-1 completion this is a
/// witness for its first row.
std::vector<Polynomial> first_row_cofactors(const RingMatrix& m);

// ---------------------------------------------------------------------------
// Elementary reductions
// ---------------------------------------------------------------------------

struct EuclidCompletion {
  ElementaryFactorization factorization;
  CompletionCertificate certificate;
};

/// Euclidean reduction of a pair over Z (|.| norm, remainders in [0, |d|))
/// or over Q / Q[X] (degree norm). Applying the factorization to (a1, a2)
/// gives (1, 0). Throws NotUnimodular (reporting the gcd) when the gcd is
/// not a unit, Structural for rings that are not Euclidean here.
EuclidCompletion euclid_complete(const Ring& ring, const Polynomial& a1, const Polynomial& a2);

/// Reduction of a row whose first entry is a unit with the given inverse:
/// clear entries 2..n with multiples of a1, shear entry 2 to 1 using the
/// inverse, shear entry 1 to 1, clear entry 2. Throws NotAnInverse.
ElementaryFactorization unit_first_reduce(const UnimodularRow& row, const Polynomial& inverse);

/// Reduction when the prefix (a_1..a_i), i < n, is unimodular with witness
/// d: make a_n = 1 using (1 - a_n) d_k a_k, clear everything else against
/// a_n, then move the 1 to the front. Throws NotAnInverse when the prefix
/// identity fails.
ElementaryFactorization partial_unimodular_reduce(const UnimodularRow& row, std::size_t prefix,
                                                  std::span<const Polynomial> prefix_witness);

/// sigma(t): every lambda replaced by lambda * t in `ring` extended with the
/// parameter.
struct FactorizationPath {
  Ring ring;             // base ring extended with the parameter
  std::size_t parameter;  // index of the parameter variable
  ElementaryFactorization factorization;

  /// sigma(value) as a factorization over the extended ring.
  ElementaryFactorization at(const Rational& value) const;
};

FactorizationPath factorization_path(const ElementaryFactorization& f, const Ring& ring,
                                     const std::string& parameter = "t");

/// Substitutes `value` for the last variable of `extended` and restricts
/// back to `base`.
Polynomial specialize(const Polynomial& f, const Ring& extended, const Ring& base,
                      const Rational& value);
RingMatrix specialize(const RingMatrix& m, const Ring& base, const Rational& value);

// ---------------------------------------------------------------------------
// Vaserstein isotopy
// ---------------------------------------------------------------------------

/// beta(t) = I + (c - b)^t a t over the base ring extended with t; carries
/// the witness b to c at t = 1 and has determinant 1 identically.
class IsotopyCertificate {
 public:
  const Ring& base() const noexcept { return base_; }
  const Ring& extended() const noexcept { return extended_; }
  const std::string& parameter() const noexcept { return parameter_; }
  const std::vector<Polynomial>& row() const noexcept { return a_; }
  const std::vector<Polynomial>& from_witness() const noexcept { return b_; }
  const std::vector<Polynomial>& to_witness() const noexcept { return c_; }
  const RingMatrix& path() const noexcept { return path_; }
  /// n < 3: the construction is still valid, but the isotopy statement is
  /// usually made for n >= 3.
  bool below_stable_range() const noexcept { return a_.size() < 3; }

  /// Re-checks beta(0) = I, beta(1) b^t = c^t, det beta(t) = 1 and the
  /// closed form of beta. Throws InvalidCertificate.
  void recheck() const;

  static IsotopyCertificate make(const Ring& base, std::vector<Polynomial> a,
                                 std::vector<Polynomial> b, std::vector<Polynomial> c,
                                 RingMatrix path, std::string parameter = "t");

 private:
  IsotopyCertificate(Ring base, Ring extended, std::string parameter, std::vector<Polynomial> a,
                     std::vector<Polynomial> b, std::vector<Polynomial> c, RingMatrix path)
      : base_(std::move(base)),
        extended_(std::move(extended)),
        parameter_(std::move(parameter)),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        path_(std::move(path)) {}

  Ring base_;
  Ring extended_;
  std::string parameter_;
  std::vector<Polynomial> a_, b_, c_;
  RingMatrix path_;
};

/// Builds and verifies the isotopy; requires a.b = a.c = 1 (both checked).
IsotopyCertificate vaserstein_isotopy(std::vector<Polynomial> a, std::vector<Polynomial> b,
                                      std::vector<Polynomial> c, const Ring& ring,
                                      const std::string& parameter = "t");

// ---------------------------------------------------------------------------
// Completion of (a^2, b, c)
// ---------------------------------------------------------------------------

/// Every matrix of the substitution chain for the (a^2, b, c) completion.
struct SwanChain {
  RingMatrix alpha;        // 4x4 skew matrix, det = (aa' + bb' + cc')^2
  RingMatrix alpha1;       // lower shear block
  RingMatrix alpha2;       // upper shear block
  RingMatrix alpha_prime;  // alpha1 * alpha2 * alpha reduced with s = 1; first column e_1
  RingMatrix beta;         // alpha_prime with b' -> b' + ac, c' -> c' - ab
  RingMatrix sigma;        // beta with b -> -b', c -> c', b' -> -b, c' -> c
  RingMatrix completion;   // lower block of sigma, rearranged to start with (a^2, b, c)
};

/// Builds the chain without checking the witness identity (usable over a
/// free ring where aa' + bb' + cc' is not 1).
SwanChain swan_chain(const Ring& ring, const Polynomial& a, const Polynomial& b,
                     const Polynomial& c, const Polynomial& a_w, const Polynomial& b_w,
                     const Polynomial& c_w);

/// Completion certificate for (a^2, b, c); requires aa' + bb' + cc' = 1.
CompletionCertificate swan_complete(const Ring& ring, const Polynomial& a, const Polynomial& b,
                                    const Polynomial& c, const Polynomial& a_w,
                                    const Polynomial& b_w, const Polynomial& c_w);

// ---------------------------------------------------------------------------
// Lifting elementary factorizations from A/J to A
// ---------------------------------------------------------------------------

/// Z/(m) for the integer lifting case; elements are plain integers.
struct IntegerModulus {
  BigInt m;
};

/// Lifts each lambda to its canonical representative in the base ring.
/// `quotient` must be a principal quotient of the polynomial ring `base`
/// (same variables); otherwise ContextMismatch.
ElementaryFactorization lift_elementary_factorization(const ElementaryFactorization& reduced,
                                                      const Ring& quotient, const Ring& base);
/// Z/(m) case: lambdas become least non-negative residues in Z.
ElementaryFactorization lift_elementary_factorization(const ElementaryFactorization& reduced,
                                                      const IntegerModulus& modulus);

/// Reduction modulo J, op by op (canonical representatives).
ElementaryFactorization reduce_factorization(const ElementaryFactorization& f,
                                             const Ring& quotient);
ElementaryFactorization reduce_factorization(const ElementaryFactorization& f,
                                             const IntegerModulus& modulus);

struct LiftedRow {
  UnimodularRow row;
  ElementaryFactorization lift;
};

/// Lifts `reduced` and applies it (with witness transport) to a row over A.
/// The result reduces modulo J to the reduced row acted on by `reduced`;
/// this is verified before returning.
LiftedRow transform_row_with_lift(const UnimodularRow& row, const ElementaryFactorization& reduced,
                                  const Ring& quotient);
LiftedRow transform_row_with_lift(const UnimodularRow& row, const ElementaryFactorization& reduced,
                                  const IntegerModulus& modulus);

// ---------------------------------------------------------------------------
// Skew-symmetric forms
// ---------------------------------------------------------------------------

/// The 4x4 skew matrix
///   [  0   a1   a2   a3 ]
///   [ -a1   0   b3  -b2 ]
///   [ -a2 -b3    0   b1 ]
///   [ -a3  b2  -b1    0 ]
/// without checking a.b = 1. Its determinant is (a.b)^2.
RingMatrix skew_matrix(const Ring& ring, std::span<const Polynomial> a,
                       std::span<const Polynomial> b);

/// Same matrix, requiring a.b = 1 (determinant exactly 1).
RingMatrix skew_form(const Ring& ring, std::span<const Polynomial> a,
                     std::span<const Polynomial> b);

/// beta^t V beta with beta = diag(1, tau), tau the 3x3 product of the
/// factorization. For V = V(a, b) the result is V(a tau, b (tau^-1)^t).
RingMatrix conjugate_skew(const RingMatrix& v, const ElementaryFactorization& tau);

/// Matrix of q -> q1 q on the quaternions in the basis 1, i, j, k, for
/// q1 = x1 + x2 i + x3 j + x4 k.
RingMatrix quaternion_left_matrix(const Ring& ring, const Polynomial& x1, const Polynomial& x2,
                                  const Polynomial& x3, const Polynomial& x4);

}  // namespace unirow
