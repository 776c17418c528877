#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unirow/ring.hpp"

namespace unirow {

/// Shear e_ij(lambda): identity plus lambda at (i, j). Indices are 1-based,
/// matching the usual e_ij notation; i != j.
struct ElementaryOp {
  std::size_t i = 1;
  std::size_t j = 2;
  Polynomial lambda;
};

/// Throws Structural unless 1 <= i, j <= n and i != j.
void validate_op(const ElementaryOp& op, std::size_t n);

/// Dense matrix over a ring, row-major, every entry kept in normal form.
/// Element access is 0-based.
class RingMatrix {
 public:
  RingMatrix(Ring ring, std::size_t rows, std::size_t cols);
  RingMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  static RingMatrix identity(const Ring& ring, std::size_t n);
  static RingMatrix from_rows(const Ring& ring, const std::vector<std::vector<Polynomial>>& rows);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  std::vector<Polynomial> row(std::size_t r) const;
  std::vector<Polynomial> column(std::size_t c) const;

  RingMatrix transpose() const;
  RingMatrix negated() const;
  /// Square submatrix dropping the first `k` rows and columns.
  RingMatrix trailing_block(std::size_t k) const;
  /// Applies `fn` to every entry and re-normalizes in `target`.
  template <class Fn>
  RingMatrix map(const Ring& target, Fn&& fn) const {
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
      out.push_back(fn(e));
    }
    return RingMatrix(target, rows_, cols_, std::move(out));
  }

  friend bool operator==(const RingMatrix& lhs, const RingMatrix& rhs);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
inline RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) { return mat_mul(a, b); }

RingMatrix elementary_matrix(std::size_t n, const ElementaryOp& op, const Ring& ring);

/// Product E(op_1) * E(op_2) * ... * E(op_r) of n x n shears.
RingMatrix elementary_product(std::size_t n, std::span<const ElementaryOp> ops, const Ring& ring);

/// Exact determinant by cofactor expansion (no division, so it is valid in
/// quotient rings with zero divisors). Throws Structural for non-square input.
Polynomial determinant(const RingMatrix& m);

/// Row vector times matrix.
std::vector<Polynomial> row_times(std::span<const Polynomial> row, const RingMatrix& m);
/// Matrix times column vector.
std::vector<Polynomial> times_column(const RingMatrix& m, std::span<const Polynomial> column);

/// Outer product x^t y (column x times row y).
RingMatrix outer_product(const Ring& ring, std::span<const Polynomial> x,
                         std::span<const Polynomial> y);

struct RankOneIdentity {
  Polynomial lhs;  // det(I_n + x^t y)
  Polynomial rhs;  // 1 + x y^t
};

/// Both sides of det(I_n + x^t y) = 1 + x y^t; callers compare them.
RankOneIdentity rank_one_det_identity(const Ring& ring, std::span<const Polynomial> x,
                                      std::span<const Polynomial> y);

/// Inverse of a product of shears: reversed order, each lambda negated.
std::vector<ElementaryOp> invert_elementary_product(std::span<const ElementaryOp> ops);

/// M^t == -M with a zero diagonal.
bool is_skew_symmetric(const RingMatrix& m);

}  // namespace unirow
