#include "unirow/matrix.hpp"

#include <bit>
#include <unordered_map>

#include "unirow/errors.hpp"

namespace unirow {

void validate_op(const ElementaryOp& op, std::size_t n) {
  if (op.i == op.j) {
    fail(ErrorCode::Structural, "elementary op needs i != j (got i = j = " +
                                    std::to_string(op.i) + ")");
  }
  if (op.i < 1 || op.j < 1 || op.i > n || op.j > n) {
    fail(ErrorCode::Structural, "elementary op index (" + std::to_string(op.i) + ", " +
                                    std::to_string(op.j) + ") out of range for size " +
                                    std::to_string(n));
  }
}

RingMatrix::RingMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

RingMatrix::RingMatrix(Ring ring, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorCode::Structural, "matrix entry count does not match its shape");
  }
  for (auto& e : entries_) {
    e = ring_.normal_form(e);
  }
}

RingMatrix RingMatrix::identity(const Ring& ring, std::size_t n) {
  RingMatrix m(ring, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    m.entries_[k * n + k] = ring.one();
  }
  return m;
}

RingMatrix RingMatrix::from_rows(const Ring& ring,
                                 const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<Polynomial> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      fail(ErrorCode::Structural, "ragged matrix rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RingMatrix(ring, r, c, std::move(entries));
}

std::vector<Polynomial> RingMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Polynomial> RingMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.push_back((*this)(r, c));
  }
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix out(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out.entries_[c * rows_ + r] = (*this)(r, c);
    }
  }
  return out;
}

RingMatrix RingMatrix::negated() const {
  return map(ring_, [this](const Polynomial& e) { return ring_.neg(e); });
}

RingMatrix RingMatrix::trailing_block(std::size_t k) const {
  if (!is_square() || k > rows_) {
    fail(ErrorCode::Structural, "trailing block of a non-square matrix");
  }
  const std::size_t n = rows_ - k;
  std::vector<Polynomial> entries;
  entries.reserve(n * n);
  for (std::size_t r = k; r < rows_; ++r) {
    for (std::size_t c = k; c < cols_; ++c) {
      entries.push_back((*this)(r, c));
    }
  }
  return RingMatrix(ring_, n, n, std::move(entries));
}

bool operator==(const RingMatrix& lhs, const RingMatrix& rhs) {
  return lhs.ring_ == rhs.ring_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         lhs.entries_ == rhs.entries_;
}

namespace {

void require_same_ring(const RingMatrix& a, const RingMatrix& b, const char* what) {
  if (!(a.ring() == b.ring())) {
    fail(ErrorCode::Structural, std::string("ring mismatch in ") + what + ": " +
                                    a.ring().to_string() + " vs " + b.ring().to_string());
  }
}

}  // namespace

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b, "matrix product");
  if (a.cols() != b.rows()) {
    fail(ErrorCode::Structural, "matrix product shape mismatch: " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()) + " times " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Ring& ring = a.ring();
  std::vector<Polynomial> entries;
  entries.reserve(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Polynomial sum = ring.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) {
          continue;
        }
        sum += a(r, k) * b(k, c);
      }
      entries.push_back(std::move(sum));
    }
  }
  return RingMatrix(ring, a.rows(), b.cols(), std::move(entries));
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b, "matrix sum");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::Structural, "matrix sum shape mismatch");
  }
  std::vector<Polynomial> entries;
  entries.reserve(a.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    entries.push_back(a.entries()[k] + b.entries()[k]);
  }
  return RingMatrix(a.ring(), a.rows(), a.cols(), std::move(entries));
}

RingMatrix elementary_matrix(std::size_t n, const ElementaryOp& op, const Ring& ring) {
  validate_op(op, n);
  std::vector<Polynomial> entries(n * n, ring.zero());
  for (std::size_t k = 0; k < n; ++k) {
    entries[k * n + k] = ring.one();
  }
  entries[(op.i - 1) * n + (op.j - 1)] = op.lambda;
  return RingMatrix(ring, n, n, std::move(entries));
}

RingMatrix elementary_product(std::size_t n, std::span<const ElementaryOp> ops,
                              const Ring& ring) {
  RingMatrix out = RingMatrix::identity(ring, n);
  for (const auto& op : ops) {
    out = mat_mul(out, elementary_matrix(n, op, ring));
  }
  return out;
}

Polynomial determinant(const RingMatrix& m) {
  if (!m.is_square()) {
    fail(ErrorCode::Structural, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n > 20) {
    fail(ErrorCode::Structural, "cofactor determinant limited to n <= 20");
  }
  const Ring& ring = m.ring();
  if (n == 0) {
    return ring.one();
  }
  // Laplace expansion along successive rows. The minor left after expanding
  // the first k rows is determined by the set of columns still in use, so
  // minors are memoized by that column mask.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    if (row == n) {
      return ring.one();
    }
    if (auto it = memo.find(mask); it != memo.end()) {
      return it->second;
    }
    Polynomial sum = ring.zero();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) {
        continue;
      }
      const Polynomial& entry = m(row, c);
      if (!entry.is_zero()) {
        const Polynomial sub = self(self, mask & ~(1U << c));
        if (!sub.is_zero()) {
          const Polynomial product = ring.mul(entry, sub);
          if (sign > 0) {
            sum += product;
          } else {
            sum -= product;
          }
        }
      }
      sign = -sign;
    }
    sum = ring.normal_form(sum);
    memo.emplace(mask, sum);
    return sum;
  };
  return minor(minor, (1U << n) - 1U);
}

std::vector<Polynomial> row_times(std::span<const Polynomial> row, const RingMatrix& m) {
  if (row.size() != m.rows()) {
    fail(ErrorCode::Structural, "row length does not match matrix rows");
  }
  const Ring& ring = m.ring();
  std::vector<Polynomial> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Polynomial sum = ring.zero();
    for (std::size_t k = 0; k < row.size(); ++k) {
      sum += row[k] * m(k, c);
    }
    out.push_back(ring.normal_form(sum));
  }
  return out;
}

std::vector<Polynomial> times_column(const RingMatrix& m, std::span<const Polynomial> column) {
  if (column.size() != m.cols()) {
    fail(ErrorCode::Structural, "column length does not match matrix columns");
  }
  const Ring& ring = m.ring();
  std::vector<Polynomial> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial sum = ring.zero();
    for (std::size_t k = 0; k < column.size(); ++k) {
      sum += m(r, k) * column[k];
    }
    out.push_back(ring.normal_form(sum));
  }
  return out;
}

RingMatrix outer_product(const Ring& ring, std::span<const Polynomial> x,
                         std::span<const Polynomial> y) {
  std::vector<Polynomial> entries;
  entries.reserve(x.size() * y.size());
  for (const auto& xi : x) {
    for (const auto& yj : y) {
      entries.push_back(xi * yj);
    }
  }
  return RingMatrix(ring, x.size(), y.size(), std::move(entries));
}

RankOneIdentity rank_one_det_identity(const Ring& ring, std::span<const Polynomial> x,
                                      std::span<const Polynomial> y) {
  if (x.size() != y.size()) {
    fail(ErrorCode::Structural, "rank-one identity needs vectors of equal length");
  }
  if (x.empty()) {
    fail(ErrorCode::Structural, "rank-one identity needs n >= 1");
  }
  const RingMatrix update = mat_add(RingMatrix::identity(ring, x.size()), outer_product(ring, x, y));
  Polynomial dot = ring.one();
  for (std::size_t k = 0; k < x.size(); ++k) {
    dot += x[k] * y[k];
  }
  return {determinant(update), ring.normal_form(dot)};
}

std::vector<ElementaryOp> invert_elementary_product(std::span<const ElementaryOp> ops) {
  std::vector<ElementaryOp> out;
  out.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.push_back({it->i, it->j, -it->lambda});
  }
  return out;
}

bool is_skew_symmetric(const RingMatrix& m) {
  if (!m.is_square()) {
    return false;
  }
  const Ring& ring = m.ring();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m(r, r).is_zero()) {
      return false;
    }
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      if (!ring.is_zero(m(r, c) + m(c, r))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace unirow
