#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

void ElementaryFactorization::validate() const {
  for (const auto& op : ops) {
    validate_op(op, n);
  }
}

RingMatrix ElementaryFactorization::matrix(const Ring& ring) const {
  validate();
  return elementary_product(n, ops, ring);
}

Polynomial witness_residual(const Ring& ring, std::span<const Polynomial> a,
                            std::span<const Polynomial> b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::Structural, "row and witness lengths differ (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
  }
  Polynomial sum = -ring.one();
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum += a[k] * b[k];
  }
  return ring.normal_form(sum);
}

UnimodularRow UnimodularRow::verify(const Ring& ring, std::vector<Polynomial> entries,
                                    std::vector<Polynomial> witness) {
  if (entries.size() < 2) {
    fail(ErrorCode::Structural, "unimodular rows need length >= 2");
  }
  if (entries.size() != witness.size()) {
    fail(ErrorCode::Structural, "row and witness lengths differ");
  }
  for (auto& e : entries) {
    e = ring.normal_form(e);
  }
  for (auto& e : witness) {
    e = ring.normal_form(e);
  }
  const Polynomial residual = witness_residual(ring, entries, witness);
  if (!residual.is_zero()) {
    throw NotUnimodularError(ErrorCode::NotUnimodularWithWitness,
                             "witness identity fails: sum a_i b_i - 1 = " + ring.print(residual),
                             ring.print(residual));
  }
  return UnimodularRow(ring, std::move(entries), std::move(witness));
}

std::vector<Polynomial> apply_op(const Ring& ring, std::span<const Polynomial> row,
                                 const ElementaryOp& op) {
  validate_op(op, row.size());
  std::vector<Polynomial> out(row.begin(), row.end());
  out[op.j - 1] = ring.normal_form(out[op.j - 1] + op.lambda * row[op.i - 1]);
  return out;
}

std::vector<Polynomial> apply_factorization(const Ring& ring, std::span<const Polynomial> row,
                                            const ElementaryFactorization& f) {
  if (f.n != row.size()) {
    fail(ErrorCode::Structural, "factorization size " + std::to_string(f.n) +
                                    " does not match row length " + std::to_string(row.size()));
  }
  std::vector<Polynomial> out(row.begin(), row.end());
  for (const auto& op : f.ops) {
    out = apply_op(ring, out, op);
  }
  return out;
}

UnimodularRow apply_elementary_with_witness(const UnimodularRow& row, const ElementaryOp& op) {
  const Ring& ring = row.ring();
  validate_op(op, row.size());
  auto a = apply_op(ring, row.entries(), op);
  // witness moves by the inverse transpose: b * E_ji(-lambda)
  auto b = apply_op(ring, row.witness(), ElementaryOp{op.j, op.i, -op.lambda});
  return UnimodularRow(ring, std::move(a), std::move(b));
}

UnimodularRow apply_factorization_with_witness(const UnimodularRow& row,
                                               const ElementaryFactorization& f) {
  if (f.n != row.size()) {
    fail(ErrorCode::Structural, "factorization size does not match row length");
  }
  UnimodularRow out = row;
  for (const auto& op : f.ops) {
    out = apply_elementary_with_witness(out, op);
  }
  return out;
}

bool is_first_unit_vector(const Ring& ring, std::span<const Polynomial> row) {
  if (row.empty() || !ring.is_one(row[0])) {
    return false;
  }
  for (std::size_t k = 1; k < row.size(); ++k) {
    if (!ring.is_zero(row[k])) {
      return false;
    }
  }
  return true;
}

}  // namespace unirow
