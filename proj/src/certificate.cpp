#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Euclid: return "Euclid";
    case Provenance::UnitReduce: return "UnitReduce";
    case Provenance::PartialUnimodular: return "PartialUnimodular";
    case Provenance::Swan: return "Swan";
    case Provenance::Lifted: return "Lifted";
  }
  return "Unknown";
}

Provenance parse_provenance(std::string_view text) {
  for (auto p : {Provenance::Euclid, Provenance::UnitReduce, Provenance::PartialUnimodular,
                 Provenance::Swan, Provenance::Lifted}) {
    if (text == to_string(p)) {
      return p;
    }
  }
  fail(ErrorCode::InvalidCertificate, "unknown provenance '" + std::string(text) + "'");
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  fail(ErrorCode::InvalidCertificate, "completion certificate rejected: " + what);
}

}  // namespace

void verify_completion(const CompletionCertificate& cert) {
  const UnimodularRow& row = cert.row();
  const Ring& ring = row.ring();
  const RingMatrix& m = cert.matrix();
  const std::size_t n = row.size();
  if (!(m.ring() == ring)) {
    invalid("matrix ring " + m.ring().to_string() + " differs from row ring " + ring.to_string());
  }
  if (m.rows() != n || m.cols() != n) {
    invalid("matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!ring.equal(m(0, k), row.entries()[k])) {
      invalid("first row entry " + std::to_string(k + 1) + " is " + ring.print(m(0, k)) +
              ", expected " + ring.print(row.entries()[k]));
    }
  }
  const Polynomial det = determinant(m);
  if (!ring.is_one(det)) {
    invalid("determinant is " + ring.print(det) + ", not 1");
  }
  if (!witness_residual(ring, row.entries(), row.witness()).is_zero()) {
    invalid("witness identity fails");
  }
  const ElementaryFactorization& f = cert.reduction();
  if (f.n != 0) {
    if (f.n != n) {
      invalid("reduction has size " + std::to_string(f.n));
    }
    f.validate();
    if (!is_first_unit_vector(ring, apply_factorization(ring, row.entries(), f))) {
      invalid("reduction does not take the row to (1, 0, ..., 0)");
    }
    if (!(f.inverse().matrix(ring) == m)) {
      invalid("matrix is not the inverse of the reduction product");
    }
  }
}

CompletionCertificate CompletionCertificate::make(UnimodularRow row, RingMatrix matrix,
                                                  Provenance provenance,
                                                  ElementaryFactorization reduction) {
  CompletionCertificate cert(std::move(row), std::move(matrix), provenance, std::move(reduction));
  verify_completion(cert);
  return cert;
}

void CompletionCertificate::recheck() const { verify_completion(*this); }

CompletionCertificate complete_from_reduction(const UnimodularRow& row,
                                              const ElementaryFactorization& reduction,
                                              Provenance provenance) {
  return CompletionCertificate::make(row, reduction.inverse().matrix(row.ring()), provenance,
                                     reduction);
}

std::vector<Polynomial> first_row_cofactors(const RingMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    fail(ErrorCode::Structural, "cofactors need a non-empty square matrix");
  }
  const std::size_t n = m.rows();
  const Ring& ring = m.ring();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Polynomial> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != k) {
          minor.push_back(m(r, c));
        }
      }
    }
    Polynomial d = determinant(RingMatrix(ring, n - 1, n - 1, std::move(minor)));
    out.push_back(k % 2 == 0 ? d : ring.neg(d));
  }
  return out;
}

}  // namespace unirow
