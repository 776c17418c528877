#include "unirow/errors.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  fail(ErrorCode::InvalidCertificate, "isotopy certificate rejected: " + what);
}

// I + (c - b)^t a t over the extended ring.
RingMatrix closed_form(const Ring& extended, std::size_t parameter,
                       std::span<const Polynomial> a, std::span<const Polynomial> b,
                       std::span<const Polynomial> c) {
  const Polynomial t = extended.variable(parameter);
  std::vector<Polynomial> diff;
  std::vector<Polynomial> at;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff.push_back(extended.sub(extended.embed(c[k]), extended.embed(b[k])));
    at.push_back(extended.mul(extended.embed(a[k]), t));
  }
  return mat_add(RingMatrix::identity(extended, a.size()), outer_product(extended, diff, at));
}

}  // namespace

void IsotopyCertificate::recheck() const {
  const std::size_t n = a_.size();
  if (n < 2 || b_.size() != n || c_.size() != n) {
    invalid("row and witnesses need a common length >= 2");
  }
  if (!witness_residual(base_, a_, b_).is_zero()) {
    invalid("a.b != 1");
  }
  if (!witness_residual(base_, a_, c_).is_zero()) {
    invalid("a.c != 1");
  }
  if (!(path_.ring() == extended_) || path_.rows() != n || path_.cols() != n) {
    invalid("path matrix has the wrong ring or shape");
  }
  const std::size_t parameter = extended_.variables().size() - 1;
  if (!(path_ == closed_form(extended_, parameter, a_, b_, c_))) {
    invalid("path is not I + (c - b)^t a t");
  }
  if (!(specialize(path_, base_, 0) == RingMatrix::identity(base_, n))) {
    invalid("beta(0) != I");
  }
  const RingMatrix end = specialize(path_, base_, 1);
  const auto moved = times_column(end, b_);
  for (std::size_t k = 0; k < n; ++k) {
    if (!base_.equal(moved[k], c_[k])) {
      invalid("beta(1) b^t != c^t at entry " + std::to_string(k + 1));
    }
  }
  const Polynomial det = determinant(path_);
  if (!extended_.is_one(det)) {
    invalid("det beta(t) = " + extended_.print(det));
  }
  // the rank-one identity gives the same determinant without expansion
  const Polynomial t = extended_.variable(parameter);
  std::vector<Polynomial> diff;
  std::vector<Polynomial> at;
  for (std::size_t k = 0; k < n; ++k) {
    diff.push_back(extended_.sub(extended_.embed(c_[k]), extended_.embed(b_[k])));
    at.push_back(extended_.mul(extended_.embed(a_[k]), t));
  }
  Polynomial rhs = extended_.one();
  for (std::size_t k = 0; k < n; ++k) {
    rhs = extended_.add(rhs, extended_.mul(at[k], diff[k]));
  }
  if (!extended_.is_one(rhs)) {
    invalid("1 + t a.(c - b)^t = " + extended_.print(rhs));
  }
}

IsotopyCertificate IsotopyCertificate::make(const Ring& base, std::vector<Polynomial> a,
                                            std::vector<Polynomial> b, std::vector<Polynomial> c,
                                            RingMatrix path, std::string parameter) {
  const Ring extended = base.extend_with_variable(parameter);
  for (auto* v : {&a, &b, &c}) {
    for (auto& e : *v) {
      e = base.normal_form(e);
    }
  }
  IsotopyCertificate cert(base, extended, std::move(parameter), std::move(a), std::move(b),
                          std::move(c), std::move(path));
  cert.recheck();
  return cert;
}

IsotopyCertificate vaserstein_isotopy(std::vector<Polynomial> a, std::vector<Polynomial> b,
                                      std::vector<Polynomial> c, const Ring& ring,
                                      const std::string& parameter) {
  // both witness identities are checked up front so the error names the
  // failing one
  const UnimodularRow from = UnimodularRow::verify(ring, a, b);
  const UnimodularRow to = UnimodularRow::verify(ring, a, c);
  const Ring extended = ring.extend_with_variable(parameter);
  RingMatrix path = closed_form(extended, extended.variables().size() - 1, from.entries(),
                                from.witness(), to.witness());
  return IsotopyCertificate::make(ring, from.entries(), from.witness(), to.witness(),
                                  std::move(path), parameter);
}

}  // namespace unirow
