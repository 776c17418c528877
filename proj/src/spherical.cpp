#include <cmath>

#include "unirow/errors.hpp"
#include "unirow/topology.hpp"

namespace unirow {

namespace {

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::Structural, "vectors of different dimensions (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
  }
}

void require_unit(const Vector& v, double tol, const char* name) {
  if (std::abs(v.norm() - 1.0) > tol) {
    fail(ErrorCode::Structural, std::string(name) + " is not a unit vector (norm " +
                                    std::to_string(v.norm()) + ")");
  }
}

}  // namespace

Vector reflection(const Vector& w, const Vector& v) {
  require_same_size(w, v);
  const double ww = w.squaredNorm();
  if (ww == 0.0) {
    fail(ErrorCode::ZeroVector, "reflection about the zero vector is undefined");
  }
  return v - (2 * v.dot(w) / ww) * w;
}

Eigen::MatrixXd reflection_matrix(const Vector& w) {
  const double ww = w.squaredNorm();
  if (ww == 0.0) {
    fail(ErrorCode::ZeroVector, "reflection about the zero vector is undefined");
  }
  return Eigen::MatrixXd::Identity(w.size(), w.size()) - (2 / ww) * w * w.transpose();
}

Eigen::MatrixXd rotation_between(const Vector& v0, const Vector& vt, double tol) {
  require_same_size(v0, vt);
  require_unit(v0, tol, "v0");
  require_unit(vt, tol, "vt");
  const Vector w = v0 + vt;
  if (w.norm() < kOriginTol) {
    fail(ErrorCode::Antipodal, "v0 and vt are antipodal: v0 + vt = 0, no reflection sends one "
                               "to the other's negative");
  }
  return -reflection_matrix(w);
}

Vector vaserstein_midpoint(const Vector& v0, const Vector& vt) {
  require_same_size(v0, vt);
  const double denominator = 1 + v0.dot(vt);
  if (std::abs(denominator) < kOriginTol) {
    fail(ErrorCode::Antipodal, "v0 . vt = -1: the midpoint witness is undefined");
  }
  return (v0 + vt) / denominator;
}

}  // namespace unirow
