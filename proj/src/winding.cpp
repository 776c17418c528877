#include <cmath>
#include <numbers>

#include "unirow/errors.hpp"
#include "unirow/topology.hpp"

namespace unirow {

WindingReport winding_number(std::span<const Vector> loop) {
  if (loop.empty()) {
    fail(ErrorCode::Structural, "winding number of an empty loop");
  }
  double min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < loop.size(); ++k) {
    if (loop[k].size() != 2) {
      fail(ErrorCode::Structural, "winding number needs points in R^2");
    }
    const double norm = loop[k].norm();
    if (norm < kOriginTol) {
      fail(ErrorCode::DegenerateLoop,
           "loop point " + std::to_string(k) + " is within 1e-12 of the origin");
    }
    min_norm = std::min(min_norm, norm);
  }
  double total = 0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const Vector& p = loop[k];
    const Vector& q = loop[(k + 1) % loop.size()];
    const double step = std::atan2(p[0] * q[1] - p[1] * q[0], p.dot(q));
    if (std::abs(step) >= std::numbers::pi / 2) {
      fail(ErrorCode::Undersampled, "angle increment " + std::to_string(step) + " at point " +
                                        std::to_string(k) + " reaches pi/2; sample more densely");
    }
    total += step;
  }
  const double turns = total / (2 * std::numbers::pi);
  const double rounded = std::round(turns);
  const double residual = std::abs(turns - rounded);
  if (residual >= kWindingResidualTol) {
    fail(ErrorCode::Undersampled, "angle sum is " + std::to_string(turns) +
                                      " turns, not within 1e-6 of an integer");
  }
  return {static_cast<long>(rounded), residual, min_norm};
}

WindingReport winding_number(const MapTrace& trace) { return winding_number(trace.values); }

WindingPair elementary_action_preserves_winding(std::span<const Polynomial> row,
                                                const ElementaryFactorization& f,
                                                const VarietySample& sample) {
  if (row.size() != 2 || f.n != 2) {
    fail(ErrorCode::Structural, "winding comparison needs a pair and a 2x2 factorization");
  }
  if (!std::holds_alternative<Circle>(sample.generator)) {
    fail(ErrorCode::ContextMismatch, "winding comparison needs a Circle sample");
  }
  const auto moved = apply_factorization(sample.ring, row, f);
  return {winding_number(eval_row_map(row, sample)).winding,
          winding_number(eval_row_map(moved, sample)).winding};
}

Json winding_to_json(const WindingReport& report) {
  Json j;
  j["winding"] = report.winding;
  j["residual"] = report.residual;
  j["min_norm"] = report.min_norm;
  return j;
}

}  // namespace unirow
