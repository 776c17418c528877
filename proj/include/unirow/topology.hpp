#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "unirow/serialize.hpp"
#include "unirow/unimodular.hpp"

namespace unirow {

using Vector = Eigen::VectorXd;

// Default tolerances. They are fixed configuration values; nothing below
// adapts them on the fly.
inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kNonvanishingTol = 1e-9;
inline constexpr double kUnitTol = 1e-9;
inline constexpr double kOriginTol = 1e-12;
inline constexpr double kWindingResidualTol = 1e-6;

/// Points (cos 2 pi k/n, sin 2 pi k/n), k = 0..n-1, in loop order.
struct Circle {
  std::size_t samples = 360;
};
/// Both poles plus a latitude/longitude grid: polar angles pi i/latitudes
/// for 0 < i < latitudes, azimuths 2 pi j/longitudes.
struct Sphere2 {
  std::size_t latitudes = 18;
  std::size_t longitudes = 36;
};
struct Explicit {
  std::vector<Vector> points;
};
using Generator = std::variant<Circle, Sphere2, Explicit>;

struct VarietySample {
  Ring ring;
  Generator generator;
  std::vector<Vector> points;
  double membership_tol = kMembershipTol;
};

/// Circle needs the ring Q[x,y]/(x^2 + y^2 - 1) and Sphere2 the ring
/// Q[x,y,z]/(x^2 + y^2 + z^2 - 1) (any variable names); otherwise
/// ContextMismatch. Explicit points are checked against the modulus
/// (NotOnVariety, naming the first offender).
VarietySample sample_variety(const Generator& generator, const Ring& ring,
                             double membership_tol = kMembershipTol);

/// Values of a row of polynomials at the sample points.
struct MapTrace {
  Ring ring;
  std::vector<Polynomial> row;
  std::vector<Vector> points;
  std::vector<Vector> values;
  double min_norm = 0;
};

MapTrace eval_row_map(std::span<const Polynomial> row, const VarietySample& sample);
/// x -> x / |x| pointwise; CannotNormalize when some value has norm at most
/// kNonvanishingTol.
MapTrace normalize_to_sphere(const MapTrace& trace);

struct HomotopyCheck {
  bool ok = false;
  double min_norm = 0;
};

/// (1 - t) f + t g on t = k/steps, k = 0..steps. ok iff the minimum norm
/// over all points and steps exceeds `tol`.
HomotopyCheck straight_line_homotopy_check(const MapTrace& f, const MapTrace& g,
                                           std::size_t steps, double tol = kNonvanishingTol);

/// The path a * sigma(t), sigma(t) with every lambda scaled by t, sampled
/// on the same kind of grid.
HomotopyCheck path_homotopy_check(std::span<const Polynomial> row,
                                  const ElementaryFactorization& f, const VarietySample& sample,
                                  std::size_t steps, double tol = kNonvanishingTol);

/// v - 2 <v, w> / <w, w> w; ZeroVector when w = 0.
Vector reflection(const Vector& w, const Vector& v);
Eigen::MatrixXd reflection_matrix(const Vector& w);
/// -sigma_{v0 + vt}, which sends v0 to vt. Both inputs must be unit
/// vectors within `tol`; Antipodal when v0 + vt = 0.
Eigen::MatrixXd rotation_between(const Vector& v0, const Vector& vt, double tol = kUnitTol);
/// (v0 + vt) / (1 + v0.vt), a common witness: v0.W = vt.W = 1.
Vector vaserstein_midpoint(const Vector& v0, const Vector& vt);

struct WindingReport {
  long winding = 0;
  double residual = 0;
  double min_norm = 0;
};

/// Signed angle sum of a closed loop in R^2 - {0} (closing segment
/// included) over 2 pi. DegenerateLoop when a point is within 1e-12 of the
/// origin, Undersampled when an increment reaches pi/2 or the sum is not
/// within 1e-6 of an integer.
WindingReport winding_number(std::span<const Vector> loop);
WindingReport winding_number(const MapTrace& trace);

struct WindingPair {
  long before = 0;
  long after = 0;
};

/// Windings of row and row * prod(f) over a Circle sample.
WindingPair elementary_action_preserves_winding(std::span<const Polynomial> row,
                                                const ElementaryFactorization& f,
                                                const VarietySample& sample);

/// A candidate vector field on S^2 given by three polynomials: the smallest
/// tangential component over the sample and the largest normal component.
struct TangentFieldReport {
  double min_tangent_norm = 0;
  double max_normal_component = 0;
  Vector argmin;
};
TangentFieldReport tangent_field_report(std::span<const Polynomial> field,
                                        const VarietySample& sphere);

/// CSV with header `<variables>,v1..vn,norm`, one line per point.
std::string trace_to_csv(const MapTrace& trace);
Json trace_to_json(const MapTrace& trace);
Json winding_to_json(const WindingReport& report);

}  // namespace unirow
