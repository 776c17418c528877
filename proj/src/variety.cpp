#include <charconv>
#include <cmath>
#include <numbers>

#include "unirow/errors.hpp"
#include "unirow/topology.hpp"

namespace unirow {

namespace {

// Coefficients converted to double once; exponents stored flat.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& f) : arity_(f.variables().size()) {
    for (const auto& [m, c] : f.terms()) {
      coefficients_.push_back(c.get_d());
      exponents_.insert(exponents_.end(), m.exponents().begin(), m.exponents().end());
    }
  }

  double operator()(const double* point) const {
    double sum = 0.0;
    const std::uint32_t* e = exponents_.data();
    for (double c : coefficients_) {
      double value = c;
      for (std::size_t k = 0; k < arity_; ++k, ++e) {
        for (std::uint32_t p = 0; p < *e; ++p) {
          value *= point[k];
        }
      }
      sum += value;
    }
    return sum;
  }

 private:
  std::size_t arity_;
  std::vector<double> coefficients_;
  std::vector<std::uint32_t> exponents_;
};

std::vector<CompiledPolynomial> compile(std::span<const Polynomial> row, const Ring& ring) {
  std::vector<CompiledPolynomial> out;
  for (const auto& f : row) {
    if (!(f.variables() == ring.variables())) {
      fail(ErrorCode::Structural, "row entry is not over the sample's variables");
    }
    out.emplace_back(f);
  }
  return out;
}

Polynomial sum_of_squares_minus_one(const Ring& ring) {
  Polynomial f = -ring.one();
  for (std::size_t k = 0; k < ring.variables().size(); ++k) {
    f += ring.variable(k) * ring.variable(k);
  }
  return f;
}

void require_sphere_ring(const Ring& ring, std::size_t dimension, const char* what) {
  if (ring.kind() != RingKind::PrincipalQuotient || ring.variables().size() != dimension ||
      !(*ring.modulus() == sum_of_squares_minus_one(ring))) {
    fail(ErrorCode::ContextMismatch, std::string(what) + " samples need a ring of the form Q[" +
                                         (dimension == 2 ? "x,y" : "x,y,z") + "]/(" +
                                         (dimension == 2 ? "x^2 + y^2" : "x^2 + y^2 + z^2") +
                                         " - 1); got " + ring.to_string());
  }
}

Vector point2(double x, double y) {
  Vector p(2);
  p << x, y;
  return p;
}

Vector point3(double x, double y, double z) {
  Vector p(3);
  p << x, y, z;
  return p;
}

std::string describe(const Vector& p) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    out += (k ? ", " : "") + std::to_string(p[k]);
  }
  return out + ")";
}

std::string shortest(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

}  // namespace

VarietySample sample_variety(const Generator& generator, const Ring& ring, double membership_tol) {
  constexpr double two_pi = 2 * std::numbers::pi;
  std::vector<Vector> points;
  if (const auto* circle = std::get_if<Circle>(&generator)) {
    require_sphere_ring(ring, 2, "Circle");
    if (circle->samples == 0) {
      fail(ErrorCode::Structural, "Circle needs at least one sample");
    }
    for (std::size_t k = 0; k < circle->samples; ++k) {
      const double theta = two_pi * static_cast<double>(k) / static_cast<double>(circle->samples);
      points.push_back(point2(std::cos(theta), std::sin(theta)));
    }
  } else if (const auto* sphere = std::get_if<Sphere2>(&generator)) {
    require_sphere_ring(ring, 3, "Sphere2");
    if (sphere->latitudes < 2 || sphere->longitudes < 1) {
      fail(ErrorCode::Structural, "Sphere2 needs latitudes >= 2 and longitudes >= 1");
    }
    points.push_back(point3(0, 0, 1));
    for (std::size_t i = 1; i < sphere->latitudes; ++i) {
      const double polar =
          std::numbers::pi * static_cast<double>(i) / static_cast<double>(sphere->latitudes);
      for (std::size_t j = 0; j < sphere->longitudes; ++j) {
        const double azimuth =
            two_pi * static_cast<double>(j) / static_cast<double>(sphere->longitudes);
        points.push_back(point3(std::sin(polar) * std::cos(azimuth),
                                std::sin(polar) * std::sin(azimuth), std::cos(polar)));
      }
    }
    points.push_back(point3(0, 0, -1));
  } else {
    const auto& given = std::get<Explicit>(generator).points;
    const std::size_t m = ring.variables().size();
    std::optional<CompiledPolynomial> modulus;
    if (ring.modulus()) {
      modulus.emplace(*ring.modulus());
    }
    for (const auto& p : given) {
      if (static_cast<std::size_t>(p.size()) != m) {
        fail(ErrorCode::Structural, "point " + describe(p) + " does not have " +
                                        std::to_string(m) + " coordinates");
      }
      if (modulus && std::abs((*modulus)(p.data())) > membership_tol) {
        fail(ErrorCode::NotOnVariety,
             "point " + describe(p) + " is not on the variety of " + ring.to_string());
      }
      points.push_back(p);
    }
  }
  return {ring, generator, std::move(points), membership_tol};
}

MapTrace eval_row_map(std::span<const Polynomial> row, const VarietySample& sample) {
  const auto compiled = compile(row, sample.ring);
  MapTrace trace{sample.ring, {row.begin(), row.end()}, sample.points, {}, 0};
  trace.values.reserve(sample.points.size());
  double min_norm = std::numeric_limits<double>::infinity();
  for (const auto& p : sample.points) {
    Vector v(static_cast<Eigen::Index>(compiled.size()));
    for (std::size_t k = 0; k < compiled.size(); ++k) {
      v[static_cast<Eigen::Index>(k)] = compiled[k](p.data());
    }
    min_norm = std::min(min_norm, v.norm());
    trace.values.push_back(std::move(v));
  }
  trace.min_norm = trace.values.empty() ? 0.0 : min_norm;
  return trace;
}

MapTrace normalize_to_sphere(const MapTrace& trace) {
  MapTrace out = trace;
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const double norm = out.values[k].norm();
    if (norm <= kNonvanishingTol) {
      fail(ErrorCode::CannotNormalize, "row vanishes (norm " + std::to_string(norm) + ") at " +
                                           describe(out.points[k]));
    }
    out.values[k] /= norm;
  }
  if (!out.values.empty()) {
    out.min_norm = 1.0;
    for (const auto& v : out.values) {
      out.min_norm = std::min(out.min_norm, v.norm());
    }
  }
  return out;
}

HomotopyCheck straight_line_homotopy_check(const MapTrace& f, const MapTrace& g,
                                           std::size_t steps, double tol) {
  if (steps < 2) {
    fail(ErrorCode::Structural, "homotopy check needs steps >= 2");
  }
  if (f.values.size() != g.values.size()) {
    fail(ErrorCode::Structural, "traces have different sample sizes");
  }
  double min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (f.values[k].size() != g.values[k].size()) {
      fail(ErrorCode::Structural, "traces have different target dimensions");
    }
    for (std::size_t s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(steps);
      min_norm = std::min(min_norm, ((1 - t) * f.values[k] + t * g.values[k]).norm());
    }
  }
  if (f.values.empty()) {
    min_norm = 0;
  }
  return {min_norm > tol, min_norm};
}

HomotopyCheck path_homotopy_check(std::span<const Polynomial> row,
                                  const ElementaryFactorization& f, const VarietySample& sample,
                                  std::size_t steps, double tol) {
  if (steps < 2) {
    fail(ErrorCode::Structural, "homotopy check needs steps >= 2");
  }
  const Ring& ring = sample.ring;
  const FactorizationPath path = factorization_path(f, ring);
  std::vector<Polynomial> lifted;
  for (const auto& e : row) {
    lifted.push_back(path.ring.embed(ring.normal_form(e)));
  }
  const auto moving = apply_factorization(path.ring, lifted, path.factorization);
  const auto compiled = compile(moving, path.ring);

  const std::size_t m = ring.variables().size();
  std::vector<double> point(m + 1);
  double min_norm = std::numeric_limits<double>::infinity();
  for (const auto& p : sample.points) {
    std::copy(p.data(), p.data() + m, point.begin());
    for (std::size_t s = 0; s <= steps; ++s) {
      point[m] = static_cast<double>(s) / static_cast<double>(steps);
      double sq = 0;
      for (const auto& c : compiled) {
        const double v = c(point.data());
        sq += v * v;
      }
      min_norm = std::min(min_norm, std::sqrt(sq));
    }
  }
  if (sample.points.empty()) {
    min_norm = 0;
  }
  return {min_norm > tol, min_norm};
}

TangentFieldReport tangent_field_report(std::span<const Polynomial> field,
                                        const VarietySample& sphere) {
  if (field.size() != 3 || sphere.ring.variables().size() != 3) {
    fail(ErrorCode::Structural, "tangent field report needs a 3-component field on S^2");
  }
  const MapTrace trace = eval_row_map(field, sphere);
  TangentFieldReport report{std::numeric_limits<double>::infinity(), 0, {}};
  for (std::size_t k = 0; k < trace.values.size(); ++k) {
    const Vector& p = trace.points[k];
    const Vector& v = trace.values[k];
    const double normal = v.dot(p);
    const double tangent = (v - normal * p).norm();
    report.max_normal_component = std::max(report.max_normal_component, std::abs(normal));
    if (tangent < report.min_tangent_norm) {
      report.min_tangent_norm = tangent;
      report.argmin = p;
    }
  }
  return report;
}

std::string trace_to_csv(const MapTrace& trace) {
  std::string out;
  const auto& vars = trace.ring.variables();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    out += vars[k] + ",";
  }
  for (std::size_t k = 0; k < trace.row.size(); ++k) {
    out += "v" + std::to_string(k + 1) + ",";
  }
  out += "norm\n";
  for (std::size_t k = 0; k < trace.points.size(); ++k) {
    for (double x : trace.points[k]) {
      out += shortest(x) + ",";
    }
    for (double x : trace.values[k]) {
      out += shortest(x) + ",";
    }
    out += shortest(trace.values[k].norm()) + "\n";
  }
  return out;
}

Json trace_to_json(const MapTrace& trace) {
  Json j;
  j["ring"] = trace.ring.to_string();
  j["row"] = print_all(trace.ring, trace.row);
  j["points"] = Json::array();
  j["values"] = Json::array();
  j["norms"] = Json::array();
  for (std::size_t k = 0; k < trace.points.size(); ++k) {
    j["points"].push_back(std::vector<double>(trace.points[k].begin(), trace.points[k].end()));
    j["values"].push_back(std::vector<double>(trace.values[k].begin(), trace.values[k].end()));
    j["norms"].push_back(trace.values[k].norm());
  }
  j["min_norm"] = trace.min_norm;
  return j;
}

}  // namespace unirow
