#include "unirow/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unirow/errors.hpp"
#include "unirow/serialize.hpp"
#include "unirow/topology.hpp"

namespace unirow::cli {

namespace {

struct Options {
  std::string verb;
  std::string ring;
  std::string row;
  std::string witness;
  std::string target_witness;
  std::string prefix_witness;
  std::string inverse;
  std::string ops;
  std::string mod;
  std::string points;
  std::string method = "auto";
  std::string format = "text";
  std::string out;
  std::string file;
  std::size_t samples = 0;
  std::size_t steps = 100;
  bool normalize = false;
};

constexpr const char* kCircleRing = "Q[x,y]/(x^2 + y^2 - 1)";

bool json_format(const Options& o) { return o.format == "json"; }

std::string number(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string render(const Ring& ring, std::span<const Polynomial> v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    out += (k ? ", " : "") + ring.print(v[k]);
  }
  return out + ")";
}

std::string render(const RingMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out += (c ? ", " : "") + m.ring().print(m(r, c));
    }
    out += "]\n";
  }
  return out;
}

std::string render(const ElementaryFactorization& f, const Ring& ring) {
  if (f.ops.empty()) {
    return "(empty)";
  }
  std::string out;
  for (std::size_t k = 0; k < f.ops.size(); ++k) {
    const auto& op = f.ops[k];
    out += (k ? " " : "") + std::string("E") + std::to_string(op.i) + std::to_string(op.j) + "(" +
           ring.print(op.lambda) + ")";
  }
  return out;
}

[[noreturn]] void usage(const std::string& message) { fail(ErrorCode::Usage, message); }

const std::string& required(const std::string& value, const char* flag) {
  if (value.empty()) {
    usage(std::string("missing required option ") + flag);
  }
  return value;
}

std::vector<Polynomial> parse_vector(const Ring& ring, const std::string& text, const char* flag) {
  return ring.parse_list(required(text, flag));
}

void require_length(std::span<const Polynomial> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    usage(std::string(what) + " needs " + std::to_string(n) + " entries, got " +
          std::to_string(v.size()));
  }
}

Ring ring_or(const Options& o, const char* fallback) {
  return parse_ring(o.ring.empty() ? std::string(fallback) : o.ring);
}

Ring ring_required(const Options& o) { return parse_ring(required(o.ring, "--ring")); }

VarietySample make_sample(const Ring& ring, const Options& o) {
  if (!o.points.empty()) {
    Explicit given;
    for (const auto& chunk : split_top_level(o.points, ';')) {
      std::vector<double> coords;
      for (const auto& part : split_top_level(chunk, ',')) {
        std::string s = part;
        s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
        double v = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
          throw SyntaxError("bad coordinate '" + part + "' in --points",
                            static_cast<std::size_t>(o.points.find(part)));
        }
        coords.push_back(v);
      }
      given.points.push_back(Eigen::Map<Vector>(coords.data(), static_cast<Eigen::Index>(coords.size())));
    }
    return sample_variety(given, ring);
  }
  switch (ring.variables().size()) {
    case 2: return sample_variety(Circle{o.samples ? o.samples : 360}, ring);
    case 3: {
      const std::size_t lon = o.samples ? o.samples : 36;
      return sample_variety(Sphere2{std::max<std::size_t>(2, lon / 2), lon}, ring);
    }
    default:
      usage("no standard sample for " + ring.to_string() + "; give --points");
  }
}

// --- verbs -----------------------------------------------------------------

void cmd_verify(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const UnimodularRow row = UnimodularRow::verify(ring, parse_vector(ring, o.row, "--row"),
                                                  parse_vector(ring, o.witness, "--witness"));
  if (json_format(o)) {
    Json j;
    j["verb"] = "verify";
    j["ring"] = ring_to_json(ring);
    j["row"] = print_all(ring, row.entries());
    j["witness"] = print_all(ring, row.witness());
    j["unimodular"] = true;
    out << dump(j);
  } else {
    out << "OK: " << render(ring, row.entries()) << " . " << render(ring, row.witness())
        << " = 1 in " << ring.to_string() << "\n";
  }
}

void print_completion(const CompletionCertificate& cert, const Options& o, std::ostream& out) {
  if (json_format(o)) {
    out << dump(certificate_to_json(cert));
    return;
  }
  const Ring& ring = cert.row().ring();
  out << "completion of " << render(ring, cert.row().entries()) << " over " << ring.to_string()
      << "\n";
  out << "provenance: " << to_string(cert.provenance()) << "\n";
  out << "witness: " << render(ring, cert.row().witness()) << "\n";
  if (cert.reduction().n != 0) {
    out << "reduction to e1: " << render(cert.reduction(), ring) << "\n";
  }
  out << "matrix:\n" << render(cert.matrix());
  out << "determinant: " << ring.print(determinant(cert.matrix())) << "\n";
}

void cmd_complete(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  auto a = parse_vector(ring, o.row, "--row");
  std::string method = o.method;
  if (method == "auto") {
    if (!o.inverse.empty()) {
      method = "unit";
    } else if (!o.prefix_witness.empty()) {
      method = "partial";
    } else if (a.size() == 2) {
      method = "euclid";
    } else {
      usage("no completion method applies to a row of length " + std::to_string(a.size()) +
            "; give --inverse or --prefix-witness");
    }
  }
  if (method == "euclid") {
    require_length(a, 2, "Euclidean completion");
    print_completion(euclid_complete(ring, a[0], a[1]).certificate, o, out);
    return;
  }
  std::vector<Polynomial> witness;
  std::vector<Polynomial> prefix;
  Polynomial inverse;
  if (method == "unit") {
    inverse = ring.parse(required(o.inverse, "--inverse"));
    witness.assign(a.size(), ring.zero());
    witness[0] = inverse;
  } else if (method == "partial") {
    prefix = parse_vector(ring, o.prefix_witness, "--prefix-witness");
    if (prefix.empty() || prefix.size() >= a.size()) {
      usage("--prefix-witness must have between 1 and n - 1 entries");
    }
    witness = prefix;
    witness.resize(a.size(), ring.zero());
  } else {
    usage("unknown --method '" + method + "' (euclid, unit, partial, auto)");
  }
  // the reductions check their own inputs, but only after the full witness
  // has been verified; check here so the error names the real culprit
  if (method == "unit" && !ring.is_one(ring.mul(a[0], inverse))) {
    fail(ErrorCode::NotAnInverse, ring.print(inverse) + " is not an inverse of " + ring.print(a[0]));
  }
  if (method == "partial" &&
      !witness_residual(ring, std::span(a.data(), prefix.size()), prefix).is_zero()) {
    fail(ErrorCode::NotAnInverse, "prefix witness identity fails");
  }
  if (!o.witness.empty()) {
    witness = parse_vector(ring, o.witness, "--witness");
  }
  const UnimodularRow row = UnimodularRow::verify(ring, std::move(a), std::move(witness));
  const ElementaryFactorization f = method == "unit"
                                        ? unit_first_reduce(row, inverse)
                                        : partial_unimodular_reduce(row, prefix.size(), prefix);
  const Provenance p = method == "unit" ? Provenance::UnitReduce : Provenance::PartialUnimodular;
  print_completion(complete_from_reduction(row, f, p), o, out);
}

void cmd_isotopy(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const IsotopyCertificate cert =
      vaserstein_isotopy(parse_vector(ring, o.row, "--row"),
                         parse_vector(ring, o.witness, "--witness"),
                         parse_vector(ring, o.target_witness, "--target-witness"), ring);
  if (json_format(o)) {
    out << dump(certificate_to_json(cert));
    return;
  }
  out << "isotopy over " << cert.extended().to_string() << "\n";
  out << "row: " << render(ring, cert.row()) << "\n";
  out << "b: " << render(ring, cert.from_witness()) << "\n";
  out << "c: " << render(ring, cert.to_witness()) << "\n";
  out << "beta(" << cert.parameter() << ") = I + (c - b)^t a " << cert.parameter() << ":\n"
      << render(cert.path());
  out << "checks: beta(0) = I, beta(1) b^t = c^t, det beta = 1\n";
  if (cert.below_stable_range()) {
    out << "note: n = " << cert.row().size() << " is below n = 3; the path is valid but n >= 3 is the usual setting\n";
  }
}

void cmd_swan(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const auto a = parse_vector(ring, o.row, "--row");
  const auto w = parse_vector(ring, o.witness, "--witness");
  require_length(a, 3, "--row");
  require_length(w, 3, "--witness");
  const CompletionCertificate cert = swan_complete(ring, a[0], a[1], a[2], w[0], w[1], w[2]);
  if (json_format(o)) {
    out << dump(certificate_to_json(cert));
    return;
  }
  const SwanChain chain = swan_chain(ring, a[0], a[1], a[2], w[0], w[1], w[2]);
  out << "alpha:\n" << render(chain.alpha);
  out << "alpha1:\n" << render(chain.alpha1);
  out << "alpha2:\n" << render(chain.alpha2);
  out << "alpha' = alpha1 alpha2 alpha:\n" << render(chain.alpha_prime);
  out << "beta:\n" << render(chain.beta);
  out << "sigma:\n" << render(chain.sigma);
  print_completion(cert, o, out);
}

void cmd_lift(const Options& o, std::ostream& out) {
  const Ring base = ring_required(o);
  const std::string& mod = required(o.mod, "--mod");
  const UnimodularRow row = UnimodularRow::verify(base, parse_vector(base, o.row, "--row"),
                                                  parse_vector(base, o.witness, "--witness"));
  LiftedRow lifted{row, {}};
  std::string modulus_text;
  std::vector<Polynomial> reduced_row;
  if (base.kind() == RingKind::Integers) {
    const IntegerModulus m{BigInt(parse_rational(mod).get_num())};
    if (!is_integer(parse_rational(mod))) {
      usage("--mod over Z must be an integer");
    }
    const ElementaryFactorization reduced = parse_ops(o.ops, base, row.size());
    lifted = transform_row_with_lift(row, reduced, m);
    modulus_text = to_string(m.m);
    for (const auto& e : lifted.row.entries()) {
      reduced_row.push_back(base.constant(Rational(mod_floor(e.constant_term().get_num(), m.m))));
    }
  } else {
    const Ring quotient = Ring::quotient(base.variables().names(), mod, base.order());
    const ElementaryFactorization reduced = parse_ops(o.ops, quotient, row.size());
    lifted = transform_row_with_lift(row, reduced, quotient);
    modulus_text = quotient.to_string();
    for (const auto& e : lifted.row.entries()) {
      reduced_row.push_back(quotient.normal_form(e));
    }
  }
  if (json_format(o)) {
    Json j;
    j["verb"] = "lift";
    j["ring"] = ring_to_json(base);
    j["modulus"] = modulus_text;
    j["lift"] = factorization_to_json(lifted.lift, base);
    j["row"] = print_all(base, lifted.row.entries());
    j["witness"] = print_all(base, lifted.row.witness());
    j["reduced_row"] = print_all(base, reduced_row);
    out << dump(j);
    return;
  }
  out << "lift over " << base.to_string() << " of factorization mod " << modulus_text << ":\n  "
      << render(lifted.lift, base) << "\n";
  out << "row: " << render(base, lifted.row.entries()) << "\n";
  out << "witness: " << render(base, lifted.row.witness()) << "\n";
  out << "reduced: " << render(base, reduced_row) << "\n";
}

void print_square(const std::string& verb, const RingMatrix& m, const Options& o,
                  std::ostream& out, Json extra = Json::object()) {
  const Polynomial det = determinant(m);
  const bool skew = is_skew_symmetric(m);
  if (json_format(o)) {
    Json j;
    j["verb"] = verb;
    j["ring"] = ring_to_json(m.ring());
    j["matrix"] = matrix_to_json(m);
    j["determinant"] = m.ring().print(det);
    j["skew_symmetric"] = skew;
    for (auto& [k, v] : extra.items()) {
      j[k] = v;
    }
    out << dump(j);
    return;
  }
  out << "matrix:\n" << render(m);
  out << "determinant: " << m.ring().print(det) << "\n";
  out << "skew-symmetric: " << (skew ? "yes" : "no") << "\n";
  for (auto& [k, v] : extra.items()) {
    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void cmd_skew(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const auto a = parse_vector(ring, o.row, "--row");
  const auto b = parse_vector(ring, o.witness, "--witness");
  require_length(a, 3, "--row");
  require_length(b, 3, "--witness");
  print_square("skew", skew_form(ring, a, b), o, out);
}

void cmd_conjugate(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const UnimodularRow row = UnimodularRow::verify(ring, parse_vector(ring, o.row, "--row"),
                                                  parse_vector(ring, o.witness, "--witness"));
  require_length(row.entries(), 3, "--row");
  const ElementaryFactorization tau = parse_ops(o.ops, ring, 3);
  const RingMatrix conj = conjugate_skew(skew_form(ring, row.entries(), row.witness()), tau);
  const UnimodularRow moved = apply_factorization_with_witness(row, tau);
  const bool matches = conj == skew_form(ring, moved.entries(), moved.witness());
  Json extra;
  extra["row_after"] = print_all(ring, moved.entries());
  extra["witness_after"] = print_all(ring, moved.witness());
  extra["equals_transported_form"] = matches;
  print_square("conjugate", conj, o, out, extra);
  if (!matches) {
    fail(ErrorCode::InvalidCertificate, "conjugated form differs from V(a tau, b (tau^-1)^t)");
  }
}

void cmd_quaternion(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const auto x = parse_vector(ring, o.row, "--row");
  require_length(x, 4, "--row");
  print_square("quaternion", quaternion_left_matrix(ring, x[0], x[1], x[2], x[3]), o, out);
}

void cmd_evaluate(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  const VarietySample sample = make_sample(ring, o);
  MapTrace trace = eval_row_map(parse_vector(ring, o.row, "--row"), sample);
  if (o.normalize) {
    trace = normalize_to_sphere(trace);
  }
  if (o.format == "csv") {
    out << trace_to_csv(trace);
  } else if (json_format(o)) {
    out << dump(trace_to_json(trace));
  } else {
    out << "row " << render(ring, trace.row) << " on " << trace.points.size() << " points of "
        << ring.to_string() << "\n";
    out << "min norm: " << number(trace.min_norm) << "\n";
  }
}

void cmd_homotopy(const Options& o, std::ostream& out) {
  const Ring ring = ring_required(o);
  auto a = parse_vector(ring, o.row, "--row");
  if (!o.witness.empty()) {
    UnimodularRow::verify(ring, a, parse_vector(ring, o.witness, "--witness"));
  }
  const ElementaryFactorization f = parse_ops(o.ops, ring, a.size());
  const VarietySample sample = make_sample(ring, o);
  const HomotopyCheck check = path_homotopy_check(a, f, sample, o.steps);
  if (json_format(o)) {
    Json j;
    j["verb"] = "homotopy";
    j["ring"] = ring_to_json(ring);
    j["row"] = print_all(ring, a);
    j["factorization"] = factorization_to_json(f, ring);
    j["points"] = sample.points.size();
    j["steps"] = o.steps;
    j["ok"] = check.ok;
    j["min_norm"] = check.min_norm;
    out << dump(j);
  } else {
    out << "path a sigma(t) over " << sample.points.size() << " points x " << o.steps + 1
        << " steps: " << (check.ok ? "nonvanishing" : "VANISHES") << "\n";
    out << "min norm: " << number(check.min_norm) << "\n";
  }
  if (!check.ok) {
    fail(ErrorCode::PathVanishes, "sampled path comes within " + number(check.min_norm) +
                                      " of the origin");
  }
}

void cmd_winding(const Options& o, std::ostream& out) {
  const Ring ring = ring_or(o, kCircleRing);
  const auto row = parse_vector(ring, o.row, "--row");
  require_length(row, 2, "--row");
  const VarietySample sample = make_sample(ring, o);
  const WindingReport report = winding_number(eval_row_map(row, sample));
  if (json_format(o)) {
    out << dump(winding_to_json(report));
  } else {
    out << "winding: " << report.winding << "\nresidual: " << number(report.residual)
        << "\nmin norm: " << number(report.min_norm) << "\n";
  }
}

void cmd_verify_cert(const Options& o, std::ostream& out) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    usage("cannot read certificate file '" + o.file + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Certificate cert = parse_certificate(buffer.str());
  const bool completion = std::holds_alternative<CompletionCertificate>(cert);
  if (json_format(o)) {
    Json j;
    j["verb"] = "verify-cert";
    j["kind"] = completion ? "completion" : "isotopy";
    j["valid"] = true;
    out << dump(j);
  } else {
    out << "OK: " << (completion ? "completion" : "isotopy") << " certificate verified\n";
  }
}

void dispatch(const Options& o, std::ostream& out) {
  if (o.format == "csv" && o.verb != "evaluate") {
    usage("--format csv is only available for evaluate");
  }
  if (o.verb == "verify") return cmd_verify(o, out);
  if (o.verb == "complete") return cmd_complete(o, out);
  if (o.verb == "isotopy") return cmd_isotopy(o, out);
  if (o.verb == "swan") return cmd_swan(o, out);
  if (o.verb == "lift") return cmd_lift(o, out);
  if (o.verb == "skew") return cmd_skew(o, out);
  if (o.verb == "conjugate") return cmd_conjugate(o, out);
  if (o.verb == "quaternion") return cmd_quaternion(o, out);
  if (o.verb == "evaluate") return cmd_evaluate(o, out);
  if (o.verb == "homotopy") return cmd_homotopy(o, out);
  if (o.verb == "winding") return cmd_winding(o, out);
  if (o.verb == "verify-cert") return cmd_verify_cert(o, out);
  usage("unknown verb '" + o.verb + "'");
}

}  // namespace

ElementaryFactorization parse_ops(const std::string& text, const Ring& ring, std::size_t n) {
  ElementaryFactorization f{n, {}};
  std::size_t offset = 0;
  for (const auto& chunk : split_top_level(text, ';')) {
    std::size_t at = text.find(chunk, offset);
    if (at == std::string::npos) {
      at = offset;
    }
    offset = at + chunk.size();
    if (chunk.find_first_not_of(" \t") == std::string::npos) {
      if (text.find_first_not_of(" \t;") == std::string::npos) {
        continue;  // empty factorization
      }
      throw SyntaxError("empty op in --ops", at);
    }
    const auto parts = split_top_level(chunk, ',');
    if (parts.size() != 3) {
      throw SyntaxError("op '" + chunk + "' is not of the form i,j,lambda", at);
    }
    std::size_t index[2];
    for (int k = 0; k < 2; ++k) {
      std::string s = parts[static_cast<std::size_t>(k)];
      s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
      auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), index[k]);
      if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw SyntaxError("bad index '" + parts[static_cast<std::size_t>(k)] + "' in op '" +
                              chunk + "'",
                          at);
      }
    }
    f.ops.push_back({index[0], index[1], ring.parse(parts[2])});
  }
  f.validate();
  return f;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unimodular rows: verification, completion certificates and topology checks",
               "unirow"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub, bool csv = false) {
    std::vector<std::string> formats{"text", "json"};
    if (csv) {
      formats.push_back("csv");
    }
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "Write the output to this file");
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Ring: Z, Q, Q[x,...] or Q[x,...]/(f)");
  };
  auto add_row = [&](CLI::App* sub) {
    sub->add_option("--row", o.row, "Comma-separated ring elements");
  };
  auto add_witness = [&](CLI::App* sub) {
    sub->add_option("--witness", o.witness, "Witness b with sum a_i b_i = 1");
  };
  auto add_ops = [&](CLI::App* sub) {
    sub->add_option("--ops", o.ops, "Elementary ops \"i,j,lambda; ...\" (1-based)");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "Circle samples, or sphere longitudes");
    sub->add_option("--points", o.points, "Explicit points \"x,y; x,y; ...\"");
  };

  auto* verify = app.add_subcommand("verify", "Check the witness identity");
  add_ring(verify), add_row(verify), add_witness(verify), add_format(verify);

  auto* complete = app.add_subcommand("complete", "Completion certificate for a row");
  add_ring(complete), add_row(complete), add_witness(complete), add_format(complete);
  complete->add_option("--inverse", o.inverse, "Inverse of the first entry");
  complete->add_option("--prefix-witness", o.prefix_witness,
                       "Witness for a unimodular prefix a_1..a_i");
  complete->add_option("--method", o.method, "euclid, unit, partial or auto")
      ->check(CLI::IsMember({"auto", "euclid", "unit", "partial"}));

  auto* isotopy = app.add_subcommand("isotopy", "Path beta(t) carrying witness b to c");
  add_ring(isotopy), add_row(isotopy), add_witness(isotopy), add_format(isotopy);
  isotopy->add_option("--target-witness", o.target_witness, "Second witness c");

  auto* swan = app.add_subcommand("swan", "Completion of (a^2, b, c)");
  add_ring(swan), add_row(swan), add_witness(swan), add_format(swan);

  auto* lift = app.add_subcommand("lift", "Lift a factorization from A/J to A");
  add_ring(lift), add_row(lift), add_witness(lift), add_ops(lift), add_format(lift);
  lift->add_option("--mod", o.mod, "Generator of J: an integer over Z, a polynomial otherwise");

  auto* skew = app.add_subcommand("skew", "Skew-symmetric form V(a, b)");
  add_ring(skew), add_row(skew), add_witness(skew), add_format(skew);

  auto* conjugate = app.add_subcommand("conjugate", "beta^t V(a, b) beta for tau in E_3");
  add_ring(conjugate), add_row(conjugate), add_witness(conjugate), add_ops(conjugate),
      add_format(conjugate);

  auto* quaternion = app.add_subcommand("quaternion", "Left multiplication by x1 + x2 i + x3 j + x4 k");
  add_ring(quaternion), add_row(quaternion), add_format(quaternion);

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a row on sample points");
  add_ring(evaluate), add_row(evaluate), add_sampling(evaluate), add_format(evaluate, true);
  evaluate->add_flag("--normalize", o.normalize, "Divide every value by its norm");

  auto* homotopy = app.add_subcommand("homotopy", "Sampled nonvanishing of a sigma(t)");
  add_ring(homotopy), add_row(homotopy), add_witness(homotopy), add_ops(homotopy),
      add_sampling(homotopy), add_format(homotopy);
  homotopy->add_option("--steps", o.steps, "Number of t steps")->check(CLI::Range(2, 1000000));

  auto* winding = app.add_subcommand("winding", "Winding number of a pair on the circle");
  add_ring(winding), add_row(winding), add_sampling(winding), add_format(winding);

  auto* verify_cert = app.add_subcommand("verify-cert", "Re-check a certificate file");
  verify_cert->add_option("file", o.file, "Certificate JSON")->required();
  add_format(verify_cert);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  o.verb = app.get_subcommands().front()->get_name();

  std::ostringstream body;
  try {
    dispatch(o, body);
  } catch (const Error& e) {
    const bool usage_like = e.code() == ErrorCode::Syntax || e.code() == ErrorCode::Usage;
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    // a partial report (e.g. a failed homotopy check) is still printed
    if (!body.str().empty()) {
      out << body.str();
    } else if (json_format(o)) {
      Json j;
      j["error"] = std::string(error_code_name(e.code()));
      j["message"] = e.what();
      out << dump(j);
    }
    return usage_like ? 2 : 1;
  }
  if (o.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << body.str())) {
      err << "error: Usage: cannot write '" << o.out << "'\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace unirow::cli
