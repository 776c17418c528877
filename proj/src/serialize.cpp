#include "unirow/serialize.hpp"

#include "unirow/errors.hpp"

namespace unirow {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  fail(ErrorCode::InvalidCertificate, "malformed certificate: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    invalid(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    invalid(std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<Polynomial> parse_vector(const Json& j, const Ring& ring, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) {
    invalid(std::string("field '") + key + "' must be an array");
  }
  std::vector<Polynomial> out;
  for (const auto& e : v) {
    if (!e.is_string()) {
      invalid(std::string("entries of '") + key + "' must be strings");
    }
    out.push_back(ring.parse(e.get<std::string>()));
  }
  return out;
}

MonomialOrder parse_order(const std::string& text) {
  if (text == to_string(MonomialOrder::DegLex)) {
    return MonomialOrder::DegLex;
  }
  if (text == to_string(MonomialOrder::Lex)) {
    return MonomialOrder::Lex;
  }
  invalid("unknown monomial order '" + text + "'");
}

constexpr const char* kIsotopyProvenance = "VasersteinIsotopy";

}  // namespace

std::vector<std::string> print_all(const Ring& ring, std::span<const Polynomial> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    out.push_back(ring.print(e));
  }
  return out;
}

Json ring_to_json(const Ring& ring) {
  Json j;
  j["spec"] = ring.to_string();
  j["kind"] = to_string(ring.kind());
  j["variables"] = Json::array();
  for (std::size_t k = 0; k < ring.variables().size(); ++k) {
    j["variables"].push_back(ring.variables()[k]);
  }
  j["modulus"] = ring.modulus() ? Json(to_string(*ring.modulus(), ring.order())) : Json(nullptr);
  j["order"] = to_string(ring.order());
  return j;
}

Ring ring_from_json(const Json& j) {
  const Ring ring = parse_ring(text_field(j, "spec"), parse_order(text_field(j, "order")));
  if (ring_to_json(ring) != j) {
    invalid("ring fields disagree with spec '" + text_field(j, "spec") + "'");
  }
  return ring;
}

Json matrix_to_json(const RingMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    j["entries"].push_back(print_all(m.ring(), m.row(r)));
  }
  return j;
}

RingMatrix matrix_from_json(const Json& j, const Ring& ring) {
  const Json& rows = field(j, "rows");
  const Json& cols = field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || !entries.is_array()) {
    invalid("matrix needs unsigned 'rows', 'cols' and an 'entries' array");
  }
  const auto r = rows.get<std::size_t>();
  const auto c = cols.get<std::size_t>();
  if (entries.size() != r) {
    invalid("matrix has " + std::to_string(entries.size()) + " rows, expected " +
            std::to_string(r));
  }
  std::vector<Polynomial> flat;
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != c) {
      invalid("matrix row has the wrong length");
    }
    for (const auto& e : row) {
      if (!e.is_string()) {
        invalid("matrix entries must be strings");
      }
      flat.push_back(ring.parse(e.get<std::string>()));
    }
  }
  return RingMatrix(ring, r, c, std::move(flat));
}

Json factorization_to_json(const ElementaryFactorization& f, const Ring& ring) {
  Json j = Json::array();
  for (const auto& op : f.ops) {
    j.push_back(Json::array({op.i, op.j, ring.print(op.lambda)}));
  }
  return j;
}

ElementaryFactorization factorization_from_json(const Json& j, const Ring& ring, std::size_t n) {
  if (!j.is_array()) {
    invalid("factorization must be an array");
  }
  ElementaryFactorization f{n, {}};
  for (const auto& op : j) {
    if (!op.is_array() || op.size() != 3 || !op[0].is_number_unsigned() ||
        !op[1].is_number_unsigned() || !op[2].is_string()) {
      invalid("factorization entries must be [i, j, \"lambda\"]");
    }
    f.ops.push_back({op[0].get<std::size_t>(), op[1].get<std::size_t>(),
                     ring.parse(op[2].get<std::string>())});
  }
  if (f.ops.empty()) {
    f.n = 0;
  }
  f.validate();
  return f;
}

Json certificate_to_json(const CompletionCertificate& cert) {
  const Ring& ring = cert.row().ring();
  Json j;
  j["kind"] = "completion";
  j["ring"] = ring_to_json(ring);
  j["row"] = print_all(ring, cert.row().entries());
  j["witness"] = print_all(ring, cert.row().witness());
  j["factorization"] = factorization_to_json(cert.reduction(), ring);
  j["matrix"] = matrix_to_json(cert.matrix());
  j["provenance"] = to_string(cert.provenance());
  return j;
}

Json certificate_to_json(const IsotopyCertificate& cert) {
  const Ring& ring = cert.base();
  Json j;
  j["kind"] = "isotopy";
  j["ring"] = ring_to_json(ring);
  j["parameter"] = cert.parameter();
  j["row"] = print_all(ring, cert.row());
  j["witness"] = print_all(ring, cert.from_witness());
  j["target_witness"] = print_all(ring, cert.to_witness());
  j["factorization"] = Json::array();
  j["matrix"] = matrix_to_json(cert.path());
  j["provenance"] = kIsotopyProvenance;
  return j;
}

namespace {

Certificate decode(const Json& j) {
  const std::string kind = text_field(j, "kind");
  const Ring ring = ring_from_json(field(j, "ring"));
  auto row = parse_vector(j, ring, "row");
  auto witness = parse_vector(j, ring, "witness");
  const std::string provenance = text_field(j, "provenance");

  if (kind == "completion") {
    const std::size_t n = row.size();
    ElementaryFactorization reduction = factorization_from_json(field(j, "factorization"), ring, n);
    RingMatrix matrix = matrix_from_json(field(j, "matrix"), ring);
    UnimodularRow r = UnimodularRow::verify(ring, std::move(row), std::move(witness));
    return CompletionCertificate::make(std::move(r), std::move(matrix),
                                       parse_provenance(provenance), std::move(reduction));
  }
  if (kind == "isotopy") {
    if (provenance != kIsotopyProvenance) {
      invalid("isotopy provenance must be " + std::string(kIsotopyProvenance));
    }
    if (!field(j, "factorization").empty()) {
      invalid("isotopy certificates carry no factorization");
    }
    const std::string parameter = text_field(j, "parameter");
    auto target = parse_vector(j, ring, "target_witness");
    const Ring extended = ring.extend_with_variable(parameter);
    RingMatrix path = matrix_from_json(field(j, "matrix"), extended);
    return IsotopyCertificate::make(ring, std::move(row), std::move(witness), std::move(target),
                                    std::move(path), parameter);
  }
  invalid("unknown certificate kind '" + kind + "'");
}

}  // namespace

Certificate certificate_from_json(const Json& j) {
  try {
    return decode(j);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidCertificate) {
      throw;
    }
    fail(ErrorCode::InvalidCertificate,
         "certificate rejected (" + std::string(error_code_name(e.code())) + "): " + e.what());
  } catch (const nlohmann::json::exception& e) {
    invalid(e.what());
  }
}

Certificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return certificate_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace unirow
