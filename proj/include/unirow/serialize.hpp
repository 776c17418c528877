#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "unirow/unimodular.hpp"

namespace unirow {

using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& ring);
/// Rebuilds the ring from "spec" and "order" and cross-checks the other
/// fields. Throws InvalidCertificate on disagreement.
Ring ring_from_json(const Json& j);

std::vector<std::string> print_all(const Ring& ring, std::span<const Polynomial> v);

Json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Json& j, const Ring& ring);

/// [[i, j, "lambda"], ...]
Json factorization_to_json(const ElementaryFactorization& f, const Ring& ring);
ElementaryFactorization factorization_from_json(const Json& j, const Ring& ring, std::size_t n);

Json certificate_to_json(const CompletionCertificate& cert);
Json certificate_to_json(const IsotopyCertificate& cert);

using Certificate = std::variant<CompletionCertificate, IsotopyCertificate>;

/// Parses and fully re-verifies a certificate. Malformed documents and
/// failed invariants both raise InvalidCertificate; malformed JSON text
/// raises Syntax.
Certificate certificate_from_json(const Json& j);
Certificate parse_certificate(std::string_view text);

/// Deterministic text form (two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace unirow
