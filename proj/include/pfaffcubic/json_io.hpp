#pragma once

#include <string>

#include "json.hpp"
#include "pfaffcubic/curve.hpp"
#include "pfaffcubic/lattice.hpp"
#include "pfaffcubic/pfaffianize.hpp"
#include "pfaffcubic/segre.hpp"

namespace pfaffcubic {

/// Key order is fixed so equal inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Point& p);
Json to_json(const LineP& l);
Json to_json(const std::vector<MultiPoly>& forms);
Json to_json(const PolyMatrix& m);

/// {field, kind, singular_hilbert, reduced_modulo?, points[], ranks[], ...}
Json to_json(const SegreReport& r);
Json to_json(const SliceReport& r);
/// {field, F, strategy, lambda, M, witnesses, checks, seed, retries}
Json to_json(const PfaffianCertificate& c);
Json to_json(const QuinticResult& r, std::uint64_t seed);

/// Reads back the parts of a certificate needed to re-verify it.
struct CertificateCore {
  FieldSpec field;
  MultiPoly cubic;
  SkewLinearMatrix matrix;
};
CertificateCore certificate_from_json(const Json& j);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace pfaffcubic
