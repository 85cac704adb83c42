#pragma once

// JSON forms of the library's values. Rationals are "p/q" strings, reals
// are scientific strings carrying every stored digit, and key order is fixed
// so that output is byte-for-byte reproducible.

#include "lpcert/certify.hpp"
#include "lpcert/designs.hpp"
#include "lpcert/gegenbauer.hpp"
#include "lpcert/interpolate.hpp"

#include <json.hpp>

#include <stdexcept>

namespace lpcert {

using Json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"dim":n,"degree":d,"coeffs":[...]} with ascending coefficients.
Json poly_json(const RationalPoly& p, int dim);
Json expansion_json(const GegenbauerExpansion<Rational>& e);

/// {"N":..,"antipodal":..,"entries":[{"t":"-1","A":1},...]} ascending in t.
Json distribution_json(const DistanceDistribution& d);
DistanceDistribution distribution_from_json(const Json& j);

/// [{"interval":["a","b"],"sign":"+"|"-"|"mixed"}, ...]
Json sign_pattern_json(const SignPattern& p);

Json certificate_json(const BoundCertificate& c);
/// Real-valued fields are parsed at the current Real precision.
BoundCertificate certificate_from_json(const Json& j);

Json checks_json(const std::vector<Check>& checks);

}  // namespace lpcert
