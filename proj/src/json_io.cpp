#include "lpcert/json_io.hpp"

namespace lpcert {

namespace {

template <class T>
Json scalar_list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

template <class T>
T parse_scalar(const Json& v, const char* what) {
  if (!v.is_string()) throw FormatError(std::string(what) + " entries must be strings");
  try {
    if constexpr (std::is_same_v<T, Rational>)
      return parse_rational(v.get<std::string>());
    else
      return parse_real(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

template <class T>
std::vector<T> parse_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  std::vector<T> out;
  for (const auto& x : v) out.push_back(parse_scalar<T>(x, key));
  return out;
}

template <class T>
std::optional<T> parse_optional(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return parse_scalar<T>(v, key);
}

template <class T>
CertificateValues<T> parse_values(const Json& j, int dim) {
  CertificateValues<T> v;
  v.interpolant = Poly<T>(parse_list<T>(j, "interpolant_coeffs"));
  v.expansion = {dim, parse_list<T>(j, "gegenbauer_coeffs")};
  v.bound = parse_scalar<T>(field(j, "bound"), "bound");
  v.design_energy = parse_optional<T>(j, "design_energy");
  v.gap = parse_optional<T>(j, "gap");
  return v;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(to_string(*x)) : Json(nullptr);
}

}  // namespace

Json poly_json(const RationalPoly& p, int dim) {
  Json j;
  j["dim"] = dim;
  j["degree"] = p.degree();
  j["coeffs"] = scalar_list(p.coeffs());
  return j;
}

Json expansion_json(const GegenbauerExpansion<Rational>& e) {
  Json j;
  j["dim"] = e.dim;
  j["degree"] = e.degree();
  j["coeffs"] = scalar_list(e.coeffs);
  return j;
}

Json distribution_json(const DistanceDistribution& d) {
  Json j;
  j["N"] = d.cardinality();
  j["antipodal"] = d.antipodal();
  Json entries = Json::array();
  for (const auto& [t, a] : d.entries()) {
    Json e;
    e["t"] = to_string(t);
    e["A"] = a;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

DistanceDistribution distribution_from_json(const Json& j) {
  try {
    const Json& n = field(j, "N");
    const Json& antipodal = field(j, "antipodal");
    const Json& entries = field(j, "entries");
    if (!n.is_number_integer() || !antipodal.is_boolean() || !entries.is_array())
      throw FormatError("distribution fields have the wrong types");
    std::map<Rational, std::int64_t> counts;
    for (const auto& e : entries) {
      const Json& a = field(e, "A");
      if (!a.is_number_integer()) throw FormatError("count 'A' must be an integer");
      const Rational t = parse_scalar<Rational>(field(e, "t"), "t");
      if (!counts.emplace(t, a.get<std::int64_t>()).second) throw FormatError("duplicate inner product " + to_string(t));
    }
    return DistanceDistribution(n.get<std::int64_t>(), std::move(counts), antipodal.get<bool>());
  } catch (const DistributionError& e) {
    throw FormatError(e.what());
  }
}

Json sign_pattern_json(const SignPattern& p) {
  Json out = Json::array();
  for (const auto& iv : p.intervals) {
    Json e;
    e["interval"] = Json::array({to_string(iv.lo), to_string(iv.hi)});
    e["sign"] = iv.sign > 0 ? "+" : (iv.sign < 0 ? "-" : "mixed");
    out.push_back(std::move(e));
  }
  return out;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    out.push_back(std::move(e));
  }
  return out;
}

Json certificate_json(const BoundCertificate& c) {
  Json j;
  j["direction"] = to_string(c.direction);
  j["dim"] = c.dim;
  j["N"] = c.cardinality;
  j["avoid"] = c.avoid.name();
  j["nodes"] = scalar_list(c.nodes.values());
  j["potential"] = c.potential;
  std::visit(
      [&](const auto& v) {
        j["interpolant_coeffs"] = scalar_list(v.interpolant.coeffs());
        j["gegenbauer_coeffs"] = scalar_list(v.expansion.coeffs);
      },
      c.values);
  j["sign_exceptions"] = Json(std::vector<int>(c.admissibility.exceptions().begin(), c.admissibility.exceptions().end()));
  Json cls;
  cls["name"] = c.admissibility.name();
  if (c.admissibility.kind() == AdmissibilityClass::Kind::design_tau ||
      c.admissibility.kind() == AdmissibilityClass::Kind::upper_design_tau)
    cls["tau"] = c.admissibility.tau();
  cls["narrative"] = c.admissibility.narrative();
  if (c.direction == Direction::lower)
    cls["equality_case"] = "equality forces an antipodal 11-design with the reference distance distribution (cited, not checked)";
  j["class"] = std::move(cls);
  std::visit(
      [&](const auto& v) {
        j["bound"] = to_string(v.bound);
        j["design_energy"] = optional_json(v.design_energy);
        j["gap"] = optional_json(v.gap);
      },
      c.values);
  j["checks"] = checks_json(c.checks);
  return j;
}

BoundCertificate certificate_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw FormatError("certificate must be a JSON object");
    const Direction direction = parse_direction(string_field(j, "direction"));
    const Json& dim = field(j, "dim");
    const Json& n = field(j, "N");
    if (!dim.is_number_integer() || !n.is_number_integer()) throw FormatError("'dim' and 'N' must be integers");
    const AvoidSet avoid = AvoidSet::parse(string_field(j, "avoid"));
    NodeMultiset nodes(parse_list<Rational>(j, "nodes"));
    const std::string potential = string_field(j, "potential");
    const Potential h = parse_potential(potential);

    const Json& exceptions_json = field(j, "sign_exceptions");
    if (!exceptions_json.is_array()) throw FormatError("'sign_exceptions' must be an array");
    std::set<int> exceptions;
    for (const auto& e : exceptions_json) {
      if (!e.is_number_integer()) throw FormatError("'sign_exceptions' entries must be integers");
      exceptions.insert(e.get<int>());
    }
    const Json& cls = field(j, "class");
    const int tau = cls.contains("tau") && cls.at("tau").is_number_integer() ? cls.at("tau").get<int>() : 0;
    AdmissibilityClass admissibility = AdmissibilityClass::from_parts(string_field(cls, "name"), tau, exceptions);

    std::vector<Check> checks;
    const Json& checks_in = field(j, "checks");
    if (!checks_in.is_array()) throw FormatError("'checks' must be an array");
    for (const auto& c : checks_in) {
      const Json& passed = field(c, "passed");
      if (!passed.is_boolean()) throw FormatError("check 'passed' must be a boolean");
      checks.push_back({string_field(c, "name"), passed.get<bool>(), string_field(c, "detail")});
    }

    const int d = dim.get<int>();
    std::variant<CertificateValues<Rational>, CertificateValues<Real>> values;
    if (h.exact_at_rationals())
      values = parse_values<Rational>(j, d);
    else
      values = parse_values<Real>(j, d);
    return BoundCertificate{direction, d,        n.get<std::int64_t>(), avoid, std::move(nodes), potential,
                            std::move(admissibility), std::move(values), std::move(checks)};
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace lpcert
