#include "cli.hpp"

#include "lpcert/certify.hpp"
#include "lpcert/designs.hpp"
#include "lpcert/gegenbauer.hpp"
#include "lpcert/interpolate.hpp"
#include "lpcert/json_io.hpp"
#include "lpcert/potentials.hpp"
#include "lpcert/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace lpcert::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned precision = kDefaultPrecisionDigits;
  std::string format = "json";
  std::string out_path;
};

/// Writes the command's primary output to --out when given, else to stdout.
class Output {
 public:
  Output(const Globals& g, std::ostream& out) : globals_(g), out_(out) {}

  bool table() const { return globals_.format == "table"; }

  void emit(const std::string& text) {
    if (globals_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(globals_.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + globals_.out_path);
    file << text;
  }

  void emit(const Json& j) { emit(j.dump(2) + "\n"); }

  const Globals& globals() const { return globals_; }
  std::ostream& console() { return out_; }

 private:
  const Globals& globals_;
  std::ostream& out_;
};

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(k)) s += digits[c - '0'];
  return s;
}

/// Human rendering with a common denominator, e.g. "(48t²−1)/47".
std::string render_poly(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  std::string body;
  int terms = 0;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k)) * den;
    if (c == 0) continue;
    const Integer n = boost::multiprecision::numerator(c);
    const Integer mag = n < 0 ? Integer(-n) : n;
    if (terms == 0)
      body += n < 0 ? "−" : "";
    else
      body += n < 0 ? "−" : "+";
    if (mag != 1 || k == 0) body += mag.str();
    if (k >= 1) body += "t";
    if (k >= 2) body += superscript(k);
    ++terms;
  }
  if (den == 1) return body;
  return "(" + body + ")/" + den.str();
}

std::vector<Rational> parse_rational_list(std::string text) {
  std::string_view s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw UsageError("unbalanced brackets in '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> out;
  if (s.find_first_not_of(" \t") == std::string_view::npos) return out;
  while (true) {
    const auto comma = s.find(',');
    try {
      out.push_back(parse_rational(s.substr(0, comma)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

DistanceDistribution load_distribution(const std::string& path) {
  if (path.empty()) return DistanceDistribution::p48();
  try {
    return distribution_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    throw UsageError(e.what());
  }
}

Potential load_potential(const std::string& spec) {
  try {
    return parse_potential(spec);
  } catch (const PotentialSpecError& e) {
    throw UsageError(e.what());
  }
}

AvoidSet load_avoid(const std::string& name) {
  try {
    return AvoidSet::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string table_of_checks(const std::vector<Check>& checks) {
  std::ostringstream s;
  for (const auto& c : checks) s << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << c.name << "  " << c.detail << "\n";
  return s.str();
}

int cmd_gegenbauer(Output& out, int dim, int max_degree) {
  if (dim < 3) throw UsageError("dimension must be ≥ 3");
  if (max_degree < 0) throw UsageError("max degree must be ≥ 0");
  const GegenbauerBasis& basis = gegenbauer_basis(dim, max_degree);
  if (out.table()) {
    std::ostringstream s;
    for (int i = 0; i <= max_degree; ++i) s << "P_" << i << "  " << render_poly(basis[i]) << "\n";
    out.emit(s.str());
  } else {
    Json j = Json::array();
    for (int i = 0; i <= max_degree; ++i) j.push_back(poly_json(basis[i], dim));
    out.emit(j);
  }
  return kOk;
}

int cmd_expand(Output& out, int dim, const std::string& poly) {
  if (dim < 3) throw UsageError("dimension must be ≥ 3");
  const RationalPoly p(parse_rational_list(poly));
  const auto e = expand(p, dim);
  if (out.table()) {
    std::ostringstream s;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) s << "f_" << i << "  " << to_string(e.coeffs[i]) << "\n";
    out.emit(s.str());
  } else {
    out.emit(expansion_json(e));
  }
  return kOk;
}

int cmd_partial_products(Output& out, const std::string& avoid_name, const std::string& bound, int dim) {
  if (dim < 3) throw UsageError("dimension must be ≥ 3");
  const AvoidSet avoid = load_avoid(avoid_name);
  Direction dir;
  try {
    dir = parse_direction(bound);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (dir == Direction::upper && avoid.id() != AvoidId::T1) throw UsageError("upper bounds are available for T1 only");
  const NodeMultiset nodes = dir == Direction::upper
                                 ? NodeMultiset::upper_t1()
                                 : (avoid.id() == AvoidId::T1 ? NodeMultiset::lower_t1() : NodeMultiset::lower_t2());
  const auto products = partial_products(nodes, dim);
  if (out.table()) {
    std::ostringstream s;
    for (const auto& pp : products) {
      s << "PP_" << pp.r << ":";
      for (const auto& c : pp.expansion.coeffs) s << " " << to_string(c);
      s << "\n";
    }
    out.emit(s.str());
  } else {
    Json j = Json::array();
    for (const auto& pp : products) {
      Json e;
      e["r"] = pp.r;
      const Json body = expansion_json(pp.expansion);
      for (const auto& [k, v] : body.items()) e[k] = v;
      j.push_back(std::move(e));
    }
    out.emit(j);
  }
  return kOk;
}

int cmd_distribution_solve(Output& out, const std::string& support, std::int64_t n, int strength, bool antipodal,
                           int dim) {
  DistributionSolution sol;
  try {
    sol = solve_distribution(parse_rational_list(support), n, strength, antipodal, dim);
  } catch (const DistributionError& e) {
    throw UsageError(e.what());
  } catch (const SingularSystemError& e) {
    throw UsageError(e.what());
  } catch (const InconsistentSystemError& e) {
    Json j;
    j["feasible"] = false;
    j["reason"] = e.what();
    out.emit(j);
    return kInfeasible;
  }
  if (sol.distribution) {
    if (out.table()) {
      std::ostringstream s;
      s << "N " << n << "\n";
      for (const auto& [t, a] : sol.distribution->entries()) s << "A_" << to_string(t) << "  " << a << "\n";
      out.emit(s.str());
    } else {
      out.emit(distribution_json(*sol.distribution));
    }
    return kOk;
  }
  Json j;
  j["feasible"] = false;
  j["reason"] = "infeasible for a realizable code";
  j["nonnegative"] = sol.nonnegative;
  j["integral"] = sol.integral;
  j["consistent"] = sol.consistent;
  Json raw = Json::array();
  for (const auto& [t, a] : sol.raw) raw.push_back(Json{{"t", to_string(t)}, {"A", to_string(a)}});
  j["raw"] = std::move(raw);
  if (out.table()) {
    std::ostringstream s;
    s << "INFEASIBLE (nonnegative " << sol.nonnegative << ", integral " << sol.integral << ", consistent "
      << sol.consistent << ")\n";
    for (const auto& [t, a] : sol.raw) s << "A_" << to_string(t) << "  " << to_string(a) << "\n";
    out.emit(s.str());
  } else {
    out.emit(j);
  }
  return kInfeasible;
}

int cmd_energy(Output& out, const std::string& spec, const std::string& dist_path) {
  const Potential h = load_potential(spec);
  const DistanceDistribution d = load_distribution(dist_path);
  std::string value;
  try {
    value = h.exact_at_rationals() ? to_string(design_energy<Rational>(d, h)) : to_string(design_energy<Real>(d, h));
  } catch (const PotentialDomainError& e) {
    throw UsageError(e.what());
  }
  if (out.table()) {
    out.emit(h.spec() + "  " + value + "\n");
  } else {
    Json j;
    j["potential"] = h.spec();
    j["N"] = d.cardinality();
    j["energy"] = value;
    out.emit(j);
  }
  return kOk;
}

int cmd_moments(Output& out, int max_degree, const std::string& dist_path, int dim) {
  if (dim < 3) throw UsageError("dimension must be ≥ 3");
  const DistanceDistribution d = load_distribution(dist_path);
  Json list = Json::array();
  std::ostringstream s;
  for (int i = 0; i <= max_degree; ++i) {
    const Rational m = moment(d, i, dim);
    list.push_back(Json{{"i", i}, {"M_over_N", to_string(m)}, {"M", to_string(Rational(m * d.cardinality()))}});
    s << "M_" << i << "/N  " << to_string(m) << "\n";
  }
  if (out.table()) {
    out.emit(s.str());
  } else {
    Json j;
    j["dim"] = dim;
    j["N"] = d.cardinality();
    j["moments"] = std::move(list);
    out.emit(j);
  }
  return kOk;
}

int cmd_quadrature_check(Output& out, int max_degree, const std::string& dist_path, int dim) {
  if (dim < 3) throw UsageError("dimension must be ≥ 3");
  const DistanceDistribution d = load_distribution(dist_path);
  QuadratureRule q;
  try {
    q = quadrature_from(d, dim);
  } catch (const QuadratureError& e) {
    throw UsageError(e.what());
  }
  Rational total(0);
  Json weights = Json::array();
  for (const auto& [t, w] : q.weights) {
    total += w;
    weights.push_back(Json{{"t", to_string(t)}, {"w", to_string(w)}});
  }
  Json monomials = Json::array();
  Json gegenbauer = Json::array();
  std::ostringstream s;
  s << "exactness  " << q.exactness << "\nweight sum  " << to_string(total) << "\n";
  for (int k = 0; k <= max_degree; ++k) {
    const Rational r = quadrature_residual(q, RationalPoly::monomial(Rational(1), static_cast<std::size_t>(k)));
    const Rational g = quadrature_residual(q, gegenbauer_poly(dim, k));
    monomials.push_back(Json{{"degree", k}, {"residual", to_string(r)}});
    gegenbauer.push_back(Json{{"degree", k}, {"residual", to_string(g)}});
    s << "t^" << k << "  " << to_string(r) << "    P_" << k << "  " << to_string(g) << "\n";
  }
  if (out.table()) {
    out.emit(s.str());
  } else {
    Json j;
    j["dim"] = dim;
    j["exactness"] = q.exactness;
    j["weight_sum"] = to_string(total);
    j["weights"] = std::move(weights);
    j["monomial_residuals"] = std::move(monomials);
    j["gegenbauer_residuals"] = std::move(gegenbauer);
    out.emit(j);
  }
  return kOk;
}

CertifyOptions certify_options(const Globals& g) {
  CertifyOptions opts;
  opts.precision_digits = g.precision;
  return opts;
}

std::string certificate_table(const BoundCertificate& c) {
  std::ostringstream s;
  s << "direction  " << to_string(c.direction) << "\navoid      " << c.avoid.name() << "\npotential  " << c.potential
    << "\nclass      " << c.admissibility.name() << "\nbound      " << to_string(c.bound()) << "\n";
  if (const auto e = c.design_energy()) s << "energy     " << to_string(*e) << "\n";
  if (const auto g = c.gap()) s << "gap        " << to_string(*g) << "\n";
  s << "status     " << (c.valid() ? "VALID" : "INVALID") << "\n" << table_of_checks(c.checks);
  return s.str();
}

int cmd_certify(Output& out, const std::string& direction, const std::string& avoid_name, const std::string& spec) {
  const Potential h = load_potential(spec);
  const AvoidSet avoid = load_avoid(avoid_name);
  BoundCertificate cert = [&] {
    try {
      return parse_direction(direction) == Direction::lower ? lower_certificate(h, avoid, certify_options(out.globals()))
                                                            : upper_certificate(h, avoid, certify_options(out.globals()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (out.table())
    out.emit(certificate_table(cert));
  else
    out.emit(certificate_json(cert));
  if (!out.globals().out_path.empty()) {
    out.console() << (cert.valid() ? "VALID" : "INVALID") << " bound " << to_string(cert.bound());
    if (const auto g = cert.gap()) out.console() << " gap " << to_string(*g);
    out.console() << "\n";
  }
  return cert.valid() ? kOk : kFailed;
}

int cmd_verify(Output& out, const std::string& path) {
  const Json j = read_json_file(path);
  const PrecisionScope scope(out.globals().precision);
  BoundCertificate cert = [&] {
    try {
      return certificate_from_json(j);
    } catch (const FormatError& e) {
      throw UsageError("malformed certificate: " + std::string(e.what()));
    }
  }();
  const VerificationReport report = verify_certificate(cert, certify_options(out.globals()));
  if (out.table()) {
    out.emit(std::string(report.passed() ? "PASS" : "FAIL") + "\n" + table_of_checks(report.checks));
  } else {
    Json r;
    r["passed"] = report.passed();
    r["checks"] = checks_json(report.checks);
    out.emit(r);
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_sandwich(Output& out, const std::string& spec) {
  const Potential h = load_potential(spec);
  SandwichReport s = [&] {
    try {
      return sandwich_report(h, certify_options(out.globals()));
    } catch (const CertificateError& e) {
      throw UsageError(e.what());
    }
  }();
  const auto entry = [](const BoundCertificate& c) {
    return Json{{"bound", to_string(c.bound())}, {"valid", c.valid()}};
  };
  if (out.table()) {
    std::ostringstream t;
    t << "lower T1  " << to_string(s.lower_t1.bound()) << (s.lower_t1.valid() ? "" : "  (INVALID)") << "\n";
    t << "lower T2  " << to_string(s.lower_t2.bound()) << (s.lower_t2.valid() ? "" : "  (INVALID)") << "\n";
    if (s.upper_t1) t << "upper T1  " << to_string(s.upper_t1->bound()) << (s.upper_t1->valid() ? "" : "  (INVALID)") << "\n";
    if (s.design_energy) t << "energy    " << to_string(*s.design_energy) << "\n";
    t << (s.all_equal ? "EQUAL" : "NOT EQUAL") << "\n";
    out.emit(t.str());
  } else {
    Json j;
    j["potential"] = h.spec();
    j["lower_T1"] = entry(s.lower_t1);
    j["lower_T2"] = entry(s.lower_t2);
    j["upper_T1"] = s.upper_t1 ? entry(*s.upper_t1) : Json(nullptr);
    j["design_energy"] = s.design_energy ? Json(to_string(*s.design_energy)) : Json(nullptr);
    j["all_equal"] = s.all_equal;
    out.emit(j);
  }
  return s.all_equal ? kOk : kFailed;
}

int cmd_reproduce(Output& out, const std::vector<std::string>& corrupt) {
  ReferenceTables tables = ReferenceTables::builtin();
  for (const auto& key : corrupt) {
    try {
      tables.corrupt(key);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const Checklist list = reproduce_reference(tables, out.globals().precision);
  std::size_t passed = 0;
  for (const auto& item : list.items) passed += item.passed ? 1 : 0;
  if (out.table()) {
    std::ostringstream s;
    for (const auto& item : list.items)
      s << (item.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << item.name << "  " << item.detail << "\n";
    s << passed << "/" << list.items.size() << " items passed\n";
    out.emit(s.str());
  } else {
    Json items = Json::array();
    for (const auto& item : list.items)
      items.push_back(Json{{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
    Json j;
    j["passed"] = list.passed();
    j["count"] = list.items.size();
    j["failed"] = list.items.size() - passed;
    j["items"] = std::move(items);
    out.emit(j);
  }
  return list.passed() ? kOk : kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear-programming energy bounds for T-avoiding spherical codes"};
  app.name("lpcert");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--precision", g.precision, "Decimal digits for float-kind potentials")
      ->check(CLI::Range(kMinPrecisionDigits, 100000u));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", g.out_path, "Write the primary output to this file");

  int dim = kDefaultDim;
  int max_degree = 14;
  std::string poly, avoid = "T1", bound = "lower", potential, dist_path, direction, cert_path;
  std::string support = "-1,-1/2,-1/3,-1/6,0,1/6,1/3,1/2";
  std::int64_t cardinality = kP48Cardinality;
  int strength = 11;
  bool antipodal = true;
  std::vector<std::string> corrupt;

  auto* gegen = app.add_subcommand("gegenbauer", "Print normalized Gegenbauer polynomials");
  gegen->add_option("--dim", dim, "Dimension n >= 3");
  gegen->add_option("--max-degree", max_degree, "Highest degree");

  auto* exp = app.add_subcommand("expand", "Gegenbauer expansion of a polynomial");
  exp->add_option("--dim", dim);
  exp->add_option("--poly", poly, "Monomial coefficients [c0,c1,...]")->required();

  auto* pp = app.add_subcommand("partial-products", "Expansions of the partial node products");
  pp->add_option("--avoid", avoid, "T1 or T2");
  pp->add_option("--bound", bound, "lower or upper");
  pp->add_option("--dim", dim);

  auto* dist = app.add_subcommand("distribution", "Distance distributions");
  dist->require_subcommand(1);
  auto* solve = dist->add_subcommand("solve", "Recover a distribution from design constraints");
  solve->add_option("--support", support, "Comma-separated inner products");
  solve->add_option("--N", cardinality, "Code cardinality");
  solve->add_option("--strength", strength, "Design strength");
  solve->add_flag("--antipodal,!--no-antipodal", antipodal, "Antipodal code (default)");
  solve->add_option("--dim", dim);

  auto* energy = app.add_subcommand("energy", "h-energy of a distance distribution");
  energy->add_option("--potential", potential)->required();
  energy->add_option("--distribution", dist_path, "Distribution JSON (default: built-in)");

  auto* moments = app.add_subcommand("moments", "Gegenbauer moments M_i/N of a distribution");
  moments->add_option("--max-degree", max_degree);
  moments->add_option("--distribution", dist_path);
  moments->add_option("--dim", dim);

  auto* quad = app.add_subcommand("quadrature-check", "Residuals of the design quadrature rule");
  quad->add_option("--max-degree", max_degree);
  quad->add_option("--distribution", dist_path);
  quad->add_option("--dim", dim);

  auto* certify = app.add_subcommand("certify", "Build a bound certificate");
  certify->add_option("direction", direction, "lower or upper")->required()->check(CLI::IsMember({"lower", "upper"}));
  certify->add_option("--avoid", avoid);
  certify->add_option("--potential", potential)->required();

  auto* verify = app.add_subcommand("verify", "Re-verify a certificate file");
  verify->add_option("certificate", cert_path)->required();

  auto* sandwich = app.add_subcommand("sandwich", "Lower, upper and design energy side by side");
  sandwich->add_option("--potential", potential)->required();

  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute every built-in reference value");
  reproduce->add_option("--corrupt-reference", corrupt, "Perturb a reference entry (self-test)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const PrecisionScope scope(g.precision);
    Output output(g, out);
    if (gegen->parsed()) return cmd_gegenbauer(output, dim, max_degree);
    if (exp->parsed()) return cmd_expand(output, dim, poly);
    if (pp->parsed()) return cmd_partial_products(output, avoid, bound, dim);
    if (solve->parsed()) return cmd_distribution_solve(output, support, cardinality, strength, antipodal, dim);
    if (energy->parsed()) return cmd_energy(output, potential, dist_path);
    if (moments->parsed()) return cmd_moments(output, max_degree, dist_path, dim);
    if (quad->parsed()) return cmd_quadrature_check(output, max_degree, dist_path, dim);
    if (certify->parsed()) return cmd_certify(output, direction, avoid, potential);
    if (verify->parsed()) return cmd_verify(output, cert_path);
    if (sandwich->parsed()) return cmd_sandwich(output, potential);
    if (reproduce->parsed()) return cmd_reproduce(output, corrupt);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace lpcert::cli
