#include "lpcert/certify.hpp"

#include <algorithm>
#include <sstream>

namespace lpcert {

namespace {

using boost::multiprecision::abs;

Real power_of_ten(int exponent) { return boost::multiprecision::pow(Real(10), exponent); }

template <class T>
bool agrees(const T& a, const T& b, const Tolerances& tol);

template <>
bool agrees<Rational>(const Rational& a, const Rational& b, const Tolerances&) {
  return a == b;
}

template <>
bool agrees<Real>(const Real& a, const Real& b, const Tolerances& tol) {
  const Real scale = std::max({Real(1), Real(abs(a)), Real(abs(b))});
  return abs(a - b) <= tol.relative * scale;
}

template <class T>
bool poly_agrees(const std::vector<T>& a, const std::vector<T>& b, const Tolerances& tol) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const T x = k < a.size() ? a[k] : T(0);
    const T y = k < b.size() ? b[k] : T(0);
    if (!agrees(x, y, tol)) return false;
  }
  return true;
}

template <class T>
T f0_of(const GegenbauerExpansion<T>& e) {
  return e.coeffs.empty() ? T(0) : e.coeffs.front();
}

template <class T>
bool is_exact_zero_gap(const T& gap, const T& energy, const Tolerances& tol);

template <>
bool is_exact_zero_gap<Rational>(const Rational& gap, const Rational&, const Tolerances&) {
  return gap == 0;
}

template <>
bool is_exact_zero_gap<Real>(const Real& gap, const Real& energy, const Tolerances& tol) {
  return abs(gap) <= tol.relative * std::max(Real(1), Real(abs(energy)));
}

template <class T>
Check interpolation_check(const Potential& h, const NodeMultiset& nodes, const Poly<T>& f, const Tolerances& tol) {
  for (const auto& node : nodes.distinct()) {
    const T a(node.value);
    for (int k = 0; k < node.multiplicity; ++k) {
      const T fk = derivative(f, k)(a);
      const T hk = evaluate<T>(h, a, k);
      if (!agrees(fk, hk, tol))
        return {"interpolation_conditions", false,
                "order " + std::to_string(k) + " mismatch at t = " + to_string(node.value) + ": f = " + to_string(fk) +
                    ", h = " + to_string(hk)};
    }
  }
  return {"interpolation_conditions", true, "values and derivatives match at every node up to multiplicity"};
}

Check remainder_check(Direction dir, const NodeMultiset& nodes, const AvoidSet& avoid) {
  const SignPattern pattern = remainder_sign(nodes, {}, avoid);
  const SignVerdict expected = dir == Direction::lower ? SignVerdict::nonnegative : SignVerdict::nonpositive;
  std::ostringstream detail;
  detail << "node polynomial is " << to_string(pattern.verdict) << " on [-1,1] \\ " << avoid.name()
         << " (expected " << to_string(expected) << ")";
  return {"remainder_sign", pattern.verdict == expected, detail.str()};
}

/// Sampled one-sided check of s (h - f) >= 0 off the avoided set, with the
/// curvature condition at repeated nodes where the difference is tangent.
Check tangency_check(Direction dir, const Potential& h, const RealPoly& f, const NodeMultiset& nodes,
                     const AvoidSet& avoid, const CertifyOptions& opts, const Tolerances& tol) {
  const Real s(dir == Direction::lower ? 1 : -1);
  std::optional<Real> worst;
  std::optional<Real> worst_at;
  const int k = std::max(opts.samples_per_piece, 1);
  for (const auto& [lo, hi] : avoid.complement()) {
    const Real a(lo);
    const Real width = Real(hi) - a;
    for (int j = 0; j <= k + 1; ++j) {
      const Real t = a + width * j / (k + 1);
      if (t >= 1 && !h.finite_at_one()) continue;
      const Real d = s * (h.eval(t) - f(t));
      if (!worst || d < *worst) {
        worst = d;
        worst_at = t;
      }
    }
  }
  if (worst && *worst < -tol.margin_value)
    return {"one_sided_margin", false,
            "s(h - f) = " + to_string(*worst) + " at t = " + to_string(*worst_at) + " below -" +
                to_string(tol.margin_value)};

  const RealPoly f2 = derivative(f, 2);
  std::optional<Real> worst_curvature;
  for (const auto& node : nodes.distinct()) {
    if (node.multiplicity < 2) continue;
    const Real a(node.value);
    const Real c = s * (h.eval(a, 2) - f2(a));
    if (!worst_curvature || c < *worst_curvature) worst_curvature = c;
    if (c < -tol.margin_curvature)
      return {"one_sided_margin", false,
              "curvature s(h - f)'' = " + to_string(c) + " at repeated node " + to_string(node.value)};
  }
  std::string detail = "min sampled s(h - f) = " + (worst ? to_string(*worst) : std::string("n/a"));
  if (worst_curvature) detail += ", min curvature at repeated nodes = " + to_string(*worst_curvature);
  return {"one_sided_margin", true, detail};
}

template <class T>
BoundCertificate build(Direction dir, const Potential& h, const AvoidSet& avoid, const NodeMultiset& nodes,
                       AdmissibilityClass cls, const CertifyOptions& opts) {
  const Tolerances tol = Tolerances::for_digits(opts.precision_digits);
  CertificateValues<T> v;
  v.interpolant = hermite_interpolant<T>(h, nodes);
  v.expansion = expand(v.interpolant, opts.dim);
  const T n(opts.cardinality);
  v.bound = f0_of(v.expansion) * n - v.interpolant(T(1));

  std::vector<Check> checks;
  checks.push_back(interpolation_check(h, nodes, v.interpolant, tol));
  checks.push_back(remainder_check(dir, nodes, avoid));
  if constexpr (std::is_same_v<T, Real>) {
    checks.push_back(tangency_check(dir, h, v.interpolant, nodes, avoid, opts, tol));
  }
  {
    std::string why;
    const bool ok = cls.admits(v.expansion, &why);
    const SignReport report = sign_report(v.expansion, cls.exceptions());
    std::string detail = ok ? "coefficient condition of " + cls.name() + " holds" : why;
    if (!report.negative.empty()) {
      detail += "; negative indices:";
      for (int i : report.negative) detail += " " + std::to_string(i);
    }
    checks.push_back({"gegenbauer_signs", ok, detail});
  }

  if (opts.reference && opts.reference->cardinality() == opts.cardinality) {
    const DistanceDistribution& ref = *opts.reference;
    try {
      const QuadratureRule q = quadrature_from(ref, opts.dim);
      if (v.interpolant.degree() > q.exactness) {
        checks.push_back({"quadrature_route", false,
                          "interpolant degree " + std::to_string(v.interpolant.degree()) +
                              " exceeds quadrature exactness " + std::to_string(q.exactness)});
      } else {
        const T route = q.apply(v.interpolant) * n - v.interpolant(T(1));
        checks.push_back({"quadrature_route", agrees(route, v.bound, tol),
                          "abscissa-sum bound " + to_string(route) + " vs f_0 N - f(1) = " + to_string(v.bound)});
      }
    } catch (const QuadratureError& e) {
      checks.push_back({"quadrature_route", false, e.what()});
    }
    v.design_energy = design_energy<T>(ref, h);
    v.gap = v.bound - *v.design_energy;
    checks.push_back({"equality_gap", is_exact_zero_gap(*v.gap, *v.design_energy, tol),
                      "bound - design energy = " + to_string(*v.gap)});
  }

  return BoundCertificate{dir,    opts.dim, opts.cardinality, avoid, nodes, h.spec(), std::move(cls),
                          std::move(v), std::move(checks)};
}

BoundCertificate build_any(Direction dir, const Potential& h, const AvoidSet& avoid, const NodeMultiset& nodes,
                           AdmissibilityClass cls, const CertifyOptions& opts) {
  if (opts.precision_digits < kMinPrecisionDigits)
    throw CertificateError("precision must be at least " + std::to_string(kMinPrecisionDigits) + " digits");
  if (opts.cardinality < 2) throw CertificateError("cardinality must be at least 2");
  const PrecisionScope scope(opts.precision_digits);
  try {
    if (h.exact_at_rationals()) return build<Rational>(dir, h, avoid, nodes, std::move(cls), opts);
    return build<Real>(dir, h, avoid, nodes, std::move(cls), opts);
  } catch (const PotentialDomainError& e) {
    throw CertificateError(e.what());
  } catch (const std::domain_error& e) {
    throw CertificateError(e.what());
  }
}

void require_derivative_claim(const Potential& h) {
  if (!h.claims_abs_monotone() && !h.claims_positive_12th())
    throw CertificateError(h.spec() + " claims neither absolute monotonicity nor a positive 12th derivative");
}

template <class T>
void compare_values(const BoundCertificate& cert, const CertificateValues<T>& stored,
                    const CertificateValues<T>& fresh, const Tolerances& tol, std::vector<Check>& out) {
  out.push_back({"interpolant_matches", poly_agrees(stored.interpolant.coeffs(), fresh.interpolant.coeffs(), tol),
                 "stored interpolant against re-interpolation"});
  out.push_back({"expansion_matches",
                 stored.expansion.dim == fresh.expansion.dim &&
                     poly_agrees(stored.expansion.coeffs, fresh.expansion.coeffs, tol),
                 "stored Gegenbauer coefficients against re-expansion"});
  {
    GegenbauerExpansion<T> e = stored.expansion;
    e.dim = cert.dim;
    out.push_back({"expansion_assembles", poly_agrees(assemble(e).coeffs(), stored.interpolant.coeffs(), tol),
                   "stored expansion reassembles to the stored interpolant"});
  }
  {
    std::string why;
    const bool ok = cert.admissibility.admits(stored.expansion, &why);
    out.push_back({"sign_condition", ok,
                   ok ? "stored coefficients satisfy " + cert.admissibility.name() : why});
  }
  {
    const T n(cert.cardinality);
    const T from_stored = f0_of(stored.expansion) * n - stored.interpolant(T(1));
    const bool ok = agrees(stored.bound, from_stored, tol) && agrees(stored.bound, fresh.bound, tol);
    out.push_back({"bound_recomputation", ok,
                   "stored " + to_string(stored.bound) + ", from stored f_0 " + to_string(from_stored) +
                       ", re-derived " + to_string(fresh.bound)});
  }
  {
    bool ok = stored.design_energy.has_value() == fresh.design_energy.has_value();
    if (ok && stored.design_energy) ok = agrees(*stored.design_energy, *fresh.design_energy, tol);
    out.push_back({"design_energy_matches", ok, "stored reference energy against direct summation"});
  }
  {
    bool ok = stored.gap.has_value() == stored.design_energy.has_value();
    if (ok && stored.gap) ok = agrees(*stored.gap, T(stored.bound - *stored.design_energy), tol);
    out.push_back({"gap_recomputation", ok, "stored gap equals stored bound minus stored energy"});
  }
}

}  // namespace

std::string to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

Direction parse_direction(std::string_view s) {
  if (s == "lower") return Direction::lower;
  if (s == "upper") return Direction::upper;
  throw std::invalid_argument("direction must be 'lower' or 'upper', got '" + std::string(s) + "'");
}

Tolerances Tolerances::for_digits(unsigned digits) {
  const int d = static_cast<int>(digits);
  return {digits, power_of_ten(-(d - 20)), power_of_ten(-(d - 25)), power_of_ten(-(d - 30))};
}

AdmissibilityClass AdmissibilityClass::all_codes() {
  return {Kind::all_codes, 0, {}, "all codes avoiding T"};
}

AdmissibilityClass AdmissibilityClass::design_tau(int tau) {
  return {Kind::design_tau, tau, {}, "spherical " + std::to_string(tau) + "-designs avoiding T"};
}

AdmissibilityClass AdmissibilityClass::moment_exceptions(std::set<int> exceptions, std::string narrative) {
  return {Kind::moment_exceptions, 0, std::move(exceptions), std::move(narrative)};
}

AdmissibilityClass AdmissibilityClass::antipodal_or_3_design() {
  return moment_exceptions({3}, "antipodal or spherical 3-design");
}

AdmissibilityClass AdmissibilityClass::antipodal(int max_degree) {
  std::set<int> odd;
  for (int i = 1; i <= max_degree; i += 2) odd.insert(i);
  return moment_exceptions(std::move(odd), "antipodal codes avoiding T (all odd moments vanish)");
}

AdmissibilityClass AdmissibilityClass::upper_all_codes() {
  return {Kind::upper_all_codes, 0, {}, "all codes avoiding T"};
}

AdmissibilityClass AdmissibilityClass::upper_design_tau(int tau) {
  return {Kind::upper_design_tau, tau, {}, "spherical " + std::to_string(tau) + "-designs avoiding T"};
}

AdmissibilityClass AdmissibilityClass::from_parts(std::string_view name, int tau, std::set<int> exceptions) {
  if (name == "ALL_CODES") return all_codes();
  if (name == "DESIGN_TAU") return design_tau(tau);
  if (name == "MOMENT_EXCEPTIONS") {
    if (exceptions == std::set<int>{3}) return antipodal_or_3_design();
    return moment_exceptions(std::move(exceptions), "codes avoiding T whose listed moments vanish");
  }
  if (name == "UPPER_ALL_CODES") return upper_all_codes();
  if (name == "UPPER_DESIGN_TAU") return upper_design_tau(tau);
  throw std::invalid_argument("unknown admissibility class '" + std::string(name) + "'");
}

std::string AdmissibilityClass::name() const {
  switch (kind_) {
    case Kind::all_codes:
      return "ALL_CODES";
    case Kind::design_tau:
      return "DESIGN_TAU";
    case Kind::moment_exceptions:
      return "MOMENT_EXCEPTIONS";
    case Kind::upper_all_codes:
      return "UPPER_ALL_CODES";
    case Kind::upper_design_tau:
      return "UPPER_DESIGN_TAU";
  }
  return "?";
}

Direction AdmissibilityClass::direction() const {
  return kind_ == Kind::upper_all_codes || kind_ == Kind::upper_design_tau ? Direction::upper : Direction::lower;
}

std::string to_string(const Scalar& x) {
  return std::visit([](const auto& v) { return lpcert::to_string(v); }, x);
}

bool BoundCertificate::valid() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* BoundCertificate::find_check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Scalar BoundCertificate::bound() const {
  return std::visit([](const auto& v) -> Scalar { return v.bound; }, values);
}

std::optional<Scalar> BoundCertificate::gap() const {
  return std::visit(
      [](const auto& v) -> std::optional<Scalar> {
        if (!v.gap) return std::nullopt;
        return Scalar(*v.gap);
      },
      values);
}

std::optional<Scalar> BoundCertificate::design_energy() const {
  return std::visit(
      [](const auto& v) -> std::optional<Scalar> {
        if (!v.design_energy) return std::nullopt;
        return Scalar(*v.design_energy);
      },
      values);
}

BoundCertificate lower_certificate(const Potential& h, const AvoidSet& avoid, const CertifyOptions& opts) {
  require_derivative_claim(h);
  if (avoid.id() == AvoidId::T1)
    return build_any(Direction::lower, h, avoid, NodeMultiset::lower_t1(), AdmissibilityClass::antipodal_or_3_design(),
                     opts);
  return build_any(Direction::lower, h, avoid, NodeMultiset::lower_t2(), AdmissibilityClass::all_codes(), opts);
}

BoundCertificate upper_certificate(const Potential& h, const AvoidSet& avoid, const CertifyOptions& opts) {
  if (!h.finite_at_one())
    throw CertificateError(h.spec() + " is infinite at t = 1; upper bounds need a potential finite at 1");
  require_derivative_claim(h);
  if (avoid.id() != AvoidId::T1) throw CertificateError("upper bounds are available for T1 only");
  return build_any(Direction::upper, h, avoid, NodeMultiset::upper_t1(), AdmissibilityClass::upper_design_tau(11),
                   opts);
}

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport verify_certificate(const BoundCertificate& cert, const CertifyOptions& base) {
  VerificationReport report;
  auto& out = report.checks;
  CertifyOptions opts = base;
  opts.dim = cert.dim;
  opts.cardinality = cert.cardinality;
  const PrecisionScope scope(std::max(opts.precision_digits, kMinPrecisionDigits));
  const Tolerances tol = Tolerances::for_digits(std::max(opts.precision_digits, kMinPrecisionDigits));

  std::optional<Potential> h;
  try {
    h = parse_potential(cert.potential);
    out.push_back({"potential_parses", true, cert.potential});
  } catch (const std::exception& e) {
    out.push_back({"potential_parses", false, e.what()});
    return report;
  }

  out.push_back({"class_direction", cert.admissibility.direction() == cert.direction,
                 cert.admissibility.name() + " used for a " + to_string(cert.direction) + " bound"});

  std::optional<BoundCertificate> fresh;
  try {
    fresh = cert.direction == Direction::lower ? lower_certificate(*h, cert.avoid, opts)
                                               : upper_certificate(*h, cert.avoid, opts);
    out.push_back({"rebuild", true, "certificate re-derived from potential, avoid set and direction"});
  } catch (const std::exception& e) {
    out.push_back({"rebuild", false, e.what()});
    return report;
  }

  out.push_back({"nodes_match", cert.nodes == fresh->nodes, "stored nodes against the built-in multiset"});
  if (cert.values.index() != fresh->values.index()) {
    out.push_back({"scalar_kind", false, "stored scalar kind differs from the potential's"});
    return report;
  }
  if (cert.exact())
    compare_values(cert, std::get<CertificateValues<Rational>>(cert.values),
                   std::get<CertificateValues<Rational>>(fresh->values), tol, out);
  else
    compare_values(cert, std::get<CertificateValues<Real>>(cert.values),
                   std::get<CertificateValues<Real>>(fresh->values), tol, out);

  // The fresh build's own checks use the fresh class; the stored class was
  // judged by sign_condition above.
  for (const auto& c : fresh->checks) out.push_back({"rederived_" + c.name, c.passed, c.detail});
  return report;
}

SandwichReport sandwich_report(const Potential& h, const CertifyOptions& opts) {
  SandwichReport r{lower_certificate(h, AvoidSet::t1(), opts), lower_certificate(h, AvoidSet::t2(), opts),
                   std::nullopt, std::nullopt, false};
  if (h.finite_at_one()) r.upper_t1 = upper_certificate(h, AvoidSet::t1(), opts);
  r.design_energy = r.lower_t1.design_energy();
  if (!r.design_energy) return r;

  const PrecisionScope scope(opts.precision_digits);
  const Tolerances tol = Tolerances::for_digits(opts.precision_digits);
  const auto same = [&](const Scalar& a, const Scalar& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Rational>(a)) return std::get<Rational>(a) == std::get<Rational>(b);
    return agrees(std::get<Real>(a), std::get<Real>(b), tol);
  };
  r.all_equal = r.lower_t1.valid() && r.lower_t2.valid() && same(r.lower_t1.bound(), *r.design_energy) &&
                same(r.lower_t2.bound(), *r.design_energy);
  if (r.upper_t1) r.all_equal = r.all_equal && r.upper_t1->valid() && same(r.upper_t1->bound(), *r.design_energy);
  return r;
}

}  // namespace lpcert
