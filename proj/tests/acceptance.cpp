// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include "cli.hpp"
#include "lpcert/certify.hpp"
#include "lpcert/designs.hpp"
#include "lpcert/gegenbauer.hpp"
#include "lpcert/interpolate.hpp"
#include "support/oracles.hpp"
#include "support/published.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lpcert;

namespace {

constexpr double kCoefficientSeconds = 1.0;
constexpr double kSandwichSeconds = 10.0;
constexpr unsigned kDigits = 50;
const char* const kRelativeGap = "1e-30";

Rational q(long p, long d = 1) { return Rational(p, d); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome coefficients() {
  const auto start = std::chrono::steady_clock::now();
  int matched = 0, total = 0;
  std::string mismatch;
  for (const std::string avoid : {"T1", "T2"}) {
    const char* argv[] = {"lpcert", "partial-products", "--avoid", avoid.c_str(), "--bound", "lower"};
    std::ostringstream out, err;
    if (cli::run(6, argv, out, err) != 0) return {false, "partial-products " + avoid + " failed: " + err.str()};
    const auto rows = nlohmann::json::parse(out.str());
    for (int r = 9; r <= 11; ++r) {
      const auto& expected = published::partial_products().at({avoid, r});
      const auto& got = rows.at(static_cast<std::size_t>(r - 1)).at("coeffs");
      for (std::size_t i = 0; i < expected.size(); ++i) {
        ++total;
        if (i < got.size() && got[i] == expected[i])
          ++matched;
        else if (mismatch.empty())
          mismatch = " first mismatch " + avoid + " g_" + std::to_string(i) + "," + std::to_string(r);
      }
      if (got.size() != expected.size()) mismatch += " length differs for r=" + std::to_string(r);
    }
  }
  const double t = seconds_since(start);
  std::ostringstream s;
  s << matched << "/" << total << " rationals match, " << t << " s" << mismatch;
  return {matched == 66 && total == 66 && mismatch.empty() && t < kCoefficientSeconds, s.str()};
}

Outcome distribution() {
  const std::vector<Rational> support = {q(-1), q(-1, 2), q(1, 2), q(-1, 3), q(1, 3), q(-1, 6), q(1, 6), q(0)};
  const auto sol = solve_distribution(support, published::kCardinality, 11, true);
  if (!sol.feasible()) return {false, "solve reported infeasible"};
  int ok = 0;
  for (const auto& c : published::distribution())
    ok += sol.distribution->entries().at(q(c.num, c.den)) == c.count ? 1 : 0;
  const bool all = ok == static_cast<int>(published::distribution().size()) &&
                   sol.distribution->entries().size() == published::distribution().size();
  return {all, std::to_string(ok) + "/8 counts exact"};
}

Outcome moments() {
  const auto d = DistanceDistribution::p48();
  std::string bad;
  for (int i = 1; i <= 14; ++i) {
    const Rational m = moment(d, i);
    if ((i == 12) == (m == 0)) bad += " M_" + std::to_string(i);
  }
  return {bad.empty(), bad.empty() ? "M_1..M_11, M_13, M_14 = 0; M_12/N = " + to_string(moment(d, 12))
                                   : "wrong:" + bad};
}

Outcome quadrature() {
  const auto d = DistanceDistribution::p48();
  const auto rule = quadrature_from(d);
  Rational total(0);
  for (const auto& [t, w] : rule.weights) total += w;
  bool ok = total == 1;
  for (int k = 0; k <= 11; ++k)
    ok = ok && quadrature_residual(rule, RationalPoly::monomial(q(1), static_cast<std::size_t>(k))) == 0;
  const bool t12 = quadrature_residual(rule, RationalPoly::monomial(q(1), 12)) != 0;
  oracle::RationalSource src(11);
  int agree = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const RationalPoly f = src.poly(11);
    const Rational f0_route = expand(f, 48).coeffs[0] * d.cardinality() - f(q(1));
    agree += design_energy(d, f) == f0_route ? 1 : 0;
  }
  return {ok && t12 && agree == 20, std::string("weights sum ") + to_string(total) + ", t^0..t^11 exact, t^12 " +
                                        (t12 ? "nonzero" : "ZERO") + ", routes agree " + std::to_string(agree) +
                                        "/20"};
}

Potential shifted12() {
  std::vector<Rational> c(13, q(0));
  c[12] = 1;
  return Potential::from_shifted_basis(c);
}

std::vector<Potential> exact_suite() { return {Potential::riesz(2), Potential::riesz(4), shifted12()}; }
std::vector<Potential> gaussian_suite() {
  return {Potential::gaussian(q(1, 2)), Potential::gaussian(q(1)), Potential::gaussian(q(2))};
}

Outcome sandwich() {
  const auto start = std::chrono::steady_clock::now();
  CertifyOptions opts;
  opts.precision_digits = kDigits;
  std::string bad;
  for (const auto& h : exact_suite())
    for (const auto& avoid : {AvoidSet::t1(), AvoidSet::t2()}) {
      const auto c = lower_certificate(h, avoid, opts);
      const auto& v = std::get<CertificateValues<Rational>>(c.values);
      if (!c.valid() || !v.gap || *v.gap != 0 || *v.design_energy != design_energy<Rational>(DistanceDistribution::p48(), h))
        bad += " " + h.spec() + "/" + avoid.name();
    }
  Real worst(0);
  for (const auto& h : gaussian_suite()) {
    std::vector<BoundCertificate> certs = {lower_certificate(h, AvoidSet::t1(), opts),
                                           lower_certificate(h, AvoidSet::t2(), opts), upper_certificate(h, AvoidSet::t1(), opts)};
    const PrecisionScope scope(kDigits);
    const Real energy = design_energy<Real>(DistanceDistribution::p48(), h);
    for (const auto& c : certs) {
      const Real rel = abs(std::get<CertificateValues<Real>>(c.values).bound - energy) / abs(energy);
      if (rel > worst) worst = rel;
      if (!c.valid() || !(rel < Real(kRelativeGap))) bad += " " + h.spec() + "/" + to_string(c.direction);
    }
  }
  const double t = seconds_since(start);
  std::ostringstream s;
  s << "exact gaps 0 for 6 lower certificates, worst gaussian relative gap " << worst.str(3, std::ios::scientific)
    << ", " << t << " s" << (bad.empty() ? "" : "; failing:" + bad);
  return {bad.empty() && t < kSandwichSeconds, s.str()};
}

template <class T>
std::string sign_failures(const BoundCertificate& c, bool strict, const std::string& label) {
  const auto& e = std::get<CertificateValues<T>>(c.values).expansion;
  std::string bad;
  for (std::size_t i = 1; i <= 11; ++i) {
    if (c.direction == Direction::lower && c.avoid.id() == AvoidId::T1 && i == 3) continue;
    const bool ok = i < e.coeffs.size() && (strict ? e.coeffs[i] > 0 : e.coeffs[i] >= 0);
    if (!ok) bad += " " + label + ":f_" + std::to_string(i);
  }
  return bad;
}

Outcome sign_patterns() {
  std::string bad;
  for (const auto& h : exact_suite()) {
    bad += sign_failures<Rational>(lower_certificate(h, AvoidSet::t1()), false, h.spec() + "/T1");
    bad += sign_failures<Rational>(lower_certificate(h, AvoidSet::t2()), true, h.spec() + "/T2");
  }
  for (const auto& h : gaussian_suite()) {
    const PrecisionScope scope(kDigits);
    bad += sign_failures<Real>(lower_certificate(h, AvoidSet::t1()), true, h.spec() + "/T1");
    bad += sign_failures<Real>(lower_certificate(h, AvoidSet::t2()), true, h.spec() + "/T2");
  }
  const auto upper = remainder_sign(NodeMultiset::upper_t1(), {}, AvoidSet::t1());
  if (upper.verdict != SignVerdict::nonpositive) bad += " upper remainder " + to_string(upper.verdict);
  for (const auto& h : {shifted12(), Potential::gaussian(q(1, 2)), Potential::gaussian(q(1)), Potential::gaussian(q(2))}) {
    const auto c = upper_certificate(h);
    const Check* rs = c.find_check("remainder_sign");
    if (!rs || !rs->passed) bad += " upper " + h.spec();
  }
  return {bad.empty(), bad.empty() ? "T1 f_i >= 0 off {3}, T2 f_i > 0, upper remainder nonpositive" : "failing:" + bad};
}

Outcome properties() {
  std::string bad;
  const auto gs = oracle::gram_schmidt_gegenbauer(48, 14);
  for (int i = 0; i <= 14; ++i) {
    if (gegenbauer_poly(48, i) != gs[static_cast<std::size_t>(i)]) bad += " P_" + std::to_string(i);
    if (assemble(expand(gegenbauer_poly(48, i), 48)) != gegenbauer_poly(48, i)) bad += " roundtrip" + std::to_string(i);
    for (int j = 0; j <= 14; ++j)
      if (i != j && orthogonality_residual(48, i, j) != 0) bad += " orth(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  oracle::RationalSource src(2025);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalPoly p = src.poly(11);
    const auto h = Potential::polynomial(p);
    if (hermite_interpolant<Rational>(h, NodeMultiset::lower_t1()) != p ||
        hermite_interpolant<Rational>(h, NodeMultiset::lower_t2()) != p)
      bad += " hermite#" + std::to_string(trial);
  }
  for (const auto& m : {NodeMultiset::lower_t1(), NodeMultiset::lower_t2(), NodeMultiset::upper_t1()}) {
    const RationalPoly p = src.poly(15);
    const auto dense = oracle::dense_hermite<Rational>(m.values(), [&](const Rational& t, int k) { return derivative(p, k)(t); });
    if (hermite_interpolant<Rational>(Potential::polynomial(p), m) != dense) bad += " newton-vs-dense";
  }
  struct Config {
    NodeMultiset m;
    AvoidSet avoid;
  };
  for (const auto& c : {Config{NodeMultiset::lower_t1(), AvoidSet::t1()}, Config{NodeMultiset::lower_t2(), AvoidSet::t2()},
                        Config{NodeMultiset::upper_t1(), AvoidSet::t1()}}) {
    const auto pattern = remainder_sign(c.m, {}, c.avoid);
    std::vector<std::pair<Rational, Rational>> pieces;
    std::vector<int> signs;
    for (const auto& iv : pattern.intervals) {
      pieces.emplace_back(iv.lo, iv.hi);
      signs.push_back(iv.sign);
    }
    if (oracle::sampled_piece_signs(c.m.values(), pieces, 4096) != signs) bad += " sampling-" + c.avoid.name();
  }
  return {bad.empty(), bad.empty() ? "basis, round trips, orthogonality, 50 Hermite reproductions, dense and sampled oracles agree"
                                   : "failing:" + bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 coefficient reproduction", coefficients}, {"2 distance distribution", distribution},
      {"3 moments", moments},                       {"4 quadrature", quadrature},
      {"5 bound equality sandwich", sandwich},      {"6 sign patterns", sign_patterns},
      {"7 property suites", properties},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
