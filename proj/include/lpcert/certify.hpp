#pragma once

// Linear-programming energy bounds for T-avoiding codes, built from Hermite
// interpolants of the potential and re-verifiable as self-contained
// certificates.
//
// A lower bound f_0 N - f(1) holds for every code whose moments pair with
// f's Gegenbauer coefficients nonnegatively; an upper bound g_0 N - g(1)
// holds for designs of strength at least deg g when g >= h off the avoided
// set.

#include "lpcert/designs.hpp"
#include "lpcert/gegenbauer.hpp"
#include "lpcert/interpolate.hpp"
#include "lpcert/potentials.hpp"
#include "lpcert/ratpoly.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lpcert {

inline constexpr unsigned kDefaultPrecisionDigits = 50;
inline constexpr unsigned kMinPrecisionDigits = 30;

/// Raised when a certificate cannot be built at all (precondition failure),
/// as opposed to being built and found INVALID.
class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Direction { lower, upper };

std::string to_string(Direction d);
Direction parse_direction(std::string_view s);

/// Float-kind tolerances. At 50 digits: relative gap and interpolation
/// residual 1e-30, one-sided margin 1e-25, tangency curvature 1e-20. Each
/// shifts by one decade per digit of precision.
struct Tolerances {
  unsigned digits;
  Real relative;
  Real margin_value;
  Real margin_curvature;

  static Tolerances for_digits(unsigned digits);
};

class AdmissibilityClass {
 public:
  enum class Kind { all_codes, design_tau, moment_exceptions, upper_all_codes, upper_design_tau };

  /// f_i >= 0 for every i >= 1.
  static AdmissibilityClass all_codes();
  /// deg f <= tau.
  static AdmissibilityClass design_tau(int tau);
  /// f_i >= 0 outside `exceptions`; valid for codes with M_i = 0 on them.
  static AdmissibilityClass moment_exceptions(std::set<int> exceptions, std::string narrative);
  /// E = {3}: codes with M_3 = 0, which covers antipodal codes and 3-designs.
  static AdmissibilityClass antipodal_or_3_design();
  /// E = odd indices up to max_degree: antipodal codes.
  static AdmissibilityClass antipodal(int max_degree);
  /// g_i <= 0 for every i >= 1.
  static AdmissibilityClass upper_all_codes();
  /// deg g <= tau.
  static AdmissibilityClass upper_design_tau(int tau);

  /// Inverse of name()/tau()/exceptions() as stored in certificates.
  static AdmissibilityClass from_parts(std::string_view name, int tau, std::set<int> exceptions);

  Kind kind() const { return kind_; }
  int tau() const { return tau_; }
  const std::set<int>& exceptions() const { return exceptions_; }
  const std::string& narrative() const { return narrative_; }
  std::string name() const;
  Direction direction() const;

  /// Checks the coefficient condition; on failure `why` names the offending indices.
  template <class T>
  bool admits(const GegenbauerExpansion<T>& e, std::string* why = nullptr) const;

  friend bool operator==(const AdmissibilityClass& a, const AdmissibilityClass& b) {
    return a.kind_ == b.kind_ && a.tau_ == b.tau_ && a.exceptions_ == b.exceptions_;
  }

 private:
  AdmissibilityClass(Kind kind, int tau, std::set<int> exceptions, std::string narrative)
      : kind_(kind), tau_(tau), exceptions_(std::move(exceptions)), narrative_(std::move(narrative)) {}

  Kind kind_;
  int tau_;
  std::set<int> exceptions_;
  std::string narrative_;
};

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

template <class T>
struct CertificateValues {
  Poly<T> interpolant;
  GegenbauerExpansion<T> expansion;
  T bound;
  std::optional<T> design_energy;
  std::optional<T> gap;  // bound - design_energy
};

using Scalar = std::variant<Rational, Real>;
std::string to_string(const Scalar& x);

struct BoundCertificate {
  Direction direction;
  int dim;
  std::int64_t cardinality;
  AvoidSet avoid;
  NodeMultiset nodes;
  std::string potential;
  AdmissibilityClass admissibility;
  std::variant<CertificateValues<Rational>, CertificateValues<Real>> values;
  std::vector<Check> checks;

  bool exact() const { return std::holds_alternative<CertificateValues<Rational>>(values); }
  bool valid() const;
  const Check* find_check(std::string_view name) const;
  Scalar bound() const;
  std::optional<Scalar> gap() const;
  std::optional<Scalar> design_energy() const;
};

struct CertifyOptions {
  int dim = kDefaultDim;
  std::int64_t cardinality = kP48Cardinality;
  /// Distribution whose energy the bound is compared against; it is only
  /// used when its cardinality matches.
  std::optional<DistanceDistribution> reference = DistanceDistribution::p48();
  unsigned precision_digits = kDefaultPrecisionDigits;
  /// Interior sample points per closed piece of [-1, 1] \ T for the
  /// float-kind one-sided check.
  int samples_per_piece = 512;
};

/// Interpolates h on the lower multiset for T (T1: classes with M_3 = 0;
/// T2: all codes). Throws CertificateError when h does not claim the
/// required derivative signs.
BoundCertificate lower_certificate(const Potential& h, const AvoidSet& avoid, const CertifyOptions& opts = {});

/// Interpolates h on the upper multiset (T1 only); valid for 11-designs.
/// Throws CertificateError when h is infinite at 1 or lacks the derivative claim.
BoundCertificate upper_certificate(const Potential& h, const AvoidSet& avoid = AvoidSet::t1(),
                                   const CertifyOptions& opts = {});

struct VerificationReport {
  std::vector<Check> checks;
  bool passed() const;
};

/// Re-derives the certificate from its raw inputs (potential, avoid set,
/// direction, dim, N) and checks every stored value against the fresh one
/// and against its own internal identities.
VerificationReport verify_certificate(const BoundCertificate& cert, const CertifyOptions& opts = {});

struct SandwichReport {
  BoundCertificate lower_t1;
  BoundCertificate lower_t2;
  std::optional<BoundCertificate> upper_t1;  // absent when h is infinite at 1
  std::optional<Scalar> design_energy;
  bool all_equal = false;
};

SandwichReport sandwich_report(const Potential& h, const CertifyOptions& opts = {});

template <class T>
bool AdmissibilityClass::admits(const GegenbauerExpansion<T>& e, std::string* why) const {
  std::string offending;
  const auto note = [&](std::size_t i) {
    if (!offending.empty()) offending += ",";
    offending += std::to_string(i);
  };
  switch (kind_) {
    case Kind::design_tau:
    case Kind::upper_design_tau:
      if (e.degree() > tau_) {
        if (why) *why = "degree " + std::to_string(e.degree()) + " exceeds tau = " + std::to_string(tau_);
        return false;
      }
      return true;
    case Kind::all_codes:
    case Kind::moment_exceptions:
      for (std::size_t i = 1; i < e.coeffs.size(); ++i)
        if (e.coeffs[i] < 0 && !exceptions_.contains(static_cast<int>(i))) note(i);
      break;
    case Kind::upper_all_codes:
      for (std::size_t i = 1; i < e.coeffs.size(); ++i)
        if (e.coeffs[i] > 0) note(i);
      break;
  }
  if (why) *why = offending.empty() ? "" : "wrong-sign coefficients at indices " + offending;
  return offending.empty();
}

}  // namespace lpcert
