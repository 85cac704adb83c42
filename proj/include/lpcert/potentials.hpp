#pragma once

// Potential functions h(t) of the inner product t, with derivative oracles.
//
// Distances and inner products are related by |x - y|^2 = 2 - 2t on the unit
// sphere. Built-in kinds:
//   polynomial   h = sum c_k (1 + t)^k with c_k >= 0 (absolutely monotone)
//   riesz(s)     h = (2 - 2t)^(-s/2)
//   gaussian(σ)  h = exp(2σ(t - 1))

#include "lpcert/ratpoly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpcert {

inline constexpr int kMaxDerivativeOrder = 13;

/// Raised for malformed potential specifiers; the CLI maps it to a usage error.
class PotentialSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a potential is evaluated outside its domain (t = 1 for a
/// singular kernel, |t| > 1) or beyond the supported derivative order.
class PotentialDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class PotentialKind { polynomial, riesz, gaussian, custom };

class Potential {
 public:
  using RealOracle = std::function<Real(const Real& t, int order)>;

  struct Flags {
    bool exact_at_rationals = false;
    bool finite_at_one = true;
    bool claims_abs_monotone = false;
    bool claims_positive_12th = false;
  };

  /// Arbitrary rational polynomial; absolutely monotone only if the caller says so.
  static Potential polynomial(RationalPoly p, bool claims_abs_monotone = false);
  /// Sum c_k (1 + t)^k; every c_k must be nonnegative.
  static Potential from_shifted_basis(std::vector<Rational> c);
  static Potential riesz(int s);
  static Potential gaussian(const Rational& sigma);
  /// Real-valued oracle with caller-supplied metadata. Not serializable.
  static Potential custom(std::string name, RealOracle oracle, Flags flags);

  PotentialKind kind() const { return kind_; }
  const Flags& flags() const { return flags_; }
  bool exact_at_rationals() const { return flags_.exact_at_rationals; }
  bool finite_at_one() const { return flags_.finite_at_one; }
  bool claims_abs_monotone() const { return flags_.claims_abs_monotone; }
  bool claims_positive_12th() const { return flags_.claims_positive_12th; }

  /// Specifier string that parse_potential() maps back to this potential.
  const std::string& spec() const { return spec_; }

  /// Polynomial kind only.
  const RationalPoly& poly() const { return poly_; }

  /// h^(k)(t) exactly. Requires exact_at_rationals().
  Rational eval_exact(const Rational& t, int order = 0) const;

  /// h^(k)(t) at the current Real precision.
  Real eval(const Real& t, int order = 0) const;

 private:
  Potential() = default;
  void check_domain(int cmp_to_one, bool below_minus_one, int order) const;

  PotentialKind kind_ = PotentialKind::custom;
  std::string spec_;
  Flags flags_;
  RationalPoly poly_;
  int riesz_s_ = 0;
  Rational sigma_;
  RealOracle oracle_;
};

/// Grammar: `poly:[c0,c1,...]` (shifted basis), `riesz:s=<int>`,
/// `gauss:sigma=<rational>`.
Potential parse_potential(std::string_view spec);

/// Scalar-generic access: exact for Rational, high precision for Real.
template <class T>
T evaluate(const Potential& h, const T& t, int order = 0);

template <>
inline Rational evaluate<Rational>(const Potential& h, const Rational& t, int order) {
  return h.eval_exact(t, order);
}

template <>
inline Real evaluate<Real>(const Potential& h, const Real& t, int order) {
  return h.eval(t, order);
}

/// Numerical falsification check of absolute monotonicity on a grid. A pass
/// is evidence, not a proof.
struct AbsMonotoneWitness {
  std::vector<Real> min_per_order;  // index k = derivative order
  bool all_nonnegative = true;
  std::optional<int> first_failing_order;
  std::optional<Real> first_failing_point;
  std::string note = "falsification check on a finite grid, not a proof";
};

AbsMonotoneWitness abs_monotone_witness(const Potential& h, const std::vector<Real>& grid, int max_order);

}  // namespace lpcert
