#pragma once

// Gegenbauer polynomials normalized by P_i(1) = 1, orthogonal for the weight
// (1 - t^2)^((n-3)/2) on [-1, 1], and conversion between the monomial and
// Gegenbauer bases.

#include "lpcert/ratpoly.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpcert {

/// Degrees kept in the per-dimension cache; higher degrees are built on demand.
inline constexpr int kCachedGegenbauerDegree = 14;

class GegenbauerBasis {
 public:
  /// Throws std::domain_error for n < 3.
  explicit GegenbauerBasis(int dim, int max_degree = kCachedGegenbauerDegree);

  int dim() const { return dim_; }
  int max_degree() const { return static_cast<int>(polys_.size()) - 1; }
  const RationalPoly& operator[](int i) const { return polys_.at(static_cast<std::size_t>(i)); }

 private:
  int dim_;
  std::vector<RationalPoly> polys_;
};

/// Shared read-only basis for dimension n holding at least degrees 0..max_degree.
/// Safe to call concurrently.
const GegenbauerBasis& gegenbauer_basis(int dim, int max_degree = kCachedGegenbauerDegree);

/// P_i^{(n)} from the three-term recurrence
///   (i + n - 3) P_i = (2i + n - 4) t P_{i-1} - (i - 1) P_{i-2}.
RationalPoly gegenbauer_poly(int dim, int i);

template <class T>
struct GegenbauerExpansion {
  int dim = 0;
  std::vector<T> coeffs;  // coeffs[i] multiplies P_i^{(dim)}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const GegenbauerExpansion&, const GegenbauerExpansion&) = default;
};

/// Exact back-substitution against the triangular change of basis: the
/// leading monomial of what remains fixes the next coefficient.
template <class T>
GegenbauerExpansion<T> expand(const Poly<T>& p, int dim) {
  const int d = p.degree();
  GegenbauerExpansion<T> out{dim, {}};
  if (d < 0) return out;
  const GegenbauerBasis& basis = gegenbauer_basis(dim, d);
  out.coeffs.assign(static_cast<std::size_t>(d) + 1, T(0));
  std::vector<T> rem = p.coeffs();
  for (int k = d; k >= 0; --k) {
    const RationalPoly& pk = basis[k];
    const T fk = rem[static_cast<std::size_t>(k)] / T(pk.leading());
    out.coeffs[static_cast<std::size_t>(k)] = fk;
    for (int j = 0; j <= k; ++j) rem[static_cast<std::size_t>(j)] -= fk * T(pk.coeff(static_cast<std::size_t>(j)));
  }
  return out;
}

template <class T>
Poly<T> assemble(const GegenbauerExpansion<T>& e) {
  Poly<T> out;
  if (e.coeffs.empty()) return out;
  const GegenbauerBasis& basis = gegenbauer_basis(e.dim, e.degree());
  for (int i = 0; i <= e.degree(); ++i) out += convert<T>(basis[i]) * e.coeffs[static_cast<std::size_t>(i)];
  return out;
}

/// Normalized even moment of the weight: mu_k = int t^k w / int w.
/// Odd moments are zero.
Rational weight_moment(int dim, int k);

/// <p, 1> / <1, 1> under the weight, i.e. the f_0 coefficient, summed from
/// weight moments rather than from the basis change.
Rational weight_average(const RationalPoly& p, int dim);

/// <P_i, P_j> / <1, 1>; zero exactly when i != j.
Rational orthogonality_residual(int dim, int i, int j);

enum class Sign { negative, zero, positive };

struct SignReport {
  std::vector<Sign> signs;        // signs[i] for i = 1..degree; signs[0] unused
  std::vector<int> negative;      // every negative index i >= 1
  std::set<int> exceptions;
  bool admissible = true;         // no negative index outside the exceptions
};

template <class T>
SignReport sign_report(const GegenbauerExpansion<T>& e, const std::set<int>& exceptions = {}) {
  SignReport r;
  r.exceptions = exceptions;
  r.signs.assign(e.coeffs.size(), Sign::zero);
  for (std::size_t i = 1; i < e.coeffs.size(); ++i) {
    const int s = e.coeffs[i].sign();
    r.signs[i] = s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
    if (s < 0) {
      r.negative.push_back(static_cast<int>(i));
      if (!exceptions.contains(static_cast<int>(i))) r.admissible = false;
    }
  }
  return r;
}

}  // namespace lpcert
