#pragma once

// Distance distributions of distance-invariant spherical codes, the energies
// and Gegenbauer moments they induce, the quadrature rule of a design and the
// linear solve that recovers a distribution from design constraints.

#include "lpcert/gegenbauer.hpp"
#include "lpcert/potentials.hpp"
#include "lpcert/ratpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpcert {

inline constexpr int kDefaultDim = 48;
inline constexpr std::int64_t kP48Cardinality = 52'416'000;

class DistributionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cardinality N and the number A_t of code points at inner product t from
/// any fixed point. Validated on construction: counts are nonnegative, every
/// t lies in [-1, 1), sum A_t = N - 1, and an antipodal distribution has
/// A_{-1} = 1 and A_t = A_{-t}.
class DistanceDistribution {
 public:
  DistanceDistribution(std::int64_t cardinality, std::map<Rational, std::int64_t> entries, bool antipodal);

  /// Common distribution of the four extremal 11-designs on S^47.
  static DistanceDistribution p48();

  std::int64_t cardinality() const { return cardinality_; }
  const std::map<Rational, std::int64_t>& entries() const { return entries_; }
  bool antipodal() const { return antipodal_; }
  Rational max_inner_product() const { return entries_.rbegin()->first; }

  friend bool operator==(const DistanceDistribution&, const DistanceDistribution&) = default;

 private:
  std::int64_t cardinality_;
  std::map<Rational, std::int64_t> entries_;
  bool antipodal_;
};

/// sum_t A_t h(t), the per-point h-energy of the code.
template <class T>
T design_energy(const DistanceDistribution& d, const Potential& h) {
  T acc(0);
  for (const auto& [t, count] : d.entries()) acc += T(count) * evaluate<T>(h, T(t), 0);
  return acc;
}

template <class T>
T design_energy(const DistanceDistribution& d, const Poly<T>& p) {
  T acc(0);
  for (const auto& [t, count] : d.entries()) acc += T(count) * p(T(t));
  return acc;
}

/// M_i / N = sum_t A_t P_i(t) + P_i(1).
Rational moment(const DistanceDistribution& d, int i, int dim = kDefaultDim);

class QuadratureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nodes including +1 with weights A_t / N (and 1/N at t = 1); averages every
/// polynomial of degree <= exactness to its f_0 coefficient.
struct QuadratureRule {
  int dim = kDefaultDim;
  std::map<Rational, Rational> weights;
  int exactness = 0;

  template <class T>
  T apply(const Poly<T>& p) const {
    T acc(0);
    for (const auto& [t, w] : weights) acc += T(w) * p(T(t));
    return acc;
  }
};

/// Throws QuadratureError("not a design distribution") when M_1 != 0.
QuadratureRule quadrature_from(const DistanceDistribution& d, int dim = kDefaultDim);

/// sum w p(node) - f_0(p).
Rational quadrature_residual(const QuadratureRule& q, const RationalPoly& p);

class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The overdetermined constraint system has no solution at all.
class InconsistentSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DistributionSolution {
  std::map<Rational, Rational> raw;  // exact solution of the linear system
  bool nonnegative = false;
  bool integral = false;
  bool consistent = false;           // every constraint, including omitted odd ones, holds
  std::optional<DistanceDistribution> distribution;  // set iff the solution is realizable

  bool feasible() const { return distribution.has_value(); }
};

/// Solves sum A_t = N - 1 and sum A_t P_i(t) + 1 = 0 for 1 <= i <= strength
/// (even i only, with A_t = A_{-t}, when antipodal). Throws
/// SingularSystemError when the constraints do not determine the counts and
/// InconsistentSystemError when they contradict each other.
DistributionSolution solve_distribution(const std::vector<Rational>& inner_products, std::int64_t cardinality,
                                        int strength, bool antipodal, int dim = kDefaultDim);

}  // namespace lpcert
