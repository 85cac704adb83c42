#pragma once

// Interpolation node multisets, confluent divided differences, Newton-form
// Hermite interpolants, partial products of the node polynomial and the sign
// of the interpolation remainder factor off an avoided set.

#include "lpcert/gegenbauer.hpp"
#include "lpcert/potentials.hpp"
#include "lpcert/ratpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpcert {

inline constexpr std::size_t kMaxNodes = 16;

class NodeMultisetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered interpolation nodes; equal values must be adjacent so that the
/// confluent divided-difference table is well defined.
class NodeMultiset {
 public:
  struct Node {
    Rational value;
    int multiplicity;
  };

  explicit NodeMultiset(std::vector<Rational> nodes);

  /// Built-in configurations on [-1, 1]:
  ///   lower_t1  doubles at -1, -1/2, 0, 1/2; singles at -1/3, -1/6, 1/6, 1/3
  ///   lower_t2  doubles at -1, -1/6, 0, 1/6; singles at -1/2, -1/3, 1/3, 1/2
  ///   upper_t1  doubles at -1/2, 0, 1/2; singles at -1, -1/3, -1/6, 1/6, 1/3, 1
  static NodeMultiset lower_t1();
  static NodeMultiset lower_t2();
  static NodeMultiset upper_t1();

  const std::vector<Rational>& values() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const Rational& operator[](std::size_t i) const { return nodes_[i]; }
  std::vector<Node> distinct() const;
  int max_multiplicity() const;

  friend bool operator==(const NodeMultiset&, const NodeMultiset&) = default;

 private:
  std::vector<Rational> nodes_;
};

struct OpenInterval {
  Rational lo;
  Rational hi;
};

enum class AvoidId { T1, T2 };

/// Union of open subintervals of [-1, 1) whose inner products a code avoids.
class AvoidSet {
 public:
  /// (-1/3, -1/6) ∪ (1/6, 1/3)
  static AvoidSet t1();
  /// (-1/2, -1/3) ∪ (1/3, 1/2)
  static AvoidSet t2();
  static AvoidSet of(AvoidId id) { return id == AvoidId::T1 ? t1() : t2(); }
  /// "T1" or "T2"; throws std::invalid_argument otherwise.
  static AvoidSet parse(std::string_view name);

  AvoidId id() const { return id_; }
  std::string name() const { return id_ == AvoidId::T1 ? "T1" : "T2"; }
  const std::vector<OpenInterval>& intervals() const { return intervals_; }

  template <class T>
  bool contains(const T& t) const {
    for (const auto& iv : intervals_)
      if (T(iv.lo) < t && t < T(iv.hi)) return true;
    return false;
  }

  /// Closed maximal pieces of [-1, 1] outside the set, ascending.
  std::vector<std::pair<Rational, Rational>> complement() const;

 private:
  AvoidSet(AvoidId id, std::vector<OpenInterval> intervals) : id_(id), intervals_(std::move(intervals)) {}
  AvoidId id_;
  std::vector<OpenInterval> intervals_;
};

/// columns[k][i] = h[t_i, ..., t_{i+k}]. The Newton coefficients are the
/// leading entries columns[k][0].
template <class T>
struct DividedDifferenceTable {
  NodeMultiset nodes;
  std::vector<std::vector<T>> columns;

  std::vector<T> leading() const {
    std::vector<T> out;
    out.reserve(columns.size());
    for (const auto& col : columns) out.push_back(col.front());
    return out;
  }
};

/// Standard confluent recursion: a run of k+1 equal nodes yields h^(k)/k!.
template <class T>
DividedDifferenceTable<T> divided_differences(const Potential& h, const NodeMultiset& m) {
  const std::size_t n = m.size();
  if (m.max_multiplicity() - 1 > kMaxDerivativeOrder)
    throw NodeMultisetError("node multiplicity exceeds the available derivative orders");
  DividedDifferenceTable<T> table{m, {}};
  std::vector<T> nodes;
  nodes.reserve(n);
  for (const auto& v : m.values()) nodes.emplace_back(T(v));

  table.columns.emplace_back();
  for (const auto& t : nodes) table.columns[0].push_back(evaluate<T>(h, t, 0));
  T factorial(1);
  for (std::size_t k = 1; k < n; ++k) {
    factorial *= T(static_cast<long>(k));
    const auto& prev = table.columns[k - 1];
    std::vector<T> col;
    col.reserve(n - k);
    for (std::size_t i = 0; i + k < n; ++i) {
      if (m[i] == m[i + k]) {
        col.push_back(evaluate<T>(h, nodes[i], static_cast<int>(k)) / factorial);
      } else {
        col.push_back((prev[i + 1] - prev[i]) / (nodes[i + k] - nodes[i]));
      }
    }
    table.columns.push_back(std::move(col));
  }
  return table;
}

/// f = sum_r h[t_1..t_{r+1}] (t - t_1)...(t - t_r).
template <class T>
Poly<T> newton_form(const DividedDifferenceTable<T>& table) {
  Poly<T> out;
  Poly<T> basis = Poly<T>::constant(T(1));
  const auto coeffs = table.leading();
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    out += basis * coeffs[r];
    basis = basis * Poly<T>({-T(table.nodes[r]), T(1)});
  }
  return out;
}

/// Degree <= |m| - 1 polynomial matching h and its derivatives up to each
/// node's multiplicity minus one.
template <class T>
Poly<T> hermite_interpolant(const Potential& h, const NodeMultiset& m) {
  return newton_form(divided_differences<T>(h, m));
}

struct PartialProduct {
  int r;
  RationalPoly poly;                          // (t - t_1)...(t - t_r)
  GegenbauerExpansion<Rational> expansion;
};

/// Prefix products for r = 1 .. |m| - 1 with their exact Gegenbauer expansions.
std::vector<PartialProduct> partial_products(const NodeMultiset& m, int dim);

enum class SignVerdict { nonnegative, nonpositive, mixed };

struct SignedInterval {
  Rational lo;
  Rational hi;
  int sign;  // +1: R >= 0 throughout, -1: R <= 0 throughout, 0: changes sign
};

struct SignPattern {
  std::vector<SignedInterval> intervals;
  SignVerdict verdict;
};

std::string to_string(SignVerdict v);

/// Sign of R(t) = prod (t - t_i) * prod (t - extra) on each closed piece of
/// [-1, 1] outside the avoided set, decided from the parity of root
/// multiplicities (no sampling).
SignPattern remainder_sign(const NodeMultiset& m, const std::vector<Rational>& extra_roots, const AvoidSet& avoid);

}  // namespace lpcert
