#pragma once

// Exact rational scalars, high-precision reals and dense univariate
// polynomials over either of them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpcert {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Scientific notation carrying every stored digit.
std::string to_string(const Real& x);

/// Parses "p", "p/q" or a finite decimal such as "-0.25". Throws
/// std::invalid_argument on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

Real parse_real(std::string_view text);

/// Sets the working precision of newly created Real values for the lifetime
/// of the scope, restoring the previous one afterwards.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// Dense polynomial; coeffs()[k] multiplies t^k. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient list.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> cs(k + 1, T(0));
    cs[k] = c;
    return Poly(std::move(cs));
  }

  /// The identity polynomial t.
  static Poly identity() { return monomial(T(1), 1); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  /// Horner evaluation.
  T operator()(const T& t) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  Poly& operator/=(const T& s) {
    for (auto& c : coeffs_) c /= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= T(-1); }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const T& s) { return a /= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPoly = Poly<Rational>;
using RealPoly = Poly<Real>;

template <class T>
T eval(const Poly<T>& p, const T& t) {
  return p(t);
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly<T>();
  std::vector<T> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * T(static_cast<long>(k));
  return Poly<T>(std::move(out));
}

template <class T>
Poly<T> derivative(const Poly<T>& p, int order) {
  Poly<T> out = p;
  for (int k = 0; k < order; ++k) out = derivative(out);
  return out;
}

/// Monic product of (t - r) over the listed roots; repeated roots allowed.
template <class T>
Poly<T> from_roots(std::span<const T> roots) {
  Poly<T> out = Poly<T>::constant(T(1));
  for (const auto& r : roots) out = out * Poly<T>({-r, T(1)});
  return out;
}

template <class T>
Poly<T> from_roots(const std::vector<T>& roots) {
  return from_roots(std::span<const T>(roots));
}

/// Coefficient-wise conversion, e.g. rational to real.
template <class U, class T>
Poly<U> convert(const Poly<T>& p) {
  std::vector<U> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(U(c));
  return Poly<U>(std::move(out));
}

}  // namespace lpcert
