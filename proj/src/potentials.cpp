#include "lpcert/potentials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lpcert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_order(int order) {
  if (order < 0 || order > kMaxDerivativeOrder)
    throw PotentialDomainError("derivative order " + std::to_string(order) + " outside 0.." +
                               std::to_string(kMaxDerivativeOrder));
}

std::string join_rationals(const std::vector<Rational>& cs) {
  std::string out = "[";
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k) out += ",";
    out += to_string(cs[k]);
  }
  return out + "]";
}

}  // namespace

Potential Potential::polynomial(RationalPoly p, bool claims_abs_monotone) {
  Potential h;
  h.kind_ = PotentialKind::polynomial;
  h.spec_ = "monomial:" + join_rationals(p.coeffs());
  h.flags_ = {.exact_at_rationals = true,
              .finite_at_one = true,
              .claims_abs_monotone = claims_abs_monotone,
              .claims_positive_12th = false};
  h.poly_ = std::move(p);
  return h;
}

Potential Potential::from_shifted_basis(std::vector<Rational> c) {
  for (const auto& ck : c)
    if (ck < 0) throw PotentialSpecError("shifted-basis coefficients must be nonnegative, got " + to_string(ck));
  RationalPoly p;
  RationalPoly power = RationalPoly::constant(1);
  const RationalPoly one_plus_t({Rational(1), Rational(1)});
  bool positive_12th = false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    p += power * c[k];
    power = power * one_plus_t;
    if (k >= 12 && c[k] > 0) positive_12th = true;
  }
  Potential h = polynomial(std::move(p), true);
  h.flags_.claims_positive_12th = positive_12th;
  h.spec_ = "poly:" + join_rationals(c);
  return h;
}

Potential Potential::riesz(int s) {
  if (s <= 0) throw PotentialSpecError("riesz exponent must be a positive integer, got " + std::to_string(s));
  Potential h;
  h.kind_ = PotentialKind::riesz;
  h.spec_ = "riesz:s=" + std::to_string(s);
  h.riesz_s_ = s;
  h.flags_ = {.exact_at_rationals = s % 2 == 0,
              .finite_at_one = false,
              .claims_abs_monotone = true,
              .claims_positive_12th = true};
  return h;
}

Potential Potential::gaussian(const Rational& sigma) {
  if (sigma <= 0) throw PotentialSpecError("gaussian sigma must be positive, got " + to_string(sigma));
  Potential h;
  h.kind_ = PotentialKind::gaussian;
  h.spec_ = "gauss:sigma=" + to_string(sigma);
  h.sigma_ = sigma;
  h.flags_ = {.exact_at_rationals = false,
              .finite_at_one = true,
              .claims_abs_monotone = true,
              .claims_positive_12th = true};
  return h;
}

Potential Potential::custom(std::string name, RealOracle oracle, Flags flags) {
  Potential h;
  h.kind_ = PotentialKind::custom;
  h.spec_ = "custom:" + std::move(name);
  flags.exact_at_rationals = false;
  h.flags_ = flags;
  h.oracle_ = std::move(oracle);
  return h;
}

void Potential::check_domain(int cmp_to_one, bool below_minus_one, int order) const {
  check_order(order);
  if (cmp_to_one > 0 || below_minus_one) throw PotentialDomainError(spec_ + ": argument outside [-1, 1]");
  if (cmp_to_one == 0 && !flags_.finite_at_one) throw PotentialDomainError(spec_ + ": infinite at t = 1");
}

Rational Potential::eval_exact(const Rational& t, int order) const {
  if (!flags_.exact_at_rationals) throw std::logic_error(spec_ + " has no exact rational values");
  check_domain(t.compare(1), t < -1, order);
  switch (kind_) {
    case PotentialKind::polynomial:
      return derivative(poly_, order)(t);
    case PotentialKind::riesz: {
      // d^k/dt^k (2 - 2t)^(-a) = 2^k a (a+1) ... (a+k-1) (2 - 2t)^(-a-k)
      const int a = riesz_s_ / 2;
      Integer scale = 1;
      for (int j = 0; j < order; ++j) scale *= 2 * (a + j);
      Rational base = Rational(2) - 2 * t;
      Rational power(1);
      for (int j = 0; j < a + order; ++j) power *= base;
      return Rational(scale) / power;
    }
    default:
      throw std::logic_error("unreachable: exact evaluation of " + spec_);
  }
}

Real Potential::eval(const Real& t, int order) const {
  check_domain(t.compare(1), t < -1, order);
  switch (kind_) {
    case PotentialKind::polynomial:
      return convert<Real>(derivative(poly_, order))(t);
    case PotentialKind::riesz: {
      const Real a = Real(riesz_s_) / 2;
      Real scale(1);
      for (int j = 0; j < order; ++j) scale *= 2 * (a + j);
      return scale * boost::multiprecision::pow(Real(2) - 2 * t, -(a + order));
    }
    case PotentialKind::gaussian: {
      const Real rate = 2 * Real(sigma_);
      return boost::multiprecision::pow(rate, order) * boost::multiprecision::exp(rate * (t - 1));
    }
    case PotentialKind::custom:
      return oracle_(t, order);
  }
  throw std::logic_error("unreachable");
}

Potential parse_potential(std::string_view spec) {
  const std::string_view s = trim(spec);
  const auto fail = [&](const std::string& why) {
    return PotentialSpecError("invalid potential '" + std::string(spec) + "': " + why);
  };
  try {
    if (s.starts_with("poly:")) {
      std::string_view body = trim(s.substr(5));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw fail("expected poly:[c0,c1,...]");
      body = trim(body.substr(1, body.size() - 2));
      if (body.empty()) throw fail("empty coefficient list");
      std::vector<Rational> cs;
      while (true) {
        const auto comma = body.find(',');
        cs.push_back(parse_rational(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
      }
      return Potential::from_shifted_basis(std::move(cs));
    }
    if (s.starts_with("riesz:s=")) {
      const std::string_view num = trim(s.substr(8));
      int value = 0;
      const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc() || ptr != num.data() + num.size()) throw fail("s must be an integer");
      return Potential::riesz(value);
    }
    if (s.starts_with("gauss:sigma=")) return Potential::gaussian(parse_rational(s.substr(12)));
  } catch (const PotentialSpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  throw fail("expected poly:[...], riesz:s=<int> or gauss:sigma=<rational>");
}

AbsMonotoneWitness abs_monotone_witness(const Potential& h, const std::vector<Real>& grid, int max_order) {
  check_order(max_order);
  AbsMonotoneWitness w;
  for (int k = 0; k <= max_order; ++k) {
    std::optional<Real> lowest;
    for (const Real& t : grid) {
      const Real v = h.eval(t, k);
      if (!lowest || v < *lowest) lowest = v;
      if (v < 0 && w.all_nonnegative) {
        w.all_nonnegative = false;
        w.first_failing_order = k;
        w.first_failing_point = t;
      }
    }
    w.min_per_order.push_back(lowest.value_or(Real(0)));
  }
  return w;
}

}  // namespace lpcert
