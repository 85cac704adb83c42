#include "lpcert/ratpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace lpcert {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Decimal only: the backend reads a leading 0 as an octal prefix.
Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  const Integer magnitude(std::string{s});
  return negative ? Integer(-magnitude) : magnitude;
}

}  // namespace

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Real& x) { return x.str(0, std::ios_base::scientific); }

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
  }
  if (is_integer_literal(s)) return Rational(parse_integer(s));

  // Finite decimal: [sign] digits [. digits]
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  const std::string_view whole = body.substr(0, dot);
  const std::string_view frac = body.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_integer_literal(whole)) ||
      (!frac.empty() && !is_integer_literal(frac)) || (!frac.empty() && !std::isdigit(static_cast<unsigned char>(frac.front()))))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  std::string digits = std::string(whole) + std::string(frac);
  if (digits.empty()) digits = "0";
  Integer den = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
  Rational out(parse_integer(digits), den);
  return negative ? Rational(-out) : out;
}

Real parse_real(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw std::invalid_argument("empty real literal");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a real number: '" + s + "'");
  }
}

PrecisionScope::PrecisionScope(unsigned digits) : previous_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

}  // namespace lpcert
