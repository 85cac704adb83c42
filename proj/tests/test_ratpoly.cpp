#include "lpcert/ratpoly.hpp"

#include <doctest.h>

using namespace lpcert;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("evaluation") {
  CHECK(RationalPoly::identity()(q(1, 2)) == q(1, 2));
  CHECK(RationalPoly()(q(17, 3)) == 0);
  CHECK(RationalPoly()(q(0)) == 0);
  const RationalPoly p{q(-1, 4), q(0), q(1)};
  CHECK(eval(p, q(1, 2)) == 0);
  CHECK(p(q(-1, 2)) == 0);
}

TEST_CASE("zero polynomial has degree -1 and no stored coefficients") {
  const RationalPoly z{q(0), q(0)};
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeffs().empty());
  CHECK(z.leading() == 0);
  CHECK((RationalPoly{q(1), q(2)} - RationalPoly{q(1), q(2)}).is_zero());
}

TEST_CASE("derivative") {
  CHECK(derivative(RationalPoly::monomial(q(1), 2)) == RationalPoly{q(0), q(2)});
  CHECK(derivative(RationalPoly::constant(q(5))).is_zero());
  CHECK(derivative(RationalPoly{q(0), q(-1), q(0), q(1)}) == RationalPoly{q(-1), q(0), q(3)});
  CHECK(derivative(RationalPoly::monomial(q(1), 12), 12) == RationalPoly::constant(q(479001600)));
  CHECK(derivative(RationalPoly::monomial(q(1), 3), 4).is_zero());
}

TEST_CASE("from_roots") {
  CHECK(from_roots(std::vector<Rational>{q(-1), q(-1)}) == RationalPoly{q(1), q(2), q(1)});
  CHECK(from_roots(std::vector<Rational>{}) == RationalPoly::constant(q(1)));
  const std::vector<Rational> roots{q(-1, 2), q(1, 3), q(1, 3)};
  const RationalPoly p = from_roots(roots);
  CHECK(p.degree() == 3);
  CHECK(p.leading() == 1);
  for (const auto& r : roots) CHECK(p(r) == 0);
  CHECK(derivative(p)(q(1, 3)) == 0);
}

TEST_CASE("arithmetic") {
  const RationalPoly a{q(1), q(1)};
  const RationalPoly b{q(-1), q(1)};
  CHECK(a * b == RationalPoly{q(-1), q(0), q(1)});
  CHECK(a + b == RationalPoly{q(0), q(2)});
  CHECK(a - b == RationalPoly::constant(q(2)));
  CHECK(q(3) * a == RationalPoly{q(3), q(3)});
  CHECK(a / q(2) == RationalPoly{q(1, 2), q(1, 2)});
  CHECK(-a == RationalPoly{q(-1), q(-1)});
  CHECK((a * RationalPoly()).is_zero());
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(q(-118957, 811814400)) == "-118957/811814400");
  CHECK(to_string(q(4, 2)) == "2");
  CHECK(to_string(q(0)) == "0");
  CHECK(parse_rational("107/336960") == q(107, 336960));
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK(parse_rational("-0.25") == q(-1, 4));
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational("010/08") == q(5, 4));
  CHECK(parse_rational("0.075") == q(3, 40));
  CHECK(parse_rational(" 1/2 ") == q(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("real precision scope and conversion") {
  const unsigned before = Real::default_precision();
  {
    const PrecisionScope scope(60);
    CHECK(Real::default_precision() == 60);
    const RealPoly p = convert<Real>(RationalPoly{q(1, 3), q(0), q(1)});
    const Real v = p(Real(1) / 2);
    CHECK(abs(v - Real(7) / 12) < Real("1e-58"));
    const Real back = parse_real(to_string(v));
    CHECK(abs(back - v) < Real("1e-58"));
  }
  CHECK(Real::default_precision() == before);
}
