#include "lpcert/potentials.hpp"

#include <doctest.h>

using namespace lpcert;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

std::vector<Real> uniform_grid(int points) {
  std::vector<Real> grid;
  for (int i = 0; i < points; ++i) grid.push_back(Real(-1) + Real(2 * i) / Real(points - 1));
  return grid;
}

}  // namespace

TEST_CASE("riesz values") {
  const auto h = Potential::riesz(2);
  CHECK(h.eval_exact(q(1, 2)) == 1);
  CHECK(h.eval_exact(q(-1)) == q(1, 4));
  CHECK(h.eval_exact(q(1, 3)) == q(3, 4));
  CHECK(h.eval_exact(q(0), 1) == q(1, 2));
  CHECK_FALSE(h.finite_at_one());
  CHECK_THROWS_AS(h.eval_exact(q(1)), PotentialDomainError);
  CHECK_THROWS_AS(h.eval_exact(q(-3, 2)), PotentialDomainError);
  CHECK(Potential::riesz(4).eval_exact(q(0), 2) == q(3, 2));
}

TEST_CASE("odd riesz exponents fall back to reals") {
  const PrecisionScope scope(50);
  const auto h = Potential::riesz(1);
  CHECK_FALSE(h.exact_at_rationals());
  CHECK(abs(h.eval(Real(0)) - Real(1) / sqrt(Real(2))) < Real("1e-45"));
}

TEST_CASE("gaussian") {
  const PrecisionScope scope(50);
  const auto h = Potential::gaussian(q(1, 2));
  CHECK(h.eval(Real(1)) == 1);
  CHECK(abs(h.eval(Real(0), 3) - exp(Real(-1))) < Real("1e-45"));
  CHECK(h.finite_at_one());
  CHECK(h.claims_abs_monotone());
  CHECK_THROWS_AS(Potential::gaussian(q(0)), PotentialSpecError);
}

TEST_CASE("shifted basis") {
  std::vector<Rational> c(13, q(0));
  c[12] = 1;
  const auto h = Potential::from_shifted_basis(c);
  CHECK(h.eval_exact(q(1)) == 4096);
  CHECK(h.eval_exact(q(1, 3), 12) == 479001600);
  CHECK(h.eval_exact(q(-1), 12) == 479001600);
  CHECK(h.claims_positive_12th());
  CHECK(h.finite_at_one());

  const auto one = Potential::from_shifted_basis({q(1)});
  CHECK(one.eval_exact(q(1, 5)) == 1);
  for (int k = 1; k <= 13; ++k) CHECK(one.eval_exact(q(1, 5), k) == 0);

  const auto lin = Potential::from_shifted_basis({q(0), q(1)});
  CHECK(lin.claims_abs_monotone());
  CHECK(lin.eval_exact(q(0), 12) == 0);
  CHECK_FALSE(lin.claims_positive_12th());

  CHECK_THROWS_AS(Potential::from_shifted_basis({q(1), q(-1)}), PotentialSpecError);
}

TEST_CASE("specifier parsing") {
  CHECK(parse_potential("riesz:s=4").kind() == PotentialKind::riesz);
  CHECK(parse_potential("gauss:sigma=1/2").kind() == PotentialKind::gaussian);
  CHECK(parse_potential("poly:[0,0,1]").eval_exact(q(1)) == 4);
  for (const char* spec : {"riesz:s=2", "gauss:sigma=2", "poly:[1,0,3/2]"})
    CHECK(parse_potential(spec).spec() == spec);
  for (const char* bad : {"", "riesz", "riesz:s=0", "riesz:s=x", "gauss:sigma=-1", "poly:[1,", "poly:[-1]", "coulomb:s=1"})
    CHECK_THROWS_AS(parse_potential(bad), PotentialSpecError);
}

TEST_CASE("derivative order limit") {
  CHECK_THROWS_AS(Potential::riesz(2).eval_exact(q(0), kMaxDerivativeOrder + 1), PotentialDomainError);
}

TEST_CASE("absolute monotonicity witness") {
  const PrecisionScope scope(50);
  const auto grid = uniform_grid(101);
  std::vector<Real> open_grid(grid.begin(), grid.end() - 1);
  const auto riesz = abs_monotone_witness(Potential::riesz(4), open_grid, 13);
  CHECK(riesz.all_nonnegative);
  REQUIRE(riesz.min_per_order.size() == 14);
  for (const auto& m : riesz.min_per_order) CHECK(m > 0);
  const auto gauss = abs_monotone_witness(Potential::gaussian(q(1)), grid, 13);
  CHECK(gauss.all_nonnegative);
  for (const auto& m : gauss.min_per_order) CHECK(m > 0);
  const auto neg = abs_monotone_witness(Potential::polynomial(-RationalPoly::identity()), {Real(0)}, 1);
  CHECK_FALSE(neg.all_nonnegative);
  REQUIRE(neg.first_failing_order.has_value());
  CHECK(*neg.first_failing_order == 1);
}
