#include "doctest.h"
#include "support.hpp"

#include "isojac/catalog.hpp"
#include "isojac/poly.hpp"

using namespace isojac;
using namespace testing;

TEST_SUITE("poly") {

TEST_CASE("parse and print") {
  auto k = q7();
  CorrPoly a = P("x1^2 - 2*alpha*x1*x2 + (1 + alpha) t", k);
  CHECK(a.coeff({2, 0, 0}) == k->one());
  CHECK(a.coeff({1, 1, 0}) == k->generator(0) * Rational(-2));
  CHECK(a.coeff({0, 0, 1}) == k->one() + k->generator(0));
  CHECK(P(a.to_string().c_str(), k) == a);
  CHECK(P("x^2", k) == P("x1*x1", k));
  CHECK(P("(x1 - x2)/2", k) == P("x1/2 - x2/2", k));
  CHECK_THROWS_AS(P("x1 / x2", k), Error);
  CHECK_THROWS_AS(P("x1 + y", k), Error);
  CHECK_THROWS_AS(P("(x1", k), Error);
}

TEST_CASE("zero coefficients are not stored") {
  auto k = q7();
  CHECK(P("x1 - x1", k).is_zero());
  CHECK((P("x1 + x2", k) - P("x2", k)).size() == 1);
}

TEST_CASE("shape_check") {
  auto k = q7();
  CHECK(shape_check(P("x1 - x2", k), 7) == 1);
  CHECK(shape_check(resolved(load_family("7")).A.value(), 7) == 3);
  CHECK_THROWS_AS(shape_check(P("x1^2*x2^3 - 1", k), 7), ShapeError);
  CHECK_THROWS_AS(shape_check(P("x1^8 - x2^8", k), 7), ShapeError);        // r > n
  CHECK_THROWS_AS(shape_check(P("x1*x2 - x2^2", k), 7), ShapeError);       // c_0 not constant
  CHECK_THROWS_AS(shape_check(P("x1^2 - x2", k), 7), ShapeError);          // deg_x2 != r
  CHECK_THROWS_AS(shape_check(CorrPoly(k), 7), ShapeError);
}

TEST_CASE("tau") {
  auto k = q7();
  CHECK(tau(P("x1 - x2", k)) == P("x2 - x1", k));
  CHECK(tau(P("x1^2 x2 + t", k)) == P("x2^2 x1 + t", k));
  auto a7 = resolved(load_family("7")).A.value();
  CHECK(tau(a7) == -sigma(a7));
  auto a13 = resolved(load_family("13")).A.value();
  CHECK(tau(a13) == sigma(a13));
}

TEST_CASE("exact_divide") {
  auto k = q7();
  CHECK(exact_divide(P("(x1 - x2)*(x1 + x2)", k), P("x1 - x2", k)) == P("x1 + x2", k));
  try {
    exact_divide(P("x1^2 - x2^2", k), P("x1 - 2 x2", k));
    FAIL("expected a division error");
  } catch (const DivisionError& e) {
    CHECK(e.remainder() == P("3 x2^2", k));
  }
  auto spec = resolved(load_family("7"));
  CorrPoly b7 = exact_divide(*spec.difference(), *spec.A);
  CHECK(b7.degree_x1() == 4);
  CHECK(spec.A.value() * b7 == *spec.difference());
}

TEST_CASE("map_coeffs") {
  auto k = q7();
  auto a7 = resolved(load_family("7")).A.value();
  CorrPoly at0 = specialize_t(a7, k->zero());
  CHECK(at0.degree_t() == 0);
  CHECK(at0 == P("x1^3 - x2^3 - alpha x1^2 x2 + (-1 - alpha) x1 x2^2", k));

  std::mt19937_64 rng(3);
  CorrPoly r(k);
  for (int i = 0; i < 6; ++i) r.add_term({i % 3, i % 2, i % 4}, random_element(rng, k));
  CHECK(sigma(sigma(r)) == r);
  CHECK(map_coeffs(r, action::Negate{}) == -r);
  CHECK(affine(r, k->one(), k->zero(), k->one(), k->zero()) == r);
  CHECK_THROWS_AS(affine(r, k->zero(), k->one(), k->one(), k->zero()), Error);
  CHECK(affine(P("x1 - x2", k), k->from_rational(2), k->one(), k->one(), k->zero()) == P("2 x1 + 1 - x2", k));
}

TEST_CASE("sigma on t-terms only") {
  auto k = q7();
  CHECK(map_coeffs(P("alpha x1 + alpha t", k), action::SigmaOnT{}) == P("alpha x1 + (-1 - alpha) t", k));
}

TEST_CASE("univariate helpers") {
  auto k = q7();
  CHECK(evaluate_x1(P("x1^2 + 1", k), k->generator(0)) == k->generator(0) * k->generator(0) + k->one());
  CHECK(as_x2(P("x1^3 - alpha", k)) == P("x2^3 - alpha", k));
  CHECK_THROWS_AS(as_x2(P("x1 x2", k)), Error);
}

}  // TEST_SUITE
