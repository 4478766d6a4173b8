#include "doctest.h"
#include "support.hpp"

#include "isojac/catalog.hpp"
#include "isojac/field.hpp"
#include "isojac/rational.hpp"

using namespace isojac;
using namespace testing;

TEST_SUITE("field") {

TEST_CASE("rational parsing") {
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational("-22/7") == Rational(-22, 7));
  CHECK(parse_rational("4/2") == 2);
  CHECK_THROWS_AS(parse_rational("1 /2"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("make_field degrees") {
  auto k7 = q7();
  CHECK(k7->degree() == 2);
  CHECK(k7->has_cm());
  auto q = rationals();
  CHECK(q->degree() == 1);
  auto x = q->from_rational(Rational(5, 3));
  CHECK(apply_sigma(x) == x);
  auto k13 = q13();
  CHECK(k13->degree() == 4);
  CHECK(k13->step_degrees() == std::vector<int>{2, 2});
}

TEST_CASE("make_field rejects malformed steps") {
  CHECK_THROWS_AS(make_field({TowerStep::over_rationals({Rational(1), Rational(2)})}, false), Error);  // not monic
  CHECK_THROWS_AS(make_field({TowerStep::over_rationals({Rational(1)})}, false), Error);              // degree 0
  CHECK_THROWS_AS(make_field({TowerStep::over_rationals({Rational(1), Rational(0), Rational(0), Rational(1)})}, true),
                  Error);  // CM needs a quadratic top step
}

TEST_CASE("arithmetic examples") {
  auto k7 = q7();
  auto a7 = k7->generator(0);
  CHECK(a7 * apply_sigma(a7) == k7->from_rational(2));
  CHECK(apply_sigma(a7) == -k7->one() - a7);

  auto k11 = q11();
  auto a11 = k11->generator(0);
  CHECK(a11.inverse() == (a11 + k11->one()) * Rational(-1, 3));
  CHECK(a11 * a11.inverse() == k11->one());

  auto k13 = q13();
  auto b13 = k13->generator(0);
  auto a13 = k13->generator(1);
  CHECK(a13 + apply_sigma(a13) == k13->from_rational(2) - b13);
  CHECK(apply_sigma(b13) == b13);
  CHECK(a13 * apply_sigma(a13) == b13);
  CHECK(b13 * b13 - Rational(5) * b13 + k13->from_rational(3) == k13->zero());
}

TEST_CASE("linear steps adjoin a rational root") {
  auto k = make_field({TowerStep::over_rationals({Rational(3), Rational(1)})}, false);
  CHECK(k->degree() == 1);
  CHECK(k->generator(0) == k->from_rational(-3));
  auto cyc3 = cyclotomic_field(3);
  CHECK(cyc3->degree() == 2);
  CHECK(zeta(cyc3, 3) == cyc3->one());
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(q7()->zero().inverse(), Error); }

TEST_CASE("regular representation") {
  auto k7 = q7();
  CHECK(regular_rep(k7->one()) == IntMatrix::identity(2));
  IntMatrix r = regular_rep(k7->generator(0));
  CHECK(r(0, 0) == 0);
  CHECK(r(0, 1) == 1);
  CHECK(r(1, 0) == -2);
  CHECK(r(1, 1) == -1);
  CHECK_THROWS_AS(regular_rep(k7->from_rational(Rational(1, 2))), IntegralityError);
}

TEST_CASE("norm and trace") {
  auto k7 = q7();
  auto a = k7->generator(0);
  CHECK(norm(a) == 2);
  CHECK(trace(a) == -1);
  auto k13 = q13();
  CHECK(norm(k13->generator(0)) == 9);  // N_{Q(beta)/Q}(beta)^2 = 3^2
}

TEST_CASE("minimal polynomial") {
  auto k13 = q13();
  auto mp = minimal_polynomial(k13->generator(0));
  CHECK(mp == std::vector<Rational>{3, -5, 1});
  CHECK(minimal_polynomial(k13->from_rational(7)) == std::vector<Rational>{-7, 1});
}

TEST_CASE("sigma is an involutive automorphism") {
  std::mt19937_64 rng(11);
  for (auto f : {q7(), q13()}) {
    for (int i = 0; i < 50; ++i) {
      auto x = random_element(rng, f), y = random_element(rng, f);
      CHECK(apply_sigma(apply_sigma(x)) == x);
      CHECK(apply_sigma(x * y) == apply_sigma(x) * apply_sigma(y));
      CHECK(apply_sigma(x + y) == apply_sigma(x) + apply_sigma(y));
    }
  }
}

TEST_CASE("elements from different towers do not mix") {
  CHECK_THROWS_AS(q7()->one() + q11()->one(), Error);
}

TEST_CASE("embedding into a larger tower") {
  auto k13 = q13();
  auto sub = k13->subtower(1);
  auto b = sub->generator(0);
  FieldEmbedding emb(sub, k13, {k13->generator(0)});
  CHECK(emb(b * b) == k13->generator(0) * k13->generator(0));
  CHECK_THROWS_AS(FieldEmbedding(sub, k13, {k13->generator(1)}), Error);
}

}  // TEST_SUITE
