#include "doctest.h"
#include "support.hpp"

#include "isojac/catalog.hpp"
#include "isojac/geometry.hpp"

using namespace isojac;
using namespace testing;

namespace {

using UPoly = std::vector<Rational>;  // constant term first

UPoly mul(const UPoly& a, const UPoly& b) {
  UPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

UPoly add(UPoly a, const UPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// u^n D_n(u + 1/u, 1) as a polynomial in u
UPoly laurent_dickson(const CorrPoly& dn, int n) {
  UPoly total{0};
  for (int k = 0; k <= n; ++k) {
    const FieldElement c = dn.coeff({k, 0, 0});
    if (c.is_zero()) continue;
    UPoly term{c.rational_value()};
    for (int i = 0; i < k; ++i) term = mul(term, UPoly{1, 0, 1});  // u^2 + 1
    term.insert(term.begin(), n - k, Rational(0));                  // times u^{n-k}
    total = add(total, term);
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("load_family") {
  auto s7 = load_family("7");
  CHECK(s7.n == 7);
  CHECK(s7.field->degree() == 2);
  CHECK(s7.A);
  CHECK(s7.f);
  CHECK(s7.provenance == "bundled");
  auto s13 = load_family("13");
  CHECK(s13.field->degree() == 4);
  CHECK_FALSE(s13.f);
  CHECK(s13.has_t());
  CHECK(bundled_family_ids() == std::vector<std::string>{"7", "11", "13", "21"});
  try {
    load_family("15");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("external data required") != std::string::npos);
  }
  CHECK_THROWS_AS(load_family("31"), Error);
  CHECK_THROWS_AS(load_family("8"), Error);
}

TEST_CASE("expected rows") {
  auto s21 = load_family("21");
  CHECK(s21.expected.m == Integer(4));
  CHECK(s21.expected.e == 2);
  CHECK(s21.expected.nu == "d-1");
  CHECK(load_family("13").expected.e == 4);
  CHECK(load_family("7").expected.tau_sign == -1);
}

TEST_CASE("dickson polynomials") {
  auto q = rationals();
  CHECK(dickson(3, q->one()) == P("x1^3 - 3 x1", q));
  CHECK(dickson(5, q->one()) == P("x1^5 - 5 x1^3 + 5 x1", q));
  for (int n : {3, 5, 7}) {
    UPoly expect(2 * n + 1);
    expect[0] = 1;
    expect[2 * n] = 1;
    CHECK(laurent_dickson(dickson(n, q->one()), n) == expect);
  }
}

TEST_CASE("dickson factors") {
  auto a51 = dickson_factor(5, 1);
  auto k = a51.field();
  auto eta = k->generator(0);
  CHECK(eta * eta + eta - k->one() == k->zero());
  CHECK(a51 == P("x1^2 + x2^2 - eta x1 x2 + eta^2 - 4", k));
  auto a31 = dickson_factor(3, 1);
  CHECK(a31 == P("x1^2 + x2^2 + x1 x2 - 3", a31.field()));
}

TEST_CASE("dickson product identity") {
  for (int n : {3, 5, 7, 11, 13}) {
    auto k = real_cyclotomic_field(n);
    CorrPoly lhs = CorrPoly::x1(k) - CorrPoly::x2(k);
    for (int i = 1; i <= (n - 1) / 2; ++i) lhs = lhs * dickson_factor(n, i);
    auto dn = dickson(n, k->one());
    CHECK(lhs == dn - as_x2(dn));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(7) == std::vector<Rational>(7, Rational(1)));
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
  // psi_5(w) = w^2 + w - 1
  CHECK(real_cyclotomic_polynomial(5) == std::vector<Rational>{-1, 1, 1});
  CHECK(cyclotomic_field(13)->degree() == 12);
  CHECK(zeta(cyclotomic_field(7), 7) == cyclotomic_field(7)->one());
}

TEST_CASE("cyclotomic correspondences") {
  auto k = cyclotomic_field(7);
  CHECK(cyclotomic_corr(7, 0) == P("x1 - x2", k));
  CorrPoly prod = CorrPoly::constant(k->one());
  for (int i = 0; i < 7; ++i) prod = prod * cyclotomic_corr(7, i);
  CHECK(prod == P("x1^7 - x2^7", k));
}

TEST_CASE("induced diagonals over S = {1, 2, 4}") {
  auto k = cyclotomic_field(7);
  DiffBlock sum(k, 6);
  for (int i : {1, 2, 4}) sum = sum + differential_block(cyclotomic_corr(7, i), 7);
  for (int j = 1; j <= 6; ++j) {
    FieldElement want = k->zero();
    for (int i : {1, 2, 4}) want += zeta(k, 7 - (i * j) % 7);
    CHECK(sum(j - 1, j - 1) == CorrPoly::constant(want));
  }
}

TEST_CASE("degeneration at t = 0") {
  auto s7 = resolved(load_family("7"));
  CHECK(check_degeneration(s7, *s7.A).matched);
  CHECK(check_degenerate_block(s7, *s7.A).matched);
  auto s13 = resolved(load_family("13"));
  CHECK(check_degeneration(s13, *s13.A).matched);
  CHECK(check_degenerate_block(s13, *s13.A).matched);
}

TEST_CASE("resolve_variant") {
  auto r11 = resolve_variant(load_family("11"));
  CHECK(r11.tag == "identity");
  CHECK(r11.A == *load_family("11").A);

  auto r7 = resolve_variant(load_family("7"));
  CHECK(r7.tag.rfind("lift(", 0) == 0);
  CHECK(check_split(r7.A, 7) == Integer(2));

  FamilySpec trivial;
  trivial.id = "trivial";
  trivial.n = 7;
  trivial.field = q7();
  trivial.A = P("x1 - x2", trivial.field);
  trivial.expected.m = Integer(1);
  auto rt = resolve_variant(trivial);
  CHECK(rt.tag == "identity");
  CHECK(rt.A == *trivial.A);

  FamilySpec broken = trivial;
  broken.expected.m = Integer(2);
  try {
    resolve_variant(broken);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("no variant") != std::string::npos);
  }
}

TEST_CASE("transform_pair") {
  auto k = q7();
  auto a = P("x1^2 - alpha x1 x2 + x2^2 + t", k);
  CHECK(transform_pair(a, k->one(), k->zero(), k->one(), k->zero()) == a);
  CHECK(transform_pair(P("x1 - x2", k), k->from_rational(2), k->one(), k->one(), k->zero()) == P("2 x1 + 1 - x2", k));
}

TEST_CASE("lift_factor") {
  auto k = q7();
  auto a = P("x1 - x2 + t", k), b = P("x1 + x2 + 2 t", k);
  auto f = a * b;
  auto lifted = lift_factor(f, P("x1 - x2", k));
  REQUIRE(lifted);
  CHECK(*lifted == a);
  CHECK_FALSE(lift_factor(f, P("x1 - 3 x2", k)));
}

TEST_CASE("instantiate_kernel") {
  CHECK(instantiate_kernel("4^(g - g3) x 2^(2*g3)", 2, 21).to_string() == "(Z/4)^9 x (Z/2)^2");
  CHECK(instantiate_kernel("2^g", 3, 7) == AbelianGroup::elementary(2, 6));
  const long g = genus(2, 31);
  REQUIRE(g % 3 == 0);
  auto k31 = instantiate_kernel("8^(g/3) x 4^(2*g/3) x 2^(2*g/3)", 2, 31);
  Integer order;
  mpz_ui_pow_ui(order.get_mpz_t(), 8, g);
  CHECK(k31.order() == order);
  CHECK(k31.exponent() == 8);
  CHECK_THROWS_AS(instantiate_kernel("2^(g3 - g)", 3, 7), Error);
  CHECK_THROWS_AS(instantiate_kernel("2^(g/4)", 2, 7), Error);
  CHECK_THROWS_AS(instantiate_kernel("2^h", 2, 7), Error);
}

}  // TEST_SUITE
