#include "doctest.h"
#include "support.hpp"

#include "isojac/catalog.hpp"
#include "isojac/diffrep.hpp"

#include <numeric>

using namespace isojac;
using namespace testing;

TEST_SUITE("diffrep") {

TEST_CASE("newton_girard on a single root") {
  auto k = q7();
  auto ts = newton_girard(P("x1 - x2", k), 7);
  REQUIRE(ts.size() == 6);
  for (int j = 1; j <= 6; ++j) CHECK(ts[j - 1] == CorrPoly::x2(k).pow(j));

  auto cyc = cyclotomic_field(7);
  auto z = zeta(cyc);
  auto ts2 = newton_girard(cyclotomic_corr(7, 1), 7);
  for (int j = 1; j <= 6; ++j) CHECK(ts2[j - 1] == CorrPoly::monomial(z.inverse().pow(j), {0, j, 0}));
}

TEST_CASE("identity correspondence") {
  auto k = q7();
  DiffBlock d = differential_block(P("x1 - x2", k), 7);
  CHECK(d.size() == 6);
  CHECK(d.is_identity());
  CHECK(check_split(P("x1 - x2", k), 7) == Integer(1));
}

TEST_CASE("D(A7) matches the printed matrix") {
  auto spec = resolved(load_family("7"));
  DiffBlock d = differential_block(*spec.A, 7);
  auto k = spec.field;
  auto a = k->generator(0), s = apply_sigma(a);
  std::vector<FieldElement> diag{a, a, s, a, s, s};
  bool plain = true, conj = true;
  for (int i = 0; i < 6; ++i) {
    plain = plain && d(i, i) == CorrPoly::constant(diag[i]);
    conj = conj && d(i, i) == CorrPoly::constant(apply_sigma(diag[i]));
  }
  CHECK((plain || conj));
  CHECK(d(0, 1).is_zero());
  CHECK(d.is_lower_triangular());
  REQUIRE(spec.printed_block);
  CHECK(compare_blocks(d, *spec.printed_block) != BlockMatch::Mismatch);
}

TEST_CASE("Dickson factor diagonal") {
  auto a = dickson_factor(5, 1);
  auto k = a.field();
  auto eta = k->generator(0);
  DiffBlock d = differential_block(a, 5);
  for (int j = 1; j <= 4; ++j) CHECK(d(j - 1, j - 1) == CorrPoly::constant(dickson_value(j, eta, k->one())));
}

TEST_CASE("assemble_full") {
  auto k = q7();
  DiffBlock d = differential_block(P("x1 - x2", k), 7);
  CHECK(assemble_full(d, 2) == std::vector<int>{3});
  CHECK(assemble_full(d, 3) == std::vector<int>{4, 2});
  DiffBlock d11 = differential_block(P("x1 - x2", q11()), 11);
  auto p = assemble_full(d11, 5);
  CHECK(std::accumulate(p.begin(), p.end(), 0) == 20);
}

TEST_CASE("check_split on the bundled families") {
  CHECK(check_split(*resolved(load_family("7")).A, 7) == Integer(2));
  CHECK(check_split(*resolved(load_family("11")).A, 11) == Integer(3));
  CHECK(check_split(*resolved(load_family("13")).A, 13) == Integer(3));
  CHECK(check_split(*resolved(load_family("21")).A, 21) == Integer(4));
}

TEST_CASE("check_split rejects a non-scalar product") {
  auto k = q7();
  CHECK_FALSE(check_split(P("x1^2 - x2^2 - x2", k), 7));
  // the graph of multiplication by alpha splits with m = 1
  CHECK(check_split(P("x1 - alpha x2", k), 7) == Integer(1));
}

TEST_CASE("diagonal norms for n = 13") {
  auto spec = resolved(load_family("13"));
  DiffBlock d = differential_block(*spec.A, 13);
  for (std::size_t i = 0; i < d.size(); ++i) {
    REQUIRE(d(i, i).is_constant());
    auto l = d(i, i).constant_value();
    CHECK(l * apply_sigma(l) == spec.field->from_rational(3));
  }
}

TEST_CASE("D(A13) is lower triangular and involves t") {
  auto spec = resolved(load_family("13"));
  DiffBlock d = differential_block(*spec.A, 13);
  CHECK(d.has_t());
  CHECK(d.is_lower_triangular());
}

TEST_CASE("evaluate_at") {
  auto k = q7();
  DiffBlock id = DiffBlock::identity(k, 3);
  // x^2 - 1 at the identity is zero
  CHECK(evaluate_at({-1, 0, 1}, id) == DiffBlock(k, 3));
  CHECK(evaluate_at({2, 3}, id) == id * k->from_rational(5));
}

}  // TEST_SUITE
