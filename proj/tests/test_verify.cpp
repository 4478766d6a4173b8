#include "doctest.h"
#include "support.hpp"

#include "isojac/verify.hpp"

using namespace isojac;
using namespace testing;

namespace {

const Check* find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("family 7 at d = 3") {
  auto r = verify_family(load_family("7"), 3);
  CHECK(r.pass());
  CHECK(r.m == Integer(2));
  REQUIRE(r.kernel);
  CHECK(*r.kernel == AbelianGroup::elementary(2, 6));
  CHECK(r.variant.rfind("lift(", 0) == 0);
  CHECK(r.moduli == "d-moduli");
  for (const char* name : {"split", "factorization", "printed_block", "kernel", "squarefree_route", "norm_consistency",
                           "t_independence", "degeneration", "moduli"})
    CHECK_MESSAGE(find(r, name) != nullptr, name);
}

TEST_CASE("family 21 at d = 2") {
  auto r = verify_family(load_family("21"), 2);
  CHECK(r.pass());
  CHECK(r.m == Integer(4));
  CHECK(r.kernel->to_string() == "(Z/4)^9 x (Z/2)^2");
  CHECK(find(r, "squarefree_route") == nullptr);  // 4 is not squarefree
}

TEST_CASE("family 13 is t-independent") {
  for (long t : {1L, 2L, 3L}) {
    auto r = verify_family(load_family("13"), 2, t);
    CHECK(r.pass());
    CHECK(r.m == Integer(3));
    CHECK(*r.kernel == AbelianGroup::elementary(3, 6));
  }
}

TEST_CASE("failures are reported, not thrown") {
  FamilySpec s;
  s.id = "broken";
  s.n = 7;
  s.field = q7();
  s.A = P("x1 - x2", s.field);
  s.expected.m = Integer(2);
  VerificationReport r;
  CHECK_NOTHROW(r = verify_family(s, 2));
  CHECK_FALSE(r.pass());
  CHECK_FALSE(find(r, "variant")->pass);
}

TEST_CASE("pass is the conjunction of the checks") {
  auto r = verify_family(load_family("11"), 2);
  CHECK(r.pass());
  r.checks.push_back({"extra", false, ""});
  CHECK_FALSE(r.pass());
  VerificationReport empty;
  CHECK_FALSE(empty.pass());
}

TEST_CASE("JSON is deterministic and carries the schema tag") {
  auto a = verify_family(load_family("11"), 3).to_json();
  auto b = verify_family(load_family("11"), 3).to_json();
  CHECK(a == b);
  CHECK(a.find("\"schema\": \"isojac-report/1\"") != std::string::npos);
  CHECK(a.find("timing") == std::string::npos);
  CHECK(verify_family(load_family("11"), 3).to_json(true).find("timing") != std::string::npos);
}

TEST_CASE("text and JSON carry the same verdicts") {
  auto r = verify_family(load_family("7"), 2);
  const std::string text = r.to_text(), json = r.to_json();
  for (const auto& c : r.checks) {
    CHECK(text.find(std::string("[") + (c.pass ? "PASS" : "FAIL") + "] " + c.name) != std::string::npos);
    CHECK(json.find("\"name\": \"" + c.name + "\"") != std::string::npos);
  }
}

TEST_CASE("table order is fixed") {
  std::vector<FamilySpec> specs{load_family("21"), load_family("7")};
  auto rows = run_table(specs, 3);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 7);
  CHECK(rows[0].d == 2);
  CHECK(rows[1].d == 3);
  CHECK(rows[3].n == 21);
  CHECK(reports_to_json(rows) == reports_to_json(run_table(specs, 3)));
}

TEST_CASE("Dickson and cyclotomic suites") {
  for (int n : {3, 5, 7}) {
    CHECK(all_pass(dickson_checks(n, true)));
    CHECK(all_pass(cyclotomic_checks(n)));
  }
  CHECK_THROWS_AS(dickson_checks(4, false), Error);
}

}  // TEST_SUITE
