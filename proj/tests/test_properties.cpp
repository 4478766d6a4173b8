#include "doctest.h"
#include "oracles.hpp"

namespace {

constexpr std::uint64_t kSeed = 20240917;
constexpr int kCases = 200;

void expect_clean(const oracles::Outcome& o) {
  CHECK(o.cases == kCases);
  CHECK_MESSAGE(o.failures == 0, o.first_failure);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("Newton-Girard matches direct power sums") { expect_clean(oracles::newton_girard_vs_power_sums(kSeed, kCases)); }
TEST_CASE("Smith divisors match minor gcds") { expect_clean(oracles::smith_vs_minor_gcd(kSeed + 1, kCases)); }
TEST_CASE("exact_divide round trip") { expect_clean(oracles::exact_divide_round_trip(kSeed + 2, kCases)); }
TEST_CASE("D(lambda A) = D(A)") { expect_clean(oracles::scaling_invariance(kSeed + 3, kCases)); }
TEST_CASE("sigma and tau equivariance") { expect_clean(oracles::sigma_tau_equivariance(kSeed + 4, kCases)); }
TEST_CASE("regular representation is a ring homomorphism") {
  expect_clean(oracles::regular_rep_homomorphism(kSeed + 5, kCases));
}
TEST_CASE("affine transforms transport divisibility") {
  expect_clean(oracles::transported_divisibility(kSeed + 6, kCases));
}

}  // TEST_SUITE
