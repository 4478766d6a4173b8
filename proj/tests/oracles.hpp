#ifndef ISOJAC_TESTS_ORACLES_HPP
#define ISOJAC_TESTS_ORACLES_HPP

// Randomized oracle comparisons shared by the property tests and the
// acceptance binary. Each returns the number of failing cases out of `cases`.

#include <cstdint>
#include <string>
#include <vector>

namespace oracles {

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

/// Newton-Girard power sums of prod (x1 - a_l x2 - b_l) against the direct
/// expansion of sum_l (a_l x2 + b_l)^j.
Outcome newton_girard_vs_power_sums(std::uint64_t seed, int cases);
/// Smith divisors against quotients of k x k minor gcds.
Outcome smith_vs_minor_gcd(std::uint64_t seed, int cases);
/// exact_divide(A * B, A) == B.
Outcome exact_divide_round_trip(std::uint64_t seed, int cases);
/// D(lambda A) == D(A).
Outcome scaling_invariance(std::uint64_t seed, int cases);
/// D(sigma A) = sigma D(A), tau tau = id, sigma tau = tau sigma, and
/// sigma, tau multiplicative.
Outcome sigma_tau_equivariance(std::uint64_t seed, int cases);
/// rho(x y) = rho(x) rho(y), rho(x + y) = rho(x) + rho(y), det rho(x) = N(x).
Outcome regular_rep_homomorphism(std::uint64_t seed, int cases);
/// A | Q1(x1) - Q2(x2) implies transform_pair(A) | the transformed difference.
Outcome transported_divisibility(std::uint64_t seed, int cases);

}  // namespace oracles

#endif  // ISOJAC_TESTS_ORACLES_HPP
