#ifndef ISOJAC_GEOMETRY_HPP
#define ISOJAC_GEOMETRY_HPP

// Newton polygon combinatorics of the curves y^d = f(x), deg f = n, and the
// moduli-count test for families f(x) over K(t).

#include "isojac/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isojac {

/// ((n-1)(d-1) - (gcd(n, d) - 1)) / 2.
long genus(long d, long n);

/// Integer points (l1, l2), both positive, with d*l1 + n*l2 < d*n.
std::vector<std::pair<long, long>> interior_points(long d, long n);

struct SliceProfile {
  int d = 0;
  int n = 0;
  int B = 0;           // number of slices
  std::vector<int> p;  // p(1) .. p(B)
  long g = 0;
};

/// Throws for genus-0 pairs.
SliceProfile slice_profile(int d, int n);

enum class ModuliVerdict { DModuli, DMinusOneModuli, HypothesesViolated };

std::string to_string(ModuliVerdict v);

struct ModuliReport {
  ModuliVerdict verdict = ModuliVerdict::HypothesesViolated;
  std::optional<FieldElement> kappa;
  /// Index i of a coefficient f_i (of x^{n-i}) involving t, for d-moduli.
  std::optional<int> witness;
  /// Failed condition ("i" .. "iv") for a violated verdict.
  std::string failed;
  std::string detail;
};

/// Checks f_0 = 1, f_1 = 0, f_2 != 0 and f_3 = kappa f_2 with kappa in K,
/// where f = sum f_i x^{n-i}. Requires genus(d, n) > 1.
ModuliReport moduli_count(const CorrPoly& f, int n, int d);

}  // namespace isojac

#endif  // ISOJAC_GEOMETRY_HPP
