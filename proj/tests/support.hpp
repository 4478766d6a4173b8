#ifndef ISOJAC_TESTS_SUPPORT_HPP
#define ISOJAC_TESTS_SUPPORT_HPP

#include "isojac/field.hpp"
#include "isojac/poly.hpp"

#include <random>

namespace testing {

using namespace isojac;

inline TowerPtr quadratic(long c0, long c1, const char* name = "alpha") {
  return make_field({TowerStep::over_rationals({Rational(c0), Rational(c1), Rational(1)})}, true, {name});
}

// Q(alpha_7), alpha^2 + alpha + 2 = 0
inline TowerPtr q7() { return quadratic(2, 1); }
// Q(alpha_11), alpha^2 + alpha + 3 = 0
inline TowerPtr q11() { return quadratic(3, 1); }

// beta^2 - 5 beta + 3 = 0, alpha^2 + (beta - 2) alpha + beta = 0
inline TowerPtr q13() {
  TowerStep b = TowerStep::over_rationals({Rational(3), Rational(-5), Rational(1)});
  TowerStep a;
  a.coeffs = {{Rational(0), Rational(1)}, {Rational(-2), Rational(1)}, {Rational(1)}};
  return make_field({b, a}, true, {"beta", "alpha"});
}

inline TowerPtr rationals() { return make_field({}, false); }

inline CorrPoly P(const char* text, const TowerPtr& f) { return parse_poly(text, f); }

inline FieldElement random_element(std::mt19937_64& rng, const TowerPtr& f, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> c(f->degree());
  for (auto& x : c) x = dist(rng);
  return f->element(c);
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const TowerPtr& f, int lo = -5, int hi = 5) {
  for (;;) {
    FieldElement x = random_element(rng, f, lo, hi);
    if (!x.is_zero()) return x;
  }
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace testing

#endif  // ISOJAC_TESTS_SUPPORT_HPP
