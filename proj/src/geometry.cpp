#include "isojac/geometry.hpp"

#include <numeric>

namespace isojac {

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

long genus(long d, long n) {
  if (d < 1 || n < 1) throw Error("genus needs d, n >= 1");
  return ((n - 1) * (d - 1) - (std::gcd(n, d) - 1)) / 2;
}

std::vector<std::pair<long, long>> interior_points(long d, long n) {
  if (d < 1 || n < 1) throw Error("interior_points needs d, n >= 1");
  std::vector<std::pair<long, long>> pts;
  for (long l1 = 1; d * l1 < d * n; ++l1)
    for (long l2 = 1; d * l1 + n * l2 < d * n; ++l2) pts.emplace_back(l1, l2);
  return pts;
}

SliceProfile slice_profile(int d, int n) {
  SliceProfile s;
  s.d = d;
  s.n = n;
  s.g = genus(d, n);
  if (s.g < 1) throw Error("slice_profile: genus of (d, n) = (" + std::to_string(d) + ", " + std::to_string(n) + ") is 0");
  s.B = static_cast<int>(ceil_div(static_cast<long>(n - 1) * d, n) - 1);
  long total = 0;
  for (int i = 1; i <= s.B; ++i) {
    const int p = static_cast<int>(ceil_div(static_cast<long>(d - i) * n, d) - 1);
    if (p < 1 || p > n - 1) throw Error("slice_profile: slice size out of range");
    s.p.push_back(p);
    total += p;
  }
  if (total != s.g) throw Error("slice_profile: slice sizes do not sum to the genus");
  return s;
}

std::string to_string(ModuliVerdict v) {
  switch (v) {
    case ModuliVerdict::DModuli:
      return "d-moduli";
    case ModuliVerdict::DMinusOneModuli:
      return "(d-1)-moduli";
    case ModuliVerdict::HypothesesViolated:
      return "hypotheses-violated";
  }
  return "?";
}

ModuliReport moduli_count(const CorrPoly& f, int n, int d) {
  if (genus(d, n) <= 1)
    throw Error("moduli_count requires genus > 1, got g = " + std::to_string(genus(d, n)));
  if (f.degree_x2() > 0) throw Error("moduli_count expects a polynomial in x (and t) only");
  if (f.degree_x1() != n)
    throw Error("moduli_count: deg f = " + std::to_string(f.degree_x1()) + " differs from n = " + std::to_string(n));
  auto coef = [&](int i) { return f.coeff_x1(n - i); };
  ModuliReport rep;
  auto violated = [&](const char* which, std::string detail) {
    rep.verdict = ModuliVerdict::HypothesesViolated;
    rep.failed = which;
    rep.detail = std::move(detail);
    return rep;
  };
  const CorrPoly f0 = coef(0), f1 = coef(1), f2 = coef(2), f3 = coef(3);
  if (!f0.is_constant() || !f0.constant_value().is_one()) return violated("i", "f_0 = " + f0.to_string());
  if (!f1.is_zero()) return violated("ii", "f_1 = " + f1.to_string());
  if (f2.is_zero()) return violated("iii", "f_2 = 0");
  // kappa from the leading t-coefficient, then confirmed on every term
  const Monomial lead = f2.terms().rbegin()->first;
  const FieldElement kappa = f3.coeff(lead) * f2.coeff(lead).inverse();
  if (!(f3 == f2 * kappa)) return violated("iv", "f_3 = " + f3.to_string() + " is not a K-multiple of f_2");
  rep.kappa = kappa;
  for (int i = 2; i < n; ++i)
    if (coef(i).degree_t() > 0) {
      rep.verdict = ModuliVerdict::DModuli;
      rep.witness = i;
      rep.detail = "f_" + std::to_string(i) + " involves t";
      return rep;
    }
  rep.verdict = ModuliVerdict::DMinusOneModuli;
  rep.detail = "all coefficients lie in K";
  return rep;
}

}  // namespace isojac
