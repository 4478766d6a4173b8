#include "oracles.hpp"

#include "support.hpp"

#include "isojac/catalog.hpp"
#include "isojac/diffrep.hpp"
#include "isojac/lattice.hpp"

#include <functional>

using namespace isojac;
using namespace testing;

namespace oracles {

namespace {

void run(Outcome& out, int cases, const std::function<bool(int, std::string&)>& body) {
  for (int c = 0; c < cases; ++c) {
    std::string why;
    bool ok = false;
    try {
      ok = body(c, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (!ok) {
      if (out.failures++ == 0) out.first_failure = "case " + std::to_string(c) + ": " + why;
    }
  }
}

TowerPtr pick_field(int c) { return c % 3 == 2 ? q13() : q7(); }

// prod_l (x1 - a_l x2 - b_l) with a_l != 0 and b_l possibly involving t
CorrPoly split_linear(std::mt19937_64& rng, const TowerPtr& k, int r, std::vector<CorrPoly>* roots = nullptr) {
  CorrPoly a = CorrPoly::constant(k->one());
  for (int l = 0; l < r; ++l) {
    CorrPoly root = CorrPoly::monomial(random_nonzero(rng, k, -3, 3), {0, 1, 0}) +
                    CorrPoly::constant(random_element(rng, k, -3, 3)) +
                    CorrPoly::monomial(random_element(rng, k, -2, 2), {0, 0, 1});
    a = a * (CorrPoly::x1(k) - root);
    if (roots) roots->push_back(root);
  }
  return a;
}

CorrPoly random_poly(std::mt19937_64& rng, const TowerPtr& k, int terms, int deg) {
  std::uniform_int_distribution<int> e(0, deg);
  CorrPoly p(k);
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng), e(rng) % 2}, random_element(rng, k, -4, 4));
  return p;
}

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(m[p], m[c]), d = -d;
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Integer> minor_gcd_divisors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  bool dead = false;
  for (std::size_t k = 1; k <= r; ++k) {
    if (dead) {
      out.push_back(0);
      continue;
    }
    Integer g = 0;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      combinations(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        const Integer v = det(sub).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      });
    });
    if (g == 0) {
      dead = true;
      out.push_back(0);
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

Outcome newton_girard_vs_power_sums(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome out;
  run(out, cases, [&](int c, std::string& why) {
    const auto k = pick_field(c);
    const int r = 1 + c % 4;
    std::vector<CorrPoly> roots;
    const CorrPoly a = split_linear(rng, k, r, &roots);
    const auto ts = newton_girard(a, 7);
    for (int j = 1; j <= 6; ++j) {
      CorrPoly want(k);
      for (const auto& root : roots) want += root.pow(j);
      if (!(ts[j - 1] == want)) {
        why = "t_" + std::to_string(j) + " of " + a.to_string();
        return false;
      }
    }
    return true;
  });
  return out;
}

Outcome smith_vs_minor_gcd(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 6);
  Outcome out;
  run(out, cases, [&](int c, std::string& why) {
    const std::size_t rows = c % 2 == 0 ? 6 : dim(rng), cols = c % 2 == 0 ? 6 : dim(rng);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    if (c % 7 == 3 && rows > 1)  // force rank deficiency
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = 2 * m(0, j);
    if (c % 11 == 5)  // force large common factors
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) *= (i + 1) * 2;
    const auto got = smith_divisors(m), want = minor_gcd_divisors(m);
    if (got != want) {
      why = m.to_string();
      return false;
    }
    return true;
  });
  return out;
}

Outcome exact_divide_round_trip(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome out;
  run(out, cases, [&](int c, std::string& why) {
    const auto k = pick_field(c);
    const int r = 1 + c % 4;
    // constant leading x1-coefficient, anything below it
    CorrPoly clean = CorrPoly::monomial(random_nonzero(rng, k), {r, 0, 0});
    std::uniform_int_distribution<int> e1(0, r - 1), e2(0, 3), et(0, 1);
    for (int i = 0; i < 5; ++i) clean.add_term({e1(rng), e2(rng), et(rng)}, random_element(rng, k, -4, 4));
    const CorrPoly b = random_poly(rng, k, 6, 3);
    const CorrPoly q = exact_divide(clean * b, clean);
    if (!(q == b)) {
      why = clean.to_string() + " / " + b.to_string();
      return false;
    }
    return true;
  });
  return out;
}

Outcome scaling_invariance(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome out;
  run(out, cases, [&](int c, std::string& why) {
    const auto k = pick_field(c);
    const CorrPoly a = split_linear(rng, k, 1 + c % 3);
    const FieldElement lambda = random_nonzero(rng, k);
    if (!(differential_block(a * lambda, 7) == differential_block(a, 7))) {
      why = a.to_string() + " scaled by " + lambda.to_string();
      return false;
    }
    return true;
  });
  return out;
}

Outcome sigma_tau_equivariance(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome out;
  run(out, cases, [&](int c, std::string& why) {
    const auto k = pick_field(c);
    const CorrPoly a = split_linear(rng, k, 1 + c % 3);
    const CorrPoly b = random_poly(rng, k, 5, 3);
    if (!(differential_block(sigma(a), 7) == differential_block(a, 7).sigma())) why = "D(sigma A)";
    else if (!(tau(tau(b)) == b)) why = "tau tau";
    else if (!(sigma(tau(b)) == tau(sigma(b)))) why = "sigma tau";
    else if (!(sigma(a * b) == sigma(a) * sigma(b))) why = "sigma product";
    else if (!(tau(a * b) == tau(a) * tau(b))) why = "tau product";
    if (!why.empty()) why += " on " + a.to_string();
    return why.empty();
  });
  return out;
}

Outcome regular_rep_homomorphism(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome out;
  run(out, cases, [&](int c, std::string& why) {
    const auto k = pick_field(c);
    const FieldElement x = random_element(rng, k, -9, 9), y = random_element(rng, k, -9, 9);
    if (!(regular_rep(x * y) == regular_rep(x) * regular_rep(y))) why = "product";
    else if (!(regular_rep(x + y) == regular_rep(x) + regular_rep(y))) why = "sum";
    else if (Rational(regular_rep(x).determinant()) != norm(x)) why = "norm";
    else if (norm(x * y) != norm(x) * norm(y)) why = "norm multiplicativity";
    if (!why.empty()) why += " at " + x.to_string() + ", " + y.to_string();
    return why.empty();
  });
  return out;
}

Outcome transported_divisibility(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome out;
  const FamilySpec s11 = load_family("11");
  run(out, cases, [&](int c, std::string& why) {
    TowerPtr k;
    CorrPoly a, f;
    if (c % 10 == 0) {
      k = s11.field;
      a = *s11.A;
      f = *s11.difference();
    } else {
      k = pick_field(c);
      // A = x1 - lambda x2 - mu divides Q(x1) - Q(lambda x2 + mu)
      const FieldElement lambda = random_nonzero(rng, k, -3, 3), mu = random_element(rng, k, -3, 3);
      a = CorrPoly::x1(k) - CorrPoly::monomial(lambda, {0, 1, 0}) - CorrPoly::constant(mu);
      CorrPoly q(k);
      std::uniform_int_distribution<int> deg(1, 5);
      const int dq = deg(rng);
      for (int i = 0; i <= dq; ++i) q.add_term({i, 0, 0}, random_element(rng, k, -4, 4));
      q.add_term({dq + 1, 0, 0}, k->one());
      f = q - affine(as_x2(q), k->one(), k->zero(), lambda, mu);
    }
    const FieldElement a1 = random_nonzero(rng, k, -3, 3), b1 = random_element(rng, k, -3, 3);
    const FieldElement a2 = random_nonzero(rng, k, -3, 3), b2 = random_element(rng, k, -3, 3);
    const CorrPoly at = transform_pair(a, a1, b1, a2, b2), ft = transform_pair(f, a1, b1, a2, b2);
    auto [quot, rem] = divide_x1(ft, at);
    if (!rem.is_zero()) {
      why = "remainder " + rem.to_string();
      return false;
    }
    return at * quot == ft;
  });
  return out;
}

}  // namespace oracles
