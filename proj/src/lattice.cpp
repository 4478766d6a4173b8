#include "isojac/lattice.hpp"

#include "isojac/geometry.hpp"

#include <future>
#include <set>

namespace isojac {

std::vector<Integer> smith_divisors(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t len = std::min(rows, cols);
  std::vector<Integer> out;
  out.reserve(len);
  for (std::size_t p = 0; p < len; ++p) {
    for (;;) {
      // smallest non-zero entry of the trailing submatrix becomes the pivot
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = p; i < rows; ++i)
        for (std::size_t j = p; j < cols; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (bi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) {
        out.resize(len, Integer(0));
        return out;
      }
      if (bi != p)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(bi, j));
      if (bj != p)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, p), a(i, bj));

      bool clean = true;
      Integer q;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (sgn(a(i, p)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, p).get_mpz_t(), a(p, p).get_mpz_t());
        for (std::size_t j = p; j < cols; ++j)
          if (sgn(a(p, j)) != 0) a(i, j) -= q * a(p, j);
        if (sgn(a(i, p)) != 0) clean = false;
      }
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (sgn(a(p, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(p, j).get_mpz_t(), a(p, p).get_mpz_t());
        for (std::size_t i = p; i < rows; ++i)
          if (sgn(a(i, p)) != 0) a(i, j) -= q * a(i, p);
        if (sgn(a(p, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest; otherwise fold the offending row in
      std::size_t bad = rows;
      for (std::size_t i = p + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = p + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(p, p).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = p; j < cols; ++j) a(p, j) += a(bad, j);
    }
    out.push_back(abs(a(p, p)));
  }
  return out;
}

IntMatrix rho_star(const FieldMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return IntMatrix();
  const std::size_t e = m[0][0].field()->degree();
  IntMatrix out(k * e, k * e);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][j].is_zero()) continue;
      const IntMatrix r = regular_rep(m[i][j]);
      for (std::size_t a = 0; a < e; ++a)
        for (std::size_t b = 0; b < e; ++b) out(i * e + a, j * e + b) = r(a, b);
    }
  return out;
}

GakEntry gak_block(const DiffBlock& block, int k, long t_value) {
  if (k < 1 || static_cast<std::size_t>(k) > block.size()) throw Error("gak: k out of range");
  const DiffBlock sub = block.submatrix(k);
  const FieldElement t = block.field()->from_rational(t_value);
  GakEntry out;
  out.k = k;
  IntMatrix m1, m2;
  try {
    m1 = rho_star(sub.specialize(t));
    m2 = rho_star(sub.sigma().specialize(t));
  } catch (const IntegralityError& err) {
    throw IntegralityError(std::string(err.what()) + "; D(A)_" + std::to_string(k) + " at t = " +
                               std::to_string(t_value) + " is not integral, try another t value",
                           err.denominators());
  }
  // rho*(D ⊕ sigma D) is block diagonal; its Smith form is that of the blocks
  std::vector<Integer> divisors = smith_divisors(std::move(m1));
  std::vector<Integer> more = smith_divisors(std::move(m2));
  divisors.insert(divisors.end(), more.begin(), more.end());
  out.group = AbelianGroup::from_cyclic(divisors);
  out.det_norm = norm(specialize_t(sub.diagonal_product(), t).constant_value());
  return out;
}

std::vector<GakEntry> gak(const CorrPoly& a, int n, long t_value) {
  const DiffBlock block = differential_block(a, n);
  std::vector<std::future<GakEntry>> jobs;
  for (int k = 1; k < n; ++k)
    jobs.push_back(std::async(std::launch::async, [&block, k, t_value] { return gak_block(block, k, t_value); }));
  std::vector<GakEntry> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool is_squarefree(const Integer& m) {
  for (const auto& [p, k] : factor_integer(m))
    if (k > 1) return false;
  return true;
}

KernelReport kernel_from_block(const DiffBlock& block, const std::optional<Integer>& m, int d, long t_value) {
  KernelReport rep;
  rep.d = d;
  rep.n = static_cast<int>(block.size()) + 1;
  rep.t_value = t_value;
  rep.e = block.field()->degree();
  rep.m = m;
  rep.slices = assemble_full(block, d);

  std::set<int> ks(rep.slices.begin(), rep.slices.end());
  std::vector<std::future<GakEntry>> jobs;
  for (int k : ks)
    jobs.push_back(std::async(std::launch::async, [&block, k, t_value] { return gak_block(block, k, t_value); }));
  std::map<int, AbelianGroup> by_k;
  for (auto& j : jobs) {
    rep.blocks.push_back(j.get());
    by_k[rep.blocks.back().k] = rep.blocks.back().group;
  }
  for (int p : rep.slices) rep.sum = rep.sum + by_k.at(p);
  rep.kernel = group_root(rep.sum, rep.e);

  if (m) {
    const long g = genus(d, rep.n);
    Integer expected_order;
    mpz_pow_ui(expected_order.get_mpz_t(), m->get_mpz_t(), g);
    rep.order_ok = rep.kernel.is_finite() && rep.kernel.order() == expected_order;
    rep.exponent_ok = rep.kernel.is_finite() && mpz_divisible_p(m->get_mpz_t(), rep.kernel.exponent().get_mpz_t());
    if (is_squarefree(*m)) {
      rep.squarefree_kernel = AbelianGroup::elementary(*m, g);
      rep.routes_agree = (*rep.squarefree_kernel == rep.kernel);
    }
  }
  return rep;
}

KernelReport kernel_structure(const CorrPoly& a, int d, int n, long t_value) {
  const DiffBlock block = differential_block(a, n);
  const auto m = check_split(a, n);
  return kernel_from_block(block, m, d, t_value);
}

}  // namespace isojac
