#include "isojac/abelian_group.hpp"

#include <algorithm>
#include <sstream>

namespace isojac {

namespace {

// Pollard rho with Floyd cycle detection; n odd composite.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  Integer d = rho_factor(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n) {
  if (n == 0) throw Error("cannot factor 0");
  std::map<Integer, int> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return out;
}

AbelianGroup AbelianGroup::from_primary(const std::map<Integer, std::vector<int>>& primary, long free_rank) {
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::size_t len = 0;
  for (const auto& [p, ex] : primary) len = std::max(len, ex.size());
  std::vector<Integer> f(len, Integer(1));  // f[0] is the largest factor
  for (const auto& [p, ex] : primary) {
    std::vector<int> sorted = ex;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (sorted[j] < 0) throw Error("negative exponent in primary decomposition");
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), sorted[j]);
      f[j] *= pk;
    }
  }
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    if (*it != 1) g.factors_.push_back(*it);
  return g;
}

AbelianGroup AbelianGroup::from_cyclic(const std::vector<Integer>& orders) {
  std::map<Integer, std::vector<int>> primary;
  long free_rank = 0;
  for (const auto& o : orders) {
    if (o == 0) {
      ++free_rank;
      continue;
    }
    for (const auto& [p, k] : factor_integer(o)) primary[p].push_back(k);
  }
  return from_primary(primary, free_rank);
}

AbelianGroup AbelianGroup::elementary(const Integer& m, long k) {
  if (k < 0) throw Error("negative multiplicity");
  return from_cyclic(std::vector<Integer>(k, m));
}

std::map<Integer, std::vector<int>> AbelianGroup::primary() const {
  std::map<Integer, std::vector<int>> out;
  for (const auto& d : factors_)
    for (const auto& [p, k] : factor_integer(d)) out[p].push_back(k);
  for (auto& [p, ex] : out) std::sort(ex.rbegin(), ex.rend());
  return out;
}

Integer AbelianGroup::order() const {
  if (!is_finite()) throw Error("order of an infinite group");
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer AbelianGroup::exponent() const {
  if (!is_finite()) throw Error("exponent of an infinite group");
  return factors_.empty() ? Integer(1) : factors_.back();
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& rhs) const {
  auto a = primary();
  for (const auto& [p, ex] : rhs.primary()) a[p].insert(a[p].end(), ex.begin(), ex.end());
  return from_primary(a, free_rank_ + rhs.free_rank_);
}

AbelianGroup AbelianGroup::power(long e) const {
  if (e < 0) throw Error("negative power of a group");
  auto a = primary();
  for (auto& [p, ex] : a) {
    std::vector<int> rep;
    for (long i = 0; i < e; ++i) rep.insert(rep.end(), ex.begin(), ex.end());
    ex = std::move(rep);
  }
  return from_primary(a, free_rank_ * e);
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ > 0) parts.push_back(free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_));
  for (std::size_t i = factors_.size(); i-- > 0;) {
    std::size_t j = i;
    while (j > 0 && factors_[j - 1] == factors_[i]) --j;
    const std::size_t count = i - j + 1;
    const std::string cyc = "Z/" + factors_[i].get_str();
    parts.push_back(count == 1 ? cyc : "(" + cyc + ")^" + std::to_string(count));
    i = j;
  }
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? " x " : "") + parts[k];
  return s;
}

AbelianGroup group_root(const AbelianGroup& g, long e) {
  if (e < 1) throw Error("group_root needs e >= 1");
  if (!g.is_finite()) throw Error("group_root of an infinite group");
  std::map<Integer, std::vector<int>> out;
  for (const auto& [p, ex] : g.primary()) {
    std::map<int, long> mult;
    for (int k : ex) ++mult[k];
    for (const auto& [k, c] : mult) {
      if (c % e != 0)
        throw Error("no " + std::to_string(e) + "-th root: Z/" + p.get_str() + "^" + std::to_string(k) +
                    " occurs " + std::to_string(c) + " times");
      out[p].insert(out[p].end(), c / e, k);
    }
  }
  return AbelianGroup::from_primary(out);
}

}  // namespace isojac
