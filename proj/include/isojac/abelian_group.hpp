#ifndef ISOJAC_ABELIAN_GROUP_HPP
#define ISOJAC_ABELIAN_GROUP_HPP

#include "isojac/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace isojac {

/// Finitely generated abelian group Z^r x Z/d_1 x ... x Z/d_k with
/// 1 < d_1 | d_2 | ... | d_k.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// From any list of cyclic orders; 1s are dropped and 0 stands for Z.
  static AbelianGroup from_cyclic(const std::vector<Integer>& orders);
  /// (Z/m)^k.
  static AbelianGroup elementary(const Integer& m, long k);
  /// From prime -> exponents (e.g. {2: [2, 1, 1]} is Z/4 x (Z/2)^2).
  static AbelianGroup from_primary(const std::map<Integer, std::vector<int>>& primary, long free_rank = 0);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  long free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

  /// Prime -> exponents, each list in decreasing order.
  std::map<Integer, std::vector<int>> primary() const;

  Integer order() const;     // throws for infinite groups
  Integer exponent() const;  // throws for infinite groups

  AbelianGroup operator+(const AbelianGroup& rhs) const;  // direct sum
  AbelianGroup power(long e) const;                        // e-fold direct sum
  bool operator==(const AbelianGroup& rhs) const = default;

  /// Canonical rendering, e.g. "(Z/4)^9 x (Z/2)^2", "Z/8 x Z/4", "0".
  std::string to_string() const;

 private:
  std::vector<Integer> factors_;
  long free_rank_ = 0;
};

/// H with H^e = G, by dividing every primary multiplicity by e. Throws when
/// a multiplicity is not divisible by e or G is infinite.
AbelianGroup group_root(const AbelianGroup& g, long e);

/// Factorization of |n| into primes with multiplicity, n != 0.
std::map<Integer, int> factor_integer(const Integer& n);

}  // namespace isojac

#endif  // ISOJAC_ABELIAN_GROUP_HPP
