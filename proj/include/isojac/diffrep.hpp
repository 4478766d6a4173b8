#ifndef ISOJAC_DIFFREP_HPP
#define ISOJAC_DIFFREP_HPP

// Representation of a correspondence A(x1, x2) = 0 on regular differentials.
//
// With c_i(x2) the coefficient of x1^{r-i} in A, the x1-roots of A have power
// sums t_i(x2) satisfying the Newton-Girard recurrence
//
//   c_0 t_i = -(i c_i + sum_{j=1}^{i-1} c_j t_{i-j}),     c_i = 0 for i > r,
//
// and D(A)_{n-1} collects the x2-coefficients mu_{i,j} of t_i for
// 1 <= i, j <= n-1. Entries stay polynomials in t.

#include "isojac/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isojac {

using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Square matrix whose entries are polynomials in t alone.
class DiffBlock {
 public:
  DiffBlock() = default;
  DiffBlock(TowerPtr field, std::size_t size);

  static DiffBlock identity(const TowerPtr& field, std::size_t size);

  std::size_t size() const { return entries_.size(); }
  const TowerPtr& field() const { return field_; }
  const CorrPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  CorrPoly& operator()(std::size_t i, std::size_t j) { return entries_[i][j]; }

  /// Upper-left k x k block D(A)_k.
  DiffBlock submatrix(std::size_t k) const;
  /// Entry-wise sigma.
  DiffBlock sigma() const;
  bool is_lower_triangular() const;
  bool is_identity() const;
  /// The scalar m when the matrix is m times the identity (m constant in t).
  std::optional<FieldElement> scalar_value() const;
  /// Substitutes t := value in every entry.
  FieldMatrix specialize(const FieldElement& value) const;
  /// Product of the diagonal (the determinant, the matrix being triangular).
  CorrPoly diagonal_product() const;
  bool has_t() const;

  DiffBlock operator*(const DiffBlock& rhs) const;
  DiffBlock operator+(const DiffBlock& rhs) const;
  DiffBlock operator*(const FieldElement& c) const;
  bool operator==(const DiffBlock& rhs) const;
  DiffBlock pow(unsigned k) const;

  /// Aligned text rendering, one row per line.
  std::string to_string() const;

 private:
  TowerPtr field_;
  std::vector<std::vector<CorrPoly>> entries_;
};

/// Power sums t_1 .. t_{n-1} of the x1-roots of A, as polynomials in x2, t.
std::vector<CorrPoly> newton_girard(const CorrPoly& a, int n);

/// D(A)_{n-1}.
DiffBlock differential_block(const CorrPoly& a, int n);

/// Block sizes p_{d,n}(1..B) of D(phi_C) = ⊕ D(A)_{p(i)}.
std::vector<int> assemble_full(const DiffBlock& d_block, int d);

/// m when D(A)_{n-1} D(tau A)_{n-1} = m I with m a positive integer.
std::optional<Integer> check_split(const CorrPoly& a, int n);

/// p(D) for a polynomial with rational coefficients (constant term first).
DiffBlock evaluate_at(const std::vector<Rational>& poly, const DiffBlock& m);

}  // namespace isojac

#endif  // ISOJAC_DIFFREP_HPP
