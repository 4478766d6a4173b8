#ifndef ISOJAC_LATTICE_HPP
#define ISOJAC_LATTICE_HPP

// Kernel of the isogeny induced by a correspondence, through the integer
// representation rho*(D(A)_k ⊕ sigma D(A)_k) and its Smith form.

#include "isojac/abelian_group.hpp"
#include "isojac/diffrep.hpp"
#include "isojac/int_matrix.hpp"

#include <optional>
#include <vector>

namespace isojac {

/// Elementary divisors d_1 | d_2 | ... of M, min(rows, cols) of them, with
/// zeros for rank deficiency.
std::vector<Integer> smith_divisors(IntMatrix m);

/// Block matrix (rho(M_ij)) over the order basis of the field.
IntMatrix rho_star(const FieldMatrix& m);

struct GakEntry {
  int k = 0;
  AbelianGroup group;  // G(A, k)
  Rational det_norm;   // N_{K/Q}(det D(A)_k) at the chosen t
};

/// G(A, k) for one k, from a precomputed D(A)_{n-1}.
GakEntry gak_block(const DiffBlock& block, int k, long t_value);

/// G(A, 1) .. G(A, n-1).
std::vector<GakEntry> gak(const CorrPoly& a, int n, long t_value);

struct KernelReport {
  int d = 0;
  int n = 0;
  long t_value = 1;
  long e = 1;                     // field degree
  std::vector<int> slices;        // p_{d,n}(1..B)
  std::vector<GakEntry> blocks;   // one per distinct slice size, increasing k
  AbelianGroup sum;               // ⊕_i G(A, p(i)) = (ker)^e
  AbelianGroup kernel;            // e-th root of sum
  std::optional<Integer> m;       // from check_split
  std::optional<AbelianGroup> squarefree_kernel;  // (Z/m)^g when m is squarefree
  bool routes_agree = true;       // squarefree route vs Smith route (when available)
  bool order_ok = true;           // |ker| = m^g (when m is known)
  bool exponent_ok = true;        // exponent of ker divides m (when m is known)
};

/// Kernel of phi_C on Jac X for y^d = f(x). Computes both routes when m is
/// squarefree; mismatches are recorded, not thrown.
KernelReport kernel_structure(const CorrPoly& a, int d, int n, long t_value = 1);

/// Same, reusing a block and a splitting certificate already at hand.
KernelReport kernel_from_block(const DiffBlock& block, const std::optional<Integer>& m, int d, long t_value = 1);

bool is_squarefree(const Integer& m);

}  // namespace isojac

#endif  // ISOJAC_LATTICE_HPP
