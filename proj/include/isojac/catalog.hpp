#ifndef ISOJAC_CATALOG_HPP
#define ISOJAC_CATALOG_HPP

// Families of correspondences: the bundled CNC families n = 7, 11, 13, 21,
// file-backed ones (15, 31), the cyclotomic and Dickson families, and the
// expected-results table.

#include "isojac/abelian_group.hpp"
#include "isojac/diffrep.hpp"
#include "isojac/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isojac {

struct ExpectedRow {
  std::optional<Integer> m;
  /// e.g. "4^(g - g3) x 2^(2*g3)"; empty when there is no expectation.
  std::string kernel_template;
  std::optional<int> e;
  /// "d" or "d-1"; empty when unknown.
  std::string nu;
  /// tau(A) = tau_sign * sigma(A).
  std::optional<int> tau_sign;
  /// Primes of absolute simplicity, carried as metadata only.
  std::string simplicity_set;
};

struct FamilySpec {
  std::string id;
  int n = 0;
  TowerPtr field;
  std::optional<CorrPoly> A;
  std::optional<CorrPoly> f;
  /// The codomain polynomial is g = sign_of_g * sigma(f).
  int sign_of_g = 1;
  ExpectedRow expected;
  /// "bundled", "file:<path>" or "constructed".
  std::string provenance;
  /// Which member of the transcription orbit A is ("as-loaded" until resolved).
  std::string variant = "as-loaded";
  /// A displayed D(A)_{n-1}, when one is printed.
  std::optional<DiffBlock> printed_block;
  /// Generator images into Q(zeta_n) and the index set S such that A at t = 0
  /// is proportional to prod_{i in S} (zeta^i x1 - x2).
  std::vector<std::string> degeneration_images;
  std::vector<int> degeneration_set;

  bool has_t() const;
  /// g(x2) = sign_of_g * sigma(f)(x2).
  std::optional<CorrPoly> g() const;
  /// f(x1) - g(x2).
  std::optional<CorrPoly> difference() const;
};

/// "7", "11", "13", "21", "15", "31", "cyclotomic:N:I", "dickson:N:I".
/// Ids 15 and 31 need a data file.
FamilySpec load_family(std::string_view id, const std::optional<std::string>& data_file = std::nullopt);

/// The families whose data is bundled, in table order.
const std::vector<std::string>& bundled_family_ids();

// --- cyclotomic and Dickson families ---

/// Phi_n, constant term first.
std::vector<Rational> cyclotomic_polynomial(int n);
/// psi_n with z^{phi(n)/2} psi_n(z + 1/z) = Phi_n(z), constant term first.
std::vector<Rational> real_cyclotomic_polynomial(int n);
/// Q(zeta_n) as the CM tower [psi_n(w), z^2 - w z + 1]; zeta = generator 1.
TowerPtr cyclotomic_field(int n);
/// Q(zeta_n + zeta_n^{-1}) = Q[w]/psi_n(w), no CM designation.
TowerPtr real_cyclotomic_field(int n);
FieldElement zeta(const TowerPtr& cyclotomic, int power = 1);

/// D_n(x1, a) via D_k = x D_{k-1} - a D_{k-2}, D_0 = 2, D_1 = x.
CorrPoly dickson(int n, const FieldElement& a);
/// D_n(x, a) for field elements.
FieldElement dickson_value(int n, const FieldElement& x, const FieldElement& a);

/// x1^2 + x2^2 - eta_i x1 x2 + (eta_i^2 - 4), eta_i = zeta^i + zeta^{-i}.
CorrPoly dickson_factor(int n, int i);
/// zeta^i x1 - x2 over Q(zeta_n).
CorrPoly cyclotomic_corr(int n, int i);

// --- transforms and reconciliation ---

/// A(a1 x1 + b1, a2 x2 + b2).
CorrPoly transform_pair(const CorrPoly& a, const FieldElement& a1, const FieldElement& b1, const FieldElement& a2,
                        const FieldElement& b2);

/// Lifts a t-free factor `seed` of F(t = 0) to a factor of F over K[t].
/// Returns nothing when the lifting equations are inconsistent or the lift
/// does not divide F.
std::optional<CorrPoly> lift_factor(const CorrPoly& f, const CorrPoly& seed);

struct VariantResolution {
  CorrPoly A;
  std::string tag;
  std::vector<std::string> tried;  // "<tag>: <verdict>" for every candidate
};

/// Searches the orbit of the loaded A under entry-wise sigma, negation and
/// sigma on the t-terms, then lifts of their t = 0 parts against f(x1) - g(x2),
/// and keeps the candidates satisfying the expected tau symmetry, the
/// expected m and divisibility. Throws when none passes, or when passing
/// candidates disagree on D(A).
VariantResolution resolve_variant(const FamilySpec& spec);

/// Applies resolve_variant and stores the result in the spec.
FamilySpec resolved(FamilySpec spec);

enum class BlockMatch { Exact, UpToSigma, Mismatch };
std::string to_string(BlockMatch m);
BlockMatch compare_blocks(const DiffBlock& computed, const DiffBlock& printed);

// --- expected kernels ---

/// Evaluates a template like "4^(g - g5 - g3) x 2^(2*g5 + 2*g3)" where g, g3,
/// g5 stand for genus(d, n), genus(d, 3), genus(d, 5). Exponents must
/// evaluate to non-negative integers.
AbelianGroup instantiate_kernel(const std::string& tmpl, int d, int n);

struct DegenerationResult {
  bool matched = false;
  int k = 0;  // automorphism zeta -> zeta^k that matched
  std::string detail;
};

/// A at t = 0, mapped into Q(zeta_n), against prod_{i in S}(zeta^{ki} x1 - x2)
/// up to a constant, for some k coprime to n.
DegenerationResult check_degeneration(const FamilySpec& spec, const CorrPoly& a);

/// D(A at t = 0) mapped into Q(zeta_n) against sum_{i in S} D(zeta^{ki} x1 - x2).
DegenerationResult check_degenerate_block(const FamilySpec& spec, const CorrPoly& a);

}  // namespace isojac

#endif  // ISOJAC_CATALOG_HPP
