#ifndef ISOJAC_FIELD_HPP
#define ISOJAC_FIELD_HPP

// Exact arithmetic in number fields presented as towers of monic extensions
//
//   Q = K_0 ⊂ K_1 = K_0[g_1]/(m_1) ⊂ ... ⊂ K_s = K_{s-1}[g_s]/(m_s).
//
// Elements are coordinate vectors over the power-product basis
// g_1^{i_1} ... g_s^{i_s}, ordered lexicographically with the top generator
// most significant. An element of K_s is therefore the concatenation of its
// coefficient chunks (c_0, c_1, ...) in K_s = ⊕ K_{s-1} g_s^j, and the
// prefix of length [K_k : Q] of a vector is an element of the subfield K_k.
//
// When a tower is built with a CM designation its top step is quadratic and
// sigma is the non-trivial automorphism of K_s / K_{s-1}. Towers without one
// are treated as totally real: sigma is the identity.

#include "isojac/int_matrix.hpp"
#include "isojac/rational.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isojac {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(TowerPtr field, std::vector<Rational> coords);

  const TowerPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when only the coordinate on the basis element 1 may be non-zero.
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  /// Integral with respect to the tower's order basis.
  bool is_integral() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator*=(const Rational& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& b) { return a *= b; }
  friend FieldElement operator*(const Rational& b, FieldElement a) { return a *= b; }

  bool operator==(const FieldElement& rhs) const;

  FieldElement inverse() const;
  FieldElement pow(unsigned k) const;

  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& rhs) const;

  TowerPtr field_;
  std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }

/// One extension step: the monic defining polynomial of the next generator.
/// coeffs[j] is the coefficient of X^j, as coordinates over the subfield
/// built so far; the last entry must be the element 1.
struct TowerStep {
  std::vector<std::vector<Rational>> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  /// Convenience for steps over Q (and for constant-only coefficients).
  static TowerStep over_rationals(std::vector<Rational> coeffs);
};

class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  /// Builds the tower. Throws on non-monic steps, on degree-0 steps, and when
  /// `cm` is requested but the top step is not quadratic.
  static TowerPtr make(std::vector<TowerStep> steps, bool cm, std::vector<std::string> names = {});

  int degree() const { return sizes_.back(); }
  std::size_t num_steps() const { return steps_.size(); }
  const std::vector<TowerStep>& steps() const { return steps_; }
  const std::vector<int>& step_degrees() const { return degrees_; }
  /// Degree of the subfield generated by the first k steps.
  int subfield_degree(std::size_t k) const { return sizes_[k]; }
  bool has_cm() const { return cm_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Tower made of the first k steps (no CM designation unless k == num_steps()).
  TowerPtr subtower(std::size_t k) const;
  /// Structural equality (same steps, same CM flag).
  bool same_as(const FieldTower& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement generator(std::size_t step) const;
  FieldElement basis_element(int index) const;
  FieldElement element(std::vector<Rational> coords) const;
  /// Lifts an element of a subfield (given as its coordinates) to this tower.
  FieldElement embed_subfield(std::span<const Rational> coords) const;

  /// Exponent tuple (bottom step first) of basis element `index`.
  std::vector<int> exponents(int index) const;

  /// Integer rescaling s_k of each generator so that s_k g_k is integral over
  /// the order built below it; all ones for integral towers.
  const std::vector<Integer>& generator_scales() const { return scales_; }
  bool rescaled() const;
  /// Order basis element i equals weight(i) times power-product basis element i.
  const Rational& basis_weight(int index) const { return weights_[index]; }

  // Raw coordinate arithmetic; used by FieldElement.
  std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b) const;
  std::vector<Rational> conjugate(std::span<const Rational> a) const;

 private:
  FieldTower() = default;

  void mul_level(std::size_t level, const Rational* a, const Rational* b, Rational* out) const;
  void compute_scales();

  std::vector<TowerStep> steps_;
  std::vector<int> degrees_;
  std::vector<int> sizes_{1};
  std::vector<std::string> names_;
  std::vector<Integer> scales_;
  std::vector<Rational> weights_;
  bool cm_ = false;
};

/// make_field: tower of monic extensions, CM-designated iff `cm`.
TowerPtr make_field(std::vector<TowerStep> steps, bool cm = true, std::vector<std::string> names = {});

/// Non-trivial automorphism of the top (CM) step; identity on real towers.
FieldElement apply_sigma(const FieldElement& a);

/// Thrown by regular_rep for elements outside the order.
class IntegralityError : public Error {
 public:
  IntegralityError(const std::string& what, std::vector<Integer> denominators)
      : Error(what), denominators_(std::move(denominators)) {}
  const std::vector<Integer>& denominators() const { return denominators_; }

 private:
  std::vector<Integer> denominators_;
};

/// Integer matrix Γ with γ_i · a = Σ_k Γ_ik γ_k over the order basis γ.
IntMatrix regular_rep(const FieldElement& a);

/// Rational matrix of multiplication by a over the power-product basis
/// (row i = coordinates of basis_i · a).
std::vector<std::vector<Rational>> rational_rep(const FieldElement& a);

/// Absolute norm N_{K/Q}(a) = det of the rational regular representation.
Rational norm(const FieldElement& a);
Rational trace(const FieldElement& a);

/// Monic minimal polynomial of a over Q, constant term first.
std::vector<Rational> minimal_polynomial(const FieldElement& a);

/// A field homomorphism between towers, fixed by the images of the source
/// generators; the images are checked against every defining polynomial.
class FieldEmbedding {
 public:
  FieldEmbedding(TowerPtr source, TowerPtr target, std::vector<FieldElement> generator_images);

  FieldElement operator()(const FieldElement& x) const;
  const TowerPtr& source() const { return source_; }
  const TowerPtr& target() const { return target_; }

 private:
  TowerPtr source_;
  TowerPtr target_;
  std::vector<FieldElement> basis_images_;
};

}  // namespace isojac

#endif  // ISOJAC_FIELD_HPP
