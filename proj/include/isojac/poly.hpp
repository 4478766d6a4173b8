#ifndef ISOJAC_POLY_HPP
#define ISOJAC_POLY_HPP

#include "isojac/field.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace isojac {

/// Exponents of x1, x2 and the deformation parameter t.
struct Monomial {
  int x1 = 0;
  int x2 = 0;
  int t = 0;
  auto operator<=>(const Monomial&) const = default;
  Monomial operator+(const Monomial& o) const { return {x1 + o.x1, x2 + o.x2, t + o.t}; }
};

/// Sparse polynomial in x1, x2, t over a FieldTower. Zero coefficients are
/// never stored; iteration is in increasing (x1, x2, t) order.
class CorrPoly {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  CorrPoly() = default;
  explicit CorrPoly(TowerPtr field) : field_(std::move(field)) {}

  static CorrPoly constant(const FieldElement& c);
  static CorrPoly monomial(const FieldElement& c, Monomial m);
  static CorrPoly x1(const TowerPtr& f) { return monomial(f->one(), {1, 0, 0}); }
  static CorrPoly x2(const TowerPtr& f) { return monomial(f->one(), {0, 1, 0}); }
  static CorrPoly t(const TowerPtr& f) { return monomial(f->one(), {0, 0, 1}); }

  const TowerPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  FieldElement coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const FieldElement& c);

  int degree_x1() const;
  int degree_x2() const;
  int degree_t() const;
  /// Total degree in (x1, x2), ignoring t.
  int degree_xy() const;
  bool is_constant() const;
  /// The constant term as a field element; throws unless is_constant().
  FieldElement constant_value() const;

  /// Coefficient of x1^k as a polynomial in x2 and t.
  CorrPoly coeff_x1(int k) const;
  /// Coefficient of x2^k as a polynomial in x1 and t.
  CorrPoly coeff_x2(int k) const;

  CorrPoly operator-() const;
  CorrPoly& operator+=(const CorrPoly& rhs);
  CorrPoly& operator-=(const CorrPoly& rhs);
  CorrPoly& operator*=(const FieldElement& c);
  friend CorrPoly operator+(CorrPoly a, const CorrPoly& b) { return a += b; }
  friend CorrPoly operator-(CorrPoly a, const CorrPoly& b) { return a -= b; }
  friend CorrPoly operator*(const CorrPoly& a, const CorrPoly& b);
  friend CorrPoly operator*(CorrPoly a, const FieldElement& c) { return a *= c; }
  friend CorrPoly operator*(const FieldElement& c, CorrPoly a) { return a *= c; }
  bool operator==(const CorrPoly& rhs) const;

  CorrPoly pow(unsigned k) const;

  /// Human-readable rendering, e.g. "x1^3 - (a + 1)*x1^2*x2 + 2*t".
  std::string to_string() const;

 private:
  void require_field(const CorrPoly& rhs);

  TowerPtr field_;
  Terms terms_;
};

/// Raised by shape_check with the offending monomial (when there is one).
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::optional<Monomial> m = std::nullopt) : Error(what), monomial_(m) {}
  const std::optional<Monomial>& monomial() const { return monomial_; }

 private:
  std::optional<Monomial> monomial_;
};

/// Raised by exact_divide; carries the non-zero remainder.
class DivisionError : public Error {
 public:
  DivisionError(const std::string& what, CorrPoly remainder) : Error(what), remainder_(std::move(remainder)) {}
  const CorrPoly& remainder() const { return remainder_; }

 private:
  CorrPoly remainder_;
};

/// Checks A = sum_i c_i(x2) x1^{r-i} with deg c_i <= i, deg_x1 = deg_x2 =
/// total degree = r <= n and c_0 a non-zero field constant. Returns r.
int shape_check(const CorrPoly& a, int n);

/// x1 <-> x2.
CorrPoly tau(const CorrPoly& a);

/// Quotient B with F = A * B, by division in x1 over K[x2, t]. The leading
/// x1-coefficient of A must be a non-zero constant.
CorrPoly exact_divide(const CorrPoly& f, const CorrPoly& a);

/// Quotient and remainder of the same division.
std::pair<CorrPoly, CorrPoly> divide_x1(const CorrPoly& f, const CorrPoly& a);

namespace action {
struct Sigma {};
/// Apply sigma to the coefficients of terms with positive t-degree only.
struct SigmaOnT {};
struct Negate {};
struct Specialize {
  FieldElement value;  // t := value
};
/// x1 <- a1 x1 + b1, x2 <- a2 x2 + b2.
struct Affine {
  FieldElement a1, b1, a2, b2;
};
}  // namespace action

using CoeffAction = std::variant<action::Sigma, action::SigmaOnT, action::Negate, action::Specialize, action::Affine>;

CorrPoly map_coeffs(const CorrPoly& a, const CoeffAction& act);

CorrPoly sigma(const CorrPoly& a);
CorrPoly specialize_t(const CorrPoly& a, const FieldElement& value);
CorrPoly affine(const CorrPoly& a, const FieldElement& a1, const FieldElement& b1, const FieldElement& a2,
                const FieldElement& b2);

/// Evaluates a polynomial in x1 only (univariate) at a field element.
FieldElement evaluate_x1(const CorrPoly& f, const FieldElement& x);

/// Rewrites a univariate polynomial in x1 as the same polynomial in x2.
CorrPoly as_x2(const CorrPoly& f);

/// Applies a field embedding coefficient-wise.
CorrPoly map_field(const CorrPoly& a, const FieldEmbedding& emb);

/// Parses an expression in x1, x2, t (x is an alias of x1), the tower's
/// generator names and any extra named constants. Supports + - * / ^ and
/// parentheses; division only by non-zero constants.
CorrPoly parse_poly(std::string_view text, const TowerPtr& field,
                    const std::map<std::string, FieldElement>& constants = {});

}  // namespace isojac

#endif  // ISOJAC_POLY_HPP
