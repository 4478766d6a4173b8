#include "isojac/field.hpp"

#include "isojac/linalg.hpp"

#include <numeric>
#include <sstream>

namespace isojac {

namespace {

bool all_zero(const Rational* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(p[i]) != 0) return false;
  return true;
}

std::string default_name(std::size_t step, std::size_t num_steps) {
  return std::string(1, static_cast<char>('a' + (num_steps - 1 - step)));
}

}  // namespace

// ---------------------------------------------------------------------------
// TowerStep / FieldTower

TowerStep TowerStep::over_rationals(std::vector<Rational> coeffs) {
  TowerStep s;
  for (auto& c : coeffs) s.coeffs.push_back({std::move(c)});
  return s;
}

TowerPtr FieldTower::make(std::vector<TowerStep> steps, bool cm, std::vector<std::string> names) {
  std::shared_ptr<FieldTower> t(new FieldTower());
  for (std::size_t k = 0; k < steps.size(); ++k) {
    TowerStep& s = steps[k];
    const int below = t->sizes_.back();
    if (s.coeffs.size() < 2) throw Error("tower step " + std::to_string(k + 1) + " has degree < 1");
    for (auto& c : s.coeffs) {
      if (c.size() > static_cast<std::size_t>(below))
        throw Error("tower step " + std::to_string(k + 1) + ": coefficient has too many coordinates");
      c.resize(below);
    }
    const auto& lead = s.coeffs.back();
    if (lead[0] != 1 || !all_zero(lead.data() + 1, lead.size() - 1))
      throw Error("tower step " + std::to_string(k + 1) + " is not monic");
    t->degrees_.push_back(static_cast<int>(s.degree()));
    t->sizes_.push_back(below * static_cast<int>(s.degree()));
  }
  if (cm && !steps.empty() && steps.back().degree() != 2)
    throw Error("CM designation requires a quadratic top step");
  t->cm_ = cm && !steps.empty();
  t->steps_ = std::move(steps);
  if (names.empty())
    for (std::size_t k = 0; k < t->steps_.size(); ++k) names.push_back(default_name(k, t->steps_.size()));
  if (names.size() != t->steps_.size()) throw Error("one generator name per tower step is required");
  t->names_ = std::move(names);
  t->compute_scales();
  return t;
}

TowerPtr make_field(std::vector<TowerStep> steps, bool cm, std::vector<std::string> names) {
  return FieldTower::make(std::move(steps), cm, std::move(names));
}

void FieldTower::compute_scales() {
  scales_.assign(steps_.size(), Integer(1));
  weights_.assign(degree(), Rational(1));
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const TowerStep& s = steps_[k];
    const std::size_t d = s.degree();
    // order coordinates of the lower coefficients, relative to the lower order
    Integer lcm = 1;
    for (std::size_t j = 0; j < d; ++j)
      for (int i = 0; i < sizes_[k]; ++i) {
        Rational q = s.coeffs[j][i] / weights_[i];
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
      }
    Integer chosen = lcm;
    for (Integer cand = 1; cand < lcm; ++cand) {
      if (lcm % cand != 0) continue;
      bool ok = true;
      for (std::size_t j = 0; j < d && ok; ++j) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), cand.get_mpz_t(), d - j);
        for (int i = 0; i < sizes_[k] && ok; ++i) ok = is_integer(Rational(s.coeffs[j][i] / weights_[i]) * p);
      }
      if (ok) {
        chosen = cand;
        break;
      }
    }
    scales_[k] = chosen;
    // weights for the basis of the first k+1 steps
    for (int idx = sizes_[k + 1] - 1; idx >= 0; --idx) {
      const int power = idx / sizes_[k];
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), chosen.get_mpz_t(), power);
      weights_[idx] = weights_[idx % sizes_[k]] * p;
    }
  }
}

bool FieldTower::rescaled() const {
  for (const auto& s : scales_)
    if (s != 1) return true;
  return false;
}

TowerPtr FieldTower::subtower(std::size_t k) const {
  if (k > steps_.size()) throw Error("subtower index out of range");
  std::vector<TowerStep> steps(steps_.begin(), steps_.begin() + k);
  std::vector<std::string> names(names_.begin(), names_.begin() + k);
  return make(std::move(steps), cm_ && k == steps_.size(), std::move(names));
}

bool FieldTower::same_as(const FieldTower& other) const {
  if (this == &other) return true;
  if (cm_ != other.cm_ || steps_.size() != other.steps_.size()) return false;
  for (std::size_t k = 0; k < steps_.size(); ++k)
    if (steps_[k].coeffs != other.steps_[k].coeffs) return false;
  return true;
}

FieldElement FieldTower::zero() const { return FieldElement(shared_from_this(), std::vector<Rational>(degree())); }

FieldElement FieldTower::one() const { return from_rational(1); }

FieldElement FieldTower::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree());
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldTower::generator(std::size_t step) const {
  if (step >= steps_.size()) throw Error("generator index out of range");
  // a linear step adjoins its root -c_0, already in the subfield
  if (degrees_[step] == 1) return -embed_subfield(steps_[step].coeffs[0]);
  return basis_element(sizes_[step]);
}

FieldElement FieldTower::basis_element(int index) const {
  if (index < 0 || index >= degree()) throw Error("basis index out of range");
  std::vector<Rational> c(degree());
  c[index] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldTower::element(std::vector<Rational> coords) const {
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement FieldTower::embed_subfield(std::span<const Rational> coords) const {
  if (coords.size() > static_cast<std::size_t>(degree())) throw Error("subfield element too long");
  std::vector<Rational> c(coords.begin(), coords.end());
  c.resize(degree());
  return FieldElement(shared_from_this(), std::move(c));
}

std::vector<int> FieldTower::exponents(int index) const {
  std::vector<int> e(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) e[k] = (index / sizes_[k]) % degrees_[k];
  return e;
}

void FieldTower::mul_level(std::size_t level, const Rational* a, const Rational* b, Rational* out) const {
  if (level == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t d = degrees_[level - 1];
  const std::size_t s = sizes_[level - 1];
  const TowerStep& step = steps_[level - 1];
  std::vector<Rational> prod((2 * d - 1) * s);
  std::vector<Rational> tmp(s);
  for (std::size_t i = 0; i < d; ++i) {
    if (all_zero(a + i * s, s)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(b + j * s, s)) continue;
      mul_level(level - 1, a + i * s, b + j * s, tmp.data());
      for (std::size_t l = 0; l < s; ++l) prod[(i + j) * s + l] += tmp[l];
    }
  }
  // X^p = -X^{p-d} * sum_{j<d} c_j X^j
  for (std::size_t p = 2 * d - 2; p >= d; --p) {
    const Rational* c = prod.data() + p * s;
    if (!all_zero(c, s)) {
      std::vector<Rational> lead(c, c + s);
      for (std::size_t j = 0; j < d; ++j) {
        if (all_zero(step.coeffs[j].data(), s)) continue;
        mul_level(level - 1, lead.data(), step.coeffs[j].data(), tmp.data());
        for (std::size_t l = 0; l < s; ++l) prod[(p - d + j) * s + l] -= tmp[l];
      }
    }
    if (p == d) break;
  }
  for (std::size_t i = 0; i < d * s; ++i) out[i] = std::move(prod[i]);
}

std::vector<Rational> FieldTower::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
  std::vector<Rational> out(degree());
  mul_level(steps_.size(), a.data(), b.data(), out.data());
  return out;
}

std::vector<Rational> FieldTower::conjugate(std::span<const Rational> a) const {
  std::vector<Rational> out(a.begin(), a.end());
  if (!cm_) return out;
  // a = c0 + c1 g with g^2 + p g + q = 0  =>  sigma(a) = (c0 - c1 p) - c1 g
  const std::size_t top = steps_.size();
  const std::size_t s = sizes_[top - 1];
  std::vector<Rational> c1p(s);
  mul_level(top - 1, a.data() + s, steps_.back().coeffs[1].data(), c1p.data());
  for (std::size_t l = 0; l < s; ++l) {
    out[l] -= c1p[l];
    out[s + l] = -out[s + l];
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(TowerPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw Error("field element without a field");
  if (coords_.size() > static_cast<std::size_t>(field_->degree())) throw Error("too many coordinates for field");
  coords_.resize(field_->degree());
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!field_ || !rhs.field_) throw Error("operation on an uninitialised field element");
  if (field_ != rhs.field_ && !field_->same_as(*rhs.field_)) throw Error("field elements belong to different towers");
}

bool FieldElement::is_zero() const { return all_zero(coords_.data(), coords_.size()); }

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

bool FieldElement::is_rational() const { return all_zero(coords_.data() + 1, coords_.size() - 1); }

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error("field element " + to_string() + " is not rational");
  return coords_[0];
}

bool FieldElement::is_integral() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!is_integer(Rational(coords_[i] / field_->basis_weight(static_cast<int>(i))))) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  coords_ = field_->multiply(coords_, rhs.coords_);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  require_same_field(rhs);
  return coords_ == rhs.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("inversion of zero");
  if (is_rational()) return field_->from_rational(Rational(1) / coords_[0]);
  // x with a * x = 1: columns of the multiplication-by-a matrix
  auto rep = rational_rep(*this);  // row i = basis_i * a
  const std::size_t e = coords_.size();
  linalg::Matrix<Rational> m(e, std::vector<Rational>(e));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t k = 0; k < e; ++k) m[k][i] = rep[i][k];
  std::vector<Rational> rhs(e);
  rhs[0] = 1;
  bool unique = false;
  auto x = linalg::solve(std::move(m), std::move(rhs), Rational(0), &unique);
  if (!x || !unique) throw Error("element " + to_string() + " is a zero divisor (reducible tower step?)");
  return FieldElement(field_, std::move(*x));
}

FieldElement FieldElement::pow(unsigned k) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (!field_) return "<null>";
  std::ostringstream os;
  bool first = true;
  for (int idx = static_cast<int>(coords_.size()) - 1; idx >= 0; --idx) {
    const Rational& c = coords_[idx];
    if (sgn(c) == 0) continue;
    std::string mono;
    auto ex = field_->exponents(idx);
    for (std::size_t k = ex.size(); k-- > 0;) {
      if (ex[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += field_->names()[k];
      if (ex[k] > 1) mono += "^" + std::to_string(ex[k]);
    }
    Rational a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Operations

FieldElement apply_sigma(const FieldElement& a) {
  return FieldElement(a.field(), a.field()->conjugate(a.coords()));
}

std::vector<std::vector<Rational>> rational_rep(const FieldElement& a) {
  const auto& f = *a.field();
  const int e = f.degree();
  std::vector<std::vector<Rational>> rep;
  rep.reserve(e);
  for (int i = 0; i < e; ++i) {
    std::vector<Rational> unit(e);
    unit[i] = 1;
    rep.push_back(f.multiply(unit, a.coords()));
  }
  return rep;
}

IntMatrix regular_rep(const FieldElement& a) {
  const auto& f = *a.field();
  const int e = f.degree();
  std::vector<Integer> dens;
  for (int i = 0; i < e; ++i) {
    Rational q = a.coords()[i] / f.basis_weight(i);
    if (!is_integer(q)) dens.push_back(q.get_den());
  }
  if (!dens.empty()) {
    std::string msg = "element " + a.to_string() + " is not integral in the order basis (denominators";
    for (const auto& d : dens) msg += " " + d.get_str();
    throw IntegralityError(msg + ")", dens);
  }
  auto rep = rational_rep(a);
  IntMatrix out(e, e);
  for (int i = 0; i < e; ++i)
    for (int k = 0; k < e; ++k) {
      // (w_i g_i) a = sum_k rep[i][k] w_i g_k = sum_k (rep[i][k] w_i / w_k) (w_k g_k)
      Rational q = rep[i][k] * f.basis_weight(i) / f.basis_weight(k);
      if (!is_integer(q)) throw IntegralityError("order basis is not closed under multiplication", {q.get_den()});
      out(i, k) = q.get_num();
    }
  return out;
}

Rational norm(const FieldElement& a) {
  return linalg::determinant(rational_rep(a), Rational(0), Rational(1));
}

Rational trace(const FieldElement& a) {
  auto rep = rational_rep(a);
  Rational t = 0;
  for (std::size_t i = 0; i < rep.size(); ++i) t += rep[i][i];
  return t;
}

std::vector<Rational> minimal_polynomial(const FieldElement& a) {
  // first power of a that is a Q-combination of the lower ones
  const int e = a.field()->degree();
  std::vector<FieldElement> powers{a.field()->one()};
  for (int k = 1; k <= e; ++k) {
    FieldElement next = powers.back() * a;
    linalg::Matrix<Rational> m(e, std::vector<Rational>(k));
    std::vector<Rational> rhs(e);
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < k; ++j) m[i][j] = powers[j].coords()[i];
      rhs[i] = next.coords()[i];
    }
    if (auto x = linalg::solve(std::move(m), std::move(rhs), Rational(0))) {
      std::vector<Rational> poly;
      for (auto& c : *x) poly.push_back(-c);
      poly.push_back(1);
      return poly;
    }
    powers.push_back(std::move(next));
  }
  throw Error("minimal_polynomial: no relation found");
}

// ---------------------------------------------------------------------------
// FieldEmbedding

FieldEmbedding::FieldEmbedding(TowerPtr source, TowerPtr target, std::vector<FieldElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (generator_images.size() != source_->num_steps()) throw Error("embedding: one image per generator required");
  for (const auto& g : generator_images)
    if (!g.field()->same_as(*target_)) throw Error("embedding: generator image outside the target field");
  basis_images_.push_back(target_->one());
  for (std::size_t k = 0; k < source_->num_steps(); ++k) {
    const TowerStep& step = source_->steps()[k];
    // images of the first sizes[k] basis elements are known; check m_k(image) = 0
    auto map_lower = [&](const std::vector<Rational>& c) {
      FieldElement r = target_->zero();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) r += basis_images_[i] * c[i];
      return r;
    };
    FieldElement value = target_->zero();
    for (std::size_t j = step.degree() + 1; j-- > 0;) value = value * generator_images[k] + map_lower(step.coeffs[j]);
    if (!value.is_zero())
      throw Error("embedding: image of generator " + source_->names()[k] + " does not satisfy its defining polynomial");
    const std::size_t below = basis_images_.size();
    FieldElement power = generator_images[k];
    for (std::size_t j = 1; j < step.degree(); ++j) {
      for (std::size_t i = 0; i < below; ++i) basis_images_.push_back(basis_images_[i] * power);
      power *= generator_images[k];
    }
  }
}

FieldElement FieldEmbedding::operator()(const FieldElement& x) const {
  if (!x.field()->same_as(*source_)) throw Error("embedding applied to an element of another field");
  FieldElement r = target_->zero();
  for (std::size_t i = 0; i < basis_images_.size(); ++i)
    if (sgn(x.coords()[i]) != 0) r += basis_images_[i] * x.coords()[i];
  return r;
}

}  // namespace isojac
