#include "isojac/poly.hpp"

#include <algorithm>
#include <sstream>

namespace isojac {

namespace {

std::string monomial_string(const Monomial& m) {
  std::string s;
  auto put = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put("x1", m.x1);
  put("x2", m.x2);
  put("t", m.t);
  return s;
}

}  // namespace

CorrPoly CorrPoly::constant(const FieldElement& c) { return monomial(c, {}); }

CorrPoly CorrPoly::monomial(const FieldElement& c, Monomial m) {
  CorrPoly p(c.field());
  p.add_term(m, c);
  return p;
}

FieldElement CorrPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

void CorrPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (!field_) field_ = c.field();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int CorrPoly::degree_x1() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x1);
  return d;
}

int CorrPoly::degree_x2() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x2);
  return d;
}

int CorrPoly::degree_t() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.t);
  return d;
}

int CorrPoly::degree_xy() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x1 + m.x2);
  return d;
}

bool CorrPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

FieldElement CorrPoly::constant_value() const {
  if (!is_constant()) throw Error("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? field_->zero() : terms_.begin()->second;
}

CorrPoly CorrPoly::coeff_x1(int k) const {
  CorrPoly out(field_);
  for (const auto& [m, c] : terms_)
    if (m.x1 == k) out.terms_.emplace(Monomial{0, m.x2, m.t}, c);
  return out;
}

CorrPoly CorrPoly::coeff_x2(int k) const {
  CorrPoly out(field_);
  for (const auto& [m, c] : terms_)
    if (m.x2 == k) out.terms_.emplace(Monomial{m.x1, 0, m.t}, c);
  return out;
}

void CorrPoly::require_field(const CorrPoly& rhs) {
  if (!field_) field_ = rhs.field_;
  if (rhs.field_ && field_ != rhs.field_ && !field_->same_as(*rhs.field_))
    throw Error("polynomials over different fields");
}

CorrPoly CorrPoly::operator-() const {
  CorrPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CorrPoly& CorrPoly::operator+=(const CorrPoly& rhs) {
  require_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

CorrPoly& CorrPoly::operator-=(const CorrPoly& rhs) {
  require_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

CorrPoly& CorrPoly::operator*=(const FieldElement& c) {
  if (!field_) field_ = c.field();
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CorrPoly operator*(const CorrPoly& a, const CorrPoly& b) {
  CorrPoly out(a.field_ ? a.field_ : b.field_);
  out.require_field(b);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

bool CorrPoly::operator==(const CorrPoly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (it->first != m || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

CorrPoly CorrPoly::pow(unsigned k) const {
  CorrPoly result = constant(field_->one());
  CorrPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string CorrPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono = monomial_string(m);
    bool negative = false;
    std::string coef;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      negative = sgn(q) < 0;
      Rational a = abs(q);
      if (!(a == 1 && !mono.empty())) coef = a.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int shape_check(const CorrPoly& a, int n) {
  if (a.is_zero()) throw ShapeError("zero polynomial");
  const int r = a.degree_x1();
  if (r < 1) throw ShapeError("polynomial does not involve x1");
  if (r > n) throw ShapeError("deg_x1 A = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
  for (const auto& [m, c] : a.terms()) {
    const int i = r - m.x1;
    if (m.x2 > i) {
      if (i == 0)
        throw ShapeError("c_0 must be constant, found x2^" + std::to_string(m.x2) + " in x1^" + std::to_string(m.x1) +
                             "*x2^" + std::to_string(m.x2),
                         m);
      throw ShapeError("deg c_" + std::to_string(i) + " = " + std::to_string(m.x2) + " > " + std::to_string(i) +
                           " at monomial x1^" + std::to_string(m.x1) + "*x2^" + std::to_string(m.x2),
                       m);
    }
  }
  CorrPoly c0 = a.coeff_x1(r);
  if (!c0.is_constant()) throw ShapeError("c_0 = " + c0.to_string() + " is not a field constant");
  if (a.degree_x2() != r)
    throw ShapeError("deg_x2 A = " + std::to_string(a.degree_x2()) + " differs from deg_x1 A = " + std::to_string(r));
  if (a.degree_xy() != r) throw ShapeError("total degree differs from r = " + std::to_string(r));
  return r;
}

CorrPoly tau(const CorrPoly& a) {
  CorrPoly out(a.field());
  for (const auto& [m, c] : a.terms()) out.add_term({m.x2, m.x1, m.t}, c);
  return out;
}

std::pair<CorrPoly, CorrPoly> divide_x1(const CorrPoly& f, const CorrPoly& a) {
  const int r = a.degree_x1();
  if (r < 0) throw Error("division by zero polynomial");
  CorrPoly lead = a.coeff_x1(r);
  if (!lead.is_constant()) throw Error("divisor's leading x1-coefficient " + lead.to_string() + " is not constant");
  const FieldElement inv = lead.constant_value().inverse();
  CorrPoly q(f.field() ? f.field() : a.field());
  CorrPoly rem = f;
  // repeatedly cancel the top x1-degree slice of the remainder
  while (!rem.is_zero() && rem.degree_x1() >= r) {
    const int d = rem.degree_x1();
    CorrPoly step(rem.field());
    for (const auto& [m, c] : rem.terms())
      if (m.x1 == d) step.add_term({d - r, m.x2, m.t}, c * inv);
    q += step;
    rem -= step * a;
  }
  return {std::move(q), std::move(rem)};
}

CorrPoly exact_divide(const CorrPoly& f, const CorrPoly& a) {
  auto [q, r] = divide_x1(f, a);
  if (!r.is_zero()) throw DivisionError("non-zero remainder " + r.to_string(), r);
  return q;
}

CorrPoly sigma(const CorrPoly& a) {
  CorrPoly out(a.field());
  for (const auto& [m, c] : a.terms()) out.add_term(m, apply_sigma(c));
  return out;
}

CorrPoly specialize_t(const CorrPoly& a, const FieldElement& value) {
  CorrPoly out(a.field());
  const int dt = std::max(a.degree_t(), 0);
  std::vector<FieldElement> powers{a.field()->one()};
  for (int k = 1; k <= dt; ++k) powers.push_back(powers.back() * value);
  for (const auto& [m, c] : a.terms()) out.add_term({m.x1, m.x2, 0}, c * powers[m.t]);
  return out;
}

CorrPoly affine(const CorrPoly& a, const FieldElement& a1, const FieldElement& b1, const FieldElement& a2,
                const FieldElement& b2) {
  if (a1.is_zero() || a2.is_zero()) throw Error("affine substitution with zero scaling");
  const TowerPtr& f = a.field();
  const CorrPoly l1 = CorrPoly::x1(f) * a1 + CorrPoly::constant(b1);
  const CorrPoly l2 = CorrPoly::x2(f) * a2 + CorrPoly::constant(b2);
  std::vector<CorrPoly> p1{CorrPoly::constant(f->one())}, p2{CorrPoly::constant(f->one())};
  for (int k = 1; k <= a.degree_x1(); ++k) p1.push_back(p1.back() * l1);
  for (int k = 1; k <= a.degree_x2(); ++k) p2.push_back(p2.back() * l2);
  CorrPoly out(f);
  for (const auto& [m, c] : a.terms()) out += p1[m.x1] * p2[m.x2] * CorrPoly::monomial(c, {0, 0, m.t});
  return out;
}

CorrPoly map_coeffs(const CorrPoly& a, const CoeffAction& act) {
  struct Visitor {
    const CorrPoly& a;
    CorrPoly operator()(const action::Sigma&) const { return sigma(a); }
    CorrPoly operator()(const action::SigmaOnT&) const {
      CorrPoly out(a.field());
      for (const auto& [m, c] : a.terms()) out.add_term(m, m.t > 0 ? apply_sigma(c) : c);
      return out;
    }
    CorrPoly operator()(const action::Negate&) const { return -a; }
    CorrPoly operator()(const action::Specialize& s) const { return specialize_t(a, s.value); }
    CorrPoly operator()(const action::Affine& s) const { return affine(a, s.a1, s.b1, s.a2, s.b2); }
  };
  return std::visit(Visitor{a}, act);
}

FieldElement evaluate_x1(const CorrPoly& f, const FieldElement& x) {
  FieldElement acc = x.field()->zero();
  for (int k = f.degree_x1(); k >= 0; --k) {
    CorrPoly c = f.coeff_x1(k);
    acc = acc * x + c.constant_value();
  }
  return acc;
}

CorrPoly as_x2(const CorrPoly& f) {
  CorrPoly out(f.field());
  for (const auto& [m, c] : f.terms()) {
    if (m.x2 != 0) throw Error("as_x2: polynomial already involves x2");
    out.add_term({0, m.x1, m.t}, c);
  }
  return out;
}

CorrPoly map_field(const CorrPoly& a, const FieldEmbedding& emb) {
  CorrPoly out(emb.target());
  for (const auto& [m, c] : a.terms()) out.add_term(m, emb(c));
  return out;
}

}  // namespace isojac
