#include "isojac/catalog.hpp"

#include "isojac/family_io.hpp"
#include "isojac/geometry.hpp"
#include "isojac/linalg.hpp"

#include <cctype>
#include <numeric>
#include <set>

namespace isojac {

namespace {

// ---------------------------------------------------------------------------
// Bundled data

TowerPtr quadratic_over_q(int c1, int c0, const std::string& name) {
  return make_field({TowerStep::over_rationals({c0, c1, 1})}, true, {name});
}

TowerPtr field_13() {
  TowerStep beta = TowerStep::over_rationals({3, -5, 1});
  TowerStep alpha;
  alpha.coeffs = {{0, 1}, {-2, 1}, {1}};  // X^2 + (beta - 2) X + beta
  return make_field({beta, alpha}, true, {"beta", "alpha"});
}

std::map<std::string, FieldElement> conj_constant(const TowerPtr& f) {
  return {{"as", apply_sigma(f->generator(f->num_steps() - 1))}};
}

constexpr const char* kA7 =
    "x1^3 - x2^3 - as*x1^2*x2 + alpha*x1*x2^2 + (3 - 2*as)*t*x1 - (3 - 2*alpha)*t*x2 + (alpha - as)*t";

constexpr const char* kF7 =
    "x^7 - 7*alpha*t*x^5 - 7*alpha*t*x^4 - 7*(2*alpha + 5)*t^2*x^3 - 7*(4*alpha + 6)*t^2*x^2"
    " + 7*((3*alpha - 2)*t^3 - (alpha + 3)*t^2)*x + 7*alpha*t^3";

constexpr const char* kD7[6][6] = {
    {"alpha", "0", "0", "0", "0", "0"},
    {"0", "alpha", "0", "0", "0", "0"},
    {"-3*(2*alpha + 1)*t", "0", "as", "0", "0", "0"},
    {"-4*(alpha + 4)*t", "-4*(alpha + 4)*t", "0", "alpha", "0", "0"},
    {"35*(alpha + 2)*t^2", "-5*(2*alpha + 1)*t", "-5*(alpha - 3)*t", "0", "as", "0"},
    {"-42*(alpha - 3)*t^2", "-21*(2*alpha - 3)*t^2", "-6*(alpha - 3)*t", "-6*(2*alpha + 1)*t", "0", "as"},
};

constexpr const char* kF11 =
    "x^11 + 11*alpha*x^9 + 22*x^8 - 33*(alpha + 4)*x^7 + 176*alpha*x^6"
    " - 33*(7*alpha - 5)*x^5 - 330*(alpha + 4)*x^4 + 693*(alpha + 1)*x^3"
    " - 220*(5*alpha - 1)*x^2 - 33*(8*alpha + 47)*x + 198*alpha";

constexpr const char* kA11 =
    "x1^5 - alpha*x1^4*x2 - x1^3*x2^2 + (4*alpha + 2)*x1^3 + x1^2*x2^3 + (alpha + 6)*x1^2*x2"
    " - (2*alpha - 10)*x1^2 - (alpha + 1)*x1*x2^4 + (alpha - 5)*x1*x2^2"
    " - (12*alpha + 6)*x1*x2 + (8*alpha - 7)*x1 - x2^5 + (4*alpha + 2)*x2^3"
    " - (2*alpha + 12)*x2^2 + (8*alpha + 15)*x2 + 12*alpha + 6";

constexpr const char* kA13 =
    "x1^4 + x2^4 + (beta - 3)*x1^2*x2^2 - 9*(3*beta - 14)*t*x1*x2 + 12*(47*beta - 202)*t^2"
    " - ((beta - 4)*alpha + 2)*x1^3*x2 + ((beta - 4)*alpha - beta + 3)*x1*x2^3"
    " + 3*((17*beta - 73)*alpha - 12*beta + 50)*t*x1^2"
    " - 3*((17*beta - 73)*alpha - 10*beta + 45)*t*x2^2"
    " + 3*((5*beta - 22)*alpha - 9*beta + 38)*t*x1"
    " - 3*((5*beta - 22)*alpha + 2*beta - 9)*t*x2";

constexpr const char* kA21 =
    "x1^5 + (alpha + 1)*x1^4*x2 + 2*alpha*x1^3*x2^2 + (10*alpha + 18)*x1^3"
    " + (2*alpha - 2)*x1^2*x2^3 + (32*alpha - 8)*x1^2*x2 + (20*alpha + 4)*x1^2"
    " + (alpha - 2)*x1*x2^4 + (32*alpha - 24)*x1*x2^2 + (32*alpha - 16)*x1*x2"
    " + (107*alpha + 55)*x1 - x2^5 + (10*alpha - 28)*x2^3 + (20*alpha - 24)*x2^2"
    " + (107*alpha - 162)*x2 + 136*alpha - 68";

ExpectedRow table_row(int n) {
  ExpectedRow r;
  switch (n) {
    case 7:
      r = {Integer(2), "2^g", 2, "d", -1, "Z>=2"};
      break;
    case 11:
      r = {Integer(3), "3^g", 2, "d-1", -1, "P\\{11}"};
      break;
    case 13:
      r = {Integer(3), "3^g", 4, "d", 1, "Z>=2"};
      break;
    case 15:
      r = {Integer(4), "4^(g - g5 - g3) x 2^(2*g5 + 2*g3)", 2, "d", 1, "P\\{3,5,7}"};
      break;
    case 21:
      r = {Integer(4), "4^(g - g3) x 2^(2*g3)", 2, "d-1", -1, "P\\{3,5,7}"};
      break;
    case 31:
      r = {Integer(8), "8^(g/3) x 4^(2*g/3) x 2^(2*g/3)", 6, "d-1", -1, "P\\{3,5,31}"};
      break;
    default:
      break;
  }
  return r;
}

FamilySpec bundled(int n) {
  FamilySpec s;
  s.id = std::to_string(n);
  s.n = n;
  s.provenance = "bundled";
  s.expected = table_row(n);
  switch (n) {
    case 7: {
      s.field = quadratic_over_q(1, 2, "alpha");
      const auto consts = conj_constant(s.field);
      s.A = parse_poly(kA7, s.field, consts);
      s.f = parse_poly(kF7, s.field);
      DiffBlock printed(s.field, 6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) printed(i, j) = parse_poly(kD7[i][j], s.field, consts);
      s.printed_block = printed;
      s.degeneration_images = {"zeta + zeta^2 + zeta^4"};
      s.degeneration_set = {1, 2, 4};
      break;
    }
    case 11:
      s.field = quadratic_over_q(1, 3, "alpha");
      s.A = parse_poly(kA11, s.field);
      s.f = parse_poly(kF11, s.field);
      break;
    case 13:
      s.field = field_13();
      s.A = parse_poly(kA13, s.field);
      // beta = alpha * sigma(alpha)
      s.degeneration_images = {"(zeta + zeta^3 + zeta^9)*(zetainv + zetainv^3 + zetainv^9)", "zeta + zeta^3 + zeta^9"};
      s.degeneration_set = {0, 7, 8, 11};
      break;
    case 21:
      s.field = quadratic_over_q(-1, 2, "alpha");
      s.A = parse_poly(kA21, s.field);
      break;
    default:
      throw Error("no bundled data for n = " + std::to_string(n));
  }
  return s;
}

int parse_int(std::string_view text, const std::string& what) {
  int v = 0;
  if (text.empty()) throw Error("missing " + what);
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad " + what + " '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
    if (v > 100000) throw Error(what + " too large");
  }
  return v;
}

// "cyclotomic:N:I" -> (N, I)
std::pair<int, int> parse_family_params(std::string_view rest, const std::string& kind) {
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw Error(kind + " family id must look like " + kind + ":N:I");
  return {parse_int(rest.substr(0, colon), "n"), parse_int(rest.substr(colon + 1), "i")};
}

CorrPoly t_slice(const CorrPoly& p, int k) {
  CorrPoly out(p.field());
  for (const auto& [m, c] : p.terms())
    if (m.t == k) out.add_term({m.x1, m.x2, 0}, c);
  return out;
}

bool same_up_to_sign(const CorrPoly& a, const CorrPoly& b) { return a == b || a == -b; }

// ---------------------------------------------------------------------------
// Kernel templates: product of parts "P^(expr)" separated by "x".

class TemplateParser {
 public:
  TemplateParser(std::string_view s, std::map<std::string, Rational> vars) : s_(s), vars_(std::move(vars)) {}

  AbelianGroup parse() {
    AbelianGroup g;
    for (;;) {
      g = g + part();
      skip();
      if (pos_ == s_.size()) return g;
      if (s_[pos_] != 'x') fail("expected 'x' between factors");
      ++pos_;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("kernel template \"" + std::string(s_) + "\": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  AbelianGroup part() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a cyclic order");
    const Integer base = number().get_num();
    if (peek() != '^') return AbelianGroup::from_cyclic({base});
    ++pos_;
    const Rational e = factor();
    if (!is_integer(e) || sgn(e) < 0) fail("exponent " + e.get_str() + " is not a non-negative integer");
    return AbelianGroup::elementary(base, e.get_num().get_si());
  }

  Rational expr() {
    Rational v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  Rational term() {
    Rational v = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v *= factor();
      } else if (c == '/') {
        ++pos_;
        const Rational q = factor();
        if (sgn(q) == 0) fail("division by zero");
        v /= q;
      } else {
        return v;
      }
    }
  }
  Rational factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Rational v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown symbol '" + name + "'");
      return it->second;
    }
    fail("unexpected character");
  }
  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Rational(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::map<std::string, Rational> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// FamilySpec

bool FamilySpec::has_t() const {
  if (A && A->degree_t() > 0) return true;
  return f && f->degree_t() > 0;
}

std::optional<CorrPoly> FamilySpec::g() const {
  if (!f) return std::nullopt;
  CorrPoly g = as_x2(sigma(*f));
  return sign_of_g < 0 ? -g : g;
}

std::optional<CorrPoly> FamilySpec::difference() const {
  if (!f) return std::nullopt;
  return *f - *g();
}

const std::vector<std::string>& bundled_family_ids() {
  static const std::vector<std::string> ids{"7", "11", "13", "21"};
  return ids;
}

FamilySpec load_family(std::string_view id, const std::optional<std::string>& data_file) {
  if (data_file) {
    FamilySpec s = read_family_file(*data_file);
    if (!s.id.empty() && s.id != id)
      throw Error("data file " + *data_file + " describes family " + s.id + ", not " + std::string(id));
    s.id = std::string(id);
    return s;
  }
  if (id == "7" || id == "11" || id == "13" || id == "21") return bundled(parse_int(id, "family id"));
  if (id == "15" || id == "31")
    throw Error("family " + std::string(id) + ": external data required (pass a data file)");
  if (id.starts_with("cyclotomic:")) {
    auto [n, i] = parse_family_params(id.substr(11), "cyclotomic");
    FamilySpec s;
    s.id = std::string(id);
    s.n = n;
    s.A = cyclotomic_corr(n, i);
    s.field = s.A->field();
    s.provenance = "constructed";
    s.expected.m = Integer(1);
    s.expected.kernel_template = "1";
    s.expected.e = s.field->degree();
    return s;
  }
  if (id.starts_with("dickson:")) {
    auto [n, i] = parse_family_params(id.substr(8), "dickson");
    FamilySpec s;
    s.id = std::string(id);
    s.n = n;
    s.A = dickson_factor(n, i);
    s.field = s.A->field();
    s.provenance = "constructed";
    s.expected.tau_sign = 1;
    return s;
  }
  throw Error("unknown family '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Cyclotomic and Dickson

std::vector<Rational> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial needs n >= 1");
  const TowerPtr q = make_field({}, false);
  // x^n - 1 divided by Phi_d for every proper divisor d
  CorrPoly p = CorrPoly::x1(q).pow(n) - CorrPoly::constant(q->one());
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto phi = cyclotomic_polynomial(d);
    CorrPoly divisor(q);
    for (std::size_t k = 0; k < phi.size(); ++k) divisor.add_term({static_cast<int>(k), 0, 0}, q->from_rational(phi[k]));
    p = exact_divide(p, divisor);
  }
  std::vector<Rational> out(p.degree_x1() + 1);
  for (const auto& [m, c] : p.terms()) out[m.x1] = c.rational_value();
  return out;
}

std::vector<Rational> real_cyclotomic_polynomial(int n) {
  if (n < 3) throw Error("real_cyclotomic_polynomial needs n >= 3");
  const auto phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  const int h = deg / 2;
  // Laurent coefficients of z^{-h} Phi(z), index j + h for z^j
  std::vector<Rational> lau(phi.begin(), phi.end());
  std::vector<Rational> psi(h + 1);
  for (int k = h; k >= 0; --k) {
    const Rational c = lau[k + h];
    psi[k] = c;
    if (sgn(c) == 0) continue;
    // subtract c (z + 1/z)^k
    Integer binom = 1;
    for (int j = 0; j <= k; ++j) {
      lau[h + k - 2 * j] -= c * binom;
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (const auto& r : lau)
    if (sgn(r) != 0) throw Error("cyclotomic polynomial is not palindromic");
  return psi;
}

TowerPtr cyclotomic_field(int n) {
  const TowerStep bottom = TowerStep::over_rationals(real_cyclotomic_polynomial(n));
  // -w in coordinates of Q(w); for n = 3, 4, 6 the step is linear and w is rational
  const FieldElement w = make_field({bottom}, false)->generator(0);
  TowerStep top;
  top.coeffs = {{1}, (-w).coords(), {1}};  // z^2 - w z + 1
  return make_field({bottom, top}, true, {"w", "zeta"});
}

TowerPtr real_cyclotomic_field(int n) {
  return make_field({TowerStep::over_rationals(real_cyclotomic_polynomial(n))}, false, {"eta"});
}

FieldElement zeta(const TowerPtr& cyclotomic, int power) {
  const FieldElement z = cyclotomic->generator(cyclotomic->num_steps() - 1);
  return power >= 0 ? z.pow(power) : z.inverse().pow(-power);
}

CorrPoly dickson(int n, const FieldElement& a) {
  if (n < 0) throw Error("dickson needs n >= 0");
  const TowerPtr& f = a.field();
  const CorrPoly x = CorrPoly::x1(f);
  CorrPoly prev = CorrPoly::constant(f->from_rational(2));
  if (n == 0) return prev;
  CorrPoly cur = x;
  for (int k = 2; k <= n; ++k) {
    CorrPoly next = x * cur - prev * a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldElement dickson_value(int n, const FieldElement& x, const FieldElement& a) {
  FieldElement prev = x.field()->from_rational(2);
  if (n == 0) return prev;
  FieldElement cur = x;
  for (int k = 2; k <= n; ++k) {
    FieldElement next = x * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CorrPoly dickson_factor(int n, int i) {
  if (n < 3) throw Error("dickson_factor needs n >= 3");
  if (i < 1 || 2 * i >= n) throw Error("dickson_factor index must lie in 1 .. (n-1)/2");
  const TowerPtr f = real_cyclotomic_field(n);
  const FieldElement eta = dickson_value(i, f->generator(0), f->one());
  const CorrPoly x1 = CorrPoly::x1(f), x2 = CorrPoly::x2(f);
  return x1 * x1 + x2 * x2 - x1 * x2 * eta + CorrPoly::constant(eta * eta - f->from_rational(4));
}

CorrPoly cyclotomic_corr(int n, int i) {
  if (n < 3) throw Error("cyclotomic_corr needs n >= 3");
  if (i < 0 || i >= n) throw Error("cyclotomic_corr index must lie in 0 .. n-1");
  const TowerPtr f = cyclotomic_field(n);
  return CorrPoly::x1(f) * zeta(f, i) - CorrPoly::x2(f);
}

// ---------------------------------------------------------------------------
// Transforms, lifting and variant resolution

CorrPoly transform_pair(const CorrPoly& a, const FieldElement& a1, const FieldElement& b1, const FieldElement& a2,
                        const FieldElement& b2) {
  return affine(a, a1, b1, a2, b2);
}

std::optional<CorrPoly> lift_factor(const CorrPoly& f, const CorrPoly& seed) {
  if (seed.degree_t() > 0) throw Error("lift_factor: seed must be free of t");
  const TowerPtr& field = f.field();
  auto [b0, rem] = divide_x1(t_slice(f, 0), seed);
  if (!rem.is_zero()) return std::nullopt;
  const int r = seed.degree_x1(), s = b0.degree_x1();

  std::vector<Monomial> ua, ub;
  for (int i = 0; i < r; ++i)
    for (int j = 0; i + j <= r; ++j) ua.push_back({i, j, 0});
  for (int i = 0; i < s; ++i)
    for (int j = 0; i + j <= s; ++j) ub.push_back({i, j, 0});
  // columns: A_k unknowns multiply b0, B_k unknowns multiply the seed
  std::vector<CorrPoly> columns;
  for (const auto& m : ua) columns.push_back(CorrPoly::monomial(field->one(), m) * b0);
  for (const auto& m : ub) columns.push_back(CorrPoly::monomial(field->one(), m) * seed);

  std::vector<CorrPoly> as{seed}, bs{b0};
  const int top = std::max(f.degree_t(), 0);
  for (int k = 1; k <= top; ++k) {
    CorrPoly rhs = t_slice(f, k);
    for (int i = 1; i < k; ++i) rhs -= as[i] * bs[k - i];
    std::set<Monomial> rows;
    for (const auto& c : columns)
      for (const auto& [m, v] : c.terms()) rows.insert(m);
    for (const auto& [m, v] : rhs.terms()) rows.insert(m);
    linalg::Matrix<FieldElement> mat;
    std::vector<FieldElement> vec;
    for (const auto& m : rows) {
      std::vector<FieldElement> row;
      for (const auto& c : columns) row.push_back(c.coeff(m));
      mat.push_back(std::move(row));
      vec.push_back(rhs.coeff(m));
    }
    bool unique = false;
    auto sol = linalg::solve(std::move(mat), std::move(vec), field->zero(), &unique);
    if (!sol || !unique) return std::nullopt;
    CorrPoly ak(field), bk(field);
    for (std::size_t u = 0; u < ua.size(); ++u) ak.add_term(ua[u], (*sol)[u]);
    for (std::size_t u = 0; u < ub.size(); ++u) bk.add_term(ub[u], (*sol)[ua.size() + u]);
    as.push_back(std::move(ak));
    bs.push_back(std::move(bk));
  }
  CorrPoly lifted(field);
  for (int k = 0; k <= top; ++k)
    for (const auto& [m, c] : as[k].terms()) lifted.add_term({m.x1, m.x2, k}, c);
  auto [q, rest] = divide_x1(f, lifted);
  if (!rest.is_zero()) return std::nullopt;
  return lifted;
}

VariantResolution resolve_variant(const FamilySpec& spec) {
  if (!spec.A) throw Error("family " + spec.id + " has no correspondence loaded");
  const CorrPoly& base = *spec.A;
  const auto diff = spec.difference();

  std::vector<std::pair<std::string, CorrPoly>> cands;
  auto add = [&](std::string tag, CorrPoly p) {
    for (const auto& [t, q] : cands)
      if (q == p) return;
    cands.emplace_back(std::move(tag), std::move(p));
  };
  for (int sig = 0; sig < 2; ++sig)
    for (int neg = 0; neg < 2; ++neg)
      for (int st = 0; st < 2; ++st) {
        CorrPoly p = base;
        std::string tag;
        if (sig) {
          p = sigma(p);
          tag += "+sigma";
        }
        if (neg) {
          p = -p;
          tag += "+negate";
        }
        if (st) {
          p = map_coeffs(p, action::SigmaOnT{});
          tag += "+sigma_t";
        }
        add(tag.empty() ? "identity" : tag.substr(1), std::move(p));
      }
  if (diff && spec.has_t()) {
    std::vector<CorrPoly> seeds;
    const std::size_t orbit = cands.size();
    for (std::size_t c = 0; c < orbit; ++c) {
      const CorrPoly s0 = specialize_t(cands[c].second, base.field()->zero());
      bool seen = false;
      for (const auto& s : seeds) seen = seen || same_up_to_sign(s, s0);
      if (seen) continue;
      seeds.push_back(s0);
      if (auto lifted = lift_factor(*diff, s0)) add("lift(" + cands[c].first + ")", std::move(*lifted));
    }
  }

  VariantResolution res;
  std::optional<DiffBlock> winner_block;
  std::optional<std::size_t> winner;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    const auto& [tag, p] = cands[c];
    std::string verdict = "pass";
    try {
      shape_check(p, spec.n);
      if (spec.expected.tau_sign) {
        const CorrPoly rhs = *spec.expected.tau_sign > 0 ? sigma(p) : -sigma(p);
        if (!(tau(p) == rhs)) verdict = "tau symmetry fails";
      }
      if (verdict == "pass" && spec.expected.m) {
        const auto m = check_split(p, spec.n);
        if (!m || *m != *spec.expected.m)
          verdict = "D(A) D(tau A) is " + (m ? m->get_str() + " I" : std::string("not scalar"));
      }
      if (verdict == "pass" && diff) {
        auto [q, r] = divide_x1(*diff, p);
        if (!r.is_zero()) verdict = "does not divide f(x1) - g(x2)";
      }
    } catch (const Error& e) {
      verdict = e.what();
    }
    res.tried.push_back(tag + ": " + verdict);
    if (verdict != "pass") continue;
    DiffBlock block = differential_block(p, spec.n);
    if (!winner) {
      winner = c;
      winner_block = std::move(block);
    } else if (!(block == *winner_block) && !(block == winner_block->sigma())) {
      // a Galois-conjugate D describes the same splitting; the first member wins
      throw Error("family " + spec.id + ": variants " + cands[*winner].first + " and " + tag +
                  " both pass but give different D(A)");
    }
  }
  if (!winner) {
    std::string msg = "family " + spec.id + ": no variant of A passes the checks;";
    for (const auto& t : res.tried) msg += " [" + t + "]";
    throw Error(msg);
  }
  res.A = cands[*winner].second;
  res.tag = cands[*winner].first;
  return res;
}

FamilySpec resolved(FamilySpec spec) {
  auto r = resolve_variant(spec);
  spec.A = std::move(r.A);
  spec.variant = std::move(r.tag);
  return spec;
}

std::string to_string(BlockMatch m) {
  switch (m) {
    case BlockMatch::Exact:
      return "exact";
    case BlockMatch::UpToSigma:
      return "up-to-sigma";
    case BlockMatch::Mismatch:
      return "mismatch";
  }
  return "?";
}

BlockMatch compare_blocks(const DiffBlock& computed, const DiffBlock& printed) {
  if (computed == printed) return BlockMatch::Exact;
  if (computed.sigma() == printed) return BlockMatch::UpToSigma;
  return BlockMatch::Mismatch;
}

// ---------------------------------------------------------------------------
// Expected kernels and degenerations

AbelianGroup instantiate_kernel(const std::string& tmpl, int d, int n) {
  std::map<std::string, Rational> vars{
      {"g", Rational(genus(d, n))}, {"g3", Rational(genus(d, 3))}, {"g5", Rational(genus(d, 5))},
      {"d", Rational(d)},           {"n", Rational(n)},
  };
  return TemplateParser(tmpl, std::move(vars)).parse();
}

namespace {

// zeta^j x1 - x2 in a given cyclotomic tower
CorrPoly cyclotomic_corr_in(const TowerPtr& cyc, int j) {
  return CorrPoly::x1(cyc) * zeta(cyc, j) - CorrPoly::x2(cyc);
}

struct Degeneration {
  TowerPtr cyc;
  FieldEmbedding emb;
};

Degeneration degeneration_embedding(const FamilySpec& spec) {
  if (spec.degeneration_images.empty()) throw Error("family " + spec.id + " has no t = 0 degeneration data");
  const TowerPtr cyc = cyclotomic_field(spec.n);
  const std::map<std::string, FieldElement> consts{{"zeta", zeta(cyc, 1)}, {"zetainv", zeta(cyc, -1)}};
  std::vector<FieldElement> images;
  for (const auto& s : spec.degeneration_images) images.push_back(parse_poly(s, cyc, consts).constant_value());
  return {cyc, FieldEmbedding(spec.field, cyc, images)};
}

}  // namespace

DegenerationResult check_degeneration(const FamilySpec& spec, const CorrPoly& a) {
  auto [cyc, emb] = degeneration_embedding(spec);
  const CorrPoly a0 = map_field(specialize_t(a, a.field()->zero()), emb);
  const int r = a0.degree_x1();
  DegenerationResult res;
  for (int k = 1; k < spec.n; ++k) {
    if (std::gcd(k, spec.n) != 1) continue;
    CorrPoly prod = CorrPoly::constant(cyc->one());
    for (int i : spec.degeneration_set) prod = prod * cyclotomic_corr_in(cyc, k * i);
    const FieldElement la = a0.coeff({r, 0, 0}), lp = prod.coeff({r, 0, 0});
    if (a0 * lp == prod * la) {
      res.matched = true;
      res.k = k;
      res.detail = "A(t = 0) is proportional to the product under zeta -> zeta^" + std::to_string(k);
      return res;
    }
  }
  res.detail = "no automorphism of Q(zeta_" + std::to_string(spec.n) + ") matches";
  return res;
}

DegenerationResult check_degenerate_block(const FamilySpec& spec, const CorrPoly& a) {
  auto [cyc, emb] = degeneration_embedding(spec);
  const DiffBlock d0 = differential_block(map_field(specialize_t(a, a.field()->zero()), emb), spec.n);
  DegenerationResult res;
  for (int k = 1; k < spec.n; ++k) {
    if (std::gcd(k, spec.n) != 1) continue;
    DiffBlock sum(cyc, spec.n - 1);
    for (int i : spec.degeneration_set) sum = sum + differential_block(cyclotomic_corr_in(cyc, k * i), spec.n);
    if (sum == d0) {
      res.matched = true;
      res.k = k;
      res.detail = "D(A at t = 0) equals the sum of the zeta^" + std::to_string(k) + "i blocks";
      return res;
    }
  }
  res.detail = "no automorphism of Q(zeta_" + std::to_string(spec.n) + ") matches";
  return res;
}

}  // namespace isojac
