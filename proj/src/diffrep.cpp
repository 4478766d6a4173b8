#include "isojac/diffrep.hpp"

#include "isojac/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace isojac {

DiffBlock::DiffBlock(TowerPtr field, std::size_t size)
    : field_(std::move(field)), entries_(size, std::vector<CorrPoly>(size, CorrPoly(field_))) {}

DiffBlock DiffBlock::identity(const TowerPtr& field, std::size_t size) {
  DiffBlock m(field, size);
  for (std::size_t i = 0; i < size; ++i) m.entries_[i][i] = CorrPoly::constant(field->one());
  return m;
}

DiffBlock DiffBlock::submatrix(std::size_t k) const {
  if (k > size()) throw Error("submatrix larger than the block");
  DiffBlock m(field_, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.entries_[i][j] = entries_[i][j];
  return m;
}

DiffBlock DiffBlock::sigma() const {
  DiffBlock m(field_, size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m.entries_[i][j] = isojac::sigma(entries_[i][j]);
  return m;
}

bool DiffBlock::is_lower_triangular() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!entries_[i][j].is_zero()) return false;
  return true;
}

bool DiffBlock::is_identity() const {
  auto s = scalar_value();
  return s && s->is_one();
}

std::optional<FieldElement> DiffBlock::scalar_value() const {
  if (size() == 0) return std::nullopt;
  if (!entries_[0][0].is_constant()) return std::nullopt;
  const FieldElement m = entries_[0][0].constant_value();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      const CorrPoly& e = entries_[i][j];
      if (i != j) {
        if (!e.is_zero()) return std::nullopt;
      } else if (!e.is_constant() || !(e.constant_value() == m)) {
        return std::nullopt;
      }
    }
  return m;
}

FieldMatrix DiffBlock::specialize(const FieldElement& value) const {
  FieldMatrix out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i].reserve(size());
    for (std::size_t j = 0; j < size(); ++j) out[i].push_back(specialize_t(entries_[i][j], value).constant_value());
  }
  return out;
}

CorrPoly DiffBlock::diagonal_product() const {
  CorrPoly p = CorrPoly::constant(field_->one());
  for (std::size_t i = 0; i < size(); ++i) p = p * entries_[i][i];
  return p;
}

bool DiffBlock::has_t() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.degree_t() > 0) return true;
  return false;
}

DiffBlock DiffBlock::operator*(const DiffBlock& rhs) const {
  if (size() != rhs.size()) throw Error("block size mismatch");
  DiffBlock m(field_, size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < size(); ++k) {
      if (entries_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < size(); ++j)
        if (!rhs.entries_[k][j].is_zero()) m.entries_[i][j] += entries_[i][k] * rhs.entries_[k][j];
    }
  return m;
}

DiffBlock DiffBlock::operator+(const DiffBlock& rhs) const {
  if (size() != rhs.size()) throw Error("block size mismatch");
  DiffBlock m = *this;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m.entries_[i][j] += rhs.entries_[i][j];
  return m;
}

DiffBlock DiffBlock::operator*(const FieldElement& c) const {
  DiffBlock m = *this;
  for (auto& row : m.entries_)
    for (auto& e : row) e *= c;
  return m;
}

bool DiffBlock::operator==(const DiffBlock& rhs) const { return entries_ == rhs.entries_; }

DiffBlock DiffBlock::pow(unsigned k) const {
  DiffBlock result = identity(field_, size());
  DiffBlock base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string DiffBlock::to_string() const {
  std::vector<std::vector<std::string>> cells(size());
  std::vector<std::size_t> width(size(), 1);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      cells[i].push_back(entries_[i][j].to_string());
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < size(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < size(); ++j) {
      os << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
      os << (j + 1 < size() ? "  " : " ]");
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<CorrPoly> newton_girard(const CorrPoly& a, int n) {
  const int r = shape_check(a, n);
  const TowerPtr& f = a.field();
  std::vector<CorrPoly> c;
  for (int i = 0; i < n; ++i) c.push_back(i <= r ? a.coeff_x1(r - i) : CorrPoly(f));
  const FieldElement inv_c0 = c[0].constant_value().inverse();
  // ts[i] = t_i; ts[0] unused
  std::vector<CorrPoly> ts(n, CorrPoly(f));
  for (int i = 1; i < n; ++i) {
    CorrPoly acc = c[i] * f->from_rational(i);
    for (int j = 1; j < i && j <= r; ++j) acc += c[j] * ts[i - j];
    ts[i] = -acc * inv_c0;
  }
  ts.erase(ts.begin());
  return ts;
}

DiffBlock differential_block(const CorrPoly& a, int n) {
  if (n < 2) throw Error("differential_block needs n >= 2");
  const auto ts = newton_girard(a, n);
  DiffBlock m(a.field(), n - 1);
  for (int i = 1; i < n; ++i)
    for (const auto& [mono, c] : ts[i - 1].terms()) {
      // x2-constant parts differentiate to zero
      if (mono.x2 == 0) continue;
      if (mono.x2 > n - 1) throw Error("power sum t_" + std::to_string(i) + " has x2-degree above n - 1");
      m(i - 1, mono.x2 - 1).add_term({0, 0, mono.t}, c);
    }
  return m;
}

std::vector<int> assemble_full(const DiffBlock& d_block, int d) {
  if (d < 2) throw Error("assemble_full needs d >= 2");
  const int n = static_cast<int>(d_block.size()) + 1;
  return slice_profile(d, n).p;
}

std::optional<Integer> check_split(const CorrPoly& a, int n) {
  const DiffBlock prod = differential_block(a, n) * differential_block(tau(a), n);
  auto m = prod.scalar_value();
  if (!m || !m->is_rational()) return std::nullopt;
  const Rational q = m->rational_value();
  if (!is_integer(q) || sgn(q) <= 0) return std::nullopt;
  return q.get_num();
}

DiffBlock evaluate_at(const std::vector<Rational>& poly, const DiffBlock& m) {
  DiffBlock acc(m.field(), m.size());
  const DiffBlock id = DiffBlock::identity(m.field(), m.size());
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * m + id * m.field()->from_rational(poly[k]);
  return acc;
}

}  // namespace isojac
