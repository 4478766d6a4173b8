#include "isojac/poly.hpp"

#include <cctype>

namespace isojac {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TowerPtr& field, const std::map<std::string, FieldElement>& constants)
      : text_(text), field_(field), constants_(constants) {}

  CorrPoly parse() {
    CorrPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" + std::string(text_) +
                "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  CorrPoly expr() {
    CorrPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  CorrPoly term() {
    CorrPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        CorrPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero expression");
        acc *= d.constant_value().inverse();
      } else if (starts_atom()) {
        acc = acc * power();  // juxtaposition, as in 7(a+1)t
      } else {
        return acc;
      }
    }
  }

  CorrPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  CorrPoly power() {
    CorrPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  CorrPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      CorrPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational q(std::string(text_.substr(start, pos_ - start)));
      return CorrPoly::constant(field_->from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return identifier(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  CorrPoly identifier(const std::string& name) {
    if (name == "x1" || name == "x") return CorrPoly::x1(field_);
    if (name == "x2") return CorrPoly::x2(field_);
    if (name == "t") return CorrPoly::t(field_);
    if (auto it = constants_.find(name); it != constants_.end()) return CorrPoly::constant(it->second);
    const auto& names = field_->names();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return CorrPoly::constant(field_->generator(k));
    pos_ -= name.size();
    fail("unknown identifier '" + name + "'");
  }

  std::string_view text_;
  const TowerPtr& field_;
  const std::map<std::string, FieldElement>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

CorrPoly parse_poly(std::string_view text, const TowerPtr& field, const std::map<std::string, FieldElement>& constants) {
  if (!field) throw Error("parse_poly: no field given");
  CorrPoly p = Parser(text, field, constants).parse();
  return p.field() ? p : CorrPoly(field);
}

}  // namespace isojac
