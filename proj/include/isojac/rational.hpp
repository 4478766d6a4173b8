#ifndef ISOJAC_RATIONAL_HPP
#define ISOJAC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace isojac {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Parses "17", "-3", "1/2", "-22/7". Whitespace is not accepted. */
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }

}  // namespace isojac

#endif  // ISOJAC_RATIONAL_HPP
