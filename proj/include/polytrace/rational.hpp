#pragma once
// Exact arbitrary-precision scalars (GMP) and the small helpers the rest of
// the library needs: parsing, formatting, decimal rendering, signs.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polytrace {

using integer = mpz_class;
using rational = mpq_class;

/// Raised for malformed user input (scene files, formulas, CLI values).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal computation certificate fails to hold
/// (indicates a bug, not bad input).
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// num/den as a canonical rational; den must be nonzero.
inline rational make_rational(const integer& num, const integer& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const integer& z) { return sgn(z); }
inline int sign(const rational& q) { return sgn(q); }

/// Parses "7", "-3", "3/4", "-3/4". Whitespace is not accepted.
rational parse_rational(const std::string& text);

/// Renders as "7" or "-3/4" (canonical form, no spaces).
std::string format_rational(const rational& q);

/// Fixed-point decimal rendering with `digits` fractional digits,
/// truncated toward zero (used for plot output only; exactness lives in
/// the rational form).
std::string decimal_string(const rational& q, int digits);

}  // namespace polytrace
