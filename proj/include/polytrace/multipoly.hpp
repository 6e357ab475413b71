#pragma once
// Sparse multivariate polynomials over the rationals (region definitions)
// and their composition with a vector of univariate polynomials (a path
// segment), which is how region membership becomes a sign condition on a
// single parameter.

#include "polytrace/unipoly.hpp"

#include <vector>

namespace polytrace {

struct multi_term {
  rational coeff;
  std::vector<unsigned> exponents;  // one entry per variable
};

/// Sum of terms; exponent vectors are unique after normalize().
struct multi_poly {
  int dimension = 0;
  std::vector<multi_term> terms;

  /// Merges duplicate exponent vectors and drops zero coefficients.
  void normalize();
  int total_degree() const;
  bool is_zero() const { return terms.empty(); }
};

/// One univariate polynomial per coordinate.
using poly_vec = std::vector<rat_poly>;

/// g(x1, ..., xn) at a point.
rational multi_eval(const multi_poly& g, const std::vector<rational>& x);

/// g composed with f: the univariate polynomial s -> g(f1(s), ..., fn(s)).
rat_poly multi_compose(const multi_poly& g, const poly_vec& f);

/// g(x1 - c1, ..., xn - cn), exact binomial expansion.
multi_poly translate(const multi_poly& g, const std::vector<rational>& c);

}  // namespace polytrace
