#pragma once
// Dense univariate polynomials with exact coefficients, together with the
// ring operations and coefficient transforms used by root isolation and
// trace construction: evaluation, derivative, division, gcd, square-free
// part, integer scaling, Taylor shift, reciprocal, homothety, norms.

#include "polytrace/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace polytrace {

/// Coefficients ascending by degree; the canonical zero polynomial is the
/// empty vector (degree -1). T is `integer` or `rational`.
template <class T>
struct basic_poly {
  std::vector<T> coeff;

  basic_poly() = default;
  explicit basic_poly(std::vector<T> c) : coeff(std::move(c)) { normalize(); }
  basic_poly(std::initializer_list<T> c) : coeff(c) { normalize(); }

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  bool is_zero() const { return coeff.empty(); }

  /// Leading coefficient; polynomial must be nonzero.
  const T& leading() const { return coeff.back(); }

  /// Coefficient of s^i, defaulting to 0 beyond the stored degree.
  T at(size_t i) const { return i < coeff.size() ? coeff[i] : T(0); }

  void normalize() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  }

  /// Horner evaluation.
  template <class X>
  X eval(const X& x) const {
    X acc(0);
    for (size_t i = coeff.size(); i-- > 0;) {
      acc = X(acc * x + coeff[i]);
    }
    return acc;
  }

  friend bool operator==(const basic_poly& a, const basic_poly& b) {
    return a.coeff == b.coeff;
  }
};

using rat_poly = basic_poly<rational>;
using int_poly = basic_poly<integer>;

template <class T>
basic_poly<T> operator+(const basic_poly<T>& a, const basic_poly<T>& b) {
  std::vector<T> c(std::max(a.coeff.size(), b.coeff.size()), T(0));
  for (size_t i = 0; i < a.coeff.size(); ++i) c[i] = a.coeff[i];
  for (size_t i = 0; i < b.coeff.size(); ++i) c[i] = T(c[i] + b.coeff[i]);
  return basic_poly<T>(std::move(c));
}

template <class T>
basic_poly<T> operator-(const basic_poly<T>& a, const basic_poly<T>& b) {
  std::vector<T> c(std::max(a.coeff.size(), b.coeff.size()), T(0));
  for (size_t i = 0; i < a.coeff.size(); ++i) c[i] = a.coeff[i];
  for (size_t i = 0; i < b.coeff.size(); ++i) c[i] = T(c[i] - b.coeff[i]);
  return basic_poly<T>(std::move(c));
}

template <class T>
basic_poly<T> operator-(const basic_poly<T>& a) {
  std::vector<T> c = a.coeff;
  for (T& x : c) x = T(-x);
  return basic_poly<T>(std::move(c));
}

template <class T>
basic_poly<T> operator*(const basic_poly<T>& a, const basic_poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return basic_poly<T>{};
  std::vector<T> c(a.coeff.size() + b.coeff.size() - 1, T(0));
  for (size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (size_t j = 0; j < b.coeff.size(); ++j) {
      c[i + j] = T(c[i + j] + a.coeff[i] * b.coeff[j]);
    }
  }
  return basic_poly<T>(std::move(c));
}

template <class T>
basic_poly<T> operator*(const T& k, const basic_poly<T>& a) {
  std::vector<T> c = a.coeff;
  for (T& x : c) x = T(k * x);
  return basic_poly<T>(std::move(c));
}

template <class T>
basic_poly<T> derivative(const basic_poly<T>& p) {
  if (p.degree() <= 0) return basic_poly<T>{};
  std::vector<T> c(p.coeff.size() - 1);
  for (size_t i = 1; i < p.coeff.size(); ++i) {
    c[i - 1] = T(p.coeff[i] * T(static_cast<long>(i)));
  }
  return basic_poly<T>(std::move(c));
}

/// Quotient and remainder over the rationals; b must be nonzero.
std::pair<rat_poly, rat_poly> divmod(const rat_poly& a, const rat_poly& b);

/// Exact quotient; throws internal_error if the remainder is nonzero.
rat_poly divide_exact(const rat_poly& a, const rat_poly& b);

/// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
integer content(const int_poly& p);

/// p divided by its content (keeps the sign of the leading coefficient).
int_poly primitive_part(const int_poly& p);

/// Scales by the lcm of the coefficient denominators: returns (z, m) with
/// z = m*p, m >= 1 a positive integer, so signs everywhere are preserved.
std::pair<int_poly, integer> rational_to_integer(const rat_poly& p);

rat_poly to_rational(const int_poly& p);

/// Divides by the leading coefficient; zero maps to zero.
rat_poly monic(const rat_poly& p);

/// Monic gcd over the rationals via a primitive remainder sequence on
/// integer-scaled inputs. poly_gcd(0,0) = 0; poly_gcd(p,0) = monic(p).
rat_poly poly_gcd(const rat_poly& a, const rat_poly& b);

/// p / gcd(p, p'): same roots, all simple; leading coefficient equals
/// that of p (the gcd is taken monic). Constants map to themselves.
rat_poly squarefree_part(const rat_poly& p);

/// p(s + lambda), computed by the classic in-place O(d^2) synthetic scheme.
template <class T>
basic_poly<T> taylor_shift(basic_poly<T> p, const T& lambda) {
  const int d = p.degree();
  if (d <= 0 || lambda == 0) return p;
  for (int k = 0; k < d; ++k) {
    for (int j = d - 1; j >= k; --j) {
      p.coeff[j] = T(p.coeff[j] + lambda * p.coeff[j + 1]);
    }
  }
  return p;
}

/// s^deg(p) * p(1/s): the coefficient vector reversed (with respect to the
/// actual degree), then normalized.
template <class T>
basic_poly<T> reciprocal(const basic_poly<T>& p) {
  std::vector<T> c(p.coeff.rbegin(), p.coeff.rend());
  return basic_poly<T>(std::move(c));
}

/// p(lambda * s).
rat_poly homothety(const rat_poly& p, const rational& lambda);

/// Largest coefficient magnitude (0 for the zero polynomial).
template <class T>
T max_norm(const basic_poly<T>& p) {
  T m(0);
  for (const T& c : p.coeff) {
    T a = c < 0 ? T(-c) : c;
    if (a > m) m = a;
  }
  return m;
}

/// Sum of coefficient magnitudes.
template <class T>
T one_norm(const basic_poly<T>& p) {
  T m(0);
  for (const T& c : p.coeff) m = T(m + (c < 0 ? T(-c) : c));
  return m;
}

/// Squared Euclidean coefficient norm (rational even for rational input).
template <class T>
T two_norm_sq(const basic_poly<T>& p) {
  T m(0);
  for (const T& c : p.coeff) m = T(m + c * c);
  return m;
}

}  // namespace polytrace
