// Non-template pieces of the univariate polynomial toolkit: rational
// division, integer content/primitive parts, gcd via a primitive remainder
// sequence, square-free part, and scalar parsing/formatting helpers.

#include "polytrace/unipoly.hpp"

#include <algorithm>

namespace polytrace {

rational parse_rational(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      integer n(text, 10);
      return rational(n);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) {
      throw std::invalid_argument("missing numerator or denominator");
    }
    return make_rational(integer(num, 10), integer(den, 10));
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational literal: '" + text + "'");
  }
}

std::string format_rational(const rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const rational& q, int digits) {
  if (digits < 0) digits = 0;
  integer num = q.get_num();
  const integer den = q.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  integer ip = num / den;
  integer rem = num % den;
  std::string out = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.get_str();
  if (digits == 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    integer d = rem / den;
    rem %= den;
    out += static_cast<char>('0' + d.get_si());
  }
  return out;
}

std::pair<rat_poly, rat_poly> divmod(const rat_poly& a, const rat_poly& b) {
  if (b.is_zero()) throw internal_error("polynomial division by zero");
  rat_poly rem = a;
  if (rem.degree() < b.degree()) return {rat_poly{}, rem};
  std::vector<rational> q(rem.degree() - b.degree() + 1, rational(0));
  const rational& lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    rational f = rem.leading() / lb;
    q[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) {
      rem.coeff[i + shift] -= f * b.coeff[i];
    }
    rem.normalize();
  }
  return {rat_poly(std::move(q)), rem};
}

rat_poly divide_exact(const rat_poly& a, const rat_poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw internal_error("polynomial division was not exact");
  return q;
}

integer content(const int_poly& p) {
  integer g(0);
  for (const integer& c : p.coeff) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int_poly primitive_part(const int_poly& p) {
  if (p.is_zero()) return p;
  const integer g = content(p);
  if (g == 1) return p;
  std::vector<integer> c = p.coeff;
  for (integer& x : c) x /= g;
  return int_poly(std::move(c));
}

std::pair<int_poly, integer> rational_to_integer(const rat_poly& p) {
  integer m(1);
  for (const rational& c : p.coeff) {
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<integer> c(p.coeff.size());
  for (size_t i = 0; i < p.coeff.size(); ++i) {
    rational scaled = p.coeff[i] * rational(m);
    c[i] = scaled.get_num();  // denominator is 1 by construction
  }
  return {int_poly(std::move(c)), m};
}

rat_poly to_rational(const int_poly& p) {
  std::vector<rational> c(p.coeff.size());
  for (size_t i = 0; i < p.coeff.size(); ++i) c[i] = rational(p.coeff[i]);
  return rat_poly(std::move(c));
}

rat_poly monic(const rat_poly& p) {
  if (p.is_zero()) return p;
  const rational lc = p.leading();
  std::vector<rational> c = p.coeff;
  for (rational& x : c) x /= lc;
  return rat_poly(std::move(c));
}

namespace {

// Pseudo-remainder: a scalar multiple of (a mod b) with integer
// coefficients; only its root set and degree matter to the callers.
int_poly pseudo_rem(int_poly a, const int_poly& b) {
  const integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    const integer la = a.leading();
    std::vector<integer> next(static_cast<size_t>(a.degree()) + 1, integer(0));
    // lb*a - la*s^shift*b, which cancels the leading term.
    for (size_t i = 0; i < a.coeff.size(); ++i) next[i] = lb * a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i) {
      next[i + shift] -= la * b.coeff[i];
    }
    a = int_poly(std::move(next));
  }
  return a;
}

int_poly gcd_primitive(int_poly a, int_poly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    int_poly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

}  // namespace

rat_poly poly_gcd(const rat_poly& a, const rat_poly& b) {
  if (a.is_zero() && b.is_zero()) return rat_poly{};
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  auto [az, am] = rational_to_integer(a);
  auto [bz, bm] = rational_to_integer(b);
  (void)am;
  (void)bm;
  return monic(to_rational(gcd_primitive(az, bz)));
}

rat_poly squarefree_part(const rat_poly& p) {
  if (p.degree() <= 0) return p;
  const rat_poly g = poly_gcd(p, derivative(p));
  if (g.degree() <= 0) return p;
  return divide_exact(p, g);
}

rat_poly homothety(const rat_poly& p, const rational& lambda) {
  std::vector<rational> c = p.coeff;
  rational pw(1);
  for (size_t i = 1; i < c.size(); ++i) {
    pw *= lambda;
    c[i] *= pw;
  }
  return rat_poly(std::move(c));
}

}  // namespace polytrace
