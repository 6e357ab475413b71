#include "polytrace/multipoly.hpp"

#include <algorithm>
#include <map>

namespace polytrace {

void multi_poly::normalize() {
  std::map<std::vector<unsigned>, rational> acc;
  for (const multi_term& t : terms) {
    if (static_cast<int>(t.exponents.size()) != dimension) {
      throw input_error("term exponent count does not match dimension");
    }
    acc[t.exponents] += t.coeff;
  }
  terms.clear();
  for (auto& [e, c] : acc) {
    if (c != 0) terms.push_back({c, e});
  }
}

int multi_poly::total_degree() const {
  int d = -1;
  for (const multi_term& t : terms) {
    int td = 0;
    for (unsigned e : t.exponents) td += static_cast<int>(e);
    d = std::max(d, td);
  }
  return d;
}

rational multi_eval(const multi_poly& g, const std::vector<rational>& x) {
  if (static_cast<int>(x.size()) != g.dimension) {
    throw input_error("evaluation point dimension mismatch");
  }
  rational acc(0);
  for (const multi_term& t : g.terms) {
    rational v = t.coeff;
    for (int i = 0; i < g.dimension; ++i) {
      for (unsigned e = 0; e < t.exponents[i]; ++e) v *= x[i];
    }
    acc += v;
  }
  return acc;
}

rat_poly multi_compose(const multi_poly& g, const poly_vec& f) {
  if (static_cast<int>(f.size()) != g.dimension) {
    throw input_error("path dimension does not match region dimension");
  }
  // Power tables per coordinate, up to the largest exponent used.
  std::vector<unsigned> max_exp(g.dimension, 0);
  for (const multi_term& t : g.terms) {
    for (int i = 0; i < g.dimension; ++i) {
      max_exp[i] = std::max(max_exp[i], t.exponents[i]);
    }
  }
  std::vector<std::vector<rat_poly>> pw(g.dimension);
  for (int i = 0; i < g.dimension; ++i) {
    pw[i].resize(max_exp[i] + 1);
    pw[i][0] = rat_poly{rational(1)};
    for (unsigned e = 1; e <= max_exp[i]; ++e) pw[i][e] = pw[i][e - 1] * f[i];
  }
  rat_poly acc;
  for (const multi_term& t : g.terms) {
    rat_poly term{t.coeff};
    for (int i = 0; i < g.dimension; ++i) {
      if (t.exponents[i] > 0) term = term * pw[i][t.exponents[i]];
    }
    acc = acc + term;
  }
  return acc;
}

namespace {

integer binomial(unsigned n, unsigned k) {
  integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

multi_poly translate(const multi_poly& g, const std::vector<rational>& c) {
  if (static_cast<int>(c.size()) != g.dimension) {
    throw input_error("translation vector dimension mismatch");
  }
  multi_poly out;
  out.dimension = g.dimension;
  for (const multi_term& t : g.terms) {
    // Expand coeff * prod_i (x_i - c_i)^{e_i} one variable at a time.
    std::vector<multi_term> partial{{t.coeff, std::vector<unsigned>(g.dimension, 0)}};
    for (int i = 0; i < g.dimension; ++i) {
      const unsigned e = t.exponents[i];
      std::vector<multi_term> next;
      for (const multi_term& p : partial) {
        rational neg_pow(1);
        for (unsigned k = 0; k <= e; ++k) {
          // Term with x_i^{e-k} * (-c_i)^k, binomial weight C(e, k).
          multi_term q = p;
          q.exponents[i] = e - k;
          q.coeff *= rational(binomial(e, k)) * neg_pow;
          next.push_back(std::move(q));
          neg_pow *= -c[i];
        }
      }
      partial = std::move(next);
    }
    for (multi_term& p : partial) out.terms.push_back(std::move(p));
  }
  out.normalize();
  return out;
}

}  // namespace polytrace
