#include "polytrace/rootiso.hpp"

#include <algorithm>
#include <deque>

namespace polytrace {

namespace {

template <class T>
int sign_variations_impl(const basic_poly<T>& p) {
  int var = 0;
  int prev = 0;
  for (const T& c : p.coeff) {
    const int s = c < 0 ? -1 : (c > 0 ? 1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Bit length of |z| (0 -> 1), used for recursion depth budgets.
size_t bit_length(const integer& z) {
  if (z == 0) return 1;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

size_t depth_budget(const int_poly& q) {
  return 8 * (static_cast<size_t>(q.degree() > 0 ? q.degree() : 1) +
              bit_length(max_norm(q))) +
         32;
}

// Descartes variation count of f on its local (0,1): the transform
// s -> 1/(s+1) realized as reciprocal followed by a Taylor shift by 1.
int var01(const int_poly& f) {
  return sign_variations_impl(taylor_shift(reciprocal(f), integer(1)));
}

// 2^deg(f) * f(s/2), content-reduced: maps the left half of f's local (0,1)
// onto a fresh (0,1).
int_poly left_half(const int_poly& f) {
  std::vector<integer> c = f.coeff;
  const int d = f.degree();
  for (int i = 0; i < d; ++i) {
    mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(),
                 static_cast<mp_bitcnt_t>(d - i));
  }
  return primitive_part(int_poly(std::move(c)));
}

// Root-existence bisection on a square-free polynomial.
bool search_root_squarefree(const rat_poly& u, const rational& a,
                            const rational& b, size_t depth) {
  const int v = sign_variations_impl(mobius_transform(u, a, b));
  if (v == 0) return false;
  if (v % 2 == 1) return true;
  if (depth == 0) {
    throw internal_error("root existence bisection exceeded its depth budget");
  }
  const rational m = (a + b) / 2;
  if (u.eval(m) == 0) return true;
  return search_root_squarefree(u, a, m, depth - 1) ||
         search_root_squarefree(u, m, b, depth - 1);
}

}  // namespace

int sign_variations(const int_poly& p) { return sign_variations_impl(p); }
int sign_variations(const rat_poly& p) { return sign_variations_impl(p); }

rat_poly mobius_transform(const rat_poly& p, const rational& a,
                          const rational& b) {
  if (p.is_zero()) return p;
  rat_poly q = taylor_shift(p, a);
  q = homothety(q, b - a);
  q = reciprocal(q);
  return taylor_shift(q, rational(1));
}

bool has_root_open_squarefree(const rat_poly& p, const rational& a,
                              const rational& b) {
  if (!(a < b)) return false;
  if (p.is_zero()) return true;
  if (p.degree() == 0) return false;
  auto [z, scale] = rational_to_integer(p);
  (void)scale;
  return search_root_squarefree(p, a, b, depth_budget(z));
}

bool has_root_open(const rat_poly& p, const rational& a, const rational& b) {
  if (!(a < b)) return false;
  if (p.is_zero()) return true;
  if (p.degree() == 0) return false;
  const int v = sign_variations(mobius_transform(p, a, b));
  if (v == 0) return false;
  if (v % 2 == 1) return true;
  // Even nonzero count: resolve exactly on the square-free part, whose
  // simple roots make the bisection terminate.
  return has_root_open_squarefree(squarefree_part(p), a, b);
}

bool has_root_open(const int_poly& p, const rational& a, const rational& b) {
  return has_root_open(to_rational(p), a, b);
}

bool has_root_closed(const rat_poly& p, const rational& a, const rational& b) {
  if (a > b) return false;
  if (p.is_zero()) return true;
  if (p.eval(a) == 0) return true;
  if (a != b && p.eval(b) == 0) return true;
  return has_root_open(p, a, b);
}

bool has_root_closed(const int_poly& p, const rational& a, const rational& b) {
  return has_root_closed(to_rational(p), a, b);
}

std::vector<isolating_interval> isolate_roots(const int_poly& q) {
  std::vector<isolating_interval> out;
  const int_poly qz = primitive_part(q);
  if (qz.degree() <= 0) return out;

  struct work_item {
    int_poly f;  // localizes qz: roots of f in (0,1) <-> roots of qz in (lo,hi)
    rational lo, hi;
    size_t depth;
  };
  const size_t budget = depth_budget(qz);
  std::deque<work_item> queue;
  queue.push_back({qz, rational(0), rational(1), 0});

  while (!queue.empty()) {
    work_item item = std::move(queue.front());
    queue.pop_front();
    if (item.depth > budget) {
      throw internal_error(
          "root isolation exceeded its depth budget (input not square-free?)");
    }
    const rational mid = (item.lo + item.hi) / 2;
    int_poly fl = left_half(item.f);
    int_poly fr = taylor_shift(fl, integer(1));
    if (fr.at(0) == 0) {
      // f_l(1) == 0, i.e. the original polynomial vanishes at the midpoint.
      out.push_back({mid, mid});
    }
    const std::pair<int_poly*, std::pair<rational, rational>> halves[2] = {
        {&fl, {item.lo, mid}}, {&fr, {mid, item.hi}}};
    for (const auto& [g, range] : halves) {
      const int v = var01(*g);
      if (v == 0) continue;
      if (v == 1) {
        out.push_back({range.first, range.second});
      } else {
        queue.push_back({std::move(*g), range.first, range.second,
                         item.depth + 1});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const isolating_interval& x, const isolating_interval& y) {
              if (x.lo != y.lo) return x.lo < y.lo;
              return x.hi < y.hi;
            });
  return out;
}

std::vector<isolating_interval> isolate_roots(const rat_poly& q) {
  auto [z, scale] = rational_to_integer(q);
  (void)scale;
  return isolate_roots(z);
}

rational min_root_sep(const int_poly& q) {
  const int d = q.degree();
  if (d <= 1) return rational(1);
  // ceil(d^(3d/2)) without floating point.
  integer ceil_pow;
  if ((3 * d) % 2 == 0) {
    mpz_ui_pow_ui(ceil_pow.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(3 * d / 2));
  } else {
    integer full;
    mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(3 * d));
    integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), full.get_mpz_t());
    ceil_pow = rem == 0 ? root : root + 1;
  }
  integer norm_pow;
  const integer nrm = max_norm(q);
  mpz_pow_ui(norm_pow.get_mpz_t(), nrm.get_mpz_t(),
             static_cast<unsigned long>(d - 1));
  return make_rational(integer(1), ceil_pow * norm_pow);
}

namespace {

// True iff some not-identically-zero entry of p_list vanishes at x;
// equivalent to "the product of the nonzero entries vanishes at x".
bool product_vanishes(const std::vector<int_poly>& p_list, const rational& x) {
  for (const int_poly& p : p_list) {
    if (p.is_zero()) continue;
    if (p.eval(x) == 0) return true;
  }
  return false;
}

rational witness_separation(const std::vector<int_poly>& p_list, int i, int m) {
  return min_root_sep(p_list.at(static_cast<size_t>(i)) *
                      p_list.at(static_cast<size_t>(m)));
}

}  // namespace

std::vector<isolating_interval> strict_isolating_intervals(
    const std::vector<int_poly>& p_list,
    const std::vector<isolating_interval>& intervals,
    const std::vector<std::vector<int>>& members) {
  const size_t J = intervals.size();
  if (members.size() != J) {
    throw internal_error("witness sets do not match interval count");
  }
  if (J == 0) return {};
  // a[j], b[j] for 1 <= j <= J, with sentinels b[0] = 0 and a[J+1] = 1.
  std::vector<rational> a(J + 2), b(J + 1);
  b[0] = 0;
  for (size_t j = 1; j <= J; ++j) {
    a[j] = intervals[j - 1].lo;
    b[j] = intervals[j - 1].hi;
  }
  a[J + 1] = 1;

  const auto witness = [&](size_t j) -> int {
    const std::vector<int>& e = members[j - 1];
    if (e.empty()) {
      throw internal_error("interval without a witness polynomial");
    }
    return *std::min_element(e.begin(), e.end());
  };
  const auto boundary_witness = [&](const rational& x) -> int {
    for (size_t i = 0; i < p_list.size(); ++i) {
      if (!p_list[i].is_zero() && p_list[i].eval(x) == 0) {
        return static_cast<int>(i);
      }
    }
    throw internal_error("no factor vanishes at the claimed boundary root");
  };

  if (a[1] == 0 && product_vanishes(p_list, a[1])) {
    const int m = witness(1);
    const int i = boundary_witness(rational(0));
    a[1] = witness_separation(p_list, i, m);
  }
  for (size_t j = 1; j <= J; ++j) {
    if (a[j] != b[j]) continue;
    const int m = witness(j);
    if (a[j] == b[j - 1]) {  // touches the previous interval (never at j=1)
      const int i = witness(j - 1);
      const rational sep = witness_separation(p_list, i, m);
      a[j] -= sep;
      b[j - 1] = a[j];
    } else {
      a[j] = (a[j] + b[j - 1]) / 2;
    }
    if (b[j] == a[j + 1]) {  // touches the next interval (never at j=J)
      const int i = witness(j + 1);
      const rational sep = witness_separation(p_list, i, m);
      b[j] += sep;
      a[j + 1] = b[j];
    } else {
      b[j] = (b[j] + a[j + 1]) / 2;
    }
  }
  if (b[J] == 1 && product_vanishes(p_list, b[J])) {
    const int m = witness(J);
    const int i = boundary_witness(rational(1));
    b[J] = rational(1) - witness_separation(p_list, i, m);
  }

  std::vector<isolating_interval> out(J);
  for (size_t j = 1; j <= J; ++j) out[j - 1] = {a[j], b[j]};
  return out;
}

rational root_upper_bound(const rat_poly& p) {
  const int d = p.degree();
  if (d <= 0) return rational(1);
  const rational lead = abs(p.leading());
  rational m(0);
  for (int i = 0; i < d; ++i) {
    rational a = abs(p.coeff[static_cast<size_t>(i)]);
    if (a > m) m = a;
  }
  return rational(1) + m / lead;
}

rational root_upper_bound(const int_poly& p) {
  return root_upper_bound(to_rational(p));
}

}  // namespace polytrace
