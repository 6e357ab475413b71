#include "polytrace/trace_gen.hpp"

#include <algorithm>
#include <future>

namespace polytrace {

namespace {

// Integer-scaled composite of every region with the segment; the positive
// scale factor preserves signs, so membership tests stay exact on integers.
std::vector<int_poly> scaled_composites(const std::vector<region>& regions,
                                        const poly_vec& rho) {
  std::vector<int_poly> p(regions.size());
  for (size_t i = 0; i < regions.size(); ++i) {
    p[i] = rational_to_integer(multi_compose(regions[i].g, rho)).first;
  }
  return p;
}

letter letter_from_signs(const std::vector<int_poly>& p, const rational& s) {
  letter l;
  for (size_t i = 0; i < p.size(); ++i) {
    if (sign(p[i].eval(s)) <= 0) l.push_back(static_cast<int>(i));
  }
  return l;
}

// Pairwise-coprime square-free monic polynomials whose product is the
// radical of the product of the inputs.
std::vector<rat_poly> gcd_free_basis(const std::vector<rat_poly>& factors) {
  std::vector<rat_poly> basis;
  for (const rat_poly& factor : factors) {
    rat_poly f = factor;
    std::vector<rat_poly> next;
    next.reserve(basis.size() + 1);
    for (const rat_poly& b : basis) {
      if (f.degree() <= 0) {
        next.push_back(b);
        continue;
      }
      rat_poly g = poly_gcd(f, b);
      if (g.degree() <= 0) {
        next.push_back(b);
        continue;
      }
      rat_poly rest = divide_exact(b, g);
      if (rest.degree() >= 1) next.push_back(std::move(rest));
      f = divide_exact(f, g);
      next.push_back(std::move(g));
    }
    if (f.degree() >= 1) next.push_back(std::move(f));
    basis = std::move(next);
  }
  return basis;
}

}  // namespace

letter observation_letter(const std::vector<region>& regions,
                          const poly_vec& rho, const rational& s) {
  return letter_from_signs(scaled_composites(regions, rho), s);
}

segment_trace poly_trace(const std::vector<region>& regions,
                         const poly_vec& rho) {
  const std::vector<int_poly> p = scaled_composites(regions, rho);
  segment_trace out;

  const auto emit = [&out](const rational& s, letter l, checkpoint_kind kind) {
    if (!out.checkpoints.empty()) {
      const rational& prev = out.checkpoints.back().s;
      if (prev == s) return;  // boundary duplicate; letters coincide
      if (prev > s) throw internal_error("checkpoints are not increasing");
    }
    out.trace.letters.push_back(l);
    out.checkpoints.push_back({s, std::move(l), kind});
  };

  emit(rational(0), letter_from_signs(p, rational(0)),
       checkpoint_kind::endpoint);

  // Factors that actually vanish somewhere on [0,1].
  rat_poly P{rational(1)};
  std::vector<rat_poly> squarefree_factors;
  for (const int_poly& pi : p) {
    if (pi.degree() >= 1 && has_root_closed(pi, rational(0), rational(1))) {
      P = P * to_rational(pi);
      squarefree_factors.push_back(monic(squarefree_part(to_rational(pi))));
    }
  }

  // V = gcd(P, P') monic, assembled from the factored form of P: the
  // product of a gcd-free basis of the factors' square-free parts is the
  // radical of P, and P divided by its radical is exactly the gcd.
  rat_poly radical{rational(1)};
  for (const rat_poly& b : gcd_free_basis(squarefree_factors)) {
    radical = radical * b;
  }
  const rat_poly V = monic(divide_exact(P, radical));
  const rat_poly Q = divide_exact(P, V);
  out.P = P;
  out.V = V;

  const std::vector<isolating_interval> raw = isolate_roots(Q);
  const size_t J = raw.size();

  // Witness sets: which composites vanish inside each isolating interval.
  std::vector<std::vector<int>> members(J);
  for (size_t j = 0; j < J; ++j) {
    for (size_t i = 0; i < p.size(); ++i) {
      const bool hit = raw[j].is_singleton()
                           ? p[i].eval(raw[j].lo) == 0
                           : has_root_open(p[i], raw[j].lo, raw[j].hi);
      if (hit) members[j].push_back(static_cast<int>(i));
    }
  }

  const std::vector<isolating_interval> strict =
      strict_isolating_intervals(p, raw, members);

  const bool isolated_points_present = V.degree() > 0;
  for (size_t j = 0; j < J; ++j) {
    emit(strict[j].lo, letter_from_signs(p, strict[j].lo),
         checkpoint_kind::interval_start);
    if (isolated_points_present) {
      // Letter at the interval's root: the letter at the left endpoint plus
      // every region whose composite vanishes inside (root existence test).
      letter at_root =
          letter_union(out.trace.letters.back(), letter(members[j].begin(),
                                                        members[j].end()));
      const rational representative = (strict[j].lo + strict[j].hi) / 2;
      emit(representative, std::move(at_root), checkpoint_kind::isolated_root);
    }
  }
  if (J > 0) {
    emit(strict[J - 1].hi, letter_from_signs(p, strict[J - 1].hi),
         checkpoint_kind::interval_end);
  } else {
    emit(rational(1, 2), letter_from_signs(p, rational(1, 2)),
         checkpoint_kind::midpoint);
  }
  emit(rational(1), letter_from_signs(p, rational(1)),
       checkpoint_kind::endpoint);
  return out;
}

namespace {

// A real root of a square-free polynomial, either known exactly or bracketed
// by an open interval containing exactly that one root.
struct root_handle {
  bool exact;
  rational r;        // exact case
  rational lo, hi;   // bracket case
};

std::vector<root_handle> unit_interval_roots(const rat_poly& squarefree) {
  std::vector<root_handle> roots;
  if (squarefree.degree() < 1) return roots;
  if (squarefree.eval(rational(0)) == 0) {
    roots.push_back({true, rational(0), {}, {}});
  }
  for (const isolating_interval& iv : isolate_roots(squarefree)) {
    if (iv.is_singleton()) {
      roots.push_back({true, iv.lo, {}, {}});
    } else {
      roots.push_back({false, {}, iv.lo, iv.hi});
    }
  }
  if (squarefree.eval(rational(1)) == 0) {
    roots.push_back({true, rational(1), {}, {}});
  }
  return roots;
}

// -1 / 0 / +1 for root < x, root == x, root > x. u is square-free and the
// bracket contains exactly one of its roots.
int compare_root(const rat_poly& u, const root_handle& h, const rational& x) {
  if (h.exact) return h.r < x ? -1 : (h.r == x ? 0 : 1);
  if (x <= h.lo) return 1;
  if (x >= h.hi) return -1;
  const int sx = sign(u.eval(x));
  if (sx == 0) return 0;  // x is the bracket's root
  const int slo = sign(u.eval(h.lo));
  if (slo != 0) {
    // One simple root inside: the sign flips exactly when passing it.
    return sx != slo ? -1 : 1;
  }
  return has_root_open_squarefree(u, h.lo, x) ? -1 : 1;
}

bool root_equals(const rat_poly& u, const root_handle& h, const rational& x) {
  if (h.exact) return h.r == x;
  return h.lo < x && x < h.hi && u.eval(x) == 0;
}

}  // namespace

bool certify_trace(const rat_poly& P, const rat_poly& V,
                   const std::vector<checkpoint>& checkpoints) {
  try {
    if (V.is_zero()) return false;
    auto [Q, rem] = divmod(P, V);
    if (!rem.is_zero()) return false;

    const size_t K = checkpoints.size();
    if (K < 2) return false;
    if (checkpoints.front().s != 0 || checkpoints.back().s != 1) return false;
    for (size_t k = 0; k + 1 < K; ++k) {
      if (!(checkpoints[k].s < checkpoints[k + 1].s)) return false;
    }

    // At most one root of Q between consecutive checkpoints (Q is
    // square-free given the precondition V = gcd(P, P')).
    const std::vector<root_handle> q_roots = unit_interval_roots(Q);
    const auto count_between = [&](const rational& x, const rational& y) {
      int n = 0;
      for (const root_handle& h : q_roots) {
        if (compare_root(Q, h, x) >= 0 && compare_root(Q, h, y) <= 0) ++n;
      }
      return n;
    };
    for (size_t k = 0; k + 1 < K; ++k) {
      if (count_between(checkpoints[k].s, checkpoints[k + 1].s) > 1) {
        return false;
      }
    }
    // Every isolated-root checkpoint must actually have one root around it.
    for (size_t k = 0; k < K; ++k) {
      if (checkpoints[k].kind != checkpoint_kind::isolated_root) continue;
      if (k == 0 || k + 1 == K) return false;
      if (count_between(checkpoints[k - 1].s, checkpoints[k + 1].s) != 1) {
        return false;
      }
    }

    // Every root of V in [0,1] is a checkpoint parameter or the unique root
    // inside a span guarded by an isolated-root checkpoint.
    if (V.degree() > 0) {
      const rat_poly vs = squarefree_part(V);
      for (const root_handle& h : unit_interval_roots(vs)) {
        bool covered = false;
        for (size_t k = 0; k < K && !covered; ++k) {
          covered = root_equals(vs, h, checkpoints[k].s);
        }
        for (size_t k = 0; k + 1 < K && !covered; ++k) {
          if (compare_root(vs, h, checkpoints[k].s) > 0 &&
              compare_root(vs, h, checkpoints[k + 1].s) < 0) {
            covered =
                checkpoints[k].kind == checkpoint_kind::isolated_root ||
                checkpoints[k + 1].kind == checkpoint_kind::isolated_root;
            break;
          }
        }
        if (!covered) return false;
      }
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

trace_word snip_trace(const trace_word& zeta,
                      const std::vector<checkpoint>& checkpoints,
                      const rational& T, const letter& letter_at_T) {
  const size_t K = checkpoints.size();
  if (K < 2 || zeta.size() != K) {
    throw input_error("trace and checkpoints do not match");
  }
  if (T < checkpoints.front().s || T > checkpoints.back().s) {
    throw input_error("snip parameter outside the checkpoint range");
  }
  size_t k = 0;
  while (k + 1 < K && !(checkpoints[k].s <= T && T <= checkpoints[k + 1].s)) {
    ++k;
  }
  trace_word out;
  if (letter_at_T == zeta.letters[k + 1]) {
    out.letters.assign(zeta.letters.begin(),
                       zeta.letters.begin() + static_cast<long>(k + 2));
  } else {
    out.letters.assign(zeta.letters.begin(),
                       zeta.letters.begin() + static_cast<long>(k + 1));
    out.letters.push_back(zeta.letters[k]);
  }
  return out;
}

namespace {

std::vector<rational> segment_point(const poly_vec& rho, const rational& s) {
  std::vector<rational> x(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) x[i] = rho[i].eval(s);
  return x;
}

void check_continuity(const scene& sc) {
  for (size_t k = 0; k + 1 < sc.segments.size(); ++k) {
    if (segment_point(sc.segments[k], rational(1)) !=
        segment_point(sc.segments[k + 1], rational(0))) {
      throw input_error("path segments " + std::to_string(k) + " and " +
                        std::to_string(k + 1) + " do not meet");
    }
  }
}

}  // namespace

spline_result spline_trace(const scene& sc, int jobs) {
  if (sc.segments.empty()) throw input_error("scene has no path segments");
  check_continuity(sc);
  const size_t n = sc.segments.size();
  spline_result out;
  out.segments.resize(n);
  if (jobs <= 1 || n == 1) {
    for (size_t k = 0; k < n; ++k) {
      out.segments[k] = poly_trace(sc.regions, sc.segments[k]);
    }
  } else {
    size_t next = 0;
    while (next < n) {
      const size_t batch =
          std::min(static_cast<size_t>(jobs), n - next);
      std::vector<std::future<segment_trace>> futures;
      futures.reserve(batch);
      for (size_t b = 0; b < batch; ++b) {
        const size_t idx = next + b;
        futures.push_back(std::async(std::launch::async, [&sc, idx] {
          return poly_trace(sc.regions, sc.segments[idx]);
        }));
      }
      for (size_t b = 0; b < batch; ++b) {
        out.segments[next + b] = futures[b].get();
      }
      next += batch;
    }
  }
  for (const segment_trace& st : out.segments) {
    out.trace = word_concat(out.trace, st.trace);
  }
  return out;
}

namespace {

// Whether the observation is constant on a tail (c, 1]: no composite root
// after the last interval and the same letter at 1 as just after c.
bool ends_in_constant_tail(const scene& sc, const segment_trace& last) {
  rational c(1, 2);
  for (const checkpoint& cp : last.checkpoints) {
    if (cp.kind == checkpoint_kind::interval_end ||
        cp.kind == checkpoint_kind::midpoint) {
      c = cp.s;
    }
  }
  if (c == 1) return true;
  const poly_vec& rho = sc.segments.back();
  if (has_root_open(last.P, c, rational(1))) return false;
  return observation_letter(sc.regions, rho, rational(1)) ==
         observation_letter(sc.regions, rho, (c + 1) / 2);
}

}  // namespace

trajectory_result trajectory_trace(const scene& sc, int jobs) {
  trajectory_result out;
  out.spline = spline_trace(sc, jobs);
  const trace_word& zeta = out.spline.trace;
  switch (sc.suffix.kind) {
    case suffix_kind::invariant: {
      out.word.prefix = zeta;
      out.word.loop.letters = {zeta.letters.back()};
      break;
    }
    case suffix_kind::cyclic: {
      const int ls = sc.suffix.loop_start_segment;
      if (ls < 0 || ls >= static_cast<int>(sc.segments.size())) {
        throw input_error("loop start segment out of range");
      }
      if (segment_point(sc.segments.back(), rational(1)) !=
          segment_point(sc.segments[static_cast<size_t>(ls)], rational(0))) {
        throw input_error("cyclic suffix requires the loop to close");
      }
      for (size_t k = 0; k < static_cast<size_t>(ls); ++k) {
        out.word.prefix =
            word_concat(out.word.prefix, out.spline.segments[k].trace);
      }
      for (size_t k = static_cast<size_t>(ls); k < sc.segments.size(); ++k) {
        out.word.loop =
            word_concat(out.word.loop, out.spline.segments[k].trace);
      }
      break;
    }
    case suffix_kind::direct: {
      const bool repeat_final =
          sc.suffix.reaches_endpoint ||
          ends_in_constant_tail(sc, out.spline.segments.back());
      if (repeat_final) {
        out.word.prefix = zeta;
        out.word.loop.letters = {zeta.letters.back()};
      } else {
        out.word.prefix.letters.assign(zeta.letters.begin(),
                                       zeta.letters.end() - 1);
        out.word.loop.letters = {out.word.prefix.letters.back()};
      }
      break;
    }
  }
  return out;
}

rational unbounded_suffix_bound(const std::vector<region>& regions,
                                const poly_vec& rho) {
  rat_poly prod{rational(1)};
  bool any = false;
  for (const int_poly& pi : scaled_composites(regions, rho)) {
    if (pi.is_zero() || pi.degree() < 1) continue;
    if (has_root_closed(pi, rational(0), root_upper_bound(pi))) {
      prod = prod * to_rational(pi);
      any = true;
    }
  }
  return any ? root_upper_bound(prod) : rational(1);
}

}  // namespace polytrace
