#pragma once
// Exact real-root machinery on (0,1): Descartes sign variations, the Möbius
// interval transform, decision procedures for root existence on open and
// closed intervals, bisection-based root isolation, a root separation lower
// bound, conversion of isolating intervals into strict ones, and a Cauchy
// root upper bound.

#include "polytrace/unipoly.hpp"

#include <vector>

namespace polytrace {

/// Number of sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const int_poly& p);
int sign_variations(const rat_poly& p);

/// (s+1)^deg * p((a*s + b)/(s+1)): maps (0, inf) onto (a, b), so Descartes'
/// rule applied to the result speaks about roots of p inside (a, b).
rat_poly mobius_transform(const rat_poly& p, const rational& a, const rational& b);

/// True iff p has a real root in the open interval (a, b); exact.
/// The zero polynomial has a root everywhere. Decided by Descartes counts
/// (0 variations: no root; odd: root) with bisection of the square-free
/// part to resolve even counts.
bool has_root_open(const rat_poly& p, const rational& a, const rational& b);
bool has_root_open(const int_poly& p, const rational& a, const rational& b);

/// Same for p already known square-free (skips the gcd).
bool has_root_open_squarefree(const rat_poly& p, const rational& a, const rational& b);

/// True iff p has a real root in [a, b].
bool has_root_closed(const rat_poly& p, const rational& a, const rational& b);
bool has_root_closed(const int_poly& p, const rational& a, const rational& b);

/// Open interval (lo, hi), or the single point lo == hi.
struct isolating_interval {
  rational lo, hi;
  bool is_singleton() const { return lo == hi; }
};

/// Bisection root isolation over (0,1) driven by Descartes tests on dyadic
/// subintervals: each work item has its midpoint tested for an exact root
/// (emitted as a singleton) and both halves Descartes-tested — 0 variations
/// discards the half, 1 emits it as an open interval, more re-enqueues it.
/// Intervals come back ordered; each contains exactly one root of q, and
/// every root of q in (0,1) is covered. Requires square-free q for
/// termination; a generous depth limit turns anything else into
/// internal_error.
std::vector<isolating_interval> isolate_roots(const rat_poly& q);
std::vector<isolating_interval> isolate_roots(const int_poly& q);

/// 1 / (ceil(d^(3d/2)) * max_norm(q)^(d-1)) for d = deg(q) >= 1, a positive
/// lower bound on the distance between distinct real roots of q; 1 when
/// d <= 1. Integer-only arithmetic (the odd-d square root is an exact
/// integer sqrt with ceiling).
rational min_root_sep(const int_poly& q);

/// Converts isolating intervals for the product of p_list (with per-interval
/// witness index sets `members`, 0-based) into strict open intervals
/// (a_j, b_j): singletons are widened using min_root_sep of witness products
/// when they touch a neighbour and gap midpoints otherwise, and endpoint
/// roots of the product at 0 / 1 are moved off the boundary. Identically
/// zero entries of p_list are ignored by the endpoint root tests.
std::vector<isolating_interval> strict_isolating_intervals(
    const std::vector<int_poly>& p_list,
    const std::vector<isolating_interval>& intervals,
    const std::vector<std::vector<int>>& members);

/// Cauchy bound: 1 + max_i |c_i| / |lead| over i < deg, all real roots of p
/// are strictly below it; 1 for constants.
rational root_upper_bound(const rat_poly& p);
rational root_upper_bound(const int_poly& p);

}  // namespace polytrace
