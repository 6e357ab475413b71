#pragma once
// Scene model (regions + spline path + suffix behaviour), the exact trace
// construction for one polynomial segment, the independent trace
// certificate, trace snipping, spline concatenation, lasso assembly for the
// three suffix kinds, and the constancy bound for unbounded trajectories.

#include "polytrace/multipoly.hpp"
#include "polytrace/rootiso.hpp"
#include "polytrace/words.hpp"

#include <string>
#include <vector>

namespace polytrace {

/// A region {x : g(x) <= 0} labelled by an atomic-proposition id.
struct region {
  std::string id;
  multi_poly g;
};

enum class suffix_kind { invariant, cyclic, direct };

struct suffix_spec {
  suffix_kind kind = suffix_kind::invariant;
  /// direct only: whether the motion actually attains the path endpoint.
  bool reaches_endpoint = false;
  /// cyclic only: index of the first segment of the repeating loop.
  int loop_start_segment = 0;
};

/// Regions, an endpoint-matched sequence of path segments (each interpreted
/// on the parameter interval [0,1]), and how the trajectory continues after
/// the final segment.
struct scene {
  int dimension = 0;
  std::vector<region> regions;
  std::vector<poly_vec> segments;
  suffix_spec suffix;

  std::vector<std::string> region_ids() const {
    std::vector<std::string> ids;
    ids.reserve(regions.size());
    for (const region& r : regions) ids.push_back(r.id);
    return ids;
  }
};

enum class checkpoint_kind {
  endpoint,        // parameter 0 or 1
  interval_start,  // left end of a strict isolating interval
  isolated_root,   // a root inside an interval; parameter is representative
  interval_end,    // right end of the last strict interval
  midpoint         // parameter 1/2 when no interval exists
};

/// One sample of the sampling function: its parameter, the observed letter,
/// and how the parameter was chosen. For isolated_root entries the letter is
/// exact but `s` is only the midpoint of the enclosing strict interval (the
/// true root is irrational in general); consumers must not evaluate there.
struct checkpoint {
  rational s;
  letter obs;
  checkpoint_kind kind;
};

/// {i : g_i(rho(s)) <= 0}, decided with exact rational arithmetic.
letter observation_letter(const std::vector<region>& regions,
                          const poly_vec& rho, const rational& s);

/// Result of tracing one segment: the trace word, its checkpoints, and the
/// root-structure certificate data (P = product of the integer-scaled
/// composites with a root in [0,1]; V = gcd(P, P'), monic).
struct segment_trace {
  trace_word trace;
  std::vector<checkpoint> checkpoints;
  rat_poly P;
  rat_poly V;
};

/// Computes a trace of h(rho(s)) for s in [0,1]: letters at 0, at the left
/// end of each strict isolating interval of the square-free part of P, at
/// each isolated root (by the root-existence union rule when V is
/// nonconstant), at the right end of the last interval (or at 1/2 when
/// there are no intervals), and at 1. Checkpoint parameters are strictly
/// increasing.
segment_trace poly_trace(const std::vector<region>& regions,
                         const poly_vec& rho);

/// Independent certificate for a poly_trace run. Requires V = gcd(P, P')
/// monic (so that Q = P / V is square-free). Verifies that checkpoint
/// parameters run strictly from 0 to 1, that Q has at most one root between
/// consecutive checkpoints (exactly one around each isolated-root
/// checkpoint), and that every root of V in [0,1] is either a checkpoint
/// parameter or the unique root inside an interval hosting an isolated-root
/// checkpoint. Returns false on any violation.
bool certify_trace(const rat_poly& P, const rat_poly& V,
                   const std::vector<checkpoint>& checkpoints);

/// Truncates a trace at parameter T (checkpoint parameters bracket T): if
/// `letter_at_T` matches the letter after the bracketing checkpoint, the
/// prefix through that letter is returned, otherwise the bracketing letter
/// is repeated. Throws input_error if T is outside the checkpoint range.
trace_word snip_trace(const trace_word& zeta,
                      const std::vector<checkpoint>& checkpoints,
                      const rational& T, const letter& letter_at_T);

struct spline_result {
  trace_word trace;  // raw concatenation, in segment order
  std::vector<segment_trace> segments;
};

/// Per-segment traces concatenated in order (unreduced). `jobs` > 1 traces
/// segments concurrently; assembly order is deterministic regardless.
spline_result spline_trace(const scene& sc, int jobs = 1);

struct trajectory_result {
  lasso_word word;
  spline_result spline;
};

/// Extends the spline trace to an infinite lasso word according to the
/// scene's suffix: invariant repeats the final letter; cyclic repeats the
/// trace of the designated loop segments (which must close); direct repeats
/// the final letter when the motion reaches the endpoint or the path ends
/// inside a constant-observation tail, and otherwise drops the final letter
/// and repeats the one before it.
trajectory_result trajectory_trace(const scene& sc, int jobs = 1);

/// A parameter bound L >= 0 such that the observation letter of rho on
/// [L, infinity) is constant: the Cauchy root bound of the product of the
/// composites that vanish somewhere at a nonnegative parameter (1 if none
/// do). rho is interpreted on [0, infinity).
rational unbounded_suffix_bound(const std::vector<region>& regions,
                                const poly_vec& rho);

}  // namespace polytrace
