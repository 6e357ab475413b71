// Deterministic random scene generation: spline paths through random
// waypoints and random ellipse / half-space / offset-curve regions.
#pragma once

#include <cstdint>

#include "polytrace/trace_gen.hpp"

namespace polytrace {

/// Shape class for generated region polynomials: degree-2 ellipses and
/// degree-1 half-spaces, or degree-8 ellipse offset curves.
enum class degree_profile { quadratic, offset8 };

struct gen_options {
  std::uint64_t seed = 1;
  int region_count = 9;
  int segment_count = 8;
  degree_profile profile = degree_profile::quadratic;
};

/// Deterministic pseudo-random stream (splitmix64). Identical seeds yield
/// identical streams on every platform.
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi], inclusive.
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// Builds a planar scene: `segment_count + 1` random waypoints on a
/// quarter-integer grid in [-10,10]^2 joined by an exact natural cubic
/// spline, plus `region_count` random regions named g1, g2, .... The same
/// options always produce the same scene.
scene generate_scene(const gen_options& opt);

/// Exact natural cubic spline through the waypoints (zero second derivative
/// at both ends): returns one cubic coordinate polynomial per segment.
/// waypoints[i][c] is coordinate c of the i-th point; requires >= 2 points.
std::vector<poly_vec> natural_cubic_spline(
    const std::vector<std::vector<rational>>& waypoints);

}  // namespace polytrace
