// CSV export of a scene's path geometry and observations for plotting.
#pragma once

#include <string>

#include "polytrace/trace_gen.hpp"

namespace polytrace {

/// Renders plot data as CSV with header
///   segment,s,x1,...,xn,letter,provenance
/// One row per sample: `samples` uniformly spaced parameters per segment
/// plus every trace checkpoint, deduplicated per parameter (checkpoint rows
/// win and carry their provenance; uniform rows are marked "uniform").
/// Rationals are rendered as decimals with `digits` fractional digits;
/// letters as semicolon-joined region ids. Requires samples >= 2.
std::string plot_csv(const scene& sc, int samples, int digits, int jobs = 1);

}  // namespace polytrace
