#include "polytrace/plot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polytrace {

namespace {

const char* provenance_name(checkpoint_kind k) {
  switch (k) {
    case checkpoint_kind::endpoint:
      return "endpoint";
    case checkpoint_kind::interval_start:
      return "interval_start";
    case checkpoint_kind::isolated_root:
      return "isolated_root";
    case checkpoint_kind::interval_end:
      return "interval_end";
    case checkpoint_kind::midpoint:
      return "midpoint";
  }
  return "unknown";
}

std::string join_ids(const letter& l, const std::vector<std::string>& ids) {
  std::string out;
  for (size_t k = 0; k < l.size(); ++k) {
    if (k > 0) out += ';';
    out += ids[static_cast<size_t>(l[k])];
  }
  return out;
}

}  // namespace

std::string plot_csv(const scene& sc, int samples, int digits, int jobs) {
  if (samples < 2) throw input_error("plot needs at least 2 samples");
  const spline_result sp = spline_trace(sc, jobs);
  const std::vector<std::string> ids = sc.region_ids();

  std::ostringstream out;
  out << "segment,s";
  for (int c = 0; c < sc.dimension; ++c) out << ",x" << (c + 1);
  out << ",letter,provenance\n";

  for (size_t seg = 0; seg < sc.segments.size(); ++seg) {
    const poly_vec& rho = sc.segments[seg];

    struct row {
      letter obs;
      const char* provenance;
    };
    std::map<rational, row> rows;
    for (const checkpoint& cp : sp.segments[seg].checkpoints) {
      rows[cp.s] = {cp.obs, provenance_name(cp.kind)};
    }
    for (int k = 0; k < samples; ++k) {
      const rational s = make_rational(integer(k), integer(samples - 1));
      if (rows.find(s) != rows.end()) continue;  // checkpoint rows win
      rows.emplace(s, row{observation_letter(sc.regions, rho, s), "uniform"});
    }

    for (const auto& [s, r] : rows) {
      out << seg << ',' << decimal_string(s, digits);
      for (int c = 0; c < sc.dimension; ++c) {
        out << ',' << decimal_string(rho[static_cast<size_t>(c)].eval(s),
                                     digits);
      }
      out << ',' << join_ids(r.obs, ids) << ',' << r.provenance << '\n';
    }
  }
  return out.str();
}

}  // namespace polytrace
