#include "polytrace/scene_gen.hpp"

#include <iterator>
#include <string>

namespace polytrace {

namespace {

struct template_term {
  unsigned ex, ey;
  const char* coeff;
};

// Implicit equation of the curve at distance 1/4 from the ellipse
// x^2/4 + y^2 = 1, centered at the origin: an irreducible degree-8 curve
// with both the inner and outer offset branches. Negative inside the band
// swept around the ellipse boundary, positive far away and at the center.
constexpr template_term offset_wide[] = {
    {0, 0, "8037225"},   {0, 2, "-13989024"}, {0, 4, "-3094272"},
    {0, 6, "3964928"},   {0, 8, "1048576"},   {2, 0, "-9927360"},
    {2, 2, "16842240"},  {2, 4, "-8232960"},  {2, 6, "2621440"},
    {4, 0, "4529664"},   {4, 2, "-6021120"},  {4, 4, "2162688"},
    {6, 0, "-901120"},   {6, 2, "655360"},    {8, 0, "65536"},
};

// Same construction for the ellipse x^2/(9/4) + y^2 = 1 at distance 1/4.
constexpr template_term offset_narrow[] = {
    {0, 0, "6890625"},   {0, 2, "-5320000"},  {0, 4, "-14912000"},
    {0, 6, "1622016"},   {0, 8, "5308416"},   {2, 0, "-18420000"},
    {2, 2, "33164800"},  {2, 4, "-29253632"}, {2, 6, "15335424"},
    {4, 0, "17824000"},  {4, 2, "-29990912"}, {4, 4, "15794176"},
    {6, 0, "-7307264"},  {6, 2, "6815744"},   {8, 0, "1048576"},
};

multi_poly from_template(const template_term* terms, size_t n) {
  multi_poly g;
  g.dimension = 2;
  for (size_t i = 0; i < n; ++i) {
    multi_term t;
    t.coeff = rational(integer(terms[i].coeff));
    t.exponents = {terms[i].ex, terms[i].ey};
    g.terms.push_back(std::move(t));
  }
  g.normalize();
  return g;
}

rational quarter(splitmix64& rng, long lo4, long hi4) {
  return make_rational(integer(rng.next_int(lo4, hi4)), integer(4));
}

multi_poly random_ellipse(splitmix64& rng) {
  // q^2 (x-cx)^2 + p^2 (y-cy)^2 - p^2 q^2, centered on a quarter grid with
  // quarter-grid semi-axes p, q in [1/2, 4].
  const rational cx = quarter(rng, -40, 40);
  const rational cy = quarter(rng, -40, 40);
  const rational p = quarter(rng, 2, 16);
  const rational q = quarter(rng, 2, 16);
  multi_poly g;
  g.dimension = 2;
  g.terms.push_back({q * q, {2, 0}});
  g.terms.push_back({p * p, {0, 2}});
  g.terms.push_back({-p * p * q * q, {0, 0}});
  g.normalize();
  return translate(g, {cx, cy});
}

multi_poly random_halfspace(splitmix64& rng) {
  long nx = 0;
  long ny = 0;
  while (nx == 0 && ny == 0) {
    nx = rng.next_int(-4, 4);
    ny = rng.next_int(-4, 4);
  }
  const rational cx = quarter(rng, -40, 40);
  const rational cy = quarter(rng, -40, 40);
  multi_poly g;
  g.dimension = 2;
  g.terms.push_back({rational(nx), {1, 0}});
  g.terms.push_back({rational(ny), {0, 1}});
  g.terms.push_back({-(rational(nx) * cx + rational(ny) * cy), {0, 0}});
  g.normalize();
  return g;
}

multi_poly random_offset8(splitmix64& rng) {
  const bool wide = rng.next() % 2 == 0;
  multi_poly base =
      wide ? from_template(offset_wide, std::size(offset_wide))
           : from_template(offset_narrow, std::size(offset_narrow));
  const rational cx = quarter(rng, -40, 40);
  const rational cy = quarter(rng, -40, 40);
  return translate(base, {cx, cy});
}

}  // namespace

std::vector<poly_vec> natural_cubic_spline(
    const std::vector<std::vector<rational>>& waypoints) {
  if (waypoints.size() < 2) {
    throw input_error("spline needs at least two waypoints");
  }
  const size_t K = waypoints.size() - 1;  // segment count
  const size_t n = waypoints[0].size();
  for (const auto& w : waypoints) {
    if (w.size() != n) throw input_error("waypoint dimensions disagree");
  }

  std::vector<poly_vec> segments(K, poly_vec(n));
  for (size_t c = 0; c < n; ++c) {
    // Second derivatives M_0..M_K with M_0 = M_K = 0 and, for interior i,
    // M_{i-1} + 4 M_i + M_{i+1} = 6 (W_{i+1} - 2 W_i + W_{i-1}).
    std::vector<rational> M(K + 1, rational(0));
    const size_t m = K >= 1 ? K - 1 : 0;  // number of interior unknowns
    if (m > 0) {
      std::vector<rational> diag(m), rhs(m);
      for (size_t i = 0; i < m; ++i) {
        diag[i] = rational(4);
        rhs[i] = rational(6) * (waypoints[i + 2][c] -
                                rational(2) * waypoints[i + 1][c] +
                                waypoints[i][c]);
      }
      // Thomas algorithm; sub- and super-diagonal entries are all 1.
      for (size_t i = 1; i < m; ++i) {
        const rational w = rational(1) / diag[i - 1];
        diag[i] -= w;
        rhs[i] -= w * rhs[i - 1];
      }
      M[m] = rhs[m - 1] / diag[m - 1];
      for (size_t i = m - 1; i-- > 0;) {
        M[i + 1] = (rhs[i] - M[i + 2]) / diag[i];
      }
    }

    for (size_t i = 0; i < K; ++i) {
      const rational& w0 = waypoints[i][c];
      const rational& w1 = waypoints[i + 1][c];
      rat_poly p;
      p.coeff = {
          w0,
          w1 - w0 - M[i] / 3 - M[i + 1] / 6,
          M[i] / 2,
          (M[i + 1] - M[i]) / 6,
      };
      p.normalize();
      segments[i][c] = std::move(p);
    }
  }
  return segments;
}

scene generate_scene(const gen_options& opt) {
  if (opt.region_count < 0) throw input_error("region count must be >= 0");
  if (opt.segment_count < 1) throw input_error("segment count must be >= 1");
  splitmix64 rng(opt.seed);

  scene sc;
  sc.dimension = 2;
  for (int i = 0; i < opt.region_count; ++i) {
    region r;
    r.id = "g" + std::to_string(i + 1);
    if (opt.profile == degree_profile::offset8) {
      r.g = random_offset8(rng);
    } else {
      r.g = rng.next() % 3 == 2 ? random_halfspace(rng) : random_ellipse(rng);
    }
    sc.regions.push_back(std::move(r));
  }

  std::vector<std::vector<rational>> waypoints(
      static_cast<size_t>(opt.segment_count) + 1);
  for (auto& w : waypoints) {
    w = {quarter(rng, -40, 40), quarter(rng, -40, 40)};
  }
  sc.segments = natural_cubic_spline(waypoints);
  sc.suffix.kind = suffix_kind::direct;
  sc.suffix.reaches_endpoint = false;
  return sc;
}

}  // namespace polytrace
