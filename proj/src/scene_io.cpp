#include "polytrace/scene_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace polytrace {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool valid_region_id(const std::string& id) {
  if (id.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(id[0])) && id[0] != '_') {
    return false;
  }
  for (const char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

rational number_from_json(const json& v, bool accept_floats,
                          const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) {
    return rational(integer(std::to_string(v.get<long long>())));
  }
  if (v.is_number_unsigned()) {
    return rational(integer(std::to_string(v.get<unsigned long long>())));
  }
  if (v.is_number_float()) {
    if (!accept_floats) {
      throw input_error(where +
                        ": floating-point literal; encode numbers as "
                        "\"num/den\" strings or pass --accept-floats");
    }
    rational r(v.get<double>());  // exact binary expansion
    r.canonicalize();
    return r;
  }
  throw input_error(where + ": expected a number");
}

const json& require(const json& obj, const char* key,
                    const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw input_error(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::vector<rational> point_at(const poly_vec& rho, const rational& s) {
  std::vector<rational> x(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) x[i] = rho[i].eval(s);
  return x;
}

}  // namespace

scene parse_scene(const std::string& json_text, bool accept_floats) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("scene JSON: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("scene JSON: expected an object");

  const json& version = require(doc, "version", "scene");
  if (!version.is_number_integer() || version.get<int>() != 1) {
    throw input_error("scene: unsupported version (expected 1)");
  }

  scene sc;
  const json& dim = require(doc, "dimension", "scene");
  if (!dim.is_number_integer() || dim.get<int>() < 1) {
    throw input_error("scene: dimension must be a positive integer");
  }
  sc.dimension = dim.get<int>();

  const json& regions = require(doc, "regions", "scene");
  if (!regions.is_array()) throw input_error("scene: regions must be a list");
  std::set<std::string> seen_ids;
  for (size_t ri = 0; ri < regions.size(); ++ri) {
    const std::string where = "region " + std::to_string(ri);
    const json& rj = regions[ri];
    if (!rj.is_object()) throw input_error(where + ": expected an object");
    region r;
    const json& id = require(rj, "id", where);
    if (!id.is_string() || !valid_region_id(id.get<std::string>())) {
      throw input_error(where + ": id must match [A-Za-z_][A-Za-z0-9_]*");
    }
    r.id = id.get<std::string>();
    if (!seen_ids.insert(r.id).second) {
      throw input_error(where + ": duplicate region id '" + r.id + "'");
    }
    r.g.dimension = sc.dimension;
    const json& terms = require(rj, "terms", where);
    if (!terms.is_array()) throw input_error(where + ": terms must be a list");
    for (size_t ti = 0; ti < terms.size(); ++ti) {
      const std::string twhere = where + " term " + std::to_string(ti);
      const json& tj = terms[ti];
      if (!tj.is_object()) throw input_error(twhere + ": expected an object");
      multi_term term;
      term.coeff =
          number_from_json(require(tj, "coeff", twhere), accept_floats,
                           twhere + " coeff");
      const json& exps = require(tj, "exponents", twhere);
      if (!exps.is_array() ||
          exps.size() != static_cast<size_t>(sc.dimension)) {
        throw input_error(twhere + ": exponents must list " +
                          std::to_string(sc.dimension) + " entries");
      }
      for (const json& e : exps) {
        if (!e.is_number_integer() || e.get<long long>() < 0) {
          throw input_error(twhere + ": exponents must be non-negative");
        }
        term.exponents.push_back(static_cast<unsigned>(e.get<long long>()));
      }
      r.g.terms.push_back(std::move(term));
    }
    r.g.normalize();
    sc.regions.push_back(std::move(r));
  }

  const json& path = require(doc, "path", "scene");
  if (!path.is_object()) throw input_error("scene: path must be an object");
  const json& segments = require(path, "segments", "path");
  if (!segments.is_array() || segments.empty()) {
    throw input_error("path: segments must be a non-empty list");
  }
  for (size_t si = 0; si < segments.size(); ++si) {
    const std::string where = "segment " + std::to_string(si);
    const json& sj = segments[si];
    if (!sj.is_array() || sj.size() != static_cast<size_t>(sc.dimension)) {
      throw input_error(where + ": expected " +
                        std::to_string(sc.dimension) +
                        " coordinate coefficient lists");
    }
    poly_vec rho(sc.dimension);
    for (int c = 0; c < sc.dimension; ++c) {
      const json& cj = sj[static_cast<size_t>(c)];
      if (!cj.is_array() || cj.empty()) {
        throw input_error(where + ": coordinate " + std::to_string(c) +
                          " must be a non-empty coefficient list "
                          "(constant term first)");
      }
      rat_poly p;
      for (size_t k = 0; k < cj.size(); ++k) {
        p.coeff.push_back(number_from_json(
            cj[k], accept_floats,
            where + " coordinate " + std::to_string(c) + " coefficient " +
                std::to_string(k)));
      }
      p.normalize();
      rho[static_cast<size_t>(c)] = std::move(p);
    }
    sc.segments.push_back(std::move(rho));
  }

  const json& suffix = require(doc, "suffix", "scene");
  if (!suffix.is_object()) throw input_error("scene: suffix must be object");
  const json& kind = require(suffix, "kind", "suffix");
  if (!kind.is_string()) throw input_error("suffix: kind must be a string");
  const std::string kind_name = kind.get<std::string>();
  if (kind_name == "invariant") {
    sc.suffix.kind = suffix_kind::invariant;
  } else if (kind_name == "cyclic") {
    sc.suffix.kind = suffix_kind::cyclic;
    const json& ls = require(suffix, "loop_start_segment", "suffix");
    if (!ls.is_number_integer() || ls.get<long long>() < 0 ||
        ls.get<long long>() >= static_cast<long long>(sc.segments.size())) {
      throw input_error("suffix: loop_start_segment out of range");
    }
    sc.suffix.loop_start_segment = static_cast<int>(ls.get<long long>());
  } else if (kind_name == "direct") {
    sc.suffix.kind = suffix_kind::direct;
    const auto it = suffix.find("reaches_endpoint");
    if (it != suffix.end()) {
      if (!it->is_boolean()) {
        throw input_error("suffix: reaches_endpoint must be a boolean");
      }
      sc.suffix.reaches_endpoint = it->get<bool>();
    }
  } else {
    throw input_error("suffix: kind must be invariant, cyclic, or direct");
  }

  // Continuity of consecutive segments, and loop closure for cycles.
  for (size_t k = 0; k + 1 < sc.segments.size(); ++k) {
    if (point_at(sc.segments[k], rational(1)) !=
        point_at(sc.segments[k + 1], rational(0))) {
      throw input_error("path segments " + std::to_string(k) + " and " +
                        std::to_string(k + 1) + " do not meet");
    }
  }
  if (sc.suffix.kind == suffix_kind::cyclic) {
    const size_t ls = static_cast<size_t>(sc.suffix.loop_start_segment);
    if (point_at(sc.segments.back(), rational(1)) !=
        point_at(sc.segments[ls], rational(0))) {
      throw input_error("cyclic suffix: loop does not close");
    }
  }
  return sc;
}

scene load_scene(const std::string& path, bool accept_floats) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str(), accept_floats);
}

std::string scene_to_json(const scene& sc) {
  ordered_json doc;
  doc["version"] = 1;
  doc["dimension"] = sc.dimension;
  doc["regions"] = ordered_json::array();
  for (const region& r : sc.regions) {
    ordered_json rj;
    rj["id"] = r.id;
    rj["terms"] = ordered_json::array();
    for (const multi_term& t : r.g.terms) {
      ordered_json tj;
      tj["coeff"] = format_rational(t.coeff);
      tj["exponents"] = t.exponents;
      rj["terms"].push_back(std::move(tj));
    }
    doc["regions"].push_back(std::move(rj));
  }
  doc["path"]["segments"] = ordered_json::array();
  for (const poly_vec& rho : sc.segments) {
    ordered_json sj = ordered_json::array();
    for (const rat_poly& p : rho) {
      ordered_json cj = ordered_json::array();
      if (p.is_zero()) {
        cj.push_back("0");
      } else {
        for (const rational& c : p.coeff) cj.push_back(format_rational(c));
      }
      sj.push_back(std::move(cj));
    }
    doc["path"]["segments"].push_back(std::move(sj));
  }
  ordered_json suf;
  switch (sc.suffix.kind) {
    case suffix_kind::invariant:
      suf["kind"] = "invariant";
      break;
    case suffix_kind::cyclic:
      suf["kind"] = "cyclic";
      suf["loop_start_segment"] = sc.suffix.loop_start_segment;
      break;
    case suffix_kind::direct:
      suf["kind"] = "direct";
      suf["reaches_endpoint"] = sc.suffix.reaches_endpoint;
      break;
  }
  doc["suffix"] = std::move(suf);
  return doc.dump(2) + "\n";
}

void save_scene(const scene& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write scene file '" + path + "'");
  out << scene_to_json(sc);
  if (!out) throw input_error("failed writing scene file '" + path + "'");
}

}  // namespace polytrace
