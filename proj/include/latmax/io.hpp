#pragma once

// JSON polytope files and machine-readable reports. Rationals are always
// written as strings "p" or "p/q"; object keys come out sorted.

#include "latmax/search.hpp"

#include "json.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace latmax {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

/// Malformed input file; the message names the offending line or field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolytopeFile {
  std::string name;
  RatPolytope polytope;
  Json metadata = Json::object();
};

template <class T, std::size_t N>
Json to_json(const Vec<T, N>& v) {
  Json out = Json::array();
  for (const auto& x : v.c) {
    if constexpr (std::is_same_v<T, Rat>)
      out.push_back(to_string(x));
    else
      out.push_back(std::to_string(x));
  }
  return out;
}

template <class T, std::size_t N>
Json vertices_json(const Polytope<T, N>& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back(to_json(v));
  return out;
}

/// Parses a polytope file. The polytope is the convex hull of the listed
/// points, so serializing it lists only its vertices in lexicographic order.
inline PolytopeFile parse_polytope_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("field '<root>': expected an object");
  PolytopeFile out;
  if (!doc.contains("name") || !doc["name"].is_string()) throw InputError("field 'name': expected a string");
  out.name = doc["name"].get<std::string>();
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw InputError("field 'metadata': expected an object");
    out.metadata = doc["metadata"];
  }
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "vertices" && key != "metadata") throw InputError("field '" + key + "': unknown field");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("field 'vertices': expected an array of coordinate triples");
  const auto& vs = doc["vertices"];
  if (vs.empty()) throw InputError("field 'vertices': at least one vertex is required");
  std::vector<Vec3<Rat>> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_array() || vs[i].size() != 3) throw InputError("field '" + where + "': expected 3 coordinates");
    Vec3<Rat> v;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (!vs[i][k].is_string()) throw InputError("field '" + at + "': expected a string \"p\" or \"p/q\"");
      try {
        v[k] = parse_rat(vs[i][k].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw InputError("field '" + at + "': " + e.what());
      }
    }
    pts.push_back(v);
  }
  try {
    out.polytope = RatPolytope::hull(std::move(pts));
  } catch (const std::exception& e) {
    throw InputError(std::string("field 'vertices': ") + e.what());
  }
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string serialize_polytope_file(const PolytopeFile& f) {
  Json j;
  j["name"] = f.name;
  j["vertices"] = vertices_json(f.polytope);
  j["metadata"] = f.metadata;
  return dump(j);
}

inline PolytopeFile make_polytope_file(std::string name, const IntPolytope& p, Json metadata = Json::object()) {
  return {std::move(name), to_rational(p), std::move(metadata)};
}

/// The report without its "timing" member, for comparisons across runs.
inline Json without_timing(Json report) {
  report.erase("timing");
  return report;
}

inline Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"subject", c.subject}, {"property", c.property}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

inline Json size_bounds_json(const SizeBounds& b) {
  return {{"volume", to_string(b.volume)},
          {"difference_body_volume", to_string(b.difference_volume)},
          {"first_minimum_exceeds_quarter", b.first_minimum_exceeds_quarter},
          {"lattice_diameter", b.lattice_diameter},
          {"hold", b.hold()}};
}

inline Json search_report_json(const SearchReport& r) {
  Json j;
  j["command"] = "search";
  j["version"] = kVersion;
  j["config"] = {{"ld", r.config.ld_values}, {"certificate_margin", r.config.certificate_margin}};
  for (Integer ld : r.config.ld_values) j["config"]["height_bounds"][std::to_string(ld)] = height_bound(ld);

  Json counts = Json::object();
  for (const auto& [ld, n] : r.apex_counts) counts[std::to_string(ld)] = n;
  Json records = Json::array();
  for (const auto& a : r.apexes)
    records.push_back({{"ld", a.candidate.ld},
                       {"apex", to_json(a.candidate.apex)},
                       {"pyramid_volume", to_string(a.pyramid_volume)},
                       {"homothety_factor", to_string(a.homothety)},
                       {"search_region_points", a.region_size},
                       {"candidate_vertices", a.candidate_count},
                       {"peak_family_size", a.peak_family},
                       {"survivors", a.survivors.size()}});
  j["apexes"] = {{"counts", counts}, {"total", r.apex_total}, {"records", records}};

  Json survivors = Json::array();
  for (const auto& s : r.survivors) {
    Json e;
    e["vertices"] = vertices_json(s.polytope);
    e["multiplicity"] = s.multiplicity;
    e["r_maximal"] = s.verdict.r_maximal;
    e["z_certificate"] = s.verdict.z_certificate ? to_json(*s.verdict.z_certificate) : Json();
    e["certificate_margin"] = s.verdict.window_used;
    e["size_bounds"] = size_bounds_json(s.bounds);
    e["class"] = s.class_index ? Json(*s.class_index) : Json();
    survivors.push_back(std::move(e));
  }
  j["survivors"] = survivors;

  Json classes = Json::array();
  for (const auto& c : r.classes) {
    const auto& p = c.representative;
    const auto lw = lattice_width_heuristic(p);
    classes.push_back({{"representative", vertices_json(p)},
                       {"representative_index", c.representative_index},
                       {"members", c.members},
                       {"volume", to_string(volume(p))},
                       {"facets", p.facets().size()},
                       {"lattice_diameter", lattice_diameter(p)},
                       {"lattice_width_upper_bound", to_string(lw.width)},
                       {"width_direction", to_json(lw.direction)}});
  }
  j["classes"] = classes;
  j["assertions"] = {{"uncertified_survivors_are_r_maximal", r.maximality_equivalence_holds},
                     {"size_bounds_hold", r.size_bounds_hold},
                     {"failures", r.failures}};
  j["ok"] = r.ok();
  j["timing"] = {{"jobs", r.config.parallelism},
                 {"apex_seconds", r.apex_seconds},
                 {"growth_seconds", r.growth_seconds},
                 {"assessment_seconds", r.assessment_seconds},
                 {"total_seconds", r.total_seconds}};
  return j;
}

struct CommandResult {
  Json report;
  bool ok = false;
};

/// Catalog suite: width-two catalog properties, their layer structure, and
/// the planar catalog.
inline CommandResult verify_catalogs_report() {
  CommandResult out;
  auto checks = verify_catalogs();
  Json slices = Json::object();
  for (const auto& e : width_two_catalog()) {
    auto r = slice_structure_check(e.polytope, e.normal_position);
    for (auto c : r.checks) {
      c.subject = e.name;
      checks.push_back(std::move(c));
    }
    slices[e.name] = {{"lower", vertices_json(r.lower)},
                      {"middle", vertices_json(r.middle)},
                      {"upper", vertices_json(r.upper)},
                      {"middle_class", r.middle_class}};
  }
  Json catalog = Json::object();
  for (const auto& e : width_two_catalog())
    catalog[e.name] = {{"vertices", vertices_json(e.polytope)},
                       {"facets", e.facet_label},
                       {"lattice_diameter", e.ld_label}};
  Json planar = Json::object();
  for (const auto& q : half_integral_catalog()) planar[q.name] = vertices_json(q.polygon);
  out.ok = all_passed(checks);
  out.report = {{"command", "verify"},
                {"mode", "catalog"},
                {"version", kVersion},
                {"width_two_catalog", catalog},
                {"planar_catalog", planar},
                {"unbounded_planar_class", kUnboundedPlanarClass},
                {"slices", slices},
                {"checks", checks_json(checks)},
                {"ok", out.ok}};
  return out;
}

/// Maximality analysis of a single polytope. For integral lattice-free
/// polytopes whose width upper bound is at least three the size bounds and
/// the certificate/R-maximality agreement are asserted.
inline CommandResult verify_file_report(const PolytopeFile& f, Integer margin = 2) {
  const auto& p = f.polytope;
  if (!p.full_dimensional()) throw InputError("field 'vertices': polytope is not full-dimensional");
  CommandResult out;
  Json j;
  j["command"] = "verify";
  j["mode"] = "file";
  j["version"] = kVersion;
  j["name"] = f.name;
  j["vertices"] = vertices_json(p);
  j["volume"] = to_string(volume(p));
  j["facets"] = p.facets().size();
  const bool integral = is_integral(p);
  j["integral"] = integral;
  const auto lw = lattice_width_heuristic(p);
  j["lattice_width_upper_bound"] = to_string(lw.width);
  j["width_direction"] = to_json(lw.direction);
  const bool free = is_lattice_free(p);
  j["lattice_free"] = free;
  std::vector<std::string> failures;
  if (free) {
    Json blocked = Json::array();
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
      auto b = facet_blocking_point(p, i);
      blocked.push_back(b ? to_json(*b) : Json());
    }
    j["facet_blocking_points"] = blocked;
    const bool r_max = is_r_maximal(p);
    const auto cert = z_nonmaximality_certificate(p, margin);
    j["r_maximal"] = r_max;
    j["z_certificate"] = cert ? to_json(*cert) : Json();
    j["certificate_margin"] = margin;
    if (integral && lw.width >= 3) {
      const auto ip = to_integral(p);
      const auto bounds = size_bounds(ip);
      j["size_bounds"] = size_bounds_json(bounds);
      if (!bounds.hold()) failures.push_back("size bounds violated");
      if (!cert && !r_max) failures.push_back("no Z-nonmaximality certificate but not R-maximal");
    }
  } else {
    j["interior_lattice_point"] = to_json(*interior_lattice_point(p));
  }
  if (integral) j["lattice_diameter"] = lattice_diameter(p);
  j["failures"] = failures;
  out.ok = failures.empty();
  j["ok"] = out.ok;
  out.report = std::move(j);
  return out;
}

inline CommandResult classify2d_report(Integer lo, Integer hi, Integer margin) {
  const auto r = brute_force_2d_oracle(lo, hi, margin);
  CommandResult out;
  Json classes = Json::array();
  std::set<std::string> names;
  bool all_matched = true;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const bool r_max = is_r_maximal_2d(r.classes[i]);
    classes.push_back({{"vertices", vertices_json(r.classes[i])},
                       {"matches", r.matched[i]},
                       {"r_maximal", r_max},
                       {"area", to_string(volume(r.classes[i]))}});
    all_matched = all_matched && !r.matched[i].empty() && r_max;
    names.insert(r.matched[i]);
  }
  out.ok = all_matched && r.classes.size() == half_integral_catalog().size() && names.size() == r.classes.size();
  out.report = {{"command", "classify2d"},
                {"version", kVersion},
                {"config", {{"window", {lo, hi}}, {"margin", margin}}},
                {"lattice_free_polygons", r.lattice_free_polygons},
                {"z_filter_survivors", r.z_filter_survivors},
                {"r_maximal", r.r_maximal},
                {"classes", classes},
                {"unbounded_class", kUnboundedPlanarClass},
                {"ok", out.ok}};
  return out;
}

}  // namespace latmax
