#pragma once

// Exhaustive search for lattice-free integral polytopes of lattice width at
// least three in R^3. For each lattice diameter ℓ ∈ {1, 2, 3} a base triangle
// is fixed, every admissible apex spans a pyramid T, and all polytopes built
// from T and its candidate vertices are grown incrementally.

#include "latmax/classification.hpp"
#include "latmax/maximality.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace latmax {

/// Volume bound for lattice-free integral polytopes of lattice width >= 3.
inline const Rat kVolumeBound{27};
/// Bound on vol(P - P) for the same family.
inline const Rat kDifferenceVolumeBound{8 * 27};
/// vol(T - T) / vol(T) for every tetrahedron T.
inline constexpr Integer kSimplexDifferenceFactor = 20;

/// The base triangle in the plane x3 = 0 assumed to lie on the boundary of
/// every polytope with lattice diameter ℓ.
inline IntPolytope fixed_base(Integer ld) {
  switch (ld) {
    case 1: return IntPolytope::hull({{{-1, -1, 0}}, {{1, 0, 0}}, {{0, 1, 0}}});
    case 2: return IntPolytope::hull({{{0, 0, 0}}, {{2, 0, 0}}, {{0, 1, 0}}});
    case 3: return IntPolytope::hull({{{0, 0, 0}}, {{3, 0, 0}}, {{0, 1, 0}}});
    default: throw std::invalid_argument("lattice diameter must be 1, 2 or 3");
  }
}

/// Area of the base triangle, measured in its plane.
inline Rat base_area(Integer ld) {
  auto b = fixed_base(ld).vertices();
  auto n = cross(IntVec3(b[1] - b[0]), IntVec3(b[2] - b[0]));
  return Rat(std::abs(n[2]), 2);
}

/// Upper bound on the apex height: 12 for ℓ = 1 (double-pyramid argument),
/// otherwise ⌊3·vol(P-P)bound / (20·area(B))⌋.
inline Integer height_bound(Integer ld) {
  if (ld == 1) return 12;
  if (ld != 2 && ld != 3) throw std::invalid_argument("lattice diameter must be 1, 2 or 3");
  return floor_of(Rat(3 * kDifferenceVolumeBound / (kSimplexDifferenceFactor * base_area(ld))));
}

struct ApexCandidate {
  Integer ld = 0;
  IntVec3 apex{};
  IntPolytope pyramid;
};

/// The three pyramid filters: lattice-free, ld(T) = ℓ, λ₁(T - T) > 1/4.
inline bool pyramid_admissible(const IntPolytope& t, Integer ld) {
  return t.full_dimensional() && is_lattice_free(t) && lattice_diameter(t) == ld &&
         first_minimum_exceeds_quarter(difference_body(t));
}

/// All apexes a = (a1, a2, h), 3 <= h <= height_bound(ℓ), 0 <= a1, a2 <= h - 1,
/// whose pyramid conv(B ∪ {a}) passes the three filters.
inline std::vector<ApexCandidate> enumerate_apexes(Integer ld) {
  const auto base = fixed_base(ld).vertices();
  std::vector<ApexCandidate> out;
  for (Integer h = 3; h <= height_bound(ld); ++h)
    for (Integer a1 = 0; a1 < h; ++a1)
      for (Integer a2 = 0; a2 < h; ++a2) {
        std::vector<IntVec3> pts = base;
        IntVec3 a{{a1, a2, h}};
        pts.push_back(a);
        auto t = IntPolytope::hull(pts);
        if (pyramid_admissible(t, ld)) out.push_back({ld, a, std::move(t)});
      }
  return out;
}

/// λ = 4·(bound / vol(T) - 1) + 1.
inline Rat homothety_factor(const Rat& pyramid_volume, const Rat& bound = kVolumeBound) {
  return 4 * (bound / pyramid_volume - 1) + 1;
}

/// Integer points of (λ·T + (1-λ)·c) ∩ {0 <= x3 <= h}, c the vertex barycenter of T.
inline std::vector<IntVec3> search_region(const IntPolytope& t) {
  if (!t.full_dimensional() || t.vertices().size() != 4)
    throw std::invalid_argument("search region requires a tetrahedron");
  const Rat lambda = homothety_factor(volume(t));
  Vec3<Rat> c{};
  Integer h = 0;
  for (const auto& v : t.vertices()) {
    c = c + convert<Rat>(v);
    h = std::max(h, v[2]);
  }
  c = Rat(1, 4) * c;
  LatticeRegion<3> r;
  for (const auto& f : t.facets()) {
    Rat bound = lambda * Rat(f.offset) + (1 - lambda) * dot(f.normal, c);
    r.constraints.push_back({f.normal, floor_of(bound)});
  }
  r.constraints.push_back({{{0, 0, -1}}, 0});
  r.constraints.push_back({{{0, 0, 1}}, h});
  for (std::size_t i = 0; i < 3; ++i) {
    Rat lo, hi;
    bool first = true;
    for (const auto& v : t.vertices()) {
      Rat x = lambda * Rat(v[i]) + (1 - lambda) * c[i];
      if (first || x < lo) lo = x;
      if (first || x > hi) hi = x;
      first = false;
    }
    r.lo[i] = ceil_of(lo);
    r.hi[i] = floor_of(hi);
  }
  r.lo[2] = std::max<Integer>(r.lo[2], 0);
  r.hi[2] = std::min(r.hi[2], h);
  r.empty = r.lo[2] > r.hi[2];
  return collect_points(r);
}

/// Candidate order: |x2| descending, then lexicographic.
inline bool candidate_before(const IntVec3& a, const IntVec3& b) {
  if (std::abs(a[1]) != std::abs(b[1])) return std::abs(a[1]) > std::abs(b[1]);
  return a < b;
}

/// Region points v ∉ V(T) with conv(T ∪ {v}) lattice-free and of lattice diameter ℓ.
inline std::vector<IntVec3> candidate_vertices(const IntPolytope& t, Integer ld, const std::vector<IntVec3>& region) {
  std::vector<IntVec3> out;
  std::vector<IntVec3> pts = t.vertices();
  pts.push_back({});
  for (const auto& v : region) {
    if (std::binary_search(t.vertices().begin(), t.vertices().end(), v)) continue;
    pts.back() = v;
    auto q = IntPolytope::hull(pts);
    if (is_lattice_free(q) && lattice_diameter(q) == ld) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), candidate_before);
  return out;
}

inline std::vector<IntVec3> candidate_vertices(const IntPolytope& t, Integer ld) {
  return candidate_vertices(t, ld, search_region(t));
}

struct GrowthResult {
  std::vector<IntPolytope> polytopes;  ///< the final family, sorted
  std::size_t peak_family = 0;         ///< largest intermediate family size
};

struct PolytopeKeyHash {
  std::size_t operator()(const std::vector<IntVec3>& vs) const {
    std::size_t h = vs.size();
    for (const auto& v : vs) h = h * 0x9e3779b97f4a7c15ULL ^ IntVecHash{}(v);
    return h;
  }
};

/// X_0 = {T}; X_i keeps the members of X_{i-1} and the hulls conv(P' ∪ {v_i})
/// that are lattice-free with lattice diameter ℓ, provided that adding all of
/// v_{i+1}, ..., v_k could still reach lattice width three. Returns X_k.
inline GrowthResult grow_polytopes(const IntPolytope& t, const std::vector<IntVec3>& candidates, Integer ld,
                                   const IntVec3& apex) {
  const auto dirs = width_test_directions(apex);
  const std::size_t k = candidates.size(), nd = dirs.size();
  // Suffix extremes of <d, v_j> over j >= i for every test direction d.
  std::vector<Integer> suf_lo((k + 1) * nd), suf_hi((k + 1) * nd);
  constexpr Integer inf = std::numeric_limits<Integer>::max() / 4;
  for (std::size_t d = 0; d < nd; ++d) {
    suf_lo[k * nd + d] = inf;
    suf_hi[k * nd + d] = -inf;
  }
  for (std::size_t i = k; i-- > 0;)
    for (std::size_t d = 0; d < nd; ++d) {
      const Integer s = dot(dirs[d], candidates[i]);
      suf_lo[i * nd + d] = std::min(suf_lo[(i + 1) * nd + d], s);
      suf_hi[i * nd + d] = std::max(suf_hi[(i + 1) * nd + d], s);
    }
  auto can_reach_width_three = [&](const IntPolytope& p, std::size_t from) {
    for (std::size_t d = 0; d < nd; ++d) {
      Integer lo = suf_lo[from * nd + d], hi = suf_hi[from * nd + d];
      for (const auto& v : p.vertices()) {
        const Integer s = dot(dirs[d], v);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      if (hi - lo < 3) return false;
    }
    return true;
  };

  GrowthResult result;
  std::vector<IntPolytope> family;
  if (can_reach_width_three(t, 0)) family.push_back(t);
  result.peak_family = family.size();
  for (std::size_t i = 0; i < k && !family.empty(); ++i) {
    std::unordered_map<std::vector<IntVec3>, IntPolytope, PolytopeKeyHash> next;
    for (const auto& prev : family) {
      if (can_reach_width_three(prev, i + 1)) next.emplace(prev.vertices(), prev);
      if (prev.contains(candidates[i])) continue;
      std::vector<IntVec3> pts = prev.vertices();
      pts.push_back(candidates[i]);
      auto grown = IntPolytope::hull(std::move(pts));
      if (next.count(grown.vertices())) continue;
      if (!can_reach_width_three(grown, i + 1)) continue;
      if (!is_lattice_free(grown) || lattice_diameter(grown) != ld) continue;
      next.emplace(grown.vertices(), std::move(grown));
    }
    family.clear();
    family.reserve(next.size());
    for (auto& [key, poly] : next) family.push_back(std::move(poly));
    result.peak_family = std::max(result.peak_family, family.size());
  }
  std::sort(family.begin(), family.end());
  result.polytopes = std::move(family);
  return result;
}

// ---------------------------------------------------------------------------
// Full pipeline.

struct SearchConfig {
  std::vector<Integer> ld_values{1, 2, 3};
  Integer certificate_margin = 2;
  unsigned parallelism = 1;
  std::string output_path;
};

/// Size bounds every lattice-free integral polytope of lattice width >= 3 obeys.
struct SizeBounds {
  Rat volume;
  Rat difference_volume;
  bool first_minimum_exceeds_quarter = false;
  Integer lattice_diameter = 0;

  bool hold() const {
    return volume <= kVolumeBound && difference_volume <= kDifferenceVolumeBound && first_minimum_exceeds_quarter &&
           lattice_diameter <= 3;
  }
};

inline SizeBounds size_bounds(const IntPolytope& p) {
  auto diff = difference_body(p);
  return {volume(p), volume(diff), first_minimum_exceeds_quarter(diff), lattice_diameter(p)};
}

struct ApexRecord {
  ApexCandidate candidate;
  Rat pyramid_volume;
  Rat homothety;
  std::size_t region_size = 0;
  std::size_t candidate_count = 0;
  std::size_t peak_family = 0;
  std::vector<IntPolytope> survivors;
};

struct SurvivorRecord {
  IntPolytope polytope;
  MaximalityVerdict<3> verdict;
  SizeBounds bounds;
  std::size_t multiplicity = 0;           ///< number of apexes that produced it
  std::optional<std::size_t> class_index; ///< set for potentially Z-maximal survivors
};

struct SearchReport {
  SearchConfig config;
  std::map<Integer, std::size_t> apex_counts;
  std::size_t apex_total = 0;
  std::vector<ApexRecord> apexes;
  std::vector<SurvivorRecord> survivors;
  std::vector<EquivalenceClass<3>> classes;
  /// Every survivor without a Z-nonmaximality certificate is R^3-maximal.
  bool maximality_equivalence_holds = true;
  bool size_bounds_hold = true;
  std::vector<std::string> failures;
  double apex_seconds = 0, growth_seconds = 0, assessment_seconds = 0, total_seconds = 0;

  bool ok() const { return failures.empty(); }
};

namespace detail {

template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job&& job) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

inline ApexRecord process_apex(const ApexCandidate& apex) {
  ApexRecord rec;
  rec.candidate = apex;
  rec.pyramid_volume = volume(apex.pyramid);
  rec.homothety = homothety_factor(rec.pyramid_volume);
  auto region = search_region(apex.pyramid);
  rec.region_size = region.size();
  auto cands = candidate_vertices(apex.pyramid, apex.ld, region);
  rec.candidate_count = cands.size();
  auto grown = grow_polytopes(apex.pyramid, cands, apex.ld, apex.apex);
  rec.peak_family = grown.peak_family;
  rec.survivors = std::move(grown.polytopes);
  return rec;
}

inline SearchReport run_search(const SearchConfig& cfg) {
  using clock = std::chrono::steady_clock;
  auto seconds_since = [](clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
  };
  if (cfg.ld_values.empty()) throw std::invalid_argument("no lattice diameters selected");
  const auto t_start = clock::now();
  SearchReport report;
  report.config = cfg;

  std::vector<Integer> lds = cfg.ld_values;
  std::sort(lds.begin(), lds.end());
  lds.erase(std::unique(lds.begin(), lds.end()), lds.end());
  std::vector<ApexCandidate> apexes;
  for (Integer ld : lds) {
    auto found = enumerate_apexes(ld);
    report.apex_counts[ld] = found.size();
    apexes.insert(apexes.end(), found.begin(), found.end());
  }
  report.apex_total = apexes.size();
  report.apex_seconds = seconds_since(t_start);

  const auto t_grow = clock::now();
  report.apexes.resize(apexes.size());
  detail::parallel_for(apexes.size(), cfg.parallelism,
                       [&](std::size_t i) { report.apexes[i] = process_apex(apexes[i]); });
  report.growth_seconds = seconds_since(t_grow);

  // Identical polytopes from different apexes are merged here, not earlier.
  const auto t_assess = clock::now();
  std::map<IntPolytope, std::size_t> multiplicity;
  for (const auto& rec : report.apexes)
    for (const auto& p : rec.survivors) ++multiplicity[p];
  report.survivors.resize(multiplicity.size());
  std::vector<const IntPolytope*> unique;
  for (const auto& [p, m] : multiplicity) unique.push_back(&p);
  detail::parallel_for(unique.size(), cfg.parallelism, [&](std::size_t i) {
    auto& s = report.survivors[i];
    s.polytope = *unique[i];
    s.multiplicity = multiplicity.at(*unique[i]);
    s.bounds = size_bounds(s.polytope);
    s.verdict.window_used = cfg.certificate_margin;
    s.verdict.z_certificate = z_nonmaximality_certificate(s.polytope, cfg.certificate_margin);
    s.verdict.r_maximal = is_r_maximal(s.polytope);
  });

  std::vector<IntPolytope> maximal;
  std::vector<std::size_t> maximal_index;
  for (std::size_t i = 0; i < report.survivors.size(); ++i) {
    auto& s = report.survivors[i];
    if (!s.bounds.hold()) {
      report.size_bounds_hold = false;
      report.failures.push_back("size bounds violated by survivor #" + std::to_string(i));
    }
    if (s.verdict.z_certificate) continue;
    if (!s.verdict.r_maximal) {
      report.maximality_equivalence_holds = false;
      report.failures.push_back("survivor #" + std::to_string(i) +
                                " has no Z-nonmaximality certificate but is not R-maximal");
    }
    maximal.push_back(s.polytope);
    maximal_index.push_back(i);
  }
  report.classes = dedup_classes(maximal);
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    for (auto& m : report.classes[c].members) {
      m = maximal_index[m];
      report.survivors[m].class_index = c;
    }
    report.classes[c].representative_index = maximal_index[report.classes[c].representative_index];
  }
  report.assessment_seconds = seconds_since(t_assess);
  report.total_seconds = seconds_since(t_start);
  return report;
}

}  // namespace latmax
