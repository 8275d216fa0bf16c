#include "xyzlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "xyzlab/parallel.hpp"
#include "xyzlab/series.hpp"

namespace xyzlab {

namespace {

u64 resolve_y(const SearchConfig& cfg) {
  if (cfg.smoothness_bound.has_value() == cfg.kappa.has_value())
    throw InvalidInput("exactly one of smoothness bound / kappa must be given");
  if (cfg.smoothness_bound) return *cfg.smoothness_bound;
  if (cfg.height_bound < 3) throw InvalidInput("kappa form needs H >= 3");
  double y = std::floor(std::pow(std::log(double(cfg.height_bound)), *cfg.kappa));
  if (!(y >= 2)) throw InvalidInput("(log H)^kappa is below 2; no primes available");
  if (y >= 1e18) throw TooLarge("(log H)^kappa out of range");
  return u64(y);
}

struct RawSolution {
  u64 x, y, z;
  bool primitive;
  friend bool operator<(const RawSolution& a, const RawSolution& b) {
    return a.z != b.z ? a.z < b.z : a.x < b.x;
  }
};

}  // namespace

SearchReport find_solutions(const SearchConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.height_bound < 2) throw InvalidInput("find_solutions: H must be >= 2");
  SearchReport rep;
  rep.config = cfg;
  rep.resolved_y = resolve_y(cfg);

  SmoothSet s = enumerate_smooth(cfg.height_bound, rep.resolved_y, cfg.limits);
  const std::vector<u64>& m = s.members;
  std::unordered_set<u64> member_set(m.begin(), m.end());
  member_set.max_load_factor(0.5);

  const u64 H = cfg.height_bound;
  int threads = resolve_threads(cfg.threads);
  std::mutex merge_mutex;
  std::vector<RawSolution> found;
  u64 n_all = 0, n_prim = 0;

  parallel_chunks(m.size(), 64, threads, [&](u64 lo, u64 hi) {
    std::vector<RawSolution> local;
    u64 local_all = 0, local_prim = 0;
    for (u64 i = lo; i < hi; ++i) {
      const u64 a = m[i];
      if (a > H - a) break;  // a + m[j] >= 2a > H for all j >= i
      for (u64 j = i; j < m.size(); ++j) {
        const u64 z = a + m[j];
        if (z > H) break;
        if (!member_set.count(z)) continue;
        bool prim = std::gcd(a, m[j]) == 1;
        ++local_all;
        if (prim) ++local_prim;
        local.push_back({a, m[j], z, prim});
      }
    }
    std::lock_guard<std::mutex> lk(merge_mutex);
    n_all += local_all;
    n_prim += local_prim;
    found.insert(found.end(), local.begin(), local.end());
  });

  std::sort(found.begin(), found.end());
  rep.count_all = n_all;
  rep.count_primitive = n_prim;
  for (const RawSolution& r : found)
    if (r.primitive) rep.observed_max_height = std::max(rep.observed_max_height, r.z);

  auto table = primes_upto(rep.resolved_y);
  rep.triples.reserve(found.size());
  for (const RawSolution& r : found) {
    if (cfg.primitive_only && !r.primitive) continue;
    rep.triples.push_back(triple_from_parts(r.x, r.y, r.z, table.primes));
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<ExtremalRow> extremal_by_smoothness(const SearchConfig& cfg) {
  SearchReport rep = find_solutions(cfg);
  std::map<u64, ExtremalRow> best;
  for (const Triple& t : rep.triples) {
    if (t.z < 3) continue;  // kappa0 undefined for (1,1,2)
    TripleMetrics m = metrics(t);
    u64 S = u64(m.smoothness);
    auto it = best.find(S);
    if (it == best.end() || m.kappa0 < it->second.kappa0) {
      best[S] = ExtremalRow{S, t, m.kappa0, m.qstar};
    }
  }
  std::vector<ExtremalRow> rows;
  rows.reserve(best.size());
  for (auto& [S, row] : best) rows.push_back(row);
  return rows;
}

double weighted_count(u64 x, u64 y, const WeightFunction& phi, bool primitive_only) {
  SmoothSet s = enumerate_smooth(x, y);
  const std::vector<u64>& m = s.members;
  std::unordered_set<u64> member_set(m.begin(), m.end());
  double acc = 0;
  // ordered pairs (X, Y); the weight support keeps X, Y, Z <= x
  for (u64 i = 0; i < m.size(); ++i) {
    double w1 = phi(double(m[i]) / double(x));
    if (w1 == 0) continue;
    for (u64 j = 0; j < m.size(); ++j) {
      u64 z = m[i] + m[j];
      if (z > x) break;  // members ascend, so the sum only grows
      double w2 = phi(double(m[j]) / double(x));
      if (w2 == 0) continue;
      if (!member_set.count(z)) continue;
      if (primitive_only && std::gcd(m[i], m[j]) != 1) continue;
      acc += w1 * w2 * phi(double(z) / double(x));
    }
  }
  return acc;
}

DensityRatio density_ratio(u64 H, double kappa, const Limits& limits) {
  SearchConfig cfg;
  cfg.height_bound = H;
  cfg.kappa = kappa;
  cfg.primitive_only = false;
  cfg.limits = limits;
  SearchReport rep = find_solutions(cfg);

  DensityRatio out;
  out.count_all = rep.count_all;
  out.count_primitive = rep.count_primitive;
  out.empirical = rep.count_all == 0 ? 0.0 : double(rep.count_primitive) / double(rep.count_all);
  if (kappa > 3.0) {
    out.conjectured = 1.0 / zeta_real(2.0 - 3.0 / kappa);
  } else {
    out.divergent = true;  // conjectured limit 0 for 1 < kappa <= 3
  }
  return out;
}

u128 imprimitive_floor(u64 H, u64 y, const Limits& limits) {
  return psi_exact(H / 2, y, limits);
}

// ---------------------------------------------------------------------------
// report writers (byte-deterministic)

namespace {

void append_metric_field(std::string& line, const char* name, double v, bool defined) {
  char buf[64];
  if (defined) {
    std::snprintf(buf, sizeof buf, "\"%s\":\"%.6f\"", name, v);
  } else {
    std::snprintf(buf, sizeof buf, "\"%s\":null", name);
  }
  line += buf;
}

}  // namespace

void write_jsonl(const SearchReport& report, std::ostream& out) {
  for (const Triple& t : report.triples) {
    double k0 = 0, k1 = 0, qs = 0;
    u128 S = 0, R = 0;
    bool defined = t.z >= 3;
    if (defined) {
      TripleMetrics m = metrics(t);
      k0 = m.kappa0;
      k1 = m.kappa1;
      qs = m.qstar;
      S = m.smoothness;
      R = m.radical;
    } else {
      R = radical(t);
      for (const Factorization* f : {&t.fx, &t.fy, &t.fz})
        S = std::max(S, f->largest_prime());
      k1 = log_u128(R) / log_u128(t.z);  // kappa1 survives below H = 3
    }
    std::string line = "{";
    line += "\"x\":" + to_string(t.x) + ",\"y\":" + to_string(t.y) + ",\"z\":" + to_string(t.z);
    line += ",\"S\":" + to_string(S) + ",\"H\":" + to_string(t.z) + ",\"R\":" + to_string(R) + ",";
    append_metric_field(line, "kappa0", k0, defined);
    line += ",";
    append_metric_field(line, "kappa1", k1, true);
    line += ",";
    append_metric_field(line, "qstar", qs, defined);
    line += std::string(",\"primitive\":") + (t.primitive ? "true" : "false") + "}\n";
    out << line;
  }
}

void write_leaderboard_csv(const std::vector<ExtremalRow>& rows, std::ostream& out) {
  std::vector<ExtremalRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(), [](const ExtremalRow& a, const ExtremalRow& b) {
    if (a.kappa0 != b.kappa0) return a.kappa0 < b.kappa0;
    return a.smoothness < b.smoothness;
  });
  out << "S,x,y,z,kappa0,qstar\n";
  for (const ExtremalRow& r : sorted) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f\n", r.kappa0, r.qstar);
    out << r.smoothness << ',' << to_string(r.best.x) << ',' << to_string(r.best.y) << ','
        << to_string(r.best.z) << buf;
  }
}

}  // namespace xyzlab
