#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "xyzlab/arith.hpp"
#include "xyzlab/smooth.hpp"
#include "xyzlab/weight.hpp"

namespace xyzlab {

/// Exactly one of smoothness_bound / kappa must be set; kappa resolves to
/// y = floor((log H)^kappa).
struct SearchConfig {
  u64 height_bound = 0;
  std::optional<u64> smoothness_bound;
  std::optional<double> kappa;
  bool primitive_only = false;
  int threads = 0;  // 0 = auto
  Limits limits;
};

struct SearchReport {
  SearchConfig config;
  u64 resolved_y = 0;
  /// Canonical triples sorted by (z, x); filtered to primitive ones when
  /// config.primitive_only is set. Counts below always cover both classes.
  std::vector<Triple> triples;
  u64 count_all = 0;        // N(H, kappa), unordered convention
  u64 count_primitive = 0;  // N*(H, kappa)
  u64 observed_max_height = 0;  // max z over primitive solutions found
  double wall_time_s = 0;
};

/// All solutions x + y = z with x <= y < z <= H, every entry y-smooth,
/// found by membership-testing x + y against the smooth set.
SearchReport find_solutions(const SearchConfig& cfg);

/// One leaderboard row per smoothness value: the found triple minimizing
/// kappa0 (equivalently maximizing Q*) in its S-group.
struct ExtremalRow {
  u64 smoothness = 0;
  Triple best;
  double kappa0 = 0;
  double qstar = 0;
};
std::vector<ExtremalRow> extremal_by_smoothness(const SearchConfig& cfg);

/// Weighted count over ORDERED pairs (X, Y) of smooth solutions X + Y = Z:
/// sum of phi(X/x) phi(Y/x) phi(Z/x), optionally restricted to gcd(X, Y) = 1.
double weighted_count(u64 x, u64 y, const WeightFunction& phi, bool primitive_only);

struct DensityRatio {
  u64 count_all = 0;
  u64 count_primitive = 0;
  double empirical = 0;               // N*/N
  std::optional<double> conjectured;  // 1/zeta(2 - 3/kappa) for kappa > 3
  bool divergent = false;             // kappa <= 3: conjectured limit is 0
};
DensityRatio density_ratio(u64 H, double kappa, const Limits& limits = {});

/// Psi(H/2, y): the count of smooth multiples of (1,1,2) with height <= H.
u128 imprimitive_floor(u64 H, u64 y, const Limits& limits = {});

/// One JSON object per triple, sorted by (z, x); kappa fields are decimal
/// strings rounded to 6 places; null when H < 3. Byte-deterministic.
void write_jsonl(const SearchReport& report, std::ostream& out);

/// CSV columns S,x,y,z,kappa0,qstar sorted ascending by kappa0.
void write_leaderboard_csv(const std::vector<ExtremalRow>& rows, std::ostream& out);

}  // namespace xyzlab
