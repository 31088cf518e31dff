#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"
#include "stats.hpp"

namespace rdmecrit {

// Configuration of the continuous-space (Smoluchowski-side) oracle.
struct MicroConfig {
  PhysParams params;
  double dt = 0;
  std::int64_t n_samples = 1;
  std::uint64_t seed = 0;
  Boundary boundary = Boundary::Reflective;
  int threads = 0;
  std::uint64_t step_budget = 10000000000ULL;
  bool fixed_start = false;
  double start[3] = {0, 0, 0};  // relative to the domain centre
};

// Mean association time of the microscopic pair problem:
//   3D: L^3 / k_a (well-mixed; finite k_r enters through the conventional
//       rate constant)
//   2D: (L^2/(2 pi D)) (ln(L/(sqrt(pi) rho)) - 3/4), absorbing limit only
//       (the square mapped to the disk of equal area).
double tau_micro_analytic(const PhysParams &params);

// One Brownian-dynamics trajectory; returns the first time the separation
// drops to rho. Stream is a pure function of (seed, sample_index).
double bd_sample(const MicroConfig &config, std::int64_t sample_index);

struct BdLevel {
  double dt = 0;
  FptStats stats;
};

struct BdEstimate {
  std::vector<BdLevel> levels;
  double extrapolated = 0;     // linear-in-sqrt(dt) intercept
  double extrapolated_se = 0;  // propagated from per-level standard errors
  std::vector<std::string> warnings;
};

// Runs each dt level with common random numbers (the same per-sample
// streams), then extrapolates the level means linearly in sqrt(dt). Fixed
// time stepping overestimates first-passage times with an O(sqrt(dt)) bias,
// which the extrapolation removes to first order. Two or more levels,
// non-increasing; identical levels degenerate to the pooled mean.
BdEstimate bd_estimate(const MicroConfig &config,
                       const std::vector<double> &dt_levels);

}  // namespace rdmecrit
