#pragma once

#include <cstdint>

#include "model.hpp"
#include "stats.hpp"

namespace rdmecrit {

enum class StartDist { UniformAllVoxels, UniformExcludingTarget, FixedVoxel };

struct SsaConfig {
  LatticeSpec lattice;
  double D = 0;
  double k_meso = 0;  // 1/s; +inf reacts on first co-location
  std::int64_t n_samples = 1;
  std::uint64_t seed = 0;
  StartDist start = StartDist::UniformAllVoxels;
  std::int64_t start_voxel = 0;
  std::uint64_t step_budget = 10000000000ULL;  // events per trajectory
  int threads = 0;                             // 0 = hardware
};

// One exact trajectory of the continuous-time pair process; returns the
// reaction time. The trajectory's random stream is a pure function of
// (seed, sample_index).
double simulate_pair(const Lattice &lattice, const SsaConfig &config,
                     std::int64_t sample_index);

// n_samples independent trajectories, aggregated in sample order so the
// result is identical for any thread count.
FptStats estimate(const SsaConfig &config);

}  // namespace rdmecrit
