#pragma once

#include <cstdint>
#include <vector>

#include "model.hpp"
#include "stats.hpp"

namespace rdmecrit {

// One fixed-step Brownian-dynamics level: the relative coordinate takes
// independent Gaussian increments of standard deviation sqrt(2 D dt) per
// axis inside the square/cubic domain with the stationary molecule at the
// centre, and is absorbed where the separation first drops to rho (linear
// interpolation of the crossing inside the final step).
struct BdLevelSpec {
  PhysParams params;  // k_r must be +inf (absorbing-limit oracle)
  Boundary boundary = Boundary::Reflective;
  double dt = 0;
  std::int64_t first_sample = 0;  // absolute index of the first sample
  std::int64_t n_samples = 1;
  std::uint64_t seed = 0;
  int threads = 0;
  std::uint64_t step_budget = 10000000000ULL;
  bool fixed_start = false;
  double start[3] = {0, 0, 0};  // relative to the domain centre
};

// Trajectory i consumes only the random stream derived from (seed, i), so
// per-sample results do not depend on batching or the thread count. When
// per_sample is non-null it receives the individual first-passage times.
FptStats bd_run_level(const BdLevelSpec &spec,
                      std::vector<double> *per_sample = nullptr);

// Box-Muller increments drawn from the stream (seed, sample_index) and
// scaled by sigma; exposes the kernel's generator for statistical tests.
void bd_normal_increments(std::uint64_t seed, std::int64_t sample_index,
                          double sigma, std::int64_t count, double *out);

}  // namespace rdmecrit
