#include "fpt_mc.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace rdmecrit {

namespace {

void validate(const SsaConfig &c, const Lattice &lattice) {
  require(c.n_samples >= 1, RDMEC_ERR_INVALID_ARGUMENT,
          "n_samples must be >= 1");
  require(c.k_meso > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "k_meso must be positive (may be +inf)");
  require(std::isfinite(c.D) && c.D > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "diffusion constant must be positive");
  if (c.start == StartDist::FixedVoxel)
    require(c.start_voxel >= 0 && c.start_voxel < lattice.voxels(),
            RDMEC_ERR_INVALID_ARGUMENT, "start voxel out of range");
}

std::int64_t draw_start(const SsaConfig &c, const Lattice &lattice, Rng &rng) {
  switch (c.start) {
    case StartDist::FixedVoxel:
      return c.start_voxel;
    case StartDist::UniformAllVoxels:
      return static_cast<std::int64_t>(
          rng.below(static_cast<std::uint64_t>(lattice.voxels())));
    case StartDist::UniformExcludingTarget:
    default: {
      std::int64_t v;
      do {
        v = static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(lattice.voxels())));
      } while (v == lattice.target());
      return v;
    }
  }
}

}  // namespace

double simulate_pair(const Lattice &lattice, const SsaConfig &config,
                     std::int64_t sample_index) {
  Rng rng(config.seed, static_cast<std::uint64_t>(sample_index));
  const double tau_jump = total_jump_rate(lattice.spec(), config.D);
  const int ndir = lattice.directions();
  const std::int64_t target = lattice.target();
  const double k = config.k_meso;
  const bool absorbing = std::isinf(k);
  const double p_react = absorbing ? 1.0 : k / (k + tau_jump);
  const double rate_at_target = absorbing ? tau_jump : tau_jump + k;

  std::int64_t pos = draw_start(config, lattice, rng);
  double t = 0;
  std::uint64_t events = 0;

  for (;;) {
    if (pos == target) {
      if (absorbing) return t;
      t += rng.exponential(rate_at_target);
      if (rng.u01() <= p_react) return t;
      pos = lattice.neighbor(pos, static_cast<int>(rng.below(ndir)));
    } else {
      t += rng.exponential(tau_jump);
      pos = lattice.neighbor(pos, static_cast<int>(rng.below(ndir)));
    }
    if (++events > config.step_budget)
      fail(RDMEC_ERR_STEP_BUDGET,
           "trajectory exceeded its event budget of " +
               std::to_string(config.step_budget));
  }
}

FptStats estimate(const SsaConfig &config) {
  const Lattice lattice(config.lattice);
  validate(config, lattice);

  std::vector<double> times(static_cast<std::size_t>(config.n_samples));
  std::atomic<std::int64_t> first_failure{config.n_samples};
  parallel_for(config.n_samples, config.threads,
               [&](std::int64_t begin, std::int64_t end) {
                 for (std::int64_t i = begin; i < end; ++i) {
                   try {
                     times[static_cast<std::size_t>(i)] =
                         simulate_pair(lattice, config, i);
                   } catch (const Error &) {
                     std::int64_t cur = first_failure.load();
                     while (i < cur &&
                            !first_failure.compare_exchange_weak(cur, i)) {
                     }
                     return;
                   }
                 }
               });
  const std::int64_t failed = first_failure.load();
  if (failed < config.n_samples)
    fail(RDMEC_ERR_STEP_BUDGET,
         "sample " + std::to_string(failed) +
             " exceeded the per-trajectory event budget");
  return summarize(times);
}

}  // namespace rdmecrit
