#include "micro.hpp"

#include <cmath>
#include <string>

#include "bd_kernel.hpp"
#include "errors.hpp"
#include "rates.hpp"

namespace rdmecrit {

double tau_micro_analytic(const PhysParams &params) {
  if (params.dim == 3) {
    const double ka = conventional_ka(params);
    return params.L * params.L * params.L / ka;
  }
  require(std::isinf(params.k_r), RDMEC_ERR_UNSUPPORTED,
          "the 2D mean association time is implemented for the absorbing "
          "limit only (k_r = inf)");
  const double L = params.L;
  return L * L / (2.0 * M_PI * params.D) *
         (std::log(L / (std::sqrt(M_PI) * params.rho)) - 0.75);
}

namespace {

BdLevelSpec level_spec(const MicroConfig &c, double dt) {
  BdLevelSpec s;
  s.params = c.params;
  s.boundary = c.boundary;
  s.dt = dt;
  s.n_samples = c.n_samples;
  s.seed = c.seed;
  s.threads = c.threads;
  s.step_budget = c.step_budget;
  s.fixed_start = c.fixed_start;
  for (int a = 0; a < 3; ++a) s.start[a] = c.start[a];
  return s;
}

}  // namespace

double bd_sample(const MicroConfig &config, std::int64_t sample_index) {
  require(config.dt > 0, RDMEC_ERR_INVALID_ARGUMENT, "dt must be positive");
  require(sample_index >= 0, RDMEC_ERR_INVALID_ARGUMENT,
          "sample index must be >= 0");
  // Streams are keyed by absolute sample index, so a one-sample run over
  // [index, index + 1) reproduces bit for bit what a batched run records
  // for the same index.
  BdLevelSpec s = level_spec(config, config.dt);
  s.first_sample = sample_index;
  s.n_samples = 1;
  return bd_run_level(s).mean;
}

BdEstimate bd_estimate(const MicroConfig &config,
                       const std::vector<double> &dt_levels) {
  require(dt_levels.size() >= 2, RDMEC_ERR_INVALID_ARGUMENT,
          "need at least two dt levels");
  for (std::size_t i = 0; i < dt_levels.size(); ++i) {
    require(dt_levels[i] > 0, RDMEC_ERR_INVALID_ARGUMENT,
            "dt levels must be positive");
    if (i > 0)
      require(dt_levels[i] <= dt_levels[i - 1], RDMEC_ERR_INVALID_ARGUMENT,
              "dt levels must be non-increasing");
  }
  require(config.n_samples >= 1, RDMEC_ERR_INVALID_ARGUMENT,
          "n_samples must be >= 1");

  BdEstimate est;
  const double sig_max =
      std::sqrt(2.0 * config.params.dim * config.params.D * dt_levels.front());
  if (sig_max > config.params.rho / 5.0)
    est.warnings.push_back(
        "coarsest dt gives rms step " + std::to_string(sig_max) +
        " m > rho/5; the sqrt(dt) bias model degrades at this resolution");

  for (double dt : dt_levels) {
    BdLevel lv;
    lv.dt = dt;
    lv.stats = bd_run_level(level_spec(config, dt));
    est.levels.push_back(lv);
  }

  // Least-squares line mean(dt) = a + b sqrt(dt); a is the estimate.
  const std::size_t m = est.levels.size();
  double x_min = std::sqrt(est.levels.front().dt);
  double x_max = x_min;
  double xbar = 0, ybar = 0;
  for (const BdLevel &lv : est.levels) {
    const double x = std::sqrt(lv.dt);
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    xbar += x;
    ybar += lv.stats.mean;
  }
  xbar /= static_cast<double>(m);
  ybar /= static_cast<double>(m);

  if (x_max - x_min <= 1e-12 * x_max) {
    // degenerate spacing: pooled mean (equal sample counts per level)
    est.extrapolated = ybar;
    double var = 0;
    for (const BdLevel &lv : est.levels) var += lv.stats.se * lv.stats.se;
    est.extrapolated_se = std::sqrt(var) / static_cast<double>(m);
    return est;
  }

  double sxx = 0, sxy = 0;
  for (const BdLevel &lv : est.levels) {
    const double dx = std::sqrt(lv.dt) - xbar;
    sxx += dx * dx;
    sxy += dx * (lv.stats.mean - ybar);
  }
  const double slope = sxy / sxx;
  est.extrapolated = ybar - slope * xbar;
  double var = 0;
  for (const BdLevel &lv : est.levels) {
    const double x = std::sqrt(lv.dt);
    const double c = 1.0 / static_cast<double>(m) - xbar * (x - xbar) / sxx;
    var += c * c * lv.stats.se * lv.stats.se;
  }
  est.extrapolated_se = std::sqrt(var);
  return est;
}

}  // namespace rdmecrit
