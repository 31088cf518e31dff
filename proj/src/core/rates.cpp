#include "rates.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "fpt_exact.hpp"

namespace rdmecrit {

namespace {
constexpr double kEcBeta = 0.25272;  // valid for L >> h
constexpr double kMontroll3d = 1.5164;
constexpr double kInf = std::numeric_limits<double>::infinity();

double contact_radius_of_voxel(const PhysParams &params, double h) {
  // radius of the disk with area h^2 (2D) / sphere with volume h^3 (3D)
  if (params.dim == 2) return h / std::sqrt(M_PI);
  return std::cbrt(3.0 * h * h * h / (4.0 * M_PI));
}
}  // namespace

const char *rate_model_name(RateModel m) {
  switch (m) {
    case RateModel::Conventional: return "conventional";
    case RateModel::ErbanChapman: return "erban_chapman";
    case RateModel::Fange: return "fange";
    case RateModel::MatchedAsym: return "matched_asym";
    case RateModel::MatchedExact: return "matched_exact";
  }
  return "?";
}

RateModel rate_model_from_name(const std::string &name) {
  for (RateModel m :
       {RateModel::Conventional, RateModel::ErbanChapman, RateModel::Fange,
        RateModel::MatchedAsym, RateModel::MatchedExact})
    if (name == rate_model_name(m)) return m;
  fail(RDMEC_ERR_CONFIG, "unknown rate model '" + name + "'");
}

bool rate_model_valid_for_dim(RateModel m, int dim) {
  if (dim == 2)
    return m == RateModel::Fange || m == RateModel::MatchedAsym ||
           m == RateModel::MatchedExact;
  return true;
}

double conventional_ka(const PhysParams &params) {
  require(params.dim == 3, RDMEC_ERR_UNSUPPORTED,
          "the conventional rate constant has no 2D analogue");
  const double smol = 4.0 * M_PI * params.rho * params.D;
  if (std::isinf(params.k_r)) return smol;
  return smol * params.k_r / (smol + params.k_r);
}

double erban_chapman_h_crit(const PhysParams &params) {
  return kEcBeta * conventional_ka(params) / params.D;
}

double erban_chapman_q(const PhysParams &params, double h) {
  require(std::isfinite(h) && h > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "voxel size must be positive");
  const double ka = conventional_ka(params);
  if (h <= erban_chapman_h_crit(params)) return kInf;
  return params.D * ka / (params.D * h * h * h - kEcBeta * ka * h * h);
}

double fange_h_min(const PhysParams &params) {
  // beta = 1 <=> rho+l = rho
  if (params.dim == 2) return std::sqrt(M_PI) * params.rho;
  return std::cbrt(4.0 * M_PI / 3.0) * params.rho;
}

double fange_p(const PhysParams &params, double h) {
  require(std::isfinite(h) && h > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "voxel size must be positive");
  const double rl = contact_radius_of_voxel(params, h);
  if (rl < params.rho * (1.0 - 1e-12))
    fail(RDMEC_ERR_DOMAIN,
         "voxel size below the model's domain (beta > 1): h = " +
             std::to_string(h) + " < " + std::to_string(fange_h_min(params)));
  const double beta = std::min(1.0, params.rho / rl);
  if (params.dim == 3) {
    const double correction = (1.0 - beta) * (1.0 - 0.58 * beta);
    if (std::isinf(params.k_r)) {
      if (correction == 0.0) return kInf;  // beta = 1, absorbing limit
      return 4.0 * M_PI * params.rho * params.D / correction;
    }
    const double alpha = params.k_r / (4.0 * M_PI * params.rho * params.D);
    return params.k_r / (1.0 + alpha * correction);
  }
  const double lg = std::log1p(0.544 * (1.0 - beta) / beta);
  if (std::isinf(params.k_r)) {
    if (lg == 0.0) return kInf;
    return 2.0 * M_PI * params.D / lg;
  }
  const double alpha = params.k_r / (2.0 * M_PI * params.D);
  return params.k_r / (1.0 + alpha * lg);
}

double to_propensity(double rate, double h, int dim) {
  require(rate >= 0, RDMEC_ERR_INVALID_ARGUMENT, "rate must be >= 0");
  require(std::isfinite(h) && h > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "voxel size must be positive");
  require(dim == 2 || dim == 3, RDMEC_ERR_INVALID_ARGUMENT,
          "dim must be 2 or 3");
  return rate / std::pow(h, dim);
}

double k_meso_matched_exact(double tau_micro, double tau_d, double steps_one) {
  require(std::isfinite(tau_d) && tau_d >= 0, RDMEC_ERR_INVALID_ARGUMENT,
          "tau_D must be non-negative");
  require(steps_one >= 0, RDMEC_ERR_INVALID_ARGUMENT,
          "N1 step count must be non-negative");
  if (!(tau_micro > tau_d))
    fail(RDMEC_ERR_BELOW_CRITICAL,
         "tau_micro = " + std::to_string(tau_micro) +
             " <= tau_D = " + std::to_string(tau_d) +
             ": mesh below the critical size, no matching rate exists");
  return (1.0 + steps_one) / (tau_micro - tau_d);
}

double k_meso_matched_asym(const PhysParams &params, double h,
                           double tau_micro) {
  const double tau_d = tau_d_asymptotic(params, h);
  const double ratio = params.L / h;
  const double n1 = std::pow(ratio, params.dim);
  if (!(tau_micro > tau_d)) {
    const double h_star = critical_h(params, tau_micro);
    fail(RDMEC_ERR_BELOW_CRITICAL,
         "h = " + std::to_string(h) + " is at or below h* = " +
             std::to_string(h_star) + ": no matching rate exists");
  }
  return (1.0 + n1) / (tau_micro - tau_d);
}

double critical_h(const PhysParams &params, double tau_micro) {
  require(std::isfinite(tau_micro) && tau_micro > 0,
          RDMEC_ERR_INVALID_ARGUMENT, "tau_micro must be positive");
  double h;
  if (params.dim == 3) {
    h = kMontroll3d * params.L * params.L * params.L /
        (6.0 * params.D * tau_micro);
  } else {
    const double l2 = params.L * params.L;
    h = params.L * std::exp(-(2.0 * M_PI * params.D / l2) *
                            (tau_micro - 0.1951 * l2 / (4.0 * params.D)));
  }
  if (!(h > 0 && h < params.L))
    fail(RDMEC_ERR_DOMAIN,
         "tau_D(h) = tau_micro has no root in (0, L); got h* = " +
             std::to_string(h));
  return h;
}

double critical_h_bisect(const std::function<double(double)> &tau_d_of_h,
                         double tau_micro, double h_lo, double h_hi,
                         double rel_tol) {
  require(h_lo < h_hi, RDMEC_ERR_INVALID_ARGUMENT, "need h_lo < h_hi");
  double f_lo = tau_d_of_h(h_lo) - tau_micro;
  double f_hi = tau_d_of_h(h_hi) - tau_micro;
  // tau_D decreases with h, so the root needs f(lo) > 0 > f(hi)
  if (!(f_lo > 0 && f_hi < 0))
    fail(RDMEC_ERR_DOMAIN, "no sign change of tau_D - tau_micro in bracket");
  while ((h_hi - h_lo) > rel_tol * h_hi) {
    const double mid = 0.5 * (h_lo + h_hi);
    const double f = tau_d_of_h(mid) - tau_micro;
    if (f > 0)
      h_lo = mid;
    else
      h_hi = mid;
  }
  return 0.5 * (h_lo + h_hi);
}

}  // namespace rdmecrit
