#pragma once

#include <functional>

#include "model.hpp"

namespace rdmecrit {

// Association-rate models evaluated per mesh size. Macroscopic rates carry
// units m^dim/s; per-voxel propensities carry 1/s. The two never mix except
// through to_propensity().
enum class RateModel {
  Conventional,     // diffusion-limited k_a (3D only), macroscopic
  ErbanChapman,     // steady-state matched propensity (3D only)
  Fange,            // equilibration-time matched macroscopic rate
  MatchedAsym,      // propensity matching tau_micro via lattice asymptotics
  MatchedExact,     // propensity matching tau_micro via exact solver values
};

const char *rate_model_name(RateModel m);
RateModel rate_model_from_name(const std::string &name);
bool rate_model_valid_for_dim(RateModel m, int dim);

// k_a = 4 pi rho D k_r / (4 pi rho D + k_r); the absorbing limit returns
// 4 pi rho D. No 2D analogue exists, so dim = 2 is rejected.
double conventional_ka(const PhysParams &params);

// q(h) = D k_a / (D h^3 - beta k_a h^2) with beta = 0.25272, valid above the
// pole h_crit = beta k_a / D; at or below it the propensity is +inf
// (association on first co-location). 3D only.
double erban_chapman_q(const PhysParams &params, double h);
double erban_chapman_h_crit(const PhysParams &params);

// Equilibration-time matched macroscopic rate:
//   3D: k_r / (1 + alpha (1-beta)(1-0.58 beta)),   alpha = k_r/(4 pi rho D)
//   2D: k_r / (1 + alpha ln[1 + 0.544 (1-beta)/beta]), alpha = k_r/(2 pi D)
// with beta = rho/(rho+l) and rho+l the radius of the disk of area h^2 /
// sphere of volume h^3. Defined for beta <= 1; smaller h is a domain error.
double fange_p(const PhysParams &params, double h);
// Smallest voxel size the model accepts (beta = 1).
double fange_h_min(const PhysParams &params);

// Macroscopic rate (m^dim/s) -> per-voxel propensity (1/s).
double to_propensity(double rate, double h, int dim);

// Propensity that makes the mesoscopic mean association time equal
// tau_micro: k = (1 + N1) / (tau_micro - tau_D). The asymptotic variant uses
// N1 ~ (L/h)^dim and the closed-form tau_D(h); the exact variant takes both
// from the solver, which makes the absorption solve reproduce tau_micro to
// solver precision. tau_micro <= tau_D is a below-critical-mesh error.
double k_meso_matched_asym(const PhysParams &params, double h,
                           double tau_micro);
double k_meso_matched_exact(double tau_micro, double tau_d, double steps_one);

// Root of tau_d_asymptotic(h) = tau_micro in closed form:
//   3D: h* = 1.5164 L^3 / (6 D tau_micro)
//   2D: h* = L exp(-(2 pi D / L^2)(tau_micro - 0.1951 L^2/(4D)))
double critical_h(const PhysParams &params, double tau_micro);

// Monotone bisection for a caller-supplied decreasing tau_D(h), for use with
// solver-backed curves; brackets must satisfy tau_D(lo) > tau_micro >
// tau_D(hi).
double critical_h_bisect(const std::function<double(double)> &tau_d_of_h,
                         double tau_micro, double h_lo, double h_hi,
                         double rel_tol = 1e-12);

}  // namespace rdmecrit
