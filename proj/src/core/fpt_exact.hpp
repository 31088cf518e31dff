#pragma once

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace rdmecrit {

enum class FieldMode { Hitting, Absorption };

// Per-voxel mean times from the hitting-time linear system. Values are kept
// in step counts (multiples of the mean jump interval 1/tau_jump) and
// converted to seconds exactly once, on read-out.
struct ExactFptField {
  FieldMode mode = FieldMode::Hitting;
  double k_meso = 0;    // absorption only; +inf collapses to hitting
  double tau_jump = 0;  // total jump rate 2*dim*D/h^2 (1/s)
  std::int64_t target = 0;
  std::vector<double> steps;
  double residual = 0;  // relative max-norm residual of the linear system
  std::int64_t iterations = 0;

  double seconds(std::int64_t voxel) const { return steps[voxel] / tau_jump; }
};

// Mean steps until the walker first occupies the target voxel, per start
// voxel; null events at reflective walls count as steps. Solved matrix-free
// by conjugate gradients on the symmetric system
//   (I - P) t = 1,  t[target] = 0,
// to a relative max-norm residual <= tol.
ExactFptField solve_hitting(const Lattice &lattice, double D,
                            double tol = 1e-10);

// Mean time until the pair reacts when the shared voxel carries reaction
// propensity k_meso (1/s): same system plus k_meso/tau_jump on the target
// diagonal, solved over all voxels.
ExactFptField solve_absorption(const Lattice &lattice, double D, double k_meso,
                               double tol = 1e-10);

// Uniform averages. include_target = true averages over all N voxels (the
// target contributes 0 in hitting mode, reproducing the (N-1)/N weighting);
// false averages over the N-1 non-target voxels.
double mean_steps(const ExactFptField &field, bool include_target);
double tau_d_uniform(const ExactFptField &field, bool include_target);

// Mean step count to the target from one voxel away: the average over the
// target's 2*dim jump destinations (a blocked direction contributes the
// target itself, i.e. zero). Equals N-1 on any periodic lattice.
double n_steps_one(const ExactFptField &field, const Lattice &lattice);

// Large-N asymptotics of the uniform-start mean step count.
struct AsymptoticPrediction {
  double n_steps = 0;
  double n_steps_one = 0;
  double tau_d_s = 0;  // NaN when no time scale was supplied
  const char *regime = "";
};

AsymptoticPrediction montroll_asymptotic(int dim, std::int64_t voxels);

// Asymptotic mean co-location time for voxel size h:
//   2D: L^2/(2 pi D) log(L/h) + 0.1951 L^2/(4 D)
//   3D: 1.5164 L^3/(6 D h)
double tau_d_asymptotic(const PhysParams &params, double h);

}  // namespace rdmecrit
