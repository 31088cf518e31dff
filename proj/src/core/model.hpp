#pragma once

#include <cstdint>
#include <vector>

namespace rdmecrit {

enum class Boundary { Periodic, Reflective };

// Physical constants of the pair problem. rho is the sum of the reaction
// radii, D the relative diffusion constant D_A + D_B, k_r the microscopic
// association rate (m^dim/s, +inf for the perfectly absorbing limit), L the
// side length of the square/cubic domain.
struct PhysParams {
  int dim = 3;
  double rho = 0;
  double D = 0;
  double k_r = 0;
  double L = 0;
};

// Validates invariants (rho > 0, D > 0, L > rho, dim in {2,3}, k_r > 0).
PhysParams make_params(int dim, double rho, double D, double k_r, double L);

struct LatticeSpec {
  int dim = 3;
  int n_per_side = 0;
  double L = 0;
  Boundary boundary = Boundary::Periodic;
  std::int64_t target = 0;

  // h is always derived from L and n_per_side, never stored.
  double h() const { return L / n_per_side; }
  std::int64_t voxels() const;
};

std::int64_t center_voxel(int dim, int n_per_side);

// Total diffusive jump rate out of a voxel: 2*dim*D/h^2 (1/s).
double total_jump_rate(const LatticeSpec &spec, double D);

// Cartesian lattice with a precomputed jump table. Voxels are indexed
// row-major with x fastest: idx = x + n*(y + n*z). Directions are ordered
// +x,-x,+y,-y(,+z,-z). Under reflective boundaries a jump across a wall is
// a null event; the table stores the source voxel itself for that slot.
class Lattice {
 public:
  explicit Lattice(LatticeSpec spec);

  const LatticeSpec &spec() const { return spec_; }
  std::int64_t voxels() const { return n_voxels_; }
  int directions() const { return 2 * spec_.dim; }
  std::int64_t target() const { return spec_.target; }

  std::int64_t neighbor(std::int64_t voxel, int dir) const {
    return table_[voxel * directions() + dir];
  }
  // Number of jump directions not blocked by a wall (2*dim under periodic).
  int open_directions(std::int64_t voxel) const { return open_[voxel]; }

 private:
  LatticeSpec spec_;
  std::int64_t n_voxels_ = 0;
  std::vector<std::int64_t> table_;
  std::vector<std::uint8_t> open_;
};

}  // namespace rdmecrit
