#include "model.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace rdmecrit {

PhysParams make_params(int dim, double rho, double D, double k_r, double L) {
  require(dim == 2 || dim == 3, RDMEC_ERR_INVALID_ARGUMENT,
          "dim must be 2 or 3, got " + std::to_string(dim));
  require(std::isfinite(rho) && rho > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "rho must be positive and finite");
  require(std::isfinite(D) && D > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "diffusion constant must be positive and finite");
  require(k_r > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "k_r must be positive (may be +inf)");
  require(std::isfinite(L) && L > rho, RDMEC_ERR_INVALID_ARGUMENT,
          "domain side L must exceed rho");
  return PhysParams{dim, rho, D, k_r, L};
}

std::int64_t LatticeSpec::voxels() const {
  std::int64_t n = n_per_side;
  std::int64_t count = n;
  for (int a = 1; a < dim; ++a) count *= n;
  return count;
}

std::int64_t center_voxel(int dim, int n_per_side) {
  const std::int64_t c = n_per_side / 2;
  std::int64_t i = 0;
  std::int64_t stride = 1;
  for (int a = 0; a < dim; ++a) {
    i += c * stride;
    stride *= n_per_side;
  }
  return i;
}

double total_jump_rate(const LatticeSpec &spec, double D) {
  require(std::isfinite(D) && D > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "diffusion constant must be positive and finite");
  const double h = spec.h();
  return 2.0 * spec.dim * D / (h * h);
}

Lattice::Lattice(LatticeSpec spec) : spec_(spec) {
  require(spec_.dim == 2 || spec_.dim == 3, RDMEC_ERR_INVALID_ARGUMENT,
          "dim must be 2 or 3, got " + std::to_string(spec_.dim));
  require(spec_.n_per_side >= 2, RDMEC_ERR_INVALID_ARGUMENT,
          "n_per_side must be >= 2, got " + std::to_string(spec_.n_per_side));
  require(std::isfinite(spec_.L) && spec_.L > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "domain side L must be positive");
  n_voxels_ = spec_.voxels();
  require(spec_.target >= 0 && spec_.target < n_voxels_,
          RDMEC_ERR_INVALID_ARGUMENT, "target voxel out of range");

  const int n = spec_.n_per_side;
  const int dim = spec_.dim;
  const int ndir = 2 * dim;
  const bool periodic = spec_.boundary == Boundary::Periodic;
  table_.resize(static_cast<std::size_t>(n_voxels_) * ndir);
  open_.assign(static_cast<std::size_t>(n_voxels_), 0);

  std::int64_t stride[3] = {1, n, static_cast<std::int64_t>(n) * n};
  int coord[3] = {0, 0, 0};
  for (std::int64_t i = 0; i < n_voxels_; ++i) {
    int open = 0;
    for (int a = 0; a < dim; ++a) {
      for (int s = 0; s < 2; ++s) {
        const int d = 2 * a + s;
        const int step = s == 0 ? +1 : -1;
        const int c = coord[a] + step;
        std::int64_t j;
        if (periodic) {
          const int w = c == n ? 0 : (c == -1 ? n - 1 : c);
          j = i + (static_cast<std::int64_t>(w) - coord[a]) * stride[a];
          ++open;
        } else if (c < 0 || c >= n) {
          j = i;  // null event: walker stays put
        } else {
          j = i + static_cast<std::int64_t>(step) * stride[a];
          ++open;
        }
        table_[i * ndir + d] = j;
      }
    }
    open_[i] = static_cast<std::uint8_t>(open);
    // advance row-major coordinates, x fastest
    for (int a = 0; a < dim; ++a) {
      if (++coord[a] < n) break;
      coord[a] = 0;
    }
  }
}

}  // namespace rdmecrit
