#include "fpt_exact.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace rdmecrit {

namespace {

constexpr double kMontroll3d = 1.5164;
constexpr double kMontroll2dOffset = 0.1951;

// y = (I - P) x (+ kappa x at the target for the absorption system), with P
// the jump matrix of the embedded walk; blocked directions appear as self
// entries in the table, which keeps the operator symmetric. In hitting mode
// the target is an absorbing Dirichlet node: its column is skipped and its
// row pinned to the identity.
struct WalkOperator {
  const Lattice &lattice;
  double kappa = 0;          // k_meso / tau_jump (absorption system)
  bool dirichlet = false;    // hitting system

  void apply(const std::vector<double> &x, std::vector<double> &y) const {
    const std::int64_t n = lattice.voxels();
    const int ndir = lattice.directions();
    const double inv = 1.0 / ndir;
    const std::int64_t tgt = lattice.target();
    for (std::int64_t i = 0; i < n; ++i) {
      double acc = 0;
      for (int d = 0; d < ndir; ++d) acc += x[lattice.neighbor(i, d)];
      y[i] = x[i] - inv * acc;
    }
    if (dirichlet) {
      // x[target] is pinned to zero, so contributions through the target
      // column vanished above; restore the identity row.
      y[tgt] = x[tgt];
    } else {
      y[tgt] += kappa * x[tgt];
    }
  }
};

struct CgOutcome {
  double residual = 0;
  std::int64_t iterations = 0;
};

double max_abs(const std::vector<double> &v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// Plain conjugate gradients, run serially so results do not depend on any
// worker count. Convergence is measured on the true residual in the
// max-norm, relative to max|b| = 1.
CgOutcome conjugate_gradient(const WalkOperator &op,
                             const std::vector<double> &b,
                             std::vector<double> &x, double tol,
                             std::int64_t max_iter) {
  const std::size_t n = b.size();
  std::vector<double> r = b;  // x starts at zero
  std::vector<double> p = r;
  std::vector<double> ap(n);
  double rs = 0;
  for (double v : r) rs += v * v;
  const double b_max = max_abs(b);

  double true_res = max_abs(r) / b_max;
  std::int64_t it = 0;
  while (!(true_res <= tol)) {  // NaN-safe: NaN keeps iterating to the cap
    if (it >= max_iter)
      fail(RDMEC_ERR_NO_CONVERGENCE,
           "hitting-time solver: residual " + std::to_string(true_res) +
               " after " + std::to_string(it) + " iterations (tol " +
               std::to_string(tol) + ")");
    op.apply(p, ap);
    double pap = 0;
    for (std::size_t i = 0; i < n; ++i) pap += p[i] * ap[i];
    const double alpha = rs / pap;
    for (std::size_t i = 0; i < n; ++i) x[i] += alpha * p[i];
    for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * ap[i];
    double rs_new = 0;
    for (double v : r) rs_new += v * v;
    ++it;

    // Cheap gate on the recurrence residual before paying for an exact one;
    // restart from the exact residual periodically to stop drift.
    if (max_abs(r) / b_max <= tol || it % 512 == 0) {
      op.apply(x, ap);
      for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
      rs = 0;
      for (double v : r) rs += v * v;
      true_res = max_abs(r) / b_max;
      p = r;
      continue;
    }
    const double beta = rs_new / rs;
    rs = rs_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return {true_res, it};
}

ExactFptField solve(const Lattice &lattice, double D, double k_meso,
                    bool hitting, double tol) {
  require(std::isfinite(tol) && tol > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "solver tolerance must be positive");
  const double tau_jump = total_jump_rate(lattice.spec(), D);
  const std::int64_t n = lattice.voxels();

  ExactFptField field;
  field.mode = hitting ? FieldMode::Hitting : FieldMode::Absorption;
  field.k_meso = hitting ? std::numeric_limits<double>::infinity() : k_meso;
  field.tau_jump = tau_jump;
  field.target = lattice.target();
  field.steps.assign(static_cast<std::size_t>(n), 0.0);

  WalkOperator op{lattice, hitting ? 0.0 : k_meso / tau_jump, hitting};
  std::vector<double> b(static_cast<std::size_t>(n), 1.0);
  if (hitting) b[static_cast<std::size_t>(lattice.target())] = 0.0;

  const auto max_iter =
      std::max<std::int64_t>(20000, 400 * static_cast<std::int64_t>(
                                              std::sqrt(double(n))));
  const CgOutcome out = conjugate_gradient(op, b, field.steps, tol, max_iter);
  field.residual = out.residual;
  field.iterations = out.iterations;
  return field;
}

}  // namespace

ExactFptField solve_hitting(const Lattice &lattice, double D, double tol) {
  return solve(lattice, D, 0.0, /*hitting=*/true, tol);
}

ExactFptField solve_absorption(const Lattice &lattice, double D, double k_meso,
                               double tol) {
  require(k_meso > 0, RDMEC_ERR_INVALID_ARGUMENT,
          "k_meso must be positive (may be +inf)");
  if (std::isinf(k_meso)) {
    // Reaction fires on first co-location: the hitting field.
    ExactFptField field = solve_hitting(lattice, D, tol);
    field.mode = FieldMode::Absorption;
    field.k_meso = k_meso;
    return field;
  }
  return solve(lattice, D, k_meso, /*hitting=*/false, tol);
}

double mean_steps(const ExactFptField &field, bool include_target) {
  const std::int64_t n = static_cast<std::int64_t>(field.steps.size());
  double sum = 0;
  for (double v : field.steps) sum += v;
  if (include_target) return sum / static_cast<double>(n);
  sum -= field.steps[static_cast<std::size_t>(field.target)];
  return sum / static_cast<double>(n - 1);
}

double tau_d_uniform(const ExactFptField &field, bool include_target) {
  require(field.mode == FieldMode::Hitting, RDMEC_ERR_INVALID_ARGUMENT,
          "tau_D is defined on hitting fields");
  return mean_steps(field, include_target) / field.tau_jump;
}

double n_steps_one(const ExactFptField &field, const Lattice &lattice) {
  require(field.mode == FieldMode::Hitting, RDMEC_ERR_INVALID_ARGUMENT,
          "n_steps_one is defined on hitting fields");
  const std::int64_t tgt = lattice.target();
  double acc = 0;
  for (int d = 0; d < lattice.directions(); ++d)
    acc += field.steps[static_cast<std::size_t>(lattice.neighbor(tgt, d))];
  return acc / lattice.directions();
}

AsymptoticPrediction montroll_asymptotic(int dim, std::int64_t voxels) {
  require(dim == 2 || dim == 3, RDMEC_ERR_INVALID_ARGUMENT,
          "dim must be 2 or 3");
  require(voxels >= 2, RDMEC_ERR_INVALID_ARGUMENT, "need at least 2 voxels");
  AsymptoticPrediction p;
  const double N = static_cast<double>(voxels);
  if (dim == 2) {
    p.n_steps = N * std::log(N) / M_PI + kMontroll2dOffset * N;
    p.regime = "2D: N log(N)/pi + 0.1951 N";
  } else {
    p.n_steps = kMontroll3d * N;
    p.regime = "3D: 1.5164 N";
  }
  p.n_steps_one = N;
  p.tau_d_s = std::numeric_limits<double>::quiet_NaN();
  return p;
}

double tau_d_asymptotic(const PhysParams &params, double h) {
  require(std::isfinite(h) && h > 0 && h < params.L,
          RDMEC_ERR_INVALID_ARGUMENT, "voxel size must satisfy 0 < h < L");
  const double L = params.L;
  const double D = params.D;
  if (params.dim == 2)
    return L * L / (2.0 * M_PI * D) * std::log(L / h) +
           kMontroll2dOffset * L * L / (4.0 * D);
  return kMontroll3d * L * L * L / (6.0 * D * h);
}

}  // namespace rdmecrit
