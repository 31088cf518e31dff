// Fixed-step Brownian-dynamics engine. This translation unit is compiled
// with -ffast-math so the Box-Muller transcendentals vectorize through
// libmvec; it must not contain any logic that depends on strict IEEE
// semantics (no NaN/Inf propagation, no signed-zero tricks).
//
// Walkers are simulated eight at a time in structure-of-arrays form. Every
// sample owns the random stream derived from (seed, sample index) and
// consumes it in a fixed order (start-position uniforms first, then
// Box-Muller pairs in buffer-fill order), so per-sample trajectories are
// identical for any batch composition or thread count.

#include "bd_kernel.hpp"

#include <math.h>

#include <atomic>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace rdmecrit {

namespace {

constexpr int kLanes = 8;
constexpr int kBuf = 72;  // normals per lane per refill; divisible by 2 and 3
constexpr double kTwoPi = 6.283185307179586476925286766559;

struct LaneRng {
  std::uint64_t s0[kLanes], s1[kLanes], s2[kLanes], s3[kLanes];
};

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline void seed_lane(LaneRng &g, int lane, std::uint64_t seed,
                      std::uint64_t stream) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  g.s0[lane] = splitmix64(x);
  g.s1[lane] = splitmix64(x);
  g.s2[lane] = splitmix64(x);
  g.s3[lane] = splitmix64(x);
}

inline void lanes_u01(LaneRng &g, double *out) {
#pragma omp simd
  for (int l = 0; l < kLanes; ++l) {
    const std::uint64_t r = rotl64(g.s0[l] + g.s3[l], 23) + g.s0[l];
    const std::uint64_t t = g.s1[l] << 17;
    g.s2[l] ^= g.s0[l];
    g.s3[l] ^= g.s1[l];
    g.s1[l] ^= g.s2[l];
    g.s0[l] ^= g.s3[l];
    g.s2[l] ^= t;
    g.s3[l] = rotl64(g.s3[l], 45);
    out[l] = (r >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
}

// zbuf is slot-major / lane-minor so both the fill and the consumers run on
// contiguous vectors.
void fill_lane_normals(LaneRng &g, double zbuf[kBuf][kLanes]) {
  alignas(64) double u1[kLanes], u2[kLanes], rr[kLanes], aa[kLanes],
      cc[kLanes], ss[kLanes];
  for (int p = 0; p < kBuf / 2; ++p) {
    lanes_u01(g, u1);
    lanes_u01(g, u2);
#pragma omp simd
    for (int l = 0; l < kLanes; ++l) {
      rr[l] = ::sqrt(-2.0 * ::log(u1[l]));
      aa[l] = kTwoPi * u2[l];
    }
#pragma omp simd
    for (int l = 0; l < kLanes; ++l) cc[l] = ::cos(aa[l]);
#pragma omp simd
    for (int l = 0; l < kLanes; ++l) ss[l] = ::sin(aa[l]);
#pragma omp simd
    for (int l = 0; l < kLanes; ++l) {
      zbuf[2 * p][l] = rr[l] * cc[l];
      zbuf[2 * p + 1][l] = rr[l] * ss[l];
    }
  }
}

template <bool PERIODIC>
inline double fold1(double p, double box, double half) {
  if (PERIODIC) {
    p = (p >= half) ? p - box : ((p < -half) ? p + box : p);
  } else {
    p = (p > half) ? box - p : ((p < -half) ? -box - p : p);
  }
  return p;
}

template <int DIM, bool PERIODIC>
struct Engine {
  const BdLevelSpec &spec;
  double *times;  // per-sample output, indexed relative to spec.first_sample
  std::atomic<std::int64_t> &first_fail;

  // first/end are absolute sample indices; streams are keyed by them.
  void run(std::int64_t first, std::int64_t end) const {
    const double box = spec.params.L;
    const double half = 0.5 * box;
    const double rho2 = spec.params.rho * spec.params.rho;
    const double sig = ::sqrt(2.0 * spec.params.D * spec.dt);
    const double dt = spec.dt;

    LaneRng g;
    alignas(64) double pos[3][kLanes];
    alignas(64) double r2[kLanes], prev_r2[kLanes];
    std::uint64_t steps[kLanes];
    std::int64_t sample[kLanes];

    for (int l = 0; l < kLanes; ++l) {
      seed_lane(g, l, spec.seed ^ 0x5eedf00dULL, static_cast<std::uint64_t>(l));
      for (int a = 0; a < 3; ++a) pos[a][l] = 0.23 * half;  // idle filler
      prev_r2[l] = rho2 * 4;
      steps[l] = 0;
      sample[l] = -1;
    }

    // scalar draw from one lane's stream (same sequence the fill consumes)
    auto lane_u01 = [&g](int l) {
      const std::uint64_t r = rotl64(g.s0[l] + g.s3[l], 23) + g.s0[l];
      const std::uint64_t t = g.s1[l] << 17;
      g.s2[l] ^= g.s0[l];
      g.s3[l] ^= g.s1[l];
      g.s1[l] ^= g.s2[l];
      g.s0[l] ^= g.s3[l];
      g.s2[l] ^= t;
      g.s3[l] = rotl64(g.s3[l], 45);
      return (r >> 11) * 0x1.0p-53 + 0x1.0p-54;
    };

    std::int64_t next = first;
    int active = 0;

    // Seeds the lane with the sample's stream and draws its start position
    // from it. A start already inside the contact sphere records zero
    // immediately and leaves the lane idle.
    auto assign = [&](int l) {
      const std::int64_t idx = next++;
      seed_lane(g, l, spec.seed, static_cast<std::uint64_t>(idx));
      double p[3] = {0, 0, 0};
      double r = 0;
      if (spec.fixed_start) {
        for (int a = 0; a < DIM; ++a) {
          p[a] = spec.start[a];
          r += p[a] * p[a];
        }
        if (r <= rho2) {
          times[idx - spec.first_sample] = 0.0;
          return;
        }
      } else {
        do {
          r = 0;
          for (int a = 0; a < DIM; ++a) {
            p[a] = (lane_u01(l) - 0.5) * box;
            r += p[a] * p[a];
          }
        } while (r <= rho2);
      }
      for (int a = 0; a < DIM; ++a) pos[a][l] = p[a];
      prev_r2[l] = r;
      steps[l] = 0;
      sample[l] = idx;
      ++active;
    };

    alignas(64) double zb[kBuf][kLanes];
    while (true) {
      for (int l = 0; l < kLanes && next < end; ++l)
        if (sample[l] < 0) assign(l);
      if (active == 0) {
        if (next >= end) break;
        continue;  // everything assigned so far absorbed at t = 0
      }
      fill_lane_normals(g, zb);
      for (int grp = 0; grp < kBuf / DIM; ++grp) {
        const double *z0 = zb[grp * DIM];
        const double *z1 = zb[grp * DIM + 1];
        const double *z2 = zb[grp * DIM + (DIM - 1)];
#pragma omp simd
        for (int l = 0; l < kLanes; ++l) {
          double acc = 0;
          double p0 = pos[0][l] + sig * z0[l];
          p0 = fold1<PERIODIC>(p0, box, half);
          p0 = fold1<PERIODIC>(p0, box, half);
          pos[0][l] = p0;
          acc += p0 * p0;
          double p1 = pos[1][l] + sig * z1[l];
          p1 = fold1<PERIODIC>(p1, box, half);
          p1 = fold1<PERIODIC>(p1, box, half);
          pos[1][l] = p1;
          acc += p1 * p1;
          if (DIM == 3) {
            double p2 = pos[2][l] + sig * z2[l];
            p2 = fold1<PERIODIC>(p2, box, half);
            p2 = fold1<PERIODIC>(p2, box, half);
            pos[2][l] = p2;
            acc += p2 * p2;
          }
          r2[l] = acc;
        }
        for (int l = 0; l < kLanes; ++l) {
          if (sample[l] < 0) continue;
          if (r2[l] <= rho2) {
            const double d_prev = ::sqrt(prev_r2[l]);
            const double d_cur = ::sqrt(r2[l]);
            double frac = (d_prev - spec.params.rho) / (d_prev - d_cur);
            if (!(frac >= 0)) frac = 0;
            if (frac > 1) frac = 1;
            times[sample[l] - spec.first_sample] =
                (static_cast<double>(steps[l]) + frac) * dt;
            sample[l] = -1;
            --active;
          } else {
            prev_r2[l] = r2[l];
            if (++steps[l] >= spec.step_budget) {
              std::int64_t cur = first_fail.load();
              const std::int64_t idx = sample[l];
              while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
              }
              times[idx - spec.first_sample] = -1.0;
              sample[l] = -1;
              --active;
            }
          }
        }
        if (active == 0) break;
      }
      if (active == 0 && next >= end) break;
    }
  }
};

}  // namespace

FptStats bd_run_level(const BdLevelSpec &spec, std::vector<double> *per_sample) {
  const PhysParams &pp = spec.params;
  require(pp.dim == 2 || pp.dim == 3, RDMEC_ERR_INVALID_ARGUMENT,
          "dim must be 2 or 3");
  require(isinf(pp.k_r), RDMEC_ERR_UNSUPPORTED,
          "the Brownian-dynamics oracle covers the absorbing limit only "
          "(k_r = inf)");
  require(spec.dt > 0, RDMEC_ERR_INVALID_ARGUMENT, "dt must be positive");
  require(spec.n_samples >= 1, RDMEC_ERR_INVALID_ARGUMENT,
          "n_samples must be >= 1");
  const double sig = ::sqrt(2.0 * pp.D * spec.dt);
  require(sig <= pp.L / 4.0, RDMEC_ERR_INVALID_ARGUMENT,
          "dt too coarse: per-axis step exceeds L/4");
  if (spec.fixed_start) {
    for (int a = 0; a < pp.dim; ++a)
      require(spec.start[a] >= -0.5 * pp.L && spec.start[a] <= 0.5 * pp.L,
              RDMEC_ERR_INVALID_ARGUMENT, "fixed start outside the domain");
  }

  std::vector<double> times(static_cast<std::size_t>(spec.n_samples), 0.0);
  std::atomic<std::int64_t> first_fail{spec.first_sample + spec.n_samples};
  parallel_for(spec.n_samples, spec.threads,
               [&](std::int64_t begin, std::int64_t end) {
                 const bool per = spec.boundary == Boundary::Periodic;
                 const std::int64_t b = spec.first_sample + begin;
                 const std::int64_t e = spec.first_sample + end;
                 if (pp.dim == 3 && !per)
                   Engine<3, false>{spec, times.data(), first_fail}.run(b, e);
                 else if (pp.dim == 3)
                   Engine<3, true>{spec, times.data(), first_fail}.run(b, e);
                 else if (!per)
                   Engine<2, false>{spec, times.data(), first_fail}.run(b, e);
                 else
                   Engine<2, true>{spec, times.data(), first_fail}.run(b, e);
               });
  if (first_fail.load() < spec.first_sample + spec.n_samples)
    fail(RDMEC_ERR_STEP_BUDGET,
         "sample " + std::to_string(first_fail.load()) +
             " exceeded the per-trajectory step budget");
  if (per_sample) *per_sample = times;
  return summarize(times);
}

void bd_normal_increments(std::uint64_t seed, std::int64_t sample_index,
                          double sigma, std::int64_t count, double *out) {
  // Scalar replay of one lane's Box-Muller sequence.
  Rng stream(seed, static_cast<std::uint64_t>(sample_index));
  std::int64_t produced = 0;
  while (produced < count) {
    const double u1 = stream.u01();
    const double u2 = stream.u01();
    const double r = ::sqrt(-2.0 * ::log(u1));
    const double a = kTwoPi * u2;
    out[produced++] = sigma * r * ::cos(a);
    if (produced < count) out[produced++] = sigma * r * ::sin(a);
  }
}

}  // namespace rdmecrit
