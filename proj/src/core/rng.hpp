#pragma once

#include <cstdint>

namespace rdmecrit {

// splitmix64; also used to expand (seed, stream) pairs into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t &x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ with one independent state per (seed, stream) pair. Streams
// are what make Monte Carlo runs reproducible under any scheduling: each
// trajectory owns stream = its sample index and never touches another.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    s0_ = splitmix64(x);
    s1_ = splitmix64(x);
    s2_ = splitmix64(x);
    s3_ = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t r = rotl(s0_ + s3_, 23) + s0_;
    const std::uint64_t t = s1_ << 17;
    s2_ ^= s0_;
    s3_ ^= s1_;
    s1_ ^= s2_;
    s0_ ^= s3_;
    s2_ ^= t;
    s3_ = rotl(s3_, 45);
    return r;
  }

  // uniform on (0,1); never returns 0, so log() stays finite
  double u01() { return (next() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

  // unbiased-enough index in [0, n) for small n (bias < n/2^64)
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  double exponential(double rate);  // mean 1/rate
  double normal();                  // standard normal, Box-Muller pairs

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s0_, s1_, s2_, s3_;
  double cached_normal_ = 0;
  bool have_cached_ = false;
};

}  // namespace rdmecrit
