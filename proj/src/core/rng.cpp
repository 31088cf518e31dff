#include "rng.hpp"

#include <cmath>

namespace rdmecrit {

double Rng::exponential(double rate) { return -std::log(u01()) / rate; }

double Rng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_normal_;
  }
  constexpr double two_pi = 6.283185307179586476925286766559;
  const double r = std::sqrt(-2.0 * std::log(u01()));
  const double a = two_pi * u01();
  cached_normal_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

}  // namespace rdmecrit
