#include "stats.hpp"

#include <cmath>

#include "errors.hpp"

namespace rdmecrit {

FptStats summarize(const std::vector<double> &samples) {
  require(!samples.empty(), RDMEC_ERR_INVALID_ARGUMENT,
          "cannot summarize zero samples");
  FptStats s;
  s.n = static_cast<std::int64_t>(samples.size());
  s.min = samples[0];
  s.max = samples[0];
  double sum = 0;
  for (double v : samples) {
    sum += v;
    if (v < s.min) s.min = v;
    if (v > s.max) s.max = v;
  }
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0;
    for (double v : samples) {
      const double d = v - s.mean;
      ss += d * d;
    }
    s.se = std::sqrt(ss / (static_cast<double>(s.n - 1))) /
           std::sqrt(static_cast<double>(s.n));
  }
  return s;
}

}  // namespace rdmecrit
