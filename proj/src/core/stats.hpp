#pragma once

#include <cstdint>
#include <vector>

namespace rdmecrit {

// Monte Carlo estimate of a first-passage / association time.
struct FptStats {
  double mean = 0;
  double se = 0;  // sample standard deviation / sqrt(n); 0 for n = 1
  double min = 0;
  double max = 0;
  std::int64_t n = 0;
};

// Two-pass summary in a fixed order, so results are identical no matter how
// the samples were produced.
FptStats summarize(const std::vector<double> &samples);

}  // namespace rdmecrit
