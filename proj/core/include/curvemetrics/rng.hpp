#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curvemetrics/fields.hpp"

namespace curvemetrics {

// Deterministic random stream used by sampled verification and tests.
// Draws are built from raw mt19937 words so the sequence is identical across
// standard libraries (std::normal_distribution is implementation defined).
class RandomStream {
 public:
  explicit RandomStream(std::uint32_t seed) : mt_(seed) {}

  // 53-bit uniform in [0, 1).
  double uniform01() {
    const std::uint64_t a = mt_() >> 5;  // 27 bits
    const std::uint64_t b = mt_() >> 6;  // 26 bits
    return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) / 9007199254740992.0;
  }

  // Standard normal via Box-Muller; two uniforms per draw, no spare cached.
  double normal();

 private:
  std::mt19937 mt_;
};

// Trigonometric polynomial sum_m w_m (A_m cos(m theta) + B_m sin(m theta))
// with A, B standard normal, m = 0..kmax.  weights must have kmax+1 entries.
ScalarField band_limited_field(Eigen::Index n, RandomStream& stream, int kmax,
                               const std::vector<double>& weights);

// Convenience: band limited components with the default decaying spectrum
// w_m = 1/(1+m^2).
TangentField random_tangent_field(Eigen::Index n, RandomStream& stream, int kmax);

}  // namespace curvemetrics
