#ifndef BSA_SAMPLING_HPP
#define BSA_SAMPLING_HPP

#include <cstdint>
#include <vector>

namespace bsa {

/// Distinguished near-saturation offset used in the default corner set.
inline constexpr double kCornerEpsilon = 1e-3;

/// Width of the shell excluded at +-1 when a law is audited over the open
/// interval.
inline constexpr double kOpenIntervalShell = 1e-12;

/// Results closer than this to a carrier endpoint are treated as saturated:
/// the generator image explodes there and generator-space comparison stops
/// being numerically meaningful, so the engine falls back to value space.
inline constexpr double kSaturationMargin = 1e-3;

/// Deterministic sampling schedule for property audits. Grid, random and
/// corner samples are all reproducible functions of the fields.
struct SamplingPlan {
  int grid_resolution = 21;
  long long random_count = 1000;
  std::uint64_t seed = 0x5eedULL;
  std::vector<double> corner_set = default_corner_set();
  double tolerance_value = 1e-9;
  double tolerance_generator = 1e-9;

  static std::vector<double> default_corner_set();
};

/// Counter-based generator: a 64-bit mix of (seed, index), platform stable.
std::uint64_t mix64(std::uint64_t x);

/// Uniform double in [0, 1) from (seed, index).
double sample_unit(std::uint64_t seed, std::uint64_t index);

/// Uniform double in (-1, 1) from (seed, index).
double sample_bipolar(std::uint64_t seed, std::uint64_t index);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace bsa

#endif
