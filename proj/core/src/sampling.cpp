#include "bsa/sampling.hpp"

namespace bsa {

std::vector<double> SamplingPlan::default_corner_set() {
  return {-1.0, -1.0 + kCornerEpsilon, -0.5, 0.0, 0.5, 1.0 - kCornerEpsilon, 1.0};
}

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double sample_unit(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t h = mix64(mix64(seed) ^ index);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double sample_bipolar(std::uint64_t seed, std::uint64_t index) {
  return 2.0 * sample_unit(seed, index) - 1.0;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  if (count <= 0) return out;
  if (count == 1) {
    out.push_back(0.5 * (lo + hi));
    return out;
  }
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

}  // namespace bsa
