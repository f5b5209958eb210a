#ifndef BSA_GENERATOR_HPP
#define BSA_GENERATOR_HPP

#include <cmath>
#include <functional>
#include <string>

#include "bsa/scale.hpp"

namespace bsa {

enum class GeneratorDirection { increasing, decreasing };

/// Argument tolerance of the bisection fallback in AdditiveGenerator::invert.
inline constexpr double kBisectionTolerance = 1e-12;

/// Additive generator of a t-conorm (increasing, s(0)=0) or of a t-norm
/// (decreasing, t(1)=0). The value at the non-fixed endpoint must be
/// declared, not probed; +inf there marks a strict operator.
///
/// The same shape is reused for the symmetrized generator g and, shifted,
/// for uninorm generators u.
struct AdditiveGenerator {
  std::function<double(double)> forward;
  std::function<double(double)> closed_inverse;  // may be empty -> bisection
  GeneratorDirection direction = GeneratorDirection::increasing;
  double endpoint_value = std::numeric_limits<double>::infinity();
  std::string name;

  double operator()(double x) const { return forward(x); }

  bool strict() const noexcept { return std::isinf(endpoint_value); }

  /// Pseudo-inverse: clamps y to the generator's range, then applies the
  /// closed-form inverse when available, bisection to 1e-12 otherwise.
  double invert(double y) const;
};

/// The generator rescaled by c > 0; represents the same operator.
AdditiveGenerator scaled_generator(const AdditiveGenerator& gen, double c);

}  // namespace bsa

#endif
