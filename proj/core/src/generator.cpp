#include "bsa/generator.hpp"

#include <algorithm>

#include "bsa/errors.hpp"

namespace bsa {

namespace {

// Finds x in [0,1] with f(x) = y for strictly increasing f, to argument
// tolerance kBisectionTolerance. Caller guarantees f(0) <= y <= f(1).
double bisect_increasing(const std::function<double(double)>& f, double y) {
  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double AdditiveGenerator::invert(double y) const {
  if (std::isnan(y)) throw InvalidNumber("AdditiveGenerator::invert: NaN");
  if (direction == GeneratorDirection::increasing) {
    if (y <= 0.0) return 0.0;
    if (y >= endpoint_value) return 1.0;
    if (closed_inverse) return std::clamp(closed_inverse(y), 0.0, 1.0);
    return bisect_increasing(forward, y);
  }
  // decreasing: forward(1) = 0, forward(0) = endpoint_value
  if (y <= 0.0) return 1.0;
  if (y >= endpoint_value) return 0.0;
  if (closed_inverse) return std::clamp(closed_inverse(y), 0.0, 1.0);
  return bisect_increasing([this](double x) { return -forward(x); }, -y);
}

AdditiveGenerator scaled_generator(const AdditiveGenerator& gen, double c) {
  if (!(c > 0.0)) throw GeneratorShapeError("scaled_generator: constant must be positive");
  AdditiveGenerator out = gen;
  auto base_forward = gen.forward;
  out.forward = [base_forward, c](double x) { return c * base_forward(x); };
  if (gen.closed_inverse) {
    auto base_inverse = gen.closed_inverse;
    out.closed_inverse = [base_inverse, c](double y) { return base_inverse(y / c); };
  }
  out.endpoint_value = c * gen.endpoint_value;
  out.name = gen.name + "*scaled";
  return out;
}

}  // namespace bsa
