#include "bsa/differences.hpp"

#include <algorithm>
#include <cmath>

#include "bsa/errors.hpp"

namespace bsa {

DifferenceOperator make_difference(const TriangularConorm& S) {
  DifferenceOperator d;
  d.conorm = S;
  if (S.label == "max")
    d.strategy = DifferenceStrategy::max_closed_form;
  else if (S.generator)
    d.strategy = DifferenceStrategy::generator_formula;
  else
    d.strategy = DifferenceStrategy::inf_bisection;
  return d;
}

DifferenceOperator make_ordinal_difference(const OrdinalSumSpec& spec) {
  DifferenceOperator d;
  d.conorm = ordinal_sum_upper(spec);
  d.strategy = DifferenceStrategy::ordinal_sum_formula;
  d.ordinal = spec;
  return d;
}

double s_difference(const DifferenceOperator& d, double x, double y) {
  if (x == y) return 0.0;  // diagonal rule takes precedence in every strategy
  switch (d.strategy) {
    case DifferenceStrategy::generator_formula: {
      if (!d.conorm.generator)
        throw MissingGenerator("s_difference: generator_formula strategy without generator");
      const AdditiveGenerator& s = *d.conorm.generator;
      return s.invert(std::max(0.0, s.forward(x) - s.forward(y)));
    }
    case DifferenceStrategy::max_closed_form:
      return x > y ? x : 0.0;
    case DifferenceStrategy::ordinal_sum_formula: {
      if (!d.ordinal)
        throw MissingGenerator("s_difference: ordinal_sum_formula strategy without spec");
      if (x >= y) return ordinal_sum_difference(*d.ordinal, x, y);
      return 0.0;  // inf over an inequality already satisfied at z=0
    }
    case DifferenceStrategy::inf_bisection:
      return s_difference_inf_oracle(d.conorm, x, y);
  }
  throw PreconditionViolated("s_difference: unknown strategy");
}

UnitValue s_difference(const DifferenceOperator& d, UnitValue x, UnitValue y) {
  return UnitValue(s_difference(d, x.value(), y.value()));
}

double s_difference_inf_oracle(const TriangularConorm& S, double x, double y) {
  if (S.eval(y, 0.0) >= x) return 0.0;
  // invariant: S(y,lo) < x <= S(y,hi)
  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (S.eval(y, mid) >= x)
      hi = mid;
    else
      lo = mid;
  }
  // report the left endpoint: the inf is in [lo, hi] and Eq-inf semantics
  // must not be over-reported
  return lo;
}

double symmetric_difference(const DifferenceOperator& d, double x, double y) {
  if (x == y) return 0.0;
  if (x > y) return s_difference(d, x, y);
  return -s_difference(d, y, x);
}

BipolarValue symmetric_difference(const DifferenceOperator& d, UnitValue x, UnitValue y) {
  return BipolarValue(symmetric_difference(d, x.value(), y.value()));
}

double ordinal_sum_difference(const OrdinalSumSpec& spec, double x, double y) {
  if (x < y) throw PreconditionViolated("ordinal_sum_difference: requires x >= y");
  if (x == y) return 0.0;
  const double a = spec.corner;
  if (x >= a && y >= a) {
    const AdditiveGenerator& s1 = spec.upper_generator;
    const double u = s1.forward((x - a) / (1.0 - a));
    const double v = s1.forward((y - a) / (1.0 - a));
    return (1.0 - a) * s1.invert(u - v) + a;
  }
  // outside the upper square the conorm is max, so the difference is the
  // max-difference: x when x > y
  return x;
}

}  // namespace bsa
