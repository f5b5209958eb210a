#include "bsa/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "bsa/errors.hpp"

namespace bsa {

PseudoAddition make_pseudo_addition(const TriangularConorm& S, BoundaryConvention boundary) {
  PseudoAddition p;
  p.conorm = S;
  p.difference = make_difference(S);
  p.boundary = boundary;
  if (S.generator && S.generator->strict())
    p.generator = SymmetricGenerator{
        *S.generator,
        // trust generator-space comparisons only away from saturation
        [](double x) { return std::abs(x) < 1.0 - kSaturationMargin; }};
  return p;
}

PseudoAddition make_ordinal_pseudo_addition(const OrdinalSumSpec& spec,
                                            BoundaryConvention boundary) {
  PseudoAddition p;
  p.conorm = ordinal_sum_upper(spec);
  p.difference = make_ordinal_difference(spec);
  p.boundary = boundary;
  // partial generator: g(x) = s1((x-a)/(1-a)) on ]a,1], odd, g(0)=0;
  // injective only away from the corner value a where g collides with 0
  const double a = spec.corner;
  const AdditiveGenerator s1 = spec.upper_generator;
  AdditiveGenerator base{
      [a, s1](double x) { return s1.forward((x - a) / (1.0 - a)); },
      [a, s1](double y) { return (1.0 - a) * s1.invert(y) + a; },
      GeneratorDirection::increasing, s1.endpoint_value, "osum"};
  p.generator = SymmetricGenerator{
      base, [a](double x) {
        const double m = std::abs(x);
        return (x == 0.0 || m > a) && m < 1.0 - (1.0 - a) * kSaturationMargin;
      }};
  return p;
}

double pseudo_add(const PseudoAddition& p, double x, double y) {
  if (x >= 0.0 && y >= 0.0) return p.conorm.eval(x, y);
  if (x <= 0.0 && y <= 0.0) {
    const double r = p.conorm.eval(-x, -y);
    return r == 0.0 ? 0.0 : -r;
  }
  // mixed signs; commutativity puts the positive argument first
  const double pos = x > 0.0 ? x : y;
  const double neg = x > 0.0 ? y : x;
  if (pos == 1.0 && neg == -1.0)
    return p.boundary == BoundaryConvention::plus_one ? 1.0 : -1.0;
  return symmetric_difference(p.difference, pos, -neg);
}

BipolarValue pseudo_add(const PseudoAddition& p, BipolarValue x, BipolarValue y) {
  return BipolarValue(pseudo_add(p, x.value(), y.value()));
}

double pseudo_add_via_generator(const PseudoAddition& p, double x, double y) {
  if (!p.generator)
    throw MissingGenerator("pseudo_add_via_generator: conorm has no strict generator");
  const SymmetricGenerator& g = *p.generator;
  return g.invert(ext_add(g(x), g(y), p.mode()));
}

double pseudo_mul(const PseudoMultiplication& m, double x, double y) {
  const int s = sign_int(x) * sign_int(y);
  if (s == 0) return 0.0;
  const double t = m.norm.eval(std::abs(x), std::abs(y));
  return s > 0 ? t : (t == 0.0 ? 0.0 : -t);
}

BipolarValue pseudo_mul(const PseudoMultiplication& m, BipolarValue x, BipolarValue y) {
  return BipolarValue(pseudo_mul(m, x.value(), y.value()));
}

double sym_max(double a, double b) {
  if (b == -a) return 0.0;
  const double m = std::max(std::abs(a), std::abs(b));
  const bool attained_by_positive = (a == m) || (b == m);
  return attained_by_positive ? m : -m;
}

BipolarValue sym_max(BipolarValue a, BipolarValue b) {
  return BipolarValue(sym_max(a.value(), b.value()));
}

double sym_min(double a, double b) {
  const int s = sign_int(a) * sign_int(b);
  const double m = std::min(std::abs(a), std::abs(b));
  if (m == 0.0) return 0.0;
  return s < 0 ? -m : m;
}

BipolarValue sym_min(BipolarValue a, BipolarValue b) {
  return BipolarValue(sym_min(a.value(), b.value()));
}

namespace {

// All parenthesization values of values[i..j] under sym_max, deduplicated.
using Span = std::pair<int, int>;
const std::vector<double>& bracketings(std::map<Span, std::vector<double>>& memo,
                                       std::span<const double> values, int i, int j) {
  const Span key{i, j};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<double> out;
  if (i == j) {
    out.push_back(values[static_cast<std::size_t>(i)]);
  } else {
    for (int k = i; k < j; ++k) {
      const auto& left = bracketings(memo, values, i, k);
      const auto& right = bracketings(memo, values, k + 1, j);
      for (double l : left)
        for (double r : right) {
          const double v = sym_max(l, r);
          if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

FoldResult sym_max_fold(std::span<const double> values) {
  if (values.empty()) throw EmptyList("sym_max_fold: empty input");
  const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
  if (*mx_it != -*mn_it) {
    double acc = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) acc = sym_max(acc, values[i]);
    return acc;
  }
  if (values.size() == 1) return values[0];  // the single value is 0 here
  if (values.size() > 7)
    throw SizeLimit("sym_max_fold: bracketing enumeration limited to n <= 7");
  std::map<Span, std::vector<double>> memo;
  const auto& all = bracketings(memo, values, 0, static_cast<int>(values.size()) - 1);
  const auto [lo, hi] = std::minmax_element(all.begin(), all.end());
  return UndefinedAggregate{*lo, *hi};
}

}  // namespace bsa
