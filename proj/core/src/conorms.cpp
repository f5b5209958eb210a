#include "bsa/conorms.hpp"

#include <algorithm>
#include <cmath>

#include "bsa/errors.hpp"

namespace bsa {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointTol = 1e-12;
}  // namespace

TriangularConorm conorm_max() {
  return {[](double x, double y) { return std::max(x, y); }, std::nullopt, "max"};
}

TriangularConorm conorm_prob_sum() {
  AdditiveGenerator s{
      [](double x) { return -std::log1p(-x); },
      [](double y) { return -std::expm1(-y); },
      GeneratorDirection::increasing, kInf, "prob_sum"};
  return {[](double x, double y) {
            // the closed form can overshoot 1 by an ulp near the corner
            if (x == 1.0 || y == 1.0) return 1.0;
            return std::min(1.0, x + y - x * y);
          },
          s, "prob_sum"};
}

TriangularConorm conorm_lukasiewicz() {
  AdditiveGenerator s{
      [](double x) { return x; },
      [](double y) { return y; },
      GeneratorDirection::increasing, 1.0, "lukasiewicz_conorm"};
  return {[](double x, double y) { return std::min(1.0, x + y); }, s, "lukasiewicz_conorm"};
}

TriangularNorm norm_min() {
  return {[](double x, double y) { return std::min(x, y); }, std::nullopt, "min"};
}

TriangularNorm norm_product() {
  AdditiveGenerator t{
      [](double x) { return -std::log(x); },
      [](double y) { return std::exp(-y); },
      GeneratorDirection::decreasing, kInf, "product"};
  return {[](double x, double y) { return x * y; }, t, "product"};
}

TriangularNorm norm_lukasiewicz() {
  AdditiveGenerator t{
      [](double x) { return 1.0 - x; },
      [](double y) { return 1.0 - y; },
      GeneratorDirection::decreasing, 1.0, "lukasiewicz_norm"};
  return {[](double x, double y) { return std::max(0.0, x + y - 1.0); }, t, "lukasiewicz_norm"};
}

std::variant<TriangularConorm, TriangularNorm> builtin(const std::string& name) {
  if (name == "max") return conorm_max();
  if (name == "prob_sum") return conorm_prob_sum();
  if (name == "lukasiewicz_conorm") return conorm_lukasiewicz();
  if (name == "min") return norm_min();
  if (name == "product") return norm_product();
  if (name == "lukasiewicz_norm") return norm_lukasiewicz();
  throw UnknownFamily("builtin: unknown family '" + name + "'");
}

TriangularConorm conorm_from_generator(const AdditiveGenerator& s) {
  if (s.direction != GeneratorDirection::increasing)
    throw GeneratorShapeError("conorm_from_generator: generator must be increasing");
  if (std::abs(s.forward(0.0)) > kEndpointTol)
    throw GeneratorShapeError("conorm_from_generator: s(0) must be 0");
  AdditiveGenerator gen = s;
  return {[gen](double x, double y) {
            return gen.invert(std::min(gen.endpoint_value, gen.forward(x) + gen.forward(y)));
          },
          s, s.name.empty() ? std::string("conorm<gen>") : "conorm<" + s.name + ">"};
}

TriangularNorm norm_from_generator(const AdditiveGenerator& t) {
  if (t.direction != GeneratorDirection::decreasing)
    throw GeneratorShapeError("norm_from_generator: generator must be decreasing");
  if (std::abs(t.forward(1.0)) > kEndpointTol)
    throw GeneratorShapeError("norm_from_generator: t(1) must be 0");
  AdditiveGenerator gen = t;
  return {[gen](double x, double y) {
            return gen.invert(std::min(gen.endpoint_value, gen.forward(x) + gen.forward(y)));
          },
          t, t.name.empty() ? std::string("norm<gen>") : "norm<" + t.name + ">"};
}

TriangularConorm dual_of(const TriangularNorm& T) {
  std::optional<AdditiveGenerator> s;
  if (T.generator) {
    const AdditiveGenerator t = *T.generator;
    s = AdditiveGenerator{
        [t](double x) { return t.forward(1.0 - x); },
        t.closed_inverse ? std::function<double(double)>(
                               [t](double y) { return 1.0 - t.closed_inverse(y); })
                         : std::function<double(double)>(),
        GeneratorDirection::increasing, t.endpoint_value, "dual(" + t.name + ")"};
  }
  auto te = T.eval;
  return {[te](double x, double y) { return 1.0 - te(1.0 - x, 1.0 - y); }, s,
          "dual(" + T.label + ")"};
}

TriangularNorm dual_of(const TriangularConorm& S) {
  std::optional<AdditiveGenerator> t;
  if (S.generator) {
    const AdditiveGenerator s = *S.generator;
    t = AdditiveGenerator{
        [s](double x) { return s.forward(1.0 - x); },
        s.closed_inverse ? std::function<double(double)>(
                               [s](double y) { return 1.0 - s.closed_inverse(y); })
                         : std::function<double(double)>(),
        GeneratorDirection::decreasing, s.endpoint_value, "dual(" + s.name + ")"};
  }
  auto se = S.eval;
  return {[se](double x, double y) { return 1.0 - se(1.0 - x, 1.0 - y); }, t,
          "dual(" + S.label + ")"};
}

namespace {

// Shared sampled checks; `conorm` flips the orientation of the diagonal
// and strictness tests.
ClassificationTag classify_impl(const std::function<double(double, double)>& f,
                                const std::optional<AdditiveGenerator>& gen,
                                const SamplingPlan& plan, bool conorm) {
  ClassificationTag tag;
  const int n = std::max(plan.grid_resolution, 9);
  const auto xs = linspace(0.0, 1.0, n);
  const double tol = plan.tolerance_value;

  bool idem = true, archi = true, strict = true, cont = true;
  for (int i = 1; i + 1 < n; ++i) {
    const double x = xs[static_cast<std::size_t>(i)];
    const double d = f(x, x);
    if (std::abs(d - x) > tol) idem = false;
    if (conorm ? !(d > x) : !(d < x)) archi = false;
  }
  // strict monotonicity in the second argument, sampled pairs
  for (int i = 0; i < n; ++i) {
    const double x = xs[static_cast<std::size_t>(i)];
    if (conorm ? x >= 1.0 : x <= 0.0) continue;
    for (int j = 0; j + 1 < n; ++j) {
      const double a = f(x, xs[static_cast<std::size_t>(j)]);
      const double b = f(x, xs[static_cast<std::size_t>(j + 1)]);
      if (!(a < b)) {
        strict = false;
        break;
      }
    }
    if (!strict) break;
  }
  // continuity on samples: jumps bounded by a grid-step Lipschitz budget
  const double h = 1.0 / static_cast<double>(n - 1);
  const double jump_budget = 10.0 * h + 1e-9;
  for (int i = 0; i + 1 < n && cont; ++i)
    for (int j = 0; j < n; ++j) {
      const double a = f(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
      const double b = f(xs[static_cast<std::size_t>(i + 1)], xs[static_cast<std::size_t>(j)]);
      if (std::abs(b - a) > jump_budget) {
        cont = false;
        break;
      }
    }

  if (gen) {
    // declared endpoint decides strict vs nilpotent for generated families
    strict = gen->strict();
    archi = true;
  }
  tag.strictly_monotone = strict;
  tag.idempotent = idem;
  tag.archimedean = archi || strict;  // strict => Archimedean
  tag.continuous_on_samples = cont;
  tag.nilpotent = tag.archimedean && cont && !strict;
  return tag;
}

}  // namespace

ClassificationTag classify(const TriangularConorm& S, const SamplingPlan& plan) {
  return classify_impl(S.eval, S.generator, plan, true);
}

ClassificationTag classify(const TriangularNorm& T, const SamplingPlan& plan) {
  return classify_impl(T.eval, T.generator, plan, false);
}

TriangularConorm ordinal_sum_upper(const OrdinalSumSpec& spec) {
  if (!(spec.corner > 0.0 && spec.corner < 1.0))
    throw GeneratorShapeError("ordinal_sum_upper: corner must lie in (0,1)");
  if (!spec.upper_generator.strict())
    throw GeneratorShapeError("ordinal_sum_upper: upper block must be strict");
  const double a = spec.corner;
  auto upper = spec.upper.eval;
  return {[a, upper](double x, double y) {
            if (x >= a && y >= a)
              return (1.0 - a) * upper((x - a) / (1.0 - a), (y - a) / (1.0 - a)) + a;
            return std::max(x, y);
          },
          std::nullopt, "osum"};
}

TriangularConorm ordinal_sum_two_block(double corner, const TriangularConorm& upper,
                                       const TriangularConorm& lower) {
  if (!(corner > 0.0 && corner < 1.0))
    throw GeneratorShapeError("ordinal_sum_two_block: corner must lie in (0,1)");
  if (!upper.generator || !upper.generator->strict())
    throw GeneratorShapeError("ordinal_sum_two_block: upper block must be strict");
  if (!lower.generator || !lower.generator->strict())
    throw GeneratorShapeError("ordinal_sum_two_block: lower block must be strict");
  const double a = corner;
  auto up = upper.eval;
  auto low = lower.eval;
  return {[a, up, low](double x, double y) {
            if (x >= a && y >= a)
              return (1.0 - a) * up((x - a) / (1.0 - a), (y - a) / (1.0 - a)) + a;
            if (x <= a && y <= a) return a * low(x / a, y / a);
            return std::max(x, y);
          },
          std::nullopt, "osum2"};
}

UnitValue generator_pseudo_inverse(const AdditiveGenerator& gen, ExtendedReal y) {
  return UnitValue(gen.invert(y.value()));
}

OrdinalSumSpec make_ordinal_spec(double corner, const TriangularConorm& upper) {
  if (!upper.generator)
    throw MissingGenerator("make_ordinal_spec: upper conorm carries no generator");
  return OrdinalSumSpec{corner, upper, *upper.generator};
}

}  // namespace bsa
