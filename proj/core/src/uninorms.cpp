#include "bsa/uninorms.hpp"

#include <algorithm>
#include <cmath>

#include "bsa/errors.hpp"

namespace bsa {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
// 0.3 + 0.7 is not exactly 1 in doubles; antidiagonal membership for u_max
// is decided up to this slack.
constexpr double kAntidiagonalTol = 1e-12;
}  // namespace

double UninormGenerator::invert(double y) const {
  if (std::isnan(y)) throw InvalidNumber("UninormGenerator::invert: NaN");
  if (closed_inverse) return std::clamp(closed_inverse(y), 0.0, 1.0);
  if (y == -kInf) return 0.0;
  if (y == kInf) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (forward(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

UninormGenerator logit_generator(InfinityMode mode) {
  return {[](double x) { return std::log(x / (1.0 - x)); },
          [](double y) { return 1.0 / (1.0 + std::exp(-y)); }, 0.5, mode, "logit"};
}

Uninorm representable_from_generator(const UninormGenerator& gen) {
  if (!(gen.neutral > 0.0 && gen.neutral < 1.0))
    throw GeneratorShapeError("representable_from_generator: neutral must lie in (0,1)");
  if (std::abs(gen.forward(gen.neutral)) > 1e-12)
    throw GeneratorShapeError("representable_from_generator: u(e) must be 0");
  UninormGenerator u = gen;
  return {[u](double x, double y) { return u.invert(ext_add(u.forward(x), u.forward(y), u.mode)); },
          gen.neutral, gen, gen.mode, "representable<" + gen.name + ">"};
}

Uninorm from_pseudo_addition(const PseudoAddition& p) {
  if (!p.generator)
    throw NotStrict("from_pseudo_addition: pseudo-addition must come from a strict conorm");
  const SymmetricGenerator g = *p.generator;
  const InfinityMode mode = p.mode();
  UninormGenerator u{
      [g](double x) { return g(2.0 * x - 1.0); },
      [g](double y) { return 0.5 * g.invert(y) + 0.5; }, 0.5, mode, "rescaled"};
  PseudoAddition add = p;
  return {[add](double z, double t) {
            return 0.5 * pseudo_add(add, 2.0 * z - 1.0, 2.0 * t - 1.0) + 0.5;
          },
          0.5, u, mode, "uninorm<" + p.conorm.label + ">"};
}

std::function<double(double, double)> to_pseudo_addition(const Uninorm& U) {
  if (U.neutral != 0.5)
    throw WrongNeutral("to_pseudo_addition: neutral element must be 1/2");
  auto eval = U.eval;
  return [eval](double x, double y) {
    return 2.0 * eval(0.5 * x + 0.5, 0.5 * y + 0.5) - 1.0;
  };
}

UninormDecomposition decompose_uninorm(const Uninorm& U) {
  const double e = U.neutral;
  auto eval = U.eval;
  TriangularNorm T{[eval, e](double x, double y) { return eval(e * x, e * y) / e; },
                   std::nullopt, "T<" + U.label + ">"};
  TriangularConorm S{
      [eval, e](double x, double y) {
        return (eval(e + (1.0 - e) * x, e + (1.0 - e) * y) - e) / (1.0 - e);
      },
      std::nullopt, "S<" + U.label + ">"};
  if (U.generator) {
    const UninormGenerator u = *U.generator;
    T.generator = AdditiveGenerator{
        [u, e](double x) { return -u.forward(e * x); },
        u.closed_inverse
            ? std::function<double(double)>([u, e](double y) { return u.closed_inverse(-y) / e; })
            : std::function<double(double)>(),
        GeneratorDirection::decreasing, -u.forward(0.0), "t<" + u.name + ">"};
    S.generator = AdditiveGenerator{
        [u, e](double x) { return u.forward(e + (1.0 - e) * x); },
        u.closed_inverse ? std::function<double(double)>([u, e](double y) {
          return (u.closed_inverse(y) - e) / (1.0 - e);
        })
                         : std::function<double(double)>(),
        GeneratorDirection::increasing, u.forward(1.0), "s<" + u.name + ">"};
  }
  return {T, S};
}

Uninorm compose_uninorm(const TriangularNorm& T, const TriangularConorm& S, double e,
                        SideFill fill) {
  if (!(e > 0.0 && e < 1.0))
    throw GeneratorShapeError("compose_uninorm: neutral must lie in (0,1)");
  auto t = T.eval;
  auto s = S.eval;
  return {[t, s, e, fill](double x, double y) {
            if (x <= e && y <= e) return e * t(x / e, y / e);
            if (x >= e && y >= e)
              return e + (1.0 - e) * s((x - e) / (1.0 - e), (y - e) / (1.0 - e));
            return fill == SideFill::min ? std::min(x, y) : std::max(x, y);
          },
          e, std::nullopt, InfinityMode::disjunctive,
          "compose<" + T.label + "," + S.label + ">"};
}

double u_max(double z, double t) {
  const double s = z + t;
  if (std::abs(s - 1.0) <= kAntidiagonalTol) return 0.5;
  return s < 1.0 ? std::min(z, t) : std::max(z, t);
}

UnitValue u_max(UnitValue z, UnitValue t) { return UnitValue(u_max(z.value(), t.value())); }

UnitValue strong_negation(const UninormGenerator& gen, UnitValue x) {
  const double v = x.value();
  if (v == 0.0 || v == 1.0)
    throw BoundaryInput("strong_negation: endpoints break U(x,N(x)) = e");
  return UnitValue(gen.invert(-gen.forward(v)));
}

}  // namespace bsa
