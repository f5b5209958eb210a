#ifndef BSA_CONORMS_HPP
#define BSA_CONORMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "bsa/generator.hpp"
#include "bsa/sampling.hpp"
#include "bsa/scale.hpp"

namespace bsa {

/// Sample-based verdicts; none of these flags is a proof.
struct ClassificationTag {
  bool strictly_monotone = false;
  bool archimedean = false;
  bool nilpotent = false;
  bool idempotent = false;
  bool continuous_on_samples = false;
};

struct TriangularConorm {
  std::function<double(double, double)> eval;
  std::optional<AdditiveGenerator> generator;
  std::string label;

  double operator()(double x, double y) const { return eval(x, y); }
  UnitValue operator()(UnitValue x, UnitValue y) const {
    return UnitValue(eval(x.value(), y.value()));
  }
};

struct TriangularNorm {
  std::function<double(double, double)> eval;
  std::optional<AdditiveGenerator> generator;
  std::string label;

  double operator()(double x, double y) const { return eval(x, y); }
  UnitValue operator()(UnitValue x, UnitValue y) const {
    return UnitValue(eval(x.value(), y.value()));
  }
};

/// One strict block on [corner,1]^2, maximum elsewhere.
struct OrdinalSumSpec {
  double corner = 0.5;  // the threshold a, 0 < a < 1
  TriangularConorm upper;
  AdditiveGenerator upper_generator;
};

// --- built-in families ----------------------------------------------------

TriangularConorm conorm_max();
TriangularConorm conorm_prob_sum();
TriangularConorm conorm_lukasiewicz();
TriangularNorm norm_min();
TriangularNorm norm_product();
TriangularNorm norm_lukasiewicz();

/// Lookup by family name: max | prob_sum | lukasiewicz_conorm | min |
/// product | lukasiewicz_norm. Throws UnknownFamily.
std::variant<TriangularConorm, TriangularNorm> builtin(const std::string& name);

// --- construction ---------------------------------------------------------

/// S(x,y) = s^-1( s(1) ^ (s(x)+s(y)) ) for increasing s with s(0)=0.
TriangularConorm conorm_from_generator(const AdditiveGenerator& s);

/// T(x,y) = t^-1( t(0) ^ (t(x)+t(y)) ) for decreasing t with t(1)=0.
TriangularNorm norm_from_generator(const AdditiveGenerator& t);

TriangularConorm dual_of(const TriangularNorm& T);
TriangularNorm dual_of(const TriangularConorm& S);

ClassificationTag classify(const TriangularConorm& S, const SamplingPlan& plan);
ClassificationTag classify(const TriangularNorm& T, const SamplingPlan& plan);

/// The one-block ordinal sum of Eq-"rescaled upper block, maximum
/// elsewhere" shape; a genuine t-conorm.
TriangularConorm ordinal_sum_upper(const OrdinalSumSpec& spec);

/// Two strict blocks: the usual rescaled block on [corner,1]^2 plus a second
/// strict conorm rescaled onto [0,corner]^2, maximum between them. Still a
/// t-conorm; the associativity defect of its symmetric extension is the
/// same as for the one-block sum.
TriangularConorm ordinal_sum_two_block(double corner, const TriangularConorm& upper,
                                       const TriangularConorm& lower);

/// Numeric inversion service (clamping pseudo-inverse).
UnitValue generator_pseudo_inverse(const AdditiveGenerator& gen, ExtendedReal y);

/// Helper used by several ordinal-sum specs.
OrdinalSumSpec make_ordinal_spec(double corner, const TriangularConorm& upper);

}  // namespace bsa

#endif
