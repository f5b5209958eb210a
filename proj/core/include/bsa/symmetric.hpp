#ifndef BSA_SYMMETRIC_HPP
#define BSA_SYMMETRIC_HPP

#include <span>
#include <variant>

#include "bsa/differences.hpp"

namespace bsa {

/// Odd extension of an additive generator to [-1,1]; also the isomorphism
/// witness onto the extended reals.
struct SymmetricGenerator {
  AdditiveGenerator base;
  /// Where the symmetrized generator is injective and numerically
  /// trustworthy (away from saturation); empty means all of [-1,1].
  /// Ordinal sums only generate on |x| > a together with 0.
  std::function<bool(double)> valid_domain;

  double operator()(double x) const {
    if (x == 0.0) return 0.0;
    return x > 0.0 ? base.forward(x) : -base.forward(-x);
  }
  double invert(double g) const {
    if (g == 0.0) return 0.0;
    return g > 0.0 ? base.invert(g) : -base.invert(-g);
  }
  bool contains(double x) const { return !valid_domain || valid_domain(x); }
};

enum class BoundaryConvention { plus_one, minus_one };

/// The symmetric pseudo-addition built from a t-conorm: the conorm on the
/// positive and negative quadrants, the symmetrized S-difference on mixed
/// signs, and a fixed convention for 1 (+) (-1).
struct PseudoAddition {
  TriangularConorm conorm;
  DifferenceOperator difference;
  BoundaryConvention boundary = BoundaryConvention::plus_one;
  std::optional<SymmetricGenerator> generator;  // present iff conorm strict

  InfinityMode mode() const noexcept {
    return boundary == BoundaryConvention::plus_one ? InfinityMode::disjunctive
                                                    : InfinityMode::conjunctive;
  }
};

struct PseudoMultiplication {
  TriangularNorm norm;
};

PseudoAddition make_pseudo_addition(const TriangularConorm& S,
                                    BoundaryConvention boundary = BoundaryConvention::plus_one);
PseudoAddition make_ordinal_pseudo_addition(const OrdinalSumSpec& spec,
                                            BoundaryConvention boundary = BoundaryConvention::plus_one);

/// Rule-based evaluation of x (+) y on [-1,1].
double pseudo_add(const PseudoAddition& p, double x, double y);
BipolarValue pseudo_add(const PseudoAddition& p, BipolarValue x, BipolarValue y);

/// Generator fast path g^-1(g(x)+g(y)); requires a strict conorm.
double pseudo_add_via_generator(const PseudoAddition& p, double x, double y);

/// sign(x*y) * T(|x|, |y|).
double pseudo_mul(const PseudoMultiplication& m, double x, double y);
BipolarValue pseudo_mul(const PseudoMultiplication& m, BipolarValue x, BipolarValue y);

/// Symmetric maximum: 0 on opposite pairs, otherwise the larger-magnitude
/// argument with its own sign.
double sym_max(double a, double b);
BipolarValue sym_max(BipolarValue a, BipolarValue b);

/// Symmetric minimum: min of magnitudes with the product sign rule.
double sym_min(double a, double b);
BipolarValue sym_min(BipolarValue a, BipolarValue b);

/// Returned when the n-ary symmetric maximum depends on bracketing; lo/hi
/// are the extremal parenthesization values.
struct UndefinedAggregate {
  double lo = 0.0;
  double hi = 0.0;
};

using FoldResult = std::variant<double, UndefinedAggregate>;

/// Left-fold of sym_max when all parenthesizations agree (max != -min);
/// UndefinedAggregate otherwise. Exhaustive bracketing bounds are computed
/// for n <= 7 in the undefined case.
FoldResult sym_max_fold(std::span<const double> values);

}  // namespace bsa

#endif
